use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use super::{fmt_f64, IoError};

/// Direction of a check: `Upper` passes when `measured <= tolerance`,
/// `Lower` when `measured > tolerance`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Bound {
    Upper,
    Lower,
}

fn fixed<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if !x.is_finite() {
        return s.serialize_none();
    }
    RawValue::from_string(fmt_f64(*x))
        .map_err(serde::ser::Error::custom)?
        .serialize(s)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    #[serde(serialize_with = "fixed")]
    pub measured: f64,
    #[serde(serialize_with = "fixed")]
    pub tolerance: f64,
    pub bound: Bound,
    pub pass: bool,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
struct Constant {
    name: String,
    #[serde(serialize_with = "fixed")]
    value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
}

/// Ordered check records plus the computed constants they refer to.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerificationReport {
    records: Vec<CheckRecord>,
    constants: Vec<Constant>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(
        &mut self,
        name: &str,
        measured: f64,
        tolerance: f64,
        bound: Bound,
        provenance: &str,
    ) -> bool {
        let pass = match bound {
            Bound::Upper => measured <= tolerance,
            Bound::Lower => measured > tolerance,
        };
        self.records.push(CheckRecord {
            name: name.to_owned(),
            measured,
            tolerance,
            bound,
            pass,
            provenance: provenance.to_owned(),
        });
        pass
    }

    pub fn constant(&mut self, name: &str, value: f64) {
        self.constants.push(Constant {
            name: name.to_owned(),
            value,
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.records.extend(other.records);
        self.constants.extend(other.constants);
    }

    pub fn records(&self) -> &[CheckRecord] {
        &self.records
    }

    pub fn record(&self, name: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn constant_value(&self, name: &str) -> Option<f64> {
        self.constants
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.value)
    }

    pub fn summary(&self) -> Summary {
        let passed = self.records.iter().filter(|r| r.pass).count();
        let total = self.records.len();
        Summary {
            total,
            passed,
            failed: total - passed,
            pass: passed == total,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary().pass
    }

    pub fn to_json_bytes(&self) -> Result<Vec<u8>, IoError> {
        #[derive(Serialize)]
        struct Doc<'a> {
            records: &'a [CheckRecord],
            constants: &'a [Constant],
            summary: Summary,
        }
        let doc = Doc {
            records: &self.records,
            constants: &self.constants,
            summary: self.summary(),
        };
        let mut out = serde_json::to_vec_pretty(&doc)?;
        out.push(b'\n');
        Ok(out)
    }

    pub fn to_csv_bytes(&self) -> Result<Vec<u8>, IoError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "name",
            "measured",
            "tolerance",
            "bound",
            "pass",
            "provenance",
        ])?;
        for r in &self.records {
            let bound = match r.bound {
                Bound::Upper => "upper",
                Bound::Lower => "lower",
            };
            w.write_record([
                r.name.as_str(),
                &fmt_f64(r.measured),
                &fmt_f64(r.tolerance),
                bound,
                if r.pass { "true" } else { "false" },
                r.provenance.as_str(),
            ])?;
        }
        w.into_inner()
            .map_err(|e| IoError::Csv(e.into_error().into()))
    }
}
