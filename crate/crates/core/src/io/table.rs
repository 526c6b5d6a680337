use super::{fmt_f64, IoError};

/// A numeric table with named columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) -> Result<(), IoError> {
        if row.len() != self.header.len() {
            return Err(IoError::Grid(format!(
                "row has {} fields, header has {}",
                row.len(),
                self.header.len()
            )));
        }
        self.rows.push(row);
        Ok(())
    }
}

pub fn table_csv_bytes(table: &Table) -> Result<Vec<u8>, IoError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&table.header)?;
    for row in &table.rows {
        w.write_record(row.iter().map(|x| fmt_f64(*x)))?;
    }
    w.into_inner()
        .map_err(|e| IoError::Csv(e.into_error().into()))
}

pub fn parse_table_csv(bytes: &[u8]) -> Result<Table, IoError> {
    let mut r = csv::Reader::from_reader(bytes);
    let header = r.headers()?.iter().map(str::to_owned).collect();
    let mut table = Table {
        header,
        rows: Vec::new(),
    };
    for (n, rec) in r.records().enumerate() {
        let rec = rec?;
        let row = rec
            .iter()
            .map(|t| {
                t.parse::<f64>().map_err(|e| IoError::Parse {
                    line: n + 2,
                    message: format!("{t}: {e}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        table.push(row)?;
    }
    Ok(table)
}
