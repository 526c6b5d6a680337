//! Run configuration and command dispatch for the `freeboundary` binary.

mod suites;

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use thiserror::Error;

pub use suites::{
    bridge_clouds, generic_harmonic_inputs, one_phase_profile, ALPHA_REFERENCE, RADIUS_REFERENCE,
};

use crate::catenoid;
use crate::cone::{gradient_image, solve_one_phase, OnePhaseKind};
use crate::io::{
    mesh_bytes, table_csv_bytes, write_atomic, Format, IoError, MeshGrid, Table, VerificationReport,
};
use suites::Checks;

/// Environment variable naming the directory for outputs when no path is given.
pub const OUT_DIR_ENV: &str = "FREEBOUNDARY_OUT_DIR";
pub const DEFAULT_GRID_N: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    CriticalCatenoid,
    OnePhase,
    Herisson,
    Spectral,
    VerifyAll,
    Export,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CriticalCatenoid => "critical-catenoid",
            Command::OnePhase => "one-phase",
            Command::Herisson => "herisson",
            Command::Spectral => "spectral",
            Command::VerifyAll => "verify-all",
            Command::Export => "export",
        }
    }
}

/// Surfaces available to `export`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Surface {
    /// The critical catenoid through its Weierstrass data on the annulus.
    CriticalCatenoid,
    /// The critical catenoid through its closed-form chart.
    CatenoidChart,
    /// Gradient image of the double cone solution.
    Herisson,
}

pub fn parse_kind(s: &str) -> Result<OnePhaseKind, String> {
    match s {
        "halfspace" => Ok(OnePhaseKind::HalfSpace),
        "double_cone" => Ok(OnePhaseKind::DoubleCone),
        other => Err(format!(
            "unknown kind `{other}` (expected halfspace or double_cone)"
        )),
    }
}

pub fn parse_surface(s: &str) -> Result<Surface, String> {
    match s {
        "critical-catenoid" => Ok(Surface::CriticalCatenoid),
        "catenoid-chart" => Ok(Surface::CatenoidChart),
        "herisson" => Ok(Surface::Herisson),
        other => Err(format!(
            "unknown surface `{other}` (expected critical-catenoid, catenoid-chart or herisson)"
        )),
    }
}

/// Parses `name=value` with a positive finite value.
pub fn parse_tolerance(s: &str) -> Result<(String, f64), String> {
    let (k, v) = s
        .rsplit_once('=')
        .ok_or_else(|| format!("tolerance `{s}` is not name=value"))?;
    let v: f64 = v
        .trim()
        .parse()
        .map_err(|e| format!("tolerance `{s}`: {e}"))?;
    if !(v > 0.0 && v.is_finite()) {
        return Err(format!("tolerance `{s}` must be positive"));
    }
    Ok((k.trim().to_owned(), v))
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] IoError),

    #[error("computation failed: {0}")]
    Compute(#[from] crate::Error),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Config(_) => 1,
            RunError::Io(_) => 2,
            RunError::Compute(_) => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub grid_n: usize,
    pub tolerances: BTreeMap<String, f64>,
    pub output_path: Option<PathBuf>,
    pub format: Option<Format>,
    pub kind: OnePhaseKind,
    pub surface: Surface,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            grid_n: DEFAULT_GRID_N,
            tolerances: BTreeMap::new(),
            output_path: None,
            format: None,
            kind: OnePhaseKind::DoubleCone,
            surface: Surface::CriticalCatenoid,
        }
    }

    /// Applies `key=value` lines; `#` starts a comment. Keys: `grid_n`, `output`,
    /// `format`, `kind`, `surface` and `tol.<check name>`.
    pub fn apply_config_text(&mut self, text: &str) -> Result<(), RunError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |m: String| RunError::Config(format!("config line {}: {m}", n + 1));
            let split = if line.starts_with("tol.") {
                line.rsplit_once('=')
            } else {
                line.split_once('=')
            };
            let (k, v) = split.ok_or_else(|| bad(format!("`{line}` is not key=value")))?;
            let (k, v) = (k.trim(), v.trim());
            match k {
                "grid_n" => self.grid_n = v.parse().map_err(|e| bad(format!("grid_n: {e}")))?,
                "output" => self.output_path = Some(PathBuf::from(v)),
                "format" => self.format = Some(v.parse().map_err(bad)?),
                "kind" => self.kind = parse_kind(v).map_err(bad)?,
                "surface" => self.surface = parse_surface(v).map_err(bad)?,
                _ => match k.strip_prefix("tol.") {
                    Some(name) => {
                        let (name, t) = parse_tolerance(&format!("{name}={v}")).map_err(bad)?;
                        self.tolerances.insert(name, t);
                    }
                    None => return Err(bad(format!("unknown key `{k}`"))),
                },
            }
        }
        Ok(())
    }

    pub fn apply_config_file(&mut self, path: &Path) -> Result<(), RunError> {
        let text = crate::io::read_file(path).map_err(|e| RunError::Config(e.to_string()))?;
        self.apply_config_text(&text)
    }

    pub fn validate(&self) -> Result<(), RunError> {
        if self.grid_n < 8 {
            return Err(RunError::Config(format!(
                "grid_n must be at least 8, got {}",
                self.grid_n
            )));
        }
        if let Some((k, v)) = self
            .tolerances
            .iter()
            .find(|(_, v)| !(**v > 0.0 && v.is_finite()))
        {
            return Err(RunError::Config(format!(
                "tolerance {k} = {v} must be positive"
            )));
        }
        let allowed: &[Format] = match self.command {
            Command::Export | Command::Herisson => &[Format::Obj, Format::Csv, Format::Json],
            _ => &[Format::Csv, Format::Json],
        };
        if let Some(f) = self.format {
            if !allowed.contains(&f) {
                return Err(RunError::Config(format!(
                    "{} cannot write {} output",
                    self.command.name(),
                    f.extension()
                )));
            }
        }
        Ok(())
    }

    pub fn effective_format(&self) -> Format {
        self.format.unwrap_or(match self.command {
            Command::Export => Format::Obj,
            _ => Format::Json,
        })
    }

    /// Explicit output path, else `$FREEBOUNDARY_OUT_DIR/<command>.<ext>`, else stdout.
    pub fn resolved_output(&self) -> Option<PathBuf> {
        if let Some(p) = &self.output_path {
            return Some(p.clone());
        }
        let dir = std::env::var_os(OUT_DIR_ENV)?;
        Some(Path::new(&dir).join(format!(
            "{}.{}",
            self.command.name(),
            self.effective_format().extension()
        )))
    }
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub report: Option<VerificationReport>,
    pub bytes: Vec<u8>,
    pub written_to: Option<PathBuf>,
}

impl RunOutcome {
    pub fn passed(&self) -> bool {
        self.report.as_ref().is_none_or(|r| r.passed())
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            3
        }
    }
}

/// Executes the configured command. When no output location resolves, the
/// produced bytes are returned for the caller to print.
pub fn run(config: &RunConfig) -> Result<RunOutcome, RunError> {
    config.validate()?;
    let format = config.effective_format();
    let n = config.grid_n;
    let mut checks = Checks::new(&config.tolerances);
    let mut mesh = None;
    let mut table = None;
    match config.command {
        Command::CriticalCatenoid => {
            suites::critical_catenoid_suite(&mut checks, n)?;
        }
        Command::OnePhase => {
            suites::one_phase_suite(&mut checks)?;
            let mut t = Table::new(["theta", "g", "g_prime", "|grad v|"]);
            for row in one_phase_profile(config.kind, n)? {
                t.push(row.to_vec())?;
            }
            table = Some(t);
        }
        Command::Herisson => {
            suites::herisson_suite(&mut checks, n)?;
            if format == Format::Obj {
                mesh = Some(export_mesh(Surface::Herisson, n)?);
            }
        }
        Command::Spectral => suites::spectral_suite(&mut checks)?,
        Command::VerifyAll => {
            suites::numeric_suite(&mut checks)?;
            suites::critical_catenoid_suite(&mut checks, n)?;
            suites::one_phase_suite(&mut checks)?;
            suites::herisson_suite(&mut checks, n)?;
            suites::spectral_suite(&mut checks)?;
        }
        Command::Export => mesh = Some(export_mesh(config.surface, n)?),
    }

    let report = (config.command != Command::Export).then_some(checks.report);
    if let Some(r) = &report {
        let unknown: Vec<&String> = config
            .tolerances
            .keys()
            .filter(|k| r.record(k).is_none())
            .collect();
        if !unknown.is_empty() {
            return Err(RunError::Config(format!(
                "tolerance overrides name no check: {unknown:?}"
            )));
        }
    }

    let bytes = match (mesh, table, &report, format) {
        (Some(m), _, _, f) => mesh_bytes(&m, f)?,
        (None, Some(t), _, Format::Csv) => table_csv_bytes(&t)?,
        (None, _, Some(r), Format::Csv) => r.to_csv_bytes()?,
        (None, _, Some(r), _) => r.to_json_bytes()?,
        (None, _, None, _) => unreachable!("export always builds a mesh"),
    };
    let written_to = config.resolved_output();
    if let Some(path) = &written_to {
        write_atomic(path, &bytes)?;
    }
    Ok(RunOutcome {
        report,
        bytes,
        written_to,
    })
}

/// Samples a surface on a `n × n` grid, periodic in the angular direction.
pub fn export_mesh(surface: Surface, n: usize) -> Result<MeshGrid, RunError> {
    let phis: Vec<f64> = (0..n).map(|j| 2.0 * PI * j as f64 / n as f64).collect();
    let points = match surface {
        Surface::CriticalCatenoid => {
            let wd = catenoid::to_weierstrass(&catenoid::solve_critical()?)?;
            let lo = wd.rho().ln();
            let mut pts = Vec::with_capacity(n * n);
            for i in 0..n {
                let sigma = lo * (1.0 - i as f64 / (n - 1) as f64);
                for &t in &phis {
                    pts.push(wd.log_chart_point(sigma, t)?);
                }
            }
            pts
        }
        Surface::CatenoidChart => {
            let c = catenoid::solve_critical()?;
            let mut pts = Vec::with_capacity(n * n);
            for i in 0..n {
                let s = -c.alpha + 2.0 * c.alpha * i as f64 / (n - 1) as f64;
                for &t in &phis {
                    pts.push(c.point(s, t));
                }
            }
            pts
        }
        Surface::Herisson => {
            let dc = solve_one_phase(OnePhaseKind::DoubleCone)?;
            let (lo, hi) = (dc.domain.theta_lo, dc.domain.theta_hi);
            let thetas: Vec<f64> = (0..n)
                .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
                .collect();
            gradient_image(&dc.scaled_profile(), &thetas, &phis)?
        }
    };
    Ok(MeshGrid::new(n, n, true, points)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_text_overrides() {
        let mut c = RunConfig::new(Command::OnePhase);
        c.apply_config_text(
            "# comment\ngrid_n = 16\nformat=csv\nkind=halfspace\ntol.one_phase.c_vs_neck=1e-6\n",
        )
        .unwrap();
        assert_eq!(c.grid_n, 16);
        assert_eq!(c.format, Some(Format::Csv));
        assert_eq!(c.kind, OnePhaseKind::HalfSpace);
        assert_eq!(c.tolerances["one_phase.c_vs_neck"], 1e-6);
        for bad in [
            "grid_n",
            "colour=red",
            "tol.x=-1",
            "format=png",
            "grid_n=abc",
        ] {
            let e = RunConfig::new(Command::VerifyAll)
                .apply_config_text(bad)
                .unwrap_err();
            assert_eq!(e.exit_code(), 1, "{bad}");
        }
    }

    #[test]
    fn validation() {
        let mut c = RunConfig::new(Command::Spectral);
        c.grid_n = 4;
        assert_eq!(c.validate().unwrap_err().exit_code(), 1);
        c.grid_n = 8;
        c.format = Some(Format::Obj);
        assert!(c.validate().is_err());
        c.command = Command::Export;
        assert!(c.validate().is_ok());
        assert_eq!(
            RunConfig::new(Command::Export).effective_format(),
            Format::Obj
        );
    }

    #[test]
    fn unknown_tolerance_is_config_error() {
        let mut c = RunConfig::new(Command::Spectral);
        c.tolerances.insert("no.such.check".into(), 1.0);
        assert_eq!(run(&c).unwrap_err().exit_code(), 1);
    }

    #[test]
    fn tightened_tolerance_fails_verification() {
        let mut c = RunConfig::new(Command::Spectral);
        c.tolerances
            .insert("spectral[k1,pi/3].pde_residual".into(), 1e-300);
        let out = run(&c).unwrap();
        assert_eq!(out.exit_code(), 3);
        assert!(out.written_to.is_none());
    }

    #[test]
    fn parsers() {
        assert_eq!(parse_tolerance("a.b = 1e-3").unwrap(), ("a.b".into(), 1e-3));
        assert!(parse_tolerance("a").is_err());
        assert!(parse_tolerance("a=0").is_err());
        assert!(parse_kind("cone").is_err());
        assert_eq!(parse_surface("herisson").unwrap(), Surface::Herisson);
    }

    #[test]
    fn export_meshes_are_tubes() {
        for s in [
            Surface::CriticalCatenoid,
            Surface::CatenoidChart,
            Surface::Herisson,
        ] {
            let m = export_mesh(s, 12).unwrap();
            assert_eq!(m.points().len(), 144);
            assert_eq!(m.euler_characteristic(), 0);
        }
    }
}
