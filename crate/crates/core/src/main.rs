use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use freeboundary::cli::{
    self, parse_kind, parse_surface, parse_tolerance, Command, RunConfig, Surface,
};
use freeboundary::cone::OnePhaseKind;
use freeboundary::io::Format;

/// Numerical constructions and identity checks for free boundary minimal
/// surfaces and one-phase cones.
#[derive(Debug, Parser)]
#[command(name = "freeboundary", version)]
struct Args {
    /// Grid resolution per direction (at least 8).
    #[arg(long, global = true, default_value_t = cli::DEFAULT_GRID_N)]
    grid_n: usize,

    /// Override a check tolerance, as name=value. Repeatable.
    #[arg(long = "tol", global = true, value_parser = parse_tolerance)]
    tol: Vec<(String, f64)>,

    /// Output file. Defaults to $FREEBOUNDARY_OUT_DIR/<command>.<ext>, else stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Output format: obj, csv or json.
    #[arg(long, global = true)]
    format: Option<Format>,

    /// key=value file; its entries take precedence over flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Solve for the critical catenoid and check its free boundary identities.
    CriticalCatenoid,
    /// Closed-form one-phase cone solutions; csv output tabulates the profile.
    OnePhase {
        #[arg(long, default_value = "double_cone", value_parser = parse_kind)]
        kind: OnePhaseKind,
    },
    /// Gradient images of harmonic cone functions.
    Herisson,
    /// Geodesic disk eigenfunction checks.
    Spectral,
    /// Every suite with default tolerances.
    VerifyAll,
    /// Write a sampled surface as a mesh.
    Export {
        #[arg(long, default_value = "critical-catenoid", value_parser = parse_surface)]
        surface: Surface,
    },
}

fn build_config(args: Args) -> Result<RunConfig, cli::RunError> {
    let command = match args.command {
        Cmd::CriticalCatenoid => Command::CriticalCatenoid,
        Cmd::OnePhase { .. } => Command::OnePhase,
        Cmd::Herisson => Command::Herisson,
        Cmd::Spectral => Command::Spectral,
        Cmd::VerifyAll => Command::VerifyAll,
        Cmd::Export { .. } => Command::Export,
    };
    let mut config = RunConfig::new(command);
    match args.command {
        Cmd::OnePhase { kind } => config.kind = kind,
        Cmd::Export { surface } => config.surface = surface,
        _ => {}
    }
    config.grid_n = args.grid_n;
    config.tolerances.extend(args.tol);
    config.output_path = args.output;
    config.format = args.format;
    if let Some(path) = &args.config {
        config.apply_config_file(path)?;
    }
    Ok(config)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let command = args.command_name();
    let outcome = build_config(args).and_then(|c| cli::run(&c));
    match outcome {
        Ok(out) => {
            if out.written_to.is_none() {
                let mut stdout = std::io::stdout().lock();
                if stdout
                    .write_all(&out.bytes)
                    .and_then(|_| stdout.flush())
                    .is_err()
                {
                    eprintln!("error: cannot write to stdout");
                    return ExitCode::from(2);
                }
            }
            if let Some(r) = &out.report {
                let s = r.summary();
                eprintln!("{command}: {}/{} checks passed", s.passed, s.total);
                for rec in r.records().iter().filter(|r| !r.pass) {
                    eprintln!(
                        "  FAIL {} measured {:e} tolerance {:e}",
                        rec.name, rec.measured, rec.tolerance
                    );
                }
            }
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

impl Args {
    fn command_name(&self) -> &'static str {
        match self.command {
            Cmd::CriticalCatenoid => "critical-catenoid",
            Cmd::OnePhase { .. } => "one-phase",
            Cmd::Herisson => "herisson",
            Cmd::Spectral => "spectral",
            Cmd::VerifyAll => "verify-all",
            Cmd::Export { .. } => "export",
        }
    }
}
