//! Command-line front end for `weightfam-core`.
//!
//! Exit codes: 0 on success, 1 on validation errors, 2 when an orbit or
//! component search exceeds the cap.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use weightfam_core::{
    rational, report, AlgebraType, ClassificationReport, Error, RootSystem, Weight, DEFAULT_ORBIT_CAP,
};

pub mod spec;

pub use spec::ProblemSpec;

pub const ORBIT_CAP_ENV: &str = "WEIGHTFAM_ORBIT_CAP";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid problem specification: {0}")]
    Spec(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::OrbitCapExceeded { .. }) => 2,
            _ => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "weightfam", version, about = "Classify coherent and parabolic families of weight modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the families generated by the highest weights in a problem file.
    Classify {
        #[arg(long)]
        input: PathBuf,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the text report here instead of standard output.
        #[arg(long)]
        text: Option<PathBuf>,
    },
    /// Classify sl2 at the admissible level k = u/v - 2.
    Sl2Admissible {
        #[arg(long)]
        u: u64,
        #[arg(long)]
        v: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Report whether a level is critical and whether the vacuum is non-simple.
    LevelCheck {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        level: String,
    },
    /// List the shifted Weyl orbit of a weight.
    Orbit {
        #[arg(long)]
        algebra: String,
        /// Comma-separated Dynkin labels, e.g. "-3/2,0".
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        cap: Option<usize>,
    },
}

/// The orbit cap from the environment, or the default.
fn env_cap() -> Result<usize, CliError> {
    match std::env::var(ORBIT_CAP_ENV) {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(c) if c >= 1 => Ok(c),
            _ => Err(CliError::Usage(format!("{ORBIT_CAP_ENV} must be a positive integer, got `{s}`"))),
        },
        Err(_) => Ok(DEFAULT_ORBIT_CAP),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn parse_algebra(s: &str) -> Result<RootSystem, CliError> {
    let t: AlgebraType = s.parse()?;
    Ok(RootSystem::new(t))
}

fn emit(
    report: &ClassificationReport,
    json: Option<&Path>,
    text: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if let Some(path) = json {
        write_file(path, &report::to_json(report))?;
    }
    let rendered = report::to_text(report);
    match text {
        Some(path) => write_file(path, &rendered),
        None => out.write_all(rendered.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    let stdout_err = |source| CliError::Io { path: "<stdout>".into(), source };
    match command {
        Command::Classify { input, json, text } => {
            let contents = fs::read_to_string(&input).map_err(|source| CliError::Io { path: input.clone(), source })?;
            let spec = ProblemSpec::parse(&contents)?;
            let cap = match spec.orbit_cap {
                Some(c) => c,
                None => env_cap()?,
            };
            let report = weightfam_core::classify(&spec.root_system(), &spec.level, &spec.highest_weights, cap)?;
            emit(&report, json.as_deref(), text.as_deref(), out)
        }
        Command::Sl2Admissible { u, v, json } => {
            let report = weightfam_core::sl2_admissible(u, v)?;
            emit(&report, json.as_deref(), None, out)
        }
        Command::LevelCheck { algebra, level } => {
            let rs = parse_algebra(&algebra)?;
            let level = rational::parse(&level)?;
            let d = rs.level_diagnostic(&level);
            let vacuum = match (&d.u, &d.v) {
                (Some(u), Some(v)) => format!("yes (u={u}, v={v})"),
                _ if d.nonsimple_vacuum => "yes".to_string(),
                _ => "no".to_string(),
            };
            let critical = if d.critical { "yes" } else { "no" };
            writeln!(out, "non-simple vacuum: {vacuum}; critical: {critical}").map_err(stdout_err)
        }
        Command::Orbit { algebra, weight, cap } => {
            let rs = parse_algebra(&algebra)?;
            let w = Weight::parse(&weight)?;
            rs.check_weight(&w)?;
            let cap = match cap {
                Some(c) => c,
                None => env_cap()?,
            };
            let orbit = rs.dot_orbit(&w, cap)?;
            for x in &orbit {
                writeln!(out, "{x}").map_err(stdout_err)?;
            }
            writeln!(out, "orbit size: {}", orbit.len()).map_err(stdout_err)
        }
    }
}

/// Runs the command line `argv` (including the program name), writing
/// normal output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
