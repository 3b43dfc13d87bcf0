use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fqh_core::cli::config::{parse_config_file, ConfigError, Settings};
use fqh_core::cli::figure::{FigureData, FigureSpec};
use fqh_core::cli::output::{format_sig, render_csv, render_json, render_report_json, value_in};
use fqh_core::cli::sweep::{compute, sweep};
use fqh_core::cli::verify::{self, Level};
use fqh_core::cli::{OutputFormat, RunConfig, Units};
use fqh_core::states::{Family, FamilySpec, StateError};

const EXIT_ZERO_WAVEFUNCTION: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_VERIFY_FAILED: u8 = 1;

/// Entanglement of Laughlin and K-matrix hierarchical quantum Hall states.
#[derive(Parser, Debug)]
#[command(name = "fqh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute S_f for a single (family, N, m).
    Compute(Common),
    /// Sweep odd m = 1..=m-max for one (family, N).
    Table(Common),
    /// Write CSV and SVG data for figure 1-5.
    Figure {
        /// Figure number (1-5).
        id: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Run the built-in verification checks.
    Verify {
        /// fast (m ≤ 7, N ≤ 3) or full (m ≤ 13, N ≤ 4).
        #[arg(default_value = "fast")]
        level: Level,
    },
}

#[derive(Args, Debug, Default)]
struct Common {
    /// laughlin, hierarchical_phi or chi.
    #[arg(long)]
    family: Option<Family>,
    /// Electron count N.
    #[arg(long)]
    n: Option<usize>,
    /// Odd Laughlin exponent m.
    #[arg(long)]
    m: Option<u32>,
    /// Largest odd m in sweeps (default 13).
    #[arg(long = "m-max")]
    m_max: Option<u32>,
    /// bits or nats (default bits).
    #[arg(long)]
    units: Option<Units>,
    /// csv, json or svg.
    #[arg(long)]
    format: Option<OutputFormat>,
    /// Output file (compute, table) or directory (figure).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for sweeps.
    #[arg(long)]
    jobs: Option<usize>,
    /// Largest electron count accepted (default 5).
    #[arg(long = "max-n")]
    max_electrons: Option<usize>,
    /// Flat `key = value` config file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Zero(String),
    Io(String),
    Verify,
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn resolve(common: Common) -> Result<RunConfig, Failure> {
    let file = match &common.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read config {}: {e}", path.display())))?;
            parse_config_file(&text)?
        }
        None => Settings::default(),
    };
    let flags = Settings {
        family: common.family,
        n: common.n,
        m: common.m,
        m_max: common.m_max,
        units: common.units,
        format: common.format,
        out: common.out,
        jobs: common.jobs,
        max_electrons: common.max_electrons,
    };
    Ok(flags.or(file).resolve())
}

fn state_failure(e: StateError) -> Failure {
    match e {
        StateError::ZeroWavefunction { .. } => Failure::Zero(e.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_compute(cfg: RunConfig) -> Result<(), Failure> {
    let spec = FamilySpec::new(cfg.family()?, cfg.n()?, cfg.m()?);
    let report = compute(&spec, cfg.max_electrons).map_err(state_failure)?;
    let text = match cfg.format {
        Some(OutputFormat::Json) => render_report_json(&report),
        Some(OutputFormat::Csv) => render_csv(&sweep(&[spec], 1, cfg.max_electrons), cfg.units),
        Some(OutputFormat::Svg) => return Err(Failure::Usage("compute supports csv or json output".into())),
        None => format!("{}\n", format_sig(value_in(&report, cfg.units), 12)),
    };
    emit(cfg.out.as_deref(), &text)
}

fn cmd_table(cfg: RunConfig) -> Result<(), Failure> {
    let family = cfg.family()?;
    let n = cfg.n()?;
    FamilySpec::new(family, n, 1).validate(cfg.max_electrons).map_err(state_failure)?;
    let specs: Vec<FamilySpec> = cfg.m_range()?.into_iter().map(|m| FamilySpec::new(family, n, m)).collect();
    let points = sweep(&specs, cfg.jobs, cfg.max_electrons);
    for p in &points {
        if let Err(e) = &p.result {
            eprintln!("note: {} omitted: {e}", p.spec);
        }
    }
    let text = match cfg.format {
        Some(OutputFormat::Json) => render_json(&points),
        Some(OutputFormat::Csv) | None => render_csv(&points, cfg.units),
        Some(OutputFormat::Svg) => return Err(Failure::Usage("table supports csv or json; use `figure` for SVG".into())),
    };
    emit(cfg.out.as_deref(), &text)
}

fn cmd_figure(id: u32, cfg: RunConfig) -> Result<(), Failure> {
    let m_range = cfg.m_range()?;
    let t_max = (m_range.last().copied().unwrap_or(1) - 1) / 2;
    let spec = FigureSpec::new(id, t_max).map_err(|e| Failure::Usage(e.to_string()))?;
    let data = FigureData::compute(spec, cfg.jobs, cfg.max_electrons);
    let dir = cfg.out.unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir).map_err(|e| Failure::Io(format!("cannot create {}: {e}", dir.display())))?;
    let mut written = vec![(dir.join(format!("fig{id}.csv")), data.csv()), (dir.join(format!("fig{id}.svg")), data.svg())];
    if cfg.format == Some(OutputFormat::Json) {
        written.push((dir.join(format!("fig{id}.json")), data.json()));
    }
    for (path, text) in &written {
        emit(Some(path), text)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_verify(level: Level) -> Result<(), Failure> {
    let checks = verify::run(level);
    for c in &checks {
        println!("{c}");
    }
    let failed = checks.iter().filter(|c| c.status == verify::Status::Fail).count();
    println!("verify: {} checks, {failed} failed", checks.len());
    if verify::all_passed(&checks) {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Compute(common) => resolve(common).and_then(cmd_compute),
        Command::Table(common) => resolve(common).and_then(cmd_table),
        Command::Figure { id, common } => resolve(common).and_then(|cfg| cmd_figure(id, cfg)),
        Command::Verify { level } => cmd_verify(level),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nRun `fqh --help` for usage.");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Zero(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_ZERO_WAVEFUNCTION)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY_FAILED),
    }
}
