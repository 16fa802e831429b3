use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ris_connect::graph::Graph;
use ris_connect::harness::{
    emit_csv, instance_report, run_sweep, solve, write_csv, RunOptions, SweepSpec, SweptParameter,
};
use ris_connect::optimizer::{PhaseMode, Scheme};
use ris_connect::scenario::ScenarioConfig;
use ris_connect::Error;

#[derive(Parser)]
#[command(
    name = "ris-connect",
    version,
    about = "RIS-assisted UAV network connectivity simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample one scenario and report every requested scheme as JSON.
    Simulate(Common),
    /// Sweep the number of UAVs and write CSV.
    SweepUav(SweepArgs),
    /// Sweep the number of UEs and write CSV.
    SweepUe(SweepArgs),
    /// Sweep the RIS SNR threshold (dB) and write CSV.
    SweepSnr(SweepArgs),
    /// Run a single scheme on one scenario and print the result as JSON.
    Solve(SolveArgs),
}

#[derive(Args)]
struct Common {
    /// Scenario configuration (JSON); built-in defaults when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Master seed; overrides the seed in the configuration.
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated schemes.
    #[arg(long, default_value = "original,random,linear,sdp,exhaustive")]
    schemes: String,
    /// RIS phase rule: paper or cophase.
    #[arg(long, default_value = "paper")]
    phase_mode: String,
    /// UE searched by the linear scheme (1-based).
    #[arg(long, default_value_t = 1)]
    ue: usize,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    /// Monte Carlo iterations per swept value.
    #[arg(long, default_value_t = 500)]
    iterations: usize,
    /// Comma-separated swept values; the standard grid when omitted.
    #[arg(long)]
    values: Option<String>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    scheme: String,
    #[arg(long, default_value = "paper")]
    phase_mode: String,
    /// Restrict candidates to this UE (1-based).
    #[arg(long)]
    ue: Option<usize>,
    /// Base graph as an edge list instead of the geometric graph.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Write the base graph as an edge list.
    #[arg(long)]
    export_graph: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io { .. } => 3,
        _ => 2,
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Simulate(c) => simulate(c),
        Command::SweepUav(a) => sweep(SweptParameter::NumUav, a),
        Command::SweepUe(a) => sweep(SweptParameter::NumUe, a),
        Command::SweepSnr(a) => sweep(SweptParameter::Gamma0Ris, a),
        Command::Solve(a) => solve_command(a),
    }
}

fn load_config(path: Option<&Path>) -> Result<ScenarioConfig, Error> {
    match path {
        Some(p) => ScenarioConfig::load(p),
        None => Ok(ScenarioConfig::default()),
    }
}

fn one_based(index: usize, what: &str) -> Result<usize, Error> {
    index
        .checked_sub(1)
        .ok_or_else(|| Error::Config(format!("{what} index is 1-based")))
}

fn run_options(config: &ScenarioConfig, phase_mode: &str, ue: usize) -> Result<RunOptions, Error> {
    Ok(RunOptions {
        phase_mode: phase_mode.parse::<PhaseMode>()?,
        solver: config.solver,
        linear_ue: one_based(ue, "UE")?,
    })
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| io_error(path, e)),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| io_error(Path::new("<stdout>"), e)),
    }
}

fn io_error(path: &Path, source: std::io::Error) -> Error {
    Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Error> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Error::Parse(e.to_string()))
}

fn simulate(c: Common) -> Result<(), Error> {
    let config = load_config(c.config.as_deref())?;
    let opts = run_options(&config, &c.phase_mode, c.ue)?;
    let schemes = Scheme::parse_list(&c.schemes)?;
    let sc = config.sample(c.seed.unwrap_or(config.seed))?;
    let report = instance_report(&sc, &schemes, &opts)?;
    write_output(c.out.as_deref(), &to_json(&report)?)
}

fn sweep(parameter: SweptParameter, a: SweepArgs) -> Result<(), Error> {
    let c = a.common;
    let config = load_config(c.config.as_deref())?;
    let mut spec = SweepSpec::new(parameter, config.clone());
    spec.options = run_options(&config, &c.phase_mode, c.ue)?;
    spec.schemes = Scheme::parse_list(&c.schemes)?;
    spec.iterations = a.iterations;
    spec.seed = c.seed.unwrap_or(config.seed);
    if let Some(values) = &a.values {
        spec.values = parse_values(values)?;
    }
    let records = run_sweep(&spec)?;
    match c.out {
        Some(path) => emit_csv(&records, path),
        None => {
            let mut buf = Vec::new();
            write_csv(&records, &mut buf).map_err(|e| io_error(Path::new("<stdout>"), e))?;
            std::io::stdout()
                .write_all(&buf)
                .map_err(|e| io_error(Path::new("<stdout>"), e))
        }
    }
}

fn parse_values(s: &str) -> Result<Vec<f64>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| Error::Config(format!("invalid swept value {t:?}")))
        })
        .collect()
}

fn solve_command(a: SolveArgs) -> Result<(), Error> {
    let config = load_config(a.config.as_deref())?;
    let scheme: Scheme = a.scheme.parse()?;
    let ue = a.ue.map(|u| one_based(u, "UE")).transpose()?;
    let opts = RunOptions {
        phase_mode: a.phase_mode.parse()?,
        solver: config.solver,
        linear_ue: 0,
    };
    if scheme == Scheme::Linear && ue.is_none() && config.num_ue != 1 {
        return Err(Error::Config(
            "the linear scheme needs --ue when there are several UEs".into(),
        ));
    }
    let sc = config.sample(a.seed.unwrap_or(config.seed))?;
    let base = match &a.graph {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
            Some(Graph::from_edge_list(&text)?)
        }
        None => None,
    };
    if let Some(path) = &a.export_graph {
        let g = match &base {
            Some(g) => g.clone(),
            None => ris_connect::graph::build_graph(&sc)?,
        };
        std::fs::write(path, g.to_edge_list()).map_err(|e| io_error(path, e))?;
    }
    let result = solve(&sc, base.as_ref(), scheme, ue, &opts)?;
    write_output(a.out.as_deref(), &to_json(&result.summary())?)
}
