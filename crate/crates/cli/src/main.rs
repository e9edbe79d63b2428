use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thetamd_cli::cycles::cycle_table;
use thetamd_cli::report::{open_cases_csv, open_cases_json, ConformanceReport};
use thetamd_cli::{
    cmd_beta, cmd_verify, open_cases, parse_spec, parse_vertex, run_sweep, BetaArgs, Outcome,
    SweepConfig,
};

#[derive(Parser)]
#[command(
    name = "thetamd",
    version,
    about = "Metric dimension of generalized theta graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact metric dimension of one spec, with prediction and witnesses
    Beta {
        /// Spec literal, e.g. theta:1,2,3
        spec: String,
        #[arg(long, default_value_t = 32)]
        guard_n: usize,
        /// Search even when the vertex count exceeds the guard
        #[arg(long)]
        force: bool,
        /// List every minimum resolving set
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Check whether landmarks resolve a spec
    Verify {
        spec: String,
        /// Vertex literals: c1, c2 or v:PATH:POS (PATH numbered as in the spec literal)
        #[arg(required = true)]
        landmarks: Vec<String>,
    },
    /// Conformance sweep over every canonical spec in range
    Sweep(RangeArgs),
    /// Specs whose best prediction is an interval, with exact values
    OpenCases(RangeArgs),
    /// Two-landmark characterizations on cycles C_3..C_max
    Cycles {
        #[arg(long, default_value_t = 24)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RangeArgs {
    #[arg(long, default_value_t = 2)]
    min_m: usize,
    #[arg(long, default_value_t = 4)]
    max_m: usize,
    #[arg(long, default_value_t = 4)]
    max_s: usize,
    #[arg(long, default_value_t = 32)]
    guard_n: usize,
    /// Largest subset size tried by exact search
    #[arg(long, default_value_t = 6)]
    max_k: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Keep every minimum resolving set instead of the first 64
    #[arg(long)]
    all_witnesses: bool,
    /// Lift the vertex guard
    #[arg(long)]
    force: bool,
    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl RangeArgs {
    fn config(&self) -> SweepConfig {
        SweepConfig {
            min_m: self.min_m,
            max_m: self.max_m,
            max_s: self.max_s,
            guard_n: if self.force { usize::MAX } else { self.guard_n },
            max_k: self.max_k,
            witness_cap: if self.all_witnesses {
                None
            } else {
                SweepConfig::default().witness_cap
            },
            jobs: self.jobs,
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

fn run(cli: Cli) -> Result<Outcome, String> {
    match cli.command {
        Command::Beta {
            spec,
            guard_n,
            force,
            all_witnesses,
        } => {
            let spec = parse_spec(&spec)?;
            let out = cmd_beta(
                &spec,
                &BetaArgs {
                    guard_n,
                    force,
                    all_witnesses,
                },
            );
            if out.outcome == Outcome::GuardExceeded {
                eprint!("{}", out.text);
            } else {
                print!("{}", out.text);
            }
            Ok(out.outcome)
        }
        Command::Verify { spec, landmarks } => {
            let spec = parse_spec(&spec)?;
            let vs = landmarks
                .iter()
                .map(|l| parse_vertex(&spec, l))
                .collect::<Result<Vec<_>, _>>()?;
            let out = cmd_verify(&spec, &vs)?;
            print!("{}", out.text);
            Ok(out.outcome)
        }
        Command::Sweep(args) => {
            let config = args.config();
            let report = ConformanceReport::new(config.clone(), run_sweep(&config));
            let text = match args.format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
            };
            emit(&text, args.out.as_ref()).map_err(|e| format!("io: {e}"))?;
            eprintln!(
                "{} specs, {} failed, {} skipped",
                report.summary.rows, report.summary.failed, report.summary.skipped
            );
            Ok(if report.passed() {
                Outcome::Pass
            } else {
                Outcome::Failure
            })
        }
        Command::OpenCases(args) => {
            let cases = open_cases(&args.config());
            let text = match args.format {
                Format::Json => open_cases_json(&cases),
                Format::Csv => open_cases_csv(&cases),
            };
            emit(&text, args.out.as_ref()).map_err(|e| format!("io: {e}"))?;
            Ok(Outcome::Pass)
        }
        Command::Cycles { max_n, format, out } => {
            let rows = cycle_table(3, max_n);
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&rows).expect("serializes") + "\n",
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    for r in &rows {
                        w.serialize(r).map_err(|e| e.to_string())?;
                    }
                    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).expect("utf-8")
                }
            };
            emit(&text, out.as_ref()).map_err(|e| format!("io: {e}"))?;
            Ok(Outcome::Pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => ExitCode::from(outcome.code() as u8),
        Err(msg) if msg.starts_with("io: ") => {
            eprintln!("error: {}", &msg[4..]);
            ExitCode::from(Outcome::Failure.code() as u8)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(Outcome::Usage.code() as u8)
        }
    }
}
