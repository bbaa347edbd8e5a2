//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification did not match its expectation,
//! 2 input error, 3 step budget exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::dynamics::Schedule;
use crate::error::{Error, Result};
use crate::preference::{Notation, PreferenceSpace};
use crate::rational::format_rational;
use crate::scenario::{load_scenario, run_suite, GraphCache};
use crate::MoveGraph;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bordyn", version, about = "Bounded Borda preference dynamics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List all weak orders with ids, Borda scores, antipodes and degrees.
    Enumerate {
        #[arg(short, long)]
        m: usize,
        /// Alternative names, one character each (e.g. `abc`).
        #[arg(long)]
        alternatives: Option<String>,
        /// Print the move graph in DOT form instead of the CSV listing.
        #[arg(long)]
        dot: bool,
    },
    /// Run a scenario until its orbit closes.
    Simulate {
        scenario: PathBuf,
        /// Trajectory CSV destination (`-` for standard output).
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Orbit report destination; standard output when omitted.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Override the seed of a uniform asynchronous schedule.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Run a suite manifest and emit one outcome per entry as JSON.
    Verify {
        suite: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write the influence network or the move graph of a scenario as DOT.
    ExportDot {
        scenario: PathBuf,
        #[arg(long, value_enum, default_value = "network")]
        graph: DotGraph,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DotGraph {
    Network,
    MoveGraph,
}

pub fn main_from_args() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (program name first) and runs the command, writing to the
/// given streams. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Budget(_) => EXIT_BUDGET,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::write(p, text).map_err(|source| Error::Io {
            path: p.display().to_string(),
            source,
        }),
        _ => out.write_all(text.as_bytes()).map_err(|source| Error::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("outputs serialize");
    text.push('\n');
    text
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Enumerate {
            m,
            alternatives,
            dot,
        } => {
            let mut space = PreferenceSpace::new(m)?;
            if let Some(names) = alternatives {
                space = space.with_notation(Notation::custom(names.chars().collect())?)?;
            }
            let graph = MoveGraph::from_space(space)?;
            let text = if dot {
                graph.to_dot()
            } else {
                listing(&graph)?
            };
            emit(None, &text, out)?;
            Ok(EXIT_OK)
        }
        Command::Simulate {
            scenario,
            csv,
            report,
            seed,
            max_steps,
        } => {
            let mut sc = load_scenario(&scenario, &mut GraphCache::default())?;
            if let (Some(seed), Schedule::SeededUniform(_)) = (seed, &sc.schedule) {
                sc.schedule = Schedule::SeededUniform(seed);
            }
            if let Some(steps) = max_steps {
                sc.max_steps = steps;
            }
            let orbit = sc.run()?;
            if let Some(path) = csv.as_deref() {
                emit(Some(path), &orbit.to_csv(&sc.network, sc.space())?, out)?;
            }
            let doc = orbit.document(&sc.label, &sc.network, sc.space());
            emit(report.as_deref(), &to_json(&doc), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, output } => {
            let results = run_suite(&suite)?;
            emit(output.as_deref(), &to_json(&results), out)?;
            Ok(if results.iter().all(|r| r.as_expected) {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            })
        }
        Command::ExportDot {
            scenario,
            graph,
            output,
        } => {
            let sc = load_scenario(&scenario, &mut GraphCache::default())?;
            let text = match graph {
                DotGraph::Network => sc.network.to_dot(),
                DotGraph::MoveGraph => sc.graph.to_dot(),
            };
            emit(output.as_deref(), &text, out)?;
            Ok(EXIT_OK)
        }
    }
}

fn listing(graph: &MoveGraph) -> Result<String> {
    let space = graph.space();
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io {
        path: "<csv>".into(),
        source: e.into(),
    };
    w.write_record(["id", "order", "borda", "antipode", "degree"])
        .map_err(io)?;
    for id in space.ids() {
        let scores: Vec<String> = space
            .scores(id)
            .entries()
            .iter()
            .map(format_rational)
            .collect();
        w.write_record([
            id.to_string(),
            space.format(id),
            scores.join(" "),
            space.format(space.antipode(id)),
            graph.degree(id).to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io {
        path: "<csv>".into(),
        source: e.into_error(),
    })?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
