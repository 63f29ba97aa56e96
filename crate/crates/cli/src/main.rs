mod render;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gassner_potential::braid::parse_braid;
use gassner_potential::potential::{axis_potential, potential_function, PotentialError};
use gassner_potential::verify::{run_all, CheckConfig};
use rayon::prelude::*;
use serde::Deserialize;

#[derive(Parser)]
#[command(
    name = "gpot",
    version,
    about = "Conway potential function of colored braid closures"
)]
struct Cli {
    /// Output format.
    #[arg(
        long,
        value_enum,
        global = true,
        env = "GPOT_FORMAT",
        default_value = "text"
    )]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Potential function of the closure.
    Compute(BraidArgs),
    /// Potential of the closure together with the braid axis `x`.
    Axis(BraidArgs),
    /// Run the randomized checks and print a JSON report.
    Verify(VerifyArgs),
    /// Read `{"braid": ..., "colors": ...}` lines from stdin.
    Batch,
}

#[derive(clap::Args)]
struct BraidArgs {
    /// Signed generators separated by spaces, e.g. "-1 -1 -2 -2".
    #[arg(long, allow_hyphen_values = true)]
    braid: String,
    /// Bottom colors separated by commas, e.g. "1,2,3".
    #[arg(long)]
    colors: String,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 6)]
    max_strands: usize,
    #[arg(long, default_value_t = 12)]
    max_len: usize,
    #[arg(long, default_value_t = 4)]
    max_colors: u32,
}

/// Exit status 1 for bad input, 2 for failures that indicate a bug.
#[derive(Debug)]
enum Failure {
    Input(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Internal(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<PotentialError> for Failure {
    fn from(e: PotentialError) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn compute(braid: &str, colors: &str, format: Format) -> Result<String, Failure> {
    let b = parse_braid(braid, colors).map_err(|e| Failure::Input(e.to_string()))?;
    let f = potential_function(&b)?;
    Ok(render::potential(&f, format))
}

fn axis(braid: &str, colors: &str, format: Format) -> Result<String, Failure> {
    let b = parse_braid(braid, colors).map_err(|e| Failure::Input(e.to_string()))?;
    let a = axis_potential(&b)?;
    Ok(render::axis(&a, format))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Task {
    braid: String,
    colors: String,
}

fn batch(format: Format) -> Result<u8, Failure> {
    let lines: Vec<String> = io::stdin()
        .lock()
        .lines()
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?;
    let results: Vec<Option<Result<String, Failure>>> = lines
        .par_iter()
        .map(|line| {
            if line.trim().is_empty() {
                return None;
            }
            let task: Task = match serde_json::from_str(line) {
                Ok(t) => t,
                Err(e) => return Some(Err(Failure::Input(format!("bad task: {e}")))),
            };
            Some(compute(&task.braid, &task.colors, format).map(|s| s.replace('\n', "; ")))
        })
        .collect();

    let mut out = io::stdout().lock();
    let mut status = 0;
    for (i, r) in results.into_iter().enumerate() {
        let Some(r) = r else { continue };
        let line = i + 1;
        let rendered = match r {
            Ok(s) if format == Format::Json => {
                format!(r#"{{"line":{line},"ok":true,"result":{s}}}"#)
            }
            Ok(s) => format!("{line}: {s}"),
            Err(e) => {
                status = status.max(e.code());
                match format {
                    Format::Json => format!(
                        r#"{{"line":{line},"ok":false,"error":{}}}"#,
                        serde_json::Value::from(e.message())
                    ),
                    _ => format!("{line}: error: {}", e.message()),
                }
            }
        };
        writeln!(out, "{rendered}").map_err(|e| Failure::Internal(e.to_string()))?;
    }
    Ok(status)
}

fn verify(args: &VerifyArgs) -> Result<u8, Failure> {
    if args.trials == 0 {
        return Err(Failure::Input("--trials must be at least 1".into()));
    }
    let cfg = CheckConfig {
        trials: args.trials,
        max_strands: args.max_strands.max(2),
        max_len: args.max_len,
        max_colors: args.max_colors.max(1),
        seed: args.seed,
    };
    let suite = run_all(&cfg);
    let json =
        serde_json::to_string_pretty(&suite).map_err(|e| Failure::Internal(e.to_string()))?;
    println!("{json}");
    Ok(if suite.passed { 0 } else { 2 })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Compute(a) => {
            println!("{}", compute(&a.braid, &a.colors, cli.format)?);
            Ok(0)
        }
        Command::Axis(a) => {
            println!("{}", axis(&a.braid, &a.colors, cli.format)?);
            Ok(0)
        }
        Command::Verify(v) => verify(v),
        Command::Batch => batch(cli.format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("gpot: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
