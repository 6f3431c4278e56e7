mod args;
mod commands;
mod files;

use std::process::ExitCode;

use clap::Parser;
use rainbow_core::{CheckError, ConstructionError, FamilyError, GraphError, SolveError, SteinerError};
use serde_json::{json, Value};

use args::{Cli, Command};
use commands::{Ctx, Status};
use files::Session;

const EXIT_NOT_RAINBOW: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;
const EXIT_ERROR: u8 = 4;

fn run(cli: &Cli) -> anyhow::Result<Status> {
    if cli.jobs == 0 {
        anyhow::bail!("--jobs must be at least 1");
    }
    rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global()?;
    let ctx = Ctx { jobs: cli.jobs };
    let name = match &cli.command {
        Command::Gen(_) => "gen",
        Command::Product(_) => "product",
        Command::Color(_) => "color",
        Command::Verify(_) => "verify",
        Command::Solve(_) => "solve",
        Command::Sdiam(_) => "sdiam",
        Command::Oracle(_) => "oracle",
    };
    let mut session = Session::new(name);
    session.param("jobs", cli.jobs);
    let status = match &cli.command {
        Command::Gen(a) => commands::gen(a, &mut session)?,
        Command::Product(a) => commands::product(a, &mut session)?,
        Command::Color(a) => commands::color(a, &ctx, &mut session)?,
        Command::Verify(a) => commands::verify(a, &ctx, &mut session)?,
        Command::Solve(a) => commands::solve(a, &ctx, &mut session)?,
        Command::Sdiam(a) => commands::sdiam(a, &mut session)?,
        Command::Oracle(a) => commands::oracle(a, &mut session)?,
    };
    session.finish(cli.manifest.as_deref())?;
    Ok(status)
}

/// Machine-readable form of an error, keyed by the core error type it wraps.
fn describe(err: &anyhow::Error) -> Value {
    let message = format!("{err:#}");
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<ConstructionError>() {
            return match e {
                ConstructionError::Routed { family, oracle } => {
                    json!({"error": "routed", "message": message, "family": family, "oracle": oracle})
                }
                ConstructionError::OperandNotRainbow { operand, k, failing } => json!({
                    "error": "operand_not_rainbow",
                    "message": message,
                    "operand": operand,
                    "k": k,
                    "failing": failing,
                }),
                _ => json!({"error": "construction", "message": message}),
            };
        }
        let kind = if cause.is::<GraphError>() {
            "graph"
        } else if cause.is::<CheckError>() {
            "check"
        } else if cause.is::<SolveError>() {
            "solve"
        } else if cause.is::<SteinerError>() {
            "steiner"
        } else if cause.is::<FamilyError>() {
            "family"
        } else if cause.is::<serde_json::Error>() {
            "parse"
        } else if cause.is::<std::io::Error>() {
            "io"
        } else {
            continue;
        };
        return json!({"error": kind, "message": message});
    }
    json!({"error": "usage", "message": message})
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::NotRainbow) => ExitCode::from(EXIT_NOT_RAINBOW),
        Ok(Status::Unknown) => ExitCode::from(EXIT_UNKNOWN),
        Err(err) => {
            eprintln!("{}", describe(&err));
            ExitCode::from(EXIT_ERROR)
        }
    }
}
