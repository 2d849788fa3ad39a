use std::process::ExitCode;

use bratteli_core::{Budget, Error};
use clap::{Parser, Subcommand, ValueEnum};

mod adic_cmd;
mod character_cmd;
mod diagnose_cmd;
mod emit;
mod graph_cmd;
mod measure_cmd;

use emit::Emit;

#[derive(Parser)]
#[command(
    name = "bratteli",
    about = "Exact path counting, central measures, characters and adic maps on graded graphs",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Text)]
    emit: Emit,

    /// Add decimal renderings next to exact rationals.
    #[arg(long, global = true)]
    float: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build, summarize or convert graded graphs.
    #[command(subcommand)]
    Graph(graph_cmd::GraphCmd),
    /// Count paths from the root, or between two vertices.
    Dim(graph_cmd::DimArgs),
    /// Evaluate boundary characters and symmetric group character tables.
    #[command(subcommand)]
    Character(character_cmd::CharacterCmd),
    /// Central measures: weights, finite-carrier comparison, sampling.
    #[command(subcommand)]
    Measure(measure_cmd::MeasureCmd),
    /// Successor dynamics on path spaces.
    #[command(subcommand)]
    Adic(adic_cmd::AdicCmd),
    /// Finite-level boundary diagnostics.
    #[command(subcommand)]
    Diagnose(diagnose_cmd::DiagnoseCmd),
}

/// Graph families the generators provide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Young,
    Pascal,
    Multidim,
    Solvable,
}

impl KindArg {
    pub fn name(self) -> &'static str {
        match self {
            KindArg::Young => "young",
            KindArg::Pascal => "pascal",
            KindArg::Multidim => "multidim",
            KindArg::Solvable => "solvable",
        }
    }
}

pub struct Ctx {
    pub float: bool,
    pub budget: Budget,
}

fn budget_from_env() -> Result<Budget, Error> {
    match std::env::var("BRATTELI_MAX_CELLS") {
        Ok(raw) => raw
            .trim()
            .parse::<u64>()
            .map(Budget::new)
            .map_err(|_| Error::input(format!("BRATTELI_MAX_CELLS must be an integer, got {raw:?}"))),
        Err(_) => Ok(Budget::default()),
    }
}

fn run(cli: &Cli, ctx: &Ctx) -> Result<String, Error> {
    let rendered = match &cli.command {
        Command::Graph(cmd) => graph_cmd::run(cmd, ctx)?,
        Command::Dim(args) => graph_cmd::run_dim(args, ctx)?,
        Command::Character(cmd) => character_cmd::run(cmd, ctx)?,
        Command::Measure(cmd) => measure_cmd::run(cmd, ctx)?,
        Command::Adic(cmd) => adic_cmd::run(cmd, ctx)?,
        Command::Diagnose(cmd) => diagnose_cmd::run(cmd, ctx)?,
    };
    rendered.resolve(cli.emit)
}

fn report_error(emit: Emit, err: &Error) {
    if emit == Emit::Json {
        let kind = match err {
            Error::Input(_) => "input",
            Error::Resource(_) => "resource",
            Error::Validation { .. } => "validation",
        };
        let body = serde_json::json!({
            "error": { "kind": kind, "message": err.to_string() }
        });
        eprintln!("{}", serde_json::to_string_pretty(&body).expect("serializes"));
    } else {
        eprintln!("error: {err}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = match budget_from_env() {
        Ok(b) => b,
        Err(e) => {
            report_error(cli.emit, &e);
            return ExitCode::from(2);
        }
    };
    let ctx = Ctx {
        float: cli.float,
        budget,
    };
    match run(&cli, &ctx) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            report_error(cli.emit, &e);
            match e {
                Error::Resource(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
