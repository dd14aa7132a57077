use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use tanaka::cli::{run, Command, OutputFormat, RunConfig, EXIT_SCHEMA};
use tanaka::distflag::{DEFAULT_SAMPLES, DEFAULT_SEED};
use tanaka::prolong::DEFAULT_CAP;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Cmd {
    CheckGla,
    Prolong,
    Pseudo,
    DistFlag,
    DistSymbol,
    DistPp,
    Fixtures,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Output {
    Text,
    Machine,
}

/// Tanaka prolongations, pseudo-product symbols and distribution symbols in
/// exact rational arithmetic.
#[derive(Debug, Parser)]
#[command(name = "tanaka", version)]
struct Args {
    /// What to run.
    #[arg(value_enum)]
    command: Cmd,
    /// Input document (standard input when omitted or `-`), or the fixture
    /// name for `fixtures`.
    input: Option<String>,
    /// Highest prolongation degree to compute.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Sample points for neighbourhood probes.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    /// Seed for sample points.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// List the fixture catalog.
    #[arg(long)]
    list: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = match args.command {
        Cmd::CheckGla => Command::CheckGla,
        Cmd::Prolong => Command::Prolong,
        Cmd::Pseudo => Command::Pseudo,
        Cmd::DistFlag => Command::DistFlag,
        Cmd::DistSymbol => Command::DistSymbol,
        Cmd::DistPp => Command::DistPp,
        Cmd::Fixtures => Command::Fixtures,
    };
    let mut config = RunConfig::new(command);
    config.cap = args.cap;
    config.samples = args.samples;
    config.seed = args.seed;
    config.list = args.list;
    config.output = match args.output {
        Output::Text => OutputFormat::Text,
        Output::Machine => OutputFormat::Machine,
    };

    let mut input = String::new();
    if command == Command::Fixtures {
        config.fixture = args.input;
    } else {
        let read = match args.input.as_deref().filter(|p| *p != "-") {
            Some(path) => std::fs::read_to_string(PathBuf::from(path)),
            None => std::io::stdin().read_to_string(&mut input).map(|_| std::mem::take(&mut input)),
        };
        match read {
            Ok(text) => input = text,
            Err(e) => {
                eprintln!("tanaka: cannot read input: {e}");
                return ExitCode::from(EXIT_SCHEMA as u8);
            }
        }
    }

    let outcome = run(&config, &input);
    // A closed pipe is not worth a panic.
    let _ = std::io::stdout().lock().write_all(outcome.report.as_bytes());
    ExitCode::from(outcome.exit_code as u8)
}
