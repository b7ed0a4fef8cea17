use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use jumploci_cli::{emit, parse_session, run_command, CliError, Command, Format, RunOptions};
use jumploci_core::groebner::stats;

#[derive(Parser)]
#[command(name = "jumploci", version, about = "Cohomological jump loci of modules over complete intersections")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Session file.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Resolution length (overrides `truncation`).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Seed for random screening points (overrides `seed`).
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output (overrides `output`).
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Jump loci, complexity, Betti and Bass degrees.
    Compute,
    /// Betti numbers and quasi-polynomials of M and M*.
    Betti,
    /// The report with the duality comparison against M*.
    Dual,
    /// Realize a chain of varieties in the operator ring.
    Realize {
        #[arg(long)]
        chain: PathBuf,
    },
    /// Cohomological rank at a point of the operator space.
    Crk {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        point: Vec<String>,
    },
    /// Compare stable Betti numbers over hypersurfaces with crk at random points.
    Oracle {
        #[arg(long, default_value_t = 20)]
        points: usize,
    },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })
}

fn run(cli: Cli) -> Result<Option<String>, CliError> {
    let input = cli.input.ok_or_else(|| CliError::Usage("--input FILE is required".into()))?;
    let session = parse_session(&read(&input)?).map_err(|source| CliError::Parse { path: input.clone(), source })?;
    let command = match cli.command {
        Cmd::Compute => Command::Compute,
        Cmd::Betti => Command::Betti,
        Cmd::Dual => Command::Dual,
        Cmd::Realize { chain } => Command::Realize { chain: read(&chain)? },
        Cmd::Crk { point } => Command::Crk { point },
        Cmd::Oracle { points } => Command::Oracle { points },
    };
    let opts = RunOptions { seed: cli.seed.or(session.options.seed).unwrap_or(0), n: cli.n.or(session.options.truncation) };
    let outcome = run_command(&command, &session, &opts)?;
    let text = emit(&outcome.output, cli.format);
    match cli.output.or(session.options.output.clone()) {
        Some(path) => fs::write(&path, &text).map_err(|source| CliError::Io { path, source })?,
        None => print!("{text}"),
    }
    Ok(outcome.failure)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let verbose = std::env::var("JUMPLOCI_VERBOSE").is_ok_and(|v| v == "1");
    let result = run(cli);
    if verbose {
        let s = stats::snapshot();
        eprintln!("gb: {} pairs, {} zero reductions, {} basis elements", s.pairs, s.zero_reductions, s.basis_elements);
    }
    match result {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(failure)) => {
            eprintln!("jumploci: {failure}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("jumploci: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
