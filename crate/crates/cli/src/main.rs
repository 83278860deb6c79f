//! Command-line front end: point evaluation, grids, special functions and
//! the acceptance battery.

mod body;
mod error;
mod eval;
mod grid;
mod special;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use appellfield::verify::{self, Suite};
use appellfield::SeriesControl;
use clap::{Parser, Subcommand, ValueEnum};

use error::CliResult;
use eval::EvalArgs;
use grid::{Format, GridSpec};

#[derive(Debug, Parser)]
#[command(name = "appellfield", version, about = "Potentials and field lines of charged cylinders, tubes and disks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// φ and ψ at one point.
    Eval(EvalArgs),
    /// φ and ψ on a rectangular grid, as CSV or JSON.
    Grid {
        #[command(flatten)]
        spec: GridSpec,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A special function by name.
    Special {
        #[arg(long = "fn")]
        name: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<f64>,
    },
    /// Run the acceptance battery.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Fast)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Fast,
    Full,
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let ctl = SeriesControl::from_env()?;
    let stdout = io::stdout();
    match cli.command {
        Command::Eval(args) => {
            let mut out = stdout.lock();
            for line in eval::eval_lines(&args, &ctl)? {
                writeln!(out, "{line}")?;
            }
        }
        Command::Grid { spec, format, out } => {
            let rows = grid::compute(&spec, &ctl)?;
            let sink: Box<dyn Write> = match out {
                Some(path) => Box::new(File::create(path)?),
                None => Box::new(stdout.lock()),
            };
            let mut w = BufWriter::new(sink);
            match format {
                Format::Csv => grid::write_csv(&mut w, &rows)?,
                Format::Json => grid::write_json(&mut w, &spec, rows)?,
            }
            w.flush()?;
        }
        Command::Special { name, args } => {
            let v = special::evaluate(&name, &args, &ctl)?;
            writeln!(stdout.lock(), "{v}")?;
        }
        Command::Verify { suite, seed } => {
            let suite = match suite {
                SuiteArg::Fast => Suite::Fast,
                SuiteArg::Full => Suite::Full,
            };
            let results = verify::run(suite, seed, &ctl);
            let mut out = stdout.lock();
            for r in &results {
                writeln!(out, "{r}")?;
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            writeln!(out, "{} passed, {failed} failed", results.len() - failed)?;
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
