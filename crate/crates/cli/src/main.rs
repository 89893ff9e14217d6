mod input;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fivemove_core::bracket::{jones_invariants_with, Strategy, DEFAULT_BRACKET_CAP};
use fivemove_core::classify::{classify_montesinos, reduce_rational_tangle};
use fivemove_core::kauffman::{f_invariants_with_strategy, DEFAULT_SKEIN_CAP};
use fivemove_core::link::{parse_dt_table, Fraction, MontesinosDescriptor};
use fivemove_core::probe::{columns, probe_table, ProbeOptions};
use fivemove_core::Error;

#[derive(Parser)]
#[command(
    name = "fivemove",
    version,
    about = "5-move invariants of links and a Montesinos-property test"
)]
struct Cli {
    /// Run everything on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Jones polynomial, determinant and the norms v1, v3.
    Jones {
        /// `M(q/p,...;e)`, `dt: ...`, `p/q` or Conway notation.
        input: String,
        #[arg(long, default_value_t = DEFAULT_BRACKET_CAP)]
        max_crossings: usize,
    },
    /// Kauffman polynomial values at the four 5-move points.
    Kauffman {
        input: String,
        #[arg(long, default_value_t = DEFAULT_SKEIN_CAP)]
        max_crossings: usize,
    },
    /// Normal form of a Montesinos link.
    Classify { descriptor: String },
    /// Basic tangle 5-move equivalent to a rational tangle.
    ReduceTangle { fraction: String },
    /// Montesinos-property test on every knot of a DT table.
    Probe {
        table: PathBuf,
        /// Confirm Jones matches with the Kauffman invariants.
        #[arg(long)]
        refine: bool,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Do not probe mirror images.
        #[arg(long)]
        no_mirror: bool,
        /// Crossing cap of the bracket state sum.
        #[arg(long, default_value_t = DEFAULT_BRACKET_CAP)]
        max_crossings: usize,
        /// Crossing cap of the Kauffman skein recursion.
        #[arg(long, default_value_t = DEFAULT_SKEIN_CAP)]
        max_skein_crossings: usize,
        /// Lay human output out in this many columns.
        #[arg(long, default_value_t = 1)]
        columns: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Tsv,
}

/// Input problems exit with 1, internal inconsistencies with 2.
fn exit_code(e: &Error) -> u8 {
    if e.is_internal() {
        2
    } else {
        1
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Error> {
    let strategy = if cli.sequential {
        Strategy::Sequential
    } else {
        Strategy::default()
    };
    let io_err = |e: io::Error| Error::InvalidDiagram(format!("write failed: {e}"));
    match cli.command {
        Command::Jones {
            input,
            max_crossings,
        } => {
            let d = input::parse_link(&input)?;
            let inv = jones_invariants_with(&d, max_crossings, strategy)?;
            writeln!(out, "V = {}", inv.jones).map_err(io_err)?;
            writeln!(out, "det = {}", inv.det).map_err(io_err)?;
            writeln!(out, "v1 = {:.9}", inv.v1).map_err(io_err)?;
            writeln!(out, "v3 = {:.9}", inv.v3).map_err(io_err)?;
        }
        Command::Kauffman {
            input,
            max_crossings,
        } => {
            let d = input::parse_link(&input)?;
            let f = f_invariants_with_strategy(&d, max_crossings, strategy)?;
            writeln!(out, "q1 = {}", f.q1).map_err(io_err)?;
            writeln!(out, "q2 = {}", f.q2).map_err(io_err)?;
            writeln!(out, "f1 = {} (up to powers of a)", f.f1).map_err(io_err)?;
            writeln!(out, "f2 = {} (up to powers of a)", f.f2).map_err(io_err)?;
            if let Some(n) = f.q1_norm_squared() {
                writeln!(out, "|q1|^2 = {n}").map_err(io_err)?;
            }
        }
        Command::Classify { descriptor } => {
            let m: MontesinosDescriptor = descriptor.parse()?;
            writeln!(out, "{}", classify_montesinos(&m)?).map_err(io_err)?;
        }
        Command::ReduceTangle { fraction } => {
            let f: Fraction = fraction.parse()?;
            writeln!(out, "{}", reduce_rational_tangle(f)?).map_err(io_err)?;
        }
        Command::Probe {
            table,
            refine,
            format,
            no_mirror,
            max_crossings,
            max_skein_crossings,
            columns: count,
        } => {
            let text = std::fs::read_to_string(&table).map_err(|e| {
                Error::InvalidDiagram(format!("cannot read {}: {e}", table.display()))
            })?;
            let codes = parse_dt_table(&text)?;
            let opts = ProbeOptions {
                mirror: !no_mirror,
                refine,
                bracket_cap: max_crossings,
                skein_cap: max_skein_crossings,
                strategy,
            };
            let mut status = 0;
            let mut lines = Vec::new();
            for (code, report) in codes.iter().zip(probe_table(&codes, &opts)) {
                match report {
                    Ok(r) => match format {
                        Format::Human => lines.push(r.human_line()),
                        Format::Tsv => lines.extend(r.tsv_rows()),
                    },
                    Err(e) => {
                        eprintln!("{}: {e}", code.name);
                        status = status.max(exit_code(&e));
                    }
                }
            }
            if format == Format::Human && count > 1 {
                let width = lines.iter().map(String::len).max().unwrap_or(0) + 4;
                lines = columns(&lines, count, width);
            }
            for l in lines {
                writeln!(out, "{l}").map_err(io_err)?;
            }
            return Ok(status);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let stdout = io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
