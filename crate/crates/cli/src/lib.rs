//! Command-line front end for `credence-core`.
//!
//! Every data-producing command writes a CSV table (header row, 17
//! significant digits, LF line endings) and a short human summary. With
//! `--output` the table goes to the file and the summary to stdout. Without
//! it, tabular commands (`sweep`, `figure`, `simulate`) print the table on
//! stdout and the summary on stderr, and the remaining commands print only
//! the summary on stdout.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};

pub use args::Cli;
pub use commands::{Primary, Report};
pub use config::Settings;
pub use error::CliError;
pub use table::{ParsedTable, Table};

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let settings = Settings::resolve(&cli.opts)?;
    let report = commands::run(&cli.command, &settings)?;
    emit(&report, &settings)
}

fn emit(report: &Report, settings: &Settings) -> Result<(), CliError> {
    let stdout = io::stdout();
    match (&settings.output, report.primary) {
        (Some(path), _) => {
            let mut file = BufWriter::new(File::create(path)?);
            report.table.write(&mut file)?;
            file.flush()?;
            print_lines(&mut stdout.lock(), &report.summary)?;
        }
        (None, Primary::Data) => {
            report.table.write(BufWriter::new(stdout.lock()))?;
            print_lines(&mut io::stderr().lock(), &report.summary)?;
        }
        (None, Primary::Summary) => print_lines(&mut stdout.lock(), &report.summary)?,
    }
    Ok(())
}

fn print_lines<W: Write>(w: &mut W, lines: &[String]) -> io::Result<()> {
    for line in lines {
        writeln!(w, "{line}")?;
    }
    w.flush()
}
