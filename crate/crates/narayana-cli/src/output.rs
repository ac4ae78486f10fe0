//! Output plumbing shared by the subcommands: the format flag and the
//! stdout-or-file sink.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;

/// Rendering style for command output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Space- or line-separated values for people.
    Plain,
    /// One compact JSON object per logical record.
    Json,
    /// Ascending-degree columns (or one `value` column) with a header row.
    Csv,
}

/// Opens `--output` as a buffered file writer, or standard output when the
/// flag is absent.
pub fn open_sink(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}
