//! CSV emission shared by every subcommand: `#`-prefixed metadata lines, a
//! fixed header row, 15-significant-digit numbers, every line newline
//! terminated. Nothing run-dependent (no timestamps, no hostnames) ever goes
//! into a file, so identical inputs produce byte-identical output.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

/// 15 significant digits in exponent notation; enough to reconstruct the f64
/// bit pattern on read-back.
pub fn num(v: f64) -> String {
    format!("{:.14e}", v)
}

/// One output table: metadata comments, header, then rows.
pub struct Table {
    out: BufWriter<File>,
}

impl Table {
    pub fn create(
        path: &Path,
        meta: &[(&str, String)],
        header: &str,
    ) -> std::io::Result<Table> {
        let mut out = BufWriter::new(File::create(path)?);
        writeln!(out, "# fermi-complexity v{}", env!("CARGO_PKG_VERSION"))?;
        for (key, value) in meta {
            writeln!(out, "# {key} = {value}")?;
        }
        writeln!(out, "{header}")?;
        Ok(Table { out })
    }

    pub fn row(&mut self, cells: &[String]) -> std::io::Result<()> {
        writeln!(self.out, "{}", cells.join(","))
    }

    pub fn finish(mut self) -> std::io::Result<()> {
        self.out.flush()
    }
}
