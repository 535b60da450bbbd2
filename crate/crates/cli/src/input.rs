//! Reading input symbols from a file or an inline string.

use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Every byte is a symbol. One trailing newline is dropped.
    Bytes,
    /// Sequence lines of a FASTA file, headers and whitespace removed.
    Fasta,
    /// Non-negative integers separated by whitespace or commas.
    Ints,
}

pub fn parse(raw: &[u8], format: Format) -> Result<Vec<u64>> {
    match format {
        Format::Bytes => {
            let body = raw.strip_suffix(b"\n").unwrap_or(raw);
            let body = body.strip_suffix(b"\r").unwrap_or(body);
            Ok(body.iter().map(|&b| b as u64).collect())
        }
        Format::Fasta => Ok(raw
            .split(|&b| b == b'\n')
            .filter(|line| !line.starts_with(b">") && !line.starts_with(b";"))
            .flat_map(|line| line.iter().copied().filter(|b| !b.is_ascii_whitespace()))
            .map(|b| b as u64)
            .collect()),
        Format::Ints => {
            let text = std::str::from_utf8(raw).context("integer input is not UTF-8")?;
            text.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|tok| !tok.is_empty())
                .map(|tok| tok.parse::<u64>().with_context(|| format!("'{tok}' is not a non-negative integer")))
                .collect()
        }
    }
}

pub fn read(path: Option<&Path>, inline: Option<&str>, format: Format) -> Result<Vec<u64>> {
    let raw = match (path, inline) {
        (Some(p), None) => std::fs::read(p).with_context(|| format!("cannot read {}", p.display()))?,
        (None, Some(s)) => s.as_bytes().to_vec(),
        _ => bail!("give exactly one of --in and --str"),
    };
    parse(&raw, format)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        assert_eq!(parse(b"ab\n", Format::Bytes).unwrap(), vec![97, 98]);
        assert_eq!(parse(b">seq\nAC\nGT \n", Format::Fasta).unwrap(), vec![65, 67, 71, 84]);
        assert_eq!(parse(b"3, 1 4\n1", Format::Ints).unwrap(), vec![3, 1, 4, 1]);
        assert!(parse(b"3 -1", Format::Ints).is_err());
    }
}
