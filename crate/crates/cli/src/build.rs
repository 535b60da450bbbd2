//! `dawg build`.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use dawg_core::export::{affix_dot, cdawg_dot, dawg_dot, lstrie_dot, maw_tsv, scdawg_dot, st_dot, stats_json};
use dawg_core::pipeline::{build, Built};
use dawg_core::text::{Code, SymbolKind, Text};
use dawg_core::StructureKind;

use crate::input::{self, Format};
use crate::BuildArgs;

fn write(path: &Path, body: &str) -> Result<()> {
    std::fs::write(path, body).with_context(|| format!("cannot write {}", path.display()))
}

/// `out.dot` becomes `out.dawg.dot` when several graphs share one path.
fn dot_path(base: &Path, kind: StructureKind, several: bool) -> PathBuf {
    if !several {
        return base.to_path_buf();
    }
    let stem = base.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let ext = base.extension().map(|e| e.to_string_lossy().into_owned()).unwrap_or_else(|| "dot".into());
    base.with_file_name(format!("{stem}.{kind}.{ext}"))
}

fn dot_of(kind: StructureKind, b: &Built, t: &Text) -> Option<String> {
    use StructureKind as K;
    match kind {
        K::St => b.st.as_ref().map(|st| st_dot(st, t)),
        K::Dawg => b.dawg.as_ref().map(|fd| dawg_dot(&fd.dawg, t.symbols(), t, "dawg")),
        K::Rdawg => b.rdawg.as_ref().map(|rd| {
            // The reversed DAWG indexes the whole sequence read backwards.
            let reversed: Vec<Code> = t.symbols().iter().rev().copied().collect();
            dawg_dot(rd, &reversed, t, "reversed_dawg")
        }),
        K::Affix => b.affix.as_ref().map(|at| affix_dot(at, t)),
        K::Cdawg => b.cdawg.as_ref().map(|g| cdawg_dot(g, t)),
        K::Scdawg => b.scdawg.as_ref().map(|g| scdawg_dot(g, t)),
        K::Lstrie => b.lstrie.as_ref().map(|trie| lstrie_dot(trie, t)),
        K::Maw => None,
    }
}

pub fn run(args: &BuildArgs) -> Result<u8> {
    let raw = input::read(args.input.as_deref(), args.string.as_deref(), args.format)?;
    let kind = if args.format == Format::Ints { SymbolKind::Ints } else { SymbolKind::Bytes };
    let t = Text::ingest(&raw, args.sigma, kind)?;
    let mut select = args.structs.clone();
    select.sort_unstable();
    select.dedup();
    let b = build(&t, &select)?;

    if let Some(base) = &args.dot {
        let graphs: Vec<StructureKind> = select.iter().copied().filter(|&k| k != StructureKind::Maw).collect();
        for &k in &graphs {
            if let Some(body) = dot_of(k, &b, &t) {
                write(&dot_path(base, k, graphs.len() > 1), &body)?;
            }
        }
    }

    let stats = stats_json(&t, &b.stats);
    if let Some(path) = &args.json {
        write(path, &stats)?;
    }
    if args.stats {
        print!("{stats}");
    }

    if let Some(ms) = &b.maws {
        let tsv = maw_tsv(ms, &t, args.decode)?;
        match &args.tsv {
            Some(path) => write(path, &tsv)?,
            // Stats on stdout take precedence over the word list.
            None if !args.stats => print!("{tsv}"),
            None => {}
        }
    }
    Ok(0)
}
