//! Builds a selection of structures in dependency order and times each step.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::affix::{build_affix_tree, extract_mwl, AffixTree, ModifiedWeinerLinks};
use crate::cdawg::{build_symmetric_cdawg, cdawg_from_dawg, Cdawg, SymmetricCdawg};
use crate::dawg::Dawg;
use crate::error::{Error, Result};
use crate::forward::{black_st_nodes, build_ast, dawg_from_ast, equal_count_child, rrep_of_st_nodes, Ast, ForwardDawg};
use crate::lstrie::{build_lstrie, LsTrie};
use crate::maw::{compute_maws, MawSet};
use crate::suffix_tree::SuffixTree;
use crate::text::Text;
use crate::weiner::{assemble_reversed_dawg, weiner_links, WeinerLinks};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureKind {
    St,
    Dawg,
    Rdawg,
    Affix,
    Cdawg,
    Scdawg,
    Lstrie,
    Maw,
}

impl StructureKind {
    pub const ALL: [StructureKind; 8] = [
        StructureKind::St,
        StructureKind::Dawg,
        StructureKind::Rdawg,
        StructureKind::Affix,
        StructureKind::Cdawg,
        StructureKind::Scdawg,
        StructureKind::Lstrie,
        StructureKind::Maw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::St => "st",
            StructureKind::Dawg => "dawg",
            StructureKind::Rdawg => "rdawg",
            StructureKind::Affix => "affix",
            StructureKind::Cdawg => "cdawg",
            StructureKind::Scdawg => "scdawg",
            StructureKind::Lstrie => "lstrie",
            StructureKind::Maw => "maw",
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructureKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        StructureKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown structure '{s}'"))
    }
}

/// Size and build time of one structure. `extra` holds a structure-specific
/// count: maximal repeats for compact graphs, type-2 nodes for the trie,
/// words for the absent words.
#[derive(Clone, Debug, Serialize)]
pub struct StructureStats {
    pub name: StructureKind,
    pub n: usize,
    pub nodes: usize,
    pub edges: usize,
    pub slinks: usize,
    pub build_ms: f64,
    #[serde(flatten)]
    pub extra: BTreeMap<&'static str, usize>,
}

/// Everything built for one text. Fields stay `None` unless requested or
/// needed by a requested structure.
#[derive(Debug, Default)]
pub struct Built {
    pub st: Option<SuffixTree>,
    pub weiner: Option<WeinerLinks>,
    pub rdawg: Option<Dawg>,
    /// Moves into the affix tree when one is built.
    pub ast: Option<Ast>,
    pub dawg: Option<ForwardDawg>,
    pub affix: Option<AffixTree>,
    pub mwl: Option<ModifiedWeinerLinks>,
    pub lstrie: Option<LsTrie>,
    pub cdawg: Option<Cdawg>,
    pub scdawg: Option<SymmetricCdawg>,
    pub maws: Option<MawSet>,
    pub stats: Vec<StructureStats>,
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, Duration)> {
    let start = Instant::now();
    let value = f()?;
    Ok((value, start.elapsed()))
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// Builds every structure in `select` plus its prerequisites. Stats are
/// recorded for the selected structures only, each timing its own step.
pub fn build(t: &Text, select: &[StructureKind]) -> Result<Built> {
    use StructureKind as K;
    if select.is_empty() {
        return Err(Error::EmptyInput);
    }
    let wants = |k: K| select.contains(&k);
    let needs_ast = [K::Dawg, K::Affix, K::Cdawg, K::Scdawg, K::Lstrie, K::Maw].iter().any(|&k| wants(k));
    let needs_weiner = [K::Rdawg, K::Scdawg, K::Lstrie].iter().any(|&k| wants(k));
    let needs_dawg = [K::Dawg, K::Cdawg, K::Maw].iter().any(|&k| wants(k));
    let n = t.n();
    let mut b = Built::default();

    let (st, st_time) = timed(|| SuffixTree::build(t))?;
    if wants(K::St) {
        b.stats.push(StructureStats {
            name: K::St,
            n,
            nodes: st.len(),
            edges: st.len() - 1,
            slinks: st.len() - 1,
            build_ms: ms(st_time),
            extra: BTreeMap::new(),
        });
    }

    if needs_weiner {
        let ((wl, rd), time) = timed(|| {
            let wl = weiner_links(&st)?;
            let rd = assemble_reversed_dawg(&st, &wl);
            Ok((wl, rd))
        })?;
        if wants(K::Rdawg) {
            b.stats.push(StructureStats {
                name: K::Rdawg,
                n,
                nodes: rd.num_nodes(),
                edges: rd.num_edges(),
                slinks: rd.num_slinks(),
                build_ms: ms(time),
                extra: BTreeMap::new(),
            });
        }
        b.weiner = Some(wl);
        b.rdawg = Some(rd);
    }

    let mut ast_time = Duration::ZERO;
    let mut rrep = Vec::new();
    if needs_ast {
        let ((ast, r), time) = timed(|| {
            let slt = st.slt_view();
            let black = black_st_nodes(&st, &slt);
            let rrep = if wants(K::Scdawg) { rrep_of_st_nodes(&st, &equal_count_child(&st, &slt)) } else { Vec::new() };
            Ok((build_ast(&st, &black)?, rrep))
        })?;
        ast_time = time;
        rrep = r;
        b.ast = Some(ast);
    }

    if needs_dawg {
        let ast = b.ast.as_ref().expect("ast is built when the dawg is needed");
        let (fd, time) = timed(|| dawg_from_ast(&st, ast))?;
        if wants(K::Dawg) {
            let d = &fd.dawg;
            b.stats.push(StructureStats {
                name: K::Dawg,
                n,
                nodes: d.num_nodes(),
                edges: d.num_edges(),
                slinks: d.num_slinks(),
                build_ms: ms(ast_time + time),
                extra: BTreeMap::new(),
            });
        }
        b.dawg = Some(fd);
    }

    if wants(K::Affix) || wants(K::Lstrie) {
        let ast = b.ast.take().expect("ast is built for the affix tree");
        let (at, time) = timed(|| build_affix_tree(ast, &st))?;
        if wants(K::Affix) {
            b.stats.push(StructureStats {
                name: K::Affix,
                n,
                nodes: at.len(),
                edges: at.num_forward_edges() + at.num_backward_edges(),
                slinks: at.num_backward_edges(),
                build_ms: ms(ast_time + time),
                extra: BTreeMap::new(),
            });
        }
        b.affix = Some(at);
    }

    if wants(K::Lstrie) {
        let (at, wl) = (b.affix.as_ref().unwrap(), b.weiner.as_ref().unwrap());
        let ((mwl, trie), time) = timed(|| {
            let mwl = extract_mwl(at, &st, wl)?;
            let trie = build_lstrie(&st, &mwl)?;
            Ok((mwl, trie))
        })?;
        b.stats.push(StructureStats {
            name: K::Lstrie,
            n,
            nodes: trie.len(),
            edges: trie.num_edges(),
            slinks: trie.len() - 1,
            build_ms: ms(time),
            extra: BTreeMap::from([("type2", trie.num_type2())]),
        });
        b.mwl = Some(mwl);
        b.lstrie = Some(trie);
    }

    if wants(K::Cdawg) {
        let d = &b.dawg.as_ref().unwrap().dawg;
        let (g, time) = timed(|| cdawg_from_dawg(d, t.symbols()))?;
        b.stats.push(StructureStats {
            name: K::Cdawg,
            n,
            nodes: g.num_nodes(),
            edges: g.num_edges(),
            slinks: 0,
            build_ms: ms(time),
            extra: BTreeMap::from([("maximal_repeats", g.internal().count())]),
        });
        b.cdawg = Some(g);
    }

    if wants(K::Scdawg) {
        let ast = b.ast.as_ref().or(b.affix.as_ref().map(|at| at.ast())).unwrap();
        let rd = b.rdawg.as_ref().unwrap();
        let (g, time) = timed(|| build_symmetric_cdawg(&st, ast, &rrep, rd))?;
        b.stats.push(StructureStats {
            name: K::Scdawg,
            n,
            nodes: g.num_nodes(),
            edges: g.num_edges(),
            slinks: 0,
            build_ms: ms(time),
            extra: BTreeMap::from([("maximal_repeats", g.forward.internal().count())]),
        });
        b.scdawg = Some(g);
    }

    if wants(K::Maw) {
        let d = &b.dawg.as_ref().unwrap().dawg;
        let (ms_set, time) = timed(|| compute_maws(d, t))?;
        b.stats.push(StructureStats {
            name: K::Maw,
            n,
            nodes: 0,
            edges: 0,
            slinks: 0,
            build_ms: ms(time),
            extra: BTreeMap::from([("words", ms_set.len())]),
        });
        b.maws = Some(ms_set);
    }

    b.st = Some(st);
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_everything_on_small_input() {
        let t = Text::from_bytes_with_sigma(b"abaab", 3).unwrap();
        let b = build(&t, &StructureKind::ALL).unwrap();
        assert_eq!(b.stats.len(), 8);
        let dawg = b.stats.iter().find(|s| s.name == StructureKind::Dawg).unwrap();
        assert!(dawg.nodes <= 2 * t.n() - 1);
        assert_eq!(b.maws.unwrap().len(), 5);
    }

    #[test]
    fn selection_limits_work() {
        let t = Text::from_bytes(b"abba").unwrap();
        let b = build(&t, &[StructureKind::Dawg]).unwrap();
        assert!(b.rdawg.is_none() && b.affix.is_none());
        assert_eq!((b.stats[0].nodes, b.stats[0].edges), (7, 10));
        assert_eq!("scdawg".parse::<StructureKind>(), Ok(StructureKind::Scdawg));
        assert!("tree".parse::<StructureKind>().is_err());
    }
}
