//! Graphviz, TSV and JSON renderings. Output depends only on the structure,
//! so equal inputs give byte-identical files.

use std::fmt::Write as _;

use serde::Serialize;

use crate::affix::AffixTree;
use crate::cdawg::{Cdawg, SymmetricCdawg};
use crate::dawg::{Dawg, DawgId};
use crate::error::Result;
use crate::lstrie::LsTrie;
use crate::maw::{decode_maws, MawSet};
use crate::pipeline::StructureStats;
use crate::suffix_tree::{NodeId, SuffixTree};
use crate::text::{Code, Text};

/// Texts up to this length get string labels; longer ones get node ids.
pub const DOT_STRING_LIMIT: usize = 64;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

struct Dot<'a> {
    t: &'a Text,
    out: String,
    strings: bool,
}

impl<'a> Dot<'a> {
    fn new(t: &'a Text, name: &str) -> Self {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {name} {{");
        out.push_str("  rankdir=LR;\n  node [shape=circle, fontsize=10];\n");
        Dot { t, out, strings: t.n() <= DOT_STRING_LIMIT }
    }

    fn label(&self, id: u32, s: &[Code]) -> String {
        if !self.strings {
            id.to_string()
        } else if s.is_empty() {
            "ε".to_string()
        } else {
            self.t.render(s)
        }
    }

    fn node(&mut self, id: u32, s: &[Code], attrs: &str) {
        let label = quote(&self.label(id, s));
        let _ = writeln!(self.out, "  n{id} [label={label}{attrs}];");
    }

    fn edge(&mut self, u: u32, v: u32, label: &[Code], attrs: &str) {
        let label = quote(&self.t.render(label));
        let _ = writeln!(self.out, "  n{u} -> n{v} [label={label}{attrs}];");
    }

    fn finish(mut self) -> String {
        self.out.push_str("}\n");
        self.out
    }
}

pub fn st_dot(st: &SuffixTree, t: &Text) -> String {
    let mut dot = Dot::new(t, "suffix_tree");
    for v in 0..st.len() as NodeId {
        let attrs = if st.is_leaf(v) { ", shape=box" } else { "" };
        dot.node(v, st.node_string(v), attrs);
    }
    for v in 1..st.len() as NodeId {
        dot.edge(st.parent(v), v, st.edge_label(v), "");
    }
    for v in 1..st.len() as NodeId {
        let _ = writeln!(dot.out, "  n{v} -> n{} [style=dashed, color=gray];", st.slink(v));
    }
    dot.finish()
}

/// `text` is the text the graph indexes: the input for the forward DAWG, its
/// full reversal for the reversed one.
pub fn dawg_dot(d: &Dawg, text: &[Code], t: &Text, name: &str) -> String {
    let mut dot = Dot::new(t, name);
    for v in 0..d.num_nodes() as DawgId {
        let end = d.endpos(v) as usize + 1;
        let s = &text[end - d.len(v) as usize..end];
        let attrs = if v == d.sink() { ", shape=doublecircle" } else { "" };
        dot.node(v, s, attrs);
    }
    for v in 0..d.num_nodes() as DawgId {
        for (c, w) in d.out_edges(v) {
            dot.edge(v, w, &[c], "");
        }
    }
    for v in 0..d.num_nodes() as DawgId {
        if let Some((s, _)) = d.slink(v) {
            let _ = writeln!(dot.out, "  n{v} -> n{s} [style=dashed, color=gray];");
        }
    }
    dot.finish()
}

/// Forward edges solid, backward edges drawn as double lines.
pub fn affix_dot(at: &AffixTree, t: &Text) -> String {
    let mut dot = Dot::new(t, "affix_tree");
    let ast = at.ast();
    for v in 0..at.len() as NodeId {
        let attrs = if ast.is_black(v) { ", style=filled, fillcolor=gray80" } else { "" };
        dot.node(v, at.node_string(v), attrs);
    }
    for v in 1..at.len() as NodeId {
        let (s, l) = ast.edge_interval(v);
        dot.edge(ast.parent(v), v, &ast.symbols()[s as usize..(s + l) as usize], "");
    }
    for v in 1..at.len() as NodeId {
        dot.edge(at.backward_parent(v), v, at.backward_label(v), ", color=\"black:white:black\"");
    }
    dot.finish()
}

fn compact_edges(dot: &mut Dot<'_>, g: &Cdawg, attrs: &str) {
    for v in 0..g.num_nodes() as u32 {
        for e in g.out_edges(v) {
            dot.edge(v, e.target, g.edge_label(e), attrs);
        }
    }
}

pub fn cdawg_dot(g: &Cdawg, t: &Text) -> String {
    let mut dot = Dot::new(t, "cdawg");
    for v in 0..g.num_nodes() as u32 {
        dot.node(v, g.node_string(v), "");
    }
    compact_edges(&mut dot, g, "");
    dot.finish()
}

pub fn scdawg_dot(g: &SymmetricCdawg, t: &Text) -> String {
    let mut dot = Dot::new(t, "symmetric_cdawg");
    for v in 0..g.num_nodes() as u32 {
        dot.node(v, g.forward.node_string(v), "");
    }
    compact_edges(&mut dot, &g.forward, "");
    compact_edges(&mut dot, &g.backward, ", color=\"black:white:black\"");
    dot.finish()
}

/// Type-2 nodes are drawn striped; their suffix links are dashed.
pub fn lstrie_dot(trie: &LsTrie, t: &Text) -> String {
    let mut dot = Dot::new(t, "linear_size_suffix_trie");
    for v in 0..trie.len() as NodeId {
        let attrs = if trie.is_type2(v) { ", style=striped, fillcolor=\"white:gray70\"" } else { "" };
        dot.node(v, trie.node_string(v), attrs);
    }
    for v in 1..trie.len() as NodeId {
        dot.edge(trie.parent(v), v, &[trie.label(v)], "");
    }
    for v in trie.num_st_nodes() as NodeId..trie.len() as NodeId {
        let _ = writeln!(dot.out, "  n{v} -> n{} [style=dashed, color=gray];", trie.slink(v));
    }
    dot.finish()
}

/// One row per word: `i`, `j`, `b` and, when `decode` is set, the word.
/// Length-one words use `0 0`.
pub fn maw_tsv(ms: &MawSet, t: &Text, decode: bool) -> Result<String> {
    let mut out = String::new();
    let words = if decode { Some(decode_maws(ms, t, false)?) } else { None };
    let word = |k: usize| words.as_ref().map(|w| format!("\t{}", t.render_values(&w[k])));
    for (k, m) in ms.triples.iter().enumerate() {
        let b = t.render_symbol(t.decode(m.b));
        let _ = writeln!(out, "{}\t{}\t{}{}", m.i, m.j, b, word(k).unwrap_or_default());
    }
    for (k, &v) in ms.length1.iter().enumerate() {
        let b = t.render_values(&[v]);
        let _ = writeln!(out, "0\t0\t{}{}", b, word(ms.triples.len() + k).unwrap_or_default());
    }
    Ok(out)
}

#[derive(Serialize)]
struct StatsDoc<'a> {
    schema: u32,
    n: usize,
    declared_sigma: usize,
    structures: &'a [StructureStats],
}

pub fn stats_json(t: &Text, stats: &[StructureStats]) -> String {
    let doc = StatsDoc { schema: 1, n: t.n(), declared_sigma: t.declared_sigma(), structures: stats };
    serde_json::to_string_pretty(&doc).expect("stats serialize") + "\n"
}
