//! Compact DAWG by path compression, and the symmetric CDAWG whose forward and
//! backward edges share one node set.

use crate::dawg::{Dawg, DawgId};
use crate::error::{corrupt, Result};
use crate::forward::Ast;
use crate::suffix_tree::{NodeId, SuffixTree, NIL, ROOT};
use crate::text::Code;

/// Edge of a compact graph: the label is `text[start..start + len]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompactEdge {
    pub first: Code,
    pub start: u32,
    pub len: u32,
    pub target: u32,
}

/// Compact graph with nodes numbered `0..num_nodes()`, each carrying the id
/// it had in the graph it was built from.
#[derive(Clone, Debug)]
pub struct Cdawg {
    text: Vec<Code>,
    origin: Vec<u32>,
    len: Vec<u32>,
    end: Vec<u32>,
    offsets: Vec<u32>,
    edges: Vec<CompactEdge>,
    source: u32,
    sink: u32,
}

impl Cdawg {
    pub fn num_nodes(&self) -> usize {
        self.origin.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn source(&self) -> u32 {
        self.source
    }

    pub fn sink(&self) -> u32 {
        self.sink
    }

    pub fn origin(&self, v: u32) -> u32 {
        self.origin[v as usize]
    }

    pub fn len(&self, v: u32) -> u32 {
        self.len[v as usize]
    }

    pub fn text(&self) -> &[Code] {
        &self.text
    }

    pub fn out_edges(&self, v: u32) -> &[CompactEdge] {
        &self.edges[self.offsets[v as usize] as usize..self.offsets[v as usize + 1] as usize]
    }

    pub fn edge_label(&self, e: &CompactEdge) -> &[Code] {
        &self.text[e.start as usize..(e.start + e.len) as usize]
    }

    /// Longest member of the node, read off the text.
    pub fn node_string(&self, v: u32) -> &[Code] {
        let end = self.end[v as usize] as usize;
        let len = self.len(v) as usize;
        &self.text[end + 1 - len..end + 1]
    }

    /// Nodes other than the source and the sink.
    pub fn internal(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.num_nodes() as u32).filter(move |&v| v != self.source && v != self.sink)
    }

    /// Builds from nodes listed by increasing origin id. `end[v]` is the
    /// 0-based exclusive end of an occurrence of the longest member.
    fn assemble(
        text: Vec<Code>,
        origin: Vec<u32>,
        len: Vec<u32>,
        end_excl: Vec<u32>,
        adjacency: Vec<Vec<CompactEdge>>,
        source: u32,
        sink: u32,
    ) -> Cdawg {
        let mut offsets = Vec::with_capacity(origin.len() + 1);
        offsets.push(0);
        let mut edges = Vec::with_capacity(adjacency.iter().map(Vec::len).sum());
        for list in adjacency {
            edges.extend(list);
            offsets.push(edges.len() as u32);
        }
        let end = end_excl.iter().zip(&len).map(|(&e, &l)| if l == 0 { 0 } else { e - 1 }).collect();
        Cdawg { text, origin, len, end, offsets, edges, source, sink }
    }
}

/// Compacts `d` keeping the source, the sink and every branching node.
pub fn cdawg_from_dawg(d: &Dawg, text: &[Code]) -> Result<Cdawg> {
    let keep: Vec<bool> = (0..d.num_nodes() as DawgId)
        .map(|v| v == d.source() || v == d.sink() || d.out_degree(v) >= 2)
        .collect();
    cdawg_from_dawg_keeping(d, text, &keep)
}

/// Compacts `d` keeping exactly the nodes marked in `keep`, which must include
/// the source, the sink and every branching node.
///
/// Every dropped node has one out-edge. Its nearest kept successor and the
/// distance to it are found by decreasing length, since edges lengthen the
/// longest member. The label of a compact edge into `w` of length `k` ends
/// where the longest member of `w` ends.
pub fn cdawg_from_dawg_keeping(d: &Dawg, text: &[Code], keep: &[bool]) -> Result<Cdawg> {
    let nodes = d.num_nodes();
    if !keep[d.source() as usize] || !keep[d.sink() as usize] {
        return Err(corrupt!("the source and the sink must be kept"));
    }
    let mut order: Vec<DawgId> = (0..nodes as DawgId).collect();
    let max_len = d.len(d.sink()) as usize;
    crate::suffix_tree::counting_sort_by(&mut order, max_len + 1, |v| max_len - d.len(v) as usize);
    let mut next = vec![NIL; nodes];
    let mut dist = vec![0u32; nodes];
    for &v in &order {
        if keep[v as usize] {
            continue;
        }
        if d.out_degree(v) != 1 {
            return Err(corrupt!("dropped DAWG node {v} has out-degree {}", d.out_degree(v)));
        }
        let w = d.out_targets(v)[0];
        (next[v as usize], dist[v as usize]) = if keep[w as usize] {
            (w, 1)
        } else {
            (next[w as usize], dist[w as usize] + 1)
        };
    }

    let mut local = vec![NIL; nodes];
    let origin: Vec<u32> = (0..nodes as DawgId).filter(|&v| keep[v as usize]).collect();
    for (i, &v) in origin.iter().enumerate() {
        local[v as usize] = i as u32;
    }
    let mut adjacency = Vec::with_capacity(origin.len());
    for &u in &origin {
        let list: Vec<CompactEdge> = d
            .out_edges(u)
            .map(|(c, w)| {
                let (target, k) = if keep[w as usize] { (w, 1) } else { (next[w as usize], dist[w as usize] + 1) };
                let end = d.endpos(target) + 1;
                CompactEdge { first: c, start: end - k, len: k, target: local[target as usize] }
            })
            .collect();
        adjacency.push(list);
    }
    let len = origin.iter().map(|&v| d.len(v)).collect();
    let end = origin.iter().map(|&v| d.endpos(v) + 1).collect();
    let (source, sink) = (local[d.source() as usize], local[d.sink() as usize]);
    Ok(Cdawg::assemble(text.to_vec(), origin, len, end, adjacency, source, sink))
}

/// Canonical encoding by breadth-first discovery from the source, edges in
/// first-symbol order, with full label contents. Equal encodings mean
/// isomorphic graphs.
pub fn cdawg_canonical_form(g: &Cdawg) -> Vec<u32> {
    let mut canon = vec![NIL; g.num_nodes()];
    let mut order = vec![g.source()];
    canon[g.source() as usize] = 0;
    let mut out = vec![g.num_nodes() as u32, g.num_edges() as u32];
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        out.push(g.len(v));
        out.push(g.out_edges(v).len() as u32);
        for e in g.out_edges(v) {
            if canon[e.target as usize] == NIL {
                canon[e.target as usize] = order.len() as u32;
                order.push(e.target);
            }
            out.push(e.len);
            out.extend_from_slice(g.edge_label(e));
            out.push(canon[e.target as usize]);
        }
    }
    out.push(order.len() as u32);
    out.push(canon[g.sink() as usize]);
    out
}

pub fn cdawg_isomorphic(a: &Cdawg, b: &Cdawg) -> bool {
    cdawg_canonical_form(a) == cdawg_canonical_form(b)
}

/// Forward and backward compact edges over one node set, identified by
/// suffix-tree node ids. Node `v` of `forward` and node `v` of `backward`
/// are the same string.
#[derive(Clone, Debug)]
pub struct SymmetricCdawg {
    pub forward: Cdawg,
    pub backward: Cdawg,
}

impl SymmetricCdawg {
    pub fn num_nodes(&self) -> usize {
        self.forward.num_nodes()
    }

    pub fn num_edges(&self) -> usize {
        self.forward.num_edges() + self.backward.num_edges()
    }
}

/// Forward edges come from the suffix tree: a maximal repeat `u` has one edge
/// per child `v`, labeled like the tree edge and leading to the maximal
/// repeat of `v`'s end-position class. Backward edges compact the reversed
/// DAWG, which lives on the same ids, keeping exactly the forward node set.
pub fn build_symmetric_cdawg(st: &SuffixTree, ast: &Ast, rrep: &[NodeId], rd: &Dawg) -> Result<SymmetricCdawg> {
    let s = st.len();
    let sink = st.leaf(0);
    let keep: Vec<bool> = (0..s as NodeId)
        .map(|v| v == ROOT || v == sink || (!st.is_leaf(v) && ast.is_black(v)))
        .collect();
    if rd.num_nodes() != s || rd.source() != ROOT || rd.sink() != sink {
        return Err(corrupt!("reversed DAWG does not share the suffix-tree node ids"));
    }
    if let Some(v) = (0..s as NodeId).find(|&v| rd.out_degree(v) >= 2 && !keep[v as usize]) {
        return Err(corrupt!("branching node {v} of the reversed DAWG is not a maximal repeat"));
    }

    let mut local = vec![NIL; s];
    let origin: Vec<u32> = (0..s as NodeId).filter(|&v| keep[v as usize]).collect();
    for (i, &v) in origin.iter().enumerate() {
        local[v as usize] = i as u32;
    }
    let mut adjacency = Vec::with_capacity(origin.len());
    for &u in &origin {
        let mut list = Vec::with_capacity(st.children(u).len());
        for &v in st.children(u) {
            let target = local[rrep[v as usize] as usize];
            if target == NIL {
                return Err(corrupt!("class of node {v} has no maximal repeat"));
            }
            let (start, len) = st.edge_interval(v);
            list.push(CompactEdge { first: st.first_symbol(v), start, len, target });
        }
        adjacency.push(list);
    }
    let len = origin.iter().map(|&v| st.depth(v)).collect();
    let end = origin.iter().map(|&v| st.witness(v) + st.depth(v)).collect();
    let forward = Cdawg::assemble(st.symbols().to_vec(), origin, len, end, adjacency, local[ROOT as usize], local[sink as usize]);

    let rev: Vec<Code> = st.symbols().iter().rev().copied().collect();
    let backward = cdawg_from_dawg_keeping(rd, &rev, &keep)?;
    if (0..forward.num_nodes() as u32).any(|v| forward.origin(v) != backward.origin(v)) {
        return Err(corrupt!("forward and backward node sets differ"));
    }
    Ok(SymmetricCdawg { forward, backward })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forward::{equal_count_child, forward_dawg, rrep_of_st_nodes};
    use crate::text::Text;
    use crate::weiner::{assemble_reversed_dawg, weiner_links};

    fn cdawg(s: &[u8]) -> Cdawg {
        let t = Text::from_bytes(s).unwrap();
        let st = SuffixTree::build(&t).unwrap();
        let (_, fd) = forward_dawg(&st).unwrap();
        cdawg_from_dawg(&fd.dawg, t.symbols()).unwrap()
    }

    #[test]
    fn small_compactions() {
        let g = cdawg(b"abba");
        assert_eq!(g.num_nodes(), 4);
        let mut internal: Vec<&[Code]> = g.internal().map(|v| g.node_string(v)).collect();
        internal.sort();
        assert_eq!(internal, vec![&[1][..], &[2][..]]);

        let g = cdawg(b"a");
        assert_eq!((g.num_nodes(), g.num_edges()), (2, 2));
        let labels: Vec<&[Code]> = g.out_edges(g.source()).iter().map(|e| g.edge_label(e)).collect();
        assert_eq!(labels, vec![&[0][..], &[1, 0][..]]);

        let g = cdawg(b"aaa");
        let mut internal: Vec<&[Code]> = g.internal().map(|v| g.node_string(v)).collect();
        internal.sort();
        assert_eq!(internal, vec![&[1][..], &[1, 1][..]]);
    }

    #[test]
    fn symmetric_forward_part_matches_compaction() {
        for s in [&b"abba"[..], b"aabcabcab", b"abab", b"aaa"] {
            let t = Text::from_bytes(s).unwrap();
            let st = SuffixTree::build(&t).unwrap();
            let (ast, fd) = forward_dawg(&st).unwrap();
            let rrep = rrep_of_st_nodes(&st, &equal_count_child(&st, &st.slt_view()));
            let rd = assemble_reversed_dawg(&st, &weiner_links(&st).unwrap());
            let sym = build_symmetric_cdawg(&st, &ast, &rrep, &rd).unwrap();
            assert!(cdawg_isomorphic(&sym.forward, &cdawg_from_dawg(&fd.dawg, t.symbols()).unwrap()));
            for v in 0..sym.num_nodes() as u32 {
                let f = sym.forward.node_string(v).to_vec();
                let mut b = sym.backward.node_string(v).to_vec();
                b.reverse();
                assert_eq!(f, b);
            }
        }
    }
}
