//! Forward DAWG from the suffix tree.
//!
//! A string is black when it is the longest member of its end-position class.
//! Black suffix-tree nodes are found from leaf counts along suffix links, the
//! augmented tree (AST) adds every black string that falls inside an edge,
//! and the DAWG is read off the AST by following one suffix-link chain per
//! black suffix-tree node.

use crate::dawg::{sort_dawg, Dawg, DawgId, DawgParts, NO_LINK};
use crate::error::{corrupt, Result};
use crate::suffix_tree::{counting_sort_by, NodeId, SuffixLinkTreeView, SuffixTree, NIL, ROOT};
use crate::text::Code;

/// `black[x]` for every suffix-tree node: `x` has no suffix-link child with
/// the same number of occurrences.
pub fn black_st_nodes(st: &SuffixTree, slt: &SuffixLinkTreeView) -> Vec<bool> {
    equal_count_child(st, slt).into_iter().map(|c| c == NIL).collect()
}

/// For a white node, its unique suffix-link child with equal leaf count.
/// At most one such child exists because occurrences preceded by different
/// symbols are disjoint.
pub fn equal_count_child(st: &SuffixTree, slt: &SuffixLinkTreeView) -> Vec<NodeId> {
    (0..st.len() as NodeId)
        .map(|x| {
            slt.children(x)
                .iter()
                .copied()
                .find(|&c| st.leaf_count(c) == st.leaf_count(x))
                .unwrap_or(NIL)
        })
        .collect()
}

/// For every suffix-tree node, the black node of its end-position class.
pub fn rrep_of_st_nodes(st: &SuffixTree, eq_child: &[NodeId]) -> Vec<NodeId> {
    let mut order: Vec<NodeId> = (0..st.len() as NodeId).collect();
    let n = st.n();
    counting_sort_by(&mut order, n + 1, |v| n - st.depth(v) as usize);
    let mut rrep = vec![NIL; st.len()];
    for v in order {
        let c = eq_child[v as usize];
        rrep[v as usize] = if c == NIL { v } else { rrep[c as usize] };
    }
    rrep
}

/// Suffix tree plus every black string that lies inside an edge.
///
/// Suffix-tree nodes keep their ids. The interior black nodes on the edge
/// into a black node `v` are numbered consecutively from
/// `implicit_base(v)`, shallowest first.
#[derive(Clone, Debug)]
pub struct Ast {
    symbols: Vec<Code>,
    st_nodes: usize,
    depth: Vec<u32>,
    parent: Vec<NodeId>,
    black: Vec<bool>,
    lower: Vec<NodeId>,
    witness: Vec<u32>,
    implicit_base: Vec<u32>,
    child_offsets: Vec<u32>,
    children: Vec<NodeId>,
}

impl Ast {
    pub fn len(&self) -> usize {
        self.depth.len()
    }

    pub fn is_empty(&self) -> bool {
        self.depth.is_empty()
    }

    pub fn num_st_nodes(&self) -> usize {
        self.st_nodes
    }

    pub fn is_st_node(&self, v: NodeId) -> bool {
        (v as usize) < self.st_nodes
    }

    pub fn num_black(&self) -> usize {
        self.black.iter().filter(|&&b| b).count()
    }

    pub fn depth(&self, v: NodeId) -> u32 {
        self.depth[v as usize]
    }

    pub fn parent(&self, v: NodeId) -> NodeId {
        self.parent[v as usize]
    }

    pub fn is_black(&self, v: NodeId) -> bool {
        self.black[v as usize]
    }

    /// The suffix-tree node at or below `v` on the same edge.
    pub fn lower(&self, v: NodeId) -> NodeId {
        self.lower[v as usize]
    }

    /// 0-based text position where the string of `v` starts.
    pub fn witness(&self, v: NodeId) -> u32 {
        self.witness[v as usize]
    }

    pub fn children(&self, v: NodeId) -> &[NodeId] {
        let v = v as usize;
        &self.children[self.child_offsets[v] as usize..self.child_offsets[v + 1] as usize]
    }

    pub fn symbols(&self) -> &[Code] {
        &self.symbols
    }

    pub fn node_string(&self, v: NodeId) -> &[Code] {
        let s = self.witness(v) as usize;
        &self.symbols[s..s + self.depth(v) as usize]
    }

    /// Label of the edge into `v` as a 0-based `(start, len)` interval.
    pub fn edge_interval(&self, v: NodeId) -> (u32, u32) {
        let pd = self.depth(self.parent(v));
        (self.witness(v) + pd, self.depth(v) - pd)
    }

    pub fn first_symbol(&self, v: NodeId) -> Code {
        self.symbols[self.edge_interval(v).0 as usize]
    }

    /// Node on the edge into the black suffix-tree node `x` at depth
    /// `depth(parent(x)) + t`, for `1 <= t <= d(x)`.
    pub fn path_node(&self, x: NodeId, t: u32) -> NodeId {
        let p = self.st_parent_depth(x);
        if p + t == self.depth(x) {
            x
        } else {
            self.implicit_base[x as usize] + t - 1
        }
    }

    /// Node whose string is exactly `s`, if any.
    pub fn find(&self, s: &[Code]) -> Option<NodeId> {
        let mut v = ROOT;
        while (self.depth(v) as usize) < s.len() {
            let c = s[self.depth(v) as usize];
            let kids = self.children(v);
            let i = kids.binary_search_by_key(&c, |&k| self.first_symbol(k)).ok()?;
            v = kids[i];
            let d = (self.depth(v) as usize).min(s.len());
            if self.node_string(v)[..d] != s[..d] {
                return None;
            }
        }
        (self.depth(v) as usize == s.len()).then_some(v)
    }

    fn st_parent_depth(&self, x: NodeId) -> u32 {
        let base = self.implicit_base[x as usize];
        if base == NIL {
            self.depth(self.parent(x))
        } else {
            self.depth(self.parent(base))
        }
    }
}

/// Inserts every interior position of an edge into a black node as a black
/// node. Fails if a white node has a black child, which would contradict the
/// prefix closure of black strings.
pub fn build_ast(st: &SuffixTree, black: &[bool]) -> Result<Ast> {
    let s = st.len();
    let mut implicit_base = vec![NIL; s];
    let mut total = s as u32;
    for v in 1..s as NodeId {
        let p = st.parent(v);
        if black[v as usize] && !black[p as usize] {
            return Err(corrupt!("white node {p} has black child {v}"));
        }
        let inner = st.depth(v) - st.depth(p) - 1;
        if black[v as usize] && inner > 0 {
            implicit_base[v as usize] = total;
            total += inner;
        }
    }
    let total = total as usize;
    let mut depth = Vec::with_capacity(total);
    let mut parent = vec![NIL; total];
    let mut lower = Vec::with_capacity(total);
    let mut witness = Vec::with_capacity(total);
    let mut is_black = Vec::with_capacity(total);
    for v in 0..s as NodeId {
        depth.push(st.depth(v));
        lower.push(v);
        witness.push(st.witness(v));
        is_black.push(black[v as usize]);
    }
    let mut child_offsets = vec![0u32; total + 1];
    for v in 0..s as NodeId {
        child_offsets[v as usize + 1] = st.children(v).len() as u32;
    }
    for v in 1..s as NodeId {
        let base = implicit_base[v as usize];
        if base == NIL {
            parent[v as usize] = st.parent(v);
            continue;
        }
        let p = st.parent(v);
        let inner = st.depth(v) - st.depth(p) - 1;
        for k in 0..inner {
            depth.push(st.depth(p) + k + 1);
            lower.push(v);
            witness.push(st.witness(v));
            is_black.push(true);
            parent[(base + k) as usize] = if k == 0 { p } else { base + k - 1 };
            child_offsets[(base + k) as usize + 1] = 1;
        }
        parent[v as usize] = base + inner - 1;
    }
    for i in 0..total {
        child_offsets[i + 1] += child_offsets[i];
    }
    let mut children = vec![NIL; child_offsets[total] as usize];
    for v in 0..s as NodeId {
        let at = child_offsets[v as usize] as usize;
        for (slot, &c) in children[at..].iter_mut().zip(st.children(v)) {
            let base = implicit_base[c as usize];
            *slot = if base == NIL { c } else { base };
        }
        let base = implicit_base[v as usize];
        if base != NIL {
            let inner = (st.depth(v) - st.depth(st.parent(v)) - 1) as usize;
            for k in 0..inner {
                let next = if k + 1 == inner { v } else { base + k as u32 + 1 };
                children[child_offsets[base as usize + k] as usize] = next;
            }
        }
    }
    Ok(Ast {
        symbols: st.symbols().to_vec(),
        st_nodes: s,
        depth,
        parent,
        black: is_black,
        lower,
        witness,
        implicit_base,
        child_offsets,
        children,
    })
}

/// Splits a chain `s_0, ..., s_{m-1}` of white suffix-link successors into
/// blocks. Consecutive members share a block iff their edge lengths are equal
/// and their parents occur equally often. Returns the start index of every
/// block. Fails if edge lengths increase along the chain.
pub fn partition_chain(st: &SuffixTree, chain: &[NodeId]) -> Result<Vec<usize>> {
    let d = |v: NodeId| st.depth(v) - st.depth(st.parent(v));
    let mut starts = Vec::new();
    for (i, &s) in chain.iter().enumerate() {
        if i == 0 {
            starts.push(0);
            continue;
        }
        let prev = chain[i - 1];
        if d(s) > d(prev) {
            return Err(corrupt!("edge lengths increase along the chain at node {s}"));
        }
        if d(s) != d(prev) || st.leaf_count(st.parent(s)) != st.leaf_count(st.parent(prev)) {
            starts.push(i);
        }
    }
    Ok(starts)
}

/// Follows suffix links from the black node `x` while the leaf count stays
/// equal. Fills `chain` with `s_0 = x, ..., s_{m-1}` and `dl` with their edge
/// lengths; returns `s_m`, the first node occurring more often.
fn chain_of(st: &SuffixTree, x: NodeId, chain: &mut Vec<NodeId>, dl: &mut Vec<u32>) -> Result<NodeId> {
    chain.clear();
    chain.push(x);
    let count = st.leaf_count(x);
    let mut s = st.slink(x);
    while st.leaf_count(s) == count {
        if chain.len() > st.n() {
            return Err(corrupt!("suffix-link chain from node {x} does not end"));
        }
        chain.push(s);
        s = st.slink(s);
    }
    dl.clear();
    dl.extend(chain.iter().map(|&c| st.depth(c) - st.depth(st.parent(c))));
    Ok(s)
}

/// Suffix links of all black AST nodes, with their labels.
#[derive(Clone, Debug)]
pub struct AstLinks {
    /// Target AST node, [`NIL`] for the root and for white nodes.
    pub target: Vec<NodeId>,
    /// First symbol of the shortest member of the source's class.
    pub label: Vec<Code>,
}

/// Computes the suffix link of every black non-root AST node as an AST node.
///
/// For the nodes `x_1, ..., x_d` on the edge into the black suffix-tree node
/// `x`, the link of `x_t` is the black ancestor of `s_k` at depth
/// `|s_k| - (d - t)`, where `s_0 = x, s_1, ...` is the suffix-link chain of `x`
/// and `k` counts the chain members with edge length above `d - t`. Each run
/// of `t` with the same `k` is a single upward walk, so the pass is linear.
/// Links are write-once: a conflicting second assignment is an error.
pub fn ast_suffix_links(st: &SuffixTree, ast: &Ast) -> Result<AstLinks> {
    walk_chains(st, ast, None)
}

/// One pass over the suffix-link chains of the black suffix-tree nodes.
/// Always fills the AST suffix links; with `edges`, also collects the DAWG
/// edges described at [`dawg_from_ast`] as AST node pairs.
fn walk_chains(st: &SuffixTree, ast: &Ast, mut edges: Option<&mut Vec<(NodeId, Code, NodeId)>>) -> Result<AstLinks> {
    let total = ast.len();
    let mut target = vec![NIL; total];
    let mut label = vec![0 as Code; total];
    let symbols = st.symbols();
    let (mut chain, mut dl) = (Vec::new(), Vec::new());
    for x in 1..st.len() as NodeId {
        if !ast.is_black(x) {
            continue;
        }
        let p = st.parent(x);
        let d0 = st.depth(x) - st.depth(p);
        let wx = st.witness(x);
        let s_m = chain_of(st, x, &mut chain, &mut dl)?;
        let m = chain.len();
        for j in 1..=m {
            if j < m && dl[j] == dl[j - 1] {
                continue;
            }
            let (dj, mut v, top_len) = if j < m {
                (dl[j], st.parent(chain[j]), st.depth(chain[j]))
            } else {
                (0, s_m, st.depth(s_m))
            };
            let a = symbols[(wx + j as u32 - 1) as usize];
            let (t_lo, t_hi) = (d0 - dl[j - 1] + 1, d0 - dj);
            for t in (t_lo..=t_hi).rev() {
                if ast.depth(v) != top_len - (d0 - t) || !ast.is_black(v) {
                    return Err(corrupt!("no black node for the suffix link of depth {t} below node {x}"));
                }
                let xt = ast.path_node(x, t) as usize;
                if target[xt] != NIL && (target[xt] != v || label[xt] != a) {
                    return Err(corrupt!("conflicting suffix links for AST node {xt}"));
                }
                target[xt] = v;
                label[xt] = a;
                if t > t_lo {
                    v = ast.parent(v);
                }
            }
        }
        let Some(edges) = edges.as_deref_mut() else { continue };
        for t in 1..=d0 {
            let src = if t == 1 { p } else { ast.path_node(x, t - 1) };
            edges.push((src, symbols[(wx + st.depth(p) + t - 1) as usize], ast.path_node(x, t)));
        }
        for i in partition_chain(st, &chain)?.into_iter().skip(1) {
            let src = st.parent(chain[i]);
            if !ast.is_black(src) {
                return Err(corrupt!("block source {src} in the chain of node {x} is white"));
            }
            edges.push((src, st.first_symbol(chain[i]), ast.path_node(x, d0 - dl[i] + 1)));
        }
    }
    for v in 1..total as NodeId {
        if ast.is_black(v) && target[v as usize] == NIL {
            return Err(corrupt!("black AST node {v} has no suffix link"));
        }
    }
    Ok(AstLinks { target, label })
}

/// The forward DAWG together with its correspondence to the AST.
#[derive(Clone, Debug)]
pub struct ForwardDawg {
    pub dawg: Dawg,
    /// AST id of every DAWG node.
    pub ast_of: Vec<NodeId>,
    /// DAWG id of every black AST node, [`NO_LINK`] for white ones.
    pub dawg_of: Vec<DawgId>,
    pub links: AstLinks,
}

/// Builds the DAWG whose nodes are the black AST nodes.
///
/// For a black suffix-tree node `x` with parent `p`, the nodes `x_1, ..., x_d`
/// on the edge `p -> x` are targets of the trie edges along it and of one edge
/// per block of the chain `x = s_0, slink(s_0), ...` that stops at the first
/// node `s_m` occurring more often than `x`. The block starting at `s_i`
/// contributes `(parent(s_i), b_i, x_{d - d(s_i) + 1})`; the block of `s_0`
/// is the first trie edge. Suffix links come from [`ast_suffix_links`].
pub fn dawg_from_ast(st: &SuffixTree, ast: &Ast) -> Result<ForwardDawg> {
    let total = ast.len();
    let mut dawg_of = vec![NO_LINK; total];
    let mut ast_of = Vec::with_capacity(ast.num_black());
    for v in 0..total as NodeId {
        if ast.is_black(v) {
            dawg_of[v as usize] = ast_of.len() as DawgId;
            ast_of.push(v);
        }
    }
    let mut edges: Vec<(NodeId, Code, NodeId)> = Vec::with_capacity(3 * st.n());
    let links = walk_chains(st, ast, Some(&mut edges))?;

    let mut parts = DawgParts {
        len: Vec::with_capacity(ast_of.len()),
        endpos: Vec::with_capacity(ast_of.len()),
        slink: Vec::with_capacity(ast_of.len()),
        slink_label: Vec::with_capacity(ast_of.len()),
        edges: Vec::with_capacity(edges.len()),
        source: 0,
        sink: dawg_of[st.leaf(0) as usize],
    };
    for &v in &ast_of {
        let len = ast.depth(v);
        parts.len.push(len);
        parts.endpos.push((ast.witness(v) + len).saturating_sub(1));
        if v == ROOT {
            parts.slink.push(NO_LINK);
            parts.slink_label.push(0);
        } else {
            parts.slink.push(dawg_of[links.target[v as usize] as usize]);
            parts.slink_label.push(links.label[v as usize]);
        }
    }
    parts.edges.extend(
        edges
            .iter()
            .map(|&(u, c, v)| (dawg_of[u as usize], c, dawg_of[v as usize])),
    );
    let dawg = sort_dawg(Dawg::from_parts(parts));
    for v in 0..dawg.num_nodes() as DawgId {
        if dawg.out_labels(v).windows(2).any(|w| w[0] == w[1]) {
            return Err(corrupt!("two edges share a label at DAWG node {v}"));
        }
    }
    Ok(ForwardDawg { dawg, ast_of, dawg_of, links })
}

/// Suffix tree to forward DAWG in one call.
pub fn forward_dawg(st: &SuffixTree) -> Result<(Ast, ForwardDawg)> {
    let slt = st.slt_view();
    let black = black_st_nodes(st, &slt);
    let ast = build_ast(st, &black)?;
    let fd = dawg_from_ast(st, &ast)?;
    Ok((ast, fd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::Text;

    fn codes(s: &str) -> Vec<Code> {
        // Texts in these tests use the letters a < b < c only.
        s.bytes().map(|b| if b == b'$' { 0 } else { (b - b'a' + 1) as Code }).collect()
    }

    #[test]
    fn abba_black_nodes_and_ast() {
        let t = Text::from_bytes(b"abba").unwrap();
        let st = SuffixTree::build(&t).unwrap();
        let black = black_st_nodes(&st, &st.slt_view());
        let black_strings: Vec<Vec<Code>> = (0..st.len() as NodeId)
            .filter(|&v| black[v as usize])
            .map(|v| st.node_string(v).to_vec())
            .collect();
        let mut expect = vec![codes(""), codes("a"), codes("b"), codes("abba$")];
        expect.sort();
        let mut got = black_strings;
        got.sort();
        assert_eq!(got, expect);
        let bba = st.find_node(&codes("bba$")).unwrap();
        assert!(!black[bba as usize]);

        let ast = build_ast(&st, &black).unwrap();
        assert_eq!(ast.len(), 11);
        assert_eq!(ast.num_black(), 7);
        for s in ["ab", "abb", "abba"] {
            let v = ast.find(&codes(s)).unwrap();
            assert!(!ast.is_st_node(v) && ast.is_black(v));
        }
    }

    #[test]
    fn single_symbol_ast() {
        let t = Text::from_bytes(b"a").unwrap();
        let st = SuffixTree::build(&t).unwrap();
        let black = black_st_nodes(&st, &st.slt_view());
        assert!(black[ROOT as usize] && black[st.leaf(0) as usize] && !black[st.leaf(1) as usize]);
        let ast = build_ast(&st, &black).unwrap();
        assert_eq!(ast.len(), 4);
        assert!(ast.is_black(ast.find(&codes("a")).unwrap()));
    }

    #[test]
    fn abba_chain_blocks() {
        let t = Text::from_bytes(b"abba").unwrap();
        let st = SuffixTree::build(&t).unwrap();
        let chain: Vec<NodeId> = (0..5).map(|i| st.leaf(i)).collect();
        assert_eq!(partition_chain(&st, &chain).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(partition_chain(&st, &chain[..1]).unwrap(), vec![0]);
    }

    #[test]
    fn abba_dawg() {
        let t = Text::from_bytes(b"abba").unwrap();
        let st = SuffixTree::build(&t).unwrap();
        let (ast, fd) = forward_dawg(&st).unwrap();
        let d = &fd.dawg;
        assert_eq!((d.num_nodes(), d.num_edges()), (7, 10));
        let node = |s: &str| fd.dawg_of[ast.find(&codes(s)).unwrap() as usize];
        let walk = |s: &str| d.walk(&codes(s)).unwrap();
        assert_eq!(walk("bb"), node("abb"));
        assert_eq!(walk("bba"), node("abba"));
        assert_eq!(walk("ba$"), node("abba$"));
        assert_eq!(d.slink(node("abb")), Some((node("b"), 2)));
        assert_eq!(d.slink(node("abba")), Some((node("a"), 2)));
        assert_eq!(d.sink(), node("abba$"));
        assert_eq!(d.shortlen(node("abba$")), 1);
    }
}
