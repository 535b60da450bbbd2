//! Affix tree: the AST read forward, and its suffix links read backward.
//!
//! Every node is a string that is a suffix-tree node or the longest member of
//! its end-position class. Forward edges are the AST edges. The backward
//! parent of a node is its longest proper suffix that is again a node, so the
//! backward edges form the suffix tree of the reversed text over the same
//! node set. Backward labels are intervals of the full reversal of the text.

use crate::error::{corrupt, Result};
use crate::forward::{ast_suffix_links, Ast};
use crate::suffix_tree::{sort_groups_by, NodeId, SuffixTree, NIL, ROOT};
use crate::text::Code;
use crate::weiner::WeinerLinks;

#[derive(Clone, Debug)]
pub struct AffixTree {
    ast: Ast,
    rev_symbols: Vec<Code>,
    back_parent: Vec<NodeId>,
    back_offsets: Vec<u32>,
    back_children: Vec<NodeId>,
}

/// Position of a string in the affix tree: the shallowest node in the
/// direction of travel whose string extends it, and the string's length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cursor {
    pub node: NodeId,
    pub depth: u32,
}

/// Suffix-tree nodes link along their suffix links; the other black AST
/// nodes get the link computed for the DAWG, applied to the tree directly.
pub fn build_affix_tree(ast: Ast, st: &SuffixTree) -> Result<AffixTree> {
    let links = ast_suffix_links(st, &ast)?;
    let total = ast.len();
    let n = st.n();
    let mut back_parent = vec![NIL; total];
    for v in 1..total as NodeId {
        back_parent[v as usize] = if ast.is_st_node(v) {
            st.slink(v)
        } else {
            links.target[v as usize]
        };
        if back_parent[v as usize] == NIL {
            return Err(corrupt!("affix node {v} has no suffix link"));
        }
    }
    let rev_symbols: Vec<Code> = st.symbols().iter().rev().copied().collect();

    // Sort key: the last symbol of the prepended string, which is the first
    // symbol of the reversed label.
    let mut key = vec![0 as Code; total];
    for v in 1..total as NodeId {
        let k = ast.depth(v) - ast.depth(back_parent[v as usize]);
        key[v as usize] = st.symbols()[(ast.witness(v) + k - 1) as usize];
    }
    let range = st.symbols().iter().copied().max().unwrap_or(0) as usize + 1;
    let mut back_offsets = vec![0u32; total + 1];
    for &p in &back_parent[1..] {
        back_offsets[p as usize + 1] += 1;
    }
    for i in 0..total {
        back_offsets[i + 1] += back_offsets[i];
    }
    let mut fill = back_offsets.clone();
    let mut back_children = vec![NIL; total - 1];
    for v in 1..total as NodeId {
        let p = back_parent[v as usize] as usize;
        back_children[fill[p] as usize] = v;
        fill[p] += 1;
    }
    drop(fill);
    sort_groups_by(&mut back_children, &back_offsets, range, |&v| key[v as usize] as usize);
    let at = AffixTree { ast, rev_symbols, back_parent, back_offsets, back_children };
    for v in 0..total as NodeId {
        let kids = at.backward_children(v);
        if kids.windows(2).any(|w| key[w[0] as usize] == key[w[1] as usize]) {
            return Err(corrupt!("two backward edges of node {v} share a first symbol"));
        }
    }
    debug_assert_eq!(at.rev_symbols.len(), n);
    Ok(at)
}

impl AffixTree {
    pub fn ast(&self) -> &Ast {
        &self.ast
    }

    pub fn len(&self) -> usize {
        self.ast.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ast.is_empty()
    }

    pub fn num_forward_edges(&self) -> usize {
        self.ast.len() - 1
    }

    pub fn num_backward_edges(&self) -> usize {
        self.back_children.len()
    }

    pub fn depth(&self, v: NodeId) -> u32 {
        self.ast.depth(v)
    }

    pub fn node_string(&self, v: NodeId) -> &[Code] {
        self.ast.node_string(v)
    }

    pub fn forward_children(&self, v: NodeId) -> &[NodeId] {
        self.ast.children(v)
    }

    pub fn backward_parent(&self, v: NodeId) -> NodeId {
        self.back_parent[v as usize]
    }

    pub fn backward_children(&self, v: NodeId) -> &[NodeId] {
        let v = v as usize;
        &self.back_children[self.back_offsets[v] as usize..self.back_offsets[v + 1] as usize]
    }

    /// Label of the backward edge into `v` as a 0-based `(start, len)`
    /// interval of the reversed text.
    pub fn backward_interval(&self, v: NodeId) -> (u32, u32) {
        let k = self.depth(v) - self.depth(self.backward_parent(v));
        let n = self.rev_symbols.len() as u32;
        (n - self.ast.witness(v) - k, k)
    }

    pub fn backward_label(&self, v: NodeId) -> &[Code] {
        let (s, k) = self.backward_interval(v);
        &self.rev_symbols[s as usize..(s + k) as usize]
    }

    pub fn reversed_symbols(&self) -> &[Code] {
        &self.rev_symbols
    }

    pub fn root_cursor(&self) -> Cursor {
        Cursor { node: ROOT, depth: 0 }
    }

    /// Appends `b` to the string at `cur`, following forward edges.
    pub fn extend_right(&self, cur: Cursor, b: Code) -> Option<Cursor> {
        let v = cur.node;
        if cur.depth == self.depth(v) {
            let kids = self.ast.children(v);
            let i = kids.binary_search_by_key(&b, |&k| self.ast.first_symbol(k)).ok()?;
            Some(Cursor { node: kids[i], depth: cur.depth + 1 })
        } else {
            let s = self.ast.symbols()[(self.ast.witness(v) + cur.depth) as usize];
            (s == b).then_some(Cursor { node: v, depth: cur.depth + 1 })
        }
    }

    /// Prepends `a` to the string at `cur`, following backward edges. The
    /// string at a backward cursor is the length-`depth` suffix of its node.
    pub fn extend_left(&self, cur: Cursor, a: Code) -> Option<Cursor> {
        let v = cur.node;
        let text = self.ast.symbols();
        if cur.depth == self.depth(v) {
            let kids = self.backward_children(v);
            let first = |k: NodeId| {
                let len = self.depth(k) - self.depth(v);
                text[(self.ast.witness(k) + len - 1) as usize]
            };
            let i = kids.binary_search_by_key(&a, |&k| first(k)).ok()?;
            Some(Cursor { node: kids[i], depth: cur.depth + 1 })
        } else {
            let s = text[(self.ast.witness(v) + self.depth(v) - cur.depth - 1) as usize];
            (s == a).then_some(Cursor { node: v, depth: cur.depth + 1 })
        }
    }

    /// Forward cursor of `s`, read left to right from the root.
    pub fn locate_forward(&self, s: &[Code]) -> Option<Cursor> {
        s.iter().try_fold(self.root_cursor(), |c, &b| self.extend_right(c, b))
    }

    /// Backward cursor of `s`, read right to left from the root.
    pub fn locate_backward(&self, s: &[Code]) -> Option<Cursor> {
        s.iter().rev().try_fold(self.root_cursor(), |c, &a| self.extend_left(c, a))
    }
}

/// A modified Weiner link `(x, a, ax)`: the target is the position of `ax`,
/// given as the suffix-tree node at or below it and its depth.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModifiedWeinerLink {
    pub symbol: Code,
    pub lower: NodeId,
    pub depth: u32,
    pub explicit: bool,
}

#[derive(Clone, Debug)]
pub struct ModifiedWeinerLinks {
    offsets: Vec<u32>,
    links: Vec<ModifiedWeinerLink>,
}

impl ModifiedWeinerLinks {
    pub fn of(&self, x: NodeId) -> &[ModifiedWeinerLink] {
        &self.links[self.offsets[x as usize] as usize..self.offsets[x as usize + 1] as usize]
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    pub fn num_nodes(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, ModifiedWeinerLink)> + '_ {
        (0..self.num_nodes() as NodeId).flat_map(move |x| self.of(x).iter().map(move |&l| (x, l)))
    }

    pub fn implicit(&self) -> impl Iterator<Item = (NodeId, ModifiedWeinerLink)> + '_ {
        self.iter().filter(|(_, l)| !l.explicit)
    }
}

/// Reads the modified Weiner links of every suffix-tree node `x` off its
/// backward edges. The backward child `αx` yields the link by the last symbol
/// `a` of `α`; it is explicit iff `αx` is a suffix-tree node, which forces
/// `|α| = 1`. The position of `ax` lies on the edge into the target of the
/// Weiner link `(x, a)`, which has the same symbol set.
pub fn extract_mwl(at: &AffixTree, st: &SuffixTree, wl: &WeinerLinks) -> Result<ModifiedWeinerLinks> {
    let s = st.len();
    let mut offsets = vec![0u32; s + 1];
    let mut links = Vec::with_capacity(wl.len());
    for x in 0..s as NodeId {
        let kids = at.backward_children(x);
        let weiner = wl.of(x);
        if kids.len() != weiner.len() {
            return Err(corrupt!("node {x} has {} backward edges but {} Weiner links", kids.len(), weiner.len()));
        }
        let dx = st.depth(x);
        let rev = at.reversed_symbols();
        for (&child, w) in kids.iter().zip(weiner) {
            // Same as `backward_label(child)`, whose backward parent is `x`.
            let k = at.depth(child) - dx;
            if rev[rev.len() - (at.ast().witness(child) + k) as usize] != w.symbol {
                return Err(corrupt!("backward edge and Weiner link of node {x} disagree"));
            }
            let explicit = at.ast().is_st_node(child);
            if explicit && k != 1 {
                return Err(corrupt!("explicit backward edge into {child} has a long label"));
            }
            if explicit != w.explicit {
                return Err(corrupt!("link kinds of node {x} by symbol {} disagree", w.symbol));
            }
            links.push(ModifiedWeinerLink { symbol: w.symbol, lower: w.target, depth: dx + 1, explicit });
        }
        offsets[x as usize + 1] = links.len() as u32;
    }
    Ok(ModifiedWeinerLinks { offsets, links })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forward::{black_st_nodes, build_ast};
    use crate::text::Text;
    use crate::weiner::weiner_links;

    fn affix(s: &[u8]) -> (SuffixTree, AffixTree) {
        let t = Text::from_bytes(s).unwrap();
        let st = SuffixTree::build(&t).unwrap();
        let black = black_st_nodes(&st, &st.slt_view());
        let ast = build_ast(&st, &black).unwrap();
        let at = build_affix_tree(ast, &st).unwrap();
        (st, at)
    }

    #[test]
    fn single_symbol_backward_edges() {
        // Nodes: root, "a", "a$", "$". Backward: root -> a (label a),
        // root -> $ (label $), $ -> a$ (label a).
        let (st, at) = affix(b"a");
        assert_eq!(at.len(), 4);
        assert_eq!(at.num_backward_edges(), 3);
        let a = at.ast().find(&[1]).unwrap();
        assert_eq!(at.backward_parent(a), ROOT);
        assert_eq!(at.backward_label(a), &[1]);
        assert_eq!(at.backward_parent(st.leaf(0)), st.leaf(1));
        assert_eq!(at.backward_label(st.leaf(0)), &[1]);
    }

    #[test]
    fn walks_agree_on_nodes() {
        let (_, at) = affix(b"aabcabcab");
        for v in 0..at.len() as NodeId {
            let s = at.node_string(v).to_vec();
            let f = at.locate_forward(&s).unwrap();
            let b = at.locate_backward(&s).unwrap();
            assert_eq!((f.node, f.depth), (v, s.len() as u32));
            assert_eq!((b.node, b.depth), (v, s.len() as u32));
        }
        assert!(at.locate_forward(&[3, 3]).is_none());
        assert!(at.locate_backward(&[3, 3]).is_none());
    }

    #[test]
    fn modified_links_cover_left_extensions() {
        let t = Text::from_bytes(b"abba").unwrap();
        let st = SuffixTree::build(&t).unwrap();
        let wl = weiner_links(&st).unwrap();
        let black = black_st_nodes(&st, &st.slt_view());
        let at = build_affix_tree(build_ast(&st, &black).unwrap(), &st).unwrap();
        let mwl = extract_mwl(&at, &st, &wl).unwrap();
        assert_eq!(mwl.len(), wl.len());
        for (x, l) in mwl.iter() {
            let mut ax = vec![l.symbol];
            ax.extend_from_slice(st.node_string(x));
            let (lower, depth) = st.locate(&ax).unwrap();
            assert_eq!((lower, depth as u32), (l.lower, l.depth));
            assert_eq!(l.explicit, st.depth(lower) == depth as u32);
        }
    }
}
