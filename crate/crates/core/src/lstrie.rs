//! Linear-size suffix trie: the suffix tree with one extra node per implicit
//! modified Weiner link target, edge labels cut down to one symbol.

use crate::affix::ModifiedWeinerLinks;
use crate::error::{corrupt, Result};
use crate::suffix_tree::{sort_groups_by, NodeId, SuffixTree, NIL, ROOT};
use crate::text::Code;

/// Suffix-tree nodes keep their ids; type-2 nodes follow them.
///
/// The string of node `v` is `symbols[witness(v)..witness(v) + depth(v)]`.
/// Only the first symbol of each edge label is stored.
#[derive(Clone, Debug)]
pub struct LsTrie {
    symbols: Vec<Code>,
    st_nodes: usize,
    parent: Vec<NodeId>,
    depth: Vec<u32>,
    witness: Vec<u32>,
    label: Vec<Code>,
    slink: Vec<NodeId>,
    child_offsets: Vec<u32>,
    children: Vec<NodeId>,
}

impl LsTrie {
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn num_st_nodes(&self) -> usize {
        self.st_nodes
    }

    pub fn num_type2(&self) -> usize {
        self.len() - self.st_nodes
    }

    pub fn is_type2(&self, v: NodeId) -> bool {
        v as usize >= self.st_nodes
    }

    pub fn parent(&self, v: NodeId) -> NodeId {
        self.parent[v as usize]
    }

    pub fn depth(&self, v: NodeId) -> u32 {
        self.depth[v as usize]
    }

    pub fn witness(&self, v: NodeId) -> u32 {
        self.witness[v as usize]
    }

    /// The single stored symbol of the edge into `v`.
    pub fn label(&self, v: NodeId) -> Code {
        self.label[v as usize]
    }

    pub fn slink(&self, v: NodeId) -> NodeId {
        self.slink[v as usize]
    }

    pub fn children(&self, v: NodeId) -> &[NodeId] {
        let v = v as usize;
        &self.children[self.child_offsets[v] as usize..self.child_offsets[v + 1] as usize]
    }

    pub fn node_string(&self, v: NodeId) -> &[Code] {
        let s = self.witness(v) as usize;
        &self.symbols[s..s + self.depth(v) as usize]
    }

    /// Full label of the edge into `v`, recovered from the witness.
    pub fn edge_label(&self, v: NodeId) -> &[Code] {
        let s = (self.witness(v) + self.depth(self.parent(v))) as usize;
        &self.symbols[s..(self.witness(v) + self.depth(v)) as usize]
    }

    pub fn num_edges(&self) -> usize {
        self.children.len()
    }
}

/// Inserts a node at every implicit modified Weiner link target. The target
/// `ax` of `(x, a, ax)` lies strictly inside the edge into its lower node and
/// gets `x` as its suffix link.
///
/// Inserted nodes keep the first symbol of the edge they split, so child
/// lists inherit the suffix tree's symbol order and need no sorting. Only
/// the inserts on one edge are sorted, by depth.
pub fn build_lstrie(st: &SuffixTree, mwl: &ModifiedWeinerLinks) -> Result<LsTrie> {
    let s = st.len();
    let inserts: Vec<(NodeId, u32, NodeId)> = mwl.implicit().map(|(x, l)| (l.lower, l.depth, x)).collect();
    let mut offsets = vec![0u32; s + 1];
    for &(lower, _, _) in &inserts {
        offsets[lower as usize + 1] += 1;
    }
    for i in 0..s {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = offsets.clone();
    let mut grouped = vec![(NIL, 0, NIL); inserts.len()];
    for ins in inserts {
        grouped[fill[ins.0 as usize] as usize] = ins;
        fill[ins.0 as usize] += 1;
    }
    drop(fill);
    let mut inserts = grouped;
    sort_groups_by(&mut inserts, &offsets, st.n() + 1, |i| i.1 as usize);

    let total = s + inserts.len();
    let mut parent: Vec<NodeId> = Vec::with_capacity(total);
    let mut depth: Vec<u32> = Vec::with_capacity(total);
    let mut witness: Vec<u32> = Vec::with_capacity(total);
    let mut slink: Vec<NodeId> = Vec::with_capacity(total);
    for v in 0..s as NodeId {
        parent.push(st.parent(v));
        depth.push(st.depth(v));
        witness.push(st.witness(v));
        slink.push(st.slink(v));
    }
    slink[ROOT as usize] = NIL;
    // Shallowest node on the edge into each suffix-tree node.
    let mut top: Vec<NodeId> = (0..s as NodeId).collect();

    // Each group shares a lower node; it is chained by depth from the lower
    // node's old parent downwards.
    let mut k = 0;
    while k < inserts.len() {
        let lower = inserts[k].0;
        let end = k + inserts[k..].iter().take_while(|i| i.0 == lower).count();
        let group = &inserts[k..end];
        let mut above = st.parent(lower);
        let bottom = st.depth(lower);
        for &(_, d, x) in group.iter() {
            // Depths ascend within a group, so this also rejects coinciding targets.
            if d <= depth[above as usize] || d >= bottom {
                return Err(corrupt!("implicit link target from node {x} is not strictly inside the edge into {lower}"));
            }
            let id = parent.len() as NodeId;
            if above == st.parent(lower) {
                top[lower as usize] = id;
            }
            parent.push(above);
            depth.push(d);
            witness.push(st.witness(lower));
            slink.push(x);
            above = id;
        }
        parent[lower as usize] = above;
        k = end;
    }

    let symbols = st.symbols().to_vec();
    let mut label = vec![0 as Code; total];
    for v in 1..total {
        label[v] = symbols[(witness[v] + depth[parent[v] as usize]) as usize];
    }

    let mut child_offsets = Vec::with_capacity(total + 1);
    let mut children = Vec::with_capacity(total - 1);
    child_offsets.push(0u32);
    for v in 0..s as NodeId {
        children.extend(st.children(v).iter().map(|&c| top[c as usize]));
        child_offsets.push(children.len() as u32);
    }
    for v in s as NodeId..total as NodeId {
        let next = inserts[v as usize - s];
        // The child of an inserted node is the next deeper one in its group,
        // or the lower node itself.
        let below = if (v as usize + 1) < total && inserts[v as usize + 1 - s].0 == next.0 { v + 1 } else { next.0 };
        children.push(below);
        child_offsets.push(children.len() as u32);
    }
    Ok(LsTrie { symbols, st_nodes: s, parent, depth, witness, label, slink, child_offsets, children })
}

/// Concatenates the recovered labels along each suffix-tree edge and compares
/// them with the suffix tree's own labels. Returns the first mismatching node.
pub fn check_labels(trie: &LsTrie, st: &SuffixTree) -> Option<NodeId> {
    (1..st.len() as NodeId).find(|&v| {
        let mut parts = Vec::new();
        let mut u = v;
        loop {
            parts.push(trie.edge_label(u));
            u = trie.parent(u);
            if !trie.is_type2(u) {
                break;
            }
        }
        let joined: Vec<Code> = parts.iter().rev().flat_map(|p| p.iter().copied()).collect();
        u != st.parent(v) || joined != st.edge_label(v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affix::{build_affix_tree, extract_mwl};
    use crate::forward::{black_st_nodes, build_ast};
    use crate::text::Text;
    use crate::weiner::weiner_links;

    fn trie(s: &[u8]) -> (SuffixTree, LsTrie) {
        let t = Text::from_bytes(s).unwrap();
        let st = SuffixTree::build(&t).unwrap();
        let wl = weiner_links(&st).unwrap();
        let black = black_st_nodes(&st, &st.slt_view());
        let at = build_affix_tree(build_ast(&st, &black).unwrap(), &st).unwrap();
        let mwl = extract_mwl(&at, &st, &wl).unwrap();
        let lt = build_lstrie(&st, &mwl).unwrap();
        (st, lt)
    }

    #[test]
    fn single_symbol_inserts_one_node() {
        // "a" lies inside the edge to "a$" and is the target of (root, a).
        let (st, lt) = trie(b"a");
        assert_eq!(lt.num_type2(), 1);
        let v = st.len() as NodeId;
        assert_eq!(lt.node_string(v), &[1]);
        assert_eq!(lt.slink(v), ROOT);
        assert_eq!(lt.parent(st.leaf(0)), v);
        assert_eq!(check_labels(&lt, &st), None);
    }

    #[test]
    fn type2_nodes_are_nonbranching_left_extensions() {
        let (st, lt) = trie(b"aabcabcab");
        let mut expected = std::collections::BTreeSet::new();
        for x in 0..st.len() as NodeId {
            for a in 0..4 {
                let mut ax = vec![a];
                ax.extend_from_slice(st.node_string(x));
                if let Some((v, d)) = st.locate(&ax) {
                    if st.depth(v) as usize != d {
                        expected.insert(ax);
                    }
                }
            }
        }
        let got: std::collections::BTreeSet<Vec<Code>> =
            (st.len() as NodeId..lt.len() as NodeId).map(|v| lt.node_string(v).to_vec()).collect();
        assert_eq!(got, expected);
        assert_eq!(check_labels(&lt, &st), None);
        for v in 1..lt.len() as NodeId {
            assert_eq!(lt.edge_label(v)[0], lt.label(v));
            let kids = lt.children(v);
            assert!(kids.windows(2).all(|w| lt.label(w[0]) < lt.label(w[1])));
        }
    }
}
