//! Edge-sorted suffix tree with suffix links, built from the suffix array and
//! LCP array.
//!
//! Nodes are stored column-wise and addressed by dense ids in construction
//! order; the root is id 0. Every node knows its suffix-array interval
//! `[lb, rb)`, so `rb - lb` is the number of leaves below it and `sa[lb]` is a
//! text position where its string starts.

use crate::error::{corrupt, Result};
use crate::suffix_array::{build_lcp, build_sa, LcpArray, SuffixArray};
use crate::text::{Code, Text};

pub type NodeId = u32;
pub const NIL: NodeId = u32::MAX;
pub const ROOT: NodeId = 0;

#[derive(Clone, Debug)]
pub struct SuffixTree {
    symbols: Vec<Code>,
    sa: Vec<u32>,
    parent: Vec<NodeId>,
    depth: Vec<u32>,
    lb: Vec<u32>,
    rb: Vec<u32>,
    /// `sa[lb[v]]`, kept to spare a dependent lookup.
    witness: Vec<u32>,
    slink: Vec<NodeId>,
    child_offsets: Vec<u32>,
    children: Vec<NodeId>,
    leaf_of: Vec<NodeId>,
}

impl SuffixTree {
    /// Full pipeline: suffix array, LCP, tree, suffix links.
    pub fn build(t: &Text) -> Result<SuffixTree> {
        let sa = build_sa(t);
        let lcp = build_lcp(t, &sa);
        let mut st = st_from_sa_lcp(t, &sa, &lcp);
        st.fill_suffix_links()?;
        Ok(st)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Text length, terminal included.
    pub fn n(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[Code] {
        &self.symbols
    }

    pub fn suffix_array(&self) -> &[u32] {
        &self.sa
    }

    pub fn parent(&self, v: NodeId) -> NodeId {
        self.parent[v as usize]
    }

    /// String depth `|x|`.
    pub fn depth(&self, v: NodeId) -> u32 {
        self.depth[v as usize]
    }

    pub fn children(&self, v: NodeId) -> &[NodeId] {
        let v = v as usize;
        &self.children[self.child_offsets[v] as usize..self.child_offsets[v + 1] as usize]
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.children(v).is_empty()
    }

    /// Number of leaves below `v`, i.e. the number of occurrences of its string.
    pub fn leaf_count(&self, v: NodeId) -> u32 {
        self.rb[v as usize] - self.lb[v as usize]
    }

    /// Suffix-array interval `[lb, rb)` of `v`.
    pub fn interval(&self, v: NodeId) -> (u32, u32) {
        (self.lb[v as usize], self.rb[v as usize])
    }

    /// A 0-based text position at which the string of `v` starts.
    pub fn witness(&self, v: NodeId) -> u32 {
        self.witness[v as usize]
    }

    /// For a leaf, the 0-based start of its suffix.
    pub fn leaf_suffix(&self, v: NodeId) -> Option<u32> {
        self.is_leaf(v).then(|| self.witness(v))
    }

    pub fn leaf(&self, pos: u32) -> NodeId {
        self.leaf_of[pos as usize]
    }

    pub fn slink(&self, v: NodeId) -> NodeId {
        self.slink[v as usize]
    }

    pub fn node_string(&self, v: NodeId) -> &[Code] {
        let start = self.witness(v) as usize;
        &self.symbols[start..start + self.depth(v) as usize]
    }

    /// Label of the edge entering `v` as a 0-based `(start, len)` text interval.
    pub fn edge_interval(&self, v: NodeId) -> (u32, u32) {
        let p = self.parent(v);
        let pd = self.depth(p);
        (self.witness(v) + pd, self.depth(v) - pd)
    }

    pub fn edge_label(&self, v: NodeId) -> &[Code] {
        let (s, l) = self.edge_interval(v);
        &self.symbols[s as usize..(s + l) as usize]
    }

    /// First symbol of the edge entering `v`.
    pub fn first_symbol(&self, v: NodeId) -> Code {
        self.symbols[(self.witness(v) + self.depth(self.parent(v))) as usize]
    }

    pub fn child_by_symbol(&self, v: NodeId, c: Code) -> Option<NodeId> {
        let kids = self.children(v);
        kids.binary_search_by_key(&c, |&k| self.first_symbol(k))
            .ok()
            .map(|i| kids[i])
    }

    /// Node whose string is exactly `s`, if any.
    pub fn find_node(&self, s: &[Code]) -> Option<NodeId> {
        let (v, depth) = self.locate(s)?;
        (self.depth(v) as usize == depth).then_some(v)
    }

    /// Walks `s` from the root. Returns the shallowest node whose string has
    /// `s` as a prefix, together with `|s|`.
    pub fn locate(&self, s: &[Code]) -> Option<(NodeId, usize)> {
        let mut v = ROOT;
        let mut i = 0;
        while i < s.len() {
            v = self.child_by_symbol(v, s[i])?;
            let label = self.edge_label(v);
            let take = label.len().min(s.len() - i);
            if label[..take] != s[i..i + take] {
                return None;
            }
            i += take;
        }
        Some((v, s.len()))
    }

    /// Nodes in post-order (children before parents, left to right).
    pub fn post_order(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![(ROOT, 0usize)];
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            let kids = self.children(v);
            if *next < kids.len() {
                let c = kids[*next];
                *next += 1;
                stack.push((c, 0));
            } else {
                out.push(v);
                stack.pop();
            }
        }
        out
    }

    /// For each query `(pos, d)`, the shallowest node on the path from the root
    /// to the leaf of suffix `pos` whose depth is at least `d`.
    ///
    /// Answered offline with one depth-first traversal; each query costs a
    /// binary search over the current root path.
    pub fn loci(&self, queries: &[(u32, u32)]) -> Vec<NodeId> {
        let n = self.n();
        let mut head = vec![0u32; n + 1];
        for &(pos, _) in queries {
            head[pos as usize + 1] += 1;
        }
        for i in 0..n {
            head[i + 1] += head[i];
        }
        let mut fill = head.clone();
        let mut by_leaf = vec![0u32; queries.len()];
        for (q, &(pos, _)) in queries.iter().enumerate() {
            by_leaf[fill[pos as usize] as usize] = q as u32;
            fill[pos as usize] += 1;
        }

        let mut answer = vec![NIL; queries.len()];
        let mut path: Vec<NodeId> = Vec::new();
        let mut stack = vec![(ROOT, 0usize)];
        path.push(ROOT);
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            let kids = self.children(v);
            if kids.is_empty() && *next == 0 {
                let pos = self.witness(v) as usize;
                for &q in &by_leaf[head[pos] as usize..head[pos + 1] as usize] {
                    let d = queries[q as usize].1;
                    let i = path.partition_point(|&u| self.depth(u) < d);
                    answer[q as usize] = path.get(i).copied().unwrap_or(NIL);
                }
            }
            if *next < kids.len() {
                let c = kids[*next];
                *next += 1;
                stack.push((c, 0));
                path.push(c);
            } else {
                stack.pop();
                path.pop();
            }
        }
        answer
    }

    /// Fills suffix links: leaf `i` links to leaf `i + 1`, the last leaf and
    /// the depth-1 nodes link to the root, and an internal node `ax` links to
    /// the node `x` found below the leaf of its leftmost suffix shifted by one.
    pub fn fill_suffix_links(&mut self) -> Result<()> {
        let n = self.n() as u32;
        let mut queries = Vec::new();
        let mut asked = Vec::new();
        for v in 1..self.len() as NodeId {
            let w = self.witness(v);
            if self.is_leaf(v) {
                self.slink[v as usize] = if w + 1 < n { self.leaf(w + 1) } else { ROOT };
            } else if self.depth(v) == 1 {
                self.slink[v as usize] = ROOT;
            } else {
                queries.push((w + 1, self.depth(v) - 1));
                asked.push(v);
            }
        }
        let found = self.loci(&queries);
        for ((&v, &(_, d)), &u) in asked.iter().zip(&queries).zip(&found) {
            if u == NIL || self.depth(u) != d {
                return Err(corrupt!("no node at depth {d} for the suffix link of node {v}"));
            }
            self.slink[v as usize] = u;
        }
        Ok(())
    }

    /// Reversed suffix links, grouped per target and ordered by label.
    pub fn slt_view(&self) -> SuffixLinkTreeView {
        let mut by_label: Vec<NodeId> = (1..self.len() as NodeId).collect();
        // Label of the link from `ax` to `x` is `a`.
        let sigma = self.symbols.iter().copied().max().unwrap_or(0) as usize + 1;
        let label = |v: NodeId| self.symbols[self.witness(v) as usize] as usize;
        counting_sort_by(&mut by_label, sigma, label);
        let mut offsets = vec![0u32; self.len() + 1];
        for &v in &by_label {
            offsets[self.slink(v) as usize + 1] += 1;
        }
        for i in 0..self.len() {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut preds = vec![NIL; by_label.len()];
        for &v in &by_label {
            let s = self.slink(v) as usize;
            preds[fill[s] as usize] = v;
            fill[s] += 1;
        }
        SuffixLinkTreeView { offsets, preds }
    }
}

/// The tree of suffix links: for every node, the nodes whose suffix link
/// points to it.
#[derive(Clone, Debug)]
pub struct SuffixLinkTreeView {
    offsets: Vec<u32>,
    preds: Vec<NodeId>,
}

impl SuffixLinkTreeView {
    pub fn children(&self, v: NodeId) -> &[NodeId] {
        let v = v as usize;
        &self.preds[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    pub fn is_slt_leaf(&self, v: NodeId) -> bool {
        self.children(v).is_empty()
    }
}

/// Stable counting sort of ids by a key in `0..range`.
pub(crate) fn counting_sort_by(items: &mut [u32], range: usize, key: impl Fn(u32) -> usize) {
    let mut count = vec![0usize; range + 1];
    for &it in items.iter() {
        count[key(it) + 1] += 1;
    }
    for i in 0..range {
        count[i + 1] += count[i];
    }
    let mut out = vec![0u32; items.len()];
    for &it in items.iter() {
        let k = key(it);
        out[count[k]] = it;
        count[k] += 1;
    }
    items.copy_from_slice(&out);
}

/// Groups longer than this share one counting sort; shorter ones are sorted
/// in place, at a cost bounded by a constant per item.
const SMALL_GROUP: usize = 32;

/// Sorts each group `items[offsets[g]..offsets[g + 1]]` by a key in
/// `0..range`, in time linear in `items.len() + range` and stable within
/// groups. Keeps random access confined to one group at a time except for
/// the few long groups.
pub(crate) fn sort_groups_by<T: Copy>(items: &mut [T], offsets: &[u32], range: usize, key: impl Fn(&T) -> usize) {
    let mut long: Vec<(u32, T)> = Vec::new();
    for g in 0..offsets.len() - 1 {
        let group = &mut items[offsets[g] as usize..offsets[g + 1] as usize];
        if group.len() <= SMALL_GROUP {
            group.sort_by_key(&key);
        } else {
            long.extend(group.iter().map(|&it| (g as u32, it)));
        }
    }
    if long.is_empty() {
        return;
    }
    let mut order: Vec<u32> = (0..long.len() as u32).collect();
    counting_sort_by(&mut order, range, |k| key(&long[k as usize].1));
    let mut fill: Vec<u32> = offsets.to_vec();
    for k in order {
        let (g, it) = long[k as usize];
        items[fill[g as usize] as usize] = it;
        fill[g as usize] += 1;
    }
}

/// Builds the edge-sorted tree by the left-to-right stack scan over the
/// suffix array. Suffix links are left unset.
pub fn st_from_sa_lcp(t: &Text, sa: &SuffixArray, lcp: &LcpArray) -> SuffixTree {
    let n = t.n();
    let cap = 2 * n;
    let mut parent = Vec::with_capacity(cap);
    let mut depth = Vec::with_capacity(cap);
    let mut lb = Vec::with_capacity(cap);
    let mut rb = Vec::with_capacity(cap);
    let mut edges: Vec<(NodeId, NodeId)> = Vec::with_capacity(cap);
    let mut leaf_of = vec![NIL; n];

    macro_rules! new_node {
        ($d:expr, $l:expr) => {{
            let l = $l;
            parent.push(NIL);
            depth.push($d);
            lb.push(l);
            rb.push(l);
            (parent.len() - 1) as NodeId
        }};
    }
    let root = new_node!(0, 0);
    let mut stack = vec![root];

    for r in 0..n {
        let l = if r == 0 { 0 } else { lcp.lcp[r] };
        while depth[*stack.last().unwrap() as usize] > l {
            let v = stack.pop().unwrap();
            rb[v as usize] = r as u32;
            let top = *stack.last().unwrap();
            if depth[top as usize] < l {
                let w = new_node!(l, lb[v as usize]);
                edges.push((w, v));
                stack.push(w);
            } else {
                edges.push((top, v));
            }
        }
        let pos = sa.sa[r];
        let leaf = new_node!(n as u32 - pos, r as u32);
        leaf_of[pos as usize] = leaf;
        stack.push(leaf);
    }
    while stack.len() > 1 {
        let v = stack.pop().unwrap();
        rb[v as usize] = n as u32;
        edges.push((*stack.last().unwrap(), v));
    }
    rb[root as usize] = n as u32;

    let len = parent.len();
    let mut child_offsets = vec![0u32; len + 1];
    for &(p, _) in &edges {
        child_offsets[p as usize + 1] += 1;
    }
    for i in 0..len {
        child_offsets[i + 1] += child_offsets[i];
    }
    let mut fill = child_offsets.clone();
    let mut children = vec![NIL; edges.len()];
    for &(p, c) in &edges {
        parent[c as usize] = p;
        children[fill[p as usize] as usize] = c;
        fill[p as usize] += 1;
    }

    SuffixTree {
        symbols: t.symbols().to_vec(),
        sa: sa.sa.clone(),
        witness: lb.iter().map(|&l| sa.sa[l as usize]).collect(),
        parent,
        depth,
        lb,
        rb,
        slink: vec![NIL; len],
        child_offsets,
        children,
        leaf_of,
    }
}
