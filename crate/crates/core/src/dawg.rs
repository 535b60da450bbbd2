//! Directed acyclic word graph: the node table shared by the forward
//! construction, the reversed construction and the oracle.

use crate::error::{Error, Result};
use crate::suffix_tree::sort_groups_by;
use crate::text::Code;

pub type DawgId = u32;
pub const NO_LINK: DawgId = u32::MAX;

/// Node table with CSR out-edges and labeled suffix links.
///
/// `len[v]` is the length of the longest member of `v` and `endpos[v]` is a
/// 0-based position where an occurrence of that member ends. The suffix link
/// of the source is [`NO_LINK`].
#[derive(Clone, Debug)]
pub struct Dawg {
    len: Vec<u32>,
    endpos: Vec<u32>,
    slink: Vec<DawgId>,
    slink_label: Vec<Code>,
    edge_offsets: Vec<u32>,
    edge_labels: Vec<Code>,
    edge_targets: Vec<DawgId>,
    source: DawgId,
    sink: DawgId,
    sorted: bool,
    in_link_offsets: Vec<u32>,
    in_links: Vec<DawgId>,
}

/// Everything needed to assemble a [`Dawg`]; edges may come in any order.
#[derive(Clone, Debug, Default)]
pub struct DawgParts {
    pub len: Vec<u32>,
    pub endpos: Vec<u32>,
    pub slink: Vec<DawgId>,
    pub slink_label: Vec<Code>,
    pub edges: Vec<(DawgId, Code, DawgId)>,
    pub source: DawgId,
    pub sink: DawgId,
}

/// A node table whose out-edges and incoming suffix links are already in CSR
/// form, each list sorted by label.
#[derive(Clone, Debug, Default)]
pub(crate) struct SortedParts {
    pub len: Vec<u32>,
    pub endpos: Vec<u32>,
    pub slink: Vec<DawgId>,
    pub slink_label: Vec<Code>,
    pub edge_offsets: Vec<u32>,
    pub edge_labels: Vec<Code>,
    pub edge_targets: Vec<DawgId>,
    pub in_link_offsets: Vec<u32>,
    pub in_links: Vec<DawgId>,
    pub source: DawgId,
    pub sink: DawgId,
}

impl Dawg {
    pub(crate) fn from_sorted(p: SortedParts) -> Dawg {
        let d = Dawg {
            len: p.len,
            endpos: p.endpos,
            slink: p.slink,
            slink_label: p.slink_label,
            edge_offsets: p.edge_offsets,
            edge_labels: p.edge_labels,
            edge_targets: p.edge_targets,
            source: p.source,
            sink: p.sink,
            sorted: true,
            in_link_offsets: p.in_link_offsets,
            in_links: p.in_links,
        };
        debug_assert!(d.check_sorted().is_ok());
        d
    }

    /// Groups edges by source node, keeping their relative order. The result
    /// is unsorted until passed through [`sort_dawg`].
    pub fn from_parts(parts: DawgParts) -> Dawg {
        let nodes = parts.len.len();
        let mut edge_offsets = vec![0u32; nodes + 1];
        for &(u, _, _) in &parts.edges {
            edge_offsets[u as usize + 1] += 1;
        }
        for i in 0..nodes {
            edge_offsets[i + 1] += edge_offsets[i];
        }
        let mut fill = edge_offsets.clone();
        let mut edge_labels = vec![0; parts.edges.len()];
        let mut edge_targets = vec![0; parts.edges.len()];
        for &(u, c, v) in &parts.edges {
            let k = fill[u as usize] as usize;
            edge_labels[k] = c;
            edge_targets[k] = v;
            fill[u as usize] += 1;
        }
        Dawg {
            len: parts.len,
            endpos: parts.endpos,
            slink: parts.slink,
            slink_label: parts.slink_label,
            edge_offsets,
            edge_labels,
            edge_targets,
            source: parts.source,
            sink: parts.sink,
            sorted: false,
            in_link_offsets: Vec::new(),
            in_links: Vec::new(),
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.len.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_labels.len()
    }

    /// Number of suffix links (every node but the source has one).
    pub fn num_slinks(&self) -> usize {
        self.slink.iter().filter(|&&s| s != NO_LINK).count()
    }

    pub fn source(&self) -> DawgId {
        self.source
    }

    pub fn sink(&self) -> DawgId {
        self.sink
    }

    pub fn is_sorted(&self) -> bool {
        self.sorted
    }

    pub fn len(&self, v: DawgId) -> u32 {
        self.len[v as usize]
    }

    /// Length of the shortest member.
    pub fn shortlen(&self, v: DawgId) -> u32 {
        match self.slink(v) {
            Some((s, _)) => self.len(s) + 1,
            None => 0,
        }
    }

    pub fn endpos(&self, v: DawgId) -> u32 {
        self.endpos[v as usize]
    }

    pub fn slink(&self, v: DawgId) -> Option<(DawgId, Code)> {
        let s = self.slink[v as usize];
        (s != NO_LINK).then(|| (s, self.slink_label[v as usize]))
    }

    pub fn out_labels(&self, v: DawgId) -> &[Code] {
        &self.edge_labels[self.range(v)]
    }

    pub fn out_targets(&self, v: DawgId) -> &[DawgId] {
        &self.edge_targets[self.range(v)]
    }

    pub fn out_degree(&self, v: DawgId) -> usize {
        self.range(v).len()
    }

    pub fn out_edges(&self, v: DawgId) -> impl Iterator<Item = (Code, DawgId)> + '_ {
        self.out_labels(v).iter().copied().zip(self.out_targets(v).iter().copied())
    }

    /// Edge lookup by binary search; requires a sorted graph.
    pub fn edge(&self, v: DawgId, c: Code) -> Option<DawgId> {
        debug_assert!(self.sorted);
        let labels = self.out_labels(v);
        labels.binary_search(&c).ok().map(|i| self.out_targets(v)[i])
    }

    /// Nodes whose suffix link points to `v`, ordered by link label.
    /// Empty until the graph is sorted.
    pub fn in_links(&self, v: DawgId) -> &[DawgId] {
        if self.in_link_offsets.is_empty() {
            return &[];
        }
        let v = v as usize;
        &self.in_links[self.in_link_offsets[v] as usize..self.in_link_offsets[v + 1] as usize]
    }

    /// Fails with [`Error::NotSorted`] on the first adjacency that is not
    /// strictly increasing.
    pub fn check_sorted(&self) -> Result<()> {
        for v in 0..self.num_nodes() as DawgId {
            if self.out_labels(v).windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::NotSorted { node: v });
            }
        }
        Ok(())
    }

    /// Walks `s` from the source.
    pub fn walk(&self, s: &[Code]) -> Option<DawgId> {
        s.iter().try_fold(self.source, |v, &c| self.edge(v, c))
    }

    fn range(&self, v: DawgId) -> std::ops::Range<usize> {
        self.edge_offsets[v as usize] as usize..self.edge_offsets[v as usize + 1] as usize
    }
}

/// Sorts every adjacency list by label and every list of incoming suffix
/// links by label, in time linear in the graph plus the label range.
pub fn sort_dawg(mut d: Dawg) -> Dawg {
    let nodes = d.num_nodes();
    let range = d
        .edge_labels
        .iter()
        .chain(&d.slink_label)
        .copied()
        .max()
        .map_or(1, |m| m as usize + 1);

    let mut edges: Vec<(Code, DawgId)> = d.edge_labels.iter().copied().zip(d.edge_targets.iter().copied()).collect();
    sort_groups_by(&mut edges, &d.edge_offsets, range, |e| e.0 as usize);
    for (k, (c, w)) in edges.into_iter().enumerate() {
        d.edge_labels[k] = c;
        d.edge_targets[k] = w;
    }

    let mut offsets = vec![0u32; nodes + 1];
    for &s in &d.slink {
        if s != NO_LINK {
            offsets[s as usize + 1] += 1;
        }
    }
    for i in 0..nodes {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = offsets.clone();
    let mut in_links = vec![0; offsets[nodes] as usize];
    for (v, &s) in d.slink.iter().enumerate() {
        if s != NO_LINK {
            in_links[fill[s as usize] as usize] = v as DawgId;
            fill[s as usize] += 1;
        }
    }
    let slabels = &d.slink_label;
    sort_groups_by(&mut in_links, &offsets, range, |&v| slabels[v as usize] as usize);
    d.in_link_offsets = offsets;
    d.in_links = in_links;
    d.sorted = true;
    d
}

/// Canonical encoding of a sorted graph: nodes are renumbered in breadth-first
/// discovery order from the source, visiting edges by increasing label. Two
/// graphs are isomorphic (respecting labels, lengths and suffix links) iff
/// their encodings are equal.
pub fn canonical_form(d: &Dawg) -> Vec<u32> {
    let mut canon = vec![NO_LINK; d.num_nodes()];
    let mut order = vec![d.source()];
    canon[d.source() as usize] = 0;
    let mut out = vec![d.num_nodes() as u32, d.num_edges() as u32];
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        out.push(d.len(v));
        out.push(d.out_degree(v) as u32);
        for (c, w) in d.out_edges(v) {
            if canon[w as usize] == NO_LINK {
                canon[w as usize] = order.len() as u32;
                order.push(w);
            }
            out.push(c);
            out.push(canon[w as usize]);
        }
    }
    out.push(order.len() as u32);
    for &v in &order {
        match d.slink(v) {
            Some((s, c)) => {
                out.push(canon[s as usize]);
                out.push(c);
            }
            None => out.push(NO_LINK),
        }
    }
    out.push(canon[d.sink() as usize]);
    out
}

pub fn canonical_isomorphic(a: &Dawg, b: &Dawg) -> bool {
    canonical_form(a) == canonical_form(b)
}
