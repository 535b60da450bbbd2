//! Weiner links of the suffix tree and the DAWG of the reversed text they
//! form.
//!
//! A Weiner link `(x, a, Lrep(ax))` is explicit when `ax` is itself a node,
//! in which case it is a reversed suffix link. Every implicit link is found by
//! walking up from the source of an explicit one.

use crate::dawg::{Dawg, SortedParts, NO_LINK};
use crate::error::{corrupt, Result};
use crate::suffix_tree::{sort_groups_by, NodeId, SuffixTree, NIL, ROOT};
use crate::text::Code;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeinerLink {
    pub symbol: Code,
    pub target: NodeId,
    pub explicit: bool,
}

/// Weiner links grouped by source node, each group sorted by symbol.
#[derive(Clone, Debug)]
pub struct WeinerLinks {
    offsets: Vec<u32>,
    links: Vec<WeinerLink>,
}

impl WeinerLinks {
    pub fn of(&self, x: NodeId) -> &[WeinerLink] {
        &self.links[self.offsets[x as usize] as usize..self.offsets[x as usize + 1] as usize]
    }

    pub fn get(&self, x: NodeId, a: Code) -> Option<WeinerLink> {
        let l = self.of(x);
        l.binary_search_by_key(&a, |w| w.symbol).ok().map(|i| l[i])
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    pub fn num_explicit(&self) -> usize {
        self.links.iter().filter(|w| w.explicit).count()
    }

    pub fn num_nodes(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Groups by source node in one pass, then sorts each group by symbol.
    fn from_triples(st: &SuffixTree, triples: Vec<(NodeId, WeinerLink)>) -> Result<WeinerLinks> {
        let mut offsets = vec![0u32; st.len() + 1];
        for &(x, _) in &triples {
            offsets[x as usize + 1] += 1;
        }
        for i in 0..st.len() {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut links = vec![WeinerLink { symbol: 0, target: NIL, explicit: false }; triples.len()];
        for (x, w) in triples {
            links[fill[x as usize] as usize] = w;
            fill[x as usize] += 1;
        }
        drop(fill);
        let range = st.symbols().iter().copied().max().unwrap_or(0) as usize + 1;
        sort_groups_by(&mut links, &offsets, range, |w| w.symbol as usize);
        for x in 0..st.len() {
            let group = &links[offsets[x] as usize..offsets[x + 1] as usize];
            if group.windows(2).any(|p| p[0].symbol == p[1].symbol) {
                return Err(corrupt!("two Weiner links share a symbol at node {x}"));
            }
        }
        Ok(WeinerLinks { offsets, links })
    }
}

/// The reversed suffix links as Weiner links.
pub fn explicit_weiner(st: &SuffixTree) -> Result<WeinerLinks> {
    WeinerLinks::from_triples(st, explicit_triples(st))
}

fn explicit_triples(st: &SuffixTree) -> Vec<(NodeId, WeinerLink)> {
    (1..st.len() as NodeId)
        .map(|w| {
            let a = st.symbols()[st.witness(w) as usize];
            (st.slink(w), WeinerLink { symbol: a, target: w, explicit: true })
        })
        .collect()
}

/// Adds the implicit links: for an explicit link `(w, a, aw)`, every proper
/// ancestor `p` of `w` below `slink(parent(aw))` gets `(p, a, aw)`. When
/// `parent(aw)` is the root the walk continues up to and including the root.
pub fn implicit_weiner(st: &SuffixTree, wl: &WeinerLinks) -> Result<WeinerLinks> {
    let links = (0..wl.num_nodes() as NodeId).flat_map(|x| wl.of(x).iter().map(move |&l| (x, l)));
    with_implicit(st, links, 2 * wl.len())
}

fn with_implicit(
    st: &SuffixTree,
    links: impl Iterator<Item = (NodeId, WeinerLink)>,
    capacity: usize,
) -> Result<WeinerLinks> {
    let mut triples = Vec::with_capacity(capacity);
    for (x, link) in links {
        triples.push((x, link));
        if !link.explicit {
            continue;
        }
        let aw = link.target;
        let pa = st.parent(aw);
        let stop = if pa == ROOT { NIL } else { st.slink(pa) };
        let mut p = x;
        loop {
            if p == ROOT {
                if stop == NIL {
                    break;
                }
                return Err(corrupt!("Weiner walk from node {x} passed the root"));
            }
            p = st.parent(p);
            if p == stop {
                break;
            }
            triples.push((p, WeinerLink { symbol: link.symbol, target: aw, explicit: false }));
        }
    }
    WeinerLinks::from_triples(st, triples)
}

/// Explicit and implicit links in one call.
pub fn weiner_links(st: &SuffixTree) -> Result<WeinerLinks> {
    with_implicit(st, explicit_triples(st).into_iter(), 2 * st.len())
}

/// The DAWG of the reversed text: nodes are suffix-tree nodes, edges are
/// Weiner links, and the suffix link of a node is its tree parent labeled by
/// the first symbol of the connecting edge.
///
/// The reversal is of the whole text, terminal included; `endpos` refers to
/// positions in that reversal.
pub fn assemble_reversed_dawg(st: &SuffixTree, wl: &WeinerLinks) -> Dawg {
    let n = st.n() as u32;
    let nodes = st.len();
    let mut slink = vec![NO_LINK; nodes];
    let mut slink_label = vec![0; nodes];
    for v in 1..nodes as NodeId {
        slink[v as usize] = st.parent(v);
        slink_label[v as usize] = st.first_symbol(v);
    }
    // Links are sorted by symbol and children by first symbol, so both
    // adjacency lists are already in label order.
    let mut in_link_offsets = Vec::with_capacity(nodes + 1);
    let mut in_links = Vec::with_capacity(nodes - 1);
    in_link_offsets.push(0);
    for v in 0..nodes as NodeId {
        in_links.extend_from_slice(st.children(v));
        in_link_offsets.push(in_links.len() as u32);
    }
    Dawg::from_sorted(SortedParts {
        len: (0..nodes as NodeId).map(|v| st.depth(v)).collect(),
        endpos: (0..nodes as NodeId).map(|v| n - 1 - st.witness(v)).collect(),
        slink,
        slink_label,
        edge_offsets: wl.offsets.clone(),
        edge_labels: wl.links.iter().map(|l| l.symbol).collect(),
        edge_targets: wl.links.iter().map(|l| l.target).collect(),
        in_link_offsets,
        in_links,
        source: ROOT,
        sink: st.leaf(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::Text;

    fn find(st: &SuffixTree, t: &Text, s: &str) -> NodeId {
        let codes: Vec<Code> = s
            .bytes()
            .map(|b| {
                if b == b'$' {
                    0
                } else {
                    (1..t.sigma() as Code)
                        .find(|&c| t.decode(c) == crate::text::Symbol::Value(b as u64))
                        .unwrap()
                }
            })
            .collect();
        st.find_node(&codes).unwrap()
    }

    #[test]
    fn explicit_links_reverse_suffix_links() {
        let t = Text::from_bytes(b"abba").unwrap();
        let st = SuffixTree::build(&t).unwrap();
        let wl = explicit_weiner(&st).unwrap();
        let a = find(&st, &t, "a");
        let b = find(&st, &t, "b");
        assert_eq!(wl.get(ROOT, 1).unwrap().target, a);
        assert_eq!(wl.get(ROOT, 2).unwrap().target, b);
        assert_eq!(wl.num_explicit(), st.len() - 1);

        let t = Text::from_bytes(b"a").unwrap();
        let st = SuffixTree::build(&t).unwrap();
        let wl = weiner_links(&st).unwrap();
        assert_eq!(wl.get(ROOT, 1).unwrap().target, st.leaf(0));
        assert_eq!(wl.get(st.leaf(1), 1).unwrap().target, st.leaf(0));
        // "a" is not a node: the root's link by 'a' is implicit.
        assert!(!wl.get(ROOT, 1).unwrap().explicit);
        assert_eq!((wl.len(), wl.num_explicit()), (3, 2));
    }

    #[test]
    fn figure_string_explicit_link() {
        let t = Text::from_bytes(b"aabcabcab").unwrap();
        let st = SuffixTree::build(&t).unwrap();
        let wl = weiner_links(&st).unwrap();
        let link = wl.get(find(&st, &t, "bcab"), 1).unwrap();
        assert!(link.explicit);
        assert_eq!(link.target, find(&st, &t, "abcab"));
        // "c" is not a node, so the link from the root by 'c' is implicit.
        let link = wl.get(ROOT, 3).unwrap();
        assert!(!link.explicit);
        assert_eq!(link.target, find(&st, &t, "cab"));
        assert!(wl.get(find(&st, &t, "b"), 1).unwrap().explicit);
    }

    #[test]
    fn reversed_dawg_shares_nodes() {
        let t = Text::from_bytes(b"abba").unwrap();
        let st = SuffixTree::build(&t).unwrap();
        let rd = assemble_reversed_dawg(&st, &weiner_links(&st).unwrap());
        assert_eq!(rd.num_nodes(), 8);
        assert!(rd.check_sorted().is_ok());
        assert_eq!(rd.sink(), st.leaf(0));
    }

    #[test]
    fn direct_assembly_matches_generic_sort() {
        use crate::dawg::{sort_dawg, DawgParts};
        let mut rng = crate::gen::rng(3);
        for sigma in [2, 5, 40] {
            let raw = crate::gen::random_values(&mut rng, 300, sigma);
            let t = Text::from_ints(&raw).unwrap();
            let st = SuffixTree::build(&t).unwrap();
            let wl = weiner_links(&st).unwrap();
            let rd = assemble_reversed_dawg(&st, &wl);
            let mut parts = DawgParts {
                len: (0..rd.num_nodes() as NodeId).map(|v| rd.len(v)).collect(),
                endpos: (0..rd.num_nodes() as NodeId).map(|v| rd.endpos(v)).collect(),
                slink: (0..rd.num_nodes() as NodeId).map(|v| rd.slink(v).map_or(NO_LINK, |l| l.0)).collect(),
                slink_label: (0..rd.num_nodes() as NodeId).map(|v| rd.slink(v).map_or(0, |l| l.1)).collect(),
                source: rd.source(),
                sink: rd.sink(),
                ..DawgParts::default()
            };
            // Reverse each adjacency list so the generic sort has work to do.
            for v in 0..rd.num_nodes() as NodeId {
                parts.edges.extend(rd.out_edges(v).map(|(c, w)| (v, c, w)).collect::<Vec<_>>().into_iter().rev());
            }
            let generic = sort_dawg(Dawg::from_parts(parts));
            for v in 0..rd.num_nodes() as NodeId {
                assert_eq!(rd.out_labels(v), generic.out_labels(v));
                assert_eq!(rd.out_targets(v), generic.out_targets(v));
                assert_eq!(rd.in_links(v), generic.in_links(v));
            }
        }
    }
}
