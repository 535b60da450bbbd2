//! Minimal absent words from the edge-sorted DAWG, in time linear in the
//! graph plus the output.

use serde::Serialize;

use crate::dawg::{Dawg, DawgId};
use crate::error::{Error, Result};
use crate::text::{Code, Symbol, Text};

/// The word `y[i..=j] · b`, with 1-based inclusive positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MawTriple {
    pub i: u32,
    pub j: u32,
    pub b: Code,
}

#[derive(Clone, Debug, Default)]
pub struct MawSet {
    pub triples: Vec<MawTriple>,
    /// Declared symbols absent from the text, as original values.
    pub length1: Vec<u64>,
    /// Adjacency entries read by the merge scans.
    pub examined: u64,
}

impl MawSet {
    pub fn len(&self) -> usize {
        self.triples.len() + self.length1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Declared symbols that do not occur in the text.
pub fn maw_length1(t: &Text) -> Vec<u64> {
    t.absent_symbols().to_vec()
}

/// Calls `emit` once per minimal absent word of length at least two and
/// returns the number of adjacency entries examined.
///
/// For every node `u` other than the source and the sink, with suffix link
/// `(s, a)`, the symbols leaving `s` but not `u` are exactly the `b` with
/// `a · x · b` minimal absent, `x` the longest member of `s`. The terminal is
/// never a MAW symbol and the sink is the only class holding strings that
/// contain it.
pub fn for_each_maw(d: &Dawg, t: &Text, mut emit: impl FnMut(MawTriple)) -> Result<u64> {
    d.check_sorted()?;
    let terminal = t.terminal();
    let mut examined = 0u64;
    for u in 0..d.num_nodes() as DawgId {
        if u == d.sink() {
            continue;
        }
        let Some((s, _)) = d.slink(u) else { continue };
        let j = d.endpos(u) + 1;
        let i = j - d.len(s);
        let (mine, theirs) = (d.out_labels(u), d.out_labels(s));
        let mut k = 0;
        for &b in theirs {
            examined += 1;
            while k < mine.len() && mine[k] < b {
                k += 1;
                examined += 1;
            }
            if k < mine.len() && mine[k] == b {
                k += 1;
                examined += 1;
            } else if b != terminal {
                emit(MawTriple { i, j, b });
            }
        }
    }
    Ok(examined)
}

/// All minimal absent words of the text's core over its declared alphabet.
pub fn compute_maws(d: &Dawg, t: &Text) -> Result<MawSet> {
    let mut triples = Vec::new();
    let examined = for_each_maw(d, t, |m| triples.push(m))?;
    Ok(MawSet { triples, length1: maw_length1(t), examined })
}

/// Original symbol values of each word, triples first, then length-one words.
/// With `sorted`, words are ordered by length and then lexicographically.
pub fn decode_maws(ms: &MawSet, t: &Text, sorted: bool) -> Result<Vec<Vec<u64>>> {
    let value = |s: Symbol| match s {
        Symbol::Value(v) => Ok(v),
        Symbol::Sentinel => Err(crate::error::corrupt!("minimal absent word contains the terminal")),
    };
    let mut words = Vec::with_capacity(ms.len());
    for m in &ms.triples {
        let mut w = t
            .decode_interval(m.i as usize, m.j as usize)?
            .into_iter()
            .map(value)
            .collect::<Result<Vec<u64>>>()?;
        w.push(value(t.decode(m.b))?);
        words.push(w);
    }
    words.extend(ms.length1.iter().map(|&v| vec![v]));
    if sorted {
        words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    }
    words.dedup();
    Ok(words)
}

/// Lower and upper bounds on the number of minimal absent words of the core:
/// `σ` and `(σ_y - 1)(n - 1) + σ`, with `σ` the declared alphabet size.
pub fn maw_bounds(t: &Text) -> (usize, usize) {
    let sigma = t.declared_sigma();
    let n_core = t.core().len();
    (sigma, (t.distinct() - 1) * (n_core - 1) + sigma)
}

/// Checks the triples refer to valid intervals.
pub fn validate_triples(ms: &MawSet, t: &Text) -> Result<()> {
    let n = t.n();
    for m in &ms.triples {
        if m.i == 0 || m.i > m.j + 1 || m.j as usize >= n {
            return Err(Error::BadInterval { i: m.i as usize, j: m.j as usize, n });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forward::forward_dawg;
    use crate::suffix_tree::SuffixTree;

    fn maws(s: &[u8], sigma: usize) -> (Vec<String>, MawSet) {
        let t = Text::from_bytes_with_sigma(s, sigma).unwrap();
        let st = SuffixTree::build(&t).unwrap();
        let (_, fd) = forward_dawg(&st).unwrap();
        let ms = compute_maws(&fd.dawg, &t).unwrap();
        let words = decode_maws(&ms, &t, true)
            .unwrap()
            .into_iter()
            .map(|w| w.into_iter().map(|v| v as u8 as char).collect())
            .collect();
        (words, ms)
    }

    #[test]
    fn worked_example() {
        let (words, ms) = maws(b"abaab", 3);
        assert_eq!(words, ["c", "bb", "aaa", "bab", "aaba"]);
        assert_eq!(ms.length1, vec![b'c' as u64]);
    }

    #[test]
    fn tiny_inputs() {
        assert_eq!(maws(b"a", 1).0, ["aa"]);
        assert_eq!(maws(b"a", 4).0, ["b", "c", "d", "aa"]);
        assert_eq!(maws(b"ab", 2).0, ["aa", "ba", "bb"]);
    }

    #[test]
    fn unsorted_graph_is_rejected() {
        use crate::dawg::{DawgParts, NO_LINK};
        let t = Text::from_bytes(b"ab").unwrap();
        let d = Dawg::from_parts(DawgParts {
            len: vec![0, 1],
            endpos: vec![0, 0],
            slink: vec![NO_LINK, 0],
            slink_label: vec![0, 1],
            edges: vec![(0, 2, 1), (0, 1, 1)],
            source: 0,
            sink: 1,
        });
        assert_eq!(compute_maws(&d, &t).unwrap_err(), Error::NotSorted { node: 0 });
    }
}
