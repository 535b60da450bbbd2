//! Brute-force references. Everything here is built from an explicit trie of
//! all distinct substrings and is meant for small inputs only.

use std::collections::{BTreeSet, HashMap};
use std::hash::{BuildHasherDefault, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dawg::{sort_dawg, Dawg, DawgId, DawgParts, NO_LINK};
use crate::error::{corrupt, Error, Result};
use crate::suffix_tree::counting_sort_by;
use crate::text::{Code, Symbol, Text};

pub use crate::dawg::canonical_isomorphic;

/// Multiplicative hash for integer keys; the oracle's tries are hash heavy.
#[derive(Default)]
struct MixHasher(u64);

impl Hasher for MixHasher {
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.write_u64(b as u64);
        }
    }

    fn write_u32(&mut self, i: u32) {
        self.write_u64(i as u64);
    }

    fn write_u64(&mut self, i: u64) {
        let m = ((self.0 ^ i) as u128).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        self.0 = (m as u64) ^ ((m >> 64) as u64);
    }

    fn write_u128(&mut self, i: u128) {
        self.write_u64(i as u64);
        self.write_u64((i >> 64) as u64);
    }

    fn finish(&self) -> u64 {
        self.0
    }
}

type FastMap<K, V> = HashMap<K, V, BuildHasherDefault<MixHasher>>;

fn key(v: u32, c: Code) -> u64 {
    (v as u64) << 32 | c as u64
}

/// Default length cap for class enumeration.
pub const CLASS_CAP: usize = 2000;
/// Default core-length cap for the MAW oracle.
pub const MAW_CAP: usize = 300;

/// Trie of all distinct substrings of a sequence.
///
/// For every node the end positions and start positions of its occurrences
/// are summarized by a key: an exact bit set when the sequence has at most
/// 128 symbols, a sum of random 128-bit weights otherwise.
#[derive(Clone, Debug)]
pub struct NaiveClasses {
    symbols: Vec<Code>,
    depth: Vec<u32>,
    first_start: Vec<u32>,
    count: Vec<u32>,
    end_key: Vec<u128>,
    beg_key: Vec<u128>,
    slink: Vec<u32>,
    parent: Vec<u32>,
    sym: Vec<Code>,
    child_offsets: Vec<u32>,
    child_list: Vec<u32>,
    child: FastMap<u64, u32>,
    r_class: Vec<u32>,
    l_class: Vec<u32>,
    r_rep: Vec<u32>,
    l_rep: Vec<u32>,
}

/// Enumerates all distinct substrings of `symbols` with their classes.
pub fn naive_classes(symbols: &[Code], cap: usize) -> Result<NaiveClasses> {
    let n = symbols.len();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let weight: Vec<u128> = if n <= 128 {
        (0..n).map(|p| 1u128 << p).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        (0..n).map(|_| rng.gen()).collect()
    };
    let mut c = NaiveClasses {
        symbols: symbols.to_vec(),
        depth: vec![0],
        first_start: vec![0],
        count: vec![n as u32 + 1],
        end_key: vec![0],
        beg_key: vec![0],
        slink: vec![u32::MAX],
        parent: vec![u32::MAX],
        sym: vec![0],
        child_offsets: Vec::new(),
        child_list: Vec::new(),
        child: FastMap::with_capacity_and_hasher(n * (n + 1) / 2, Default::default()),
        r_class: Vec::new(),
        l_class: Vec::new(),
        r_rep: Vec::new(),
        l_rep: Vec::new(),
    };
    let cap_nodes = n * (n + 1) / 2 + 1;
    for col in [&mut c.depth, &mut c.first_start, &mut c.count, &mut c.slink, &mut c.parent, &mut c.sym] {
        col.reserve(cap_nodes);
    }
    c.end_key.reserve(cap_nodes);
    c.beg_key.reserve(cap_nodes);
    for i in 0..n {
        let mut v = 0u32;
        for k in i..n {
            let sym = symbols[k];
            v = match c.child.get(&key(v, sym)) {
                Some(&w) => w,
                None => {
                    let w = c.depth.len() as u32;
                    c.depth.push((k - i + 1) as u32);
                    c.first_start.push(i as u32);
                    c.count.push(0);
                    c.end_key.push(0);
                    c.beg_key.push(0);
                    c.slink.push(u32::MAX);
                    c.parent.push(v);
                    c.sym.push(sym);
                    c.child.insert(key(v, sym), w);
                    w
                }
            };
            c.count[v as usize] += 1;
            c.end_key[v as usize] = c.end_key[v as usize].wrapping_add(weight[k]);
            c.beg_key[v as usize] = c.beg_key[v as usize].wrapping_add(weight[i]);
        }
    }
    let nodes = c.depth.len();
    let mut order: Vec<u32> = (1..nodes as u32).collect();
    let range = symbols.iter().copied().max().map_or(1, |m| m as usize + 1);
    counting_sort_by(&mut order, range, |w| c.sym[w as usize] as usize);
    let mut offsets = vec![0u32; nodes + 1];
    for &w in &order {
        offsets[c.parent[w as usize] as usize + 1] += 1;
    }
    for i in 0..nodes {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = offsets.clone();
    let mut list = vec![0u32; order.len()];
    for &w in &order {
        let p = c.parent[w as usize] as usize;
        list[fill[p] as usize] = w;
        fill[p] += 1;
    }
    c.child_offsets = offsets;
    c.child_list = list;
    // Parents are created before children, so ids are a valid order for
    // slink(child(p, s)) = child(slink(p), s).
    for w in 1..nodes {
        let p = c.parent[w];
        c.slink[w] = if p == 0 { 0 } else { c.child[&key(c.slink[p as usize], c.sym[w])] };
    }
    let (r_class, r_rep) = group(&c, |v| (c.count[v], c.end_key[v]));
    let (l_class, l_rep) = group(&c, |v| (c.count[v], c.beg_key[v]));
    c.r_class = r_class;
    c.r_rep = r_rep;
    c.l_class = l_class;
    c.l_rep = l_rep;
    Ok(c)
}

/// Groups trie nodes by key; the root is always alone. Returns the class of
/// every node and the deepest node of every class.
fn group(c: &NaiveClasses, key: impl Fn(usize) -> (u32, u128)) -> (Vec<u32>, Vec<u32>) {
    let mut ids: FastMap<(u32, u128), u32> = FastMap::with_capacity_and_hasher(2 * c.symbols.len() + 2, Default::default());
    let mut class = vec![0u32; c.depth.len()];
    let mut rep = vec![0u32];
    for v in 1..c.depth.len() {
        let next = rep.len() as u32;
        let k = *ids.entry(key(v)).or_insert(next);
        if k == next {
            rep.push(v as u32);
        }
        class[v] = k;
        if c.depth[v] > c.depth[rep[k as usize] as usize] {
            rep[k as usize] = v as u32;
        }
    }
    (class, rep)
}

impl NaiveClasses {
    fn children(&self, v: u32) -> impl Iterator<Item = (Code, u32)> + '_ {
        let r = self.child_offsets[v as usize] as usize..self.child_offsets[v as usize + 1] as usize;
        self.child_list[r].iter().map(|&w| (self.sym[w as usize], w))
    }

    pub fn num_substrings(&self) -> usize {
        self.depth.len()
    }

    pub fn id_of(&self, s: &[Code]) -> Option<u32> {
        s.iter().try_fold(0u32, |v, &c| self.child.get(&key(v, c)).copied())
    }

    pub fn string(&self, id: u32) -> Vec<Code> {
        let s = self.first_start[id as usize] as usize;
        self.symbols[s..s + self.depth[id as usize] as usize].to_vec()
    }

    pub fn occurrences(&self, id: u32) -> u32 {
        if id == 0 {
            self.symbols.len() as u32 + 1
        } else {
            self.count[id as usize]
        }
    }

    /// 1-based start positions, by direct scan.
    pub fn begpos(&self, s: &[Code]) -> Vec<usize> {
        let n = self.symbols.len();
        (0..=n.saturating_sub(s.len()))
            .filter(|&i| &self.symbols[i..i + s.len()] == s)
            .map(|i| i + 1)
            .collect()
    }

    /// 1-based end positions, by direct scan.
    pub fn endpos(&self, s: &[Code]) -> Vec<usize> {
        self.begpos(s).into_iter().map(|i| i + s.len() - 1).collect()
    }

    /// Longest members of the start-position classes (the suffix-tree nodes).
    pub fn l_set(&self) -> BTreeSet<Vec<Code>> {
        self.l_rep.iter().map(|&v| self.string(v)).collect()
    }

    /// Longest members of the end-position classes (the DAWG nodes).
    pub fn r_set(&self) -> BTreeSet<Vec<Code>> {
        self.r_rep.iter().map(|&v| self.string(v)).collect()
    }

    pub fn is_lrep(&self, id: u32) -> bool {
        self.l_rep[self.l_class[id as usize] as usize] == id
    }

    pub fn is_rrep(&self, id: u32) -> bool {
        self.r_rep[self.r_class[id as usize] as usize] == id
    }

    /// The longest member of the start-position class of `s`.
    pub fn lrep(&self, s: &[Code]) -> Option<Vec<Code>> {
        let id = self.id_of(s)?;
        Some(self.string(self.l_rep[self.l_class[id as usize] as usize]))
    }

    /// The longest member of the end-position class of `s`.
    pub fn rrep(&self, s: &[Code]) -> Option<Vec<Code>> {
        let id = self.id_of(s)?;
        Some(self.string(self.r_rep[self.r_class[id as usize] as usize]))
    }

    pub fn num_r_classes(&self) -> usize {
        self.r_rep.len()
    }

    pub fn num_l_classes(&self) -> usize {
        self.l_rep.len()
    }
}

/// The minimal DAWG, literally: one node per end-position class, an edge
/// `([x], b, [xb])` for every substring `xb`, and the suffix link of a class
/// given by its shortest member `ax` as `([ax], a, [x])`.
pub fn oracle_minimal_dawg(symbols: &[Code], cap: usize) -> Result<Dawg> {
    let c = naive_classes(symbols, cap)?;
    let classes = c.r_rep.len();
    let mut shortest = vec![u32::MAX; classes];
    for v in 0..c.depth.len() {
        let k = c.r_class[v] as usize;
        if shortest[k] == u32::MAX || c.depth[v] < c.depth[shortest[k] as usize] {
            shortest[k] = v as u32;
        }
    }
    let mut seen: FastMap<u64, u32> = FastMap::with_capacity_and_hasher(3 * classes, Default::default());
    let mut parts = DawgParts {
        len: c.r_rep.iter().map(|&v| c.depth[v as usize]).collect(),
        endpos: c
            .r_rep
            .iter()
            .map(|&v| (c.first_start[v as usize] + c.depth[v as usize]).saturating_sub(1))
            .collect(),
        slink: vec![NO_LINK; classes],
        slink_label: vec![0; classes],
        edges: Vec::new(),
        source: 0,
        sink: c.r_class[c.id_of(symbols).unwrap_or(0) as usize],
    };
    for v in 0..c.depth.len() {
        let from = c.r_class[v];
        for (sym, w) in c.children(v as u32) {
            let to = c.r_class[w as usize];
            match seen.insert(key(from, sym), to) {
                None => parts.edges.push((from, sym, to)),
                Some(prev) if prev == to => {}
                Some(_) => return Err(corrupt!("end-position classes are not right-invariant")),
            }
        }
    }
    for k in 1..classes {
        let s = shortest[k] as usize;
        parts.slink[k] = c.r_class[c.slink[s] as usize];
        parts.slink_label[k] = c.symbols[c.first_start[s] as usize];
    }
    Ok(sort_dawg(Dawg::from_parts(parts)))
}

/// Minimal absent words of `core` over `alphabet`, straight from the
/// characterization: `axb` is absent while `ax` and `xb` occur, plus the
/// alphabet symbols that do not occur at all.
pub fn naive_maw(core: &[u64], alphabet: &[u64], cap: usize) -> Result<BTreeSet<Vec<u64>>> {
    if core.len() > cap {
        return Err(Error::CapExceeded { n: core.len(), cap });
    }
    let mut values: Vec<u64> = core.to_vec();
    values.sort_unstable();
    values.dedup();
    let codes: Vec<Code> = core
        .iter()
        .map(|v| values.binary_search(v).unwrap() as Code)
        .collect();
    let c = naive_classes(&codes, usize::MAX)?;
    let mut out: BTreeSet<Vec<u64>> = alphabet
        .iter()
        .filter(|v| values.binary_search(v).is_err())
        .map(|&v| vec![v])
        .collect();
    for v in 1..c.depth.len() as u32 {
        let x = c.slink[v as usize];
        for (b, _) in c.children(x) {
            if !c.child.contains_key(&key(v, b)) {
                let mut w: Vec<u64> = c.string(v).iter().map(|&s| values[s as usize]).collect();
                w.push(values[b as usize]);
                out.insert(w);
            }
        }
    }
    Ok(out)
}

/// Substrings occurring at least twice whose every one-symbol extension on
/// either side occurs fewer times. The empty string is excluded.
pub fn naive_maximal_repeats(symbols: &[Code], cap: usize) -> Result<BTreeSet<Vec<Code>>> {
    let c = naive_classes(symbols, cap)?;
    let mut left_max = vec![true; c.depth.len()];
    for t in 1..c.depth.len() {
        let s = c.slink[t] as usize;
        if c.occurrences(t as u32) == c.occurrences(s as u32) {
            left_max[s] = false;
        }
    }
    Ok((1..c.depth.len())
        .filter(|&v| {
            c.count[v] >= 2
                && left_max[v]
                && c.children(v as u32).all(|(_, w)| c.count[w as usize] < c.count[v])
        })
        .map(|v| c.string(v as u32))
        .collect())
}

/// Decodes a code sequence that contains no sentinel.
pub(crate) fn values_of(t: &Text, codes: &[Code]) -> Vec<u64> {
    codes
        .iter()
        .map(|&c| match t.decode(c) {
            Symbol::Value(v) => v,
            Symbol::Sentinel => u64::MAX,
        })
        .collect()
}

/// The quadratic scheme: for every node `u` and every symbol `b`, report
/// `shortest(u)·b` when `u` lacks a `b`-edge that its suffix link has.
pub fn reference_mf_trie(d: &Dawg, t: &Text, cap: usize) -> Result<BTreeSet<Vec<u64>>> {
    let work = d.num_nodes() * t.sigma();
    if work > cap {
        return Err(Error::CapExceeded { n: work, cap });
    }
    let y = t.symbols();
    let mut out: BTreeSet<Vec<u64>> = t.absent_symbols().iter().map(|&v| vec![v]).collect();
    for u in 0..d.num_nodes() as DawgId {
        let Some((s, _)) = d.slink(u) else { continue };
        if u == d.sink() {
            continue;
        }
        for b in 0..t.sigma() as Code {
            if b == t.terminal() {
                continue;
            }
            if d.edge(u, b).is_none() && d.edge(s, b).is_some() {
                let j = d.endpos(u) as usize;
                let i = j - d.len(s) as usize;
                let mut w = values_of(t, &y[i..=j]);
                w.extend(values_of(t, &[b]));
                out.insert(w);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn codes(s: &str) -> Vec<Code> {
        s.bytes().map(|b| if b == b'$' { 0 } else { (b - b'a' + 1) as Code }).collect()
    }

    fn set(items: &[&str]) -> BTreeSet<Vec<Code>> {
        items.iter().map(|s| codes(s)).collect()
    }

    fn words(items: &[&str]) -> BTreeSet<Vec<u64>> {
        items.iter().map(|s| s.bytes().map(|b| b as u64).collect()).collect()
    }

    #[test]
    fn abba_classes() {
        let c = naive_classes(&codes("abba$"), CLASS_CAP).unwrap();
        assert_eq!(c.endpos(&codes("a")), vec![1, 4]);
        assert_eq!(c.endpos(&codes("ba")), vec![4]);
        assert_eq!(c.r_set(), set(&["", "a", "b", "ab", "abb", "abba", "abba$"]));
        assert_eq!(c.l_set().len(), 8);
        let c = naive_classes(&codes("a$"), CLASS_CAP).unwrap();
        assert_eq!(c.l_set(), set(&["", "a$", "$"]));
        assert_eq!(c.r_set(), set(&["", "a", "a$"]));
        assert_eq!(c.lrep(&codes("a")), Some(codes("a$")));
    }

    #[test]
    fn oracle_dawg_counts() {
        let d = oracle_minimal_dawg(&codes("abba$"), CLASS_CAP).unwrap();
        assert_eq!((d.num_nodes(), d.num_edges()), (7, 10));
        let d = oracle_minimal_dawg(&codes("a$"), CLASS_CAP).unwrap();
        assert_eq!(d.num_nodes(), 3);
        assert!(matches!(oracle_minimal_dawg(&codes("aaaa"), 3), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn oracle_dawg_distinguishes() {
        let a = oracle_minimal_dawg(&codes("abba$"), CLASS_CAP).unwrap();
        let b = oracle_minimal_dawg(&codes("abab$"), CLASS_CAP).unwrap();
        assert!(canonical_isomorphic(&a, &a));
        assert!(!canonical_isomorphic(&a, &b));
    }

    #[test]
    fn maw_examples() {
        let core: Vec<u64> = b"abaab".iter().map(|&b| b as u64).collect();
        let abc = [b'a' as u64, b'b' as u64, b'c' as u64];
        assert_eq!(
            naive_maw(&core, &abc, MAW_CAP).unwrap(),
            words(&["aaa", "aaba", "bab", "bb", "c"])
        );
        assert_eq!(naive_maw(&[97], &[97], MAW_CAP).unwrap(), words(&["aa"]));
        assert_eq!(naive_maw(&[97, 98], &[97, 98], MAW_CAP).unwrap(), words(&["aa", "ba", "bb"]));
    }

    #[test]
    fn maximal_repeats() {
        assert_eq!(naive_maximal_repeats(&codes("abba$"), CLASS_CAP).unwrap(), set(&["a", "b"]));
        assert_eq!(naive_maximal_repeats(&codes("aaa$"), CLASS_CAP).unwrap(), set(&["a", "aa"]));
        assert!(naive_maximal_repeats(&codes("ab$"), CLASS_CAP).unwrap().is_empty());
    }

    #[test]
    fn mf_trie_matches_worked_example() {
        let t = Text::from_bytes_with_sigma(b"abaab", 3).unwrap();
        let d = oracle_minimal_dawg(t.symbols(), CLASS_CAP).unwrap();
        assert_eq!(
            reference_mf_trie(&d, &t, usize::MAX).unwrap(),
            words(&["aaa", "aaba", "bab", "bb", "c"])
        );
    }
}
