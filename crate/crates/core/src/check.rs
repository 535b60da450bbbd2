//! Property checks against the brute-force oracle, the corpora they run on,
//! and the scaling measurements. Shared by the acceptance suite and the
//! command-line `verify` and `bench` commands.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;

use crate::affix::{build_affix_tree, extract_mwl, AffixTree};
use crate::cdawg::{build_symmetric_cdawg, cdawg_from_dawg, cdawg_isomorphic};
use crate::dawg::canonical_isomorphic;
use crate::forward::{equal_count_child, forward_dawg, rrep_of_st_nodes};
use crate::gen::{all_strings, doubly_terminated, random_values, rng};
use crate::lstrie::{build_lstrie, check_labels};
use crate::maw::{compute_maws, decode_maws, maw_bounds};
use crate::oracle::{
    naive_classes, naive_maw, naive_maximal_repeats, oracle_minimal_dawg, reference_mf_trie, CLASS_CAP, MAW_CAP,
};
use crate::pipeline::{build, StructureKind};
use crate::suffix_tree::{NodeId, SuffixTree};
use crate::text::{Code, SymbolKind, Text};
use crate::weiner::{assemble_reversed_dawg, weiner_links};

/// `Err` carries a description of the violated property.
pub type Verdict = std::result::Result<(), String>;

fn fail<T>(what: impl Into<String>) -> std::result::Result<T, String> {
    Err(what.into())
}

fn lift<T>(r: crate::error::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// A core string over `0..sigma` together with its declared alphabet size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub core: Vec<u64>,
    pub sigma: u64,
}

impl Case {
    pub fn text(&self) -> std::result::Result<Text, String> {
        lift(Text::ingest(&self.core, Some(self.sigma as usize), SymbolKind::Ints))
    }
}

/// Alphabet size of a random corpus, possibly depending on the length.
#[derive(Clone, Copy, Debug)]
pub enum SigmaRule {
    Fixed(u64),
    Sqrt,
    Linear,
}

impl SigmaRule {
    fn at(self, n: usize) -> u64 {
        match self {
            SigmaRule::Fixed(k) => k,
            SigmaRule::Sqrt => ((n as f64).sqrt().ceil() as u64).max(1),
            SigmaRule::Linear => n as u64,
        }
    }
}

/// Every core of length `1..=max_len` over `0..sigma`, shortest first.
pub fn exhaustive(sigma: u64, max_len: usize) -> impl Iterator<Item = Case> {
    (1..=max_len).flat_map(move |len| all_strings(sigma, len).map(move |core| Case { core, sigma }))
}

/// `count` cores with lengths uniform in `1..=max_n`, cycling through `rules`.
pub fn random_cases(seed: u64, count: usize, max_n: usize, rules: &[SigmaRule]) -> Vec<Case> {
    use rand::Rng;
    let mut r = rng(seed);
    (0..count)
        .map(|k| {
            let n = r.gen_range(1..=max_n);
            let sigma = rules[k % rules.len()].at(n);
            Case { core: random_values(&mut r, n, sigma), sigma }
        })
        .collect()
}

/// Forward DAWG equals the minimal DAWG built from end-position classes.
pub fn check_dawg(case: &Case) -> Verdict {
    let t = case.text()?;
    let st = lift(SuffixTree::build(&t))?;
    let (_, fd) = lift(forward_dawg(&st))?;
    let oracle = lift(oracle_minimal_dawg(t.symbols(), CLASS_CAP))?;
    if !canonical_isomorphic(&fd.dawg, &oracle) {
        return fail("forward DAWG differs from the oracle");
    }
    Ok(())
}

/// On `#w$`, the reversed DAWG from Weiner links equals both the forward DAWG
/// of the reversal and the oracle on the reversal.
pub fn check_rdawg(case: &Case) -> Verdict {
    let t = lift(doubly_terminated(&case.core))?;
    let st = lift(SuffixTree::build(&t))?;
    let rd = assemble_reversed_dawg(&st, &lift(weiner_links(&st))?);
    let rev = lift(t.reverse_full())?;
    let rst = lift(SuffixTree::build(&rev))?;
    let (_, fd) = lift(forward_dawg(&rst))?;
    if !canonical_isomorphic(&rd, &fd.dawg) {
        return fail("reversed DAWG differs from the forward DAWG of the reversal");
    }
    let oracle = lift(oracle_minimal_dawg(rev.symbols(), CLASS_CAP))?;
    if !canonical_isomorphic(&rd, &oracle) {
        return fail("reversed DAWG differs from the oracle");
    }
    Ok(())
}

/// Node and edge bounds of the DAWG and the bounds on the number of minimal
/// absent words.
pub fn check_size_bounds(case: &Case) -> Verdict {
    let t = case.text()?;
    let b = lift(build(&t, &[StructureKind::Dawg, StructureKind::Maw]))?;
    let d = &b.dawg.as_ref().unwrap().dawg;
    let n = t.n();
    if d.num_nodes() > 2 * n - 1 {
        return fail(format!("{} nodes exceed 2n-1 for n={n}", d.num_nodes()));
    }
    if n > 2 && d.num_edges() > 3 * n - 4 {
        return fail(format!("{} edges exceed 3n-4 for n={n}", d.num_edges()));
    }
    let count = b.maws.as_ref().unwrap().len();
    let (lo, hi) = maw_bounds(&t);
    if count < lo || count > hi {
        return fail(format!("{count} minimal absent words outside [{lo}, {hi}]"));
    }
    Ok(())
}

/// Minimal absent words equal the characterization-based oracle and, when
/// `mf_trie` is set, the quadratic reference scheme. Also checks the work
/// counter.
pub fn check_maw(case: &Case, mf_trie: bool) -> Verdict {
    let t = case.text()?;
    let st = lift(SuffixTree::build(&t))?;
    let (_, fd) = lift(forward_dawg(&st))?;
    let ms = lift(compute_maws(&fd.dawg, &t))?;
    let words = lift(decode_maws(&ms, &t, false))?;
    let got: BTreeSet<Vec<u64>> = words.iter().cloned().collect();
    if got.len() != words.len() {
        return fail("duplicate minimal absent words");
    }
    let mut alphabet: Vec<u64> = case.core.clone();
    alphabet.extend_from_slice(t.absent_symbols());
    alphabet.sort_unstable();
    alphabet.dedup();
    let expected = lift(naive_maw(&case.core, &alphabet, MAW_CAP))?;
    if got != expected {
        let extra: Vec<_> = got.difference(&expected).take(3).collect();
        let missing: Vec<_> = expected.difference(&got).take(3).collect();
        return fail(format!("set differs from oracle: extra {extra:?}, missing {missing:?}"));
    }
    if mf_trie && lift(reference_mf_trie(&fd.dawg, &t, usize::MAX))? != got {
        return fail("set differs from the quadratic reference");
    }
    check_accounting_of(&fd.dawg, &ms)
}

fn check_accounting_of(d: &crate::dawg::Dawg, ms: &crate::maw::MawSet) -> Verdict {
    let bound = 2 * (d.num_edges() + ms.triples.len() + d.num_nodes()) as u64;
    if ms.examined > bound {
        return fail(format!("examined {} adjacency entries, bound {bound}", ms.examined));
    }
    Ok(())
}

/// The merge scans read at most `2(E + |MAW| + V)` adjacency entries.
pub fn check_accounting(case: &Case) -> Verdict {
    let t = case.text()?;
    let st = lift(SuffixTree::build(&t))?;
    let (_, fd) = lift(forward_dawg(&st))?;
    let ms = lift(compute_maws(&fd.dawg, &t))?;
    check_accounting_of(&fd.dawg, &ms)
}

fn affix_of(t: &Text) -> std::result::Result<(SuffixTree, AffixTree), String> {
    let st = lift(SuffixTree::build(t))?;
    let (ast, _) = lift(forward_dawg(&st))?;
    let at = lift(build_affix_tree(ast, &st))?;
    Ok((st, at))
}

/// Affix-tree nodes are the left and right representatives. The forward
/// parent of a node is its longest proper prefix among them and the backward
/// parent its longest proper suffix.
pub fn check_affix_nodes(case: &Case) -> Verdict {
    let t = case.text()?;
    let (_, at) = affix_of(&t)?;
    let classes = lift(naive_classes(t.symbols(), CLASS_CAP))?;
    let mut expected = classes.l_set();
    expected.extend(classes.r_set());
    let got: BTreeSet<Vec<Code>> = (0..at.len() as NodeId).map(|v| at.node_string(v).to_vec()).collect();
    if got.len() != at.len() || got != expected {
        return fail(format!("node set has {} strings, oracle {}", got.len(), expected.len()));
    }
    for v in 1..at.len() as NodeId {
        let s = at.node_string(v);
        let prefix = (0..s.len()).rev().find(|&k| expected.contains(&s[..k])).unwrap();
        let suffix = (1..=s.len()).find(|&k| expected.contains(&s[k..])).unwrap();
        if at.node_string(at.ast().parent(v)) != &s[..prefix] {
            return fail(format!("forward parent of node {v} is not its longest node prefix"));
        }
        if at.node_string(at.backward_parent(v)) != &s[suffix..] {
            return fail(format!("backward parent of node {v} is not its longest node suffix"));
        }
        if at.backward_label(v).iter().rev().copied().collect::<Vec<_>>() != s[..suffix] {
            return fail(format!("backward label of node {v} is wrong"));
        }
    }
    Ok(())
}

/// Every substring is reached by forward and by backward extension with the
/// right length. It ends exactly on a node in one direction iff it does in
/// the other, iff the oracle lists it as a representative, and then both
/// walks stop at the same node.
pub fn check_affix_walks(case: &Case) -> Verdict {
    let t = case.text()?;
    let (_, at) = affix_of(&t)?;
    let y = t.symbols();
    let n = y.len();
    let classes = lift(naive_classes(y, CLASS_CAP))?;
    let mut reps = classes.l_set();
    reps.extend(classes.r_set());

    let mut fwd = vec![Vec::new(); n];
    for (i, row) in fwd.iter_mut().enumerate() {
        let mut c = at.root_cursor();
        for (j, &b) in y.iter().enumerate().skip(i) {
            c = match at.extend_right(c, b) {
                Some(c) if c.depth as usize == j - i + 1 => c,
                _ => return fail(format!("forward walk of y[{i}..={j}] fails")),
            };
            row.push(c);
        }
    }
    for j in 0..n {
        let mut c = at.root_cursor();
        for i in (0..=j).rev() {
            c = match at.extend_left(c, y[i]) {
                Some(c) if c.depth as usize == j - i + 1 => c,
                _ => return fail(format!("backward walk of y[{i}..={j}] fails")),
            };
            let f = fwd[i][j - i];
            let f_exact = at.depth(f.node) == f.depth;
            let b_exact = at.depth(c.node) == c.depth;
            if f_exact != b_exact || (f_exact && f.node != c.node) {
                return fail(format!("walks disagree on y[{i}..={j}]"));
            }
            if f_exact != reps.contains(&y[i..=j]) {
                return fail(format!("node status of y[{i}..={j}] contradicts the oracle"));
            }
        }
    }
    Ok(())
}

/// Internal nodes of the compact DAWG are the maximal repeats, and the
/// forward half of the symmetric structure is the same graph.
pub fn check_cdawg(case: &Case) -> Verdict {
    let t = case.text()?;
    let st = lift(SuffixTree::build(&t))?;
    let (ast, fd) = lift(forward_dawg(&st))?;
    let g = lift(cdawg_from_dawg(&fd.dawg, t.symbols()))?;
    let got: BTreeSet<Vec<Code>> = g.internal().map(|v| g.node_string(v).to_vec()).collect();
    let expected = lift(naive_maximal_repeats(t.symbols(), CLASS_CAP))?;
    if got != expected {
        return fail(format!("{} internal nodes, {} maximal repeats", got.len(), expected.len()));
    }
    let rrep = rrep_of_st_nodes(&st, &equal_count_child(&st, &st.slt_view()));
    let rd = assemble_reversed_dawg(&st, &lift(weiner_links(&st))?);
    let sym = lift(build_symmetric_cdawg(&st, &ast, &rrep, &rd))?;
    if !cdawg_isomorphic(&sym.forward, &g) {
        return fail("forward projection differs from the compacted DAWG");
    }
    Ok(())
}

/// On `#w$` the backward half of the symmetric structure is the compact DAWG
/// of the reversal, and the node count does not depend on the orientation.
pub fn check_symmetric_cdawg(case: &Case) -> Verdict {
    let t = lift(doubly_terminated(&case.core))?;
    let sym_of = |t: &Text| {
        let st = lift(SuffixTree::build(t))?;
        let (ast, fd) = lift(forward_dawg(&st))?;
        let rrep = rrep_of_st_nodes(&st, &equal_count_child(&st, &st.slt_view()));
        let rd = assemble_reversed_dawg(&st, &lift(weiner_links(&st))?);
        let sym = lift(build_symmetric_cdawg(&st, &ast, &rrep, &rd))?;
        Ok::<_, String>((sym, fd.dawg))
    };
    let (sym, _) = sym_of(&t)?;
    let rev = lift(t.reverse_full())?;
    let (rsym, rdawg) = sym_of(&rev)?;
    let expected = lift(cdawg_from_dawg(&rdawg, rev.symbols()))?;
    if !cdawg_isomorphic(&sym.backward, &expected) {
        return fail("backward half differs from the compact DAWG of the reversal");
    }
    if sym.num_nodes() != rsym.num_nodes() {
        return fail("node count depends on the orientation");
    }
    Ok(())
}

/// Type-2 nodes are exactly the implicit modified Weiner link targets, which
/// the oracle finds as left extensions of tree nodes that fall inside edges.
/// All labels are single symbols that reassemble the tree's labels.
pub fn check_lstrie(case: &Case) -> Verdict {
    let t = case.text()?;
    let (st, at) = affix_of(&t)?;
    let wl = lift(weiner_links(&st))?;
    let mwl = lift(extract_mwl(&at, &st, &wl))?;
    let trie = lift(build_lstrie(&st, &mwl))?;
    let string_at = |lower: NodeId, depth: u32| {
        let w = st.witness(lower) as usize;
        st.symbols()[w..w + depth as usize].to_vec()
    };
    let targets: BTreeSet<Vec<Code>> = mwl.implicit().map(|(_, l)| string_at(l.lower, l.depth)).collect();
    let type2: BTreeSet<Vec<Code>> =
        (trie.num_st_nodes() as NodeId..trie.len() as NodeId).map(|v| trie.node_string(v).to_vec()).collect();
    if type2 != targets || type2.len() != trie.num_type2() {
        return fail("type-2 nodes differ from implicit link targets");
    }
    let classes = lift(naive_classes(t.symbols(), CLASS_CAP))?;
    let mut oracle = BTreeSet::new();
    for x in 0..st.len() as NodeId {
        for a in 0..t.sigma() as Code {
            let mut ax = vec![a];
            ax.extend_from_slice(st.node_string(x));
            if classes.id_of(&ax).is_some() && st.find_node(&ax).is_none() {
                oracle.insert(ax);
            }
        }
    }
    if type2 != oracle {
        return fail(format!("{} type-2 nodes, oracle expects {}", type2.len(), oracle.len()));
    }
    if let Some(v) = check_labels(&trie, &st) {
        return fail(format!("labels into suffix-tree node {v} do not reassemble"));
    }
    if (1..trie.len() as NodeId).any(|v| trie.edge_label(v).first() != Some(&trie.label(v))) {
        return fail("stored label is not the first symbol of its edge");
    }
    if trie.len() > 2 * (2 * t.n() - 1) {
        return fail("trie exceeds 2(2n-1) nodes");
    }
    Ok(())
}

/// Removes symbols from a failing core while it keeps failing, within a
/// budget of property evaluations.
pub fn shrink(case: &Case, prop: impl Fn(&Case) -> Verdict, budget: usize) -> Case {
    let mut best = case.clone();
    let mut spent = 0;
    'outer: loop {
        for k in 0..best.core.len() {
            if best.core.len() == 1 || spent >= budget {
                break 'outer;
            }
            let mut c = best.clone();
            c.core.remove(k);
            spent += 1;
            if prop(&c).is_err() {
                best = c;
                continue 'outer;
            }
        }
        break;
    }
    best
}

/// Outcome of running one property over a corpus.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub elapsed_ms: f64,
    /// Shrunk failing core and the violated property.
    pub failure: Option<(Vec<u64>, String)>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Runs `prop` on `cases` in order and stops at the first failure.
pub fn run_property(
    name: &'static str,
    cases: impl IntoIterator<Item = Case>,
    prop: impl Fn(&Case) -> Verdict,
) -> SuiteReport {
    let start = Instant::now();
    let mut count = 0;
    let mut failure = None;
    for case in cases {
        count += 1;
        if let Err(why) = prop(&case) {
            let small = shrink(&case, &prop, 200);
            let why = prop(&small).err().unwrap_or(why);
            failure = Some((small.core, why));
            break;
        }
    }
    SuiteReport { name, cases: count, elapsed_ms: start.elapsed().as_secs_f64() * 1e3, failure }
}

/// Named property suites with their corpora.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Dawg,
    Rdawg,
    Bounds,
    Maw,
    Accounting,
    AffixNodes,
    AffixWalks,
    Cdawg,
    SymmetricCdawg,
    Lstrie,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Dawg,
        Suite::Rdawg,
        Suite::Bounds,
        Suite::Maw,
        Suite::Accounting,
        Suite::AffixNodes,
        Suite::AffixWalks,
        Suite::Cdawg,
        Suite::SymmetricCdawg,
        Suite::Lstrie,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dawg => "dawg",
            Suite::Rdawg => "rdawg",
            Suite::Bounds => "bounds",
            Suite::Maw => "maw",
            Suite::Accounting => "accounting",
            Suite::AffixNodes => "affix-nodes",
            Suite::AffixWalks => "affix-walks",
            Suite::Cdawg => "cdawg",
            Suite::SymmetricCdawg => "scdawg",
            Suite::Lstrie => "lstrie",
        }
    }

    /// Suites whose name starts with `prefix`, so `affix` selects both
    /// affix suites.
    pub fn matching(prefix: &str) -> Vec<Suite> {
        Suite::ALL.into_iter().filter(|s| s.name().starts_with(prefix)).collect()
    }
}

/// Corpus sizes. The defaults are the full acceptance corpora; `max_n` caps
/// every string length and `scale` shrinks random counts.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub max_n: Option<usize>,
    pub scale: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0x5eed, max_n: None, scale: 1.0 }
    }
}

impl SuiteConfig {
    fn len(&self, n: usize) -> usize {
        self.max_n.map_or(n, |m| m.min(n))
    }

    fn count(&self, k: usize) -> usize {
        ((k as f64 * self.scale).ceil() as usize).max(1)
    }

    fn exhaustive(&self, sigma: u64, max_len: usize) -> impl Iterator<Item = Case> {
        exhaustive(sigma, self.len(max_len))
    }

    fn random(&self, salt: u64, count: usize, max_n: usize, rules: &[SigmaRule]) -> Vec<Case> {
        random_cases(self.seed ^ salt, self.count(count), self.len(max_n), rules)
    }
}

const SMALL_SIGMAS: [SigmaRule; 4] = [SigmaRule::Fixed(2), SigmaRule::Fixed(4), SigmaRule::Fixed(16), SigmaRule::Linear];

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    let name = suite.name();
    match suite {
        Suite::Dawg => run_property(name, cfg.exhaustive(2, 12).chain(cfg.exhaustive(3, 8)), check_dawg),
        Suite::Rdawg => run_property(
            name,
            cfg.random(1, 500, 1000, &[SigmaRule::Fixed(2), SigmaRule::Fixed(4), SigmaRule::Fixed(16)]),
            check_rdawg,
        ),
        Suite::Bounds => run_property(
            name,
            cfg.random(2, 1000, 10_000, &[SigmaRule::Fixed(2), SigmaRule::Sqrt, SigmaRule::Linear]),
            check_size_bounds,
        ),
        Suite::Maw => {
            let small = run_property(name, cfg.exhaustive(2, 12).chain(cfg.exhaustive(3, 8)), |c| check_maw(c, false));
            if !small.passed() {
                return small;
            }
            let random = run_property(name, cfg.random(3, 300, 300, &SMALL_SIGMAS), |c| check_maw(c, true));
            merge(small, random)
        }
        Suite::Accounting => {
            let small = run_property(name, cfg.exhaustive(2, 12).chain(cfg.exhaustive(3, 8)), check_accounting);
            if !small.passed() {
                return small;
            }
            let random = run_property(
                name,
                cfg.random(2, 1000, 10_000, &[SigmaRule::Fixed(2), SigmaRule::Sqrt, SigmaRule::Linear]),
                check_accounting,
            );
            merge(small, random)
        }
        Suite::AffixNodes => run_property(name, cfg.exhaustive(2, 10), check_affix_nodes),
        Suite::AffixWalks => run_property(name, cfg.random(4, 100, 200, &SMALL_SIGMAS), check_affix_walks),
        Suite::Cdawg => {
            let small = run_property(name, cfg.exhaustive(2, 12), check_cdawg);
            if !small.passed() {
                return small;
            }
            merge(small, run_property(name, cfg.random(5, 200, 200, &SMALL_SIGMAS), check_cdawg))
        }
        Suite::SymmetricCdawg => {
            let small = run_property(name, cfg.exhaustive(2, 10), check_symmetric_cdawg);
            if !small.passed() {
                return small;
            }
            merge(small, run_property(name, cfg.random(6, 200, 200, &SMALL_SIGMAS), check_symmetric_cdawg))
        }
        Suite::Lstrie => {
            let small = run_property(name, cfg.exhaustive(2, 12), check_lstrie);
            if !small.passed() {
                return small;
            }
            merge(small, run_property(name, cfg.random(5, 200, 200, &SMALL_SIGMAS), check_lstrie))
        }
    }
}

fn merge(a: SuiteReport, b: SuiteReport) -> SuiteReport {
    SuiteReport { name: a.name, cases: a.cases + b.cases, elapsed_ms: a.elapsed_ms + b.elapsed_ms, failure: b.failure }
}

/// Median build time of each structure at one size.
#[derive(Clone, Debug, Serialize)]
pub struct ScalingRow {
    pub n: usize,
    pub sigma: u64,
    /// `(structure, median ms)` in pipeline order.
    pub times: Vec<(StructureKind, f64)>,
    /// Median wall time of suffix tree, DAWG and absent words together, when
    /// measured.
    pub pipeline_ms: Option<f64>,
    pub maws: Option<usize>,
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

/// Builds `structures` `runs` times on one random text per `(n, sigma)`
/// point, over `0..sigma`, and reports the median time of each.
///
/// Runs are interleaved across points, so drift in machine speed during the
/// measurement affects every point alike. With `pipeline_at = Some(n)`, the
/// points of length `n` also time suffix tree, DAWG and absent words built
/// together.
pub fn measure(
    points: &[(usize, u64)],
    runs: usize,
    seed: u64,
    structures: &[StructureKind],
    pipeline_at: Option<usize>,
) -> crate::error::Result<Vec<ScalingRow>> {
    let texts = points
        .iter()
        .map(|&(n, sigma)| {
            let raw = random_values(&mut rng(seed ^ n as u64 ^ sigma.rotate_left(32)), n, sigma);
            Text::ingest(&raw, Some(sigma as usize), SymbolKind::Ints)
        })
        .collect::<crate::error::Result<Vec<_>>>()?;
    let mut per = vec![vec![Vec::new(); structures.len()]; points.len()];
    let mut wall = vec![Vec::new(); points.len()];
    let mut maws = vec![None; points.len()];
    for _ in 0..runs.max(1) {
        for (p, t) in texts.iter().enumerate() {
            let b = build(t, structures)?;
            for s in &b.stats {
                if let Some(k) = structures.iter().position(|&x| x == s.name) {
                    per[p][k].push(s.build_ms);
                }
            }
            drop(b);
            if pipeline_at == Some(points[p].0) {
                let start = Instant::now();
                let b = build(t, &[StructureKind::St, StructureKind::Dawg, StructureKind::Maw])?;
                wall[p].push(start.elapsed().as_secs_f64() * 1e3);
                maws[p] = b.maws.map(|m| m.len());
            }
        }
    }
    Ok(points
        .iter()
        .zip(per)
        .zip(wall)
        .zip(maws)
        .map(|(((&(n, sigma), per), wall), maws)| ScalingRow {
            n,
            sigma,
            times: structures.iter().copied().zip(per).map(|(k, xs)| (k, median(xs))).collect(),
            pipeline_ms: (!wall.is_empty()).then(|| median(wall)),
            maws,
        })
        .collect())
}

/// Largest growth factor between consecutive rows, per structure, normalized
/// to a doubling of `n`. Rows must measure the same structures.
pub fn doubling_ratios(rows: &[ScalingRow]) -> Vec<(StructureKind, f64)> {
    let Some(first) = rows.first() else { return Vec::new() };
    (0..first.times.len())
        .map(|k| {
            let worst = rows
                .windows(2)
                .map(|w| {
                    let growth = (w[1].n as f64 / w[0].n as f64).log2().max(1e-9);
                    (w[1].times[k].1 / w[0].times[k].1.max(1e-3)).powf(1.0 / growth)
                })
                .fold(0.0, f64::max);
            (first.times[k].0, worst)
        })
        .collect()
}

/// Ratio of the slowest to the fastest time, per structure.
pub fn spread(rows: &[ScalingRow]) -> Vec<(StructureKind, f64)> {
    let Some(first) = rows.first() else { return Vec::new() };
    (0..first.times.len())
        .map(|k| {
            let ts = rows.iter().map(|r| r.times[k].1);
            let hi = ts.clone().fold(0.0, f64::max);
            let lo = ts.fold(f64::INFINITY, f64::min);
            (first.times[k].0, hi / lo.max(1e-3))
        })
        .collect()
}

/// Structures whose build cost does not depend on the output size, used for
/// the alphabet sweep. Absent words are left out: their number alone grows
/// with the alphabet.
pub const SWEEP_STRUCTURES: [StructureKind; 7] = [
    StructureKind::St,
    StructureKind::Dawg,
    StructureKind::Rdawg,
    StructureKind::Affix,
    StructureKind::Cdawg,
    StructureKind::Scdawg,
    StructureKind::Lstrie,
];
