use dawg_core::dawg::canonical_isomorphic;
use dawg_core::forward::forward_dawg;
use dawg_core::gen::all_strings;
use dawg_core::oracle::{oracle_minimal_dawg, CLASS_CAP};
use dawg_core::suffix_tree::SuffixTree;
use dawg_core::text::Text;
use dawg_core::weiner::{assemble_reversed_dawg, weiner_links};

#[test]
fn forward_dawg_matches_oracle_on_small_binary() {
    for len in 1..=9 {
        for raw in all_strings(2, len) {
            let t = Text::from_ints(&raw).unwrap();
            let st = SuffixTree::build(&t).unwrap();
            let (_, fd) = forward_dawg(&st).unwrap_or_else(|e| panic!("{raw:?}: {e}"));
            let oracle = oracle_minimal_dawg(t.symbols(), CLASS_CAP).unwrap();
            assert!(canonical_isomorphic(&fd.dawg, &oracle), "forward {raw:?}");

            let rd = assemble_reversed_dawg(&st, &weiner_links(&st).unwrap());
            let rev: Vec<u32> = t.symbols().iter().rev().copied().collect();
            let oracle = oracle_minimal_dawg(&rev, CLASS_CAP).unwrap();
            assert!(canonical_isomorphic(&rd, &oracle), "reversed {raw:?}");
        }
    }
}

#[test]
fn dawgs_match_oracle_on_random_strings() {
    let mut rng = dawg_core::gen::rng(11);
    for round in 0..40 {
        let n = 1 + round * 37;
        for sigma in [2u64, 4, 16, n as u64] {
            let raw = dawg_core::gen::random_values(&mut rng, n, sigma);
            let t = Text::from_ints(&raw).unwrap();
            let st = SuffixTree::build(&t).unwrap();
            let (_, fd) = forward_dawg(&st).unwrap_or_else(|e| panic!("{raw:?}: {e}"));
            let oracle = oracle_minimal_dawg(t.symbols(), CLASS_CAP).unwrap();
            assert!(canonical_isomorphic(&fd.dawg, &oracle), "forward n={n} sigma={sigma}");
            let rd = assemble_reversed_dawg(&st, &weiner_links(&st).unwrap());
            let rev: Vec<u32> = t.symbols().iter().rev().copied().collect();
            let oracle = oracle_minimal_dawg(&rev, CLASS_CAP).unwrap();
            assert!(canonical_isomorphic(&rd, &oracle), "reversed n={n} sigma={sigma}");
        }
    }
}
