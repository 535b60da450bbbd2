//! Structural invariants on random short strings.

use std::collections::BTreeSet;

use dawg_core::check::{
    check_affix_walks, check_cdawg, check_lstrie, check_maw, check_rdawg, check_size_bounds, check_symmetric_cdawg,
    Case,
};
use dawg_core::gen::doubly_terminated;
use dawg_core::maw::{compute_maws, decode_maws};
use dawg_core::pipeline::{build, StructureKind};
use dawg_core::text::Code;
use proptest::prelude::*;

fn case() -> impl Strategy<Value = Case> {
    (1u64..=6).prop_flat_map(|sigma| {
        (prop::collection::vec(0..sigma, 1..48), Just(sigma)).prop_map(|(core, sigma)| Case { core, sigma })
    })
}

fn contains(hay: &[u64], needle: &[u64]) -> bool {
    needle.is_empty() || hay.windows(needle.len()).any(|w| w == needle)
}

fn substrings(s: &[Code]) -> BTreeSet<&[Code]> {
    (0..s.len()).flat_map(|i| (i + 1..=s.len()).map(move |j| &s[i..j])).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn size_bounds_hold(c in case()) {
        prop_assert_eq!(check_size_bounds(&c), Ok(()));
    }

    #[test]
    fn dawg_accepts_exactly_the_substrings(c in case()) {
        let t = c.text().unwrap();
        let b = build(&t, &[StructureKind::Dawg]).unwrap();
        let d = &b.dawg.unwrap().dawg;
        prop_assert!(d.is_sorted());
        let subs = substrings(t.symbols());
        for s in &subs {
            let v = d.walk(s);
            prop_assert!(v.is_some(), "substring {:?} rejected", s);
            let v = v.unwrap();
            prop_assert!(d.shortlen(v) as usize <= s.len() && s.len() <= d.len(v) as usize);
        }
        // Any one-symbol extension that leaves the substrings is rejected.
        for s in &subs {
            for c in 0..=t.terminal() {
                let mut e = s.to_vec();
                e.push(c);
                prop_assert_eq!(d.walk(&e).is_some(), subs.contains(e.as_slice()));
            }
        }
    }

    #[test]
    fn reversed_dawg_matches_oracle(c in case()) {
        prop_assert_eq!(check_rdawg(&c), Ok(()));
    }

    #[test]
    fn absent_words_are_minimal(c in case()) {
        let t = c.text().unwrap();
        let b = build(&t, &[StructureKind::Dawg, StructureKind::Maw]).unwrap();
        let words = decode_maws(b.maws.as_ref().unwrap(), &t, true).unwrap();
        let core = &c.core;
        for w in &words {
            prop_assert!(!contains(core, w), "{:?} occurs", w);
            prop_assert!(contains(core, &w[1..]) && contains(core, &w[..w.len() - 1]), "{:?} is not minimal", w);
        }
        let distinct: BTreeSet<&Vec<u64>> = words.iter().collect();
        prop_assert_eq!(distinct.len(), words.len());
    }

    #[test]
    fn absent_words_match_naive(c in case()) {
        prop_assert_eq!(check_maw(&c, false), Ok(()));
    }

    #[test]
    fn absent_word_work_is_linear_in_output(c in case()) {
        let t = c.text().unwrap();
        let b = build(&t, &[StructureKind::Dawg]).unwrap();
        let d = &b.dawg.unwrap().dawg;
        let ms = compute_maws(d, &t).unwrap();
        prop_assert!(ms.examined <= 2 * (d.num_edges() + ms.len() + d.num_nodes()) as u64);
    }

    #[test]
    fn affix_walks_agree(c in case()) {
        prop_assert_eq!(check_affix_walks(&c), Ok(()));
    }

    #[test]
    fn cdawg_matches_oracle(c in case()) {
        prop_assert_eq!(check_cdawg(&c), Ok(()));
    }

    #[test]
    fn symmetric_cdawg_matches_oracle(c in case()) {
        prop_assert_eq!(check_symmetric_cdawg(&c), Ok(()));
    }

    #[test]
    fn lstrie_is_linear(c in case()) {
        prop_assert_eq!(check_lstrie(&c), Ok(()));
        let t = c.text().unwrap();
        let b = build(&t, &[StructureKind::Lstrie]).unwrap();
        let n = t.n();
        prop_assert!(b.lstrie.unwrap().len() <= 2 * (2 * n - 1));
    }

    #[test]
    fn full_reversal_is_an_involution(c in case()) {
        let t = c.text().unwrap();
        let twice = t.reverse_core().reverse_core();
        prop_assert_eq!(twice.symbols(), t.symbols());
        let framed = doubly_terminated(&c.core).unwrap();
        let once = framed.reverse_full().unwrap();
        prop_assert_eq!(once.symbols().first(), framed.symbols().last());
        let twice = once.reverse_full().unwrap();
        prop_assert_eq!(twice.symbols(), framed.symbols());
    }
}
