//! Seeded test-string generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::text::{SymbolKind, Text};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` symbols drawn uniformly from `0..sigma`.
pub fn random_values(rng: &mut impl Rng, n: usize, sigma: u64) -> Vec<u64> {
    (0..n).map(|_| rng.gen_range(0..sigma.max(1))).collect()
}

/// Every string of length `len` over `0..sigma`, in lexicographic order of the
/// reversed string.
pub fn all_strings(sigma: u64, len: usize) -> impl Iterator<Item = Vec<u64>> {
    (0..sigma.pow(len as u32)).map(move |mut k| {
        (0..len)
            .map(|_| {
                let d = k % sigma;
                k /= sigma;
                d
            })
            .collect()
    })
}

/// The text `#core$`, where `#` is a fresh symbol larger than every symbol of
/// `core` and `$` is the sentinel. Both ends are unique, so the full reversal
/// is again a valid text.
pub fn doubly_terminated(core: &[u64]) -> Result<Text> {
    let hash = core.iter().copied().max().map_or(0, |m| m + 1);
    let mut raw = Vec::with_capacity(core.len() + 1);
    raw.push(hash);
    raw.extend_from_slice(core);
    Text::ingest(&raw, None, SymbolKind::Ints)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(all_strings(2, 3).count(), 8);
        assert_eq!(all_strings(3, 2).collect::<Vec<_>>()[5], vec![2, 1]);
    }

    #[test]
    fn doubly_terminated_reverses() {
        let t = doubly_terminated(&[1, 0, 0]).unwrap();
        assert_eq!(t.symbols(), &[3, 2, 1, 1, 0]);
        assert_eq!(t.reverse_full().unwrap().symbols(), &[0, 1, 1, 2, 3]);
    }

    #[test]
    fn seeded_is_deterministic() {
        let a = random_values(&mut rng(7), 50, 4);
        let b = random_values(&mut rng(7), 50, 4);
        assert_eq!(a, b);
        assert!(a.iter().all(|&v| v < 4));
    }
}
