//! Inputs shared by the benchmarks.

use dawg_core::gen::{random_values, rng};
use dawg_core::text::{SymbolKind, Text};

/// Uniform random text of length `n` over `sigma` symbols, fixed per
/// `(n, sigma)`.
pub fn random_text(n: usize, sigma: u64) -> Text {
    let raw = random_values(&mut rng(n as u64 ^ sigma << 32), n, sigma);
    Text::ingest(&raw, Some(sigma as usize), SymbolKind::Ints).expect("random text is valid")
}

/// Fibonacci word over `{a, b}`: highly repetitive, with many maximal
/// repeats.
pub fn fibonacci_text(n: usize) -> Text {
    let (mut a, mut b) = (vec![b'a'], vec![b'a', b'b']);
    while b.len() < n {
        let next = [b.as_slice(), a.as_slice()].concat();
        a = std::mem::replace(&mut b, next);
    }
    b.truncate(n);
    Text::from_bytes(&b).expect("fibonacci text is valid")
}
