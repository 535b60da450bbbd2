//! Input ingestion: rank compression of the alphabet and sentinel handling.
//!
//! Every structure in this crate is built over a [`Text`], a sequence of dense
//! symbol codes whose last symbol is unique. Texts produced by [`Text::ingest`]
//! always end with the sentinel code `0`, which is smaller than every real
//! symbol. Positions exposed through the public API are 1-based and inclusive,
//! internal indexing is 0-based.

use serde::Serialize;

use crate::error::{Error, Result};

/// Dense symbol code. `0` is reserved for the sentinel.
pub type Code = u32;

pub const SENTINEL: Code = 0;

/// A decoded symbol: either the sentinel or an original input value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Sentinel,
    Value(u64),
}

/// How original symbol values are rendered in exports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SymbolKind {
    Bytes,
    Ints,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Text {
    symbols: Vec<Code>,
    /// `alphabet[c - 1]` is the original value of code `c`.
    alphabet: Vec<u64>,
    declared_sigma: usize,
    /// Declared symbols that never occur in the input, ascending.
    absent: Vec<u64>,
    kind: SymbolKind,
}

impl Text {
    /// Rank-compresses `raw` and appends the sentinel.
    ///
    /// Codes are assigned by ascending original value starting at 1. When
    /// `declared_sigma` exceeds the number of distinct symbols, the missing
    /// members of the declared alphabet are taken to be the smallest absent
    /// values above the smallest present one.
    pub fn ingest(raw: &[u64], declared_sigma: Option<usize>, kind: SymbolKind) -> Result<Text> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        let (codes, alphabet) = rank_compress(raw);
        let distinct = alphabet.len();
        let declared = declared_sigma.unwrap_or(distinct);
        if declared < distinct {
            return Err(Error::AlphabetTooSmall { declared, distinct });
        }
        let mut absent = Vec::with_capacity(declared - distinct);
        let mut candidate = alphabet[0];
        let mut present = alphabet.iter().peekable();
        while absent.len() < declared - distinct {
            while present.peek().is_some_and(|&&v| v < candidate) {
                present.next();
            }
            if present.peek() != Some(&&candidate) {
                absent.push(candidate);
            }
            candidate += 1;
        }
        let mut symbols = codes;
        symbols.push(SENTINEL);
        Ok(Text { symbols, alphabet, declared_sigma: declared, absent, kind })
    }

    pub fn from_bytes(raw: &[u8]) -> Result<Text> {
        let raw: Vec<u64> = raw.iter().map(|&b| b as u64).collect();
        Text::ingest(&raw, None, SymbolKind::Bytes)
    }

    pub fn from_bytes_with_sigma(raw: &[u8], declared_sigma: usize) -> Result<Text> {
        let raw: Vec<u64> = raw.iter().map(|&b| b as u64).collect();
        Text::ingest(&raw, Some(declared_sigma), SymbolKind::Bytes)
    }

    pub fn from_ints(raw: &[u64]) -> Result<Text> {
        Text::ingest(raw, None, SymbolKind::Ints)
    }

    /// Reverses the non-sentinel part and re-appends the sentinel.
    pub fn reverse_core(&self) -> Text {
        let n = self.n();
        let mut symbols: Vec<Code> = self.symbols[..n - 1].iter().rev().copied().collect();
        symbols.push(self.terminal());
        Text { symbols, ..self.clone() }
    }

    /// Reverses the whole sequence, terminal symbol included.
    ///
    /// Only defined when the first symbol is unique as well, so that the result
    /// is again terminated by a unique symbol. Used with texts of the form
    /// `#w$` to compare structures of a string and of its reversal.
    pub fn reverse_full(&self) -> Result<Text> {
        let first = self.symbols[0];
        if self.n() < 2 || self.symbols[1..].contains(&first) {
            return Err(Error::NotDoublyTerminated);
        }
        let symbols = self.symbols.iter().rev().copied().collect();
        Ok(Text { symbols, ..self.clone() })
    }

    /// Original symbols of `y[i..j]`, 1-based and inclusive.
    pub fn decode_interval(&self, i: usize, j: usize) -> Result<Vec<Symbol>> {
        let n = self.n();
        if i < 1 || i > j || j > n {
            return Err(Error::BadInterval { i, j, n });
        }
        Ok(self.symbols[i - 1..j].iter().map(|&c| self.decode(c)).collect())
    }

    pub fn decode(&self, code: Code) -> Symbol {
        if code == SENTINEL {
            Symbol::Sentinel
        } else {
            Symbol::Value(self.alphabet[code as usize - 1])
        }
    }

    /// Length including the terminal symbol.
    pub fn n(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[Code] {
        &self.symbols
    }

    /// Everything but the terminal symbol.
    pub fn core(&self) -> &[Code] {
        &self.symbols[..self.n() - 1]
    }

    pub fn terminal(&self) -> Code {
        self.symbols[self.n() - 1]
    }

    /// Number of dense codes, sentinel included.
    pub fn sigma(&self) -> usize {
        self.alphabet.len() + 1
    }

    /// Number of distinct non-sentinel symbols.
    pub fn distinct(&self) -> usize {
        self.alphabet.len()
    }

    pub fn declared_sigma(&self) -> usize {
        self.declared_sigma
    }

    /// Members of the declared alphabet that do not occur in the input.
    pub fn absent_symbols(&self) -> &[u64] {
        &self.absent
    }

    pub fn kind(&self) -> SymbolKind {
        self.kind
    }

    pub fn render_symbol(&self, s: Symbol) -> String {
        match s {
            Symbol::Sentinel => "$".to_string(),
            Symbol::Value(v) => render_value(self.kind, v),
        }
    }

    /// Renders a code sequence for humans: characters for byte input,
    /// space-separated numbers for integer input.
    pub fn render(&self, codes: &[Code]) -> String {
        let parts = codes.iter().map(|&c| self.render_symbol(self.decode(c)));
        match self.kind {
            SymbolKind::Bytes => parts.collect(),
            SymbolKind::Ints => parts.collect::<Vec<_>>().join(" "),
        }
    }

    pub fn render_values(&self, values: &[u64]) -> String {
        let parts = values.iter().map(|&v| render_value(self.kind, v));
        match self.kind {
            SymbolKind::Bytes => parts.collect(),
            SymbolKind::Ints => parts.collect::<Vec<_>>().join(" "),
        }
    }
}

fn render_value(kind: SymbolKind, v: u64) -> String {
    match kind {
        SymbolKind::Bytes if (0x21..0x7f).contains(&v) => (v as u8 as char).to_string(),
        SymbolKind::Bytes if v < 256 => format!("\\x{v:02x}"),
        SymbolKind::Bytes => format!("<{v}>"),
        SymbolKind::Ints => v.to_string(),
    }
}

/// Order-preserving map of `raw` onto `1..=distinct`, by LSD radix sort.
fn rank_compress(raw: &[u64]) -> (Vec<Code>, Vec<u64>) {
    let max = raw.iter().copied().max().unwrap_or(0);
    if max < 1 << 16 {
        let mut code = vec![0u32; max as usize + 1];
        for &v in raw {
            code[v as usize] = 1;
        }
        let mut alphabet = Vec::new();
        for (v, c) in code.iter_mut().enumerate() {
            if *c != 0 {
                alphabet.push(v as u64);
                *c = alphabet.len() as u32;
            }
        }
        return (raw.iter().map(|&v| code[v as usize]).collect(), alphabet);
    }

    let mut order: Vec<u32> = (0..raw.len() as u32).collect();
    let mut scratch = vec![0u32; raw.len()];
    let mut shift = 0;
    while shift < 64 && (max >> shift) != 0 {
        let mut count = vec![0usize; 1 << 16];
        for &i in &order {
            count[((raw[i as usize] >> shift) & 0xffff) as usize] += 1;
        }
        let mut sum = 0;
        for c in count.iter_mut() {
            let k = *c;
            *c = sum;
            sum += k;
        }
        for &i in &order {
            let d = ((raw[i as usize] >> shift) & 0xffff) as usize;
            scratch[count[d]] = i;
            count[d] += 1;
        }
        std::mem::swap(&mut order, &mut scratch);
        shift += 16;
    }
    let mut codes = vec![0u32; raw.len()];
    let mut alphabet: Vec<u64> = Vec::new();
    for &i in &order {
        let v = raw[i as usize];
        if alphabet.last() != Some(&v) {
            alphabet.push(v);
        }
        codes[i as usize] = alphabet.len() as u32;
    }
    (codes, alphabet)
}
