//! Suffix array by induced sorting (SA-IS) and LCP array by Kasai's algorithm.

use crate::text::{Code, Text};

/// Sorted order of all suffixes of a text, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuffixArray {
    pub sa: Vec<u32>,
    pub rank: Vec<u32>,
}

impl SuffixArray {
    pub fn len(&self) -> usize {
        self.sa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }

    /// Start positions in rank order, 1-based.
    pub fn one_based(&self) -> Vec<usize> {
        self.sa.iter().map(|&p| p as usize + 1).collect()
    }
}

/// `lcp[k]` is the longest common prefix of the suffixes at ranks `k - 1` and
/// `k`; `lcp[0]` is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcpArray {
    pub lcp: Vec<u32>,
}

pub fn build_sa(t: &Text) -> SuffixArray {
    let s = t.symbols();
    let sa = sa_is(s, t.sigma() as u32 - 1);
    let mut rank = vec![0u32; sa.len()];
    for (r, &p) in sa.iter().enumerate() {
        rank[p as usize] = r as u32;
    }
    SuffixArray { sa, rank }
}

pub fn build_lcp(t: &Text, sa: &SuffixArray) -> LcpArray {
    let s = t.symbols();
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = sa.rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa.sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    LcpArray { lcp }
}

fn sa_naive(s: &[Code]) -> Vec<u32> {
    let mut sa: Vec<u32> = (0..s.len() as u32).collect();
    sa.sort_by(|&a, &b| s[a as usize..].cmp(&s[b as usize..]));
    sa
}

/// SA-IS over symbols in `0..=upper`. No terminator is required: the empty
/// suffix is handled implicitly.
fn sa_is(s: &[Code], upper: u32) -> Vec<u32> {
    let n = s.len();
    match n {
        0 => return vec![],
        1 => return vec![0],
        2 => return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] },
        _ if n < 10 => return sa_naive(s),
        _ => {}
    }
    let upper = upper as usize;
    const NONE: u32 = u32::MAX;

    // ls[i]: suffix i is S-type.
    let mut ls = vec![false; n];
    for i in (0..n - 1).rev() {
        ls[i] = if s[i] == s[i + 1] { ls[i + 1] } else { s[i] < s[i + 1] };
    }
    let mut sum_l = vec![0usize; upper + 2];
    let mut sum_s = vec![0usize; upper + 2];
    for i in 0..n {
        if !ls[i] {
            sum_s[s[i] as usize] += 1;
        } else {
            sum_l[s[i] as usize + 1] += 1;
        }
    }
    for c in 0..=upper {
        sum_s[c] += sum_l[c];
        if c < upper {
            sum_l[c + 1] += sum_s[c];
        }
    }

    let mut sa = vec![NONE; n];
    let induce = |sa: &mut Vec<u32>, lms: &[u32]| {
        sa.fill(NONE);
        let mut buf = sum_s.clone();
        for &d in lms {
            let d = d as usize;
            if d == n {
                continue;
            }
            let c = s[d] as usize;
            sa[buf[c]] = d as u32;
            buf[c] += 1;
        }
        buf.copy_from_slice(&sum_l);
        let c = s[n - 1] as usize;
        sa[buf[c]] = (n - 1) as u32;
        buf[c] += 1;
        for i in 0..n {
            let v = sa[i];
            if v != NONE && v >= 1 && !ls[v as usize - 1] {
                let c = s[v as usize - 1] as usize;
                sa[buf[c]] = v - 1;
                buf[c] += 1;
            }
        }
        buf.copy_from_slice(&sum_l);
        for i in (0..n).rev() {
            let v = sa[i];
            if v != NONE && v >= 1 && ls[v as usize - 1] {
                let c = s[v as usize - 1] as usize + 1;
                buf[c] -= 1;
                sa[buf[c]] = v - 1;
            }
        }
    };

    let mut lms_map = vec![NONE; n + 1];
    let mut lms = Vec::new();
    for i in 1..n {
        if !ls[i - 1] && ls[i] {
            lms_map[i] = lms.len() as u32;
            lms.push(i as u32);
        }
    }
    let m = lms.len();
    induce(&mut sa, &lms);

    if m > 0 {
        let mut sorted_lms: Vec<u32> = sa
            .iter()
            .copied()
            .filter(|&v| v != NONE && lms_map[v as usize] != NONE)
            .collect();
        let mut rec_s = vec![0u32; m];
        let mut rec_upper = 0u32;
        rec_s[lms_map[sorted_lms[0] as usize] as usize] = 0;
        for i in 1..m {
            let mut l = sorted_lms[i - 1] as usize;
            let mut r = sorted_lms[i] as usize;
            let next = |p: usize| {
                let k = lms_map[p] as usize + 1;
                if k < m {
                    lms[k] as usize
                } else {
                    n
                }
            };
            let end_l = next(l);
            let end_r = next(r);
            let mut same = true;
            if end_l - l != end_r - r {
                same = false;
            } else {
                while l < end_l {
                    if s[l] != s[r] {
                        break;
                    }
                    l += 1;
                    r += 1;
                }
                if l == n || s[l] != s[r] {
                    same = false;
                }
            }
            if !same {
                rec_upper += 1;
            }
            rec_s[lms_map[sorted_lms[i] as usize] as usize] = rec_upper;
        }
        let rec_sa = sa_is(&rec_s, rec_upper);
        for (slot, &r) in sorted_lms.iter_mut().zip(&rec_sa) {
            *slot = lms[r as usize];
        }
        induce(&mut sa, &sorted_lms);
    }
    sa
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_lcp(s: &[Code], sa: &[u32]) -> Vec<u32> {
        let mut out = vec![0];
        for w in sa.windows(2) {
            let (a, b) = (&s[w[0] as usize..], &s[w[1] as usize..]);
            out.push(a.iter().zip(b).take_while(|(x, y)| x == y).count() as u32);
        }
        out
    }

    #[test]
    fn small_examples() {
        let t = Text::from_bytes(b"abba").unwrap();
        let sa = build_sa(&t);
        assert_eq!(sa.one_based(), vec![5, 4, 1, 3, 2]);
        assert_eq!(build_lcp(&t, &sa).lcp[1..], [0, 1, 0, 1]);

        let t = Text::from_bytes(b"a").unwrap();
        let sa = build_sa(&t);
        assert_eq!(sa.one_based(), vec![2, 1]);
        assert_eq!(build_lcp(&t, &sa).lcp[1..], [0]);

        let t = Text::from_bytes(b"aaa").unwrap();
        let sa = build_sa(&t);
        assert_eq!(sa.one_based(), vec![4, 3, 2, 1]);
        assert_eq!(build_lcp(&t, &sa).lcp[1..], [0, 1, 2]);
    }

    #[test]
    fn terminal_need_not_be_smallest() {
        let s: Vec<Code> = b"banana".iter().map(|&b| (b - b'a') as u32).collect();
        for len in 1..=s.len() {
            assert_eq!(sa_is(&s[..len], 25), sa_naive(&s[..len]));
        }
        let long: Vec<Code> = (0..500u32).map(|i| (i * 7 + i / 13) % 5).collect();
        assert_eq!(sa_is(&long, 4), sa_naive(&long));
    }

    proptest! {
        #[test]
        fn matches_naive_sort(s in prop::collection::vec(0u32..4, 0..200)) {
            prop_assert_eq!(sa_is(&s, 3), sa_naive(&s));
        }

        #[test]
        fn lcp_matches_naive(raw in prop::collection::vec(0u64..6, 1..200)) {
            let t = Text::from_ints(&raw).unwrap();
            let sa = build_sa(&t);
            prop_assert_eq!(&sa.sa, &sa_naive(t.symbols()));
            prop_assert_eq!(build_lcp(&t, &sa).lcp, naive_lcp(t.symbols(), &sa.sa));
        }
    }
}
