//! Reference constructions and a certificate checker.
//!
//! These are independent of the inducing code and serve as oracles and as
//! the standalone LCP baselines of the benchmark.

use std::fmt;

use crate::arrays::{LcpArray, SuffixArray};
use crate::num::{Index, Symbol};
use crate::text::common_prefix;

/// Suffix array by sorting suffix slices. Quadratic comparisons on
/// repetitive inputs; meant for n up to about 10^5.
pub fn brute_force_sa<S: Symbol, I: Index>(text: &[S]) -> SuffixArray<I> {
    let mut sa: Vec<usize> = (0..text.len()).collect();
    // A proper prefix compares smaller, which is the sentinel convention.
    sa.sort_unstable_by(|&a, &b| text[a..].cmp(&text[b..]));
    SuffixArray::from_vec(sa.into_iter().map(I::from_usize).collect())
}

/// LCP by comparing every adjacent pair from scratch.
pub fn naive_lcp<S: Symbol, I: Index>(text: &[S], sa: &[I]) -> LcpArray<I> {
    let mut lcp = vec![I::zero(); sa.len()];
    for i in 1..sa.len() {
        lcp[i] = I::from_usize(common_prefix(text, sa[i - 1].as_usize(), sa[i].as_usize()));
    }
    LcpArray::from_vec(lcp)
}

/// Kasai et al.: text-order scan over the inverse suffix array.
pub fn kasai_lcp<S: Symbol, I: Index>(text: &[S], sa: &[I]) -> LcpArray<I> {
    kasai_lcp_counted(text, sa).0
}

/// [`kasai_lcp`] plus the number of matching symbol comparisons.
pub fn kasai_lcp_counted<S: Symbol, I: Index>(text: &[S], sa: &[I]) -> (LcpArray<I>, usize) {
    let n = sa.len();
    let mut rank = vec![I::zero(); n];
    for (i, &p) in sa.iter().enumerate() {
        rank[p.as_usize()] = I::from_usize(i);
    }
    let mut lcp = vec![I::zero(); n];
    let mut matches = 0;
    let mut h = 0usize;
    for p in 0..n {
        let r = rank[p].as_usize();
        if r == 0 {
            h = 0;
            continue;
        }
        let q = sa[r - 1].as_usize();
        while p + h < n && q + h < n && text[p + h] == text[q + h] {
            h += 1;
            matches += 1;
        }
        lcp[r] = I::from_usize(h);
        h = h.saturating_sub(1);
    }
    (LcpArray::from_vec(lcp), matches)
}

/// Kärkkäinen et al.'s Φ variant: PLCP in text order through the
/// predecessor array, then permuted into rank order.
pub fn phi_lcp<S: Symbol, I: Index>(text: &[S], sa: &[I]) -> LcpArray<I> {
    phi_lcp_counted(text, sa).0
}

pub fn phi_lcp_counted<S: Symbol, I: Index>(text: &[S], sa: &[I]) -> (LcpArray<I>, usize) {
    let n = sa.len();
    let mut plcp = phi_array(sa);
    let mut matches = 0;
    let mut h = 0usize;
    for p in 0..n {
        let q = plcp[p];
        if q == I::EMPTY {
            plcp[p] = I::zero();
            h = 0;
            continue;
        }
        let q = q.as_usize();
        while p + h < n && q + h < n && text[p + h] == text[q + h] {
            h += 1;
            matches += 1;
        }
        plcp[p] = I::from_usize(h);
        h = h.saturating_sub(1);
    }
    let lcp = sa.iter().map(|&p| plcp[p.as_usize()]).collect::<Vec<_>>();
    (LcpArray::from_vec(lcp), matches)
}

/// `phi[sa[i]] = sa[i - 1]`, with `EMPTY` for `sa[0]`.
pub fn phi_array<I: Index>(sa: &[I]) -> Vec<I> {
    let mut phi = vec![I::EMPTY; sa.len()];
    for i in 1..sa.len() {
        phi[sa[i].as_usize()] = sa[i - 1];
    }
    phi
}

/// Text-order LCP: `plcp[sa[i]] = lcp[i]`.
pub fn permuted_lcp<I: Index>(sa: &[I], lcp: &[I]) -> Vec<I> {
    let mut plcp = vec![I::zero(); sa.len()];
    for (&p, &l) in sa.iter().zip(lcp) {
        plcp[p.as_usize()] = l;
    }
    plcp
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    NotPermutation,
    Order,
    LcpTooShort,
    LcpTooLong,
}

impl ViolationKind {
    pub fn label(self) -> &'static str {
        match self {
            ViolationKind::NotPermutation => "not-permutation",
            ViolationKind::Order => "order",
            ViolationKind::LcpTooShort => "lcp-too-short",
            ViolationKind::LcpTooLong => "lcp-too-long",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub kind: ViolationKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    pub first_violation: Option<Violation>,
}

impl VerifyReport {
    fn fail(index: usize, kind: ViolationKind) -> Self {
        VerifyReport {
            ok: false,
            first_violation: Some(Violation { index, kind }),
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_violation {
            None => f.write_str("ok"),
            Some(v) => write!(f, "{} at index {}", v.kind.label(), v.index),
        }
    }
}

/// Certifies `sa` and `lcp` together: `sa` is a permutation, and at every
/// rank the adjacent suffixes agree on exactly `lcp[i]` symbols and then
/// differ with the left one smaller. O(n + sum of lcp).
pub fn verify<S: Symbol, I: Index>(text: &[S], sa: &[I], lcp: &[I]) -> VerifyReport {
    let n = text.len();
    if sa.len() != n {
        return VerifyReport::fail(sa.len().min(n), ViolationKind::NotPermutation);
    }
    let mut seen = vec![false; n];
    for (i, p) in sa.iter().enumerate() {
        let p = p.as_usize();
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return VerifyReport::fail(i, ViolationKind::NotPermutation);
        }
    }
    drop(seen);
    if lcp.len() != n {
        return VerifyReport::fail(lcp.len().min(n), ViolationKind::LcpTooLong);
    }
    if n > 0 && lcp[0] != I::zero() {
        return VerifyReport::fail(0, ViolationKind::LcpTooLong);
    }
    for i in 1..n {
        let (a, b) = (sa[i - 1].as_usize(), sa[i].as_usize());
        let l = lcp[i].as_usize();
        if a + l > n || b + l > n || text[a..a + l] != text[b..b + l] {
            return VerifyReport::fail(i, ViolationKind::LcpTooLong);
        }
        // `None` is the sentinel and orders first.
        let (x, y) = (text.get(a + l), text.get(b + l));
        if x == y {
            return VerifyReport::fail(i, ViolationKind::LcpTooShort);
        }
        if x > y {
            return VerifyReport::fail(i, ViolationKind::Order);
        }
    }
    VerifyReport {
        ok: true,
        first_violation: None,
    }
}
