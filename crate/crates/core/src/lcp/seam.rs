//! LCP values across a bucket's L/S-seam.
//!
//! An L-suffix and an S-suffix starting with the same symbol `c` can only
//! share a prefix made of `c`s, so their LCP is the shorter of the two
//! `c`-runs.

use crate::num::Symbol;
use crate::text::Text;

/// LCP of the L-suffix `i` and the S-suffix `j`, both starting with the
/// same symbol.
pub fn seam_lcp<S: Symbol>(text: Text<'_, S>, i: usize, j: usize) -> usize {
    debug_assert!(i != j);
    debug_assert!(i < text.len() && j < text.len());
    debug_assert_eq!(text.get(i), text.get(j));
    let c = text.get(i);
    (0..)
        .take_while(|&l| text.get(i + l) == c && text.get(j + l) == c)
        .count()
}

/// Per-bucket seam bookkeeping for the two LCP-inducing scans.
#[derive(Clone, Debug)]
pub struct SeamState {
    /// Buckets whose S-region the left-to-right scan has entered.
    pub(crate) entered: Vec<bool>,
    /// First S slot of each bucket, known once the L-regions are full.
    pub(crate) s_start: Vec<usize>,
    /// Symbols matched by all seam computations so far.
    pub symbols: usize,
}

impl SeamState {
    pub fn new(sigma: usize) -> Self {
        SeamState {
            entered: vec![false; sigma],
            s_start: Vec::new(),
            symbols: 0,
        }
    }

    pub(crate) fn compute<S: Symbol>(
        &mut self,
        text: Text<'_, S>,
        l_suffix: usize,
        s_suffix: usize,
    ) -> usize {
        let l = seam_lcp(text, l_suffix, s_suffix);
        self.symbols += l;
        l
    }
}
