//! Suffix type classification and S*-substring extraction.

use crate::num::Symbol;
use crate::text::Text;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuffixType {
    /// Larger than the suffix one position to the right.
    L,
    /// Smaller than the suffix one position to the right, or the sentinel.
    S,
}

/// Types of all `n + 1` suffixes; position `n` is the sentinel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuffixTypeMap {
    is_s: Vec<bool>,
}

impl SuffixTypeMap {
    /// Text length `n` (the map itself has `n + 1` entries).
    pub fn text_len(&self) -> usize {
        self.is_s.len() - 1
    }

    #[inline(always)]
    pub fn is_s(&self, i: usize) -> bool {
        self.is_s[i]
    }

    #[inline(always)]
    pub fn is_l(&self, i: usize) -> bool {
        !self.is_s[i]
    }

    pub fn get(&self, i: usize) -> SuffixType {
        if self.is_s[i] {
            SuffixType::S
        } else {
            SuffixType::L
        }
    }

    #[inline(always)]
    pub fn is_sstar(&self, i: usize) -> bool {
        i > 0 && self.is_s[i] && !self.is_s[i - 1]
    }

    pub fn types(&self) -> impl Iterator<Item = SuffixType> + '_ {
        (0..self.is_s.len()).map(move |i| self.get(i))
    }
}

/// Classifies every suffix in one right-to-left scan.
pub fn classify<S: Symbol>(text: Text<'_, S>) -> SuffixTypeMap {
    let data = text.data();
    let n = data.len();
    let mut is_s = vec![false; n + 1];
    is_s[n] = true;
    // The last real suffix is always L: its successor is the sentinel.
    for i in (0..n.saturating_sub(1)).rev() {
        is_s[i] = data[i] < data[i + 1] || (data[i] == data[i + 1] && is_s[i + 1]);
    }
    SuffixTypeMap { is_s }
}

/// Ascending S* positions in `[1, n]`; includes the sentinel when `n >= 1`.
pub fn sstar_positions(types: &SuffixTypeMap) -> Vec<usize> {
    let n = types.text_len();
    (1..=n).filter(|&i| types.is_sstar(i)).collect()
}

/// Inclusive bounds of the S*-substrings, in text order. The last one is
/// the sentinel-only substring `(n, n)`.
pub fn sstar_substring_bounds(types: &SuffixTypeMap) -> Vec<(usize, usize)> {
    let sstar = sstar_positions(types);
    let mut bounds: Vec<(usize, usize)> = sstar.windows(2).map(|w| (w[0], w[1])).collect();
    if let Some(&last) = sstar.last() {
        bounds.push((last, last));
    }
    bounds
}
