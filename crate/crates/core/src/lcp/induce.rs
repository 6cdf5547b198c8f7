//! The two inducing scans, extended to write LCP values.
//!
//! When slot `i` induces a suffix into bucket `c` at slot `k`, its LCP with
//! the previous suffix induced into `c` (from slot `i'`) is 1 if the two
//! inducing suffixes start with different symbols, and otherwise one more
//! than the minimum LCP over the scanned slots between them, which the
//! tracker maintains.

use crate::bucket::BucketTable;
use crate::classify::SuffixTypeMap;
use crate::lcp::seam::SeamState;
use crate::num::{Index, Symbol};
use crate::rmq::MinTracker;
use crate::text::Text;

const NO_SOURCE: usize = usize::MAX - 1;
const SENTINEL_SOURCE: usize = usize::MAX;

#[inline(always)]
fn source_bucket<S: Symbol>(text: Text<'_, S>, p: usize) -> usize {
    if p == text.len() {
        SENTINEL_SOURCE
    } else {
        text.rank_at(p)
    }
}

/// Left-to-right scan placing all L-suffixes and their LCP values.
///
/// Expects the sorted S*-suffixes and their LCPs at the bucket tails, heads
/// reset, and `seam` fresh. The first S* entry of a bucket gets its LCP
/// against the bucket's last L-suffix when the scan first reaches it.
#[allow(clippy::too_many_arguments)]
pub fn induce_l_with_lcp<S: Symbol, I: Index, M: MinTracker<I>>(
    sa: &mut [I],
    lcp: &mut [I],
    text: Text<'_, S>,
    types: &SuffixTypeMap,
    buckets: &mut BucketTable,
    seam: &mut SeamState,
    tracker: &mut M,
) {
    let n = text.len();
    let mut last_source = vec![NO_SOURCE; buckets.sigma()];
    for i in 0..sa.len() {
        let entry = sa[i];
        if entry == I::EMPTY {
            continue;
        }
        let p = entry.as_usize();
        if p < n && types.is_s(p) {
            let c = text.rank_at(p);
            if !seam.entered[c] {
                seam.entered[c] = true;
                let head = buckets.l_head(c);
                lcp[i] = if head > buckets.start(c) {
                    I::from_usize(seam.compute(text, sa[head - 1].as_usize(), p))
                } else {
                    I::zero()
                };
            }
        }
        tracker.absorb(lcp[i]);

        if p == 0 || types.is_s(p - 1) {
            continue;
        }
        let j = p - 1;
        let c = text.rank_at(j);
        let k = buckets.push_l(c);
        debug_assert!(k > i);
        sa[k] = I::from_usize(j);
        let source = source_bucket(text, p);
        let min = tracker.take(c);
        lcp[k] = if k == buckets.start(c) {
            I::zero()
        } else if last_source[c] != source {
            I::one()
        } else {
            min.expect("value absorbed at the inducing slot") + I::one()
        };
        last_source[c] = source;
    }
}

/// Right-to-left scan placing all S-suffixes and their LCP values.
///
/// Must follow [`induce_l_with_lcp`] on the same buffers; resets the S
/// tails itself. A fresh tracker is expected.
#[allow(clippy::too_many_arguments)]
pub fn induce_s_with_lcp<S: Symbol, I: Index, M: MinTracker<I>>(
    sa: &mut [I],
    lcp: &mut [I],
    text: Text<'_, S>,
    types: &SuffixTypeMap,
    buckets: &mut BucketTable,
    seam: &mut SeamState,
    tracker: &mut M,
) {
    let sigma = buckets.sigma();
    seam.s_start = (0..sigma).map(|c| buckets.l_head(c)).collect();
    buckets.reset_tails();
    let mut last_source = vec![NO_SOURCE; sigma];
    for i in (0..sa.len()).rev() {
        let p = sa[i].as_usize();
        debug_assert!(sa[i] != I::EMPTY);
        if p > 0 && types.is_s(p - 1) {
            let j = p - 1;
            let c = text.rank_at(j);
            let k = buckets.push_s(c);
            debug_assert!(k < i);
            sa[k] = I::from_usize(j);
            let source = source_bucket(text, p);
            let min = tracker.take(c);
            if k + 1 < buckets.end(c) {
                lcp[k + 1] = if last_source[c] != source {
                    I::one()
                } else {
                    min.expect("value absorbed after the previous take") + I::one()
                };
            }
            last_source[c] = source;
            if k == seam.s_start[c] {
                lcp[k] = if k > buckets.start(c) {
                    I::from_usize(seam.compute(text, sa[k - 1].as_usize(), j))
                } else {
                    I::zero()
                };
            }
        }
        tracker.absorb(lcp[i]);
    }
}
