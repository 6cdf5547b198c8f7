//! LCP values between lexicographically adjacent S*-suffixes.

use crate::num::{Index, Symbol};
use crate::sais::ReducedProblem;
use crate::text::Text;
use crate::BuildStats;

/// `out[r]` = LCP of the S*-suffixes at ranks `r - 1` and `r` of
/// `sorted_sstar` (sentinel first), `out[0] = 0`.
pub fn sstar_lcp_sparse_phi<S: Symbol>(text: Text<'_, S>, sorted_sstar: &[usize]) -> Vec<usize> {
    sparse_phi(text, sorted_sstar, &mut BuildStats::default())
}

/// Sparse Φ pass: S*-suffixes are visited in text order and each
/// comparison resumes from the previous LCP minus the distance travelled.
///
/// The carried lower bound only holds for S*-samples when it reaches past
/// the leading run of `T[p]`: then the shifted predecessor is itself an
/// S*-suffix. Otherwise the comparison restarts at 0, which costs at most
/// that run.
pub(crate) fn sparse_phi<S: Symbol>(
    text: Text<'_, S>,
    sorted_sstar: &[usize],
    stats: &mut BuildStats,
) -> Vec<usize> {
    let n = text.len();
    let data = text.data();
    let mut out = vec![0usize; sorted_sstar.len()];
    if sorted_sstar.len() <= 1 {
        return out;
    }
    // S* positions are never adjacent, so p / 2 identifies p.
    let mut rank_of = vec![usize::MAX; n / 2 + 1];
    for (r, &p) in sorted_sstar.iter().enumerate() {
        rank_of[p / 2] = r;
    }

    let mut prev: Option<(usize, usize)> = None;
    for &r in rank_of.iter().filter(|&&r| r != usize::MAX) {
        let p = sorted_sstar[r];
        if r == 0 {
            prev = Some((p, 0));
            continue;
        }
        let q = sorted_sstar[r - 1];
        let mut h = prev.map_or(0, |(pp, ph)| {
            guarded_carry(data, p, pp, ph, &mut stats.sstar_phi_comparisons)
        });
        while p + h < n && q + h < n && data[p + h] == data[q + h] {
            h += 1;
            stats.sstar_phi_comparisons += 1;
        }
        stats.sstar_phi_comparisons += 1;
        out[r] = h;
        prev = Some((p, h));
    }
    out
}

/// Lower bound on the LCP of S*-suffix `p` with its predecessor, given
/// the LCP `ph` of the previous S*-suffix `pp < p` in text order.
fn guarded_carry<S: Symbol>(data: &[S], p: usize, pp: usize, ph: usize, work: &mut usize) -> usize {
    let carried = ph.saturating_sub(p - pp);
    let run = data[p..]
        .iter()
        .take(carried)
        .take_while(|&&s| s == data[p])
        .count();
    *work += run;
    if run < carried {
        carried
    } else {
        0
    }
}

/// Turns the LCP array of the reduced text into S*-suffix LCPs in text
/// symbols.
///
/// For rank `k` with `r = reduced_sa[k]` and `m = reduced_lcp[k]`, the `m`
/// matching names cover `pos(r + m) - pos(r)` symbols (adjacent
/// S*-substrings overlap in one position). The remainder is found by direct
/// comparison. Ranks are visited in text order so that each comparison can
/// also resume from the bound carried over from the previous S*-suffix,
/// which keeps the total work linear.
pub fn sstar_lcp_recursive<S: Symbol, I: Index>(
    text: Text<'_, S>,
    reduced_sa: &[I],
    reduced_lcp: &[I],
    problem: &ReducedProblem<I>,
) -> Vec<usize> {
    rescale(
        text,
        reduced_sa,
        reduced_lcp,
        problem,
        &mut BuildStats::default(),
    )
}

pub(crate) fn rescale<S: Symbol, I: Index>(
    text: Text<'_, S>,
    reduced_sa: &[I],
    reduced_lcp: &[I],
    problem: &ReducedProblem<I>,
    stats: &mut BuildStats,
) -> Vec<usize> {
    let m = reduced_sa.len();
    debug_assert_eq!(m, problem.len());
    let n = text.len();
    let data = text.data();
    let mut rank = vec![0usize; m];
    for (k, r) in reduced_sa.iter().enumerate() {
        rank[r.as_usize()] = k;
    }
    let mut out = vec![0usize; m];
    let mut prev: Option<(usize, usize)> = None;
    for (r, &k) in rank.iter().enumerate() {
        let p = problem.position(r);
        if k == 0 {
            prev = Some((p, 0));
            continue;
        }
        let q = reduced_sa[k - 1].as_usize();
        let matched = reduced_lcp[k].as_usize();
        let base = problem.position(r + matched) - p;
        let carried = prev.map_or(0, |(pp, ph)| {
            guarded_carry(data, p, pp, ph, &mut stats.rescale_work)
        });
        let b = problem.position(q);
        let mut h = base.max(carried);
        while p + h < n && b + h < n && data[p + h] == data[b + h] {
            h += 1;
            stats.rescale_work += 1;
        }
        stats.rescale_work += 1;
        out[k] = h;
        prev = Some((p, h));
    }
    out
}
