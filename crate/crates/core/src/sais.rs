//! Suffix array construction by induced sorting.
//!
//! The working array has `n + 1` slots; slot 0 always holds the sentinel
//! suffix `n` and bucket `c` occupies the slots of [`BucketTable`] shifted
//! right by one. The S*-suffixes are sorted first, by naming their
//! S*-substrings and recursing on the reduced text when names collide;
//! their order then induces all L-suffixes (left to right) and all
//! S-suffixes (right to left).

use crate::arrays::SuffixArray;
use crate::bucket::BucketTable;
use crate::classify::{classify, sstar_positions, SuffixTypeMap};
use crate::num::{Index, Symbol};
use crate::text::Text;
use crate::BuildStats;

/// The reduced problem obtained by naming S*-substrings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedProblem<I> {
    /// Names of the S*-substrings in text order. The sentinel substring is
    /// last and carries the unique smallest name 0.
    pub reduced_text: Vec<I>,
    /// Text position of the S*-suffix behind each reduced index.
    pub sstar_index_to_position: Vec<I>,
    pub num_names: usize,
    /// `name_lcp[r]`: symbols shared by the S*-substrings at induced ranks
    /// `r - 1` and `r`, capped at the shorter one; `name_lcp[0] = 0`.
    pub name_lcp: Vec<usize>,
}

impl<I: Index> ReducedProblem<I> {
    pub fn len(&self) -> usize {
        self.reduced_text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reduced_text.is_empty()
    }

    /// Every S*-substring is distinct, so the suffix order of the reduced
    /// text is its symbol order.
    pub fn names_unique(&self) -> bool {
        self.num_names == self.reduced_text.len()
    }

    pub fn text(&self) -> Text<'_, I> {
        Text::new_unchecked(&self.reduced_text, self.num_names)
    }

    #[inline(always)]
    pub fn position(&self, reduced_index: usize) -> usize {
        self.sstar_index_to_position[reduced_index].as_usize()
    }

    /// Suffix array of the reduced text when all names are distinct.
    pub fn sa_from_unique_names(&self) -> Vec<I> {
        debug_assert!(self.names_unique());
        let mut sa = vec![I::EMPTY; self.len()];
        for (i, name) in self.reduced_text.iter().enumerate() {
            sa[name.as_usize()] = I::from_usize(i);
        }
        sa
    }
}

/// Scans left to right and moves every L-suffix preceding a filled slot to
/// the head of its bucket.
pub fn induce_l<S: Symbol, I: Index>(
    sa: &mut [I],
    text: Text<'_, S>,
    types: &SuffixTypeMap,
    buckets: &mut BucketTable,
) {
    for i in 0..sa.len() {
        let p = sa[i];
        if p == I::EMPTY || p == I::zero() {
            continue;
        }
        let j = p.as_usize() - 1;
        if types.is_l(j) {
            let k = buckets.push_l(text.rank_at(j));
            debug_assert!(k > i);
            sa[k] = I::from_usize(j);
        }
    }
}

/// Scans right to left and moves every S-suffix preceding a filled slot to
/// the tail of its bucket. Tails must be reset beforehand.
pub fn induce_s<S: Symbol, I: Index>(
    sa: &mut [I],
    text: Text<'_, S>,
    types: &SuffixTypeMap,
    buckets: &mut BucketTable,
) {
    for i in (0..sa.len()).rev() {
        let p = sa[i];
        if p == I::EMPTY || p == I::zero() {
            continue;
        }
        let j = p.as_usize() - 1;
        if types.is_s(j) {
            let k = buckets.push_s(text.rank_at(j));
            debug_assert!(k < i);
            sa[k] = I::from_usize(j);
        }
    }
}

/// Working buffer of `n + 1` empty slots with the sentinel in slot 0.
pub(crate) fn fresh_workspace<I: Index>(n: usize) -> Vec<I> {
    let mut sa = vec![I::EMPTY; n + 1];
    sa[0] = I::from_usize(n);
    sa
}

/// Places the unsorted S*-suffixes at their bucket tails, runs both
/// inducing passes and returns the S*-positions in the resulting order
/// (sentinel first). This sorts the S*-substrings, not the S*-suffixes.
pub fn induced_sstar_order<S: Symbol, I: Index>(
    text: Text<'_, S>,
    types: &SuffixTypeMap,
    sstar: &[usize],
    buckets: &mut BucketTable,
) -> Vec<usize> {
    let n = text.len();
    let mut sa = fresh_workspace::<I>(n);
    buckets.reset_tails();
    for &p in sstar.iter().filter(|&&p| p < n) {
        let k = buckets.push_s(text.rank_at(p));
        sa[k] = I::from_usize(p);
    }
    buckets.reset_heads();
    induce_l(&mut sa, text, types, buckets);
    buckets.reset_tails();
    induce_s(&mut sa, text, types, buckets);

    let mut order = Vec::with_capacity(sstar.len());
    order.extend(
        sa.iter()
            .map(|p| p.as_usize())
            .filter(|&p| p == n || types.is_sstar(p)),
    );
    order
}

/// Assigns names by rank in `induced_order`, opening a new name whenever
/// two adjacent S*-substrings differ in length or in any symbol.
pub fn name_sstar_substrings<S: Symbol, I: Index>(
    text: Text<'_, S>,
    types: &SuffixTypeMap,
    induced_order: &[usize],
) -> ReducedProblem<I> {
    let n = text.len();
    let sstar = sstar_positions(types);
    let count = sstar.len();
    debug_assert_eq!(count, induced_order.len());

    // S* positions are never adjacent, so p / 2 identifies p.
    let mut index_of = vec![I::EMPTY; n / 2 + 1];
    for (k, &p) in sstar.iter().enumerate() {
        index_of[p / 2] = I::from_usize(k);
    }

    let mut reduced_text = vec![I::zero(); count];
    let mut name_lcp = vec![0usize; count];
    let mut name = 0usize;
    let mut prev: Option<(usize, usize)> = None;
    for (r, &p) in induced_order.iter().enumerate() {
        let k = index_of[p / 2].as_usize();
        let end = sstar.get(k + 1).copied().unwrap_or(p);
        if let Some(prev) = prev {
            let (shared, equal) = compare_substrings(text, prev, (p, end));
            name_lcp[r] = shared;
            if !equal {
                name += 1;
            }
        }
        reduced_text[k] = I::from_usize(name);
        prev = Some((p, end));
    }

    ReducedProblem {
        reduced_text,
        sstar_index_to_position: sstar.iter().map(|&p| I::from_usize(p)).collect(),
        num_names: if count == 0 { 0 } else { name + 1 },
        name_lcp,
    }
}

/// Shared prefix (capped at the shorter substring) and equality of two
/// inclusive, sentinel-extended substrings.
fn compare_substrings<S: Symbol>(
    text: Text<'_, S>,
    (a0, a1): (usize, usize),
    (b0, b1): (usize, usize),
) -> (usize, bool) {
    let (la, lb) = (a1 - a0 + 1, b1 - b0 + 1);
    let shortest = la.min(lb);
    let shared = (0..shortest)
        .take_while(|&i| text.get(a0 + i) == text.get(b0 + i))
        .count();
    (shared, la == lb && shared == la)
}

/// S*-positions in suffix order, sentinel first.
pub fn sort_sstar_suffixes<S: Symbol, I: Index>(
    text: Text<'_, S>,
    types: &SuffixTypeMap,
) -> Vec<usize> {
    let sstar = sstar_positions(types);
    let mut buckets = BucketTable::with_offset(text, text.effective_alphabet(), 1);
    let order = induced_sstar_order::<S, I>(text, types, &sstar, &mut buckets);
    let problem = name_sstar_substrings::<S, I>(text, types, &order);
    let reduced_sa = reduced_suffix_array(&problem, &mut BuildStats::default());
    reduced_sa
        .iter()
        .map(|r| problem.position(r.as_usize()))
        .collect()
}

pub(crate) fn reduced_suffix_array<I: Index>(
    problem: &ReducedProblem<I>,
    stats: &mut BuildStats,
) -> Vec<I> {
    if problem.names_unique() {
        problem.sa_from_unique_names()
    } else {
        suffix_array_level(problem.text(), stats)
    }
}

/// Puts sorted S*-suffixes (sentinel first) at their bucket tails in order
/// and calls `on_place(slot, rank)` for each.
pub(crate) fn place_sorted_sstar<S: Symbol, I: Index>(
    sa: &mut [I],
    text: Text<'_, S>,
    sorted: &[usize],
    buckets: &mut BucketTable,
    mut on_place: impl FnMut(usize, usize),
) {
    buckets.reset_tails();
    for (r, &p) in sorted.iter().enumerate().skip(1).rev() {
        let k = buckets.push_s(text.rank_at(p));
        sa[k] = I::from_usize(p);
        on_place(k, r);
    }
    buckets.reset_heads();
}

pub(crate) fn suffix_array_level<S: Symbol, I: Index>(
    text: Text<'_, S>,
    stats: &mut BuildStats,
) -> Vec<I> {
    let n = text.len();
    if n <= 1 {
        return (0..n).map(I::from_usize).collect();
    }
    stats.levels += 1;
    let types = classify(text);
    let sstar = sstar_positions(&types);
    let mut buckets = BucketTable::with_offset(text, text.effective_alphabet(), 1);

    let order = induced_sstar_order::<S, I>(text, &types, &sstar, &mut buckets);
    let problem = name_sstar_substrings::<S, I>(text, &types, &order);
    drop(order);
    let sorted: Vec<usize> = reduced_suffix_array(&problem, stats)
        .iter()
        .map(|r| problem.position(r.as_usize()))
        .collect();
    drop(problem);

    let mut sa = fresh_workspace::<I>(n);
    place_sorted_sstar(&mut sa, text, &sorted, &mut buckets, |_, _| {});
    drop(sorted);
    induce_l(&mut sa, text, &types, &mut buckets);
    buckets.reset_tails();
    induce_s(&mut sa, text, &types, &mut buckets);
    sa.remove(0);
    sa
}

/// Suffix array of `text` by induced sorting.
pub fn build_suffix_array<S: Symbol, I: Index>(text: Text<'_, S>) -> SuffixArray<I> {
    SuffixArray::from_vec(suffix_array_level(text, &mut BuildStats::default()))
}

/// Like [`build_suffix_array`], also reporting the number of inducing
/// levels (1 for a text that needs no recursion).
pub fn build_suffix_array_with_stats<S: Symbol, I: Index>(
    text: Text<'_, S>,
) -> (SuffixArray<I>, BuildStats) {
    let mut stats = BuildStats::default();
    let sa = suffix_array_level(text, &mut stats);
    (SuffixArray::from_vec(sa), stats)
}
