//! Suffix array and LCP array in one induced-sorting pass.
//!
//! The LCP values of the sorted S*-suffixes are computed first, either by
//! a sparse Φ pass over the text or by rescaling the LCP array of the
//! recursively solved reduced text. They are stored next to their suffixes
//! at the bucket tails, and the two inducing scans derive every other
//! value from them.

mod induce;
mod seam;
mod sstar;

use std::fmt;
use std::str::FromStr;

pub use induce::{induce_l_with_lcp, induce_s_with_lcp};
pub use seam::{seam_lcp, SeamState};
pub use sstar::{sstar_lcp_recursive, sstar_lcp_sparse_phi};

use crate::arrays::{LcpArray, SuffixArray};
use crate::bucket::BucketTable;
use crate::classify::{classify, sstar_positions};
use crate::num::{Index, Symbol};
use crate::rmq::{MArrayTracker, MinTracker, ScanTracker, StackTracker};
use crate::sais::{self, fresh_workspace, name_sstar_substrings, place_sorted_sstar};
use crate::text::Text;
use crate::{BuildStats, Error};

/// Running-minimum strategy used by the inducing scans.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TrackerKind {
    Scan,
    #[default]
    MArray,
    Stack,
}

/// How the S*-suffix LCPs are obtained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SstarLcpMethod {
    /// Sparse Φ on the top-level text; the recursion only sorts.
    #[default]
    SparsePhi,
    /// Induce LCPs at every recursion level and rescale them upwards.
    Recursive,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct InduceOptions {
    pub tracker: TrackerKind,
    pub sstar_lcp: SstarLcpMethod,
}

impl InduceOptions {
    pub fn new(tracker: TrackerKind, sstar_lcp: SstarLcpMethod) -> Self {
        InduceOptions { tracker, sstar_lcp }
    }

    /// All tracker and S*-method combinations.
    pub fn all() -> impl Iterator<Item = InduceOptions> {
        TrackerKind::ALL.into_iter().flat_map(|tracker| {
            SstarLcpMethod::ALL
                .into_iter()
                .map(move |sstar_lcp| InduceOptions { tracker, sstar_lcp })
        })
    }
}

impl TrackerKind {
    pub const ALL: [TrackerKind; 3] = [TrackerKind::Scan, TrackerKind::MArray, TrackerKind::Stack];

    pub fn label(self) -> &'static str {
        match self {
            TrackerKind::Scan => "scan",
            TrackerKind::MArray => "marray",
            TrackerKind::Stack => "stack",
        }
    }
}

impl SstarLcpMethod {
    pub const ALL: [SstarLcpMethod; 2] = [SstarLcpMethod::SparsePhi, SstarLcpMethod::Recursive];

    pub fn label(self) -> &'static str {
        match self {
            SstarLcpMethod::SparsePhi => "sparse-phi",
            SstarLcpMethod::Recursive => "recursive",
        }
    }
}

impl fmt::Display for TrackerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl fmt::Display for SstarLcpMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for TrackerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TrackerKind::ALL
            .into_iter()
            .find(|k| k.label() == s)
            .ok_or_else(|| Error::UnknownOption {
                what: "tracker",
                value: s.to_owned(),
            })
    }
}

impl FromStr for SstarLcpMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "sparse-phi" | "sparse_phi" | "phi" => Ok(SstarLcpMethod::SparsePhi),
            "recursive" => Ok(SstarLcpMethod::Recursive),
            _ => Err(Error::UnknownOption {
                what: "S* LCP method",
                value: s.to_owned(),
            }),
        }
    }
}

/// Suffix array and LCP array of `text`.
pub fn build_sa_and_lcp<S: Symbol, I: Index>(
    text: Text<'_, S>,
    options: InduceOptions,
) -> (SuffixArray<I>, LcpArray<I>) {
    let (sa, lcp, _) = build_sa_and_lcp_with_stats(text, options);
    (sa, lcp)
}

/// Like [`build_sa_and_lcp`], also returning the work counters.
pub fn build_sa_and_lcp_with_stats<S: Symbol, I: Index>(
    text: Text<'_, S>,
    options: InduceOptions,
) -> (SuffixArray<I>, LcpArray<I>, BuildStats) {
    let mut stats = BuildStats::default();
    let (sa, lcp) = match options.tracker {
        TrackerKind::Scan => level::<S, I, ScanTracker<I>>(text, options.sstar_lcp, &mut stats),
        TrackerKind::MArray => level::<S, I, MArrayTracker<I>>(text, options.sstar_lcp, &mut stats),
        TrackerKind::Stack => level::<S, I, StackTracker<I>>(text, options.sstar_lcp, &mut stats),
    };
    (SuffixArray::from_vec(sa), LcpArray::from_vec(lcp), stats)
}

fn level<S: Symbol, I: Index, M: MinTracker<I>>(
    text: Text<'_, S>,
    method: SstarLcpMethod,
    stats: &mut BuildStats,
) -> (Vec<I>, Vec<I>) {
    let n = text.len();
    if n <= 1 {
        return ((0..n).map(I::from_usize).collect(), vec![I::zero(); n]);
    }
    stats.levels += 1;
    let types = classify(text);
    let sstar = sstar_positions(&types);
    let sigma = text.effective_alphabet();
    let mut buckets = BucketTable::with_offset(text, sigma, 1);

    let order = sais::induced_sstar_order::<S, I>(text, &types, &sstar, &mut buckets);
    let problem = name_sstar_substrings::<S, I>(text, &types, &order);
    drop(order);
    drop(sstar);

    let (sorted, sstar_lcp) = match method {
        SstarLcpMethod::SparsePhi => {
            let reduced_sa = sais::reduced_suffix_array(&problem, stats);
            let sorted: Vec<usize> = reduced_sa
                .iter()
                .map(|r| problem.position(r.as_usize()))
                .collect();
            drop(reduced_sa);
            let lcps = sstar::sparse_phi(text, &sorted, stats);
            (sorted, lcps)
        }
        SstarLcpMethod::Recursive => {
            let (reduced_sa, reduced_lcp) = if problem.names_unique() {
                (
                    problem.sa_from_unique_names(),
                    vec![I::zero(); problem.len()],
                )
            } else {
                level::<I, I, M>(problem.text(), method, stats)
            };
            let lcps = sstar::rescale(text, &reduced_sa, &reduced_lcp, &problem, stats);
            let sorted = reduced_sa
                .iter()
                .map(|r| problem.position(r.as_usize()))
                .collect();
            (sorted, lcps)
        }
    };
    drop(problem);

    let mut sa = fresh_workspace::<I>(n);
    let mut lcp = vec![I::zero(); n + 1];
    place_sorted_sstar(&mut sa, text, &sorted, &mut buckets, |k, r| {
        lcp[k] = I::from_usize(sstar_lcp[r]);
    });
    drop(sorted);
    drop(sstar_lcp);

    let mut seam = SeamState::new(sigma);
    induce_l_with_lcp(
        &mut sa,
        &mut lcp,
        text,
        &types,
        &mut buckets,
        &mut seam,
        &mut M::new(sigma),
    );
    induce_s_with_lcp(
        &mut sa,
        &mut lcp,
        text,
        &types,
        &mut buckets,
        &mut seam,
        &mut M::new(sigma),
    );
    stats.seam_symbols += seam.symbols;

    sa.remove(0);
    lcp.remove(0);
    (sa, lcp)
}
