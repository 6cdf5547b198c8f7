//! Suffix array and LCP array construction by induced sorting.
//!
//! [`build`] sorts the suffixes of a byte text with SA-IS and induces the
//! LCP values during the same two scans. Index width (32 or 64 bits) is
//! picked from the text length; the generic entry points in [`lcp`] and
//! [`sais`] accept any [`Symbol`] text and any [`Index`] width.
//!
//! ```
//! use sais_lcp::{build, InduceOptions};
//!
//! let arrays = build(b"banana", InduceOptions::default());
//! assert_eq!(arrays.sa(), vec![5, 3, 1, 0, 4, 2]);
//! assert_eq!(arrays.lcp(), vec![0, 1, 3, 0, 0, 2]);
//! ```

pub mod arrays;
pub mod bucket;
pub mod classify;
pub mod gen;
pub mod lcp;
pub mod num;
pub mod reference;
pub mod rmq;
pub mod sais;
pub mod text;

pub use arrays::{LcpArray, SuffixArray};
pub use bucket::{bucket_table, BucketTable};
pub use classify::{classify, sstar_positions, sstar_substring_bounds, SuffixType, SuffixTypeMap};
pub use lcp::{build_sa_and_lcp, InduceOptions, SstarLcpMethod, TrackerKind};
pub use num::{Index, IndexWidth, Symbol};
pub use reference::{verify, VerifyReport, Violation, ViolationKind};
pub use sais::build_suffix_array;
pub use text::Text;

pub type SuffixArray32 = SuffixArray<u32>;
pub type SuffixArray64 = SuffixArray<u64>;
pub type LcpArray32 = LcpArray<u32>;
pub type LcpArray64 = LcpArray<u64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(
        "symbol {symbol} at position {position} is outside the alphabet of size {alphabet_size}"
    )]
    SymbolOutOfRange {
        position: usize,
        symbol: usize,
        alphabet_size: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown {what} `{value}`")]
    UnknownOption { what: &'static str, value: String },
}

/// Work counters collected during construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildStats {
    /// Inducing levels run, counting the top level.
    pub levels: usize,
    /// Symbols matched by all L/S-seam computations.
    pub seam_symbols: usize,
    /// Steps spent turning reduced-text LCPs into text LCPs.
    pub rescale_work: usize,
    /// Symbol comparisons of the sparse Φ pass over the S*-suffixes.
    pub sstar_phi_comparisons: usize,
}

/// SA and LCP of a byte text at the width chosen for its length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arrays {
    Narrow(SuffixArray32, LcpArray32),
    Wide(SuffixArray64, LcpArray64),
}

impl Arrays {
    pub fn width(&self) -> IndexWidth {
        match self {
            Arrays::Narrow(..) => IndexWidth::W32,
            Arrays::Wide(..) => IndexWidth::W64,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Arrays::Narrow(sa, _) => sa.len(),
            Arrays::Wide(sa, _) => sa.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn sa(&self) -> Vec<usize> {
        match self {
            Arrays::Narrow(sa, _) => sa.to_usize_vec(),
            Arrays::Wide(sa, _) => sa.to_usize_vec(),
        }
    }

    pub fn lcp(&self) -> Vec<usize> {
        match self {
            Arrays::Narrow(_, lcp) => lcp.to_usize_vec(),
            Arrays::Wide(_, lcp) => lcp.to_usize_vec(),
        }
    }

    /// Both arrays at 64 bits.
    pub fn into_wide(self) -> (SuffixArray64, LcpArray64) {
        match self {
            Arrays::Narrow(sa, lcp) => (sa.widen(), lcp.widen()),
            Arrays::Wide(sa, lcp) => (sa, lcp),
        }
    }
}

/// Builds SA and LCP of `text`, selecting 32-bit entries below 2^31 symbols.
pub fn build(text: &[u8], options: InduceOptions) -> Arrays {
    let t = Text::from_bytes(text);
    match IndexWidth::for_len(text.len()) {
        IndexWidth::W32 => {
            let (sa, lcp) = build_sa_and_lcp::<u8, u32>(t, options);
            Arrays::Narrow(sa, lcp)
        }
        IndexWidth::W64 => {
            let (sa, lcp) = build_sa_and_lcp::<u8, u64>(t, options);
            Arrays::Wide(sa, lcp)
        }
    }
}

/// Builds only the suffix array of `text`, at the width chosen for its length.
pub fn build_sa(text: &[u8]) -> Vec<usize> {
    let t = Text::from_bytes(text);
    match IndexWidth::for_len(text.len()) {
        IndexWidth::W32 => build_suffix_array::<u8, u32>(t).to_usize_vec(),
        IndexWidth::W64 => build_suffix_array::<u8, u64>(t).to_usize_vec(),
    }
}
