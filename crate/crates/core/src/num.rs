//! Scalar traits for text symbols and array entries.

use std::fmt::Debug;
use std::hash::Hash;

use num_traits::{AsPrimitive, PrimInt, Unsigned};

/// A text symbol. Bytes at the public level, integer names inside the
/// recursion.
pub trait Symbol: Copy + Ord + Hash + Debug + Send + Sync + 'static {
    /// The symbol's position in the alphabet.
    fn rank(self) -> usize;
}

impl<T> Symbol for T
where
    T: PrimInt + Unsigned + AsPrimitive<usize> + Hash + Debug + Send + Sync + 'static,
{
    #[inline(always)]
    fn rank(self) -> usize {
        self.as_()
    }
}

/// Storage type for suffix array positions and LCP lengths.
///
/// The all-ones value is reserved as the empty-slot marker, so a width
/// can hold texts of length strictly below `MAX_LEN`.
pub trait Index: Symbol + PrimInt + Unsigned + Default {
    const EMPTY: Self;
    /// Largest text length this width is selected for.
    const MAX_LEN: usize;

    fn from_usize(x: usize) -> Self;

    #[inline(always)]
    fn as_usize(self) -> usize {
        self.rank()
    }
}

impl Index for u32 {
    const EMPTY: Self = u32::MAX;
    const MAX_LEN: usize = (1 << 31) - 1;

    #[inline(always)]
    fn from_usize(x: usize) -> Self {
        debug_assert!(x < u32::MAX as usize);
        x as u32
    }
}

impl Index for u64 {
    const EMPTY: Self = u64::MAX;
    const MAX_LEN: usize = usize::MAX >> 1;

    #[inline(always)]
    fn from_usize(x: usize) -> Self {
        x as u64
    }
}

/// Array width used for a text of length `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexWidth {
    W32,
    W64,
}

impl IndexWidth {
    pub fn for_len(n: usize) -> IndexWidth {
        if n < (1usize << 31) {
            IndexWidth::W32
        } else {
            IndexWidth::W64
        }
    }
}
