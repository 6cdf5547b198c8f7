//! Output arrays. Both are 0-indexed and exclude the sentinel suffix.

use std::ops::Deref;

use crate::num::Index;

/// Text positions in lexicographic suffix order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SuffixArray<I>(Vec<I>);

/// `lcp[i]` is the longest common prefix of the suffixes at ranks `i - 1`
/// and `i`; `lcp[0] = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LcpArray<I>(Vec<I>);

macro_rules! array_impls {
    ($name:ident) => {
        impl<I: Index> $name<I> {
            pub fn from_vec(v: Vec<I>) -> Self {
                $name(v)
            }

            pub fn into_vec(self) -> Vec<I> {
                self.0
            }

            pub fn as_slice(&self) -> &[I] {
                &self.0
            }

            pub fn to_usize_vec(&self) -> Vec<usize> {
                self.0.iter().map(|x| x.as_usize()).collect()
            }

            /// Converts to another index width.
            pub fn widen<J: Index>(&self) -> $name<J> {
                $name(self.0.iter().map(|x| J::from_usize(x.as_usize())).collect())
            }
        }

        impl<I> Deref for $name<I> {
            type Target = [I];

            fn deref(&self) -> &[I] {
                &self.0
            }
        }
    };
}

array_impls!(SuffixArray);
array_impls!(LcpArray);
