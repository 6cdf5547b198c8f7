//! Input texts and the virtual sentinel convention.
//!
//! A text of length `n` is conceptually followed by a sentinel at position
//! `n` that is smaller than every symbol and occurs nowhere else. The
//! sentinel is never stored; [`Text::get`] returns `None` for it, which
//! orders below every `Some(symbol)`.

use crate::num::Symbol;
use crate::Error;

/// Alphabet size of byte texts.
pub const BYTE_ALPHABET: usize = 256;

#[derive(Clone, Copy, Debug)]
pub struct Text<'a, S> {
    data: &'a [S],
    alphabet_size: usize,
}

impl<'a> Text<'a, u8> {
    pub fn from_bytes(data: &'a [u8]) -> Self {
        Text {
            data,
            alphabet_size: BYTE_ALPHABET,
        }
    }
}

impl<'a, S: Symbol> Text<'a, S> {
    /// Wraps `data`, checking that every symbol is below `alphabet_size`.
    pub fn new(data: &'a [S], alphabet_size: usize) -> Result<Self, Error> {
        if let Some((position, &s)) = data
            .iter()
            .enumerate()
            .find(|(_, s)| s.rank() >= alphabet_size)
        {
            return Err(Error::SymbolOutOfRange {
                position,
                symbol: s.rank(),
                alphabet_size,
            });
        }
        Ok(Text {
            data,
            alphabet_size,
        })
    }

    pub(crate) fn new_unchecked(data: &'a [S], alphabet_size: usize) -> Self {
        debug_assert!(data.iter().all(|s| s.rank() < alphabet_size));
        Text {
            data,
            alphabet_size,
        }
    }

    #[inline(always)]
    pub fn len(&self) -> usize {
        self.data.len()
    }

    #[inline(always)]
    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn data(&self) -> &'a [S] {
        self.data
    }

    /// Symbol at `i`, or `None` for the sentinel position `i == n`.
    #[inline(always)]
    pub fn get(&self, i: usize) -> Option<S> {
        self.data.get(i).copied()
    }

    /// Symbol rank at a non-sentinel position.
    #[inline(always)]
    pub fn rank_at(&self, i: usize) -> usize {
        self.data[i].rank()
    }

    /// One past the largest symbol rank that occurs, 0 for the empty text.
    pub fn effective_alphabet(&self) -> usize {
        self.data.iter().map(|s| s.rank() + 1).max().unwrap_or(0)
    }

    /// Length of the common prefix of the suffixes starting at `a` and
    /// `b`, sentinel-terminated.
    pub fn common_prefix(&self, a: usize, b: usize) -> usize {
        if a == b {
            return self.len() - a;
        }
        common_prefix(self.data, a, b)
    }
}

pub(crate) fn common_prefix<S: PartialEq>(data: &[S], a: usize, b: usize) -> usize {
    let (Some(x), Some(y)) = (data.get(a..), data.get(b..)) else {
        return 0;
    };
    x.iter().zip(y).take_while(|(p, q)| p == q).count()
}
