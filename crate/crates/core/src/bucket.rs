//! Per-symbol bucket boundaries with movable L-heads and S-tails.

use crate::num::Symbol;
use crate::text::Text;

#[derive(Clone, Debug)]
pub struct BucketTable {
    counts: Vec<usize>,
    start: Vec<usize>,
    l_head: Vec<usize>,
    // One past the next free S slot, so an empty bucket needs no
    // signed arithmetic.
    s_end: Vec<usize>,
}

impl BucketTable {
    /// Buckets over `[0, n)` for every symbol of the text's alphabet.
    pub fn new<S: Symbol>(text: Text<'_, S>) -> Self {
        Self::with_offset(text, text.alphabet_size(), 0)
    }

    /// Buckets shifted right by `offset` slots, covering only the first
    /// `sigma` symbols. The inducing scans use offset 1 to keep slot 0 for
    /// the sentinel suffix.
    pub(crate) fn with_offset<S: Symbol>(text: Text<'_, S>, sigma: usize, offset: usize) -> Self {
        let mut counts = vec![0usize; sigma];
        for &s in text.data() {
            counts[s.rank()] += 1;
        }
        let mut start = Vec::with_capacity(sigma);
        let mut acc = offset;
        for &c in &counts {
            start.push(acc);
            acc += c;
        }
        let mut table = BucketTable {
            l_head: start.clone(),
            s_end: vec![0; sigma],
            counts,
            start,
        };
        table.reset_tails();
        table
    }

    pub fn sigma(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, c: usize) -> usize {
        self.counts[c]
    }

    #[inline(always)]
    pub fn start(&self, c: usize) -> usize {
        self.start[c]
    }

    #[inline(always)]
    pub fn end(&self, c: usize) -> usize {
        self.start[c] + self.counts[c]
    }

    /// Half-open interval of bucket `c`.
    pub fn interval(&self, c: usize) -> (usize, usize) {
        (self.start(c), self.end(c))
    }

    /// Next free L slot of `c`.
    #[inline(always)]
    pub fn l_head(&self, c: usize) -> usize {
        self.l_head[c]
    }

    /// Next free S slot of `c`, `None` once the bucket is exhausted from
    /// the right.
    pub fn s_tail(&self, c: usize) -> Option<usize> {
        self.s_end[c].checked_sub(1).filter(|&t| t >= self.start[c])
    }

    pub fn reset_heads(&mut self) {
        self.l_head.copy_from_slice(&self.start);
    }

    pub fn reset_tails(&mut self) {
        for c in 0..self.counts.len() {
            self.s_end[c] = self.start[c] + self.counts[c];
        }
    }

    /// Claims the next L slot of `c` and advances the head.
    #[inline(always)]
    pub fn push_l(&mut self, c: usize) -> usize {
        let k = self.l_head[c];
        debug_assert!(k < self.end(c));
        self.l_head[c] = k + 1;
        k
    }

    /// Claims the next S slot of `c` and retreats the tail.
    #[inline(always)]
    pub fn push_s(&mut self, c: usize) -> usize {
        let k = self.s_end[c] - 1;
        debug_assert!(k >= self.start[c]);
        self.s_end[c] = k;
        k
    }
}

/// Bucket table of a text, boundaries over `[0, n)`.
pub fn bucket_table<S: Symbol>(text: Text<'_, S>) -> BucketTable {
    BucketTable::new(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn banana_buckets() {
        let b = bucket_table(Text::from_bytes(b"banana"));
        assert_eq!(b.count(b'a' as usize), 3);
        assert_eq!(b.count(b'b' as usize), 1);
        assert_eq!(b.count(b'n' as usize), 2);
        assert_eq!(b.interval(b'a' as usize), (0, 3));
        assert_eq!(b.interval(b'b' as usize), (3, 4));
        assert_eq!(b.interval(b'n' as usize), (4, 6));
        assert_eq!(b.l_head(b'n' as usize), 4);
        assert_eq!(b.s_tail(b'n' as usize), Some(5));
    }

    #[test]
    fn degenerate_buckets() {
        let b = bucket_table(Text::from_bytes(b"aaaa"));
        assert_eq!(b.interval(b'a' as usize), (0, 4));
        let e = bucket_table(Text::from_bytes(b""));
        assert!((0..256).all(|c| e.count(c) == 0));
        assert!((0..256).all(|c| e.s_tail(c).is_none()));
    }

    #[test]
    fn intervals_partition() {
        let t = b"mississippi river banks";
        let b = bucket_table(Text::from_bytes(t));
        let mut pos = 0;
        for c in 0..b.sigma() {
            let (s, e) = b.interval(c);
            assert_eq!(s, pos);
            pos = e;
        }
        assert_eq!(pos, t.len());
    }

    #[test]
    fn heads_and_tails_move() {
        let mut b = BucketTable::with_offset(Text::from_bytes(b"abab"), 256, 1);
        let a = b'a' as usize;
        assert_eq!(b.interval(a), (1, 3));
        assert_eq!(b.push_l(a), 1);
        assert_eq!(b.push_s(a), 2);
        assert_eq!(b.s_tail(a), Some(1));
        b.reset_heads();
        b.reset_tails();
        assert_eq!(b.l_head(a), 1);
        assert_eq!(b.s_tail(a), Some(2));
    }
}
