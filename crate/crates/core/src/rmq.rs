//! Per-bucket running minima for the LCP-inducing scans.
//!
//! A scan absorbs the LCP value of every slot it passes. When slot `i`
//! induces a suffix into bucket `c`, `take(c)` yields the minimum of all
//! values absorbed since the previous `take(c)`, i.e. the LCP of the two
//! inducing suffixes. The three strategies trade bookkeeping for query
//! cost and are observationally identical.

use num_traits::Bounded;

/// Running-minimum contract shared by the scan strategies.
///
/// `V::max_value()` is reserved and must not be absorbed.
pub trait MinTracker<V> {
    fn new(sigma: usize) -> Self
    where
        Self: Sized;

    fn sigma(&self) -> usize;

    /// Folds `value` into the pending minimum of every bucket.
    fn absorb(&mut self, value: V);

    /// Returns and clears the pending minimum of `bucket`, `None` if nothing
    /// was absorbed since its last take.
    fn take(&mut self, bucket: usize) -> Option<V>;
}

/// Keeps the absorbed values and rescans them on every take. Quadratic in
/// the worst case; kept as the oracle for the other two.
#[derive(Clone, Debug)]
pub struct ScanTracker<V> {
    log: Vec<V>,
    last_take: Vec<usize>,
}

impl<V: Copy + Ord> MinTracker<V> for ScanTracker<V> {
    fn new(sigma: usize) -> Self {
        ScanTracker {
            log: Vec::new(),
            last_take: vec![0; sigma],
        }
    }

    fn sigma(&self) -> usize {
        self.last_take.len()
    }

    fn absorb(&mut self, value: V) {
        self.log.push(value);
    }

    fn take(&mut self, bucket: usize) -> Option<V> {
        let from = std::mem::replace(&mut self.last_take[bucket], self.log.len());
        self.log[from..].iter().copied().min()
    }
}

/// One running minimum per bucket, capped eagerly on every absorb:
/// O(sigma) per absorb, O(1) per take.
#[derive(Clone, Debug)]
pub struct MArrayTracker<V> {
    minima: Vec<V>,
}

impl<V: Copy + Ord + Bounded> MinTracker<V> for MArrayTracker<V> {
    fn new(sigma: usize) -> Self {
        MArrayTracker {
            minima: vec![V::max_value(); sigma],
        }
    }

    fn sigma(&self) -> usize {
        self.minima.len()
    }

    #[inline]
    fn absorb(&mut self, value: V) {
        for m in self.minima.iter_mut() {
            *m = (*m).min(value);
        }
    }

    #[inline]
    fn take(&mut self, bucket: usize) -> Option<V> {
        let m = std::mem::replace(&mut self.minima[bucket], V::max_value());
        (m != V::max_value()).then_some(m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct StackEntry<V> {
    value: V,
    stamp: u64,
    // Buckets whose pending minimum is this entry.
    holders: usize,
}

/// Values kept strictly increasing with their absorb stamps; a take binary
/// searches for the first entry newer than the bucket's last take. Entries
/// no bucket refers to are dropped, so the stack never exceeds `sigma`
/// entries. O(lg sigma) per take, amortized O(1) per absorb.
#[derive(Clone, Debug)]
pub struct StackTracker<V> {
    stack: Vec<StackEntry<V>>,
    last_take: Vec<u64>,
    // Buckets with nothing absorbed since their last take.
    waiting: usize,
    clock: u64,
    pushed: usize,
    popped: usize,
}

impl<V: Copy + Ord> StackTracker<V> {
    pub fn len(&self) -> usize {
        self.stack.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stack.is_empty()
    }

    /// Total entries pushed and removed so far.
    pub fn traffic(&self) -> (usize, usize) {
        (self.pushed, self.popped)
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.stack
            .windows(2)
            .all(|w| w[0].value < w[1].value && w[0].stamp < w[1].stamp)
    }
}

impl<V: Copy + Ord> MinTracker<V> for StackTracker<V> {
    fn new(sigma: usize) -> Self {
        StackTracker {
            stack: Vec::new(),
            last_take: vec![0; sigma],
            waiting: sigma,
            clock: 0,
            pushed: 0,
            popped: 0,
        }
    }

    fn sigma(&self) -> usize {
        self.last_take.len()
    }

    fn absorb(&mut self, value: V) {
        self.clock += 1;
        let mut holders = std::mem::take(&mut self.waiting);
        while let Some(top) = self.stack.last() {
            if top.value < value {
                break;
            }
            holders += top.holders;
            self.stack.pop();
            self.popped += 1;
        }
        if holders > 0 {
            self.stack.push(StackEntry {
                value,
                stamp: self.clock,
                holders,
            });
            self.pushed += 1;
        }
    }

    fn take(&mut self, bucket: usize) -> Option<V> {
        let since = std::mem::replace(&mut self.last_take[bucket], self.clock);
        let idx = self.stack.partition_point(|e| e.stamp <= since);
        let entry = self.stack.get_mut(idx)?;
        let value = entry.value;
        entry.holders -= 1;
        if entry.holders == 0 {
            self.stack.remove(idx);
            self.popped += 1;
        }
        self.waiting += 1;
        Some(value)
    }
}
