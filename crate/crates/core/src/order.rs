//! Comparable storage with a metered comparator, plus the selection and
//! partitioning primitives the meta-solver is built on.
//!
//! Positions are 0-based indices into the store. Two positions holding equal
//! keys are ordered by position, so the induced order is strict and total.
//! Every comparison made through [`ComparableStore::less`] (and everything
//! built on it: [`select_rank`], [`split_into_groups`], [`sort_positions`])
//! is charged to the store's counter. Oracles use the `*_uncharged` helpers.

use std::cell::Cell;
use std::cmp::Ordering;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("position {pos} out of range for {len} comparables")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("position {0} appears more than once")]
    DuplicatePosition(usize),
    #[error("rank {rank} out of range for a subset of {len}")]
    RankOutOfRange { rank: usize, len: usize },
    #[error("group count {groups} must be a power of two in 1..={len}")]
    InvalidGroupCount { groups: usize, len: usize },
}

/// The comparables of one solve session.
#[derive(Debug)]
pub struct ComparableStore<K> {
    keys: Vec<K>,
    counter: Cell<u64>,
}

impl<K: Ord> ComparableStore<K> {
    pub fn new(keys: Vec<K>) -> Self {
        ComparableStore {
            keys,
            counter: Cell::new(0),
        }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[K] {
        &self.keys
    }

    pub fn key(&self, pos: usize) -> &K {
        &self.keys[pos]
    }

    pub fn into_keys(self) -> Vec<K> {
        self.keys
    }

    /// Number of charged comparisons so far.
    pub fn comparisons(&self) -> u64 {
        self.counter.get()
    }

    /// Checked, charged comparison of two distinct positions.
    pub fn compare(&self, i: usize, j: usize) -> Result<Ordering, OrderError> {
        self.check(i)?;
        self.check(j)?;
        if i == j {
            return Err(OrderError::DuplicatePosition(i));
        }
        Ok(if self.less(i, j) {
            Ordering::Less
        } else {
            Ordering::Greater
        })
    }

    /// Charged strict comparison. Callers guarantee the positions are valid.
    #[inline]
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.counter.set(self.counter.get() + 1);
        self.cmp_uncharged(i, j) == Ordering::Less
    }

    /// Tie-broken order without touching the counter.
    #[inline]
    pub fn cmp_uncharged(&self, i: usize, j: usize) -> Ordering {
        self.keys[i].cmp(&self.keys[j]).then(i.cmp(&j))
    }

    /// Rank of every position under the tie-broken order (uncharged).
    pub fn uncharged_ranks(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_unstable_by(|&a, &b| self.cmp_uncharged(a, b));
        let mut ranks = vec![0; self.len()];
        for (r, &p) in order.iter().enumerate() {
            ranks[p] = r;
        }
        ranks
    }

    fn check(&self, pos: usize) -> Result<(), OrderError> {
        if pos < self.len() {
            Ok(())
        } else {
            Err(OrderError::PositionOutOfRange { pos, len: self.len() })
        }
    }

    pub(crate) fn check_subset(&self, subset: &[usize]) -> Result<(), OrderError> {
        let mut seen = vec![false; self.len()];
        for &p in subset {
            self.check(p)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(OrderError::DuplicatePosition(p));
            }
        }
        Ok(())
    }
}

/// Position holding the `rank`-th smallest key (0-based) among `subset`.
///
/// Deterministic median-of-medians; charges at most a fixed constant times
/// `subset.len()` comparisons.
pub fn select_rank<K: Ord>(store: &ComparableStore<K>, subset: &[usize], rank: usize) -> Result<usize, OrderError> {
    store.check_subset(subset)?;
    if rank >= subset.len() {
        return Err(OrderError::RankOutOfRange {
            rank,
            len: subset.len(),
        });
    }
    let mut work = subset.to_vec();
    select_in_place(store, &mut work, rank);
    Ok(work[rank])
}

/// Splits `subset` into `groups` order-consistent groups by repeated lower
/// median splits. Group sizes differ by at most one.
pub fn split_into_groups<K: Ord>(
    store: &ComparableStore<K>,
    subset: &[usize],
    groups: usize,
) -> Result<Vec<Vec<usize>>, OrderError> {
    store.check_subset(subset)?;
    if groups == 0 || !groups.is_power_of_two() || groups > subset.len() {
        return Err(OrderError::InvalidGroupCount {
            groups,
            len: subset.len(),
        });
    }
    let mut work = subset.to_vec();
    Ok(split_unchecked(store, &mut work, groups))
}

pub(crate) fn split_unchecked<K: Ord>(
    store: &ComparableStore<K>,
    work: &mut [usize],
    groups: usize,
) -> Vec<Vec<usize>> {
    let mut sizes = Vec::with_capacity(groups);
    split_recursive(store, work, groups, &mut sizes);
    let mut out = Vec::with_capacity(groups);
    let mut start = 0;
    for size in sizes {
        out.push(work[start..start + size].to_vec());
        start += size;
    }
    out
}

fn split_recursive<K: Ord>(store: &ComparableStore<K>, slice: &mut [usize], groups: usize, sizes: &mut Vec<usize>) {
    if groups == 1 {
        sizes.push(slice.len());
        return;
    }
    // the lower half keeps the lower median
    let mid = slice.len().div_ceil(2);
    select_in_place(store, slice, mid - 1);
    let (lower, upper) = slice.split_at_mut(mid);
    split_recursive(store, lower, groups / 2, sizes);
    split_recursive(store, upper, groups / 2, sizes);
}

/// `subset` reordered increasingly under the tie-broken order (charged).
pub fn sort_positions<K: Ord>(store: &ComparableStore<K>, subset: &[usize]) -> Result<Vec<usize>, OrderError> {
    store.check_subset(subset)?;
    let mut work = subset.to_vec();
    sort_unchecked(store, &mut work);
    Ok(work)
}

pub(crate) fn sort_unchecked<K: Ord>(store: &ComparableStore<K>, work: &mut [usize]) {
    work.sort_by(|&a, &b| {
        if store.less(a, b) {
            Ordering::Less
        } else if a == b {
            Ordering::Equal
        } else {
            Ordering::Greater
        }
    });
}

/// Position of the minimum key in a non-empty slice (charged).
pub(crate) fn min_position<K: Ord>(store: &ComparableStore<K>, slice: &[usize]) -> usize {
    let mut best = slice[0];
    for &p in &slice[1..] {
        if store.less(p, best) {
            best = p;
        }
    }
    best
}

pub(crate) fn max_position<K: Ord>(store: &ComparableStore<K>, slice: &[usize]) -> usize {
    let mut best = slice[0];
    for &p in &slice[1..] {
        if store.less(best, p) {
            best = p;
        }
    }
    best
}

const SMALL: usize = 10;

/// Rearranges `v` so that `v[k]` holds the k-th smallest, everything before
/// it is smaller and everything after it is larger.
pub(crate) fn select_in_place<K: Ord>(store: &ComparableStore<K>, v: &mut [usize], k: usize) {
    let mut lo = 0;
    let mut hi = v.len();
    loop {
        let len = hi - lo;
        if len <= SMALL {
            insertion_sort(store, &mut v[lo..hi]);
            return;
        }
        let window = &mut v[lo..hi];
        let pivot = median_of_medians(store, window);
        let p = lo + partition(store, window, pivot);
        match k.cmp(&p) {
            Ordering::Equal => return,
            Ordering::Less => hi = p,
            Ordering::Greater => lo = p + 1,
        }
    }
}

/// Index (within `v`) of the median of the medians of groups of five.
/// Leaves the group medians at the front of `v`.
fn median_of_medians<K: Ord>(store: &ComparableStore<K>, v: &mut [usize]) -> usize {
    let groups = v.len().div_ceil(5);
    for g in 0..groups {
        let start = g * 5;
        let end = (start + 5).min(v.len());
        insertion_sort(store, &mut v[start..end]);
        let median = start + (end - start - 1) / 2;
        v.swap(g, median);
    }
    let mid = (groups - 1) / 2;
    select_in_place(store, &mut v[..groups], mid);
    mid
}

/// Lomuto partition around `v[pivot]`; returns its final index.
fn partition<K: Ord>(store: &ComparableStore<K>, v: &mut [usize], pivot: usize) -> usize {
    let last = v.len() - 1;
    v.swap(pivot, last);
    let pv = v[last];
    let mut store_at = 0;
    for i in 0..last {
        if store.less(v[i], pv) {
            v.swap(i, store_at);
            store_at += 1;
        }
    }
    v.swap(store_at, last);
    store_at
}

fn insertion_sort<K: Ord>(store: &ComparableStore<K>, v: &mut [usize]) {
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && store.less(v[j], v[j - 1]) {
            v.swap(j, j - 1);
            j -= 1;
        }
    }
}
