use serde::{Deserialize, Serialize};

use super::wrap;
use crate::error::{Error, Result};

/// Position of `x` in the rotated order `i <_i i+1 <_i ... <_i i-1`, as `0..n`.
#[inline]
pub fn cyclic_order_key(x: usize, i: usize, n: usize) -> usize {
    (x + n - i) % n
}

/// The cyclic interval `[start, end]` of `[n]`.
///
/// As a totally ordered set it is `start <_start start+1 <_start ... <_start end`.
/// Its sum functional `x_[start,end]` covers the indices `start, ..., end-1`
/// and is empty when `start == end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicInterval {
    pub start: usize,
    pub end: usize,
    pub n: usize,
}

impl CyclicInterval {
    pub fn new(start: usize, end: usize, n: usize) -> Result<Self> {
        if n == 0 || !(1..=n).contains(&start) || !(1..=n).contains(&end) {
            return Err(Error::invalid(format!(
                "interval [{start},{end}] out of range for n = {n}"
            )));
        }
        Ok(CyclicInterval { start, end, n })
    }

    /// True when the interval passes from `n` back to `1`.
    pub fn wraps(&self) -> bool {
        self.start > self.end
    }

    /// Elements of the ordered set `[start, end]` in `<_start` order.
    pub fn elements(&self) -> Vec<usize> {
        let len = cyclic_order_key(self.end, self.start, self.n) + 1;
        (0..len)
            .map(|o| wrap((self.start + o) as i64, self.n))
            .collect()
    }

    /// Coordinates summed by `x_[start,end]`.
    pub fn sum_indices(&self) -> Vec<usize> {
        let len = cyclic_order_key(self.end, self.start, self.n);
        (0..len)
            .map(|o| wrap((self.start + o) as i64, self.n))
            .collect()
    }

    /// Evaluates `x_[start,end]` on a point given in 1-based coordinates `x[0..n]`.
    pub fn eval<T>(&self, x: &[T]) -> T
    where
        T: Clone + std::iter::Sum<T>,
    {
        self.sum_indices().into_iter().map(|i| x[i - 1].clone()).sum()
    }

    pub fn contains(&self, x: usize) -> bool {
        cyclic_order_key(x, self.start, self.n) <= cyclic_order_key(self.end, self.start, self.n)
    }
}

impl std::fmt::Display for CyclicInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}
