use std::fmt;

use serde::{Deserialize, Serialize};

use super::necklace::GrassmannNecklace;
use crate::combinatorics::{CyclicInterval, KSubset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sense {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

impl Sense {
    pub fn flip(self) -> Sense {
        match self {
            Sense::Le => Sense::Ge,
            Sense::Ge => Sense::Le,
        }
    }
}

/// `x_[i,j] <= bound` or `x_[i,j] >= bound`; strict ones use `<` / `>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Inequality {
    pub interval: CyclicInterval,
    pub bound: i64,
    pub sense: Sense,
    pub strict: bool,
}

impl Inequality {
    pub fn closed(interval: CyclicInterval, sense: Sense, bound: i64) -> Self {
        Inequality {
            interval,
            bound,
            sense,
            strict: false,
        }
    }

    /// Whether `x` (1-based coordinates in `x[0..n]`) satisfies the
    /// inequality scaled to the `t`-th dilate.
    pub fn holds_scaled(&self, x: &[i64], t: i64) -> bool {
        let v = self.interval.eval(x);
        let b = self.bound * t;
        match (self.sense, self.strict) {
            (Sense::Le, false) => v <= b,
            (Sense::Le, true) => v < b,
            (Sense::Ge, false) => v >= b,
            (Sense::Ge, true) => v > b,
        }
    }

    /// Rewrites the inequality over a non-wrapping interval `[lo, hi]` with
    /// `lo < hi <= n` (so the functional only involves `x_1..x_{n-1}`), using
    /// `x_1 + ... + x_n = rank`. Empty intervals give `None`.
    pub fn canonical(&self, rank: i64) -> Option<Inequality> {
        let iv = self.interval;
        if iv.start == iv.end {
            return None;
        }
        if !iv.wraps() {
            return Some(*self);
        }
        let comp = CyclicInterval::new(iv.end, iv.start, iv.n).expect("in range");
        Some(Inequality {
            interval: comp,
            bound: rank - self.bound,
            sense: self.sense.flip(),
            strict: self.strict,
        })
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .interval
            .sum_indices()
            .iter()
            .map(|i| format!("x{i}"))
            .collect();
        let lhs = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        };
        let op = match (self.sense, self.strict) {
            (Sense::Le, false) => "<=",
            (Sense::Le, true) => "<",
            (Sense::Ge, false) => ">=",
            (Sense::Ge, true) => ">",
        };
        write!(f, "{lhs} {op} {}", self.bound)
    }
}

/// A polytope (or half-open polytope) in `{x : x_1 + ... + x_n = rank}`.
///
/// The constraints `x_i >= 0` and `x_1 + ... + x_n = rank` are implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HRepresentation {
    pub n: usize,
    pub rank: usize,
    pub inequalities: Vec<Inequality>,
}

impl HRepresentation {
    pub fn new(n: usize, rank: usize, inequalities: Vec<Inequality>) -> Self {
        HRepresentation {
            n,
            rank,
            inequalities,
        }
    }

    /// Membership of a point of the `t`-th dilate (all constraints scaled by `t`).
    pub fn contains_scaled(&self, x: &[i64], t: i64) -> bool {
        x.len() == self.n
            && x.iter().all(|&v| v >= 0)
            && x.iter().sum::<i64>() == self.rank as i64 * t
            && self.inequalities.iter().all(|q| q.holds_scaled(x, t))
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.contains_scaled(x, 1)
    }

    /// 0/1 points of coordinate sum `rank` satisfying every inequality.
    pub fn zero_one_points(&self) -> Vec<KSubset> {
        let n = self.n;
        let mut out: Vec<KSubset> = (0u32..(1u32 << n))
            .filter(|m| m.count_ones() as usize == self.rank)
            .map(|m| KSubset::from_mask(n, m))
            .filter(|s| {
                let x: Vec<i64> = s.indicator().into_iter().map(i64::from).collect();
                self.contains(&x)
            })
            .collect();
        out.sort();
        out
    }

    /// Same inequalities with every strict flag cleared.
    pub fn closure(&self) -> HRepresentation {
        let mut h = self.clone();
        for q in &mut h.inequalities {
            q.strict = false;
        }
        h
    }
}

/// The interval-sum description of a positroid polytope: `x_[i, a_j^i] <= j-1`
/// for every `i` and `j`, where `a_1^i <_i ... <_i a_r^i` sort `J_i`.
/// Empty-interval inequalities are dropped; duplicates are removed.
pub fn h_representation(j: &GrassmannNecklace) -> HRepresentation {
    let n = j.n();
    let mut ineqs = Vec::new();
    for i in 1..=n {
        for (idx, &a) in j.sorted_entry(i).iter().enumerate() {
            if a == i {
                continue;
            }
            let iv = CyclicInterval::new(i, a, n).expect("in range");
            let q = Inequality::closed(iv, Sense::Le, idx as i64);
            if !ineqs.contains(&q) {
                ineqs.push(q);
            }
        }
    }
    HRepresentation::new(n, j.rank(), ineqs)
}
