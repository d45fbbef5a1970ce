use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::necklace::GrassmannNecklace;
use crate::combinatorics::{wrap, CyclicInterval, KSubset, Permutation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

/// A permutation of `[n]` whose fixed points are colored black or white.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPermutation {
    pi: Permutation,
    colors: BTreeMap<usize, Color>,
}

impl DecoratedPermutation {
    /// The keys of `colors` must be exactly the fixed points of `pi`.
    pub fn new(pi: Permutation, colors: BTreeMap<usize, Color>) -> Result<Self> {
        let fixed = pi.fixed_points();
        if !colors.keys().copied().eq(fixed.iter().copied()) {
            return Err(Error::invalid(format!(
                "colored points {:?} differ from fixed points {fixed:?}",
                colors.keys().collect::<Vec<_>>()
            )));
        }
        Ok(DecoratedPermutation { pi, colors })
    }

    pub fn pi(&self) -> &Permutation {
        &self.pi
    }

    pub fn colors(&self) -> &BTreeMap<usize, Color> {
        &self.colors
    }

    pub fn n(&self) -> usize {
        self.pi.n()
    }

    /// Whether `pi` maps a proper nonempty interval onto itself.
    ///
    /// Both readings of "interval" are evaluated: linear `{i..j}` with
    /// `1 <= i <= j <= n`, and cyclic `[i,j]`. A permutation fixing a set also
    /// fixes its complement and the complement of a wrapping cyclic interval is
    /// a linear one, so the two always agree; the report keeps both.
    pub fn sif_report(&self) -> SifReport {
        let n = self.n();
        let stabilizes = |el: &[usize]| {
            let mask = KSubset::new(n, el).expect("in range").mask();
            el.iter().all(|&e| mask & (1 << (self.pi.at(e) - 1)) != 0)
        };
        let linear = (1..=n)
            .flat_map(|i| (i..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| j - i + 1 < n)
            .any(|(i, j)| stabilizes(&(i..=j).collect::<Vec<_>>()));
        let cyclic = (1..=n)
            .cartesian_product(1..=n)
            .map(|(i, j)| CyclicInterval::new(i, j, n).expect("in range").elements())
            .filter(|el| el.len() < n)
            .any(|el| stabilizes(&el));
        SifReport {
            linear_sif: !linear,
            cyclic_sif: !cyclic,
        }
    }
}

/// Stabilized-interval-free outcomes for both interval conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SifReport {
    pub linear_sif: bool,
    pub cyclic_sif: bool,
}

impl fmt::Display for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pi)?;
        if !self.colors.is_empty() {
            let c: Vec<String> = self
                .colors
                .iter()
                .map(|(i, c)| format!("{i}:{}", if *c == Color::White { "w" } else { "b" }))
                .collect();
            write!(f, " [{}]", c.join(","))?;
        }
        Ok(())
    }
}

/// `pi(i) = j` when `J_{i+1} = J_i - {i} + {j}` with `j != i`; a fixed point
/// `i` is black when `i` is not in `J_i` and white when it is.
pub fn decorated_from_necklace(j: &GrassmannNecklace) -> DecoratedPermutation {
    let n = j.n();
    let mut word = vec![0; n];
    let mut colors = BTreeMap::new();
    for i in 1..=n {
        let cur = j.get(i);
        let next = j.get(wrap(i as i64 + 1, n));
        if !cur.contains(i) {
            word[i - 1] = i;
            colors.insert(i, Color::Black);
        } else {
            let added = next.mask() & !cur.mask();
            if added == 0 {
                word[i - 1] = i;
                colors.insert(i, Color::White);
            } else {
                word[i - 1] = added.trailing_zeros() as usize + 1;
            }
        }
    }
    let pi = Permutation::new(word).expect("necklace invariant yields a bijection");
    DecoratedPermutation { pi, colors }
}

/// Inverse bijection: `j` is in `J_m` iff `m` lies in the cyclic half-open
/// interval `(pi^{-1}(j), j]` (for non-fixed `j`), or `j` is a white fixed point.
pub fn necklace_from_decorated(d: &DecoratedPermutation) -> GrassmannNecklace {
    let n = d.n();
    let inv = d.pi.inverse();
    let subsets = (1..=n)
        .map(|m| {
            let mut s = KSubset::empty(n);
            for jj in 1..=n {
                let src = inv.at(jj);
                let member = if src == jj {
                    d.colors[&jj] == Color::White
                } else {
                    // m in (src, jj] cyclically
                    let off_m = (m + n - src) % n;
                    let off_j = (jj + n - src) % n;
                    off_m >= 1 && off_m <= off_j
                };
                if member {
                    s.insert(jj);
                }
            }
            s
        })
        .collect();
    GrassmannNecklace::from_subsets_unchecked(n, subsets)
}

/// All decorated permutations of `[n]`, ordered lexicographically by the
/// one-line permutation and then by fixed-point colors (black before white).
pub fn all_decorated_permutations(n: usize) -> Vec<DecoratedPermutation> {
    let mut out = Vec::new();
    for word in (1..=n).permutations(n) {
        let pi = Permutation::new(word).expect("permutation");
        let fixed = pi.fixed_points();
        for bits in 0u32..(1 << fixed.len()) {
            let colors = fixed
                .iter()
                .enumerate()
                .map(|(k, &f)| {
                    let c = if bits >> (fixed.len() - 1 - k) & 1 == 1 {
                        Color::White
                    } else {
                        Color::Black
                    };
                    (f, c)
                })
                .collect();
            out.push(DecoratedPermutation {
                pi: pi.clone(),
                colors,
            });
        }
    }
    out
}
