use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::interval::cyclic_order_key;
use crate::error::{Error, Result};

/// Largest supported ground set size (subsets are stored as bitmasks).
pub const MAX_N: usize = 31;

/// A subset of `[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KSubset {
    n: usize,
    mask: u32,
}

impl KSubset {
    pub fn new(n: usize, elements: &[usize]) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::invalid(format!("n = {n} exceeds {MAX_N}")));
        }
        let mut mask = 0u32;
        for &e in elements {
            if !(1..=n).contains(&e) {
                return Err(Error::invalid(format!("element {e} not in [{n}]")));
            }
            if mask & (1 << (e - 1)) != 0 {
                return Err(Error::invalid(format!("element {e} repeated")));
            }
            mask |= 1 << (e - 1);
        }
        Ok(KSubset { n, mask })
    }

    pub fn from_mask(n: usize, mask: u32) -> Self {
        debug_assert!(n <= MAX_N && (n == 32 || mask >> n == 0));
        KSubset { n, mask }
    }

    pub fn empty(n: usize) -> Self {
        KSubset { n, mask: 0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        (1..=self.n).contains(&e) && self.mask & (1 << (e - 1)) != 0
    }

    pub fn insert(&mut self, e: usize) {
        self.mask |= 1 << (e - 1);
    }

    pub fn remove(&mut self, e: usize) {
        self.mask &= !(1 << (e - 1));
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> Vec<usize> {
        (1..=self.n).filter(|&e| self.contains(e)).collect()
    }

    /// Elements sorted by the rotated order `<_i`.
    pub fn sorted_by(&self, i: usize) -> Vec<usize> {
        let mut el = self.elements();
        el.sort_by_key(|&e| cyclic_order_key(e, i, self.n));
        el
    }

    /// The 0/1 indicator vector `e_S`.
    pub fn indicator(&self) -> Vec<u8> {
        (1..=self.n).map(|e| self.contains(e) as u8).collect()
    }
}

impl PartialOrd for KSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the increasing element lists.
impl Ord for KSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.elements().cmp(&other.elements()))
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let el = self.elements();
        if self.n <= 9 {
            for e in el {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = el.iter().map(|e| e.to_string()).collect();
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

/// Gale order `S <=_i T`: after sorting both by `<_i`, each entry of `S` is
/// `<=_i` the matching entry of `T`.
pub fn gale_leq(s: &KSubset, t: &KSubset, i: usize) -> Result<bool> {
    if s.n != t.n {
        return Err(Error::invalid("Gale comparison across different ground sets"));
    }
    if s.len() != t.len() {
        return Err(Error::invalid(format!(
            "Gale comparison of sizes {} and {}",
            s.len(),
            t.len()
        )));
    }
    if !(1..=s.n).contains(&i) {
        return Err(Error::invalid(format!("order index {i} not in [{}]", s.n)));
    }
    let n = s.n;
    Ok(s
        .sorted_by(i)
        .into_iter()
        .zip(t.sorted_by(i))
        .all(|(a, b)| cyclic_order_key(a, i, n) <= cyclic_order_key(b, i, n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ks(n: usize, e: &[usize]) -> KSubset {
        KSubset::new(n, e).unwrap()
    }

    #[test]
    fn gale_examples() {
        assert!(gale_leq(&ks(3, &[1, 3]), &ks(3, &[2, 3]), 1).unwrap());
        assert!(gale_leq(&ks(4, &[3, 1]), &ks(4, &[4, 2]), 3).unwrap());
        let s = ks(3, &[1, 2]);
        let t = ks(3, &[1, 3]);
        // under 2 < 3 < 1: (2,1) vs (3,1), so S <=_2 T and not conversely
        assert!(gale_leq(&s, &t, 2).unwrap());
        assert!(!gale_leq(&t, &s, 2).unwrap());
    }

    #[test]
    fn gale_errors() {
        assert!(gale_leq(&ks(3, &[1]), &ks(3, &[1, 2]), 1).is_err());
        assert!(gale_leq(&ks(3, &[1]), &ks(3, &[2]), 4).is_err());
        assert!(gale_leq(&ks(3, &[1]), &ks(4, &[2]), 1).is_err());
        assert!(KSubset::new(3, &[1, 1]).is_err());
        assert!(KSubset::new(3, &[4]).is_err());
    }

    /// Partial-order axioms by exhaustion over all equal-size pairs, n <= 6.
    #[test]
    fn gale_is_partial_order() {
        for n in 1..=6usize {
            let all: Vec<KSubset> = (0u32..1 << n).map(|m| KSubset::from_mask(n, m)).collect();
            for i in 1..=n {
                for s in &all {
                    assert!(gale_leq(s, s, i).unwrap());
                    for t in all.iter().filter(|t| t.len() == s.len()) {
                        let st = gale_leq(s, t, i).unwrap();
                        if st && gale_leq(t, s, i).unwrap() {
                            assert_eq!(s, t);
                        }
                        if !st {
                            continue;
                        }
                        for u in all.iter().filter(|u| u.len() == s.len()) {
                            if gale_leq(t, u, i).unwrap() {
                                assert!(gale_leq(s, u, i).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn display_and_order() {
        assert_eq!(ks(5, &[5, 1, 3]).to_string(), "135");
        assert_eq!(ks(5, &[5, 1]).sorted_by(5), vec![5, 1]);
        assert!(ks(4, &[1, 4]) < ks(4, &[2, 3]));
    }
}
