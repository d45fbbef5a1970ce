use std::collections::BTreeSet;

use super::necklace::GrassmannNecklace;
use crate::combinatorics::{cyclic_order_key, gale_leq, KSubset, MAX_N};
use crate::error::{Error, Result};

/// The basis family of a matroid on `[n]` (a positroid when it comes from a
/// necklace). Bases are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PositroidBases {
    n: usize,
    rank: usize,
    bases: BTreeSet<KSubset>,
}

impl PositroidBases {
    /// Validates a nonempty, equicardinal family satisfying basis exchange.
    pub fn new(n: usize, bases: impl IntoIterator<Item = KSubset>) -> Result<Self> {
        let bases: BTreeSet<KSubset> = bases.into_iter().collect();
        let out = Self::new_unchecked(n, bases)?;
        out.check_exchange()?;
        Ok(out)
    }

    pub fn from_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let sets = lists
            .iter()
            .map(|l| KSubset::new(n, l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, sets)
    }

    fn new_unchecked(n: usize, bases: BTreeSet<KSubset>) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::invalid(format!("ground set size {n} unsupported")));
        }
        let first = bases
            .iter()
            .next()
            .ok_or_else(|| Error::invalid("empty basis family"))?;
        let rank = first.len();
        if let Some(b) = bases.iter().find(|b| b.n() != n || b.len() != rank) {
            return Err(Error::invalid(format!(
                "basis {b} does not have size {rank} on [{n}]"
            )));
        }
        Ok(PositroidBases { n, rank, bases })
    }

    fn check_exchange(&self) -> Result<()> {
        for i_set in &self.bases {
            for j_set in &self.bases {
                for i in i_set.elements() {
                    let ok = j_set.elements().into_iter().any(|j| {
                        let mut s = *i_set;
                        s.remove(i);
                        s.insert(j);
                        s.len() == self.rank && self.bases.contains(&s)
                    });
                    if !ok {
                        return Err(Error::invalid(format!(
                            "basis exchange fails for {i_set}, {j_set}, element {i}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn contains(&self, b: &KSubset) -> bool {
        self.bases.contains(b)
    }

    pub fn iter(&self) -> impl Iterator<Item = &KSubset> {
        self.bases.iter()
    }

    /// Matroid rank of a subset: `max |B ∩ A|` over bases.
    pub fn rank_of(&self, a: &KSubset) -> usize {
        self.rank_of_mask(a.mask())
    }

    fn rank_of_mask(&self, mask: u32) -> usize {
        self.bases
            .iter()
            .map(|b| (b.mask() & mask).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Indicator vectors `e_B` of the bases.
    pub fn vertices(&self) -> Vec<Vec<u8>> {
        self.bases.iter().map(KSubset::indicator).collect()
    }

    /// True when no proper nonempty `A` has `rank(A) + rank([n] - A) = r`.
    pub fn is_connected(&self) -> bool {
        let full = full_mask(self.n);
        (1..full).all(|a| self.rank_of_mask(a) + self.rank_of_mask(full & !a) != self.rank)
    }

    /// Finest direct-sum decomposition: ground subsets (ascending) with the
    /// restricted basis families. Loops and coloops are singleton components.
    pub fn decompose_direct_sum(&self) -> Vec<(Vec<usize>, PositroidBases)> {
        let n = self.n;
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        // e ~ f when some basis B has e in B, f not in B and B - e + f a basis
        for b in &self.bases {
            for e in b.elements() {
                for f in (1..=n).filter(|&f| !b.contains(f)) {
                    let mut s = *b;
                    s.remove(e);
                    s.insert(f);
                    if self.bases.contains(&s) {
                        let (re, rf) = (find(&mut parent, e), find(&mut parent, f));
                        parent[re] = rf;
                    }
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_of_group: Vec<usize> = Vec::new();
        for e in 1..=n {
            let r = find(&mut parent, e);
            match root_of_group.iter().position(|&x| x == r) {
                Some(g) => groups[g].push(e),
                None => {
                    root_of_group.push(r);
                    groups.push(vec![e]);
                }
            }
        }
        groups
            .into_iter()
            .map(|g| {
                let sub = KSubset::new(n, &g).expect("in range").mask();
                let restricted: BTreeSet<KSubset> = self
                    .bases
                    .iter()
                    .map(|b| KSubset::from_mask(n, b.mask() & sub))
                    .collect();
                let comp = PositroidBases::new_unchecked(n, restricted).expect("nonempty");
                (g, comp)
            })
            .collect()
    }

    /// Restriction to a ground subset, relabelled to `[|ground|]` in
    /// increasing order.
    pub fn relabel_to(&self, ground: &[usize]) -> PositroidBases {
        let m = ground.len();
        let bases: BTreeSet<KSubset> = self
            .bases
            .iter()
            .map(|b| {
                let el: Vec<usize> = ground
                    .iter()
                    .enumerate()
                    .filter(|(_, &g)| b.contains(g))
                    .map(|(k, _)| k + 1)
                    .collect();
                KSubset::new(m, &el).expect("in range")
            })
            .collect();
        PositroidBases::new_unchecked(m, bases).expect("nonempty")
    }

    /// True when the family equals the positroid of its own Grassmann necklace.
    pub fn is_positroid(&self) -> bool {
        match necklace_from_bases(self) {
            Ok(j) => bases_from_necklace(&j) == *self,
            Err(_) => false,
        }
    }
}

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// `{ B : |B| = r, J_i <=_i B for every i }`.
pub fn bases_from_necklace(j: &GrassmannNecklace) -> PositroidBases {
    let (n, r) = (j.n(), j.rank());
    let bases: BTreeSet<KSubset> = (0..=full_mask(n))
        .filter(|m| m.count_ones() as usize == r)
        .map(|m| KSubset::from_mask(n, m))
        .filter(|b| (1..=n).all(|i| gale_leq(j.get(i), b, i).expect("same size")))
        .collect();
    PositroidBases::new_unchecked(n, bases).expect("a necklace's own entries are bases")
}

/// `J_i` = the Gale-minimal basis for `<_i` (the lexicographically smallest
/// basis after sorting each by `<_i`).
pub fn necklace_from_bases(b: &PositroidBases) -> Result<GrassmannNecklace> {
    let n = b.n;
    let subsets = (1..=n)
        .map(|i| {
            *b.bases
                .iter()
                .min_by_key(|s| {
                    s.sorted_by(i)
                        .into_iter()
                        .map(|e| cyclic_order_key(e, i, n))
                        .collect::<Vec<_>>()
                })
                .expect("nonempty")
        })
        .collect::<Vec<_>>();
    super::validate_necklace(
        &subsets.iter().map(KSubset::elements).collect::<Vec<_>>(),
        Some(n),
    )
    .map_err(|e| Error::internal(format!("Gale minima do not form a necklace: {e}")))
}
