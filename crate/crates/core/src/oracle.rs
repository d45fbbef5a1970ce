//! Lattice-point counting in dilates, Ehrhart interpolation and the
//! Ehrhart-to-`h*` transform. Independent of the triangulation code.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::combinatorics::CyclicInterval;
use crate::error::{Error, Result};
use crate::poly::ExactPolynomial;
use crate::positroid::{bases_from_necklace, h_representation, GrassmannNecklace, HRepresentation};

/// `x_[i,j] = value` on the polytope, scaled by `t` in the dilate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct IntervalEquality {
    pub interval: CyclicInterval,
    pub value: i64,
}

/// Lattice-point counts `E(0), ..., E(d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountProfile {
    pub dim: usize,
    pub counts: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    pub poly: ExactPolynomial,
    pub dim: usize,
}

impl EhrhartPolynomial {
    pub fn eval(&self, t: i64) -> BigRational {
        self.poly.eval_int(t)
    }

    /// `E(0), ..., E(dim)`.
    pub fn profile(&self) -> Result<CountProfile> {
        let counts = (0..=self.dim as i64)
            .map(|t| {
                let v = self.eval(t);
                u64::try_from(v.to_integer())
                    .ok()
                    .filter(|_| v.is_integer())
                    .ok_or_else(|| Error::internal(format!("E({t}) = {v} is not a count")))
            })
            .collect::<Result<_>>()?;
        Ok(CountProfile {
            dim: self.dim,
            counts,
        })
    }

    pub fn hstar(&self) -> Result<ExactPolynomial> {
        hstar_from_counts(&self.profile()?)
    }
}

/// Block constraint `lo_bound <= x_lo + ... + x_{hi-1} <= hi_bound` on the
/// first `n - 1` coordinates, `1 <= lo < hi <= n`.
#[derive(Debug, Clone, Copy)]
struct Block {
    lo: usize,
    hi: usize,
    min: i64,
    max: i64,
}

/// Integer block bounds for the `t`-th dilate with `x_n` eliminated.
fn blocks(h: &HRepresentation, eqs: &[IntervalEquality], t: i64) -> Vec<Block> {
    let n = h.n;
    let r = h.rank as i64;
    let mut out = vec![Block {
        lo: 1,
        hi: n,
        min: t * r - t,
        max: t * r,
    }];
    for q in &h.inequalities {
        let Some(c) = q.canonical(r) else {
            // an empty sum: 0 must satisfy it
            if !q.holds_scaled(&vec![0; n], t) {
                out.push(Block { lo: 1, hi: n, min: 1, max: 0 });
            }
            continue;
        };
        let (lo, hi) = (c.interval.start, c.interval.end);
        let b = c.bound * t;
        let (min, max) = match (c.sense, c.strict) {
            (crate::positroid::Sense::Le, false) => (i64::MIN, b),
            (crate::positroid::Sense::Le, true) => (i64::MIN, b - 1),
            (crate::positroid::Sense::Ge, false) => (b, i64::MAX),
            (crate::positroid::Sense::Ge, true) => (b + 1, i64::MAX),
        };
        out.push(Block { lo, hi, min, max });
    }
    for e in eqs {
        let iv = e.interval;
        if iv.start == iv.end {
            if e.value != 0 {
                out.push(Block { lo: 1, hi: n, min: 1, max: 0 });
            }
            continue;
        }
        let (lo, hi, v) = if iv.wraps() {
            (iv.end, iv.start, r - e.value)
        } else {
            (iv.start, iv.end, e.value)
        };
        out.push(Block {
            lo,
            hi,
            min: v * t,
            max: v * t,
        });
    }
    out
}

struct Search<'a> {
    n: usize,
    t: i64,
    /// Blocks covering coordinate `k`, indexed by `k`.
    covering: Vec<Vec<Block>>,
    prefix: Vec<i64>,
    point: Vec<i64>,
    sink: Option<&'a mut Vec<Vec<i64>>>,
}

impl Search<'_> {
    fn range(&self, k: usize) -> (i64, i64) {
        let (mut lo, mut hi) = (0, self.t);
        for b in &self.covering[k] {
            let partial = self.prefix[k - 1] - self.prefix[b.lo - 1];
            if b.max != i64::MAX {
                hi = hi.min(b.max - partial);
            }
            if b.min != i64::MIN {
                let rest = self.t * (b.hi - 1 - k) as i64;
                lo = lo.max(b.min - partial - rest);
            }
        }
        (lo, hi)
    }

    fn run(&mut self, k: usize) -> u64 {
        let (lo, hi) = self.range(k);
        if lo > hi {
            return 0;
        }
        if k == self.n - 1 && self.sink.is_none() {
            return (hi - lo + 1) as u64;
        }
        let mut total = 0;
        for v in lo..=hi {
            self.point[k - 1] = v;
            self.prefix[k] = self.prefix[k - 1] + v;
            if k == self.n - 1 {
                if let Some(sink) = self.sink.as_deref_mut() {
                    sink.push(self.point.clone());
                }
                total += 1;
            } else {
                total += self.run(k + 1);
            }
        }
        total
    }
}

fn search(
    h: &HRepresentation,
    eqs: &[IntervalEquality],
    t: i64,
    sink: Option<&mut Vec<Vec<i64>>>,
) -> u64 {
    let n = h.n;
    let r = h.rank as i64;
    if n == 1 {
        // the only candidate is x_1 = t r, which must lie in [0, t]
        let x = vec![t * r];
        let ok = (t * r <= t) && h.contains_scaled(&x, t)
            && eqs.iter().all(|e| e.interval.eval(&x) == e.value * t);
        if ok {
            if let Some(s) = sink {
                s.push(x);
            }
            return 1;
        }
        return 0;
    }
    let bl = blocks(h, eqs, t);
    let mut covering = vec![Vec::new(); n];
    for b in bl {
        for list in &mut covering[b.lo..b.hi] {
            list.push(b);
        }
    }
    let mut s = Search {
        n,
        t,
        covering,
        prefix: vec![0; n],
        point: vec![0; n],
        sink,
    };
    // x_n is filled in afterwards from the coordinate sum
    let count = s.run(1);
    if let Some(points) = s.sink.as_deref_mut() {
        for p in points.iter_mut() {
            let partial: i64 = p[..n - 1].iter().sum();
            p[n - 1] = t * r - partial;
        }
    }
    count
}

/// Number of integer points of the `t`-th dilate, with optional extra
/// interval equalities (also scaled by `t`). Strict inequalities `f < c`
/// become `f <= t c - 1`.
pub fn count_points(h: &HRepresentation, eqs: &[IntervalEquality], t: u32) -> u64 {
    search(h, eqs, i64::from(t), None)
}

/// The points counted by [`count_points`], in lexicographic order.
pub fn lattice_points(h: &HRepresentation, eqs: &[IntervalEquality], t: u32) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    search(h, eqs, i64::from(t), Some(&mut out));
    out
}

/// Counts at `t = 0..=dim`.
pub fn count_profile(h: &HRepresentation, eqs: &[IntervalEquality], dim: usize) -> CountProfile {
    CountProfile {
        dim,
        counts: (0..=dim as u32).map(|t| count_points(h, eqs, t)).collect(),
    }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// The degree `<= d` polynomial through `(t, E(t))`, `t = 0..=d`, via Newton
/// forward differences.
pub fn ehrhart_interpolate(profile: &CountProfile) -> Result<EhrhartPolynomial> {
    let d = profile.dim;
    if profile.counts.len() != d + 1 {
        return Err(Error::invalid(format!(
            "need {} counts for dimension {d}, got {}",
            d + 1,
            profile.counts.len()
        )));
    }
    let mut diffs: Vec<BigRational> = profile.counts.iter().map(|&c| q(c as i64)).collect();
    let mut poly = ExactPolynomial::zero();
    // falling factorial t (t-1) ... (t-k+1) / k!
    let mut basis = ExactPolynomial::one();
    for k in 0..=d {
        poly = &poly + &basis.scale(&diffs[0]);
        let next = ExactPolynomial::new(vec![q(-(k as i64)), q(1)]);
        basis = (&basis * &next).scale(&BigRational::new(BigInt::one(), BigInt::from(k + 1)));
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    Ok(EhrhartPolynomial { poly, dim: d })
}

/// `h*_j = sum_{i=0}^{j} (-1)^i C(d+1, i) E(j - i)` for `j = 0..=d`.
pub fn hstar_from_counts(profile: &CountProfile) -> Result<ExactPolynomial> {
    let d = profile.dim;
    if profile.counts.len() < d + 1 {
        return Err(Error::invalid("count profile is too short"));
    }
    let coeffs: Vec<BigInt> = (0..=d)
        .map(|j| {
            (0..=j).fold(BigInt::zero(), |acc, i| {
                let term = binomial(d + 1, i) * BigInt::from(profile.counts[j - i]);
                if i % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    if let Some(c) = coeffs.iter().find(|c| c.is_negative()) {
        return Err(Error::internal(format!(
            "negative h* coefficient {c} from counts {:?}",
            profile.counts
        )));
    }
    Ok(ExactPolynomial::from_ints(coeffs))
}

/// `E(t) = sum_j h*_j C(t + d - j, d)`.
pub fn ehrhart_from_hstar(h: &ExactPolynomial, dim: usize) -> EhrhartPolynomial {
    let mut poly = ExactPolynomial::zero();
    for (j, c) in h.coeffs().iter().enumerate() {
        // C(t + d - j, d) = prod_{m=1}^{d} (t - j + m) / m
        let mut b = ExactPolynomial::one();
        for m in 1..=dim {
            let f = ExactPolynomial::new(vec![q(m as i64 - j as i64), q(1)]);
            b = (&b * &f).scale(&BigRational::new(BigInt::one(), BigInt::from(m)));
        }
        poly = &poly + &b.scale(c);
    }
    EhrhartPolynomial { poly, dim }
}

/// Ehrhart polynomial of a product of polytopes.
pub fn ehrhart_product(factors: &[EhrhartPolynomial]) -> EhrhartPolynomial {
    factors.iter().fold(
        EhrhartPolynomial {
            poly: ExactPolynomial::one(),
            dim: 0,
        },
        |acc, f| EhrhartPolynomial {
            poly: &acc.poly * &f.poly,
            dim: acc.dim + f.dim,
        },
    )
}

/// `h*` of the face cut out by `eqs`, by counting on the face.
pub fn face_hstar(h: &HRepresentation, eqs: &[IntervalEquality], dim: usize) -> Result<ExactPolynomial> {
    let profile = count_profile(h, eqs, dim);
    if profile.counts.get(1).copied().unwrap_or(1) == 0 {
        return Err(Error::invalid("face is empty"));
    }
    hstar_from_counts(&profile)
}

/// Affine dimension of the positroid polytope: `n` minus the number of
/// connected components.
pub fn polytope_dimension(j: &GrassmannNecklace) -> usize {
    let b = bases_from_necklace(j);
    j.n() - b.decompose_direct_sum().len()
}

/// Ehrhart polynomial of `P_J` by direct counting.
pub fn ehrhart_oracle(j: &GrassmannNecklace) -> Result<EhrhartPolynomial> {
    let dim = polytope_dimension(j);
    ehrhart_interpolate(&count_profile(&h_representation(j), &[], dim))
}

/// `h*` of `P_J` by direct counting.
pub fn hstar_oracle(j: &GrassmannNecklace) -> Result<ExactPolynomial> {
    let dim = polytope_dimension(j);
    hstar_from_counts(&count_profile(&h_representation(j), &[], dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::KSubset;
    use crate::positroid::{all_decorated_permutations, necklace_from_decorated};
    use itertools::Itertools;
    use proptest::prelude::*;

    fn nk(s: &str) -> GrassmannNecklace {
        s.parse().unwrap()
    }

    /// Every `x` in `[0,t]^n` with the right sum, filtered by membership.
    fn brute(h: &HRepresentation, eqs: &[IntervalEquality], t: i64) -> Vec<Vec<i64>> {
        (0..h.n)
            .map(|_| 0..=t)
            .multi_cartesian_product()
            .filter(|x| {
                h.contains_scaled(x, t) && eqs.iter().all(|e| e.interval.eval(x) == e.value * t)
            })
            .collect()
    }

    #[test]
    fn small_counts() {
        let h = h_representation(&nk("12,23,34,45,51"));
        assert_eq!(count_points(&h, &[], 0), 1);
        assert_eq!(count_points(&h, &[], 1), 10);
        assert_eq!(count_points(&h, &[], 2), 45);
        let p = count_profile(&h_representation(&nk("12,23,13,14")), &[], 3);
        assert_eq!(p.counts, [1, 5, 14, 30]);
    }

    #[test]
    fn interpolation() {
        let p = CountProfile {
            dim: 3,
            counts: vec![1, 5, 14, 30],
        };
        let e = ehrhart_interpolate(&p).unwrap();
        let want = ExactPolynomial::from_ints([6, 13, 9, 2]).scale(&BigRational::new(1.into(), 6.into()));
        assert_eq!(e.poly, want);
        assert_eq!(hstar_from_counts(&p).unwrap(), ExactPolynomial::from_ints([1, 1]));
        // standard simplex of dimension 4: C(t+4, 4)
        let s = CountProfile {
            dim: 4,
            counts: (0..5).map(|t| binomial(t + 4, 4).try_into().unwrap()).collect(),
        };
        assert_eq!(hstar_from_counts(&s).unwrap(), ExactPolynomial::one());
        let e = ehrhart_interpolate(&s).unwrap();
        assert_eq!(e.eval(10), q(1001));
    }

    #[test]
    fn hypersimplex_and_half_open_pyramid() {
        let h = h_representation(&nk("12,23,34,45,51"));
        assert_eq!(
            hstar_from_counts(&count_profile(&h, &[], 4)).unwrap(),
            ExactPolynomial::from_ints([1, 5, 5])
        );
        let p = CountProfile {
            dim: 3,
            counts: vec![0, 0, 2, 8],
        };
        assert_eq!(hstar_from_counts(&p).unwrap(), ExactPolynomial::from_ints([0, 0, 2]));
    }

    #[test]
    fn products() {
        let seg = ehrhart_interpolate(&CountProfile { dim: 1, counts: vec![1, 2] }).unwrap();
        let tri = ehrhart_interpolate(&CountProfile { dim: 2, counts: vec![1, 3, 6] }).unwrap();
        let prism = ehrhart_product(&[tri.clone(), seg.clone()]);
        assert_eq!(prism.dim, 3);
        assert_eq!(prism.hstar().unwrap(), ExactPolynomial::from_ints([1, 2]));
        let square = ehrhart_product(&[seg.clone(), seg.clone()]);
        assert_eq!(square.hstar().unwrap(), ExactPolynomial::from_ints([1, 1]));
        assert_eq!(ehrhart_product(std::slice::from_ref(&tri)), tri);
        assert_eq!(ehrhart_product(&[]).hstar().unwrap(), ExactPolynomial::one());
        assert_eq!(ehrhart_from_hstar(&ExactPolynomial::from_ints([1, 2]), 3), prism);
        let e = ehrhart_oracle(&nk("12,23,34,45,51")).unwrap();
        assert_eq!(ehrhart_from_hstar(&ExactPolynomial::from_ints([1, 5, 5]), 4), e);
    }

    #[test]
    fn square_positroid() {
        let j = nk("13,23,13,14");
        assert_eq!(polytope_dimension(&j), 2);
        assert_eq!(hstar_oracle(&j).unwrap(), ExactPolynomial::from_ints([1, 1]));
    }

    #[test]
    fn vertex_face() {
        let h = h_representation(&nk("12,23,13,14"));
        let apex = [
            IntervalEquality { interval: CyclicInterval::new(1, 2, 4).unwrap(), value: 1 },
            IntervalEquality { interval: CyclicInterval::new(2, 3, 4).unwrap(), value: 1 },
        ];
        assert_eq!(lattice_points(&h, &apex, 1), vec![vec![1, 1, 0, 0]]);
        assert_eq!(face_hstar(&h, &apex, 0).unwrap(), ExactPolynomial::one());
        let empty = [IntervalEquality { interval: CyclicInterval::new(1, 3, 4).unwrap(), value: 0 }];
        assert!(face_hstar(&h, &empty, 1).is_err());
    }

    /// The DFS agrees with brute force, and at `t = 1` finds exactly the bases.
    #[test]
    fn dfs_matches_brute_force() {
        for n in 1..=5 {
            for d in all_decorated_permutations(n) {
                let j = necklace_from_decorated(&d);
                let h = h_representation(&j);
                for t in 0..=3 {
                    assert_eq!(lattice_points(&h, &[], t), brute(&h, &[], i64::from(t)), "{j} t={t}");
                }
                let ones: Vec<KSubset> = lattice_points(&h, &[], 1)
                    .iter()
                    .map(|x| {
                        let e: Vec<usize> = (1..=n).filter(|&i| x[i - 1] == 1).collect();
                        KSubset::new(n, &e).unwrap()
                    })
                    .collect();
                let b: Vec<KSubset> = bases_from_necklace(&j).iter().copied().collect();
                let mut ones = ones;
                ones.sort();
                assert_eq!(ones, b, "{j}");
            }
        }
    }

    proptest! {
        #[test]
        fn strict_counts_never_exceed_closed(idx in 0usize..1957, mask in 0u32..64, t in 0u32..4) {
            let ds = all_decorated_permutations(6);
            let j = necklace_from_decorated(&ds[idx % ds.len()]);
            let mut h = h_representation(&j);
            let closed = count_points(&h, &[], t);
            for (k, q) in h.inequalities.iter_mut().enumerate() {
                q.strict = mask >> (k % 6) & 1 == 1;
            }
            let open = count_points(&h, &[], t);
            prop_assert!(open <= closed);
            prop_assert_eq!(lattice_points(&h, &[], t), brute(&h, &[], i64::from(t)));
        }
    }
}
