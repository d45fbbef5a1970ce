use itertools::Itertools;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::combinatorics::{
    circuit_subsets, cyclic_left_descent_set, gale_leq, restrict, CyclicInterval, KSubset,
    Permutation,
};
use crate::error::{Error, Result};
use crate::linalg::{determinant, inverse, q, Matrix};
use crate::positroid::{bases_from_necklace, GrassmannNecklace, Inequality, Sense};

/// A permutation `w` with `w_n = n` together with its circuit `I_{w_1}, ..., I_{w_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TriangulationLabel {
    w: Permutation,
    #[serde(skip)]
    circuit: Vec<KSubset>,
}

impl TriangulationLabel {
    pub fn new(w: Permutation) -> Result<Self> {
        let circuit = circuit_subsets(&w)?;
        Ok(TriangulationLabel { w, circuit })
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    /// Circuit subsets in circuit order (`circuit()[p]` is `I_{w_{p+1}}`).
    pub fn circuit(&self) -> &[KSubset] {
        &self.circuit
    }

    /// Common size of the circuit subsets, `cdes_L(w)`.
    pub fn rank(&self) -> usize {
        self.circuit[0].len()
    }

    /// Indicator vectors of the circuit, in circuit order.
    pub fn simplex_vertices(&self) -> Vec<Vec<u8>> {
        self.circuit.iter().map(KSubset::indicator).collect()
    }

    fn projected_vertices(&self) -> Vec<Vec<i64>> {
        self.circuit
            .iter()
            .map(|s| {
                let mut v: Vec<i64> = s.indicator().into_iter().map(i64::from).collect();
                v.pop();
                v
            })
            .collect()
    }

    /// Whether the edge vectors from the first vertex span the lattice
    /// `{x in Z^n : sum x = r}` (determinant `±1` after dropping `x_n`).
    pub fn is_unimodular(&self) -> bool {
        let pv = self.projected_vertices();
        let m: Matrix = pv[1..]
            .iter()
            .map(|p| p.iter().zip(&pv[0]).map(|(a, b)| q(a - b)).collect())
            .collect();
        if m.is_empty() {
            return true;
        }
        determinant(&m).abs().is_one()
    }
}

impl std::fmt::Display for TriangulationLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.w)
    }
}

/// A facet of a projected `(w)`-simplex, with the circuit position (0-based)
/// of the vertex it omits. The inequality is in non-wrapping canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplexFacet {
    pub opposite: usize,
    pub inequality: Inequality,
}

impl SimplexFacet {
    /// Upper facets read `x_[i,j] <= c` in canonical form.
    pub fn is_upper(&self) -> bool {
        self.inequality.sense == Sense::Le
    }
}

/// Every `w` in `S_n` with `w_n = n` in lexicographic order.
pub(crate) fn cycles_ending_at_n(n: usize) -> impl Iterator<Item = Permutation> {
    (1..n).permutations(n - 1).map(move |mut v| {
        v.push(n);
        Permutation::new(v).expect("permutation")
    })
}

/// Converts a functional `c·x + d >= 0` on `x_1..x_{n-1}` into an
/// interval-sum inequality, if it has that shape.
pub(crate) fn interval_form(c: &[i64], d: i64, n: usize) -> Option<Inequality> {
    let support: Vec<usize> = (0..c.len()).filter(|&k| c[k] != 0).collect();
    let (&lo, &hi) = (support.first()?, support.last()?);
    let s = c[lo];
    if s.abs() != 1 || hi - lo + 1 != support.len() || support.iter().any(|&k| c[k] != s) {
        return None;
    }
    let iv = CyclicInterval::new(lo + 1, hi + 2, n).ok()?;
    Some(if s == 1 {
        Inequality::closed(iv, Sense::Ge, -d)
    } else {
        Inequality::closed(iv, Sense::Le, d)
    })
}

/// Facets of the projected simplex `p(Δ_(w))`, one per omitted vertex,
/// computed from exact barycentric coordinates.
pub fn simplex_facets(label: &TriangulationLabel) -> Result<Vec<SimplexFacet>> {
    let n = label.n();
    let pv = label.projected_vertices();
    let m: Matrix = pv
        .iter()
        .map(|p| p.iter().map(|&v| q(v)).chain([q(1)]).collect())
        .collect();
    let inv = inverse(&m)
        .ok_or_else(|| Error::internal(format!("simplex of {} is degenerate", label.w)))?;
    (0..n)
        .map(|a| {
            let col: Vec<i64> = (0..n)
                .map(|k| {
                    let v = &inv[k][a];
                    if !v.is_integer() {
                        return Err(Error::internal(format!(
                            "non-integral facet functional for {}",
                            label.w
                        )));
                    }
                    Ok(i64::try_from(v.to_integer()).expect("small"))
                })
                .collect::<Result<_>>()?;
            let inequality = interval_form(&col[..n - 1], col[n - 1], n).ok_or_else(|| {
                Error::internal(format!(
                    "facet {a} of {} is not an interval inequality: {col:?}",
                    label.w
                ))
            })?;
            Ok(SimplexFacet {
                opposite: a,
                inequality,
            })
        })
        .collect()
}

/// The triangulation label set of a connected positroid: all `w` with
/// `w_n = n`, `cdes_L(w) = r`, and every circuit subset `I` satisfying
/// `J_j <=_j I` for all `j`. Ordered lexicographically.
pub fn enumerate_labels(j: &GrassmannNecklace) -> Result<Vec<TriangulationLabel>> {
    let n = j.n();
    if n < 2 {
        return Err(Error::invalid(
            "a positroid on one element is a point; there is nothing to triangulate",
        ));
    }
    let bases = bases_from_necklace(j);
    if !bases.is_connected() {
        return Err(Error::Disconnected {
            components: bases
                .decompose_direct_sum()
                .into_iter()
                .map(|(g, _)| g)
                .collect(),
        });
    }
    let r = j.rank();
    let mut out = Vec::new();
    for w in cycles_ending_at_n(n) {
        let label = TriangulationLabel::new(w)?;
        if label.rank() != r {
            continue;
        }
        let ok = label.circuit.iter().all(|s| {
            (1..=n).all(|i| gale_leq(j.get(i), s, i).expect("sizes agree"))
        });
        if ok {
            out.push(label);
        }
    }
    Ok(out)
}

/// The same label set via restricted descents: `cdes_L(w) = r` and
/// `cdes_L(w|_[i, a_j^i]) <= j - 1` for all `i`, `j`.
pub fn labels_by_restricted_descents(j: &GrassmannNecklace) -> Vec<Permutation> {
    let n = j.n();
    let r = j.rank();
    let bounds: Vec<(CyclicInterval, usize)> = (1..=n)
        .flat_map(|i| {
            j.sorted_entry(i)
                .into_iter()
                .enumerate()
                .map(move |(idx, a)| (CyclicInterval::new(i, a, n).expect("in range"), idx))
        })
        .collect();
    cycles_ending_at_n(n)
        .filter(|w| {
            let ground: Vec<usize> = (1..=n).collect();
            cyclic_left_descent_set(w.word(), &ground).expect("perm").len() == r
                && bounds.iter().all(|(iv, bound)| {
                    let (word, ground) = restrict(w, iv);
                    cyclic_left_descent_set(&word, &ground).expect("perm").len() <= *bound
                })
        })
        .collect()
}

/// Upper and lower interval inequalities of `p(Δ_(w))` read off the adjacent
/// letters `w_i, w_{i+1}` for `i` in `1..=n-2`:
/// `x_[w_i,w_{i+1}] >= cdes(w|_[w_i,w_{i+1}]) - 1` when `w_i < w_{i+1}` and
/// `x_[w_{i+1},w_i] <= cdes(w|_[w_{i+1},w_i])` otherwise.
pub fn adjacent_letter_facets(w: &Permutation) -> Vec<Inequality> {
    let n = w.n();
    let cdes = |iv: &CyclicInterval| {
        let (word, ground) = restrict(w, iv);
        cyclic_left_descent_set(&word, &ground).expect("perm").len() as i64
    };
    (1..=n.saturating_sub(2))
        .map(|i| {
            let (a, b) = (w.at(i), w.at(i + 1));
            if a < b {
                let iv = CyclicInterval::new(a, b, n).expect("in range");
                Inequality::closed(iv, Sense::Ge, cdes(&iv) - 1)
            } else {
                let iv = CyclicInterval::new(b, a, n).expect("in range");
                Inequality::closed(iv, Sense::Le, cdes(&iv))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::positroid::{all_decorated_permutations, necklace_from_decorated};

    fn nk(s: &str) -> GrassmannNecklace {
        s.parse().unwrap()
    }

    fn label(s: &str) -> TriangulationLabel {
        TriangulationLabel::new(s.parse().unwrap()).unwrap()
    }

    fn names(ls: &[TriangulationLabel]) -> Vec<String> {
        ls.iter().map(|l| l.to_string()).collect()
    }

    #[test]
    fn known_label_sets() {
        assert_eq!(names(&enumerate_labels(&nk("12,23,13,14")).unwrap()), ["1324", "2134"]);
        let mut d = names(&enumerate_labels(&nk("124,234,134,145,125")).unwrap());
        d.sort();
        let mut want = vec!["34215", "42135", "24135", "32415", "41325"];
        want.sort();
        assert_eq!(d, want);
        let d = names(&enumerate_labels(&nk("12,23,34,45,51")).unwrap());
        assert_eq!(d.len(), 11);
        assert!(d.contains(&"31425".to_string()));
    }

    #[test]
    fn disconnected_is_rejected() {
        let e = enumerate_labels(&nk("13,23,13,14")).unwrap_err();
        assert_eq!(
            e,
            Error::Disconnected {
                components: vec![vec![1, 2], vec![3, 4]]
            }
        );
    }

    #[test]
    fn vertices() {
        let v: Vec<String> = label("32415")
            .simplex_vertices()
            .iter()
            .map(|x| x.iter().map(|d| d.to_string()).collect())
            .collect();
        assert_eq!(v, ["10101", "01101", "01011", "11010", "11001"]);
        let v: Vec<String> = label("2314")
            .simplex_vertices()
            .iter()
            .map(|x| x.iter().map(|d| d.to_string()).collect())
            .collect();
        assert_eq!(v, ["0101", "0011", "1010", "1001"]);
        let id = label("12345").simplex_vertices();
        for (k, v) in id.iter().enumerate() {
            assert_eq!(v.iter().filter(|&&x| x == 1).count(), 1);
            assert_eq!(v[k], 1);
        }
    }

    fn facet_strings(l: &TriangulationLabel) -> Vec<String> {
        let mut s: Vec<String> = simplex_facets(l)
            .unwrap()
            .iter()
            .map(|f| f.inequality.to_string())
            .collect();
        s.sort();
        s
    }

    #[test]
    fn facets_of_32415() {
        let mut want = vec![
            "x1+x2+x3+x4 >= 2",
            "x3+x4 <= 1",
            "x2 <= 1",
            "x2+x3 >= 1",
            "x1+x2+x3 <= 2",
        ];
        want.sort();
        assert_eq!(facet_strings(&label("32415")), want);
    }

    #[test]
    fn facets_of_standard_simplex() {
        let mut want = vec!["x1 >= 0", "x2 >= 0", "x3 >= 0", "x4 >= 0", "x1+x2+x3+x4 <= 1"];
        want.sort();
        assert_eq!(facet_strings(&label("12345")), want);
    }

    #[test]
    fn facets_of_2134_cut_out_its_hull() {
        let l = label("2134");
        let facets = simplex_facets(&l).unwrap();
        assert_eq!(facets.len(), 4);
        let h = crate::positroid::HRepresentation::new(
            4,
            2,
            facets.iter().map(|f| f.inequality).collect(),
        );
        let pts: Vec<String> = h.zero_one_points().iter().map(|s| s.to_string()).collect();
        let mut want: Vec<String> = l.circuit().iter().map(|s| s.to_string()).collect();
        want.sort();
        assert_eq!(pts, want);
    }

    #[test]
    fn adjacent_letter_facets_match_geometry() {
        for w in cycles_ending_at_n(6) {
            let l = TriangulationLabel::new(w.clone()).unwrap();
            let geo: Vec<Inequality> = simplex_facets(&l)
                .unwrap()
                .into_iter()
                .map(|f| f.inequality)
                .collect();
            for q in adjacent_letter_facets(&w) {
                let c = q.canonical(l.rank() as i64).unwrap();
                assert!(geo.contains(&c), "{w}: {c} not among {geo:?}");
            }
        }
    }

    /// Over the simplex, `cdes(w|_[i,j]) - 1 <= x_[i,j] <= cdes(w|_[i,j])`.
    #[test]
    fn sandwich_property() {
        for n in 2..=6 {
            for w in cycles_ending_at_n(n) {
                let l = TriangulationLabel::new(w.clone()).unwrap();
                for i in 1..=n {
                    for jj in 1..=n {
                        let iv = CyclicInterval::new(i, jj, n).unwrap();
                        let (word, ground) = restrict(&w, &iv);
                        let c = cyclic_left_descent_set(&word, &ground).unwrap().len() as i64;
                        for v in l.simplex_vertices() {
                            let x: Vec<i64> = v.into_iter().map(i64::from).collect();
                            let s = iv.eval(&x);
                            assert!(c - 1 <= s && s <= c, "{w} {iv}");
                        }
                    }
                }
            }
        }
    }

    /// Gale filter and restricted-descent filter agree; all simplices are
    /// unimodular and all their circuit subsets are bases.
    #[test]
    fn label_characterizations_agree() {
        for n in 2..=6 {
            for d in all_decorated_permutations(n) {
                let j = necklace_from_decorated(&d);
                let b = bases_from_necklace(&j);
                if !b.is_connected() {
                    continue;
                }
                let labels = enumerate_labels(&j).unwrap();
                let ws: Vec<Permutation> = labels.iter().map(|l| l.w().clone()).collect();
                assert_eq!(ws, labels_by_restricted_descents(&j), "{j}");
                for l in &labels {
                    assert!(l.is_unimodular());
                    assert!(l.circuit().iter().all(|s| b.contains(s)));
                }
            }
        }
    }

    #[test]
    fn simplex_contains_only_its_vertices() {
        for w in cycles_ending_at_n(6) {
            let l = TriangulationLabel::new(w).unwrap();
            let h = crate::positroid::HRepresentation::new(
                6,
                l.rank(),
                simplex_facets(&l).unwrap().iter().map(|f| f.inequality).collect(),
            );
            let mut want = l.circuit().to_vec();
            want.sort();
            assert_eq!(h.zero_one_points(), want);
        }
    }
}
