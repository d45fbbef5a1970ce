//! Half-open positroid polytopes, their upper facets, and the closed `h*`
//! recovered by inclusion-exclusion over faces of the removed facets.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::combinatorics::{descent_count, CyclicInterval, KSubset};
use crate::error::{Error, Result};
use crate::linalg::affine_dimension;
use crate::oracle::{face_hstar, IntervalEquality};
use crate::poly::ExactPolynomial;
use crate::positroid::{bases_from_necklace, GrassmannNecklace, HRepresentation, Inequality, Sense};
use crate::triangulation::{enumerate_labels, simplex_facets, TriangulationLabel};

/// A facet `x_lo + ... + x_{hi-1} <= bound` (upper) or `>= bound` (lower),
/// with `1 <= lo < hi <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalFacet {
    pub lo: usize,
    pub hi: usize,
    pub bound: i64,
    pub upper: bool,
    /// Indices of the polytope vertices on the facet.
    pub vertices: Vec<usize>,
}

impl CanonicalFacet {
    pub fn inequality(&self, n: usize) -> Inequality {
        let iv = CyclicInterval::new(self.lo, self.hi, n).expect("non-wrapping block");
        Inequality::closed(iv, if self.upper { Sense::Le } else { Sense::Ge }, self.bound)
    }

    pub fn equality(&self, n: usize) -> IntervalEquality {
        IntervalEquality {
            interval: CyclicInterval::new(self.lo, self.hi, n).expect("non-wrapping block"),
            value: self.bound,
        }
    }
}

/// Vertices and facets of a connected positroid polytope.
#[derive(Debug, Clone, Serialize)]
pub struct FacetDescription {
    pub n: usize,
    pub rank: usize,
    pub vertices: Vec<KSubset>,
    pub facets: Vec<CanonicalFacet>,
}

impl FacetDescription {
    pub fn uppers(&self) -> impl Iterator<Item = &CanonicalFacet> {
        self.facets.iter().filter(|f| f.upper)
    }

    /// The polytope itself, cut out by its facets.
    pub fn closed(&self) -> HRepresentation {
        HRepresentation::new(
            self.n,
            self.rank,
            self.facets.iter().map(|f| f.inequality(self.n)).collect(),
        )
    }

    /// The polytope with its upper facets removed.
    pub fn half_open(&self) -> HRepresentation {
        let mut h = self.closed();
        for (q, f) in h.inequalities.iter_mut().zip(&self.facets) {
            q.strict = f.upper;
        }
        h
    }
}

fn require_connected(j: &GrassmannNecklace) -> Result<crate::positroid::PositroidBases> {
    let b = bases_from_necklace(j);
    if !b.is_connected() {
        return Err(Error::Disconnected {
            components: b.decompose_direct_sum().into_iter().map(|(g, _)| g).collect(),
        });
    }
    Ok(b)
}

/// Facets of `P_J`, each as a block inequality not involving `x_n`. A block
/// defines a facet when the vertices attaining its max (or min) span an
/// affine space of dimension `n - 2`.
pub fn canonical_facets(j: &GrassmannNecklace) -> Result<FacetDescription> {
    let b = require_connected(j)?;
    let n = j.n();
    let vertices: Vec<KSubset> = b.iter().copied().collect();
    let points: Vec<Vec<i64>> = vertices
        .iter()
        .map(|s| s.indicator().into_iter().map(i64::from).collect())
        .collect();
    let mut facets: Vec<CanonicalFacet> = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for lo in 1..n {
        for hi in lo + 1..=n {
            let vals: Vec<i64> = points.iter().map(|p| p[lo - 1..hi - 1].iter().sum()).collect();
            let (min, max) = (*vals.iter().min().expect("nonempty"), *vals.iter().max().expect("nonempty"));
            if min == max {
                continue;
            }
            for (bound, upper) in [(max, true), (min, false)] {
                let on: Vec<usize> = (0..points.len()).filter(|&k| vals[k] == bound).collect();
                let sub: Vec<Vec<i64>> = on.iter().map(|&k| points[k].clone()).collect();
                if affine_dimension(&sub) == Some(n - 2) && seen.insert(on.clone()) {
                    facets.push(CanonicalFacet {
                        lo,
                        hi,
                        bound,
                        upper,
                        vertices: on,
                    });
                }
            }
        }
    }
    Ok(FacetDescription {
        n,
        rank: j.rank(),
        vertices,
        facets,
    })
}

/// `sum_{w in D_J} z^{des(w_1 ... w_{n-1}) + 1}`.
pub fn hstar_half_open(j: &GrassmannNecklace) -> Result<ExactPolynomial> {
    Ok(hstar_half_open_from_labels(&enumerate_labels(j)?))
}

pub fn hstar_half_open_from_labels(labels: &[TriangulationLabel]) -> ExactPolynomial {
    labels.iter().fold(ExactPolynomial::zero(), |acc, l| {
        let d = descent_count(l.w().underline()) + 1;
        &acc + &ExactPolynomial::monomial(d, BigRational::one())
    })
}

/// The simplex of `w` with its upper facets removed.
pub fn half_open_simplex(label: &TriangulationLabel) -> Result<HRepresentation> {
    let inequalities = simplex_facets(label)?
        .into_iter()
        .map(|f| {
            let mut q = f.inequality;
            q.strict = f.is_upper();
            q
        })
        .collect();
    Ok(HRepresentation::new(label.n(), label.rank(), inequalities))
}

/// A face of `P_J` obtained by intersecting upper facets (or `P_J` itself).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceNode {
    pub vertices: Vec<usize>,
    pub dim: usize,
    /// Indices into `FacePoset::uppers` of every upper facet containing the face.
    pub generators: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FacePoset {
    pub description: FacetDescription,
    pub uppers: Vec<CanonicalFacet>,
    /// Sorted by decreasing dimension; the top `P_J` comes first.
    pub nodes: Vec<FaceNode>,
}

impl FacePoset {
    /// `a <= b` in the face order.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        let vb: BTreeSet<usize> = self.nodes[b].vertices.iter().copied().collect();
        self.nodes[a].vertices.iter().all(|v| vb.contains(v))
    }

    pub fn top(&self) -> usize {
        0
    }

    /// The face as a lattice polytope: facets of `P_J` plus equalities for
    /// every upper facet containing it.
    pub fn face_system(&self, k: usize) -> (HRepresentation, Vec<IntervalEquality>) {
        let n = self.description.n;
        let eqs = self.nodes[k]
            .generators
            .iter()
            .map(|&g| self.uppers[g].equality(n))
            .collect();
        (self.description.closed(), eqs)
    }
}

/// All nonempty intersections of upper facets, plus the polytope itself.
pub fn face_poset_of_uppers(j: &GrassmannNecklace) -> Result<FacePoset> {
    let description = canonical_facets(j)?;
    let uppers: Vec<CanonicalFacet> = description.uppers().cloned().collect();
    let mut sets: BTreeSet<Vec<usize>> = uppers.iter().map(|f| f.vertices.clone()).collect();
    loop {
        let current: Vec<Vec<usize>> = sets.iter().cloned().collect();
        let mut grew = false;
        for (a, x) in current.iter().enumerate() {
            for y in &current[a + 1..] {
                let z: Vec<usize> = x.iter().copied().filter(|v| y.binary_search(v).is_ok()).collect();
                if !z.is_empty() && sets.insert(z) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let points: Vec<Vec<i64>> = description
        .vertices
        .iter()
        .map(|s| s.indicator().into_iter().map(i64::from).collect())
        .collect();
    let node = |vs: Vec<usize>| {
        let sub: Vec<Vec<i64>> = vs.iter().map(|&k| points[k].clone()).collect();
        let generators = uppers
            .iter()
            .enumerate()
            .filter(|(_, f)| vs.iter().all(|v| f.vertices.binary_search(v).is_ok()))
            .map(|(g, _)| g)
            .collect();
        FaceNode {
            dim: affine_dimension(&sub).expect("nonempty"),
            vertices: vs,
            generators,
        }
    };
    let mut nodes: Vec<FaceNode> = sets.into_iter().map(node).collect();
    nodes.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.vertices.cmp(&b.vertices)));
    nodes.insert(0, node((0..points.len()).collect()));
    Ok(FacePoset {
        description,
        uppers,
        nodes,
    })
}

/// `mu(F, P)` for every node `F`, with `P` the top.
pub fn moebius(poset: &FacePoset) -> Vec<i64> {
    let m = poset.nodes.len();
    let mut mu = vec![0i64; m];
    mu[0] = 1;
    // nodes are sorted by decreasing dimension, so every strict upper bound
    // of a node comes before it
    for f in 1..m {
        mu[f] = -(0..f)
            .filter(|&g| poset.nodes[g].vertices.len() > poset.nodes[f].vertices.len() && poset.leq(f, g))
            .map(|g| mu[g])
            .sum::<i64>();
    }
    mu
}

/// Closed `h*` from the half-open one:
/// `h*(P~) - sum_{F < P} mu(F, P) (1 - z)^{dim P - dim F} h*(F)`.
pub fn hstar_closed_via_inclusion_exclusion(j: &GrassmannNecklace) -> Result<ExactPolynomial> {
    let poset = face_poset_of_uppers(j)?;
    let mu = moebius(&poset);
    let top_dim = poset.nodes[0].dim;
    let mut h = hstar_half_open(j)?;
    for (k, node) in poset.nodes.iter().enumerate().skip(1) {
        if mu[k] == 0 {
            continue;
        }
        let (hrep, eqs) = poset.face_system(k);
        let hf = face_hstar(&hrep, &eqs, node.dim)?;
        let term = (&ExactPolynomial::one_minus_z_pow(top_dim - node.dim) * &hf)
            .scale(&BigRational::from_integer(mu[k].into()));
        h = &h - &term;
    }
    if !h.is_nonnegative_integral() || h.coeff(0) != BigRational::one() {
        return Err(Error::internal(format!("inclusion-exclusion produced {h}")));
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{count_points, hstar_oracle};
    use crate::positroid::{all_decorated_permutations, h_representation, necklace_from_decorated};
    use crate::triangulation::{phi_inverse_point_upper, TriangulationLabel};

    fn nk(s: &str) -> GrassmannNecklace {
        s.parse().unwrap()
    }

    fn p(c: &[i64]) -> ExactPolynomial {
        ExactPolynomial::from_ints(c.iter().copied())
    }

    fn facet_strings(d: &FacetDescription, upper: bool) -> Vec<String> {
        let mut v: Vec<String> = d
            .facets
            .iter()
            .filter(|f| f.upper == upper)
            .map(|f| f.inequality(d.n).to_string())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn pyramid_facets() {
        let d = canonical_facets(&nk("12,23,13,14")).unwrap();
        assert_eq!(facet_strings(&d, true), ["x1 <= 1", "x1+x2+x3 <= 2", "x2 <= 1"]);
        assert_eq!(facet_strings(&d, false), ["x1+x2 >= 1", "x3 >= 0"]);
    }

    #[test]
    fn example_uppers() {
        let d = canonical_facets(&nk("124,234,134,145,125")).unwrap();
        assert_eq!(
            facet_strings(&d, true),
            ["x1 <= 1", "x1+x2+x3 <= 2", "x2 <= 1", "x4 <= 1"]
        );
        let d = canonical_facets(&nk("12,23,34,45,51")).unwrap();
        assert_eq!(
            facet_strings(&d, true),
            ["x1 <= 1", "x1+x2+x3+x4 <= 2", "x2 <= 1", "x3 <= 1", "x4 <= 1"]
        );
        assert!(canonical_facets(&nk("13,23,13,14")).is_err());
    }

    #[test]
    fn half_open_polynomials() {
        assert_eq!(hstar_half_open(&nk("124,234,134,145,125")).unwrap(), p(&[0, 0, 1, 4]));
        assert_eq!(hstar_half_open(&nk("12,23,13,14")).unwrap(), p(&[0, 0, 2]));
        assert_eq!(hstar_half_open(&nk("12,23,34,45,51")).unwrap(), p(&[0, 0, 10, 1]));
    }

    #[test]
    fn pyramid_poset() {
        let poset = face_poset_of_uppers(&nk("12,23,13,14")).unwrap();
        let dims: Vec<usize> = poset.nodes.iter().map(|n| n.dim).collect();
        assert_eq!(dims, [3, 2, 2, 2, 1, 1, 0]);
        let mu = moebius(&poset);
        assert_eq!(mu, [1, -1, -1, -1, 1, 1, 0]);
        let apex = &poset.nodes[6];
        assert_eq!(poset.description.vertices[apex.vertices[0]].to_string(), "12");
        assert_eq!(hstar_closed_via_inclusion_exclusion(&nk("12,23,13,14")).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn second_example_poset() {
        let j = nk("124,234,134,145,125");
        let poset = face_poset_of_uppers(&j).unwrap();
        let mu = moebius(&poset);
        let by_dim = |d: usize| -> Vec<i64> {
            let mut v: Vec<i64> = poset
                .nodes
                .iter()
                .zip(&mu)
                .filter(|(n, _)| n.dim == d)
                .map(|(_, &m)| m)
                .collect();
            v.sort();
            v
        };
        assert_eq!(by_dim(3), [-1, -1, -1, -1]);
        assert_eq!(by_dim(2), [1, 1, 1, 1, 1]);
        assert_eq!(by_dim(1), [-1, -1, 0]);
        assert_eq!(by_dim(0), [0]);
        let mut two_faces: Vec<usize> = poset
            .nodes
            .iter()
            .filter(|n| n.dim == 2)
            .map(|n| n.vertices.len())
            .collect();
        two_faces.sort();
        assert_eq!(two_faces, [3, 3, 3, 4, 4]);
        let mut facet_hstars = Vec::new();
        for (k, n) in poset.nodes.iter().enumerate() {
            if n.dim == 3 || (n.dim == 2 && n.vertices.len() == 4) {
                let (h, eqs) = poset.face_system(k);
                facet_hstars.push(face_hstar(&h, &eqs, n.dim).unwrap().to_string());
            }
        }
        facet_hstars.sort();
        assert_eq!(facet_hstars, ["1 + 2z", "1 + z", "1 + z", "1 + z", "1 + z", "1 + z"]);
        assert_eq!(hstar_closed_via_inclusion_exclusion(&j).unwrap(), p(&[1, 3, 1]));
        assert_eq!(
            hstar_closed_via_inclusion_exclusion(&nk("12,23,34,45,51")).unwrap(),
            p(&[1, 5, 5])
        );
    }

    #[test]
    fn moebius_rows_vanish() {
        for s in ["12,23,34,45,51", "124,234,134,145,125", "123,235,345,145,125"] {
            let poset = face_poset_of_uppers(&nk(s)).unwrap();
            let mu = moebius(&poset);
            for f in 1..poset.nodes.len() {
                let sum: i64 = (0..poset.nodes.len())
                    .filter(|&g| poset.leq(f, g))
                    .map(|g| mu[g])
                    .sum();
                assert_eq!(sum, 0, "{s} node {f}");
            }
        }
    }

    #[test]
    fn standard_simplex_half_open() {
        let l = TriangulationLabel::new("12345".parse().unwrap()).unwrap();
        let h = half_open_simplex(&l).unwrap();
        let strict: Vec<String> = h
            .inequalities
            .iter()
            .filter(|q| q.strict)
            .map(|q| q.to_string())
            .collect();
        assert_eq!(strict, ["x1+x2+x3+x4 < 1"]);
    }

    /// The half-open simplices partition the half-open polytope at the lattice level.
    #[test]
    fn half_open_simplices_tile() {
        for n in 2..=6 {
            for d in all_decorated_permutations(n) {
                let j = necklace_from_decorated(&d);
                if !bases_from_necklace(&j).is_connected() || n < 2 {
                    continue;
                }
                let labels = enumerate_labels(&j).unwrap();
                let whole = canonical_facets(&j).unwrap().half_open();
                let simplices: Vec<HRepresentation> =
                    labels.iter().map(|l| half_open_simplex(l).unwrap()).collect();
                for t in 1..=(n as u32 - 1).min(3) {
                    let sum: u64 = simplices.iter().map(|s| count_points(s, &[], t)).sum();
                    assert_eq!(sum, count_points(&whole, &[], t), "{j} t={t}");
                }
            }
        }
    }

    /// Canonical facets cut out the same lattice points as the necklace inequalities.
    #[test]
    fn facets_describe_the_polytope() {
        for n in 2..=6 {
            for d in all_decorated_permutations(n) {
                let j = necklace_from_decorated(&d);
                if !bases_from_necklace(&j).is_connected() {
                    continue;
                }
                let closed = canonical_facets(&j).unwrap().closed();
                let full = h_representation(&j);
                for t in 1..=2 {
                    assert_eq!(count_points(&closed, &[], t), count_points(&full, &[], t), "{j}");
                }
            }
        }
    }

    #[test]
    fn inclusion_exclusion_matches_oracle() {
        for n in 2..=5 {
            for d in all_decorated_permutations(n) {
                let j = necklace_from_decorated(&d);
                if !bases_from_necklace(&j).is_connected() {
                    continue;
                }
                assert_eq!(
                    hstar_closed_via_inclusion_exclusion(&j).unwrap(),
                    hstar_oracle(&j).unwrap(),
                    "{j}"
                );
            }
        }
    }

    /// Rational points of the simplex of `32415` lie in its half-open part
    /// exactly when `0 < y_3 < y_2 <= y_4 < y_1 <= 1`.
    #[test]
    fn half_open_region_in_cube_coordinates() {
        let l = TriangulationLabel::new("32415".parse().unwrap()).unwrap();
        let closed = crate::positroid::HRepresentation::new(
            5,
            3,
            simplex_facets(&l).unwrap().iter().map(|f| f.inequality).collect(),
        );
        let open = half_open_simplex(&l).unwrap();
        let t = 6;
        let mut seen_open = 0;
        for x in crate::oracle::lattice_points(&closed, &[], t) {
            let xr: Vec<BigRational> = x
                .iter()
                .map(|&v| BigRational::new(v.into(), i64::from(t).into()))
                .collect();
            let y = phi_inverse_point_upper(&xr).unwrap();
            let zero = BigRational::from_integer(0.into());
            let chain = zero < y[2] && y[2] < y[1] && y[1] <= y[3] && y[3] < y[0] && y[0] <= BigRational::one();
            let inside = open.contains_scaled(&x, i64::from(t));
            assert_eq!(chain, inside, "{x:?} {y:?}");
            seen_open += usize::from(inside);
        }
        assert!(seen_open > 0);
    }
}
