//! Cross-method verification: each check returns the failures it found
//! instead of panicking, so callers can tabulate and serialize them.

use serde::{Deserialize, Serialize};

use crate::combinatorics::Permutation;
use crate::error::Result;
use crate::halfopen::{
    canonical_facets, face_poset_of_uppers, half_open_simplex, hstar_closed_via_inclusion_exclusion,
    hstar_half_open_from_labels,
};
use crate::input::parse_positroid;
use crate::oracle::{count_profile, ehrhart_interpolate, face_hstar, hstar_from_counts, lattice_points};
use crate::pipeline::{coeffs, component_ehrhart};
use crate::poly::ExactPolynomial;
use crate::positroid::{
    bases_from_necklace, decorated_from_necklace, h_representation, necklace_from_bases,
    necklace_from_decorated, GrassmannNecklace,
};
use crate::tree::{
    arcs, circular_extensions, hstar_tree, necklace_of_subdivision, tau_order, validate_subdivision,
    BicoloredSubdivision,
};
use crate::triangulation::{
    affine_consistency_check, build_graph, enumerate_labels, hstar_from_covers, shelling_poset,
    simplex_facets, TriangulationLabel,
};

/// Result of one named check over some number of instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckOutcome {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            instances: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one instance; `Err` and `Ok(false)` are failures.
    pub fn record(&mut self, what: impl FnOnce() -> String, r: Result<bool>) {
        self.instances += 1;
        match r {
            Ok(true) => {}
            Ok(false) => self.failures.push(what()),
            Err(e) => self.failures.push(format!("{}: {e}", what())),
        }
    }

    pub fn merge(&mut self, other: CheckOutcome) {
        self.instances += other.instances;
        self.failures.extend(other.failures);
    }
}

/// Which invariants [`check_instance`] evaluates.
#[derive(Debug, Clone, Copy)]
pub struct InstanceChecks {
    pub every_w0: bool,
    pub lattice_partition: bool,
}

impl Default for InstanceChecks {
    fn default() -> Self {
        InstanceChecks {
            every_w0: true,
            lattice_partition: true,
        }
    }
}

pub const INSTANCE_CHECKS: [&str; 8] = [
    "method agreement",
    "half-open agreement",
    "labels = h*(1) = d! * leading",
    "shelling structure",
    "affine windows",
    "w0-independence",
    "half-open lattice partition",
    "round trips",
];

fn factorial(m: usize) -> u64 {
    (1..=m as u64).product()
}

/// Runs every per-positroid invariant on a connected positroid. The outcomes
/// are in the order of [`INSTANCE_CHECKS`]; skipped checks record nothing.
pub fn check_instance(j: &GrassmannNecklace, which: InstanceChecks) -> Vec<CheckOutcome> {
    let mut out: Vec<CheckOutcome> = INSTANCE_CHECKS.iter().map(|&s| CheckOutcome::new(s)).collect();
    let name = || j.to_string();
    round_trips(j, &mut out[7]);
    let labels = match enumerate_labels(j) {
        Ok(l) => l,
        Err(e) => {
            out[0].record(name, Err(e));
            return out;
        }
    };
    let graph = match build_graph(&labels) {
        Ok(g) => g,
        Err(e) => {
            out[0].record(name, Err(e));
            return out;
        }
    };
    let n = j.n();
    let d = n - 1;
    let closed = h_representation(j);
    let profile = count_profile(&closed, &[], d);

    let shelling = shelling_poset(&graph, None).map(|p| hstar_from_covers(&p));
    let agreement = (|| {
        let a = shelling.clone()?;
        let b = hstar_closed_via_inclusion_exclusion(j)?;
        let c = hstar_from_counts(&profile)?;
        Ok(a == b && b == c)
    })();
    out[0].record(|| format!("{} disagree", name()), agreement);

    let half = (|| {
        let a = hstar_half_open_from_labels(&labels);
        let b = hstar_from_counts(&count_profile(&canonical_facets(j)?.half_open(), &[], d))?;
        Ok(a == b)
    })();
    out[1].record(|| format!("{} half-open", name()), half);

    let sizes = (|| {
        let h = shelling.clone()?;
        let e = ehrhart_interpolate(&profile)?;
        let at_one: num_rational::BigRational = h.coeffs().iter().sum();
        let lead = e.poly.leading() * num_rational::BigRational::from_integer(factorial(d).into());
        let count = num_rational::BigRational::from_integer(labels.len().into());
        Ok(at_one == count && lead == count)
    })();
    out[2].record(|| format!("{} |D_J|={}", name(), labels.len()), sizes);

    let structure = (|| {
        let p = shelling_poset(&graph, None)?;
        let layered = graph
            .edges()
            .iter()
            .all(|e| p.dist[e.a].abs_diff(p.dist[e.b]) == 1);
        let covers: usize = p.cover.iter().sum();
        Ok(graph.is_connected() && layered && covers == graph.edges().len())
    })();
    out[3].record(|| format!("{} shelling", name()), structure);

    let affine = affine_consistency_check(&graph, None).map(|r| r.is_consistent());
    out[4].record(|| format!("{} affine", name()), affine);

    if which.every_w0 {
        let w0 = (|| {
            let base = shelling.clone()?;
            for l in graph.labels() {
                if hstar_from_covers(&shelling_poset(&graph, Some(l.w()))?) != base {
                    return Ok(false);
                }
            }
            Ok(true)
        })();
        out[5].record(|| format!("{} w0", name()), w0);
    }
    if which.lattice_partition {
        let part = lattice_partition(j, &labels);
        out[6].record(|| format!("{} lattice partition", name()), part);
    }
    out
}

/// Every lattice point of small dilates of the half-open polytope lies in
/// exactly one half-open simplex, and nothing else is covered.
fn lattice_partition(j: &GrassmannNecklace, labels: &[TriangulationLabel]) -> Result<bool> {
    let whole = canonical_facets(j)?.half_open();
    let simplices: Vec<_> = labels.iter().map(half_open_simplex).collect::<Result<_>>()?;
    for t in 1..=(j.n() as u32 - 1).min(2) {
        let points = lattice_points(&whole, &[], t);
        for x in &points {
            let hits = simplices.iter().filter(|s| s.contains_scaled(x, t as i64)).count();
            if hits != 1 {
                return Ok(false);
            }
        }
        let covered: usize = simplices.iter().map(|s| lattice_points(s, &[], t).len()).sum();
        if covered != points.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn round_trips(j: &GrassmannNecklace, out: &mut CheckOutcome) {
    let r = (|| {
        let via_dec = necklace_from_decorated(&decorated_from_necklace(j));
        let via_bases = necklace_from_bases(&bases_from_necklace(j))?;
        Ok(&via_dec == j && &via_bases == j)
    })();
    out.record(|| format!("{j} round trip"), r);
}

/// `Ext(C_tau) = D_J` and `h*` agreement with the necklace pipeline.
pub fn check_subdivision(tau: &BicoloredSubdivision) -> Result<bool> {
    let j = necklace_of_subdivision(tau)?;
    let labels = enumerate_labels(&j)?;
    let mut want: Vec<Permutation> = labels.iter().map(|l| l.w().clone()).collect();
    want.sort();
    let mut ext = circular_extensions(&tau_order(tau), tau.n());
    ext.sort();
    let necklace_h = hstar_from_covers(&shelling_poset(&build_graph(&labels)?, None)?);
    Ok(ext == want && hstar_tree(tau, None)? == necklace_h)
}

/// A stored expectation: a positroid and its closed `h*`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Fixture {
    pub necklace: String,
    pub hstar: Vec<i64>,
}

/// Recomputes every fixture's `h*` by lattice-point counting.
pub fn check_fixtures(fixtures: &[Fixture]) -> CheckOutcome {
    let mut out = CheckOutcome::new("fixtures");
    for f in fixtures {
        let r = (|| {
            let (j, _) = parse_positroid(&f.necklace)?;
            let d = crate::oracle::polytope_dimension(&j);
            let got = coeffs(&hstar_from_counts(&count_profile(&h_representation(&j), &[], d))?)?;
            Ok(got == f.hstar)
        })();
        out.record(|| format!("{} expected {:?}", f.necklace, f.hstar), r);
    }
    out
}

fn nk(s: &str) -> GrassmannNecklace {
    s.parse().expect("built-in necklace")
}

fn poly(c: &[i64]) -> ExactPolynomial {
    ExactPolynomial::from_ints(c.iter().copied())
}

fn sorted_strings<T: ToString>(it: impl IntoIterator<Item = T>) -> Vec<String> {
    let mut v: Vec<String> = it.into_iter().map(|x| x.to_string()).collect();
    v.sort();
    v
}

fn strs(v: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    v.sort();
    v
}

fn two_cell() -> BicoloredSubdivision {
    use crate::positroid::Color::*;
    validate_subdivision(4, vec![(Black, vec![1, 2, 3]), (White, vec![1, 3, 4])]).expect("valid")
}

fn three_cell() -> BicoloredSubdivision {
    use crate::positroid::Color::*;
    validate_subdivision(5, vec![(Black, vec![1, 2, 3]), (White, vec![1, 3, 4]), (Black, vec![1, 4, 5])])
        .expect("valid")
}

pub const SHELLING_35: &str = "123,235,345,145,125";
pub const HYPERSIMPLEX_25: &str = "12,23,34,45,51";
pub const EX_35: &str = "124,234,134,145,125";
pub const PYRAMID: &str = "12,23,13,14";
pub const SQUARE: &str = "13,23,13,14";

/// The fixed reference values: golden polynomials, label sets, circuits,
/// windows and the tree examples.
pub fn paper_examples() -> Vec<CheckOutcome> {
    let mut golden = CheckOutcome::new("golden h*");
    let cases: [(&str, &str, Result<ExactPolynomial>, &[i64]); 9] = [
        ("shelling", SHELLING_35, hs(SHELLING_35), &[1, 4, 3]),
        ("shelling", HYPERSIMPLEX_25, hs(HYPERSIMPLEX_25), &[1, 5, 5]),
        ("shelling", EX_35, hs(EX_35), &[1, 3, 1]),
        ("shelling", PYRAMID, hs(PYRAMID), &[1, 1]),
        ("half-open", PYRAMID, ho(PYRAMID), &[0, 0, 2]),
        ("half-open", EX_35, ho(EX_35), &[0, 0, 1, 4]),
        ("inclusion-exclusion", PYRAMID, hstar_closed_via_inclusion_exclusion(&nk(PYRAMID)), &[1, 1]),
        ("inclusion-exclusion", EX_35, hstar_closed_via_inclusion_exclusion(&nk(EX_35)), &[1, 3, 1]),
        ("oracle", EX_35, crate::oracle::hstar_oracle(&nk(EX_35)), &[1, 3, 1]),
    ];
    for (m, s, got, want) in cases {
        golden.record(|| format!("{m} {s} != {want:?}"), got.map(|g| g == poly(want)));
    }
    let faces = (|| {
        let poset = face_poset_of_uppers(&nk(EX_35))?;
        let mut hs = Vec::new();
        for (k, node) in poset.nodes.iter().enumerate() {
            if node.dim == 3 || (node.dim == 2 && node.vertices.len() == 4) {
                let (h, eqs) = poset.face_system(k);
                hs.push(face_hstar(&h, &eqs, node.dim)?.to_string());
            }
        }
        hs.sort();
        Ok(hs == ["1 + 2z", "1 + z", "1 + z", "1 + z", "1 + z", "1 + z"])
    })();
    golden.record(|| "prism and square faces".into(), faces);

    let mut labels = CheckOutcome::new("label sets and graphs");
    let names = |s: &str| enumerate_labels(&nk(s)).map(|ls| sorted_strings(ls.iter()));
    labels.record(|| "pyramid labels".into(), names(PYRAMID).map(|v| v == strs(&["1324", "2134"])));
    labels.record(
        || "rank-3 labels".into(),
        names(EX_35).map(|v| v == strs(&["34215", "42135", "24135", "32415", "41325"])),
    );
    let edges = |s: &str| -> Result<Vec<String>> {
        let g = build_graph(&enumerate_labels(&nk(s))?)?;
        Ok(sorted_strings(g.edges().iter().map(|e| {
            let (a, b) = (g.labels()[e.a].to_string(), g.labels()[e.b].to_string());
            if a < b { format!("{a}-{b}") } else { format!("{b}-{a}") }
        })))
    };
    labels.record(
        || "rank-3 graph edges".into(),
        edges(EX_35).map(|v| {
            v == strs(&["24135-42135", "24135-32415", "24135-41325", "34215-42135", "32415-34215"])
        }),
    );
    labels.record(
        || "hypersimplex graph size".into(),
        names(HYPERSIMPLEX_25).and_then(|v| Ok(v.len() == 11 && edges(HYPERSIMPLEX_25)?.len() == 15)),
    );

    let mut circuits = CheckOutcome::new("circuits and facets");
    let l = TriangulationLabel::new("32415".parse().expect("perm"));
    circuits.record(
        || "circuit of 32415".into(),
        l.clone().map(|l| {
            let c: Vec<String> = l.circuit().iter().map(|s| s.to_string()).collect();
            let v: Vec<String> = l
                .simplex_vertices()
                .iter()
                .map(|x| x.iter().map(|d| d.to_string()).collect())
                .collect();
            c == ["135", "235", "245", "124", "125"] && sorted_strings(v) == strs(&["11001", "10101", "01101", "01011", "11010"])
        }),
    );
    circuits.record(
        || "facets of 32415".into(),
        l.and_then(|l| simplex_facets(&l)).map(|f| {
            sorted_strings(f.iter().map(|f| f.inequality))
                == strs(&["x1+x2+x3+x4 >= 2", "x3+x4 <= 1", "x2 <= 1", "x2+x3 >= 1", "x1+x2+x3 <= 2"])
        }),
    );

    let mut windows = CheckOutcome::new("affine windows");
    let want = [
        ("41235", "[0,3,2,4,6]"),
        ("12435", "[0,2,4,3,6]"),
        ("13245", "[2,1,4,3,5]"),
        ("21345", "[2,1,3,5,4]"),
        ("23415", "[1,3,2,5,4]"),
        ("14235", "[0,2,3,4,6]"),
        ("31245", "[1,2,4,3,5]"),
        ("13425", "[2,1,3,4,5]"),
        ("23145", "[1,2,3,5,4]"),
        ("34125", "[1,3,2,4,5]"),
        ("31425", "[1,2,3,4,5]"),
    ];
    let r = (|| {
        let g = build_graph(&enumerate_labels(&nk(HYPERSIMPLEX_25))?)?;
        let w0: Permutation = "31425".parse()?;
        let rep = affine_consistency_check(&g, Some(&w0))?;
        Ok(rep.is_consistent()
            && want.iter().all(|(w, win)| {
                g.index_of(&w.parse().expect("perm"))
                    .is_some_and(|k| rep.windows[k].to_string() == *win)
            }))
    })();
    windows.record(|| "hypersimplex windows from 31425".into(), r);

    let mut tree = CheckOutcome::new("tree positroids");
    let (t9, t10) = (two_cell(), three_cell());
    tree.record(|| "types".into(), Ok(t9.k() == 1 && t10.k() == 2));
    tree.record(
        || "chains".into(),
        Ok(tau_order(&t9).chains == [vec![3, 2, 1], vec![1, 3, 4]]
            && tau_order(&t10).chains == [vec![3, 2, 1], vec![1, 3, 4], vec![5, 4, 1]]),
    );
    let a = arcs(&t9);
    let arc = |i: usize, j: usize| a.iter().find(|x| x.from == i && x.to == j).copied();
    tree.record(
        || "two-cell arcs".into(),
        Ok(arc(1, 3).is_some_and(|x| x.facet_defining && x.area == Some(1))
            && arc(2, 4).is_some_and(|x| !x.facet_defining)),
    );
    tree.record(
        || "two-cell extensions".into(),
        Ok(sorted_strings(circular_extensions(&tau_order(&t9), 4)) == strs(&["2134", "1324"])),
    );
    tree.record(|| "two-cell h*".into(), hstar_tree(&t9, None).map(|h| h == poly(&[1, 1])));
    tree.record(|| "three-cell h*".into(), hstar_tree(&t10, None).map(|h| h == poly(&[1, 3, 1])));
    tree.record(|| "two-cell agreement".into(), check_subdivision(&t9));
    tree.record(|| "three-cell agreement".into(), check_subdivision(&t10));

    let mut split = CheckOutcome::new("disconnected square");
    let r = (|| {
        let j = nk(SQUARE);
        let comps = bases_from_necklace(&j).decompose_direct_sum();
        let product = crate::oracle::ehrhart_product(&component_ehrhart(&j)?).hstar()?;
        let direct = hstar_from_counts(&count_profile(&h_representation(&j), &[], 2))?;
        Ok(comps.len() == 2 && product == poly(&[1, 1]) && direct == product)
    })();
    split.record(|| "square via product and direct count".into(), r);

    vec![golden, labels, circuits, windows, tree, split]
}

fn hs(s: &str) -> Result<ExactPolynomial> {
    let g = build_graph(&enumerate_labels(&nk(s))?)?;
    Ok(hstar_from_covers(&shelling_poset(&g, None)?))
}

fn ho(s: &str) -> Result<ExactPolynomial> {
    Ok(hstar_half_open_from_labels(&enumerate_labels(&nk(s))?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_examples_pass() {
        for c in paper_examples() {
            assert!(c.passed(), "{}: {:?}", c.name, c.failures);
        }
    }

    #[test]
    fn instance_checks_pass() {
        for s in [SHELLING_35, HYPERSIMPLEX_25, EX_35, PYRAMID, "1,2,3"] {
            for c in check_instance(&nk(s), InstanceChecks::default()) {
                assert!(c.passed(), "{s} {}: {:?}", c.name, c.failures);
            }
        }
    }

    #[test]
    fn corrupted_fixture_fails() {
        let good = Fixture { necklace: PYRAMID.into(), hstar: vec![1, 1] };
        let bad = Fixture { necklace: HYPERSIMPLEX_25.into(), hstar: vec![1, 5, 4] };
        assert!(check_fixtures(std::slice::from_ref(&good)).passed());
        let out = check_fixtures(&[good, bad]);
        assert_eq!(out.failures.len(), 1);
        assert!(out.failures[0].contains("12,23,34,45,51"));
    }
}
