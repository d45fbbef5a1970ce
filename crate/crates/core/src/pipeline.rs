//! Method dispatch and serializable reports shared by the command-line tool
//! and the browser demo.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::halfopen::{canonical_facets, hstar_closed_via_inclusion_exclusion};
use crate::oracle::{
    count_points, count_profile, ehrhart_from_hstar, ehrhart_oracle, ehrhart_product,
    hstar_from_counts, polytope_dimension, EhrhartPolynomial,
};
use crate::input::InputKind;
use crate::poly::ExactPolynomial;
use crate::positroid::{
    bases_from_necklace, decorated_from_necklace, h_representation, necklace_from_bases,
    GrassmannNecklace, SifReport,
};
use crate::tree::{
    arcs, circular_extensions, hstar_tree, necklace_of_subdivision, tau_order, ArcInfo,
    BicoloredSubdivision,
};
use crate::triangulation::{
    affine_consistency_check, build_graph, enumerate_labels, hstar_from_covers, shelling_poset,
    TriangulationLabel,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Shelling,
    Descents,
    InclusionExclusion,
    Oracle,
    All,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Shelling => "shelling",
            Method::Descents => "descents",
            Method::InclusionExclusion => "inclusion-exclusion",
            Method::Oracle => "oracle",
            Method::All => "all",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Method::Shelling,
            Method::Descents,
            Method::InclusionExclusion,
            Method::Oracle,
            Method::All,
        ]
        .into_iter()
        .find(|m| m.name() == s)
        .ok_or_else(|| Error::invalid(format!("unknown method {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

/// The three descriptions of a positroid plus connectivity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PositroidSummary {
    pub n: usize,
    pub rank: usize,
    pub necklace: String,
    pub decorated: String,
    pub bases: Vec<String>,
    pub connected: bool,
    pub components: Vec<Vec<usize>>,
    pub dimension: usize,
}

pub fn summarize(j: &GrassmannNecklace) -> PositroidSummary {
    let b = bases_from_necklace(j);
    let components: Vec<Vec<usize>> = b.decompose_direct_sum().into_iter().map(|(g, _)| g).collect();
    PositroidSummary {
        n: j.n(),
        rank: j.rank(),
        necklace: j.to_string(),
        decorated: decorated_from_necklace(j).to_string(),
        bases: b.iter().map(|s| s.to_string()).collect(),
        connected: components.len() == 1,
        dimension: j.n() - components.len(),
        components,
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConvertReport {
    pub input_kind: InputKind,
    pub positroid: PositroidSummary,
    pub sif: SifReport,
}

pub fn convert_report(j: &GrassmannNecklace, input_kind: InputKind) -> ConvertReport {
    ConvertReport {
        input_kind,
        sif: decorated_from_necklace(j).sif_report(),
        positroid: summarize(j),
    }
}

#[derive(Debug, Clone, Default)]
pub struct HstarOptions {
    pub w0: Option<Permutation>,
    pub half_open: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HstarReport {
    pub positroid: PositroidSummary,
    pub method: Method,
    pub half_open: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w0: Option<String>,
    /// `|D_J|` when the triangulation was built.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<usize>,
    /// Ascending coefficient lists keyed by method.
    pub hstar: BTreeMap<String, Vec<i64>>,
    /// Ehrhart polynomial coefficients (ascending, exact rationals as strings).
    pub ehrhart: Vec<String>,
    pub verdict: Verdict,
}

pub(crate) fn coeffs(p: &ExactPolynomial) -> Result<Vec<i64>> {
    let c = p
        .to_i64_coeffs()
        .ok_or_else(|| Error::internal(format!("{p} is not integral")))?;
    Ok(if c.is_empty() { vec![0] } else { c })
}

fn methods_for(method: Method, connected: bool, half_open: bool) -> Result<Vec<Method>> {
    use Method::*;
    let wanted = match method {
        All if !connected => return Ok(vec![Oracle]),
        All if half_open => vec![Descents, Oracle],
        All => vec![Shelling, InclusionExclusion, Oracle],
        m => vec![m],
    };
    for &m in &wanted {
        match (m, half_open) {
            (Descents, false) => {
                return Err(Error::invalid(
                    "the descent formula gives the half-open polynomial; add --half-open or use inclusion-exclusion",
                ))
            }
            (Shelling | InclusionExclusion, true) => {
                return Err(Error::invalid(format!("{m} computes the closed polynomial; drop --half-open")))
            }
            _ => {}
        }
    }
    Ok(wanted)
}

fn disconnected(j: &GrassmannNecklace) -> Error {
    Error::Disconnected {
        components: bases_from_necklace(j)
            .decompose_direct_sum()
            .into_iter()
            .map(|(g, _)| g)
            .collect(),
    }
}

/// Ehrhart polynomial of each connected component, each counted on its own.
pub fn component_ehrhart(j: &GrassmannNecklace) -> Result<Vec<EhrhartPolynomial>> {
    let b = bases_from_necklace(j);
    b.decompose_direct_sum()
        .into_iter()
        .map(|(g, comp)| {
            let local = comp.relabel_to(&g);
            let jc = necklace_from_bases(&local)?;
            ehrhart_oracle(&jc)
        })
        .collect()
}

/// `h*` by the requested method(s); disconnected positroids go through the
/// product of component Ehrhart polynomials.
pub fn compute_hstar(j: &GrassmannNecklace, method: Method, opts: &HstarOptions) -> Result<HstarReport> {
    let positroid = summarize(j);
    let connected = positroid.connected;
    let mut hstar = BTreeMap::new();
    let mut labels = None;
    let mut w0 = None;
    if !connected && (opts.half_open || !matches!(method, Method::Oracle | Method::All)) {
        return Err(disconnected(j));
    }
    for m in methods_for(method, connected, opts.half_open)? {
        let p = match m {
            Method::Shelling => {
                let ls = enumerate_labels(j)?;
                labels = Some(ls.len());
                let g = build_graph(&ls)?;
                let poset = shelling_poset(&g, opts.w0.as_ref())?;
                w0 = Some(g.labels()[poset.base].to_string());
                hstar_from_covers(&poset)
            }
            Method::Descents => {
                let ls = enumerate_labels(j)?;
                labels = Some(ls.len());
                crate::halfopen::hstar_half_open_from_labels(&ls)
            }
            Method::InclusionExclusion => hstar_closed_via_inclusion_exclusion(j)?,
            Method::Oracle if !connected => {
                let direct = hstar_from_counts(&count_profile(&h_representation(j), &[], positroid.dimension))?;
                hstar.insert("direct".to_string(), coeffs(&direct)?);
                ehrhart_product(&component_ehrhart(j)?).hstar()?
            }
            Method::Oracle if opts.half_open => {
                let h = canonical_facets(j)?.half_open();
                hstar_from_counts(&count_profile(&h, &[], j.n() - 1))?
            }
            Method::Oracle => hstar_from_counts(&count_profile(&h_representation(j), &[], j.n() - 1))?,
            Method::All => unreachable!("expanded above"),
        };
        hstar.insert(m.name().to_string(), coeffs(&p)?);
    }
    let first = hstar.values().next().cloned().unwrap_or_default();
    let verdict = if hstar.values().all(|v| *v == first) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let h = ExactPolynomial::from_ints(first.iter().copied());
    let ehrhart = ehrhart_from_hstar(&h, positroid.dimension)
        .poly
        .coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect();
    Ok(HstarReport {
        positroid,
        method,
        half_open: opts.half_open,
        w0,
        labels,
        hstar,
        ehrhart,
        verdict,
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EhrhartReport {
    pub positroid: PositroidSummary,
    pub dimension: usize,
    /// `E(0), ..., E(tmax)` by direct counting.
    pub counts: Vec<u64>,
    pub ehrhart: Vec<String>,
    pub hstar: Vec<i64>,
    /// Ehrhart polynomials of the components when the positroid is disconnected.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub component_ehrhart: Vec<Vec<String>>,
}

pub fn ehrhart_report(j: &GrassmannNecklace, tmax: u32) -> Result<EhrhartReport> {
    let positroid = summarize(j);
    let d = positroid.dimension;
    let h = h_representation(j);
    let counts: Vec<u64> = (0..=tmax.max(d as u32)).map(|t| count_points(&h, &[], t)).collect();
    let hs = hstar_from_counts(&count_profile(&h, &[], d))?;
    let e = ehrhart_from_hstar(&hs, d);
    for (t, &c) in counts.iter().enumerate() {
        if e.eval(t as i64) != num_rational::BigRational::from_integer(c.into()) {
            return Err(Error::internal(format!("E({t}) disagrees with the interpolated polynomial")));
        }
    }
    let strings = |p: &EhrhartPolynomial| p.poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>();
    let component_ehrhart = if positroid.connected {
        Vec::new()
    } else {
        component_ehrhart(j)?.iter().map(strings).collect()
    };
    Ok(EhrhartReport {
        dimension: d,
        counts: counts[..=tmax as usize].to_vec(),
        ehrhart: strings(&e),
        hstar: coeffs(&hs)?,
        component_ehrhart,
        positroid,
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LabelRecord {
    pub w: String,
    pub circuit: Vec<String>,
    pub dist: usize,
    pub cover: usize,
    pub window: Vec<i64>,
    pub descents: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EdgeRecord {
    pub a: String,
    pub b: String,
    pub position: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TriangulationReport {
    pub positroid: PositroidSummary,
    pub w0: String,
    pub labels: Vec<LabelRecord>,
    pub edges: Vec<EdgeRecord>,
    pub hstar: Vec<i64>,
    pub affine_consistent: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
}

/// Labels, dual graph, BFS layering and affine windows.
pub fn triangulation_report(j: &GrassmannNecklace, w0: Option<&Permutation>) -> Result<TriangulationReport> {
    let positroid = summarize(j);
    let ls = enumerate_labels(j)?;
    let g = build_graph(&ls)?;
    let poset = shelling_poset(&g, w0)?;
    let affine = affine_consistency_check(&g, w0)?;
    let labels = g
        .labels()
        .iter()
        .enumerate()
        .map(|(k, l): (usize, &TriangulationLabel)| LabelRecord {
            w: l.to_string(),
            circuit: l.circuit().iter().map(|s| s.to_string()).collect(),
            dist: poset.dist[k],
            cover: poset.cover[k],
            window: affine.windows[k].window.clone(),
            descents: crate::combinatorics::descent_count(l.w().underline()),
        })
        .collect();
    let edges = g
        .edges()
        .iter()
        .map(|e| EdgeRecord {
            a: g.labels()[e.a].to_string(),
            b: g.labels()[e.b].to_string(),
            position: e.position,
        })
        .collect();
    Ok(TriangulationReport {
        positroid,
        w0: g.labels()[poset.base].to_string(),
        labels,
        edges,
        hstar: coeffs(&hstar_from_covers(&poset))?,
        affine_consistent: affine.is_consistent(),
        violations: affine.violations,
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TreeReport {
    pub n: usize,
    pub k: usize,
    pub necklace: String,
    pub chains: Vec<Vec<usize>>,
    pub arcs: Vec<ArcInfo>,
    pub extensions: Vec<String>,
    pub hstar_tree: Vec<i64>,
    pub hstar_necklace: Vec<i64>,
    pub extensions_match_labels: bool,
    pub verdict: Verdict,
}

/// Chains, circular extensions and `h*`, compared with the necklace pipeline.
pub fn tree_report(tau: &BicoloredSubdivision, w0: Option<&Permutation>) -> Result<TreeReport> {
    let j = necklace_of_subdivision(tau)?;
    let chains = tau_order(tau);
    let mut ext = circular_extensions(&chains, tau.n());
    ext.sort();
    let mut labels: Vec<Permutation> = enumerate_labels(&j)?.iter().map(|l| l.w().clone()).collect();
    labels.sort();
    let ht = coeffs(&hstar_tree(tau, w0)?)?;
    let hn = coeffs(&hstar_from_covers(&shelling_poset(&build_graph(&enumerate_labels(&j)?)?, None)?))?;
    let matches = ext == labels;
    Ok(TreeReport {
        n: tau.n(),
        k: tau.k(),
        necklace: j.to_string(),
        chains: chains.chains,
        arcs: arcs(tau).into_iter().filter(|a| a.compatible).collect(),
        extensions: ext.iter().map(|w| w.to_string()).collect(),
        verdict: if matches && ht == hn { Verdict::Pass } else { Verdict::Fail },
        hstar_tree: ht,
        hstar_necklace: hn,
        extensions_match_labels: matches,
    })
}

/// Necklaces of rank `r` on `[n]` in lexicographic order of their decorated
/// permutations, optionally only the connected ones.
pub fn atlas_necklaces(r: usize, n: usize, connected_only: bool) -> Vec<GrassmannNecklace> {
    crate::positroid::all_decorated_permutations(n)
        .iter()
        .map(crate::positroid::necklace_from_decorated)
        .filter(|j| j.rank() == r)
        .filter(|j| !connected_only || polytope_dimension(j) + 1 == n)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nk(s: &str) -> GrassmannNecklace {
        s.parse().unwrap()
    }

    fn opts(half_open: bool) -> HstarOptions {
        HstarOptions { w0: None, half_open }
    }

    #[test]
    fn dispatch() {
        let r = compute_hstar(&nk("123,235,345,145,125"), Method::Shelling, &opts(false)).unwrap();
        assert_eq!(r.hstar["shelling"], [1, 4, 3]);
        let r = compute_hstar(&nk("124,234,134,145,125"), Method::All, &opts(false)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.hstar.len(), 3);
        assert!(r.hstar.values().all(|v| *v == [1, 3, 1]));
        let r = compute_hstar(&nk("12,23,13,14"), Method::Descents, &opts(true)).unwrap();
        assert_eq!(r.hstar["descents"], [0, 0, 2]);
        let r = compute_hstar(&nk("12,23,13,14"), Method::All, &opts(true)).unwrap();
        assert_eq!(r.hstar["oracle"], [0, 0, 2]);
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(compute_hstar(&nk("12,23,13,14"), Method::Descents, &opts(false)).is_err());
    }

    #[test]
    fn disconnected_dispatch() {
        let j = nk("13,23,13,14");
        assert!(matches!(
            compute_hstar(&j, Method::Shelling, &opts(false)),
            Err(Error::Disconnected { .. })
        ));
        let r = compute_hstar(&j, Method::All, &opts(false)).unwrap();
        assert_eq!(r.hstar["oracle"], [1, 1]);
        assert_eq!(r.hstar["direct"], [1, 1]);
        assert_eq!(r.positroid.components, vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(r.ehrhart, ["1", "2", "1"]);
    }

    #[test]
    fn ehrhart_counts() {
        let r = ehrhart_report(&nk("12,23,13,14"), 3).unwrap();
        assert_eq!(r.counts, [1, 5, 14, 30]);
        assert_eq!(r.ehrhart, ["1", "13/6", "3/2", "1/3"]);
    }

    #[test]
    fn atlas_small() {
        let a = atlas_necklaces(2, 4, true);
        assert!(a.contains(&nk("12,23,13,14")));
        assert_eq!(atlas_necklaces(1, 3, true), vec![nk("1,2,3")]);
        let all_r2: usize = atlas_necklaces(2, 4, false).len();
        assert!(all_r2 > a.len());
    }

    #[test]
    fn reports_serialize() {
        let t = triangulation_report(&nk("12,23,34,45,51"), Some(&"31425".parse().unwrap())).unwrap();
        assert!(t.affine_consistent);
        assert_eq!(t.labels.len(), 11);
        let s = serde_json::to_string(&t).unwrap();
        assert!(s.contains("\"window\":[0,2,3,4,6]"));
        let tau = crate::input::parse_subdivision(
            r#"{"n":4,"cells":[{"color":"black","vertices":[1,2,3]},{"color":"white","vertices":[1,3,4]}]}"#,
        )
        .unwrap();
        let r = tree_report(&tau, None).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.extensions, ["1324", "2134"]);
    }
}
