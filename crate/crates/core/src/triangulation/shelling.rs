use std::collections::VecDeque;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::graph::TriangulationGraph;
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::poly::ExactPolynomial;

/// BFS layering of the triangulation graph from a base label.
#[derive(Debug, Clone, Serialize)]
pub struct ShellingPoset {
    pub base: usize,
    /// Indexed like the graph's labels.
    pub dist: Vec<usize>,
    pub cover: Vec<usize>,
    /// Visiting order, a linear extension of the poset.
    pub order: Vec<usize>,
}

/// BFS from `w0` (default: the lexicographically smallest label), exploring
/// neighbors in lexicographic order.
pub fn shelling_poset(g: &TriangulationGraph, w0: Option<&Permutation>) -> Result<ShellingPoset> {
    if g.is_empty() {
        return Err(Error::invalid("empty triangulation graph"));
    }
    let base = match w0 {
        None => 0,
        Some(w) => g
            .index_of(w)
            .ok_or_else(|| Error::invalid(format!("{w} is not a triangulation label")))?,
    };
    let mut dist = vec![usize::MAX; g.len()];
    let mut order = Vec::with_capacity(g.len());
    let mut queue = VecDeque::from([base]);
    dist[base] = 0;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &u in g.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    if order.len() != g.len() {
        return Err(Error::internal("triangulation graph is disconnected"));
    }
    for e in g.edges() {
        if dist[e.a].abs_diff(dist[e.b]) != 1 {
            return Err(Error::internal(format!(
                "edge {} -- {} lies inside a BFS layer",
                g.labels()[e.a],
                g.labels()[e.b]
            )));
        }
    }
    let cover = (0..g.len())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&u| dist[u] + 1 == dist[v])
                .count()
        })
        .collect();
    Ok(ShellingPoset {
        base,
        dist,
        cover,
        order,
    })
}

/// `sum_w z^{cover(w)}`
pub fn hstar_from_covers(p: &ShellingPoset) -> ExactPolynomial {
    p.cover.iter().fold(ExactPolynomial::zero(), |acc, &c| {
        &acc + &ExactPolynomial::monomial(c, BigRational::one())
    })
}
