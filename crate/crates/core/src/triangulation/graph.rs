use std::collections::HashMap;

use serde::Serialize;

use super::labels::TriangulationLabel;
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

/// An edge `a -- b` (indices into the label list, `a < b`). `position` is the
/// cyclic position `i` in `1..=n` of `a`'s cycle whose entries `i, i+1` are
/// switched to obtain `b`; position `n` switches `w_n` and `w_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphEdge {
    pub a: usize,
    pub b: usize,
    pub position: usize,
}

/// Dual graph of the circuit triangulation: labels in lexicographic order,
/// edges between simplices sharing a facet.
#[derive(Debug, Clone, Serialize)]
pub struct TriangulationGraph {
    labels: Vec<TriangulationLabel>,
    edges: Vec<GraphEdge>,
    #[serde(skip)]
    adjacency: Vec<Vec<usize>>,
}

/// Rotates a cyclic word so that its maximum sits last.
pub(crate) fn normalize_cycle(v: &[usize]) -> Permutation {
    let n = v.len();
    let p = v.iter().position(|&x| x == n).expect("cycle contains n");
    let word: Vec<usize> = (1..=n).map(|k| v[(p + k) % n]).collect();
    Permutation::new(word).expect("rotation of a permutation")
}

/// Switches cyclic positions `i` and `i+1` (1-based, `i = n` wraps).
pub(crate) fn swap_cyclic(v: &[usize], i: usize) -> Vec<usize> {
    let n = v.len();
    let mut out = v.to_vec();
    out.swap(i - 1, i % n);
    out
}

/// The swap is allowed when the two entries are not cyclically consecutive values.
pub(crate) fn swap_allowed(v: &[usize], i: usize) -> bool {
    let n = v.len();
    let d = (v[i - 1] + n - v[i % n]) % n;
    d != 1 && d != n - 1
}

impl TriangulationGraph {
    pub fn labels(&self) -> &[TriangulationLabel] {
        &self.labels
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    /// Neighbor indices, ascending (hence lexicographic in the labels).
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        self.labels.binary_search_by(|l| l.w().cmp(w)).ok()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_connected(&self) -> bool {
        if self.labels.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Builds the graph with the switching rule, and checks that every edge joins
/// simplices sharing exactly `n - 1` vertices.
pub fn build_graph(labels: &[TriangulationLabel]) -> Result<TriangulationGraph> {
    let mut labels = labels.to_vec();
    labels.sort();
    labels.dedup();
    if let Some(first) = labels.first() {
        let (n, r) = (first.n(), first.rank());
        if labels.iter().any(|l| l.n() != n || l.rank() != r) {
            return Err(Error::invalid("labels must share n and rank"));
        }
    }
    let index: HashMap<&Permutation, usize> =
        labels.iter().enumerate().map(|(k, l)| (l.w(), k)).collect();
    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); labels.len()];
    for (a, l) in labels.iter().enumerate() {
        let v = l.w().word();
        let n = v.len();
        if n < 3 {
            continue;
        }
        for i in 1..=n {
            if !swap_allowed(v, i) {
                continue;
            }
            let x = normalize_cycle(&swap_cyclic(v, i));
            let Some(&b) = index.get(&x) else { continue };
            if b <= a {
                continue;
            }
            let shared = l
                .circuit()
                .iter()
                .filter(|s| labels[b].circuit().contains(s))
                .count();
            if shared != n - 1 {
                return Err(Error::internal(format!(
                    "{} and {} are joined by a switch but share {shared} vertices",
                    l, labels[b]
                )));
            }
            edges.push(GraphEdge { a, b, position: i });
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
    }
    for adj in &mut adjacency {
        adj.sort_unstable();
        adj.dedup();
    }
    edges.sort_by_key(|e| (e.a, e.b));
    edges.dedup_by_key(|e| (e.a, e.b));
    Ok(TriangulationGraph {
        labels,
        edges,
        adjacency,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::positroid::{
        all_decorated_permutations, bases_from_necklace, necklace_from_decorated,
        GrassmannNecklace,
    };
    use crate::triangulation::enumerate_labels;

    fn graph(s: &str) -> TriangulationGraph {
        let j: GrassmannNecklace = s.parse().unwrap();
        build_graph(&enumerate_labels(&j).unwrap()).unwrap()
    }

    fn edge_names(g: &TriangulationGraph) -> Vec<(String, String)> {
        let mut v: Vec<(String, String)> = g
            .edges()
            .iter()
            .map(|e| {
                let (x, y) = (g.labels()[e.a].to_string(), g.labels()[e.b].to_string());
                if x < y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        v.sort();
        v
    }

    #[test]
    fn four_label_edges() {
        let g = graph("124,234,134,145,125");
        let mut want: Vec<(String, String)> = [
            ("24135", "42135"),
            ("24135", "32415"),
            ("24135", "41325"),
            ("42135", "34215"),
            ("32415", "34215"),
        ]
        .iter()
        .map(|(a, b)| (a.min(b).to_string(), a.max(b).to_string()))
        .collect();
        want.sort();
        assert_eq!(edge_names(&g), want);
    }

    #[test]
    fn hypersimplex_graph() {
        let g = graph("12,23,34,45,51");
        assert_eq!(g.len(), 11);
        assert_eq!(g.edges().len(), 15);
        let center = g.index_of(&"31425".parse().unwrap()).unwrap();
        assert_eq!(g.neighbors(center).len(), 5);
    }

    #[test]
    fn singleton_has_no_edges() {
        let g = graph("1,2,3,4");
        assert_eq!(g.len(), 1);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn switch_rule_equals_shared_facets() {
        for n in 2..=6 {
            for d in all_decorated_permutations(n) {
                let j = necklace_from_decorated(&d);
                if !bases_from_necklace(&j).is_connected() {
                    continue;
                }
                let g = build_graph(&enumerate_labels(&j).unwrap()).unwrap();
                assert!(g.is_connected(), "{j}");
                let mut by_facets = Vec::new();
                for a in 0..g.len() {
                    for b in a + 1..g.len() {
                        let shared = g.labels()[a]
                            .circuit()
                            .iter()
                            .filter(|s| g.labels()[b].circuit().contains(s))
                            .count();
                        if shared == n - 1 {
                            by_facets.push((a, b));
                        }
                    }
                }
                let by_rule: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.a, e.b)).collect();
                assert_eq!(by_rule, by_facets, "{j}");
            }
        }
    }
}
