use std::collections::HashSet;

use serde::Serialize;

use super::graph::{normalize_cycle, swap_cyclic, TriangulationGraph};
use super::shelling::shelling_poset;
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

/// An affine permutation of period `n` in window notation `[u(1), ..., u(n)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct AffineWindow {
    pub window: Vec<i64>,
}

impl AffineWindow {
    pub fn identity(n: usize) -> Self {
        AffineWindow {
            window: (1..=n as i64).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    /// Residues form a complete system mod `n` and the entries sum to `n(n+1)/2`.
    pub fn is_valid(&self) -> bool {
        let n = self.n() as i64;
        let residues: HashSet<i64> = self.window.iter().map(|u| u.rem_euclid(n)).collect();
        residues.len() == self.n() && self.window.iter().sum::<i64>() == n * (n + 1) / 2
    }

    /// Right multiplication by the simple reflection `s_i`, `i` in `1..=n`.
    pub fn times_simple(&self, i: usize) -> Self {
        let n = self.n();
        let mut w = self.window.clone();
        if i < n {
            w.swap(i - 1, i);
        } else {
            let (first, last) = (w[0], w[n - 1]);
            w[0] = last - n as i64;
            w[n - 1] = first + n as i64;
        }
        AffineWindow { window: w }
    }

    /// Coxeter length, `sum_{i<j} |floor((u(j) - u(i)) / n)|`.
    pub fn length(&self) -> usize {
        let n = self.n() as i64;
        let u = &self.window;
        let mut l = 0;
        for i in 0..u.len() {
            for j in i + 1..u.len() {
                l += (u[j] - u[i]).div_euclid(n).unsigned_abs() as usize;
            }
        }
        l
    }
}

impl std::fmt::Display for AffineWindow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.window.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AffineReport {
    pub base: usize,
    /// Indexed like the graph's labels.
    pub windows: Vec<AffineWindow>,
    pub violations: Vec<String>,
}

impl AffineReport {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The cycle of `w` written in the frame of `w0` through the window `u`:
/// position `p` holds `w0` at `u(p) mod n`.
fn frame(w0: &Permutation, u: &AffineWindow) -> Vec<usize> {
    let n = u.n() as i64;
    u.window
        .iter()
        .map(|&x| w0.at((x - 1).rem_euclid(n) as usize + 1))
        .collect()
}

/// Simple reflections `s_i` taking the frame of `u` to the cycle of `target`.
fn edge_reflections(w0: &Permutation, u: &AffineWindow, target: &Permutation) -> Vec<usize> {
    let v = frame(w0, u);
    (1..=v.len())
        .filter(|&i| &normalize_cycle(&swap_cyclic(&v, i)) == target)
        .collect()
}

/// Labels every simplex by an affine permutation along a BFS tree from `w0`,
/// then checks every edge, the lengths against BFS distance, and injectivity.
pub fn affine_consistency_check(
    g: &TriangulationGraph,
    w0: Option<&Permutation>,
) -> Result<AffineReport> {
    let poset = shelling_poset(g, w0)?;
    let base = poset.base;
    let w0 = g.labels()[base].w().clone();
    let n = w0.n();
    let mut windows: Vec<Option<AffineWindow>> = vec![None; g.len()];
    windows[base] = Some(AffineWindow::identity(n));
    let mut violations = Vec::new();
    for &v in &poset.order {
        let u = windows[v]
            .clone()
            .ok_or_else(|| Error::internal("BFS order visits an unlabeled vertex"))?;
        for &x in g.neighbors(v) {
            if poset.dist[x] != poset.dist[v] + 1 || windows[x].is_some() {
                continue;
            }
            let target = g.labels()[x].w();
            match edge_reflections(&w0, &u, target)[..] {
                [i] => windows[x] = Some(u.times_simple(i)),
                ref found => {
                    return Err(Error::internal(format!(
                        "edge {} -- {target}: {} matching reflections",
                        g.labels()[v],
                        found.len()
                    )))
                }
            }
        }
    }
    let windows: Vec<AffineWindow> = windows
        .into_iter()
        .map(|w| w.ok_or_else(|| Error::internal("unreached label")))
        .collect::<Result<_>>()?;
    for e in g.edges() {
        let (a, b) = (e.a, e.b);
        let ok = |from: usize, to: usize| {
            edge_reflections(&w0, &windows[from], g.labels()[to].w())
                .iter()
                .any(|&i| windows[from].times_simple(i) == windows[to])
        };
        if !ok(a, b) || !ok(b, a) {
            violations.push(format!(
                "edge {} -- {}: windows {} and {} are not related by a simple reflection",
                g.labels()[a],
                g.labels()[b],
                windows[a],
                windows[b]
            ));
        }
    }
    for (k, w) in windows.iter().enumerate() {
        if !w.is_valid() {
            violations.push(format!("{}: {w} is not an affine permutation", g.labels()[k]));
        }
        if w.length() != poset.dist[k] {
            violations.push(format!(
                "{}: length of {w} is {} but BFS distance is {}",
                g.labels()[k],
                w.length(),
                poset.dist[k]
            ));
        }
    }
    let distinct: HashSet<&AffineWindow> = windows.iter().collect();
    if distinct.len() != windows.len() {
        violations.push("two labels share a window".to_string());
    }
    Ok(AffineReport {
        base,
        windows,
        violations,
    })
}
