//! Bicolored subdivisions of a convex polygon and the tree positroids they
//! cut out.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::combinatorics::{CyclicInterval, Permutation};
use crate::error::{Error, Result};
use crate::poly::ExactPolynomial;
use crate::positroid::{necklace_from_bases, Color, GrassmannNecklace, HRepresentation, Inequality, PositroidBases, Sense};
use crate::triangulation::{build_graph, hstar_from_covers, shelling_poset, TriangulationLabel};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub color: Color,
    /// Ascending, i.e. clockwise around the polygon starting at the least vertex.
    pub vertices: Vec<usize>,
}

/// A validated subdivision of the `n`-gon (vertices `1..=n` clockwise).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BicoloredSubdivision {
    n: usize,
    cells: Vec<Cell>,
    k: usize,
}

/// Unordered chord `{a, b}`, stored with `a < b`.
type Chord = (usize, usize);

fn chord(a: usize, b: usize) -> Chord {
    (a.min(b), a.max(b))
}

fn is_boundary(c: Chord, n: usize) -> bool {
    c.1 - c.0 == 1 || (c.0 == 1 && c.1 == n)
}

/// Chords with four distinct endpoints that interleave around the circle.
fn crosses(x: Chord, y: Chord) -> bool {
    let inside = |v: usize| x.0 < v && v < x.1;
    let distinct = x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1;
    distinct && inside(y.0) != inside(y.1)
}

fn cell_edges(vs: &[usize]) -> Vec<Chord> {
    let m = vs.len();
    (0..m).map(|p| chord(vs[p], vs[(p + 1) % m])).collect()
}

/// Whether the cyclic vertex run `[i..j]` (clockwise from `i` to `j`) contains `v`.
fn in_run(i: usize, j: usize, v: usize, n: usize) -> bool {
    (v + n - i) % n <= (j + n - i) % n
}

impl BicoloredSubdivision {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Number of black triangles in any triangulation of the black cells.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Rank of the associated positroid.
    pub fn rank(&self) -> usize {
        self.k + 1
    }
}

/// Checks that the cells partition the polygon with alternating colors.
pub fn validate_subdivision(n: usize, raw: Vec<(Color, Vec<usize>)>) -> Result<BicoloredSubdivision> {
    if n < 3 {
        return Err(Error::invalid("a polygon needs at least 3 vertices"));
    }
    let mut cells = Vec::with_capacity(raw.len());
    for (idx, (color, vs)) in raw.into_iter().enumerate() {
        let set: BTreeSet<usize> = vs.iter().copied().collect();
        if set.len() != vs.len() || vs.len() < 2 || vs.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::validation(
                Some(idx + 1),
                format!("cell {} needs at least 2 distinct vertices in 1..={n}", idx + 1),
            ));
        }
        cells.push(Cell {
            color,
            vertices: set.into_iter().collect(),
        });
    }
    // chord -> cells using it as an edge (a bigon uses its chord twice)
    let mut uses: BTreeMap<Chord, Vec<usize>> = BTreeMap::new();
    for (c, cell) in cells.iter().enumerate() {
        for e in cell_edges(&cell.vertices) {
            uses.entry(e).or_default().push(c);
        }
    }
    let chords: Vec<Chord> = uses.keys().copied().collect();
    for (a, &x) in chords.iter().enumerate() {
        for &y in &chords[a + 1..] {
            if crosses(x, y) {
                let (cx, cy) = (uses[&x][0] + 1, uses[&y][0] + 1);
                return Err(Error::validation(
                    Some(cx),
                    format!("edge {}-{} of cell {cx} crosses edge {}-{} of cell {cy}", x.0, x.1, y.0, y.1),
                ));
            }
        }
    }
    for b in 1..=n {
        let e = chord(b, b % n + 1);
        if !uses.contains_key(&e) {
            return Err(Error::validation(None, format!("polygon edge {}-{} is not covered", e.0, e.1)));
        }
    }
    let mut interior_edges = 0;
    for (&e, users) in &uses {
        let bigons: Vec<usize> = users.iter().copied().filter(|&c| cells[c].vertices.len() == 2).collect();
        let outer: Vec<usize> = users.iter().copied().filter(|&c| cells[c].vertices.len() > 2).collect();
        let m = bigons.len() / 2;
        let boundary = is_boundary(e, n);
        let sides = |c: usize| -> bool {
            // true when the cell lies on the run [e.0..e.1]
            cells[c].vertices.iter().all(|&v| in_run(e.0, e.1, v, n))
        };
        let want_outer = if boundary { 1 } else { 2 };
        let names = || users.iter().map(|c| (c + 1).to_string()).collect::<Vec<_>>().join(", ");
        if outer.len() != want_outer {
            return Err(Error::validation(
                Some(users[0] + 1),
                format!("edge {}-{} is shared by cells {} in an impossible way", e.0, e.1, names()),
            ));
        }
        if !boundary && sides(outer[0]) == sides(outer[1]) {
            return Err(Error::validation(
                Some(outer[0] + 1),
                format!("cells {} and {} overlap along {}-{}", outer[0] + 1, outer[1] + 1, e.0, e.1),
            ));
        }
        // the cells stacked across this chord must alternate in color
        let black_bigons = bigons.iter().filter(|&&c| cells[c].color == Color::Black).count() / 2;
        let flip = |c: Color| if c == Color::Black { Color::White } else { Color::Black };
        let mut color = cells[outer[0]].color;
        let mut blacks = 0;
        for _ in 0..m {
            color = flip(color);
            blacks += usize::from(color == Color::Black);
        }
        let ok = blacks == black_bigons && (boundary || flip(color) == cells[outer[1]].color);
        if !ok {
            return Err(Error::validation(
                Some(users[0] + 1),
                format!("cells {} share edge {}-{} without alternating colors", names(), e.0, e.1),
            ));
        }
        interior_edges += if boundary { m } else { m + 1 };
    }
    if cells.len() != interior_edges + 1 {
        return Err(Error::validation(
            None,
            format!("{} cells cannot partition the polygon with {interior_edges} interior edges", cells.len()),
        ));
    }
    let k = cells
        .iter()
        .filter(|c| c.color == Color::Black)
        .map(|c| c.vertices.len().saturating_sub(2))
        .sum();
    Ok(BicoloredSubdivision { n, cells, k })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ArcInfo {
    pub from: usize,
    pub to: usize,
    pub compatible: bool,
    pub facet_defining: bool,
    /// Black triangles to the left of the arc; `None` for incompatible arcs.
    pub area: Option<i64>,
}

impl ArcInfo {
    pub fn interval(&self, n: usize) -> CyclicInterval {
        CyclicInterval::new(self.from, self.to, n).expect("in range")
    }
}

/// Black triangles left of `i -> j`: each black cell contributes the
/// triangles of its part on the run `[i..j]`.
fn area(tau: &BicoloredSubdivision, i: usize, j: usize) -> i64 {
    tau.cells
        .iter()
        .filter(|c| c.color == Color::Black)
        .map(|c| {
            let inside = c.vertices.iter().filter(|&&v| in_run(i, j, v, tau.n)).count();
            inside.saturating_sub(2) as i64
        })
        .sum()
}

/// Every ordered pair `i != j` with its compatibility, facet flag and area.
pub fn arcs(tau: &BicoloredSubdivision) -> Vec<ArcInfo> {
    let n = tau.n;
    let mut out = Vec::with_capacity(n * (n - 1));
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let compatible = tau
                .cells
                .iter()
                .any(|c| c.vertices.contains(&i) && c.vertices.contains(&j));
            let facet_defining = tau.cells.iter().any(|c| {
                c.color == Color::Black
                    && c.vertices.len() >= 3
                    && cell_edges(&c.vertices).contains(&chord(i, j))
                    && c.vertices.iter().all(|&v| in_run(i, j, v, n))
            });
            out.push(ArcInfo {
                from: i,
                to: j,
                compatible,
                facet_defining,
                area: compatible.then(|| area(tau, i, j)),
            });
        }
    }
    out
}

/// `area <= x_[i,j] <= area + 1` over all compatible arcs, with `sum x = k + 1`.
pub fn h_rep_from_subdivision(tau: &BicoloredSubdivision) -> HRepresentation {
    let n = tau.n;
    let mut ineqs = Vec::new();
    for a in arcs(tau).into_iter().filter(|a| a.compatible) {
        let iv = a.interval(n);
        let area = a.area.expect("compatible");
        ineqs.push(Inequality::closed(iv, Sense::Ge, area));
        ineqs.push(Inequality::closed(iv, Sense::Le, area + 1));
    }
    HRepresentation::new(n, tau.rank(), ineqs)
}

/// The facet form: `x_i >= 0` at vertices of white cells and
/// `x_[i,j] >= area` for facet-defining arcs.
pub fn facet_h_rep_from_subdivision(tau: &BicoloredSubdivision) -> HRepresentation {
    let n = tau.n;
    let white: BTreeSet<usize> = tau
        .cells
        .iter()
        .filter(|c| c.color == Color::White)
        .flat_map(|c| c.vertices.iter().copied())
        .collect();
    let mut ineqs: Vec<Inequality> = white
        .into_iter()
        .map(|i| Inequality::closed(CyclicInterval::new(i, i % n + 1, n).expect("in range"), Sense::Ge, 0))
        .collect();
    for a in arcs(tau).into_iter().filter(|a| a.facet_defining) {
        ineqs.push(Inequality::closed(a.interval(n), Sense::Ge, a.area.expect("compatible")));
    }
    HRepresentation::new(n, tau.rank(), ineqs)
}

/// Bases of the tree positroid (the 0/1 points of the H-representation).
pub fn positroid_of_subdivision(tau: &BicoloredSubdivision) -> Result<PositroidBases> {
    let pts = h_rep_from_subdivision(tau).zero_one_points();
    PositroidBases::new(tau.n, pts)
}

pub fn necklace_of_subdivision(tau: &BicoloredSubdivision) -> Result<GrassmannNecklace> {
    necklace_from_bases(&positroid_of_subdivision(tau)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainSet {
    pub chains: Vec<Vec<usize>>,
}

/// One chain per cell with at least 3 vertices: white cells clockwise, black
/// cells counterclockwise, each read from its least vertex.
pub fn tau_order(tau: &BicoloredSubdivision) -> ChainSet {
    let chains = tau
        .cells
        .iter()
        .filter(|c| c.vertices.len() >= 3)
        .map(|c| match c.color {
            Color::White => c.vertices.clone(),
            Color::Black => {
                let mut v = c.vertices.clone();
                v[1..].reverse();
                v.rotate_left(1);
                v
            }
        })
        .collect();
    ChainSet { chains }
}

fn extends(w: &Permutation, chain: &[usize]) -> bool {
    let pos = w.positions();
    let mut seq: Vec<usize> = chain.to_vec();
    seq.sort_by_key(|&x| pos[x]);
    let Some(start) = seq.iter().position(|&x| x == chain[0]) else {
        return false;
    };
    seq.rotate_left(start);
    seq == chain
}

/// All `w` with `w_n = n` whose cycle restricts to a rotation of every chain.
pub fn circular_extensions(c: &ChainSet, n: usize) -> Vec<Permutation> {
    crate::triangulation::cycles_ending_at_n(n)
        .filter(|w| c.chains.iter().all(|ch| extends(w, ch)))
        .collect()
}

/// `h*` of the tree positroid from the BFS shelling of `Ext(C_tau)`.
pub fn hstar_tree(tau: &BicoloredSubdivision, w0: Option<&Permutation>) -> Result<ExactPolynomial> {
    let ext = circular_extensions(&tau_order(tau), tau.n);
    if ext.is_empty() {
        return Err(Error::invalid("the tau-order has no circular extension"));
    }
    let labels: Vec<TriangulationLabel> = ext.into_iter().map(TriangulationLabel::new).collect::<Result<_>>()?;
    let g = build_graph(&labels)?;
    Ok(hstar_from_covers(&shelling_poset(&g, w0)?))
}

/// A random subdivision: random non-crossing diagonals, cells 2-colored
/// along the dual tree.
pub fn random_subdivision<R: rand_core::RngCore>(n: usize, rng: &mut R) -> BicoloredSubdivision {
    let below = |rng: &mut R, m: usize| (rng.next_u64() % m as u64) as usize;
    let mut diagonals: Vec<Chord> = Vec::new();
    let attempts = below(rng, 2 * n + 1);
    for _ in 0..attempts {
        let (a, b) = (below(rng, n) + 1, below(rng, n) + 1);
        let d = chord(a, b);
        if a == b || is_boundary(d, n) || diagonals.contains(&d) || diagonals.iter().any(|&x| crosses(x, d)) {
            continue;
        }
        diagonals.push(d);
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut stack = vec![(1..=n).collect::<Vec<usize>>()];
    while let Some(poly) = stack.pop() {
        let split = diagonals.iter().find_map(|&(a, b)| {
            let pa = poly.iter().position(|&v| v == a)?;
            let pb = poly.iter().position(|&v| v == b)?;
            (pb - pa > 1 && pb - pa < poly.len() - 1).then_some((pa, pb))
        });
        match split {
            Some((pa, pb)) => {
                stack.push(poly[pa..=pb].to_vec());
                let mut rest = poly[..=pa].to_vec();
                rest.extend_from_slice(&poly[pb..]);
                stack.push(rest);
            }
            None => cells.push(poly),
        }
    }
    // color by parity of depth in the dual tree
    let m = cells.len();
    let mut color = vec![None; m];
    color[0] = Some(if rng.next_u32() & 1 == 0 { Color::Black } else { Color::White });
    let mut queue = vec![0];
    while let Some(c) = queue.pop() {
        let here = color[c].expect("colored");
        let other = if here == Color::Black { Color::White } else { Color::Black };
        let ec = cell_edges(&cells[c]);
        for d in 0..m {
            if color[d].is_none() && cell_edges(&cells[d]).iter().any(|e| ec.contains(e) && !is_boundary(*e, n)) {
                color[d] = Some(other);
                queue.push(d);
            }
        }
    }
    let raw = cells
        .into_iter()
        .zip(color)
        .map(|(v, c)| (c.expect("dual tree is connected"), v))
        .collect();
    validate_subdivision(n, raw).expect("generated subdivisions are valid")
}
