//! Textual and JSON input formats.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::positroid::{
    necklace_from_bases, necklace_from_decorated, validate_necklace, Color, DecoratedPermutation,
    GrassmannNecklace, PositroidBases,
};
use crate::tree::{validate_subdivision, BicoloredSubdivision};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct NecklaceJson {
    n: Option<usize>,
    necklace: Vec<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecoratedJson {
    pi: Vec<usize>,
    #[serde(default)]
    colors: BTreeMap<String, Color>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasesJson {
    n: usize,
    bases: Vec<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CellJson {
    color: Color,
    vertices: Vec<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SubdivisionJson {
    n: usize,
    cells: Vec<CellJson>,
}

/// How a positroid was written down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InputKind {
    Necklace,
    Decorated,
    Bases,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::invalid(format!("line {}, column {}: {e}", e.line(), e.column()))
}

fn parse_json(text: &str) -> Result<serde_json::Value> {
    serde_json::from_str(text).map_err(json_error)
}

/// Fixed points without an explicit color are black.
fn decorated(d: DecoratedJson) -> Result<DecoratedPermutation> {
    let pi = Permutation::new(d.pi)?;
    let mut colors: BTreeMap<usize, Color> =
        pi.fixed_points().into_iter().map(|i| (i, Color::Black)).collect();
    for (k, c) in d.colors {
        let i = k
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::invalid(format!("color key {k:?} is not an index")))?;
        match colors.get_mut(&i) {
            Some(slot) => *slot = c,
            None => return Err(Error::invalid(format!("{i} is not a fixed point of pi"))),
        }
    }
    DecoratedPermutation::new(pi, colors)
}

/// Reads a positroid given as a compact necklace (`12,23,13,14`), or as JSON
/// with a `necklace`, `pi` (decorated permutation) or `bases` field.
pub fn parse_positroid(text: &str) -> Result<(GrassmannNecklace, InputKind)> {
    let t = text.trim();
    if !t.starts_with('{') {
        return Ok((t.parse()?, InputKind::Necklace));
    }
    let v = parse_json(t)?;
    let from = |v: serde_json::Value| -> Result<(GrassmannNecklace, InputKind)> {
        if v.get("necklace").is_some() {
            let j: NecklaceJson = serde_json::from_value(v).map_err(json_error)?;
            Ok((validate_necklace(&j.necklace, j.n)?, InputKind::Necklace))
        } else if v.get("pi").is_some() {
            let d: DecoratedJson = serde_json::from_value(v).map_err(json_error)?;
            Ok((necklace_from_decorated(&decorated(d)?), InputKind::Decorated))
        } else if v.get("bases").is_some() {
            let b: BasesJson = serde_json::from_value(v).map_err(json_error)?;
            let bases = PositroidBases::from_lists(b.n, &b.bases)?;
            if !bases.is_positroid() {
                return Err(Error::validation(None, "the bases do not form a positroid"));
            }
            Ok((necklace_from_bases(&bases)?, InputKind::Bases))
        } else {
            Err(Error::invalid("expected a \"necklace\", \"pi\" or \"bases\" field"))
        }
    };
    from(v)
}

/// Reads `{"n":5,"cells":[{"color":"black","vertices":[1,2,3]}, ...]}`.
pub fn parse_subdivision(text: &str) -> Result<BicoloredSubdivision> {
    let s: SubdivisionJson = serde_json::from_str(text.trim()).map_err(json_error)?;
    validate_subdivision(s.n, s.cells.into_iter().map(|c| (c.color, c.vertices)).collect())
}

/// Reads a permutation in one-line notation (`24135` or `2,4,1,3,5`).
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    text.trim().parse()
}
