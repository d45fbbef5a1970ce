use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{wrap, KSubset, MAX_N};
use crate::error::{Error, Result};

/// A Grassmann necklace `(J_1, ..., J_n)` of type `(r, n)`.
///
/// For each `i` (mod `n`): if `i` is in `J_i` then `J_{i+1} = J_i - {i} + {j}`
/// for some `j`; otherwise `J_{i+1} = J_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassmannNecklace {
    n: usize,
    subsets: Vec<KSubset>,
}

/// Validates raw subsets as a Grassmann necklace on `[n]`.
///
/// `n` defaults to the number of subsets; a length mismatch is an error.
/// Errors name the first offending (1-based) index.
pub fn validate_necklace(raw: &[Vec<usize>], n: Option<usize>) -> Result<GrassmannNecklace> {
    let n = n.unwrap_or(raw.len());
    if n == 0 {
        return Err(Error::validation(None, "empty necklace"));
    }
    if n > MAX_N {
        return Err(Error::validation(None, format!("n = {n} exceeds {MAX_N}")));
    }
    if raw.len() != n {
        return Err(Error::validation(
            None,
            format!("necklace has {} entries but n = {n}", raw.len()),
        ));
    }
    let mut subsets = Vec::with_capacity(n);
    for (idx, s) in raw.iter().enumerate() {
        let ks = KSubset::new(n, s).map_err(|e| Error::validation(Some(idx + 1), e.to_string()))?;
        subsets.push(ks);
    }
    let r = subsets[0].len();
    if let Some(idx) = subsets.iter().position(|s| s.len() != r) {
        return Err(Error::validation(
            Some(idx + 1),
            format!("subset size {} differs from {r}", subsets[idx].len()),
        ));
    }
    for i in 1..=n {
        let cur = subsets[i - 1];
        let next = subsets[wrap(i as i64 + 1, n) - 1];
        let ok = if cur.contains(i) {
            let mut rest = cur;
            rest.remove(i);
            rest.mask() & !next.mask() == 0
        } else {
            cur == next
        };
        if !ok {
            return Err(Error::validation(
                Some(i),
                format!(
                    "successor rule violated: J_{i} = {cur}, J_{} = {next}",
                    wrap(i as i64 + 1, n)
                ),
            ));
        }
    }
    Ok(GrassmannNecklace { n, subsets })
}

impl GrassmannNecklace {
    /// Builds a necklace from subsets already known to satisfy the successor rule.
    pub(crate) fn from_subsets_unchecked(n: usize, subsets: Vec<KSubset>) -> Self {
        debug_assert_eq!(subsets.len(), n);
        GrassmannNecklace { n, subsets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.subsets[0].len()
    }

    /// `J_i` for `i` in `1..=n`.
    pub fn get(&self, i: usize) -> &KSubset {
        &self.subsets[i - 1]
    }

    pub fn subsets(&self) -> &[KSubset] {
        &self.subsets
    }

    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.subsets.iter().map(KSubset::elements).collect()
    }

    /// Elements of `J_i` sorted by `<_i`: `a_1^i <_i ... <_i a_r^i`.
    pub fn sorted_entry(&self, i: usize) -> Vec<usize> {
        self.get(i).sorted_by(i)
    }
}

impl fmt::Display for GrassmannNecklace {
    /// Compact form; each entry is written in its own `<_i` order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (1..=self.n)
            .map(|i| {
                let el = self.sorted_entry(i);
                if self.n <= 9 {
                    el.iter().map(|e| e.to_string()).collect()
                } else {
                    let p: Vec<String> = el.iter().map(|e| e.to_string()).collect();
                    format!("{{{}}}", p.join(" "))
                }
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses the compact form `123,235,345,145,125` (digits, `n <= 9`), with
/// optional surrounding parentheses. An empty entry or `0` is the empty set.
impl FromStr for GrassmannNecklace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut raw = Vec::new();
        for (idx, tok) in body.split(',').enumerate() {
            let tok = tok.trim();
            let mut set = Vec::new();
            if tok != "0" {
                for c in tok.chars() {
                    let d = c.to_digit(10).ok_or_else(|| {
                        Error::validation(Some(idx + 1), format!("bad character {c:?} in {tok:?}"))
                    })?;
                    set.push(d as usize);
                }
            }
            raw.push(set);
        }
        if raw.len() > 9 {
            return Err(Error::validation(
                None,
                "compact necklace syntax needs n <= 9; use JSON input",
            ));
        }
        validate_necklace(&raw, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_necklaces_validate() {
        let j: GrassmannNecklace = "12,23,13,14".parse().unwrap();
        assert_eq!((j.rank(), j.n()), (2, 4));
        let j: GrassmannNecklace = "(123,235,345,145,125)".parse().unwrap();
        assert_eq!((j.rank(), j.n()), (3, 5));
        assert_eq!(j.to_string(), "(123,235,345,451,512)");
    }

    #[test]
    fn malformed_necklaces() {
        let e = validate_necklace(&[vec![1, 2], vec![3, 4]], Some(4)).unwrap_err();
        assert!(matches!(e, Error::Validation { index: None, .. }));
        let e = "12,23,13,24".parse::<GrassmannNecklace>().unwrap_err();
        assert!(matches!(e, Error::Validation { index: Some(3), .. }), "{e}");
        let e = "12,2,13,14".parse::<GrassmannNecklace>().unwrap_err();
        assert!(matches!(e, Error::Validation { index: Some(2), .. }));
        let e = "12,23,15,14".parse::<GrassmannNecklace>().unwrap_err();
        assert!(matches!(e, Error::Validation { index: Some(3), .. }));
        assert!("1a,23".parse::<GrassmannNecklace>().is_err());
    }

    #[test]
    fn rank_zero_necklace() {
        let j: GrassmannNecklace = "0,0,0".parse().unwrap();
        assert_eq!(j.rank(), 0);
    }
}
