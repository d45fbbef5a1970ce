use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation (letters are 1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::invalid("permutation must be nonempty"));
        }
        let mut seen = vec![false; n + 1];
        for &a in &word {
            if !(1..=n).contains(&a) || std::mem::replace(&mut seen[a], true) {
                return Err(Error::invalid(format!(
                    "{word:?} is not a permutation of [{n}]"
                )));
            }
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Value at 1-based position `p`.
    pub fn at(&self, p: usize) -> usize {
        self.word[p - 1]
    }

    /// `positions()[a]` is the 1-based position of letter `a` (index 0 unused).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n() + 1];
        for (p, &a) in self.word.iter().enumerate() {
            pos[a] = p + 1;
        }
        pos
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            word: self.positions()[1..].to_vec(),
        }
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.at(i) == i).collect()
    }

    /// The unique cyclic rotation of the word whose last letter is `a`.
    pub fn rotation_ending_at(&self, a: usize) -> Result<Permutation> {
        let n = self.n();
        if !(1..=n).contains(&a) {
            return Err(Error::invalid(format!("letter {a} not in [{n}]")));
        }
        let p = self.word.iter().position(|&x| x == a).expect("bijection");
        let mut word = Vec::with_capacity(n);
        word.extend_from_slice(&self.word[p + 1..]);
        word.extend_from_slice(&self.word[..=p]);
        Ok(Permutation { word })
    }

    /// The word `w_1 ... w_{n-1}` with the last letter dropped.
    pub fn underline(&self) -> &[usize] {
        &self.word[..self.n() - 1]
    }

    pub fn ends_with_n(&self) -> bool {
        self.word.last() == Some(&self.n())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for a in &self.word {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Accepts compact digit strings (`32415`) or separated lists (`3,2,4,1,5`, `3 2 4 1 5`).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Vec<usize> = if s.contains([',', ' ']) {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::invalid(format!("bad letter {t:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::invalid(format!("bad letter {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn rotations() {
        assert_eq!(p("32415").rotation_ending_at(3).unwrap(), p("24153"));
        assert_eq!(p("32415").rotation_ending_at(5).unwrap(), p("32415"));
        assert_eq!(p("1234").rotation_ending_at(1).unwrap(), p("2341"));
        assert!(p("1234").rotation_ending_at(5).is_err());
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(p("3,2,4,1,5"), p("32415"));
        assert!("1224".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert_eq!(p("3142").inverse(), p("2413"));
        assert_eq!(p("2143").fixed_points(), Vec::<usize>::new());
        assert_eq!(p("32415").underline(), &[3, 2, 4, 1]);
        let long = Permutation::identity(11);
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
    }
}
