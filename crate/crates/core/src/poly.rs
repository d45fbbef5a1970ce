//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coefficients are stored densely, index = degree. The highest stored
/// coefficient is nonzero; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPolynomial {
    coeffs: Vec<BigRational>,
}

impl ExactPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        ExactPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_ints<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// `c * z^deg`
    pub fn monomial(deg: usize, c: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// `(1 - z)^m`
    pub fn one_minus_z_pow(m: usize) -> Self {
        Self::from_ints([1, -1]).pow(m)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, m: usize) -> Self {
        (0..m).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: i64) -> BigRational {
        self.eval(&BigRational::from_integer(t.into()))
    }

    /// Coefficients as integers, when they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Integer coefficients as `i64`, when they all are integers and fit.
    pub fn to_i64_coeffs(&self) -> Option<Vec<i64>> {
        self.integer_coeffs()?.iter().map(ToPrimitive::to_i64).collect()
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

impl Add for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ExactPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ExactPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPolynomial::new(out)
    }
}

impl Neg for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn neg(self) -> ExactPolynomial {
        ExactPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ExactPolynomial {
            type Output = ExactPolynomial;
            fn $m(self, rhs: ExactPolynomial) -> ExactPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for ExactPolynomial {
    /// Ascending powers of `z`, e.g. `1 + 4z + 3z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                if abs.is_integer() {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "({abs})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> ExactPolynomial {
        ExactPolynomial::from_ints(c.iter().copied())
    }

    #[test]
    fn normalizes_and_displays() {
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 4, 3]).to_string(), "1 + 4z + 3z^2");
        assert_eq!(p(&[0, 0, 2]).to_string(), "2z^2");
        assert_eq!(p(&[1, -1]).to_string(), "1 - z");
        let half = ExactPolynomial::constant(BigRational::new(1.into(), 2.into()));
        assert_eq!(half.to_string(), "(1/2)");
        assert_eq!(half.integer_coeffs(), None);
    }

    #[test]
    fn pyramid_inclusion_exclusion_by_hand() {
        // 2z^2 + 3(1-z) - 2(1-z)^2 = 1 + z
        let three = BigRational::from_integer(3.into());
        let two = BigRational::from_integer(2.into());
        let r = &(&p(&[0, 0, 2]) + &ExactPolynomial::one_minus_z_pow(1).scale(&three))
            - &ExactPolynomial::one_minus_z_pow(2).scale(&two);
        assert_eq!(r, p(&[1, 1]));
    }

    proptest! {
        #[test]
        fn product_evaluates_pointwise(
            a in prop::collection::vec(-20i64..20, 0..6),
            b in prop::collection::vec(-20i64..20, 0..6),
            t in -10i64..10,
        ) {
            let (pa, pb) = (p(&a), p(&b));
            prop_assert_eq!((&pa * &pb).eval_int(t), pa.eval_int(t) * pb.eval_int(t));
            prop_assert_eq!((&pa + &pb).eval_int(t), pa.eval_int(t) + pb.eval_int(t));
            prop_assert_eq!((&pa - &pb).eval_int(t), pa.eval_int(t) - pb.eval_int(t));
        }
    }
}
