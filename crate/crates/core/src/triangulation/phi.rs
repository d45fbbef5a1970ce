use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

fn tails(x: &[BigRational]) -> Result<Vec<BigRational>> {
    if x.is_empty() {
        return Err(Error::invalid("empty point"));
    }
    let p = &x[..x.len() - 1];
    let mut out = vec![BigRational::default(); p.len()];
    let mut acc = BigRational::default();
    for i in (0..p.len()).rev() {
        acc += &p[i];
        out[i] = acc.clone();
    }
    Ok(out)
}

/// Pulls a point of `{sum x = r}` back to the cube: drops `x_n`, then sets
/// `y_i = ceil(s_i) - s_i` with `s_i = x_i + ... + x_{n-1}`. The result lies
/// in `[0,1)^{n-1}`.
pub fn phi_inverse_point(x: &[BigRational]) -> Result<Vec<BigRational>> {
    Ok(tails(x)?.iter().map(|s| s.ceil() - s).collect())
}

/// Same as [`phi_inverse_point`] but with `y_i = 1 + floor(s_i) - s_i` in `(0,1]`.
pub fn phi_inverse_point_upper(x: &[BigRational]) -> Result<Vec<BigRational>> {
    Ok(tails(x)?
        .iter()
        .map(|s| BigRational::one() + s.floor() - s)
        .collect())
}

/// The forward map on `[0,1]^{n-1}`: `x_{n-1} = 1 - y_{n-1}` and
/// `x_i = y_{i+1} - y_i`, plus one when negative.
pub fn phi_point(y: &[BigRational]) -> Vec<BigRational> {
    let m = y.len();
    (0..m)
        .map(|i| {
            if i + 1 == m {
                BigRational::one() - &y[i]
            } else {
                let d = &y[i + 1] - &y[i];
                if d < BigRational::default() {
                    d + BigRational::one()
                } else {
                    d
                }
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::TriangulationLabel;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn integer_points_go_to_zero() {
        let z = vec![q(0, 1); 5];
        assert_eq!(phi_inverse_point(&z).unwrap(), vec![q(0, 1); 4]);
        let v: Vec<BigRational> = [1, 1, 0, 1, 0].iter().map(|&a| q(a, 1)).collect();
        assert_eq!(phi_inverse_point(&v).unwrap(), vec![q(0, 1); 4]);
    }

    /// Random interior points of the simplex of `32415` satisfy
    /// `y_3 < y_2 < y_4 < y_1`, and `phi` undoes the pullback.
    #[test]
    fn interior_points_of_32415() {
        let l = TriangulationLabel::new("32415".parse().unwrap()).unwrap();
        let verts = l.simplex_vertices();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let w: Vec<i64> = (0..5).map(|_| rng.gen_range(1..20)).collect();
            let total: i64 = w.iter().sum();
            let x: Vec<BigRational> = (0..5)
                .map(|c| {
                    verts
                        .iter()
                        .zip(&w)
                        .map(|(v, &wt)| q(wt * i64::from(v[c]), total))
                        .sum()
                })
                .collect();
            let y = phi_inverse_point(&x).unwrap();
            assert!(y[2] < y[1] && y[1] < y[3] && y[3] < y[0], "{y:?}");
            assert!(y[0] < q(1, 1) && y[2] > q(0, 1));
            assert_eq!(phi_point(&y), x[..4].to_vec());
        }
    }
}
