//! Small exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type Matrix = Vec<Vec<BigRational>>;

pub(crate) fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Row-reduces in place and returns the rank.
fn row_reduce(m: &mut Matrix) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = BigRational::one() / &m[rank][c];
        for x in m[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Dimension of the affine hull of integer points (`-1` is reported as `None`
/// for the empty set).
pub(crate) fn affine_dimension(points: &[Vec<i64>]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let mut m: Matrix = rest
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| q(a - b)).collect())
        .collect();
    Some(row_reduce(&mut m))
}

/// Inverse of a square matrix, or `None` when singular.
pub(crate) fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    // reduce only over the left block
    for c in 0..n {
        let p = (c..n).find(|&r| !aug[r][c].is_zero())?;
        aug.swap(c, p);
        let inv = BigRational::one() / &aug[c][c];
        for x in aug[c].iter_mut() {
            *x *= &inv;
        }
        let pivot = aug[c].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Determinant by elimination.
pub(crate) fn determinant(m: &Matrix) -> BigRational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(c, p);
            det = -det;
        }
        det *= &a[c][c];
        let pivot = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            if !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, p) in row.iter_mut().zip(&pivot).skip(c) {
                    *x -= &f * p;
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn basics() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        assert_eq!(determinant(&m), q(1));
        assert_eq!(inverse(&m).unwrap(), mat(&[&[1, -1], &[-1, 2]]));
        assert!(inverse(&mat(&[&[1, 2], &[2, 4]])).is_none());
        assert_eq!(determinant(&mat(&[&[0, 1], &[1, 0]])), q(-1));
        let pts = vec![vec![1, 1, 0, 0], vec![1, 0, 1, 0], vec![0, 1, 1, 0], vec![2, 0, 0, 0]];
        assert_eq!(affine_dimension(&pts), Some(2));
        assert_eq!(affine_dimension(&[]), None);
        assert_eq!(affine_dimension(&[vec![3, 4]]), Some(0));
    }
}
