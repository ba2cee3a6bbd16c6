//! Fraction-free (Bareiss) elimination: determinant and rank.
//!
//! Every intermediate entry is a minor of the input, so the division by the
//! previous pivot is exact over any integral domain.

use super::Matrix;
use crate::scalar::Ring;

/// Exact determinant. Panics if `m` is not square.
pub fn det<T: Ring>(m: &Matrix<T>) -> T {
    let n = m.ensure_square().expect("det of a non-square matrix");
    if n == 0 {
        return T::one();
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(i, k);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a[(i, j)].clone() * pivot.clone() - a[(i, k)].clone() * a[(k, j)].clone())
                    / prev.clone();
                a[(i, j)] = v;
            }
            a[(i, k)] = T::zero();
        }
        prev = pivot;
    }
    let d = a[(n - 1, n - 1)].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Exact rank of a rectangular matrix.
pub fn rank<T: Ring>(m: &Matrix<T>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut r = 0;
    let mut prev = T::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let pivot = a[(r, c)].clone();
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (a[(i, j)].clone() * pivot.clone() - a[(i, c)].clone() * a[(r, j)].clone())
                    / prev.clone();
                a[(i, j)] = v;
            }
            a[(i, c)] = T::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}
