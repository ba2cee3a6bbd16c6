//! Unimodular row reduction of a full-column-rank integer matrix to upper
//! echelon shape.


use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::IntScalar;

/// Result of [`hnf_unimodular`]: `transform * input == echelon`.
#[derive(Clone, Debug, PartialEq)]
pub struct EchelonForm<T> {
    /// Unimodular `n x n` transform.
    pub transform: Matrix<T>,
    /// `n x r`, upper triangular with nonzero diagonal in the top `r x r`
    /// block and zero rows below it.
    pub echelon: Matrix<T>,
}

/// Row-reduces an `n x r` integer matrix of full column rank.
///
/// Columns are processed left to right. In each column the nonzero entry of
/// least absolute value at or below the diagonal becomes the pivot (lowest
/// row index on ties); every row beneath is then cleared against it, by a
/// plain subtraction when the pivot divides the entry and by an extended-gcd
/// 2x2 unimodular combination otherwise (which may shrink the pivot to the
/// gcd).
pub fn hnf_unimodular<T: IntScalar>(a: &Matrix<T>) -> Result<EchelonForm<T>> {
    let n = a.rows();
    let r = a.cols();
    let mut h = a.clone();
    let mut b = Matrix::<T>::identity(n);
    for col in 0..r {
        if col >= n {
            return Err(Error::RankDeficient);
        }
        let mut best: Option<usize> = None;
        for i in col..n {
            if !h[(i, col)].is_zero()
                && best.is_none_or(|p| h[(i, col)].abs() < h[(p, col)].abs())
            {
                best = Some(i);
            }
        }
        let Some(p) = best else {
            return Err(Error::RankDeficient);
        };
        h.swap_rows(p, col);
        b.swap_rows(p, col);
        for i in col + 1..n {
            let entry = h[(i, col)].clone();
            if entry.is_zero() {
                continue;
            }
            let pivot = h[(col, col)].clone();
            if entry.is_multiple_of(&pivot) {
                let f = entry / pivot;
                add_row_multiple(&mut h, i, col, &-f.clone());
                add_row_multiple(&mut b, i, col, &-f);
            } else {
                let eg = pivot.extended_gcd(&entry);
                // [s t; -e/g p/g] has determinant (s p + t e) / g = 1
                let (s, t) = (eg.x, eg.y);
                let (u, w) = (-(entry / eg.gcd.clone()), pivot / eg.gcd);
                combine_rows(&mut h, col, i, [&s, &t, &u, &w]);
                combine_rows(&mut b, col, i, [&s, &t, &u, &w]);
            }
        }
    }
    debug_assert!((0..r).all(|j| (j + 1..n).all(|i| h[(i, j)].is_zero())));
    Ok(EchelonForm { transform: b, echelon: h })
}

fn add_row_multiple<T: IntScalar>(m: &mut Matrix<T>, target: usize, source: usize, f: &T) {
    for j in 0..m.cols() {
        let v = m[(target, j)].clone() + f.clone() * m[(source, j)].clone();
        m[(target, j)] = v;
    }
}

/// rows (a, b) <- (c0 a + c1 b, c2 a + c3 b)
fn combine_rows<T: IntScalar>(m: &mut Matrix<T>, a: usize, b: usize, c: [&T; 4]) {
    for j in 0..m.cols() {
        let x = m[(a, j)].clone();
        let y = m[(b, j)].clone();
        m[(a, j)] = c[0].clone() * x.clone() + c[1].clone() * y.clone();
        m[(b, j)] = c[2].clone() * x + c[3].clone() * y;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::det;

    fn col(v: &[i64]) -> Matrix<i64> {
        Matrix::from_columns(v.len(), &[v.to_vec()]).unwrap()
    }

    #[test]
    fn eigenvector_column() {
        let e = hnf_unimodular(&col(&[1, 1, 2])).unwrap();
        assert_eq!(e.transform.to_rows(), vec![vec![1, 0, 0], vec![-1, 1, 0], vec![-2, 0, 1]]);
        assert_eq!(e.echelon.column(0), vec![1, 0, 0]);
    }

    #[test]
    fn identity_is_fixed() {
        let e = hnf_unimodular(&Matrix::<i64>::identity(2)).unwrap();
        assert!(e.transform.is_identity());
        assert!(e.echelon.is_identity());
    }

    #[test]
    fn single_swap() {
        let e = hnf_unimodular(&col(&[0, 0, 5])).unwrap();
        assert_eq!(e.echelon.column(0), vec![5, 0, 0]);
        assert_eq!(e.transform.to_rows(), vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn coprime_entries_need_gcd_step() {
        let a = col(&[6, 10, 15]);
        let e = hnf_unimodular(&a).unwrap();
        assert_eq!(det(&e.transform).abs(), 1);
        assert_eq!(&e.transform * &a, e.echelon);
        assert_eq!(e.echelon[(0, 0)].abs(), 1);
        assert_eq!(e.echelon[(1, 0)], 0);
        assert_eq!(e.echelon[(2, 0)], 0);
    }

    #[test]
    fn dependent_columns_rejected() {
        let a = Matrix::from_rows(vec![vec![1i64, 2], vec![2, 4], vec![3, 6]]).unwrap();
        assert_eq!(hnf_unimodular(&a), Err(Error::RankDeficient));
        let wide = Matrix::from_rows(vec![vec![1i64, 0, 0], vec![0, 1, 0]]).unwrap();
        assert_eq!(hnf_unimodular(&wide), Err(Error::RankDeficient));
    }
}
