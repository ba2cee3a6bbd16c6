use num_traits::Zero;

use super::{rank, Matrix};
use crate::error::{Error, Result};
use crate::scalar::Ring;

/// The Krylov sequence of a square matrix and a starting vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Krylov<T> {
    /// `[v, Mv, ..., M^{n-1} v]`
    pub vectors: Vec<Vec<T>>,
    pub rank: usize,
}

pub fn krylov<T: Ring>(m: &Matrix<T>, v: &[T]) -> Result<Krylov<T>> {
    let n = m.ensure_square()?;
    if v.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} for a {n}x{n} matrix",
            v.len()
        )));
    }
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let vectors = powers(m, v, n);
    let r = rank(&Matrix::from_columns(n, &vectors)?);
    Ok(Krylov { vectors, rank: r })
}

/// `[v, Mv, ..., M^{count-1} v]`
pub fn powers<T: Ring>(m: &Matrix<T>, v: &[T], count: usize) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = Vec::with_capacity(count);
    for k in 0..count {
        let next = if k == 0 { v.to_vec() } else { m.mul_vec(&out[k - 1]) };
        out.push(next);
    }
    out
}

/// `[M^{r-1} v, ..., Mv, v]` as columns, the descending order used by both
/// conjugations.
pub fn descending_krylov_matrix<T: Ring>(m: &Matrix<T>, v: &[T], r: usize) -> Matrix<T> {
    let mut cols = powers(m, v, r);
    cols.reverse();
    Matrix::from_columns(m.rows(), &cols).expect("columns have matrix height")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<i64> {
        Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn eigenvector_has_rank_one() {
        let a = m(vec![vec![1, -3, 3], vec![3, -5, 3], vec![6, -6, 4]]);
        let k = krylov(&a, &[1, 1, 2]).unwrap();
        assert_eq!(k.vectors[1], vec![4, 4, 8]);
        assert_eq!(k.rank, 1);
    }

    #[test]
    fn full_rank_example() {
        let a = m(vec![vec![2, 6, 4], vec![-1, 2, 2], vec![-1, -1, -4]]);
        let k = krylov(&a, &[0, 0, 1]).unwrap();
        assert_eq!(k.rank, 3);
        assert_eq!(k.vectors, vec![vec![0, 0, 1], vec![4, 2, -4], vec![4, -8, 10]]);
    }

    #[test]
    fn identity_and_errors() {
        assert_eq!(krylov(&Matrix::<i64>::identity(3), &[5, -1, 2]).unwrap().rank, 1);
        assert_eq!(krylov(&Matrix::<i64>::identity(2), &[0, 0]), Err(Error::ZeroVector));
        assert!(matches!(
            krylov(&Matrix::<i64>::identity(2), &[1]),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
