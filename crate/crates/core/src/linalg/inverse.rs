
use super::{det, Matrix};
use crate::error::{Error, Result};
use crate::scalar::{Frac, IntScalar, Ring};

/// Gauss-Jordan inverse over a field.
pub fn inverse_field<F: Ring>(m: &Matrix<F>) -> Result<Matrix<F>> {
    let n = m.ensure_square()?;
    let mut a = m.clone();
    let mut inv = Matrix::<F>::identity(n);
    for c in 0..n {
        let p = (c..n).find(|&i| !a[(i, c)].is_zero()).ok_or(Error::Singular)?;
        a.swap_rows(p, c);
        inv.swap_rows(p, c);
        let piv = a[(c, c)].clone();
        for j in 0..n {
            a[(c, j)] = a[(c, j)].clone() / piv.clone();
            inv[(c, j)] = inv[(c, j)].clone() / piv.clone();
        }
        for i in 0..n {
            if i == c || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in 0..n {
                a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(c, j)].clone();
                inv[(i, j)] = inv[(i, j)].clone() - f.clone() * inv[(c, j)].clone();
            }
        }
    }
    Ok(inv)
}

/// Exact rational inverse of an integer matrix.
pub fn inverse<T: IntScalar>(m: &Matrix<T>) -> Result<Matrix<Frac<T>>> {
    inverse_field(&m.to_rational())
}

/// Integer inverse of a unimodular matrix.
pub fn inverse_unimodular<T: IntScalar>(m: &Matrix<T>) -> Result<Matrix<T>> {
    m.ensure_square()?;
    let d = det(m);
    if d.is_zero() {
        return Err(Error::Singular);
    }
    if !d.abs().is_one() {
        return Err(Error::NotUnimodular(d.to_string()));
    }
    inverse(m)?
        .to_integer()
        .ok_or_else(|| Error::Internal("unimodular inverse has fractional entries".into()))
}
