//! Exact test that every eigenvalue of an integer matrix lies strictly
//! outside the unit circle.


use super::{char_poly, Matrix, Polynomial};
use crate::scalar::IntScalar;

/// True iff all eigenvalues of `m` have modulus strictly greater than one.
///
/// The eigenvalues of `m` are the reciprocals of the roots of the reversed
/// characteristic polynomial, so the question becomes whether that
/// polynomial has all its roots in the open unit disk, which
/// [`roots_inside_unit_disk`] decides with integer arithmetic only.
pub fn is_expanding<T: IntScalar>(m: &Matrix<T>) -> bool {
    let f = char_poly(m);
    if f.coeff(0).is_zero() {
        return false;
    }
    let mut rev = f.coeffs().to_vec();
    rev.reverse();
    roots_inside_unit_disk(&Polynomial::new(rev))
}

/// Schur-Cohn recursion for a real polynomial `p` of degree `d`:
/// all roots lie in `|z| < 1` iff `|p_0| < |p_d|` and the degree-`(d-1)`
/// polynomial `(p_d p(z) - p_0 p*(z)) / z` has the same property, where
/// `p*` is `p` with its coefficients reversed.
pub fn roots_inside_unit_disk<T: IntScalar>(p: &Polynomial<T>) -> bool {
    if p.is_zero() {
        return false;
    }
    let mut c = p.coeffs().to_vec();
    while c.len() > 1 {
        let d = c.len() - 1;
        let (lo, hi) = (c[0].clone(), c[d].clone());
        if lo.abs() >= hi.abs() {
            return false;
        }
        let mut next: Vec<T> = (0..d)
            .map(|k| hi.clone() * c[k + 1].clone() - lo.clone() * c[d - 1 - k].clone())
            .collect();
        let g = next.iter().fold(T::zero(), |g, x| g.gcd(x));
        if !g.is_zero() {
            for x in &mut next {
                *x = x.clone() / g.clone();
            }
        }
        c = next;
    }
    true
}
