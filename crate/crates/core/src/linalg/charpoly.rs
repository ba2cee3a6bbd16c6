use num_traits::Zero;

use super::{det, Matrix, Polynomial};
use crate::scalar::Ring;

/// Characteristic polynomial `det(xI - m)`, monic, by the Faddeev-LeVerrier
/// recurrence. Over the integers every division by `k` is exact because the
/// coefficients are themselves integers.
///
/// The constant term is cross-checked against an independent Bareiss
/// determinant: `a_n = (-1)^n det(m)`.
pub fn char_poly<T: Ring>(m: &Matrix<T>) -> Polynomial<T> {
    let n = m.ensure_square().expect("char_poly of a non-square matrix");
    // coeffs[k] is a_k in x^n + a_1 x^{n-1} + ... + a_n
    let mut a = vec![T::one()];
    let mut n_k = Matrix::identity(n);
    let mut kk = T::zero();
    for _ in 1..=n {
        kk = kk + T::one();
        let mn = m * &n_k;
        let a_k = -(mn.trace() / kk.clone());
        n_k = &mn + &Matrix::scalar(n, a_k.clone());
        a.push(a_k);
    }
    debug_assert!(n_k.is_zero() || n == 0, "Cayley-Hamilton residual");
    let d = det(m);
    let expected = if n.is_multiple_of(2) { d } else { -d };
    assert_eq!(a[n], expected, "constant term disagrees with determinant");
    a.reverse();
    Polynomial::new(a)
}

/// True iff `p(m)` is the zero matrix.
pub fn annihilates<T: Ring>(p: &Polynomial<T>, m: &Matrix<T>) -> bool {
    p.eval_matrix(m).entries().all(Zero::is_zero)
}
