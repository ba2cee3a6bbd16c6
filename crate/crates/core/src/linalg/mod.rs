//! Exact integer and rational linear algebra, generic over the scalar.

mod charpoly;
mod elimination;
mod hnf;
mod inverse;
mod krylov;
mod matrix;
mod poly;
mod stability;

pub use charpoly::{annihilates, char_poly};
pub use elimination::{det, rank};
pub use hnf::{hnf_unimodular, EchelonForm};
pub use inverse::{inverse, inverse_field, inverse_unimodular};
pub use krylov::{descending_krylov_matrix, krylov, powers, Krylov};
pub use matrix::{dot, Matrix};
pub use poly::Polynomial;
pub use stability::{is_expanding, roots_inside_unit_disk};
