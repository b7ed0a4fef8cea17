//! Exact coefficients, polynomials, sparse polynomial matrices and minors.

pub mod field;
pub mod matrix;
pub mod minors;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;

pub use field::{Field, Scalar};
pub use matrix::{PolyMatrix, ScalarMatrix};
pub use minors::minors_ideal;
pub use monomial::{Monomial, MAX_VARS};
pub use poly::Poly;
pub use ring::{Bideg, PolyRing, RingKind};
