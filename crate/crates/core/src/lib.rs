//! Cohomological jump loci of modules over graded complete intersections.
//!
//! The pipeline resolves a module over the ambient polynomial ring, builds a
//! system of higher homotopies for the defining regular sequence, assembles
//! the twisted complex over the ring of cohomology operators and reads jump
//! loci, complexity and Betti degree off determinantal ideals and Hilbert
//! series.

pub mod arith;
pub mod error;
pub mod groebner;
pub mod homotopy;
pub mod jumploci;
pub mod resolution;
pub mod samples;
pub mod twisted;

pub use arith::{Bideg, Field, Monomial, Poly, PolyMatrix, PolyRing, RingKind, Scalar, ScalarMatrix};
pub use error::{Error, Result};
