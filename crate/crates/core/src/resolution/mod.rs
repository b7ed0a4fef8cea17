//! Graded free resolutions over the ambient ring A and over B = A/(f),
//! dualization over A, regular sequences, Betti tables and quasi-polynomial
//! fitting of Betti sequences.

mod build;
mod dual;
mod quasi;

use std::fmt;
use std::sync::Arc;

pub use build::{betti_with_fit, minimal_presentation, resolve, resolve_over_b};
pub use dual::{dual_module_presentation, dualize_over_a};
pub use quasi::{fit_quasi_polynomial, QuasiPoly};

use crate::arith::{Bideg, Field, Poly, PolyMatrix, PolyRing};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, LinearSystem};

/// The ambient ring A with the complete intersection generators f.
#[derive(Clone, Debug)]
pub struct RingData {
    ring: Arc<PolyRing>,
    ci: Vec<Poly>,
    operators: Arc<PolyRing>,
}

impl RingData {
    /// Validates that each `f_i` is a nonzero homogeneous element of the
    /// irrelevant ideal.
    pub fn new(ring: &Arc<PolyRing>, ci: Vec<Poly>) -> Result<RingData> {
        if ci.is_empty() {
            return Err(Error::Invalid("at least one ci generator is required".into()));
        }
        let mut degrees = Vec::with_capacity(ci.len());
        for (i, f) in ci.iter().enumerate() {
            if f.is_zero() || !f.constant_term().is_zero() {
                return Err(Error::Invalid(format!("f{} = {f} is not in the irrelevant ideal", i + 1)));
            }
            let b = f.bideg().ok_or_else(|| Error::Inhomogeneous {
                what: format!("ci generator f{}", i + 1),
                detail: f.to_string(),
            })?;
            degrees.push(b.int);
        }
        let operators = PolyRing::operators(ring.field(), &degrees);
        Ok(RingData { ring: ring.clone(), ci, operators })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn ci(&self) -> &[Poly] {
        &self.ci
    }

    /// Codimension c, the number of ci generators.
    pub fn c(&self) -> usize {
        self.ci.len()
    }

    /// Number of variables of A.
    pub fn n(&self) -> usize {
        self.ring.nvars()
    }

    /// Internal degrees of the ci generators.
    pub fn ci_degrees(&self) -> Vec<i64> {
        self.ci.iter().map(|f| f.bideg().expect("validated").int).collect()
    }

    /// The ring S = k[χ_1..χ_c] of cohomology operators.
    pub fn operators(&self) -> &Arc<PolyRing> {
        &self.operators
    }

    /// Whether f is an A-regular sequence, i.e. dim A/(f) = n − c.
    pub fn is_regular_sequence(&self) -> bool {
        Ideal::new(&self.ring, self.ci.clone()).dimension() == self.n() as i64 - self.c() as i64
    }
}

/// An explicit finite complex of free A-modules with optional strict
/// B-action.
#[derive(Clone, Debug)]
pub struct DgComplex {
    /// `differentials[k]` is d_{k+1}: F_{k+1} → F_k.
    pub differentials: Vec<PolyMatrix>,
    /// `actions[i][k]` is e_{i+1} restricted to F_k → F_{k+1}.
    pub actions: Vec<Vec<PolyMatrix>>,
}

/// A module given by a presentation matrix (M = coker, rows are the
/// generators) or a dg module given by an explicit complex.
#[derive(Clone, Debug)]
pub enum ModuleInput {
    Presentation(PolyMatrix),
    Complex(DgComplex),
}

/// A bounded complex of graded free modules
/// `F_{start+len} → … → F_{start}`.
#[derive(Clone)]
pub struct FreeResolution {
    ring: Arc<PolyRing>,
    start: i64,
    degrees: Vec<Vec<Bideg>>,
    maps: Vec<PolyMatrix>,
    quotient: Vec<Poly>,
    truncated_at: Option<usize>,
}

impl FreeResolution {
    /// Assembles a complex from its maps; `f0` holds the degrees of the
    /// lowest module and each map must have rows matching the previous
    /// map's columns.
    pub fn from_maps(
        ring: &Arc<PolyRing>,
        start: i64,
        f0: Vec<Bideg>,
        maps: Vec<PolyMatrix>,
        quotient: Vec<Poly>,
        truncated_at: Option<usize>,
    ) -> Result<FreeResolution> {
        let mut degrees = vec![f0];
        for (k, d) in maps.iter().enumerate() {
            if d.row_degrees() != degrees[k].as_slice() {
                return Err(Error::Invalid(format!("map {} does not compose with map {}", k + 1, k)));
            }
            d.check_homogeneous()?;
            degrees.push(d.col_degrees().to_vec());
        }
        Ok(FreeResolution { ring: ring.clone(), start, degrees, maps, quotient, truncated_at })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// Homological index of the lowest module.
    pub fn start(&self) -> i64 {
        self.start
    }

    /// Number of maps.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Generator degrees of the module at position `k` (index `start + k`).
    pub fn degrees(&self, k: usize) -> &[Bideg] {
        &self.degrees[k]
    }

    pub fn all_degrees(&self) -> &[Vec<Bideg>] {
        &self.degrees
    }

    /// The map from position `k` to position `k - 1`, for `k ≥ 1`.
    pub fn map(&self, k: usize) -> &PolyMatrix {
        &self.maps[k - 1]
    }

    pub fn maps(&self) -> &[PolyMatrix] {
        &self.maps
    }

    /// The ideal the complex lives over (empty for A).
    pub fn quotient(&self) -> &[Poly] {
        &self.quotient
    }

    pub fn truncated_at(&self) -> Option<usize> {
        self.truncated_at
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable { betti: self.degrees.iter().map(|d| d.len()).collect(), start: self.start }
    }

    pub fn total_rank(&self) -> usize {
        self.degrees.iter().map(|d| d.len()).sum()
    }

    /// Whether every entry of every map lies in the irrelevant ideal.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|d| d.is_minimal())
    }

    /// Checks `d ∘ d = 0` modulo the quotient ideal.
    pub fn check_complex(&self) -> Result<()> {
        let ideal = Ideal::new(&self.ring, self.quotient.clone());
        for k in 1..self.maps.len() {
            let dd = self.maps[k - 1].checked_mul(&self.maps[k])?;
            if let Some(((i, j), p)) = dd.entries().find(|(_, p)| !ideal.contains(p)) {
                return Err(Error::Internal(format!(
                    "d{}∘d{} has nonzero entry {p} at ({}, {})",
                    k,
                    k + 1,
                    i + 1,
                    j + 1
                )));
            };
        }
        Ok(())
    }

    /// Checks that each `f_i` annihilates `H_0`, i.e. `f_i e_j` lies in the
    /// image of the first map for every generator `e_j`.
    pub fn check_annihilated(&self, ci: &[Poly]) -> Result<()> {
        let n0 = self.degrees[0].len();
        if self.maps.is_empty() {
            return if n0 == 0 { Ok(()) } else { Err(Error::NotAnnihilated { index: 1 }) };
        }
        let sys = LinearSystem::new(&self.maps[0], &self.quotient)?;
        for (i, f) in ci.iter().enumerate() {
            for j in 0..n0 {
                if !sys.in_image(&[(j, f.clone())]) {
                    return Err(Error::NotAnnihilated { index: i + 1 });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeResolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeResolution(start {}, betti {:?})", self.start, self.betti().betti)
    }
}

/// Ranks of the modules of a resolution, from index `start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub betti: Vec<usize>,
    pub start: i64,
}

impl BettiTable {
    pub fn get(&self, i: i64) -> usize {
        usize::try_from(i - self.start).ok().and_then(|k| self.betti.get(k).copied()).unwrap_or(0)
    }
}
