//! Cohomological ranks, jump loci, complexity, Betti and Bass degrees,
//! duality and additivity checks, realizability, and the hypersurface
//! point oracle.

mod loci;
mod model;
mod oracle;
mod realize;
mod report;

pub use loci::{crk_at, crk_generic, generic_rank, jump_locus_ideal, jump_locus_via_exterior_power, minor_ideals, rank_threshold};
pub use model::{additivity_check, duality_check, DualityReport, Model};
pub use oracle::stable_betti_oracle;
pub use realize::{realize, Realization};
pub use report::{betti_degree, complexity_of, jump_loci_report, JumpLociReport, Plateau};
