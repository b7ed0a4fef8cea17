use super::report::{jump_loci_report, JumpLociReport};
use crate::arith::ring::same_ring;
use crate::arith::PolyMatrix;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::homotopy::{compute_higher_homotopies, dualize_homotopies, ingest_dg_structure, HomotopySystem};
use crate::resolution::{dual_module_presentation, resolve, ModuleInput, RingData};
use crate::twisted::{build_twisted_complex, TwistedComplex};

/// The full pipeline for one module: its A-resolution with homotopies and
/// the minimal twisted complex.
#[derive(Clone, Debug)]
pub struct Model {
    ring: RingData,
    presentation: Option<PolyMatrix>,
    system: HomotopySystem,
    twisted: TwistedComplex,
}

impl Model {
    /// Presentations are resolved over A and given higher homotopies;
    /// explicit complexes are taken with their strict dg structure.
    pub fn build(ring: &RingData, input: &ModuleInput) -> Result<Model> {
        let (presentation, system) = match input {
            ModuleInput::Presentation(p) => {
                let f = resolve(p, &[], None)?;
                (Some(p.clone()), compute_higher_homotopies(&f, ring)?)
            }
            ModuleInput::Complex(dg) => (None, ingest_dg_structure(dg, ring)?),
        };
        Model::from_system(ring, presentation, system)
    }

    fn from_system(ring: &RingData, presentation: Option<PolyMatrix>, system: HomotopySystem) -> Result<Model> {
        let twisted = build_twisted_complex(&system, ring)?.minimalize();
        Ok(Model { ring: ring.clone(), presentation, system, twisted })
    }

    pub fn ring(&self) -> &RingData {
        &self.ring
    }

    pub fn presentation(&self) -> Option<&PolyMatrix> {
        self.presentation.as_ref()
    }

    pub fn system(&self) -> &HomotopySystem {
        &self.system
    }

    /// The minimal twisted complex.
    pub fn twisted(&self) -> &TwistedComplex {
        &self.twisted
    }

    /// The dual pipeline through `Hom_A(F, A)` with transposed homotopies.
    /// It carries a module presentation of M* when the A-resolution has
    /// length c.
    pub fn dual(&self) -> Result<Model> {
        let system = dualize_homotopies(&self.system, &self.ring)?;
        let presentation = match &self.presentation {
            Some(_) if self.system.complex().length() == self.ring.c() => {
                Some(dual_module_presentation(self.system.complex(), &self.ring)?)
            }
            _ => None,
        };
        Model::from_system(&self.ring, presentation, system)
    }

    /// M* resolved afresh from its presentation, when one is available.
    pub fn dual_reresolved(&self) -> Result<Option<Model>> {
        let Some(p) = self.dual()?.presentation else {
            return Ok(None);
        };
        Model::build(&self.ring, &ModuleInput::Presentation(p)).map(Some)
    }

    pub fn report(&self, seed: u64) -> Result<JumpLociReport> {
        jump_loci_report(&self.twisted, seed)
    }

    /// The Bass degree, computed as the Betti degree of the dual pipeline;
    /// `None` in complexity 0.
    pub fn bass_degree(&self, seed: u64) -> Result<Option<u64>> {
        Ok(self.dual()?.report(seed)?.betti_degree)
    }
}

#[derive(Clone, Debug)]
pub struct DualityReport {
    /// Whether `V^i(M) = V^i(M*)` for `i = 0 ..= r + 1`.
    pub per_index_equal: Vec<bool>,
    pub bdeg_equal: bool,
    pub report: JumpLociReport,
    pub dual_report: JumpLociReport,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.bdeg_equal && self.per_index_equal.iter().all(|&b| b)
    }
}

fn same_loci(a: &JumpLociReport, b: &JumpLociReport) -> Option<usize> {
    (0..=a.rank.max(b.rank) + 1).find(|&i| !a.locus(i).variety_equal(b.locus(i)))
}

fn agree(what: &str, a: &JumpLociReport, b: &JumpLociReport) -> Result<()> {
    if let Some(i) = same_loci(a, b) {
        return Err(Error::RouteDisagreement(format!("{what}: V^{i} differs")));
    }
    if a.betti_degree != b.betti_degree {
        return Err(Error::RouteDisagreement(format!(
            "{what}: Betti degrees {:?} and {:?}",
            a.betti_degree, b.betti_degree
        )));
    }
    Ok(())
}

/// Compares the jump loci and Betti degrees of M and M*. The dual is built
/// explicitly and checked against the S-dual of X(M) and, when M* is a
/// module, against a fresh resolution of M*.
pub fn duality_check(model: &Model, seed: u64) -> Result<DualityReport> {
    let report = model.report(seed)?;
    let dual = model.dual()?;
    let dual_report = dual.report(seed)?;
    let fast = jump_loci_report(&model.twisted.s_dual(), seed)?;
    agree("S-dual and explicit dual", &fast, &dual_report)?;
    if let Some(p) = dual.presentation() {
        let again = Model::build(model.ring(), &ModuleInput::Presentation(p.clone()))?;
        agree("re-resolved and explicit dual", &again.report(seed)?, &dual_report)?;
    }
    let per_index_equal = (0..=report.rank.max(dual_report.rank) + 1)
        .map(|i| report.locus(i).variety_equal(dual_report.locus(i)))
        .collect();
    let bdeg_equal = report.betti_degree == dual_report.betti_degree;
    Ok(DualityReport { per_index_equal, bdeg_equal, report, dual_report })
}

/// Checks `V^l(X ⊕ Y) = ∪_{i+j=l} V^i(X) ∩ V^j(Y)` for `l = 0 ..= r + 1`,
/// with `r` the rank of the minimal model of `X ⊕ Y`.
pub fn additivity_check(x: &TwistedComplex, y: &TwistedComplex, seed: u64) -> Result<bool> {
    if !same_ring(x.ring(), y.ring()) {
        return Err(Error::RingMismatch);
    }
    let (rx, ry) = (jump_loci_report(x, seed)?, jump_loci_report(y, seed)?);
    let sum = jump_loci_report(&x.direct_sum(y), seed)?;
    let s = x.ring();
    for l in 0..=sum.rank + 1 {
        let mut pieces: Vec<Ideal> = Vec::new();
        for i in 0..=l.min(rx.rank) {
            let piece = rx.locus(i).sum(ry.locus(l - i));
            if piece.is_unit() || pieces.iter().any(|p| piece.variety_contained_in(p)) {
                continue;
            }
            pieces.retain(|p| !p.variety_contained_in(&piece));
            pieces.push(piece);
        }
        let union = pieces.iter().fold(None::<Ideal>, |acc, p| Some(acc.map_or_else(|| p.clone(), |a| a.product(p))));
        let union = union.unwrap_or_else(|| Ideal::unit(s));
        if !union.variety_equal(sum.locus(l)) {
            return Ok(false);
        }
    }
    Ok(true)
}
