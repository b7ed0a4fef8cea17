use super::loci::{generic_rank, minor_ideals, rank_threshold};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::twisted::{CohomologyHilbert, TwistedComplex};

/// A maximal run `i_from ..= i_to` of indices with the same jump locus.
#[derive(Clone, Debug)]
pub struct Plateau {
    pub i_from: usize,
    pub i_to: usize,
    /// Canonical (reduced Gröbner basis) generators of an ideal cutting out
    /// the locus; unit for the empty locus.
    pub ideal: Ideal,
    pub dim: i64,
}

#[derive(Clone, Debug)]
pub struct JumpLociReport {
    /// Rank of the minimal model, the total Betti number.
    pub rank: usize,
    pub crk_generic: usize,
    /// Last index of each nonempty plateau.
    pub jump_numbers: Vec<usize>,
    /// Plateaus for `i = 0 ..= rank`, then the empty locus at `rank + 1`.
    pub loci: Vec<Plateau>,
    pub complexity: usize,
    pub betti_degree: Option<u64>,
}

impl JumpLociReport {
    /// The ideal of the plateau containing `i` (the empty locus beyond the
    /// last plateau).
    pub fn locus(&self, i: usize) -> &Ideal {
        let last = self.loci.last().expect("at least the empty plateau");
        self.loci.iter().find(|p| p.i_from <= i && i <= p.i_to).map_or(&last.ideal, |p| &p.ideal)
    }
}

/// Ideals for `V^0 ..= V^{r+1}` of a minimal complex, one per distinct
/// minor size.
fn loci_ideals(x: &TwistedComplex, grank: usize) -> Vec<Ideal> {
    let r = x.rank();
    let tmax = rank_threshold(r, 1).min(grank);
    let minors = if tmax > 0 { minor_ideals(x.differential(), tmax) } else { Vec::new() };
    (0..=r + 1)
        .map(|i| {
            let t = rank_threshold(r, i);
            if i == 0 || t > grank {
                Ideal::zero(x.ring())
            } else if t == 0 {
                Ideal::unit(x.ring())
            } else {
                minors[t - 1].clone()
            }
        })
        .collect()
}

fn plateaus(ideals: Vec<Ideal>) -> Vec<Plateau> {
    let mut out: Vec<Plateau> = Vec::new();
    for (i, ideal) in ideals.into_iter().enumerate() {
        if let Some(last) = out.last_mut() {
            if last.ideal.gens() == ideal.gens() || last.ideal.variety_equal(&ideal) {
                last.i_to = i;
                continue;
            }
        }
        let ideal = ideal.canonical();
        let dim = ideal.dimension();
        out.push(Plateau { i_from: i, i_to: i, ideal, dim });
    }
    out
}

/// Complexity: the Krull dimension of `H(X)` over S.
pub fn complexity_of(x: &TwistedComplex) -> Result<usize> {
    Ok(x.homology_hilbert()?.dimension.max(0) as usize)
}

fn degree_from(h: &CohomologyHilbert) -> Result<u64> {
    let cx = h.total.dimension;
    if cx <= 0 {
        return Err(Error::Undefined("the Betti degree"));
    }
    let (even, odd) = (&h.even, &h.odd);
    if even.dimension != cx || odd.dimension != cx || even.multiplicity != odd.multiplicity {
        return Err(Error::Internal(format!(
            "even and odd parts of the cohomology disagree: dimensions {} and {}, multiplicities {:?} and {:?}",
            even.dimension, odd.dimension, even.multiplicity, odd.multiplicity
        )));
    }
    Ok(even.multiplicity.expect("nonzero module"))
}

/// Betti degree: the multiplicity of the even part of `H(X)` with χ in
/// degree 1, required to agree with that of the odd part.
pub fn betti_degree(x: &TwistedComplex) -> Result<u64> {
    degree_from(&x.cohomology_hilbert()?)
}

/// Minimalizes `x` and assembles ranks, jump loci, complexity and Betti
/// degree, with the cross-checks `cx = dim V^1` and, when `cx = c`,
/// `2 bdeg = crk` at the generic point.
pub fn jump_loci_report(x: &TwistedComplex, seed: u64) -> Result<JumpLociReport> {
    let x = x.minimalize();
    let r = x.rank();
    let grank = generic_rank(&x, seed)?;
    let crk_generic = r - 2 * grank;
    let loci = plateaus(loci_ideals(&x, grank));
    let jump_numbers = loci.iter().filter(|p| !p.ideal.is_unit()).map(|p| p.i_to).collect();
    let h = x.cohomology_hilbert()?;
    let complexity = h.total.dimension.max(0) as usize;
    let dim_v1 = loci.iter().find(|p| p.i_from <= 1 && 1 <= p.i_to).map_or(-1, |p| p.dim).max(0) as usize;
    if dim_v1 != complexity {
        return Err(Error::Internal(format!("dim V^1 = {dim_v1} but the cohomology has dimension {complexity}")));
    }
    let betti_degree = match degree_from(&h) {
        Ok(b) => Some(b),
        Err(Error::Undefined(_)) => None,
        Err(e) => return Err(e),
    };
    if let Some(b) = betti_degree {
        if complexity == x.ring().nvars() && 2 * b as usize != crk_generic {
            return Err(Error::Internal(format!("2·bdeg = {} but the generic crk is {crk_generic}", 2 * b)));
        }
    }
    Ok(JumpLociReport { rank: r, crk_generic, jump_numbers, loci, complexity, betti_degree })
}
