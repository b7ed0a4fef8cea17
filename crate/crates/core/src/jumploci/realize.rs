use super::report::{jump_loci_report, JumpLociReport};
use crate::arith::{Bideg, Poly};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::twisted::TwistedComplex;

/// A complex realizing a chain of jump loci, with the plateau
/// `(i_from, i_to)` expected for each chain member and the report that
/// confirmed them.
#[derive(Clone, Debug)]
pub struct Realization {
    pub twisted: TwistedComplex,
    pub plateaus: Vec<(usize, usize)>,
    pub report: JumpLociReport,
}

fn validate(chain: &[Ideal]) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidChain(msg));
    if chain.len() < 2 {
        return bad("a chain runs from Spec S to the empty set".into());
    }
    if !chain[0].is_zero() {
        return bad("the first member must be the zero ideal (all of Spec S)".into());
    }
    if !chain[chain.len() - 1].is_unit() {
        return bad("the last member must be the unit ideal (the empty set)".into());
    }
    for (m, ideal) in chain.iter().enumerate() {
        if !ideal.is_homogeneous() {
            return bad(format!("member {m} is not homogeneous"));
        }
    }
    for (m, w) in chain.windows(2).enumerate() {
        if !w[1].variety_contained_in(&w[0]) || w[0].variety_contained_in(&w[1]) {
            return bad(format!("member {} is not strictly below member {m}", m + 1));
        }
    }
    Ok(())
}

/// The complex `⊕_m Kos(η^m) ⊗ Z` for the chain `(0) = I_0, …, I_t = (1)`
/// with `η^m` the generators of `I_m` (`m < t`), where `Z` is the minimal
/// model of the Koszul complex on ν elements: rank `2^ν` and zero
/// differential. The `m = 0` summand keeps `V^i = Spec S` for `i ≤ 2^ν`.
/// The jump loci are then `V(I_m)` on `c_{m−1} < i ≤ c_m` for
/// `c_m = Σ_{l ≤ m} 2^{ν + n_l}`, which is verified against the computed
/// report.
pub fn realize(chain: &[Ideal], nu: usize) -> Result<Realization> {
    validate(chain)?;
    let s = chain[0].ring();
    let basis: Vec<Bideg> = (0..1u32 << nu)
        .map(|mask| {
            let k = mask.count_ones() as i64;
            Bideg::new(k, k)
        })
        .collect();
    let z = TwistedComplex::zero(s, basis);
    let t = chain.len() - 1;
    let mut twisted = TwistedComplex::zero(s, Vec::new());
    let mut plateaus = Vec::with_capacity(t + 1);
    let mut c = 0;
    for ideal in &chain[..t] {
        let etas: Vec<Poly> = ideal.gens().iter().filter(|g| !g.is_zero()).cloned().collect();
        twisted = twisted.direct_sum(&z.koszul_object_seq(&etas)?);
        let from = if c == 0 { 0 } else { c + 1 };
        c += 1 << (nu + etas.len());
        plateaus.push((from, c));
    }
    plateaus.push((c + 1, c + 1));
    let report = jump_loci_report(&twisted, 0)?;
    let found: Vec<(usize, usize)> = report.loci.iter().map(|p| (p.i_from, p.i_to)).collect();
    if found != plateaus {
        return Err(Error::Internal(format!("realized plateaus {found:?}, expected {plateaus:?}")));
    }
    for (m, (p, ideal)) in report.loci.iter().zip(chain).enumerate() {
        if !p.ideal.variety_equal(ideal) {
            return Err(Error::Internal(format!("realized locus {m} is V({:?})", p.ideal.gens())));
        }
    }
    Ok(Realization { twisted, plateaus, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Field, PolyRing};

    fn ideal(s: &std::sync::Arc<crate::arith::PolyRing>, gens: &[&str]) -> Ideal {
        Ideal::new(s, gens.iter().map(|g| Poly::parse(s, g).unwrap()).collect())
    }

    #[test]
    fn two_step_chain() {
        let s = PolyRing::operators(Field::Prime(101), &[2, 2]);
        let chain = [Ideal::zero(&s), ideal(&s, &["chi1"]), Ideal::unit(&s)];
        let r = realize(&chain, 2).unwrap();
        assert_eq!(r.plateaus, vec![(0, 4), (5, 12), (13, 13)]);
        assert_eq!(r.twisted.rank(), 12);
        assert_eq!(r.report.jump_numbers, vec![4, 12]);
    }

    #[test]
    fn trivial_chain() {
        let s = PolyRing::operators(Field::Prime(101), &[2, 2]);
        let r = realize(&[Ideal::zero(&s), Ideal::unit(&s)], 2).unwrap();
        assert_eq!(r.plateaus, vec![(0, 4), (5, 5)]);
    }

    #[test]
    fn rejects_bad_chains() {
        let s = PolyRing::operators(Field::Prime(101), &[2, 2]);
        let x = ideal(&s, &["chi1"]);
        let xy = ideal(&s, &["chi1", "chi2"]);
        let err = |c: &[Ideal]| matches!(realize(c, 1), Err(Error::InvalidChain(_)));
        assert!(err(&[Ideal::zero(&s), xy.clone(), x.clone(), Ideal::unit(&s)]));
        assert!(err(&[Ideal::zero(&s), x.clone(), ideal(&s, &["chi1^2"]), Ideal::unit(&s)]));
        assert!(err(&[x.clone(), Ideal::unit(&s)]));
        assert!(err(&[Ideal::zero(&s), x]));
    }
}
