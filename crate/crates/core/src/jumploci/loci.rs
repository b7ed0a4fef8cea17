use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::minors::{linear_basis, minor_ideals_with};
use crate::arith::{Monomial, Poly, PolyMatrix, PolyRing, Scalar};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::twisted::TwistedComplex;

const SCREENING_POINTS: usize = 5;

/// The minor size `t` with `V^i = V(I_t(D))` for a complex of rank `r`:
/// `⌊(r − i)/2⌋ + 1` for `i ≤ r`, and 0 (the unit ideal `I_0`) beyond.
pub fn rank_threshold(r: usize, i: usize) -> usize {
    if i > r {
        0
    } else {
        (r - i) / 2 + 1
    }
}

/// `crk` at a k-rational point: `r − 2 rank D(a)`.
pub fn crk_at(x: &TwistedComplex, point: &[Scalar]) -> Result<usize> {
    let mut rank = 0;
    for s in x.summands() {
        rank += s.differential().eval(point)?.rank();
    }
    Ok(x.rank() - 2 * rank)
}

/// Rank of `D` over the fraction field of S. Random evaluations give a
/// lower bound that the exact fraction-free elimination must meet.
pub fn generic_rank(x: &TwistedComplex, seed: u64) -> Result<usize> {
    let ring = x.ring();
    let field = ring.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let summands = x.summands();
    let mut screened = 0;
    for _ in 0..SCREENING_POINTS {
        let point: Vec<Scalar> = (0..ring.nvars()).map(|_| field.random(&mut rng)).collect();
        let mut rank = 0;
        for s in &summands {
            rank += s.differential().eval(&point)?.rank();
        }
        screened = screened.max(rank);
    }
    let exact: usize = summands.iter().map(|s| s.differential().generic_rank()).sum();
    if exact < screened {
        return Err(Error::Internal(format!("generic rank {exact} is below an observed rank {screened}")));
    }
    Ok(exact)
}

/// `crk` at the generic point.
pub fn crk_generic(x: &TwistedComplex, seed: u64) -> Result<usize> {
    Ok(x.rank() - 2 * generic_rank(x, seed)?)
}

/// Keeps generator lists small without changing the variety: monomial
/// lists are replaced by the minimal squarefree monomials of their
/// radical, other lists by a linear basis.
fn reduce_generators(ring: &Arc<PolyRing>, v: Vec<Poly>) -> Vec<Poly> {
    if !v.is_empty() && v.iter().all(|p| p.len() == 1) {
        let mut ms: Vec<Monomial> = v.iter().map(|p| p.terms()[0].0.radical()).collect();
        ms.sort_by_key(|m| (m.total_degree(), *m));
        ms.dedup();
        let mut kept: Vec<Monomial> = Vec::new();
        for m in ms {
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        return kept.into_iter().map(|m| Poly::monomial(ring, m, ring.field().one())).collect();
    }
    linear_basis(ring, v)
}

/// Ideals with the same varieties as `I_1(d), …, I_tmax(d)`.
pub fn minor_ideals(d: &PolyMatrix, tmax: usize) -> Vec<Ideal> {
    let ring = d.ring().clone();
    let reduce = |v: Vec<Poly>| reduce_generators(&ring, v);
    minor_ideals_with(d, tmax, &reduce).into_iter().map(|g| Ideal::new(&ring, g)).collect()
}

fn ideal_of_minors(d: &PolyMatrix, t: usize) -> Ideal {
    match t {
        0 => Ideal::unit(d.ring()),
        _ => minor_ideals(d, t).pop().expect("t ≥ 1"),
    }
}

/// An ideal cutting out `V^i`: the `t × t` minors of `D` for
/// `t = ⌊(r − i)/2⌋ + 1`; the zero ideal for `i = 0`.
pub fn jump_locus_ideal(x: &TwistedComplex, i: usize) -> Ideal {
    if i == 0 {
        return Ideal::zero(x.ring());
    }
    ideal_of_minors(x.differential(), rank_threshold(x.rank(), i))
}

/// `V^i` as the support of `∧^{r+i}(C ⊕ C)` for `C = coker D`, i.e. the
/// Fitting ideal `I_{r−i+1}(D ⊕ D)`.
pub fn jump_locus_via_exterior_power(x: &TwistedComplex, i: usize) -> Ideal {
    if i == 0 {
        return Ideal::zero(x.ring());
    }
    let d = x.differential();
    let t = (x.rank() + 1).saturating_sub(i);
    ideal_of_minors(&d.block_diag(d), t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Bideg, Field};
    use crate::twisted::DIFFERENTIAL;

    fn koszul_chi() -> TwistedComplex {
        // S ← S(−2)² ← S(−4) on χ1, χ2
        let s = PolyRing::operators(Field::Prime(101), &[1, 1]);
        let p = |t: &str| Poly::parse(&s, t).unwrap();
        let basis = vec![Bideg::new(0, 0), Bideg::new(1, 1), Bideg::new(1, 1), Bideg::new(2, 2)];
        let mut d = PolyMatrix::zero(&s, basis.clone(), basis, DIFFERENTIAL);
        d.set(0, 1, p("chi1"));
        d.set(0, 2, p("chi2"));
        d.set(1, 3, p("-chi2"));
        d.set(2, 3, p("chi1"));
        TwistedComplex::new(d).unwrap()
    }

    #[test]
    fn thresholds() {
        assert_eq!(rank_threshold(4, 1), 2);
        assert_eq!(rank_threshold(4, 4), 1);
        assert_eq!(rank_threshold(4, 5), 0);
        assert_eq!(rank_threshold(16, 9), 4);
    }

    #[test]
    fn koszul_on_operators() {
        let x = koszul_chi();
        let f = Field::Prime(101);
        assert_eq!(crk_at(&x, &[f.from_i64(0), f.from_i64(0)]).unwrap(), 4);
        assert_eq!(crk_at(&x, &[f.from_i64(3), f.from_i64(0)]).unwrap(), 0);
        assert_eq!(generic_rank(&x, 0).unwrap(), 2);
        assert!(crk_at(&x, &[f.from_i64(1)]).is_err());
        let s = x.ring().clone();
        let max = Ideal::new(&s, vec![Poly::parse(&s, "chi1").unwrap(), Poly::parse(&s, "chi2").unwrap()]);
        for i in 1..=4 {
            assert!(jump_locus_ideal(&x, i).variety_equal(&max), "i = {i}");
            assert!(jump_locus_via_exterior_power(&x, i).variety_equal(&max), "i = {i}");
        }
        assert!(jump_locus_ideal(&x, 5).is_unit());
        assert!(jump_locus_via_exterior_power(&x, 5).is_unit());
    }

    #[test]
    fn zero_differential() {
        let s = PolyRing::operators(Field::Prime(101), &[1, 1]);
        let x = TwistedComplex::zero(&s, vec![Bideg::ZERO; 4]);
        for i in 0..=4 {
            assert!(jump_locus_ideal(&x, i).is_zero());
            assert!(jump_locus_via_exterior_power(&x, i).is_zero());
        }
        assert!(jump_locus_ideal(&x, 5).is_unit());
        assert!(jump_locus_via_exterior_power(&x, 5).is_unit());
    }
}
