use crate::arith::{Poly, PolyMatrix, Scalar};
use crate::error::{Error, Result};
use crate::resolution::{resolve, RingData};

const STABLE_RUN: usize = 4;

/// Stable Betti data of `coker p` over the hypersurface `A/(Σ a_i f_i)`:
/// the rank `β_t + β_{t+1}` of the two-periodic free module
/// `F_even ⊕ F_odd` of the matrix factorization describing the tail of its
/// minimal resolution. This is the number comparable with `crk` at `a`,
/// which counts cohomology of both parities. The resolution runs to `n`
/// and is doubled up to `cap` until the last four Betti numbers are
/// two-periodic.
pub fn stable_betti_oracle(ring: &RingData, p: &PolyMatrix, a: &[Scalar], n: usize, cap: usize) -> Result<usize> {
    if a.len() != ring.c() {
        return Err(Error::Arity { expected: ring.c(), found: a.len() });
    }
    if !ring.is_regular_sequence() {
        return Err(Error::NotRegular);
    }
    let g = ring.ci().iter().zip(a).fold(Poly::zero(ring.ring()), |acc, (f, ai)| &acc + &f.scale(ai));
    if g.is_zero() {
        return Err(Error::Invalid("the hypersurface equation Σ a_i f_i vanishes".into()));
    }
    if g.bideg().is_none() {
        return Err(Error::Inhomogeneous { what: "hypersurface equation".into(), detail: g.to_string() });
    }
    let mut n = n.max(STABLE_RUN);
    let mut res = resolve(p, &[g], Some(n))?;
    loop {
        if res.truncated_at().is_none() {
            return Ok(0);
        }
        let betti = res.betti().betti;
        let tail = &betti[betti.len().saturating_sub(STABLE_RUN)..];
        if betti.len() > STABLE_RUN && tail[0] == tail[2] && tail[1] == tail[3] {
            return Ok(tail[2] + tail[3]);
        }
        if n >= cap {
            return Err(Error::IncreaseN { n });
        }
        n = (2 * n).min(cap);
        res.extend(Some(n))?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Bideg, Field, PolyRing};

    #[test]
    fn ring_itself_and_residue_field() {
        let r = PolyRing::base(Field::Prime(101), vec!["x".into(), "y".into()], vec![1, 1]).unwrap();
        let p = |t: &str| Poly::parse(&r, t).unwrap();
        let ring = RingData::new(&r, vec![p("x^2"), p("y^2")]).unwrap();
        let f = Field::Prime(101);
        let a = [f.from_i64(1), f.from_i64(3)];
        let b = PolyMatrix::from_rows_infer(&r, vec![Bideg::ZERO], vec![vec![p("x^2"), p("y^2")]]).unwrap();
        assert_eq!(stable_betti_oracle(&ring, &b, &a, 8, 64).unwrap(), 0);
        // k over k[x,y]/(x² + 3y²): β = 1, 2, 2, 2, …
        let k = PolyMatrix::from_rows_infer(&r, vec![Bideg::ZERO], vec![vec![p("x"), p("y")]]).unwrap();
        assert_eq!(stable_betti_oracle(&ring, &k, &a, 8, 64).unwrap(), 4);
        assert!(stable_betti_oracle(&ring, &k, &[f.zero(), f.zero()], 8, 64).is_err());
    }
}
