use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::Scalar;
use super::monomial::Monomial;
use super::ring::{same_ring, Bideg, PolyRing};
use crate::error::{Error, Result};

/// A polynomial stored as terms sorted by decreasing monomial order, with no
/// zero coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Poly {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Poly {
        Poly::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Poly {
        Poly::monomial(ring, Monomial::ONE, c)
    }

    pub fn from_i64(ring: &Arc<PolyRing>, n: i64) -> Poly {
        Poly::constant(ring, ring.field().from_i64(n))
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Poly {
        assert!(i < ring.nvars(), "variable index out of range");
        Poly::monomial(ring, Monomial::var(i), ring.field().one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Scalar) -> Poly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Scalar)>) -> Poly {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Poly::from_map(ring, acc)
    }

    fn from_map(ring: &Arc<PolyRing>, acc: HashMap<Monomial, Scalar>) -> Poly {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Poly { ring: ring.clone(), terms }
    }

    /// Wraps terms that are already sorted and nonzero.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Scalar)>) -> Poly {
        debug_assert!(terms.windows(2).all(|w| ring.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// A nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.terms[0].1.is_one()
    }

    pub fn constant_term(&self) -> Scalar {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.ring.field().zero(),
        }
    }

    pub fn lead(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    /// Largest ordering degree of a term.
    pub fn degree(&self) -> Option<i64> {
        self.terms.first().map(|(m, _)| self.ring.degree(m))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.bideg().is_some() || self.is_zero()
    }

    /// The common bidegree of all terms, if there is one.
    pub fn bideg(&self) -> Option<Bideg> {
        let (first, rest) = self.terms.split_first()?;
        let b = self.ring.bideg(&first.0);
        rest.iter().all(|(m, _)| self.ring.bideg(m) == b).then_some(b)
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match ring.cmp_monomials(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { ring: ring.clone(), terms: out }
    }

    fn product(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                let m = ma.mul(mb);
                match acc.get_mut(&m) {
                    Some(v) => *v = &*v + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Poly::from_map(&self.ring, acc)
    }

    /// Multiplication by a single term; preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        self.mul_term(&Monomial::ONE, c)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv().expect("nonzero lead")),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(Error::Arity { expected: n, found: point.len() });
        }
        let mut acc = self.ring.field().zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, a) in point.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t = &t * &a.pow(e as u64);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.terms.first()?;
        let dinv = dc.inv()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let qm = dm.quotient_of(m)?;
            let qc = c * &dinv;
            rem = rem.merge(&d.mul_term(&qm, &qc), true);
            quot.push((qm, qc));
        }
        Some(Poly { ring: self.ring.clone(), terms: quot })
    }

    /// Re-embeds into a ring whose first variables coincide with this one's.
    pub fn embed(&self, target: &Arc<PolyRing>) -> Poly {
        assert!(target.nvars() >= self.ring.nvars() && target.field() == self.ring.field());
        let mut terms = self.terms.clone();
        terms.sort_unstable_by(|a, b| target.cmp_monomials(&b.0, &a.0));
        Poly { ring: target.clone(), terms }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_repr();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        Poly { ring: self.ring.clone(), terms }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::Field;

    fn ring(field: Field, names: &[&str]) -> Arc<PolyRing> {
        PolyRing::base(field, names.iter().map(|s| s.to_string()).collect(), vec![1; names.len()]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(Field::Prime(101), &["x", "y"]);
        let (x, y) = (Poly::var(&r, 0), Poly::var(&r, 1));
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert!((&p * &Poly::zero(&r)).is_zero());
    }

    #[test]
    fn binomial_square_over_rationals() {
        let s = PolyRing::operators(Field::Rationals, &[1, 1]);
        let (a, b) = (Poly::var(&s, 0), Poly::var(&s, 1));
        let p = (&a + &b).pow(2);
        assert_eq!(p.to_string(), "chi1^2 + 2*chi1*chi2 + chi2^2");
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = ring(Field::Prime(101), &["x"]);
        let s = ring(Field::Prime(103), &["x"]);
        assert!(matches!(Poly::var(&r, 0).checked_add(&Poly::var(&s, 0)), Err(Error::RingMismatch)));
    }

    #[test]
    fn exact_division() {
        let r = ring(Field::Rationals, &["x", "y"]);
        let (x, y) = (Poly::var(&r, 0), Poly::var(&r, 1));
        let a = &(&x + &y) * &(&x - &y);
        assert_eq!(a.div_exact(&(&x - &y)), Some(&x + &y));
        assert_eq!(x.div_exact(&y), None);
    }

    #[test]
    fn evaluation() {
        let r = ring(Field::Prime(7), &["x", "y"]);
        let k = r.field();
        let p = &Poly::var(&r, 0).pow(3) + &Poly::from_i64(&r, 2);
        assert_eq!(p.eval(&[k.from_i64(2), k.zero()]).unwrap(), k.from_i64(3));
        assert!(p.eval(&[k.one()]).is_err());
    }
}
