//! Free-module vectors over a polynomial ring with a position-aware term
//! order.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::arith::{Monomial, Poly, PolyRing, Scalar};

/// A term `c · m · e_comp`, with `deg` caching the ordering degree of
/// `m · e_comp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub m: Monomial,
    pub comp: u32,
    pub deg: i64,
    pub c: Scalar,
}

/// Terms sorted by decreasing order, no zero coefficients.
pub type Vector = Vec<Term>;

/// Term order on a free module `⊕ R(-shift_i)`.
///
/// Components below `split` form an elimination block: any term there is
/// larger than any term outside it. Within a block terms compare by degree
/// (monomial degree plus shift), then reverse lexicographically, then by
/// position with lower indices larger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    ring: Arc<PolyRing>,
    shifts: Vec<i64>,
    split: usize,
}

impl ModuleOrder {
    pub fn new(ring: &Arc<PolyRing>, shifts: Vec<i64>) -> ModuleOrder {
        ModuleOrder { ring: ring.clone(), shifts, split: 0 }
    }

    /// An order eliminating the first `split` components.
    pub fn with_elimination(ring: &Arc<PolyRing>, shifts: Vec<i64>, split: usize) -> ModuleOrder {
        assert!(split <= shifts.len());
        ModuleOrder { ring: ring.clone(), shifts, split }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn split(&self) -> usize {
        self.split
    }

    #[inline]
    pub fn term_degree(&self, m: &Monomial, comp: u32) -> i64 {
        self.ring.degree(m) + self.shifts[comp as usize]
    }

    pub fn term(&self, m: Monomial, comp: u32, c: Scalar) -> Term {
        Term { deg: self.term_degree(&m, comp), m, comp, c }
    }

    #[inline]
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp_parts(&a.m, a.comp, a.deg, &b.m, b.comp, b.deg)
    }

    #[inline]
    pub fn cmp_parts(&self, am: &Monomial, ac: u32, ad: i64, bm: &Monomial, bc: u32, bd: i64) -> Ordering {
        let split = self.split as u32;
        if split > 0 {
            let (ta, tb) = (ac < split, bc < split);
            if ta != tb {
                return ta.cmp(&tb);
            }
        }
        ad.cmp(&bd).then_with(|| self.ring.cmp_revlex(am, bm)).then_with(|| bc.cmp(&ac))
    }

    /// Converts a dense column of polynomials.
    pub fn from_polys(&self, col: &[Poly]) -> Vector {
        let mut v = Vec::new();
        for (i, p) in col.iter().enumerate() {
            for (m, c) in p.terms() {
                v.push(self.term(*m, i as u32, c.clone()));
            }
        }
        v.sort_by(|a, b| self.cmp(b, a));
        v
    }

    /// Converts a sparse column `(row, entry)`.
    pub fn from_sparse(&self, col: &[(usize, Poly)]) -> Vector {
        let mut v = Vec::new();
        for (i, p) in col {
            for (m, c) in p.terms() {
                v.push(self.term(*m, *i as u32, c.clone()));
            }
        }
        v.sort_by(|a, b| self.cmp(b, a));
        v
    }

    /// Splits a vector into one polynomial per component.
    pub fn to_polys(&self, v: &[Term]) -> Vec<Poly> {
        let mut parts: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); self.rank()];
        for t in v {
            parts[t.comp as usize].push((t.m, t.c.clone()));
        }
        parts.into_iter().map(|terms| Poly::from_terms(&self.ring, terms)).collect()
    }

    /// `a - c · m · b`.
    pub fn sub_mul(&self, a: &[Term], b: &[Term], m: &Monomial, c: &Scalar) -> Vector {
        let dm = self.ring.degree(m);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let bm = b[j].m.mul(m);
            let bd = b[j].deg + dm;
            match self.cmp_parts(&a[i].m, a[i].comp, a[i].deg, &bm, b[j].comp, bd) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { m: bm, comp: b[j].comp, deg: bd, c: -&(c * &b[j].c) });
                    j += 1;
                }
                Ordering::Equal => {
                    let v = &a[i].c - &(c * &b[j].c);
                    if !v.is_zero() {
                        out.push(Term { m: a[i].m, comp: a[i].comp, deg: a[i].deg, c: v });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            out.push(Term { m: t.m.mul(m), comp: t.comp, deg: t.deg + dm, c: -&(c * &t.c) });
        }
        out
    }

    pub fn add(&self, a: &[Term], b: &[Term]) -> Vector {
        let minus_one = -&self.ring.field().one();
        self.sub_mul(a, b, &Monomial::ONE, &minus_one)
    }

    pub fn scale(&self, a: &[Term], m: &Monomial, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vec::new();
        }
        let dm = self.ring.degree(m);
        a.iter().map(|t| Term { m: t.m.mul(m), comp: t.comp, deg: t.deg + dm, c: c * &t.c }).collect()
    }

    pub fn monic(&self, a: Vector) -> Vector {
        match a.first() {
            Some(t) if !t.c.is_one() => {
                let inv = t.c.inv().expect("nonzero lead");
                a.into_iter().map(|t| Term { c: &t.c * &inv, ..t }).collect()
            }
            _ => a,
        }
    }

    /// Whether every term has the same degree.
    pub fn is_homogeneous(v: &[Term]) -> bool {
        v.windows(2).all(|w| w[0].deg == w[1].deg)
    }
}
