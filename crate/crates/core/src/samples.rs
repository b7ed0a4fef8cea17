//! Seeded random inputs: Koszul objects over the exterior model, non-minimal
//! inflations of twisted complexes, monomial quotients and descending
//! chains of monomial varieties.

use std::sync::Arc;

use rand::Rng;

use crate::arith::{Bideg, Monomial, Poly, PolyMatrix, PolyRing, Scalar};
use crate::groebner::Ideal;
use crate::twisted::{TwistedComplex, DIFFERENTIAL};

/// The minimal model of the Koszul complex on ν elements: rank `2^ν`, zero
/// differential, a basis element of bidegree `(k, k)` for each `k`-subset.
pub fn exterior_model(s: &Arc<PolyRing>, nu: usize) -> TwistedComplex {
    let basis = (0..1u32 << nu)
        .map(|mask| {
            let k = mask.count_ones() as i64;
            Bideg::new(k, k)
        })
        .collect();
    TwistedComplex::zero(s, basis)
}

fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    if nvars == 0 {
        return if deg == 0 { vec![Monomial::ONE] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for e in 0..=deg {
        for mut m in monomials_of_degree(nvars - 1, deg - e) {
            m.set_exp(nvars - 1, e);
            out.push(m);
        }
    }
    out
}

fn nonzero_scalar<R: Rng + ?Sized>(rng: &mut R, s: &Arc<PolyRing>) -> Scalar {
    loop {
        let c = s.field().random(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A random nonzero bihomogeneous form whose monomials have total degree
/// `deg` and share the bidegree of a randomly chosen one.
pub fn random_form<R: Rng + ?Sized>(rng: &mut R, s: &Arc<PolyRing>, deg: u32) -> Poly {
    let all = monomials_of_degree(s.nvars(), deg);
    let lead = all[rng.random_range(0..all.len())];
    let b = s.bideg(&lead);
    let mut terms = vec![(lead, nonzero_scalar(rng, s))];
    for m in all.into_iter().filter(|m| *m != lead && s.bideg(m) == b) {
        if rng.random_bool(0.5) {
            terms.push((m, s.field().random(rng)));
        }
    }
    Poly::from_terms(s, terms)
}

/// `Kos(η) ⊗ Z` for the exterior model `Z` on ν elements and 1 to `max_gens`
/// random forms of degree 1 to `max_deg`.
pub fn random_koszul_object<R: Rng + ?Sized>(
    rng: &mut R,
    s: &Arc<PolyRing>,
    nu: usize,
    max_gens: usize,
    max_deg: u32,
) -> TwistedComplex {
    let n = rng.random_range(1..=max_gens);
    let etas: Vec<Poly> = (0..n)
        .map(|_| {
            let deg = rng.random_range(1..=max_deg);
            random_form(rng, s, deg)
        })
        .collect();
    exterior_model(s, nu).koszul_object_seq(&etas).expect("forms are bihomogeneous of even cohomological degree")
}

/// Adds `pairs` contractible pairs and then mixes basis elements of equal
/// bidegree by a random invertible change of basis.
pub fn inflate<R: Rng + ?Sized>(rng: &mut R, x: &TwistedComplex, pairs: usize) -> TwistedComplex {
    let s = x.ring();
    let mut y = x.clone();
    for _ in 0..pairs {
        let b = if x.rank() > 0 { x.basis()[rng.random_range(0..x.rank())] } else { Bideg::ZERO };
        let basis = vec![b, b - DIFFERENTIAL];
        let mut d = PolyMatrix::zero(s, basis.clone(), basis, DIFFERENTIAL);
        d.set(0, 1, Poly::constant(s, nonzero_scalar(rng, s)));
        y = y.direct_sum(&TwistedComplex::new(d).expect("a unit pair is a complex"));
    }
    let basis = y.basis().to_vec();
    let n = basis.len();
    let mut a = y.differential().to_dense();
    for _ in 0..4 * n {
        let (i, j) = (rng.random_range(0..n), rng.random_range(0..n));
        if i == j || basis[i] != basis[j] {
            continue;
        }
        // conjugate by 1 + c e_ij: row i += c row j, then column j −= c column i
        let c = Poly::constant(s, nonzero_scalar(rng, s));
        for k in 0..n {
            let add = &c * &a[j][k];
            a[i][k] = &a[i][k] + &add;
        }
        for k in 0..n {
            let sub = &c * &a[k][i];
            a[k][j] = &a[k][j] - &sub;
        }
    }
    let mut d = PolyMatrix::zero(s, basis.clone(), basis, DIFFERENTIAL);
    for (i, row) in a.into_iter().enumerate() {
        for (j, e) in row.into_iter().enumerate() {
            d.set(i, j, e);
        }
    }
    TwistedComplex::new(d).expect("conjugation preserves D² = 0")
}

/// A random monomial ideal with 1 to `max_gens` generators of degree 1 to
/// `max_deg`.
pub fn random_monomial_ideal<R: Rng + ?Sized>(rng: &mut R, ring: &Arc<PolyRing>, max_gens: usize, max_deg: u32) -> Vec<Poly> {
    let n = rng.random_range(1..=max_gens);
    (0..n)
        .map(|_| {
            let all = monomials_of_degree(ring.nvars(), rng.random_range(1..=max_deg));
            Poly::monomial(ring, all[rng.random_range(0..all.len())], ring.field().one())
        })
        .collect()
}

/// A strictly descending chain `Spec S = V(0) ⊋ V(I_1) ⊋ … ⊋ V(1) = ∅` of
/// monomial varieties with at most `len` proper members: each step adds a
/// monomial outside the radical of the previous ideal and drops the
/// generators it makes redundant, stopping early at the origin.
pub fn random_monomial_chain<R: Rng + ?Sized>(rng: &mut R, s: &Arc<PolyRing>, len: usize) -> Vec<Ideal> {
    let mut chain = vec![Ideal::zero(s)];
    let mut gens: Vec<Poly> = Vec::new();
    while chain.len() <= len {
        let current = chain.last().expect("nonempty").clone();
        if (0..s.nvars()).all(|i| current.radical_contains(&Poly::var(s, i))) {
            break;
        }
        let mut exps = vec![0u32; s.nvars()];
        for e in exps.iter_mut() {
            *e = rng.random_range(0..=2);
        }
        let m = Poly::monomial(s, Monomial::from_exponents(&exps), s.field().one());
        if m.is_constant() || current.radical_contains(&m) {
            continue;
        }
        let root = m.terms()[0].0.radical();
        gens.retain(|g| !root.divides(&g.terms()[0].0.radical()));
        gens.push(m);
        chain.push(Ideal::new(s, gens.clone()));
    }
    chain.push(Ideal::unit(s));
    chain
}
