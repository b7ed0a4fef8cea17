//! Ideals with a lazily computed Gröbner basis, membership, radical
//! membership and variety comparison.

use std::fmt;
use std::sync::{Arc, OnceLock};

use super::buchberger::Groebner;
use super::hilbert::HilbertData;
use super::vector::{ModuleOrder, Vector};
use crate::arith::ring::same_ring;
use crate::arith::{Monomial, Poly, PolyRing};

#[derive(Debug)]
struct Basis {
    engine: Groebner,
    reduced: Vec<Poly>,
}

/// An ideal of a polynomial ring. The reduced Gröbner basis is computed on
/// first use and cached; concurrent fills compute identical values.
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Poly>,
    basis: OnceLock<Arc<Basis>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Ideal {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), basis }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.gens)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn vector_of(order: &ModuleOrder, p: &Poly) -> Vector {
    p.terms().iter().map(|(m, c)| order.term(*m, 0, c.clone())).collect()
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Poly>) -> Ideal {
        assert!(gens.iter().all(|g| same_ring(ring, g.ring())), "generator from another ring");
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring: ring.clone(), gens, basis: OnceLock::new() }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, vec![Poly::one(ring)])
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.bideg().is_some())
    }

    fn basis(&self) -> &Arc<Basis> {
        self.basis.get_or_init(|| {
            let order = ModuleOrder::new(&self.ring, vec![0]);
            let mut engine = Groebner::new(order.clone());
            let monomial = self.gens.iter().all(|g| g.len() == 1);
            let gens: Vec<Poly> = if monomial { minimal_monomials(&self.ring, &self.gens) } else { self.gens.clone() };
            for g in &gens {
                engine.add_generator(vector_of(&order, g));
            }
            let reduced = engine
                .reduced_basis()
                .iter()
                .map(|v| order.to_polys(v).pop().expect("rank one"))
                .collect();
            Arc::new(Basis { engine, reduced })
        })
    }

    /// The reduced Gröbner basis, sorted by increasing lead monomial.
    pub fn groebner_basis(&self) -> &[Poly] {
        &self.basis().reduced
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_unit()) || self.basis().engine.is_unit_ideal()
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        let b = self.basis();
        let order = b.engine.order();
        let r = b.engine.reduce(vector_of(order, f));
        order.to_polys(&r).pop().expect("rank one")
    }

    pub fn contains(&self, f: &Poly) -> bool {
        f.is_zero() || self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Same ideal (not just same radical).
    pub fn equals(&self, other: &Ideal) -> bool {
        self.groebner_basis() == other.groebner_basis()
    }

    /// Whether `f` lies in the radical: `1 - y f` is adjoined in a ring with
    /// one extra variable `y`, and membership holds iff the result is the
    /// unit ideal.
    pub fn radical_contains(&self, f: &Poly) -> bool {
        if f.is_zero() || self.is_unit() || self.contains(f) {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        if f.len() == 1 && self.gens.iter().all(|g| g.len() == 1) {
            let fm = f.terms()[0].0;
            return self.gens.iter().any(|g| g.terms()[0].0.radical().divides(&fm.radical()));
        }
        let ext = self.ring.extended();
        let y = Poly::var(&ext, ext.nvars() - 1);
        let mut gens: Vec<Poly> = self.gens.iter().map(|g| g.embed(&ext)).collect();
        gens.push(&Poly::one(&ext) - &(&y * &f.embed(&ext)));
        Ideal::new(&ext, gens).is_unit()
    }

    /// `V(self) ⊆ V(other)`, i.e. `other ⊆ √self`.
    pub fn variety_contained_in(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.radical_contains(g))
    }

    pub fn variety_equal(&self, other: &Ideal) -> bool {
        self.variety_contained_in(other) && other.variety_contained_in(self)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a * b)).collect();
        Ideal::new(&self.ring, gens)
    }

    /// The ideal generated by its reduced Gröbner basis.
    pub fn canonical(&self) -> Ideal {
        let basis = OnceLock::new();
        let _ = basis.set(self.basis().clone());
        Ideal { ring: self.ring.clone(), gens: self.groebner_basis().to_vec(), basis }
    }

    /// Hilbert data of the quotient ring with every variable in degree 1.
    pub fn hilbert(&self) -> HilbertData {
        let leads: Vec<(Monomial, u32)> = if self.is_unit() {
            vec![(Monomial::ONE, 0)]
        } else {
            self.groebner_basis().iter().map(|g| (g.lead_monomial().expect("nonzero"), 0)).collect()
        };
        HilbertData::from_leads(self.ring.nvars(), &leads, &[0])
    }

    /// Krull dimension of the quotient ring; -1 for the unit ideal.
    pub fn dimension(&self) -> i64 {
        self.hilbert().dimension
    }
}

fn minimal_monomials(ring: &Arc<PolyRing>, gens: &[Poly]) -> Vec<Poly> {
    let mut ms: Vec<Monomial> = gens.iter().map(|g| g.terms()[0].0).collect();
    ms.sort_by(|a, b| ring.cmp_monomials(a, b));
    ms.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in ms {
        if !out.iter().any(|h| h.divides(&m)) {
            out.push(m);
        }
    }
    out.into_iter().map(|m| Poly::monomial(ring, m, ring.field().one())).collect()
}
