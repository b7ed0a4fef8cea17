//! Gröbner bases for ideals and submodules of graded free modules, possibly
//! modulo an ideal of the base ring, with normal forms, syzygies, lifting,
//! minimal generators, Hilbert series and radical membership.

pub mod buchberger;
pub mod hilbert;
pub mod ideal;
pub mod stats;
pub mod vector;

use std::sync::Arc;

pub use buchberger::Groebner;
pub use hilbert::{HilbertData, TPoly};
pub use ideal::Ideal;
pub use vector::{ModuleOrder, Term, Vector};

use crate::arith::{Bideg, Poly, PolyMatrix, PolyRing};
use crate::error::{Error, Result};

/// A completed, reduced Gröbner basis of a submodule.
#[derive(Debug)]
pub struct GroebnerBasis {
    engine: Groebner,
    elements: Vec<Vector>,
}

impl GroebnerBasis {
    /// Gröbner basis of the submodule generated by `gens`.
    pub fn new(order: ModuleOrder, gens: Vec<Vector>) -> GroebnerBasis {
        let mut engine = Groebner::new(order);
        for g in gens {
            engine.add_generator(g);
        }
        let elements = engine.reduced_basis();
        GroebnerBasis { engine, elements }
    }

    /// Gröbner basis of the column span of `p` in the free module on its
    /// rows, modulo `quotient` times that free module. Inhomogeneous
    /// columns are rejected.
    pub fn of_columns(p: &PolyMatrix, quotient: &[Poly]) -> Result<GroebnerBasis> {
        p.check_homogeneous()?;
        let order = ModuleOrder::new(p.ring(), target_shifts(p));
        let mut gens: Vec<Vector> = p.columns_sparse().iter().map(|c| order.from_sparse(c)).collect();
        gens.extend(quotient_generators(&order, quotient, 0..p.nrows()));
        Ok(GroebnerBasis::new(order, gens))
    }

    pub fn order(&self) -> &ModuleOrder {
        self.engine.order()
    }

    pub fn elements(&self) -> &[Vector] {
        &self.elements
    }

    pub fn normal_form(&self, v: Vector) -> Vector {
        self.engine.reduce(v)
    }

    pub fn contains(&self, v: Vector) -> bool {
        self.engine.reduce(v).is_empty()
    }

    pub fn leads(&self) -> Vec<(crate::arith::Monomial, u32)> {
        self.elements.iter().map(|v| (v[0].m, v[0].comp)).collect()
    }

    /// Elements as columns of a matrix over the free module.
    pub fn to_columns(&self) -> Vec<Vec<Poly>> {
        self.elements.iter().map(|v| self.order().to_polys(v)).collect()
    }
}

/// Ordering degrees of the rows of `p`, arranged so that each column is a
/// homogeneous vector whose degree is the ordering degree of the column.
pub fn target_shifts(p: &PolyMatrix) -> Vec<i64> {
    let ring = p.ring();
    p.row_degrees().iter().map(|&r| ring.primary(r - p.shift())).collect()
}

fn source_shifts(p: &PolyMatrix) -> Vec<i64> {
    let ring = p.ring();
    p.col_degrees().iter().map(|&c| ring.primary(c)).collect()
}

/// The vectors `f · e_j` for `f` in `quotient` and `j` in `comps`.
pub fn quotient_generators(
    order: &ModuleOrder,
    quotient: &[Poly],
    comps: impl Iterator<Item = usize> + Clone,
) -> Vec<Vector> {
    let mut out = Vec::new();
    for f in quotient {
        for j in comps.clone() {
            let mut v: Vector = f.terms().iter().map(|(m, c)| order.term(*m, j as u32, c.clone())).collect();
            v.sort_by(|a, b| order.cmp(b, a));
            out.push(v);
        }
    }
    out
}

/// Solves linear systems `P x = v` and computes kernels of `P`, over the
/// ring modulo `quotient`, from one Gröbner basis of the graph of `P`.
///
/// The graph lives in the free module on rows ⊕ columns, ordered so that
/// row components are eliminated first.
#[derive(Debug)]
pub struct LinearSystem {
    p: PolyMatrix,
    quotient: Vec<Poly>,
    gb: GroebnerBasis,
}

impl LinearSystem {
    pub fn new(p: &PolyMatrix, quotient: &[Poly]) -> Result<LinearSystem> {
        p.check_homogeneous()?;
        let (n, m) = (p.nrows(), p.ncols());
        let mut shifts = target_shifts(p);
        shifts.extend(source_shifts(p));
        let order = ModuleOrder::with_elimination(p.ring(), shifts, n);
        let mut gens: Vec<Vector> = Vec::with_capacity(m);
        for (j, col) in p.columns_sparse().into_iter().enumerate() {
            let mut c = col;
            c.push((n + j, Poly::one(p.ring())));
            gens.push(order.from_sparse(&c));
        }
        gens.extend(quotient_generators(&order, quotient, 0..n + m));
        let gb = GroebnerBasis::new(order, gens);
        Ok(LinearSystem { p: p.clone(), quotient: quotient.to_vec(), gb })
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.p
    }

    /// A solution of `P x ≡ v` (entries of `v` indexed by rows), or `None`
    /// if `v` is not in the image. The solution is the normal form of the
    /// graph reduction, hence deterministic.
    pub fn solve(&self, v: &[(usize, Poly)]) -> Option<Vec<Poly>> {
        let order = self.gb.order();
        let r = self.gb.normal_form(order.from_sparse(v));
        let n = self.p.nrows() as u32;
        if r.first().is_some_and(|t| t.comp < n) {
            return None;
        }
        let parts = order.to_polys(&r);
        Some(parts[self.p.nrows()..].iter().map(|q| -q).collect())
    }

    /// Solves `P X = V` column by column.
    pub fn solve_matrix(&self, v: &PolyMatrix) -> Option<PolyMatrix> {
        let mut x = PolyMatrix::zero(
            self.p.ring(),
            self.p.col_degrees().to_vec(),
            v.col_degrees().to_vec(),
            v.shift() - self.p.shift(),
        );
        for (j, col) in v.columns_sparse().into_iter().enumerate() {
            let sol = self.solve(&col)?;
            for (i, e) in sol.into_iter().enumerate() {
                x.set(i, j, e);
            }
        }
        Some(x)
    }

    /// Whether `v` lies in the image of `P` modulo the quotient.
    pub fn in_image(&self, v: &[(usize, Poly)]) -> bool {
        self.solve(v).is_some()
    }

    /// Generators of the kernel (modulo the quotient), not yet minimalized,
    /// as (column entries, column bidegree).
    fn raw_kernel(&self) -> Vec<(Vec<Poly>, Bideg)> {
        let n = self.p.nrows();
        let order = self.gb.order();
        let mut out = Vec::new();
        for v in self.gb.elements() {
            if (v[0].comp as usize) < n {
                continue;
            }
            let parts = order.to_polys(v);
            let col: Vec<Poly> = parts[n..].to_vec();
            let (j, lead) = col.iter().enumerate().find(|(_, q)| !q.is_zero()).expect("nonzero");
            let deg = lead.bideg().expect("homogeneous") + self.p.col_degrees()[j];
            out.push((col, deg));
        }
        out
    }

    /// Minimal generators of `ker P` over the ring modulo the quotient, as
    /// the columns of a matrix whose rows are the columns of `P`.
    pub fn kernel(&self) -> PolyMatrix {
        let ring = self.p.ring();
        let raw = self.raw_kernel();
        let row_degrees = self.p.col_degrees().to_vec();
        let cols = minimal_columns(ring, &row_degrees, &self.quotient, raw);
        let degs = cols.iter().map(|c| c.1).collect();
        let mut out = PolyMatrix::zero(ring, row_degrees, degs, Bideg::ZERO);
        for (j, (col, _)) in cols.into_iter().enumerate() {
            for (i, e) in col.into_iter().enumerate() {
                out.set(i, j, e);
            }
        }
        out
    }
}

/// A minimal generating subset of the submodule generated by `cols` (plus
/// `quotient` times the free module) in the free module with the given row
/// degrees. Columns are processed by increasing degree and kept when not in
/// the span of the previously kept ones.
pub fn minimal_columns(
    ring: &Arc<PolyRing>,
    row_degrees: &[Bideg],
    quotient: &[Poly],
    mut cols: Vec<(Vec<Poly>, Bideg)>,
) -> Vec<(Vec<Poly>, Bideg)> {
    let shifts: Vec<i64> = row_degrees.iter().map(|&b| ring.primary(b)).collect();
    let order = ModuleOrder::new(ring, shifts);
    cols.sort_by_key(|c| (ring.primary(c.1), c.1));
    let mut engine = Groebner::new(order.clone());
    for g in quotient_generators(&order, quotient, 0..row_degrees.len()) {
        engine.add_generator(g);
    }
    let mut kept = Vec::new();
    for (col, deg) in cols {
        engine.complete_to(ring.primary(deg));
        let v = order.from_polys(&col);
        if engine.reduce(v.clone()).is_empty() {
            continue;
        }
        engine.add_generator(v);
        kept.push((col, deg));
    }
    kept
}

/// Minimal generators of the kernel of `p` over the ring modulo `quotient`.
pub fn syzygies(p: &PolyMatrix, quotient: &[Poly]) -> Result<PolyMatrix> {
    Ok(LinearSystem::new(p, quotient)?.kernel())
}

/// Hilbert data of `coker p`, with ring variables regraded to degree 1 and
/// row `i` placed in degree `regrade(row_degrees[i])`.
pub fn hilbert_data(p: &PolyMatrix, quotient: &[Poly], regrade: impl Fn(Bideg) -> i64) -> Result<HilbertData> {
    let gb = GroebnerBasis::of_columns(p, quotient)?;
    let shifts: Vec<i64> = p.row_degrees().iter().map(|&b| regrade(b)).collect();
    Ok(HilbertData::from_leads(p.ring().nvars(), &gb.leads(), &shifts))
}

/// Checks that `p` has entries in `ring`, for callers mixing rings.
pub fn ensure_ring(p: &PolyMatrix, ring: &Arc<PolyRing>) -> Result<()> {
    if crate::arith::ring::same_ring(p.ring(), ring) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;

    fn ring(names: &[&str], field: Field) -> Arc<PolyRing> {
        PolyRing::base(field, names.iter().map(|s| s.to_string()).collect(), vec![1; names.len()]).unwrap()
    }

    fn row(r: &Arc<PolyRing>, entries: &[&str]) -> PolyMatrix {
        let data = vec![entries.iter().map(|t| Poly::parse(r, t).unwrap()).collect()];
        PolyMatrix::from_rows_infer(r, vec![Bideg::ZERO], data).unwrap()
    }

    fn ideal_gb(r: &Arc<PolyRing>, gens: &[&str]) -> Vec<String> {
        let p = row(r, gens);
        let gb = GroebnerBasis::of_columns(&p, &[]).unwrap();
        gb.to_columns().into_iter().map(|c| c[0].to_string()).collect()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring(&["x", "y"], Field::Prime(101));
        assert_eq!(ideal_gb(&r, &["x^2", "x*y"]), ["x*y", "x^2"]);
    }

    #[test]
    fn hand_buchberger_run() {
        let r = ring(&["x", "y"], Field::Rationals);
        assert_eq!(ideal_gb(&r, &["x^2 - y^2", "x^2 + y^2"]), ["y^2", "x^2"]);
        assert!(ideal_gb(&r, &["0"]).is_empty());
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x", "y"], Field::Prime(101));
        let gb = GroebnerBasis::of_columns(&row(&r, &["x^2", "x*y"]), &[]).unwrap();
        let nf = |t: &str| {
            let v = gb.order().from_polys(&[Poly::parse(&r, t).unwrap()]);
            gb.order().to_polys(&gb.normal_form(v))[0].to_string()
        };
        assert_eq!(nf("x^2*y"), "0");
        assert_eq!(nf("y^3"), "y^3");
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring(&["x", "y"], Field::Prime(101));
        let p = row(&r, &["x", "y"]);
        let z = syzygies(&p, &[]).unwrap();
        assert_eq!(z.ncols(), 1);
        assert_eq!(z.to_string(), "[[-y], [x]]");
        assert!(p.checked_mul(&z).unwrap().is_zero());
        let id = PolyMatrix::identity(&r, vec![Bideg::ZERO; 2]);
        assert_eq!(syzygies(&id, &[]).unwrap().ncols(), 0);
    }

    #[test]
    fn lifting_through_a_matrix() {
        let r = ring(&["x", "y"], Field::Prime(101));
        let p = row(&r, &["x", "y"]);
        let sys = LinearSystem::new(&p, &[]).unwrap();
        let v = Poly::parse(&r, "x^2 + 3*x*y - y^2").unwrap();
        let s = sys.solve(&[(0, v.clone())]).unwrap();
        assert_eq!(&(&Poly::var(&r, 0) * &s[0]) + &(&Poly::var(&r, 1) * &s[1]), v);
        assert!(sys.solve(&[(0, Poly::one(&r))]).is_none());
    }

    #[test]
    fn syzygies_modulo_a_quotient() {
        // over k[x]/(x^2), the kernel of multiplication by x is generated by x
        let r = ring(&["x"], Field::Prime(101));
        let p = row(&r, &["x"]);
        let x2 = Poly::parse(&r, "x^2").unwrap();
        let z = syzygies(&p, &[x2]).unwrap();
        assert_eq!(z.to_string(), "[[x]]");
    }
}
