use super::{FreeResolution, RingData};
use crate::arith::{Bideg, PolyMatrix};
use crate::error::{Error, Result};

/// `Hom_A(F, A)` shifted by c: the module at index `j` is `F_{c−j}*`, the
/// maps are plain transposes, and a generator of internal degree `a`
/// dualizes to internal degree `Σ deg f_i − a`.
pub fn dualize_over_a(f: &FreeResolution, ring: &RingData) -> Result<FreeResolution> {
    if !f.quotient().is_empty() {
        return Err(Error::Invalid("dualization expects a complex over A".into()));
    }
    let twist = Bideg::new(0, ring.ci_degrees().iter().sum());
    let dual_degrees = |k: usize| -> Vec<Bideg> { f.degrees(k).iter().map(|&b| twist - b).collect() };
    let len = f.length();
    let start = ring.c() as i64 - f.start() - len as i64;
    let maps = (1..=len)
        .map(|p| {
            let d = f.map(len - p + 1).transpose();
            let shift = d.shift();
            d.with_degrees(dual_degrees(len - p + 1), dual_degrees(len - p), shift)
        })
        .collect();
    FreeResolution::from_maps(f.ring(), start, dual_degrees(len), maps, Vec::new(), None)
}

/// A presentation of `Hom_B(M, B)` from a minimal A-resolution `F` of M
/// whose length equals the codimension, so that `Ext_A^j(M, A)` vanishes
/// for `j ≠ c`: the cokernel of the transpose of `d_c`.
pub fn dual_module_presentation(f: &FreeResolution, ring: &RingData) -> Result<PolyMatrix> {
    if f.start() != 0 || f.length() != ring.c() {
        return Err(Error::Invalid(format!(
            "the A-resolution has length {} but the codimension is {}; the B-dual is not a module",
            f.length(),
            ring.c()
        )));
    }
    let g = dualize_over_a(f, ring)?;
    Ok(g.map(1).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Field, Poly, PolyRing};
    use crate::groebner::hilbert_data;
    use crate::resolution::{betti_with_fit, resolve, resolve_over_b};
    use std::sync::Arc;

    fn setup() -> (Arc<PolyRing>, RingData) {
        let r = PolyRing::base(Field::Prime(101), vec!["x".into(), "y".into()], vec![1, 1]).unwrap();
        let ci = vec![Poly::parse(&r, "x^3").unwrap(), Poly::parse(&r, "y^3").unwrap()];
        let rd = RingData::new(&r, ci).unwrap();
        (r, rd)
    }

    fn row(r: &Arc<PolyRing>, entries: &[&str]) -> PolyMatrix {
        let data = vec![entries.iter().map(|t| Poly::parse(r, t).unwrap()).collect()];
        PolyMatrix::from_rows_infer(r, vec![Bideg::ZERO], data).unwrap()
    }

    #[test]
    fn koszul_is_self_dual() {
        let (r, rd) = setup();
        let f = resolve(&row(&r, &["x", "y"]), &[], None).unwrap();
        let g = dualize_over_a(&f, &rd).unwrap();
        assert_eq!(g.start(), 0);
        assert_eq!(g.betti().betti, [1, 2, 1]);
        g.check_complex().unwrap();
        let back = dualize_over_a(&g, &rd).unwrap();
        assert_eq!(back.maps(), f.maps());
        assert_eq!(back.all_degrees(), f.all_degrees());
    }

    #[test]
    fn final_example_betti_numbers() {
        let (r, rd) = setup();
        let p = row(&r, &["x^2", "x*y", "y^2", "x^3", "y^3"]);
        let fb = resolve_over_b(&p, &rd, 6).unwrap();
        let b = fb.betti();
        assert_eq!((b.get(4), b.get(5), b.get(6)), (7, 9, 10));

        let fa = resolve(&p, &[], None).unwrap();
        let dual = dual_module_presentation(&fa, &rd).unwrap();
        let h = hilbert_data(&dual, rd.ci(), |d| d.int).unwrap();
        assert_eq!(h.dimension, 0);
        assert_eq!(h.multiplicity, Some(3));
        let (fd, q) = betti_with_fit(&dual, &rd, 12, 40).unwrap();
        let bd = fd.betti();
        assert_eq!((bd.get(0), bd.get(4), bd.get(5)), (2, 8, 9));
        assert_eq!(q.degree() + 1, 2);
    }

    #[test]
    fn rejects_non_annihilated_module() {
        let (r, rd) = setup();
        let e = resolve_over_b(&row(&r, &["x^2"]), &rd, 3).unwrap_err();
        assert_eq!(e, Error::NotAnnihilated { index: 2 });
    }

    #[test]
    fn free_b_module() {
        let (r, rd) = setup();
        let (f, q) = betti_with_fit(&row(&r, &["x^3", "y^3"]), &rd, 12, 40).unwrap();
        assert_eq!(f.betti().betti, [1]);
        assert_eq!(q.degree(), -1);
    }
}
