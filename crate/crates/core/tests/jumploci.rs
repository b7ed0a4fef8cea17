mod common;

use common::*;
use jumploci_core::jumploci::{
    additivity_check, crk_at, duality_check, jump_locus_ideal, jump_locus_via_exterior_power, stable_betti_oracle,
    JumpLociReport, Model,
};
use jumploci_core::resolution::{betti_with_fit, dual_module_presentation, resolve, ModuleInput, RingData};
use jumploci_core::twisted::TwistedComplex;
use jumploci_core::{Error, Scalar};
use jumploci_core::groebner::Ideal;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn model(fixture: (RingData, ModuleInput)) -> Model {
    Model::build(&fixture.0, &fixture.1).unwrap()
}

fn chi(m: &Model, gens: &[&str]) -> Ideal {
    let s = m.ring().operators();
    Ideal::new(s, gens.iter().map(|g| poly(s, g)).collect())
}

fn plateaus(r: &JumpLociReport) -> Vec<(usize, usize, i64)> {
    r.loci.iter().map(|p| (p.i_from, p.i_to, p.dim)).collect()
}

fn all_fixtures() -> Vec<(&'static str, Model)> {
    vec![
        ("flag", model(flag())),
        ("final", model(final_example())),
        ("e_homotopies", model(e_homotopies())),
        ("koszulcx", model(koszulcx())),
        ("ring itself", model(ring_itself())),
    ]
}

#[test]
fn flag_table() {
    let m = model(flag());
    let r = m.report(0).unwrap();
    assert_eq!(r.rank, 16);
    assert_eq!(r.jump_numbers, [8, 12, 14, 16]);
    assert_eq!(plateaus(&r), [(0, 8, 3), (9, 12, 2), (13, 14, 1), (15, 16, 0), (17, 17, -1)]);
    assert_eq!(r.complexity, 3);
    assert_eq!(r.betti_degree, Some(4));
    // bdeg is half the end of the Spec S plateau
    assert_eq!(2 * r.betti_degree.unwrap() as usize, r.loci[0].i_to);
    assert_eq!(r.crk_generic, 8);
    let x = m.twisted();
    let (a, ab) = (r.loci[1].ideal.clone(), r.loci[2].ideal.clone());
    assert!(a.gens().len() == 1 && a.gens()[0].len() == 1);
    assert!(ab.variety_contained_in(&a));
    assert!(jump_locus_ideal(x, 15).variety_equal(&chi(&m, &["chi1", "chi2", "chi3"])));
    assert!(jump_locus_ideal(x, 17).is_unit());
    assert_eq!(m.bass_degree(0).unwrap(), Some(4));
}

#[test]
fn e_homotopies_table() {
    let m = model(e_homotopies());
    let r = m.report(0).unwrap();
    assert_eq!(plateaus(&r), [(0, 2, 2), (3, 4, 0), (5, 5, -1)]);
    assert!(r.loci[1].ideal.variety_equal(&chi(&m, &["chi1", "chi2"])));
    assert_eq!(r.crk_generic, 2);
    let zero = [m.ring().field().zero(), m.ring().field().zero()];
    assert_eq!(crk_at(m.twisted(), &zero).unwrap(), 4);
}

#[test]
fn koszulcx_table() {
    let m = model(koszulcx());
    let r = m.report(0).unwrap();
    assert_eq!(plateaus(&r), [(0, 4, 2), (5, 5, -1)]);
    assert!(r.loci[0].ideal.is_zero());
    assert_eq!(r.betti_degree, Some(2));
    let f = m.ring().field();
    for a in [[0, 0], [1, 0], [3, 7]] {
        assert_eq!(crk_at(m.twisted(), &[f.from_i64(a[0]), f.from_i64(a[1])]).unwrap(), 4);
    }
}

#[test]
fn ring_itself_is_perfect() {
    let m = model(ring_itself());
    let r = m.report(0).unwrap();
    assert_eq!(r.complexity, 0);
    assert_eq!(r.betti_degree, None);
    assert_eq!(m.bass_degree(0).unwrap(), None);
    assert!(jump_locus_ideal(m.twisted(), 1).variety_equal(&chi(&m, &["chi1", "chi2"])));
    assert!(jump_locus_ideal(m.twisted(), 5).is_unit());
}

#[test]
fn final_example_betti_and_degrees() {
    let (rd, input) = final_example();
    let ModuleInput::Presentation(p) = &input else { unreachable!() };
    let (res, q) = betti_with_fit(p, &rd, 20, 64).unwrap();
    let a = resolve(p, &[], None).unwrap();
    let dual = dual_module_presentation(&a, &rd).unwrap();
    let (dres, dq) = betti_with_fit(&dual, &rd, 20, 64).unwrap();
    for i in 4..=20i64 {
        // 3i/2 + 1 or 3i/2 + 3/2, and 3i/2 + 2 or 3i/2 + 3/2
        let (m, d) = if i % 2 == 0 { (3 * i / 2 + 1, 3 * i / 2 + 2) } else { ((3 * i + 3) / 2, (3 * i + 3) / 2) };
        assert_eq!(res.betti().get(i) as i64, m, "beta_{i}(M)");
        assert_eq!(dres.betti().get(i) as i64, d, "beta_{i}(M*)");
        assert_eq!(q.eval(i), BigRational::from_integer(m.into()));
        assert_eq!(dq.eval(i), BigRational::from_integer(d.into()));
    }
    assert_eq!(res.betti().get(0), 1);
    assert_eq!(dres.betti().get(0), 2);
    let m = Model::build(&rd, &input).unwrap();
    let r = m.report(0).unwrap();
    assert_eq!(r.complexity, 2);
    assert_eq!(q.degree() + 1, r.complexity as i64);
    assert_eq!(r.betti_degree, Some(3));
    assert_eq!(m.bass_degree(0).unwrap(), Some(3));
    let d = duality_check(&m, 0).unwrap();
    assert!(d.holds());
    assert_eq!(d.dual_report.betti_degree, Some(3));
}

#[test]
fn duality_on_every_fixture() {
    for (name, m) in all_fixtures() {
        let d = duality_check(&m, 0).unwrap();
        assert!(d.holds(), "{name}: {:?}", d.per_index_equal);
    }
}

#[test]
fn invariants_on_every_fixture() {
    for (name, m) in all_fixtures() {
        let x = m.twisted();
        let r = m.report(0).unwrap();
        assert!(x.is_minimal(), "{name}");
        assert_eq!(r.loci[0].i_from, 0);
        assert!(r.loci[0].ideal.is_zero(), "{name}: V^0 is Spec S");
        assert_eq!(*r.jump_numbers.first().unwrap() % 2, 0, "{name}: first jump number");
        assert_eq!(*r.jump_numbers.last().unwrap(), x.tbetti(), "{name}: last jump number");
        for i in 0..=r.rank + 1 {
            let v = jump_locus_ideal(x, i);
            assert!(v.variety_equal(r.locus(i)), "{name}: report at {i}");
            assert!(v.variety_equal(&jump_locus_via_exterior_power(x, i)), "{name}: routes at {i}");
            assert!(jump_locus_ideal(x, i + 1).variety_contained_in(&v), "{name}: descending at {i}");
            if i >= 1 && (r.rank - i.min(r.rank)) % 2 == 1 {
                assert!(v.variety_equal(&jump_locus_ideal(x, i + 1)), "{name}: parity at {i}");
            }
        }
        let h = x.cohomology_hilbert().unwrap();
        if r.complexity > 0 {
            assert_eq!(h.even.multiplicity, h.odd.multiplicity, "{name}: e(E) = e(O)");
        }
        let shifted = jump_loci_report_of(&x.shift(1));
        assert_eq!(plateaus(&shifted), plateaus(&r), "{name}: shift");
    }
}

fn jump_loci_report_of(x: &TwistedComplex) -> JumpLociReport {
    jumploci_core::jumploci::jump_loci_report(x, 0).unwrap()
}

#[test]
fn additivity_on_fixtures() {
    let x = model(e_homotopies()).twisted().clone();
    assert!(additivity_check(&x, &x, 0).unwrap());
    let doubled = jump_loci_report_of(&x.direct_sum(&x));
    assert!(doubled.locus(4).is_zero());
    let s = x.ring().clone();
    let contractible = TwistedComplex::zero(&s, vec![]);
    assert!(additivity_check(&x, &contractible, 0).unwrap());
    let y = model(koszulcx()).twisted().clone();
    assert_eq!(additivity_check(&x, &y, 0).unwrap_err(), Error::RingMismatch);
    let b = jumploci_core::Bideg::new;
    let z = TwistedComplex::zero(&s, vec![b(0, 0), b(1, 1), b(1, 1), b(2, 2)]);
    assert!(additivity_check(&x, &z, 0).unwrap());
}

fn random_point(rng: &mut ChaCha8Rng, field: jumploci_core::Field, c: usize) -> Vec<Scalar> {
    loop {
        let a: Vec<Scalar> = (0..c).map(|_| field.from_i64(rng.random_range(0..P as i64))).collect();
        if a.iter().any(|s| !s.is_zero()) {
            return a;
        }
    }
}

#[test]
fn stable_betti_matches_crk() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (fixture, points) in [(flag(), 20), (final_example(), 8), (ring_itself(), 3)] {
        let (rd, input) = fixture;
        let ModuleInput::Presentation(p) = &input else { unreachable!() };
        let m = Model::build(&rd, &input).unwrap();
        for _ in 0..points {
            let a = random_point(&mut rng, rd.field(), rd.c());
            assert_eq!(stable_betti_oracle(&rd, p, &a, 8, 128).unwrap(), crk_at(m.twisted(), &a).unwrap(), "{a:?}");
        }
    }
    let (rd, input) = final_example();
    let ModuleInput::Presentation(p) = &input else { unreachable!() };
    let m = Model::build(&rd, &input).unwrap();
    let a = [rd.field().one(), rd.field().zero()];
    assert_eq!(stable_betti_oracle(&rd, p, &a, 8, 128).unwrap(), crk_at(m.twisted(), &a).unwrap());
}

#[test]
fn pipeline_errors() {
    let r = ring(&["x", "y"]);
    let rd = ci(&r, &["x^3", "y^3"]);
    let not_annihilated = ModuleInput::Presentation(mat(&r, &[&["x^2"]]));
    assert_eq!(Model::build(&rd, &not_annihilated).unwrap_err(), Error::NotAnnihilated { index: 2 });
    let m = model(final_example());
    assert!(crk_at(m.twisted(), &[rd.field().one()]).is_err());
}
