use std::collections::BTreeMap;
use std::sync::Arc;

use jumploci_core::arith::minors::raw_minors;
use jumploci_core::groebner::Ideal;
use jumploci_core::jumploci::{
    additivity_check, crk_at, jump_loci_report, jump_locus_ideal, jump_locus_via_exterior_power, minor_ideals,
    JumpLociReport,
};
use jumploci_core::samples::{inflate, random_koszul_object};
use jumploci_core::twisted::TwistedComplex;
use jumploci_core::{Bideg, Field, Monomial, Poly, PolyMatrix, PolyRing, Scalar};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: u32 = 5;

fn base(n: usize) -> Arc<PolyRing> {
    let names = ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect();
    PolyRing::base(Field::Prime(Q), names, vec![1; n]).unwrap()
}

type Dense = BTreeMap<Vec<u32>, i64>;

fn dense_add(a: &Dense, b: &Dense, sign: i64) -> Dense {
    let mut out = a.clone();
    for (m, c) in b {
        *out.entry(m.clone()).or_insert(0) += sign * c;
    }
    out.retain(|_, c| c.rem_euclid(Q as i64) != 0);
    out.values_mut().for_each(|c| *c = c.rem_euclid(Q as i64));
    out
}

fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            *out.entry(m).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| c.rem_euclid(Q as i64) != 0);
    out.values_mut().for_each(|c| *c = c.rem_euclid(Q as i64));
    out
}

fn to_poly(r: &Arc<PolyRing>, d: &Dense) -> Poly {
    let f = r.field();
    Poly::from_terms(r, d.iter().map(|(m, c)| (Monomial::from_exponents(m), f.from_i64(*c))).collect())
}

fn to_dense(r: &Arc<PolyRing>, p: &Poly) -> Dense {
    p.terms()
        .iter()
        .map(|(m, c)| (m.exponents(r.nvars()), c.to_i64().unwrap().rem_euclid(Q as i64)))
        .collect()
}

fn exponents_up_to(n: usize, deg: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in exponents_up_to(n - 1, deg) {
        let used: u32 = rest.iter().sum();
        for e in 0..=deg - used {
            let mut m = rest.clone();
            m.push(e);
            out.push(m);
        }
    }
    out
}

fn all_dense(n: usize, deg: u32) -> Vec<Dense> {
    let monos = exponents_up_to(n, deg);
    let mut out = vec![Dense::new()];
    for m in monos {
        out = out
            .into_iter()
            .flat_map(|d| {
                let m = m.clone();
                (0..Q as i64).map(move |c| {
                    let mut d = d.clone();
                    if c != 0 {
                        d.insert(m.clone(), c);
                    }
                    d
                })
            })
            .collect();
    }
    out
}

fn check_ops(r: &Arc<PolyRing>, a: &Dense, b: &Dense) {
    let (pa, pb) = (to_poly(r, a), to_poly(r, b));
    assert_eq!(to_dense(r, &(&pa + &pb)), dense_add(a, b, 1));
    assert_eq!(to_dense(r, &(&pa - &pb)), dense_add(a, b, -1));
    assert_eq!(to_dense(r, &(&pa * &pb)), dense_mul(a, b));
}

#[test]
fn arithmetic_matches_dense_oracle_exhaustively() {
    // every pair of polynomials in one variable of degree ≤ 2 and in two
    // variables of degree ≤ 1 over GF(5)
    for (n, deg) in [(1, 2), (2, 1)] {
        let r = base(n);
        let all = all_dense(n, deg);
        assert_eq!(all.len(), 125);
        for a in &all {
            for b in &all {
                check_ops(&r, a, b);
            }
        }
    }
}

fn arb_dense(n: usize, deg: u32) -> impl Strategy<Value = Dense> {
    let monos = exponents_up_to(n, deg);
    proptest::collection::vec(0..Q as i64, monos.len()).prop_map(move |cs| {
        monos.iter().cloned().zip(cs).filter(|(_, c)| *c != 0).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn arithmetic_matches_dense_oracle(a in arb_dense(3, 3), b in arb_dense(3, 3)) {
        check_ops(&base(3), &a, &b);
    }
}

fn monomials_of_degree(n: usize, deg: u32) -> Vec<Vec<u32>> {
    exponents_up_to(n, deg).into_iter().filter(|m| m.iter().sum::<u32>() == deg).collect()
}

fn random_homogeneous(rng: &mut ChaCha8Rng, r: &Arc<PolyRing>, deg: u32, terms: usize) -> Poly {
    let monos = monomials_of_degree(r.nvars(), deg);
    let d: Dense = (0..terms).map(|_| (monos[rng.random_range(0..monos.len())].clone(), rng.random_range(1..Q as i64))).collect();
    to_poly(r, &d)
}

/// `f ∈ I` in degree `d` by linear algebra on the span of `m·g`.
fn in_span(r: &Arc<PolyRing>, gens: &[Poly], f: &Poly, d: u32) -> bool {
    let monos = monomials_of_degree(r.nvars(), d);
    let index: BTreeMap<Vec<u32>, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let f_field = r.field();
    let row = |p: &Poly| -> Vec<Scalar> {
        let mut v = vec![f_field.zero(); monos.len()];
        for (m, c) in p.terms() {
            v[index[&m.exponents(r.nvars())]] = c.clone();
        }
        v
    };
    let mut rows = Vec::new();
    for g in gens {
        let gd = g.degree().unwrap() as u32;
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(r.nvars(), d - gd) {
            rows.push(row(&g.mul_term(&Monomial::from_exponents(&m), &f_field.one())));
        }
    }
    let base_rank = jumploci_core::ScalarMatrix::from_rows(f_field, rows.clone()).rank();
    rows.push(row(f));
    let with_f = jumploci_core::ScalarMatrix::from_rows(f_field, rows).rank();
    base_rank == with_f
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn membership_matches_linear_algebra(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = base(3);
        let gens: Vec<Poly> = (0..rng.random_range(1..=3))
            .map(|_| { let d = rng.random_range(1..=2); random_homogeneous(&mut rng, &r, d, 2) })
            .filter(|g| !g.is_zero())
            .collect();
        let ideal = Ideal::new(&r, gens.clone());
        let d = rng.random_range(2..=4);
        // a combination of generators, perturbed or not
        let mut f = Poly::zero(&r);
        for g in &gens {
            let gd = g.degree().unwrap() as u32;
            if gd <= d {
                f = &f + &(&random_homogeneous(&mut rng, &r, d - gd, 2) * g);
            }
        }
        if rng.random_bool(0.5) {
            f = &f + &random_homogeneous(&mut rng, &r, d, 1);
        }
        prop_assert_eq!(ideal.contains(&f), in_span(&r, &gens, &f, d));
    }

    #[test]
    fn hilbert_series_counts_standard_monomials(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = base(3);
        let gens: Vec<Vec<u32>> = (0..rng.random_range(1..=4))
            .map(|_| { let d = rng.random_range(1..=3); let ms = monomials_of_degree(3, d); ms[rng.random_range(0..ms.len())].clone() })
            .collect();
        let ideal = Ideal::new(&r, gens.iter().map(|m| Poly::monomial(&r, Monomial::from_exponents(m), r.field().one())).collect());
        let series = ideal.hilbert().series(6);
        for d in 0..=6u32 {
            let count = monomials_of_degree(3, d)
                .into_iter()
                .filter(|m| !gens.iter().any(|g| g.iter().zip(m).all(|(a, b)| a <= b)))
                .count() as i64;
            prop_assert_eq!(series.get(&(d as i64)).copied().unwrap_or(0), count, "degree {}", d);
        }
    }

    #[test]
    fn variety_equality_of_monomial_ideals(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = base(3);
        let pick = |rng: &mut ChaCha8Rng| -> Vec<Vec<u32>> {
            (0..rng.random_range(1..=3))
                .map(|_| (0..3).map(|_| rng.random_range(0..=2)).collect::<Vec<u32>>())
                .filter(|m: &Vec<u32>| m.iter().any(|&e| e > 0))
                .collect()
        };
        let (a, b) = (pick(&mut rng), pick(&mut rng));
        let ideal = |ms: &[Vec<u32>]| Ideal::new(&r, ms.iter().map(|m| Poly::monomial(&r, Monomial::from_exponents(m), r.field().one())).collect());
        // V(I) = V(J) iff the minimal squarefree supports agree
        let supports = |ms: &[Vec<u32>]| -> Vec<Vec<bool>> {
            let mut s: Vec<Vec<bool>> = ms.iter().map(|m| m.iter().map(|&e| e > 0).collect()).collect();
            s.sort();
            s.dedup();
            let keep: Vec<Vec<bool>> = s.iter().filter(|x| !s.iter().any(|y| y != *x && y.iter().zip(x.iter()).all(|(p, q)| !p || *q))).cloned().collect();
            keep
        };
        let (ia, ib) = (ideal(&a), ideal(&b));
        prop_assert_eq!(ia.variety_equal(&ib), supports(&a) == supports(&b));
        prop_assert!(ia.variety_equal(&ia.product(&ia)));
        prop_assert!(ia.variety_contained_in(&ia.product(&ib)));
    }

    #[test]
    fn rank_matches_minors(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = base(2);
        let (n, m) = (rng.random_range(1..=4), rng.random_range(1..=4));
        let rows: Vec<Bideg> = (0..n).map(|_| Bideg::new(0, rng.random_range(0..=1))).collect();
        let cols: Vec<Bideg> = (0..m).map(|_| Bideg::new(0, rng.random_range(1..=2))).collect();
        let mut p = PolyMatrix::zero(&r, rows.clone(), cols.clone(), Bideg::ZERO);
        for i in 0..n {
            for j in 0..m {
                if rng.random_bool(0.6) {
                    let d = (cols[j].int - rows[i].int) as u32;
                    p.set(i, j, random_homogeneous(&mut rng, &r, d, 2));
                }
            }
        }
        let t = n.min(m);
        let minors = raw_minors(&p, t);
        let largest_nonzero = (1..=t).rev().find(|&k| minors[k - 1].iter().any(|q| !q.is_zero())).unwrap_or(0);
        prop_assert_eq!(p.generic_rank(), largest_nonzero);
        let f = r.field();
        let a = [f.from_i64(rng.random_range(0..5)), f.from_i64(rng.random_range(0..5))];
        let at_a = (1..=t).rev().find(|&k| minors[k - 1].iter().any(|q| !q.eval(&a).unwrap().is_zero())).unwrap_or(0);
        prop_assert_eq!(p.eval(&a).unwrap().rank(), at_a);
        for (k, ideal) in minor_ideals(&p, t).iter().enumerate() {
            prop_assert_eq!(ideal.is_zero(), minors[k].iter().all(|q| q.is_zero()));
        }
    }
}

fn operators() -> Arc<PolyRing> {
    PolyRing::operators(Field::Prime(Q), &[2, 2])
}

fn random_complex(rng: &mut ChaCha8Rng) -> TwistedComplex {
    let s = operators();
    let nu = rng.random_range(1..=2);
    let mut x = random_koszul_object(rng, &s, nu, 2, 2);
    if rng.random_bool(0.5) {
        x = x.direct_sum(&random_koszul_object(rng, &s, 1, 2, 2));
    }
    x
}

fn same_report(a: &JumpLociReport, b: &JumpLociReport) -> bool {
    let bounds = |r: &JumpLociReport| r.loci.iter().map(|p| (p.i_from, p.i_to)).collect::<Vec<_>>();
    bounds(a) == bounds(b) && a.loci.iter().zip(&b.loci).all(|(p, q)| p.ideal.variety_equal(&q.ideal)) && a.betti_degree == b.betti_degree
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn random_twisted_complexes_satisfy_invariants(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_complex(&mut rng);
        TwistedComplex::new(x.differential().clone()).unwrap();
        let r = jump_loci_report(&x, 0).unwrap();
        prop_assert!(r.loci[0].ideal.is_zero());
        prop_assert_eq!(r.jump_numbers[0] % 2, 0);
        prop_assert_eq!(*r.jump_numbers.last().unwrap(), x.tbetti());
        for i in 0..=r.rank + 1 {
            let v = jump_locus_ideal(&x, i);
            prop_assert!(v.variety_equal(&jump_locus_via_exterior_power(&x, i)), "routes at {}", i);
            prop_assert!(jump_locus_ideal(&x, i + 1).variety_contained_in(&v), "descending at {}", i);
            if i >= 1 && i <= r.rank && (r.rank - i) % 2 == 1 {
                prop_assert!(v.variety_equal(&jump_locus_ideal(&x, i + 1)), "parity at {}", i);
            }
        }
        let f = x.ring().field();
        for _ in 0..3 {
            let a = [f.from_i64(rng.random_range(0..5)), f.from_i64(rng.random_range(0..5))];
            prop_assert_eq!(crk_at(&x, &a).unwrap() % 2, r.rank % 2);
        }
        let h = x.cohomology_hilbert().unwrap();
        if h.total.dimension > 0 {
            prop_assert_eq!(h.even.multiplicity, h.odd.multiplicity);
        }
    }

    #[test]
    fn reports_ignore_inflation_and_shift(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_complex(&mut rng);
        let pairs = rng.random_range(1..=3);
        let y = inflate(&mut rng, &x, pairs);
        prop_assert!(!y.is_minimal());
        prop_assert_eq!(y.tbetti(), x.rank());
        let r = jump_loci_report(&x, 0).unwrap();
        prop_assert!(same_report(&r, &jump_loci_report(&y, 0).unwrap()));
        prop_assert!(same_report(&r, &jump_loci_report(&x.shift(3), 0).unwrap()));
    }

    #[test]
    fn direct_sums_are_additive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (random_complex(&mut rng), random_complex(&mut rng));
        prop_assert!(additivity_check(&x, &y, 0).unwrap());
    }
}
