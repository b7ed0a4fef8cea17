//! Hilbert series of monomial quotients and modules with monomial leads.

use std::collections::BTreeMap;

use crate::arith::Monomial;

/// A Laurent polynomial in `t` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl TPoly {
    pub fn zero() -> TPoly {
        TPoly::default()
    }

    pub fn monomial(exp: i64, c: i64) -> TPoly {
        let mut p = TPoly::zero();
        p.add_term(exp, c);
        p
    }

    pub fn add_term(&mut self, exp: i64, c: i64) {
        let e = self.coeffs.entry(exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add(&mut self, other: &TPoly) {
        for (&e, &c) in &other.coeffs {
            self.add_term(e, c);
        }
    }

    pub fn shifted(&self, by: i64) -> TPoly {
        TPoly { coeffs: self.coeffs.iter().map(|(&e, &c)| (e + by, c)).collect() }
    }

    pub fn mul(&self, other: &TPoly) -> TPoly {
        let mut out = TPoly::zero();
        for (&a, &x) in &self.coeffs {
            for (&b, &y) in &other.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Coefficients from the lowest exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    /// Exact division by `1 - t`, if it divides.
    pub fn div_one_minus_t(&self) -> Option<TPoly> {
        // p = (1 - t) q  ⇔  q_e = Σ_{e' ≤ e} p_{e'}
        let (&lo, _) = self.coeffs.first_key_value()?;
        let (&hi, _) = self.coeffs.last_key_value()?;
        let mut q = TPoly::zero();
        let mut run = 0;
        for e in lo..hi {
            run += self.coeffs.get(&e).copied().unwrap_or(0);
            q.add_term(e, run);
        }
        run += self.coeffs.get(&hi).copied().unwrap_or(0);
        (run == 0).then_some(q)
    }

    /// Power series coefficients of `self / Π (1 - t^{w_i})` up to degree `max`.
    pub fn series(&self, weights: &[i64], max: i64) -> BTreeMap<i64, i64> {
        let lo = self.coeffs.first_key_value().map_or(0, |(&e, _)| e);
        let len = (max - lo + 1).max(0) as usize;
        let mut s = vec![0i64; len];
        for (&e, &c) in &self.coeffs {
            if e <= max {
                s[(e - lo) as usize] += c;
            }
        }
        for &w in weights {
            for k in w as usize..len {
                s[k] += s[k - w as usize];
            }
        }
        s.into_iter().enumerate().map(|(k, c)| (lo + k as i64, c)).collect()
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N` with `HS(R/I) = N / Π (1 - t^{w_i})` for the monomial ideal
/// generated by `gens`.
pub fn monomial_numerator(gens: &[Monomial], weights: &[i64]) -> TPoly {
    numerator_rec(minimalize(gens.to_vec()), weights)
}

fn numerator_rec(gens: Vec<Monomial>, weights: &[i64]) -> TPoly {
    let deg = |m: &Monomial| m.weighted_degree(weights);
    if gens.is_empty() {
        return TPoly::monomial(0, 1);
    }
    if gens.iter().any(|g| g.is_one()) {
        return TPoly::zero();
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.coprime(b)));
    if pairwise_coprime {
        let mut out = TPoly::monomial(0, 1);
        for g in &gens {
            let mut f = TPoly::monomial(0, 1);
            f.add_term(deg(g), -1);
            out = out.mul(&f);
        }
        return out;
    }
    // pivot on the variable occurring in the most generators
    let nvars = weights.len();
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for i in g.support() {
            counts[i] += 1;
        }
    }
    let var = (0..nvars).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).expect("some variable");
    let mut exps: Vec<u32> = gens.iter().map(|g| g.exp(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let mut e = exps[exps.len() / 2].max(1);
    // the pivot must stay outside the ideal
    if let Some(k) = gens.iter().filter(|g| g.total_degree() == g.exp(var)).map(|g| g.exp(var)).min() {
        e = e.min(k - 1);
    }
    let mut pivot = Monomial::ONE;
    pivot.set_exp(var, e);
    let mut plus = gens.clone();
    plus.push(pivot);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut h = *g;
            h.set_exp(var, g.exp(var).saturating_sub(e));
            h
        })
        .collect();
    let mut out = numerator_rec(minimalize(plus), weights);
    out.add(&numerator_rec(minimalize(colon), weights).shifted(deg(&pivot)));
    out
}

/// Hilbert series data of a graded module `⊕_c R(-shift_c) / U` given the
/// lead monomials of a Gröbner basis of `U`, with every variable of degree 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Numerator over `(1 - t)^nvars`.
    pub numerator: TPoly,
    pub nvars: usize,
    /// Krull dimension; -1 for the zero module.
    pub dimension: i64,
    /// Multiplicity; `None` for the zero module.
    pub multiplicity: Option<u64>,
}

impl HilbertData {
    pub fn from_leads(nvars: usize, leads: &[(Monomial, u32)], shifts: &[i64]) -> HilbertData {
        let weights = vec![1i64; nvars];
        let mut by_comp: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
        for (m, c) in leads {
            by_comp.entry(*c).or_default().push(*m);
        }
        let mut numerator = TPoly::zero();
        for (c, &s) in shifts.iter().enumerate() {
            let gens = by_comp.remove(&(c as u32)).unwrap_or_default();
            numerator.add(&monomial_numerator(&gens, &weights).shifted(s));
        }
        HilbertData::from_numerator(numerator, nvars)
    }

    pub fn from_numerator(numerator: TPoly, nvars: usize) -> HilbertData {
        if numerator.is_zero() {
            return HilbertData { numerator, nvars, dimension: -1, multiplicity: None };
        }
        let mut q = numerator.clone();
        let mut k = 0usize;
        while q.at_one() == 0 {
            q = q.div_one_minus_t().expect("vanishing at 1 implies divisibility");
            k += 1;
        }
        let mult = q.at_one();
        debug_assert!(mult > 0);
        HilbertData { numerator, nvars, dimension: nvars as i64 - k as i64, multiplicity: Some(mult as u64) }
    }

    /// Hilbert function values up to degree `max`.
    pub fn series(&self, max: i64) -> BTreeMap<i64, i64> {
        self.numerator.series(&vec![1; self.nvars], max)
    }
}
