use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::BettiTable;
use crate::error::{Error, Result};

/// A pair of polynomials in `t` with rational coefficients (lowest degree
/// first) modelling `β_t` for even and odd `t ≥ valid_from`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPoly {
    pub q_ev: Vec<BigRational>,
    pub q_odd: Vec<BigRational>,
    pub valid_from: i64,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn eval(q: &[BigRational], t: i64) -> BigRational {
    let t = rat(t);
    q.iter().rev().fold(BigRational::zero(), |acc, c| acc * &t + c)
}

fn trim(mut q: Vec<BigRational>) -> Vec<BigRational> {
    while q.last().is_some_and(|c| c.is_zero()) {
        q.pop();
    }
    q
}

/// Newton interpolation through the points, expanded to coefficient form.
fn interpolate(points: &[(i64, BigRational)]) -> Vec<BigRational> {
    let n = points.len();
    let mut dd: Vec<BigRational> = points.iter().map(|p| p.1.clone()).collect();
    for k in 1..n {
        for i in (k..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / rat(points[i].0 - points[i - k].0);
        }
    }
    let mut coeffs = vec![BigRational::zero(); n];
    for k in (0..n).rev() {
        // coeffs = coeffs * (t − x_k) + dd[k]
        let x = rat(points[k].0);
        let mut next = vec![BigRational::zero(); n];
        for d in 0..n {
            if coeffs[d].is_zero() {
                continue;
            }
            if d + 1 < n {
                next[d + 1] += &coeffs[d];
            }
            next[d] -= &coeffs[d] * &x;
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    trim(coeffs)
}

/// Lowest-degree polynomial through all points, if one of degree at most
/// `len − 2` exists (at least one point is left over as a check).
fn fit_one(points: &[(i64, BigRational)]) -> Option<Vec<BigRational>> {
    (1..points.len()).find_map(|k| {
        let q = interpolate(&points[..k]);
        points[k..].iter().all(|(t, v)| &eval(&q, *t) == v).then_some(q)
    })
}

impl QuasiPoly {
    /// Degree of the common leading term; -1 for the zero quasi-polynomial.
    pub fn degree(&self) -> i64 {
        self.q_ev.len() as i64 - 1
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.q_ev.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, t: i64) -> BigRational {
        eval(if t % 2 == 0 { &self.q_ev } else { &self.q_odd }, t)
    }
}

/// Fits even and odd polynomials to the last `window` entries of `betti`
/// and extends `valid_from` backwards while the fit keeps predicting. Fails
/// with `IncreaseN` when the parities disagree in degree or leading
/// coefficient or when some parity has fewer than two points.
pub fn fit_quasi_polynomial(betti: &BettiTable, window: usize) -> Result<QuasiPoly> {
    let n = betti.betti.len();
    let increase = Error::IncreaseN { n: n.saturating_sub(1) };
    if window < 4 || n < window {
        return Err(increase);
    }
    let first = betti.start + (n - window) as i64;
    let points = |parity: i64| -> Vec<(i64, BigRational)> {
        (first..first + window as i64)
            .filter(|t| t.rem_euclid(2) == parity)
            .map(|t| (t, rat(betti.get(t) as i64)))
            .collect()
    };
    let (q_ev, q_odd) = match (fit_one(&points(0)), fit_one(&points(1))) {
        (Some(e), Some(o)) => (e, o),
        _ => return Err(increase),
    };
    if q_ev.len() != q_odd.len() || q_ev.last() != q_odd.last() || q_ev.last().is_some_and(|c| c.is_negative()) {
        return Err(increase);
    }
    let mut q = QuasiPoly { q_ev, q_odd, valid_from: first };
    while q.valid_from > betti.start && q.eval(q.valid_from - 1) == rat(betti.get(q.valid_from - 1) as i64) {
        q.valid_from -= 1;
    }
    Ok(q)
}

fn fmt_poly(q: &[BigRational], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (d, c) in q.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        match (d, abs.is_one()) {
            (0, _) => write!(f, "{abs}")?,
            (_, true) => write!(f, "t")?,
            _ => write!(f, "{abs}*t")?,
        }
        if d > 1 {
            write!(f, "^{d}")?;
        }
    }
    Ok(())
}

impl fmt::Display for QuasiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q_ev = ")?;
        fmt_poly(&self.q_ev, f)?;
        write!(f, ", q_odd = ")?;
        fmt_poly(&self.q_odd, f)?;
        write!(f, " (from i = {})", self.valid_from)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(start: i64, b: &[usize]) -> BettiTable {
        BettiTable { betti: b.to_vec(), start }
    }

    #[test]
    fn linear_tail() {
        let q = fit_quasi_polynomial(&table(4, &[7, 9, 10, 12, 13, 15]), 6).unwrap();
        assert_eq!(q.to_string(), "q_ev = 3/2*t + 1, q_odd = 3/2*t + 3/2 (from i = 4)");
        assert_eq!(q.degree(), 1);
    }

    #[test]
    fn constant_and_zero_tails() {
        let q = fit_quasi_polynomial(&table(0, &[1, 3, 2, 2, 2, 2, 2]), 4).unwrap();
        assert_eq!(q.q_ev, vec![rat(2)]);
        assert_eq!(q.q_odd, vec![rat(2)]);
        assert_eq!(q.valid_from, 2);
        let z = fit_quasi_polynomial(&table(0, &[1, 1, 0, 0, 0, 0]), 4).unwrap();
        assert_eq!(z.degree(), -1);
        assert_eq!(z.valid_from, 2);
    }

    #[test]
    fn disagreeing_parities_ask_for_more() {
        let e = fit_quasi_polynomial(&table(0, &[1, 2, 1, 3, 1, 4, 1, 5]), 8).unwrap_err();
        assert!(matches!(e, Error::IncreaseN { .. }));
        assert!(fit_quasi_polynomial(&table(0, &[1, 2, 3]), 4).is_err());
    }

    #[test]
    fn quadratic_interpolation() {
        let pts: Vec<(i64, BigRational)> = (0..4).map(|t| (2 * t, rat(4 * t * t + 1))).collect();
        // t^2 + 1 at even t
        assert_eq!(interpolate(&pts[..3]), vec![rat(1), rat(0), rat(1)]);
    }
}
