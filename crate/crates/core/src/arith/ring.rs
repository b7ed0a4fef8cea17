use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use super::field::Field;
use super::monomial::{Monomial, MAX_VARS};
use crate::error::{Error, Result};

/// Which polynomial ring a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// The ambient ring A = k[x_1..x_n].
    Base,
    /// The operator ring S = k[χ_1..χ_c].
    Operators,
    /// A ring with one auxiliary variable appended, used for radical tests.
    Extended,
}

/// A (cohomological, internal) bidegree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bideg {
    pub coh: i64,
    pub int: i64,
}

impl Bideg {
    pub const ZERO: Bideg = Bideg { coh: 0, int: 0 };

    pub fn new(coh: i64, int: i64) -> Bideg {
        Bideg { coh, int }
    }
}

impl Add for Bideg {
    type Output = Bideg;
    fn add(self, o: Bideg) -> Bideg {
        Bideg::new(self.coh + o.coh, self.int + o.int)
    }
}

impl Sub for Bideg {
    type Output = Bideg;
    fn sub(self, o: Bideg) -> Bideg {
        Bideg::new(self.coh - o.coh, self.int - o.int)
    }
}

impl Neg for Bideg {
    type Output = Bideg;
    fn neg(self) -> Bideg {
        Bideg::new(-self.coh, -self.int)
    }
}

impl fmt::Display for Bideg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.coh, self.int)
    }
}

/// A graded polynomial ring with a weighted graded reverse lexicographic
/// order. `weights` drive both the order and the degree used by Gröbner
/// computations; `bidegs` carry the full bigrading.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: Field,
    kind: RingKind,
    names: Vec<String>,
    weights: Vec<i64>,
    bidegs: Vec<Bideg>,
}

impl PolyRing {
    /// The ambient ring with the given variable names and positive weights.
    pub fn base(field: Field, names: Vec<String>, weights: Vec<i64>) -> Result<Arc<PolyRing>> {
        if names.is_empty() || names.len() >= MAX_VARS {
            return Err(Error::Invalid(format!(
                "rings need between 1 and {} variables",
                MAX_VARS - 1
            )));
        }
        if weights.len() != names.len() {
            return Err(Error::Invalid("one weight per variable is required".into()));
        }
        if let Some(w) = weights.iter().find(|&&w| w <= 0) {
            return Err(Error::Invalid(format!("weight {w} is not positive")));
        }
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Invalid(format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::Invalid(format!("duplicate variable `{n}`")));
            }
        }
        let bidegs = weights.iter().map(|&w| Bideg::new(0, w)).collect();
        Ok(Arc::new(PolyRing { field, kind: RingKind::Base, names, weights, bidegs }))
    }

    /// S = k[χ_1..χ_c] with χ_i of bidegree (2, internal_degrees[i]).
    pub fn operators(field: Field, internal_degrees: &[i64]) -> Arc<PolyRing> {
        assert!(internal_degrees.len() < MAX_VARS, "too many operators");
        let c = internal_degrees.len();
        Arc::new(PolyRing {
            field,
            kind: RingKind::Operators,
            names: (1..=c).map(|i| format!("chi{i}")).collect(),
            weights: vec![2; c],
            bidegs: internal_degrees.iter().map(|&d| Bideg::new(2, d)).collect(),
        })
    }

    /// This ring with one extra variable, ordered last, of weight 1.
    pub fn extended(&self) -> Arc<PolyRing> {
        assert!(self.names.len() < MAX_VARS, "no room for an auxiliary variable");
        let mut names = self.names.clone();
        names.push("_aux".to_string());
        let mut weights = self.weights.clone();
        weights.push(1);
        let mut bidegs = self.bidegs.clone();
        bidegs.push(Bideg::ZERO);
        Arc::new(PolyRing { field: self.field, kind: RingKind::Extended, names, weights, bidegs })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn var_bideg(&self, i: usize) -> Bideg {
        self.bidegs[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The ordering degree of a monomial.
    #[inline]
    pub fn degree(&self, m: &Monomial) -> i64 {
        m.weighted_degree(&self.weights)
    }

    pub fn bideg(&self, m: &Monomial) -> Bideg {
        let mut b = Bideg::ZERO;
        for (i, bd) in self.bidegs.iter().enumerate() {
            let e = m.exp(i) as i64;
            b = Bideg::new(b.coh + bd.coh * e, b.int + bd.int * e);
        }
        b
    }

    /// The component of a bidegree that matches the ordering degree.
    pub fn primary(&self, b: Bideg) -> i64 {
        match self.kind {
            RingKind::Operators => b.coh,
            RingKind::Base | RingKind::Extended => b.int,
        }
    }

    /// Monomial order: weighted degree, ties broken reverse lexicographically.
    #[inline]
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.degree(a).cmp(&self.degree(b)).then_with(|| self.cmp_revlex(a, b))
    }

    /// Reverse lexicographic tie-break (bigger means smaller exponent in the
    /// last differing variable).
    #[inline]
    pub fn cmp_revlex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for i in (0..self.names.len()).rev() {
            let (x, y) = (a.exp(i), b.exp(i));
            if x != y {
                return y.cmp(&x);
            }
        }
        Ordering::Equal
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, name) in self.names.iter().enumerate() {
            match m.exp(i) {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// True when two ring handles denote the same ring.
pub fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
