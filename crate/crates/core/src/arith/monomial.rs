use std::fmt;

/// Maximum number of variables in any ring, including the auxiliary variable
/// of the radical test.
pub const MAX_VARS: usize = 12;

/// An exponent vector. Slots past the arity of the owning ring stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    e: [u16; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { e: [0; MAX_VARS] };

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut e = [0u16; MAX_VARS];
        for (slot, &x) in e.iter_mut().zip(exps) {
            *slot = u16::try_from(x).expect("exponent overflow");
        }
        Monomial { e }
    }

    pub fn var(i: usize) -> Monomial {
        let mut m = Monomial::ONE;
        m.e[i] = 1;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.e[i] as u32
    }

    pub fn set_exp(&mut self, i: usize, v: u32) {
        self.e[i] = u16::try_from(v).expect("exponent overflow");
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.e[..nvars].iter().map(|&x| x as u32).collect()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.e.iter().all(|&x| x == 0)
    }

    /// Standard total degree.
    pub fn total_degree(&self) -> u32 {
        self.e.iter().map(|&x| x as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        weights.iter().zip(&self.e).map(|(&w, &x)| w * x as i64).sum()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(&other.e) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial { e }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.e.iter().zip(&other.e).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            if self.e[i] > other.e[i] {
                return None;
            }
            e[i] = other.e[i] - self.e[i];
        }
        Some(Monomial { e })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(&other.e) {
            *a = (*a).max(*b);
        }
        Monomial { e }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(&other.e) {
            *a = (*a).min(*b);
        }
        Monomial { e }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.e.iter().zip(&other.e).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut e = self.e;
        for a in e.iter_mut() {
            *a = u16::try_from(*a as u32 * k).expect("exponent overflow");
        }
        Monomial { e }
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.e.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, _)| i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.e.iter().all(|&x| x <= 1)
    }

    /// Product of the variables in the support.
    pub fn radical(&self) -> Monomial {
        let mut e = self.e;
        for a in e.iter_mut() {
            *a = (*a).min(1);
        }
        Monomial { e }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.e.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
        write!(f, "m{:?}", &self.e[..last])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[2, 1]);
        let b = Monomial::from_exponents(&[1, 3]);
        assert_eq!(a.lcm(&b), Monomial::from_exponents(&[2, 3]));
        assert_eq!(a.gcd(&b), Monomial::from_exponents(&[1, 1]));
        assert!(!a.divides(&b));
        assert_eq!(a.quotient_of(&a.lcm(&b)), Some(Monomial::from_exponents(&[0, 2])));
        assert!(Monomial::var(0).coprime(&Monomial::var(1)));
    }
}
