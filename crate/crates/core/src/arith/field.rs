//! Coefficient fields: prime fields GF(p) with word-size arithmetic and the
//! rationals with arbitrary-precision numerators and denominators.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// A coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// GF(p) for a prime `p < 2^31`.
    Prime(u32),
    /// The rational numbers.
    Rationals,
}

impl Field {
    /// GF(p), rejecting composite or out-of-range moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= (1u64 << 31) {
            return Err(Error::InvalidField(format!("modulus {p} is not below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Prime(p) => *p,
            Field::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod { v: 0, p: *p },
            Field::Rationals => Scalar::Rat(Box::new(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Prime(p) => {
                let v = n.rem_euclid(*p as i64) as u32;
                Scalar::Mod { v, p: *p }
            }
            Field::Rationals => Scalar::Rat(Box::new(BigRational::from_integer(BigInt::from(n)))),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Prime(p) => {
                let r = (n % BigInt::from(*p)).to_i64().unwrap_or(0);
                self.from_i64(r)
            }
            Field::Rationals => Scalar::Rat(Box::new(BigRational::from_integer(n.clone()))),
        }
    }

    /// Image of a rational number; `None` when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Option<Scalar> {
        match self {
            Field::Prime(_) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                den.inv().map(|d| &num * &d)
            }
            Field::Rationals => Some(Scalar::Rat(Box::new(q.clone()))),
        }
    }

    /// A uniformly random element of GF(p), or a small random integer over ℚ.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod { v: rng.random_range(0..*p), p: *p },
            Field::Rationals => self.from_i64(rng.random_range(-64..=64)),
        }
    }

    /// Every element, if the field is finite and small enough to enumerate.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Prime(p) if *p <= 1 << 16 => Some((0..*p as i64).map(|v| self.from_i64(v)).collect()),
            _ => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rationals => write!(f, "QQ"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`]. Mixing elements of different fields is a bug
/// and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { v: u32, p: u32 },
    Rat(Box<BigRational>),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod { p, .. } => Field::Prime(*p),
            Scalar::Rat(_) => Field::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { v, .. } => *v == 0,
            Scalar::Rat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { v, .. } => *v == 1,
            Scalar::Rat(q) => q.is_one(),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Mod { v, p } => Scalar::Mod { v: mod_pow(*v, *p - 2, *p), p: *p },
            Scalar::Rat(q) => Scalar::Rat(Box::new(q.recip())),
        })
    }

    /// Signed integer value when it fits (symmetric representative for GF(p)).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Mod { v, p } => {
                let v = *v as i64;
                let p = *p as i64;
                Some(if v > p / 2 { v - p } else { v })
            }
            Scalar::Rat(q) => {
                if q.is_integer() {
                    q.numer().to_i64()
                } else {
                    None
                }
            }
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative_repr(&self) -> bool {
        match self {
            Scalar::Mod { .. } => self.to_i64().is_some_and(|v| v < 0),
            Scalar::Rat(q) => q.is_negative(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn mod_pow(b: u32, mut e: u32, p: u32) -> u32 {
    let p64 = p as u64;
    let mut acc: u64 = 1;
    let mut base = b as u64 % p64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p64;
        }
        base = base * base % p64;
        e >>= 1;
    }
    acc as u32
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { .. } => write!(f, "{}", self.to_i64().unwrap_or_default()),
            Scalar::Rat(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) => {
                debug_assert_eq!(p, q);
                let s = *a as u64 + *b as u64;
                let p64 = *p as u64;
                Scalar::Mod { v: if s >= p64 { (s - p64) as u32 } else { s as u32 }, p: *p }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(a.as_ref() + b.as_ref())),
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) => {
                debug_assert_eq!(p, q);
                let v = if a >= b { a - b } else { p - (b - a) };
                Scalar::Mod { v, p: *p }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(a.as_ref() - b.as_ref())),
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) => {
                debug_assert_eq!(p, q);
                Scalar::Mod { v: ((*a as u64 * *b as u64) % *p as u64) as u32, p: *p }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(a.as_ref() * b.as_ref())),
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { v, p } => Scalar::Mod { v: if *v == 0 { 0 } else { p - v }, p: *p },
            Scalar::Rat(a) => Scalar::Rat(Box::new(-a.as_ref())),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(1 << 31).is_err());
        assert_eq!(Field::prime(101).unwrap(), Field::Prime(101));
    }

    #[test]
    fn prime_field_inverses() {
        let k = Field::prime(101).unwrap();
        for a in 1..101 {
            let x = k.from_i64(a);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert!(k.zero().inv().is_none());
    }

    #[test]
    fn symmetric_representatives() {
        let k = Field::Prime(101);
        assert_eq!(k.from_i64(-1).to_string(), "-1");
        assert_eq!(k.from_i64(50).to_string(), "50");
        assert_eq!(k.from_i64(51).to_string(), "-50");
    }

    #[test]
    fn rationals_are_exact() {
        let q = Field::Rationals;
        let third = q.from_i64(3).inv().unwrap();
        let s = &(&third + &third) + &third;
        assert!(s.is_one());
        assert_eq!(third.to_string(), "1/3");
    }
}
