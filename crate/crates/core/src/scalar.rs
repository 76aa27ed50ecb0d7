//! Exact scalar fields: the rationals and small prime fields.
//!
//! Every algebraic object in the crate is generic over [`Scalar`]. Identities
//! are checked by exact equality, never by tolerance.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact field element.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// 0 for the rationals, `p` for GF(p).
    const CHARACTERISTIC: u64;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    /// Reduces `num/den` into the field; `None` when `den` vanishes in it.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self>;

    /// Explicit conversion from a rational, the only way between modes.
    fn from_rational(q: &BigRational) -> Option<Self> {
        Self::from_ratio(q.numer(), q.denom())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Enumerates every element when the field is finite.
    fn elements() -> Option<Vec<Self>> {
        None
    }
}

/// Rational numbers, always stored in lowest terms with a positive denominator.
pub type Q = BigRational;

impl Scalar for BigRational {
    const CHARACTERISTIC: u64 = 0;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        if Zero::is_zero(den) {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }
}

/// Element of the prime field GF(P), reduced to `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf<const P: u64>(u64);

pub type Gf2 = Gf<2>;
pub type Gf3 = Gf<3>;
pub type Gf5 = Gf<5>;
pub type Gf7 = Gf<7>;

impl<const P: u64> Gf<P> {
    pub fn new(v: i64) -> Self {
        Gf(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Gf(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Debug for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Gf<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Gf((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Gf<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Gf((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Gf<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Gf((self.0 * rhs.0) % P)
    }
}

impl<const P: u64> Neg for Gf<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Gf((P - self.0) % P)
    }
}

impl<const P: u64> Scalar for Gf<P> {
    const CHARACTERISTIC: u64 = P;

    fn zero() -> Self {
        Gf(0)
    }
    fn one() -> Self {
        Gf(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat: a^(p-2)
            Some(self.pow(P - 2))
        }
    }
    fn from_i64(v: i64) -> Self {
        Gf::new(v)
    }
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        let p = BigInt::from(P);
        let reduce = |v: &BigInt| -> u64 {
            let r = v.mod_floor(&p);
            r.abs().to_u64().expect("residue fits in u64")
        };
        let d = Gf::<P>(reduce(den));
        let n = Gf::<P>(reduce(num));
        d.inv().map(|di| n * di)
    }
    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Gf).collect())
    }
}

/// Parses `p`, `-p`, or `p/q` into a rational.
pub fn parse_rational(text: &str) -> Option<Q> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (text.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if Zero::is_zero(&den) {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Shorthand for building rationals in code and tests.
pub fn q(num: i64, den: i64) -> Q {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer-valued scalar.
pub fn s<S: Scalar>(v: i64) -> S {
    S::from_i64(v)
}

/// Integer-valued rational, used in tests and the corpus.
pub fn qi(v: i64) -> Q {
    BigRational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_normalize() {
        let x = q(2, -4);
        assert_eq!(x, q(-1, 2));
        assert!(x.denom().is_positive());
        assert_eq!(parse_rational("6/8"), Some(q(3, 4)));
        assert_eq!(parse_rational("-7"), Some(qi(-7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn prime_field_arithmetic() {
        let a = Gf3::new(-1);
        assert_eq!(a.value(), 2);
        assert_eq!(a * a, Gf3::one());
        assert_eq!(a.inv(), Some(a));
        assert_eq!(Gf2::new(3), Gf2::one());
        assert_eq!(Gf7::new(3).inv().map(|x| x * Gf7::new(3)), Some(Gf7::one()));
        assert!(Gf5::zero().inv().is_none());
        assert_eq!(Gf3::elements().unwrap().len(), 3);
    }

    #[test]
    fn rational_reduction_is_explicit() {
        assert_eq!(Gf3::from_rational(&q(1, 2)), Some(Gf3::new(2)));
        assert_eq!(Gf2::from_rational(&q(1, 2)), None);
        assert_eq!(Gf5::from_rational(&q(-3, 1)), Some(Gf5::new(2)));
    }
}
