//! Exact rationals over arbitrary-precision integers.
//!
//! Every predicate in the crate (region membership, wall equalities, slope
//! comparisons) is decided on these values. There is deliberately no
//! floating-point path; `to_f64` exists only for human-readable display.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number, always in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, Error> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero("rational with zero denominator"));
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Shorthand for small literals; panics on a zero denominator.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("nonzero denominator")
    }

    pub fn int(v: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("reciprocal of zero"));
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Self, Error> {
        if other.is_zero() {
            return Err(Error::DivisionByZero("rational division by zero"));
        }
        Ok(Rational(&self.0 / &other.0))
    }

    pub fn pow(&self, exp: i32) -> Self {
        Rational(num_traits::Pow::pow(&self.0, exp))
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Display-only conversion.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    /// Rational with the smallest denominator strictly between `lo` and `hi`.
    pub fn simplest_between(lo: &Rational, hi: &Rational) -> Result<Rational, Error> {
        if lo >= hi {
            return Err(Error::EmptyRange(format!("({lo}, {hi})")));
        }
        // Shift so the search runs over a positive interval; the integer
        // shift does not change denominators.
        let shift = lo.floor();
        let a = lo - &Rational::int(shift.clone());
        let b = hi - &Rational::int(shift.clone());
        let inner = simplest_in_open(&a, &b);
        Ok(inner + Rational::int(shift))
    }
}

// Stern-Brocot style descent for 0 <= a < b.
fn simplest_in_open(a: &Rational, b: &Rational) -> Rational {
    let fa = a.floor();
    let candidate = Rational::int(&fa + BigInt::one());
    if &candidate < b {
        return candidate;
    }
    // a and b share the integer part fa, and b <= fa + 1.
    let int_part = Rational::int(fa.clone());
    let a_frac = a - &int_part;
    let b_frac = b - &int_part;
    if a_frac.is_zero() {
        // interval (fa, fa + b_frac); look for 1/m with 1/m < b_frac
        let m = b_frac.recip().expect("nonzero").floor() + BigInt::one();
        return int_part + Rational::new(1, m).expect("nonzero");
    }
    // recurse on reciprocals: x in (a_frac, b_frac) <=> 1/x in (1/b_frac, 1/a_frac)
    let inv = simplest_in_open(
        &b_frac.recip().expect("nonzero"),
        &a_frac.recip().expect("nonzero"),
    );
    int_part + inv.recip().expect("nonzero")
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational \"p/q\": {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                Rational::new(p, q)
            }
            None => {
                let p: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Rational::int(p))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::int(v)
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational::int(v)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && self.0.numer() == &BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer(BigInt::from(*other))))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $tr<i64> for Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                Rational(self.0 $op BigRational::from_integer(BigInt::from(rhs)))
            }
        }
        impl<'a> $tr<i64> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                Rational(&self.0 $op BigRational::from_integer(BigInt::from(rhs)))
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

// Division panics on a zero divisor like the integer operators do; fallible
// call sites use `checked_div`.
binop!(Div, div, /);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// gcd of arbitrary-precision integers, nonnegative.
pub fn big_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_lowest_terms() {
        let r: Rational = "6/-4".parse().unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!("7".parse::<Rational>().unwrap().to_string(), "7");
        assert_eq!("0/5".parse::<Rational>().unwrap().to_string(), "0");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn simplest_between_examples() {
        let s = Rational::simplest_between(&Rational::int(1), &Rational::int(3)).unwrap();
        assert_eq!(s, Rational::int(2));
        let s = Rational::simplest_between(&Rational::frac(1, 3), &Rational::frac(1, 2)).unwrap();
        assert_eq!(s, Rational::frac(2, 5));
        let s = Rational::simplest_between(&Rational::int(3), &Rational::int(4)).unwrap();
        assert_eq!(s, Rational::frac(7, 2));
        let s = Rational::simplest_between(&Rational::frac(-7, 3), &Rational::frac(-9, 4)).unwrap();
        assert!(s > Rational::frac(-7, 3) && s < Rational::frac(-9, 4));
        let s = Rational::simplest_between(&Rational::zero(), &Rational::frac(1, 10)).unwrap();
        assert_eq!(s, Rational::frac(1, 11));
        assert!(Rational::simplest_between(&Rational::int(2), &Rational::int(2)).is_err());
    }

    #[test]
    fn simplest_between_is_inside_and_minimal() {
        // brute force over small denominators
        let pts: Vec<Rational> = (-12..=12)
            .flat_map(|p| (1..=6).map(move |q| Rational::frac(p, q)))
            .collect();
        for a in &pts {
            for b in &pts {
                if a >= b {
                    continue;
                }
                let s = Rational::simplest_between(a, b).unwrap();
                assert!(&s > a && &s < b, "{s} not in ({a},{b})");
                let best_den = (1..=36i64)
                    .find(|q| {
                        let lo = (a * *q).floor() + 1;
                        Rational::int(lo) < b * *q
                    })
                    .unwrap();
                assert_eq!(s.denom(), &BigInt::from(best_den), "({a},{b}) -> {s}");
            }
        }
    }
}
