//! Lattice classes, extended slopes and genus.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::rational::Rational;

/// Numerical class `(n, d, k)`: rank, degree and dimension of the section
/// space. Components may be negative; a shift negates the class.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ClassVector {
    pub n: i64,
    pub d: i64,
    pub k: i64,
}

impl ClassVector {
    pub const ZERO: ClassVector = ClassVector { n: 0, d: 0, k: 0 };

    pub const fn new(n: i64, d: i64, k: i64) -> Self {
        ClassVector { n, d, k }
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    pub fn scale(&self, lambda: i64) -> Self {
        ClassVector::new(lambda * self.n, lambda * self.d, lambda * self.k)
    }

    pub fn as_array(&self) -> [i64; 3] {
        [self.n, self.d, self.k]
    }

    /// Components as rationals, in `(n, d, k)` order.
    pub fn rationals(&self) -> [Rational; 3] {
        [Rational::int(self.n), Rational::int(self.d), Rational::int(self.k)]
    }

    pub fn norm_squared(&self) -> Rational {
        let s = (self.n as i128).pow(2) + (self.d as i128).pow(2) + (self.k as i128).pow(2);
        Rational::int(s)
    }
}

/// True iff the 3x2 matrix `[a|b]` has rank at most one.
pub fn is_parallel(a: &ClassVector, b: &ClassVector) -> bool {
    let (a, b) = (
        [a.n as i128, a.d as i128, a.k as i128],
        [b.n as i128, b.d as i128, b.k as i128],
    );
    a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1]
}

impl Add for ClassVector {
    type Output = ClassVector;
    fn add(self, o: ClassVector) -> ClassVector {
        ClassVector::new(self.n + o.n, self.d + o.d, self.k + o.k)
    }
}

impl Sub for ClassVector {
    type Output = ClassVector;
    fn sub(self, o: ClassVector) -> ClassVector {
        ClassVector::new(self.n - o.n, self.d - o.d, self.k - o.k)
    }
}

impl Neg for ClassVector {
    type Output = ClassVector;
    fn neg(self) -> ClassVector {
        ClassVector::new(-self.n, -self.d, -self.k)
    }
}

impl std::iter::Sum for ClassVector {
    fn sum<I: Iterator<Item = ClassVector>>(iter: I) -> ClassVector {
        iter.fold(ClassVector::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.d, self.k)
    }
}

impl fmt::Debug for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ClassVector {
    type Err = Error;

    /// Accepts `n,d,k`, optionally wrapped in parentheses or brackets.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let parts: Vec<&str> = trimmed.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("class must be n,d,k: {s:?}")));
        }
        let mut v = [0i64; 3];
        for (slot, p) in v.iter_mut().zip(&parts) {
            *slot = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad class component {p:?} in {s:?}")))?;
        }
        Ok(ClassVector::new(v[0], v[1], v[2]))
    }
}

impl Serialize for ClassVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.as_array().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ClassVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [n, d, k] = <[i64; 3]>::deserialize(deserializer)?;
        Ok(ClassVector::new(n, d, k))
    }
}

/// A slope: a finite rational or `+inf`. There is no `-inf`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum SlopeValue {
    Finite(Rational),
    Infinity,
}

impl SlopeValue {
    pub fn is_infinite(&self) -> bool {
        matches!(self, SlopeValue::Infinity)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            SlopeValue::Finite(r) => Some(r),
            SlopeValue::Infinity => None,
        }
    }

    pub fn gt_rational(&self, beta: &Rational) -> bool {
        match self {
            SlopeValue::Finite(r) => r > beta,
            SlopeValue::Infinity => true,
        }
    }
}

pub fn compare_slopes(a: &SlopeValue, b: &SlopeValue) -> Ordering {
    match (a, b) {
        (SlopeValue::Infinity, SlopeValue::Infinity) => Ordering::Equal,
        (SlopeValue::Infinity, SlopeValue::Finite(_)) => Ordering::Greater,
        (SlopeValue::Finite(_), SlopeValue::Infinity) => Ordering::Less,
        (SlopeValue::Finite(x), SlopeValue::Finite(y)) => x.cmp(y),
    }
}

impl Ord for SlopeValue {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_slopes(self, other)
    }
}

impl PartialOrd for SlopeValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SlopeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeValue::Finite(r) => write!(f, "{r}"),
            SlopeValue::Infinity => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for SlopeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SlopeValue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "+inf" | "infinity" => Ok(SlopeValue::Infinity),
            other => Ok(SlopeValue::Finite(other.parse()?)),
        }
    }
}

impl Serialize for SlopeValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SlopeValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Arithmetic genus of the curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Genus(pub u32);

impl Genus {
    pub fn g(&self) -> i64 {
        i64::from(self.0)
    }

    /// Euler characteristic of the structure sheaf, `1 - g`.
    pub fn chi_structure_sheaf(&self) -> i64 {
        1 - self.g()
    }

    /// Degree of the dualizing sheaf, `2g - 2`.
    pub fn canonical_degree(&self) -> i64 {
        2 * self.g() - 2
    }
}
