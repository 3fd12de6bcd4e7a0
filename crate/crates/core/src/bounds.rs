//! Section-count and Clifford bounds, Clifford indices, extremal classes,
//! and the numerical admissibility filter used by every enumerator.

use serde::{Deserialize, Serialize};

use crate::class::{ClassVector, Genus};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Numerical data of a sheaf: rank, degree and, when known, `h^0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheafClass {
    pub n: i64,
    pub d: i64,
    pub h0: Option<i64>,
    pub g: Genus,
}

impl SheafClass {
    pub fn new(n: i64, d: i64, h0: Option<i64>, g: Genus) -> Self {
        SheafClass { n, d, h0, g }
    }

    /// `h^1` from Riemann-Roch, `h^0 - d - n(1-g)`, when `h^0` is recorded.
    pub fn h1(&self) -> Option<i64> {
        self.h0.map(|h0| h0 - self.d - self.n * self.g.chi_structure_sheaf())
    }
}

/// Which hypothesis the caller vouches for when bounding `h^0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum H0Hypothesis {
    /// The sheaf is semistable.
    Semistable,
    /// Every HN factor has nonnegative slope.
    MinSlopeNonneg,
    None,
}

/// Upper bound on `h^0`.
pub fn h0_upper(c: &SheafClass, hyp: H0Hypothesis) -> Result<i64> {
    if c.n < 0 {
        return Err(Error::Precondition(format!("rank must be nonnegative, got {}", c.n)));
    }
    if c.n == 0 {
        if c.d < 0 {
            return Err(Error::Inconsistent(format!("torsion sheaf of degree {}", c.d)));
        }
        return Ok(c.d);
    }
    match hyp {
        H0Hypothesis::Semistable if c.d < 0 => Ok(0),
        H0Hypothesis::Semistable => Ok(c.d + c.n),
        H0Hypothesis::MinSlopeNonneg if c.d < 0 => Err(Error::Inconsistent(format!(
            "minimal slope nonnegative but degree {} < 0",
            c.d
        ))),
        H0Hypothesis::MinSlopeNonneg => Ok(c.d + c.n),
        H0Hypothesis::None => Err(Error::Hypothesis(
            "no bound without semistability or a slope hypothesis".into(),
        )),
    }
}

/// Clifford bound `h^0 <= d/2 + n`, valid when `0 <= d/n <= 2g - 2`.
pub fn clifford_upper(c: &SheafClass) -> Result<Rational> {
    if c.n < 1 {
        return Err(Error::Precondition(format!("rank must be positive, got {}", c.n)));
    }
    if c.d < 0 || c.d > c.g.canonical_degree() * c.n {
        return Err(Error::Hypothesis(format!(
            "slope {} outside [0, {}]",
            Rational::frac(c.d, c.n),
            c.g.canonical_degree()
        )));
    }
    Ok(Rational::frac(c.d, 2) + c.n)
}

/// `k <= d + n` for a pure system.
pub fn system_section_bound(c: &ClassVector) -> Result<bool> {
    if c.n <= 0 {
        return Err(Error::Precondition(format!("{c} is not of positive rank")));
    }
    Ok(c.k <= c.d + c.n)
}

/// `k <= d/2 + n` for a pure system whose slope lies in `[0, 2g]`.
pub fn system_clifford_bound(c: &ClassVector, g: Genus) -> Result<bool> {
    if c.n <= 0 {
        return Err(Error::Precondition(format!("{c} is not of positive rank")));
    }
    if c.d < 0 || c.d > 2 * g.g() * c.n {
        return Err(Error::Hypothesis(format!(
            "slope of {c} outside [0, {}]",
            2 * g.g()
        )));
    }
    Ok(2 * c.k <= c.d + 2 * c.n)
}

/// `Cliff(E) = (d - 2(h^0 - n)) / n`. With a genus, Riemann-Roch supplies
/// `h^1` and the input is rejected when `h^1 < 0`.
pub fn clifford_index(n: i64, d: i64, h0: i64, g: Option<Genus>) -> Result<Rational> {
    if n < 1 {
        return Err(Error::Precondition(format!("rank must be positive, got {n}")));
    }
    if h0 < 0 {
        return Err(Error::Precondition(format!("h0 must be nonnegative, got {h0}")));
    }
    let value = Rational::frac(d - 2 * (h0 - n), n);
    if let Some(g) = g {
        let h1 = h0 - d - n * g.chi_structure_sheaf();
        if h1 < 0 {
            return Err(Error::Inconsistent(format!(
                "h0 = {h0} forces h1 = {h1} < 0 at n = {n}, d = {d}, g = {}",
                g.0
            )));
        }
        debug_assert_eq!(value, clifford_index_from_h1(n, h0, h1, g));
    }
    Ok(value)
}

/// The same index written through both cohomology dimensions:
/// `(g + 1) - (h^0 + h^1) / n`.
pub fn clifford_index_from_h1(n: i64, h0: i64, h1: i64, g: Genus) -> Rational {
    Rational::int(g.g() + 1) - Rational::frac(h0 + h1, n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", content = "partition")]
pub enum ExtremalVerdict {
    CompleteTrivial,
    P1Sums(Vec<i64>),
    NotExtremal,
    TorsionCase,
}

/// Classifies classes meeting `k = d + n`.
pub fn extremal_classify(c: &ClassVector, g: Genus) -> Result<ExtremalVerdict> {
    if c.n < 0 {
        return Err(Error::Precondition(format!("{c} has negative rank")));
    }
    if c.n == 0 {
        return Ok(ExtremalVerdict::TorsionCase);
    }
    if c.k <= 0 {
        return Err(Error::Precondition(format!("{c} has no sections")));
    }
    if c.k != c.d + c.n {
        return Ok(ExtremalVerdict::NotExtremal);
    }
    if g.0 >= 1 {
        return Ok(if c.d == 0 {
            ExtremalVerdict::CompleteTrivial
        } else {
            ExtremalVerdict::NotExtremal
        });
    }
    if c.d < 0 {
        return Ok(ExtremalVerdict::NotExtremal);
    }
    let mut parts = vec![0; c.n as usize];
    parts[0] = c.d;
    Ok(ExtremalVerdict::P1Sums(parts))
}

/// Necessary numerical conditions for `mu_alpha`-semistability. The
/// conditions do not depend on `alpha`, which is only range-checked.
pub fn admissible_semistable(c: &ClassVector, alpha: &Rational) -> Result<bool> {
    if alpha.is_negative() {
        return Err(Error::NegativeAlpha(alpha.to_string()));
    }
    if c.n < 0 || c.k < 0 {
        return Err(Error::Precondition(format!("{c} has negative rank or k")));
    }
    Ok(admissible_unchecked(c))
}

/// The filter without range checks, for enumerators that already keep
/// `n, k >= 0`.
pub(crate) fn admissible_unchecked(c: &ClassVector) -> bool {
    if (c.n == 0 || c.k > 0) && c.d < 0 {
        return false;
    }
    if c.n > 0 && c.k > 0 && c.k > c.d + c.n {
        return false;
    }
    true
}
