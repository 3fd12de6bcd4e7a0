//! Enumeration of lattice points of a box subject to linear constraints.
//!
//! For each `(n, k)` in the box the constraints collapse to bounds on `d`,
//! so the scan walks an interval of `d` instead of the whole column.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::class::ClassVector;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Le,
    Lt,
    Eq,
}

/// `coeffs . (n, d, k)  rel  rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearConstraint {
    pub coeffs: [Rational; 3],
    pub rel: Relation,
    pub rhs: Rational,
    pub label: String,
}

impl LinearConstraint {
    pub fn new(coeffs: [Rational; 3], rel: Relation, rhs: Rational, label: &str) -> Self {
        LinearConstraint {
            coeffs,
            rel,
            rhs,
            label: label.to_string(),
        }
    }

    pub fn lhs(&self, c: &ClassVector) -> Rational {
        &self.coeffs[0] * c.n + &self.coeffs[1] * c.d + &self.coeffs[2] * c.k
    }

    pub fn holds(&self, c: &ClassVector) -> bool {
        let lhs = self.lhs(c);
        match self.rel {
            Relation::Le => lhs <= self.rhs,
            Relation::Lt => lhs < self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

impl fmt::Display for LinearConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (coef, var) in self.coeffs.iter().zip(["n", "d", "k"]) {
            if !coef.is_zero() {
                terms.push(format!("({coef}){var}"));
            }
        }
        let lhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        let rel = match self.rel {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Eq => "=",
        };
        write!(f, "{lhs} {rel} {}", self.rhs)
    }
}

/// Inclusive coordinate ranges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBox {
    pub n: (i64, i64),
    pub d: (i64, i64),
    pub k: (i64, i64),
}

impl LatticeBox {
    /// `|n|, |d|, |k| <= bound`.
    pub fn symmetric(bound: i64) -> Self {
        LatticeBox {
            n: (-bound, bound),
            d: (-bound, bound),
            k: (-bound, bound),
        }
    }

    pub fn contains(&self, c: &ClassVector) -> bool {
        (self.n.0..=self.n.1).contains(&c.n)
            && (self.d.0..=self.d.1).contains(&c.d)
            && (self.k.0..=self.k.1).contains(&c.k)
    }

    /// Intersects the `n` and `k` ranges with the given ones.
    pub fn clamp_n(mut self, lo: i64, hi: i64) -> Self {
        self.n = (self.n.0.max(lo), self.n.1.min(hi));
        self
    }

    pub fn clamp_k(mut self, lo: i64, hi: i64) -> Self {
        self.k = (self.k.0.max(lo), self.k.1.min(hi));
        self
    }
}

fn big_to_i64_clamped(x: BigInt, lo: i64, hi: i64) -> i64 {
    if x < BigInt::from(lo) {
        lo
    } else if x > BigInt::from(hi) {
        hi
    } else {
        i64::try_from(x).expect("within i64 range")
    }
}

/// Interval of `d` permitted by the constraints at fixed `(n, k)`, or
/// `None` when some constraint is infeasible for every `d`.
fn d_range(constraints: &[LinearConstraint], n: i64, k: i64, d0: (i64, i64)) -> Option<(i64, i64)> {
    let (mut lo, mut hi) = d0;
    for con in constraints {
        let rest = &con.coeffs[0] * n + &con.coeffs[2] * k;
        let a = &con.coeffs[1];
        let slack = &con.rhs - &rest;
        if a.is_zero() {
            let ok = match con.rel {
                Relation::Le => !slack.is_negative(),
                Relation::Lt => slack.is_positive(),
                Relation::Eq => slack.is_zero(),
            };
            if !ok {
                return None;
            }
            continue;
        }
        // a d rel slack
        let x = &slack / a;
        let (new_lo, new_hi) = match (con.rel, a.is_positive()) {
            (Relation::Eq, _) => {
                if !x.is_integer() {
                    return None;
                }
                (Some(x.floor()), Some(x.floor()))
            }
            (Relation::Le, true) => (None, Some(x.floor())),
            (Relation::Le, false) => (Some(x.ceil()), None),
            (Relation::Lt, true) => (None, Some(x.ceil() - 1)),
            (Relation::Lt, false) => (Some(x.floor() + 1), None),
        };
        if let Some(v) = new_lo {
            lo = lo.max(big_to_i64_clamped(v, i64::MIN / 4, i64::MAX / 4));
        }
        if let Some(v) = new_hi {
            hi = hi.min(big_to_i64_clamped(v, i64::MIN / 4, i64::MAX / 4));
        }
        if lo > hi {
            return None;
        }
    }
    Some((lo, hi))
}

/// All points of `bx` satisfying every constraint and `filter`, in
/// lexicographic `(n, d, k)` order. The zero class is never returned.
pub fn enumerate<F>(bx: &LatticeBox, constraints: &[LinearConstraint], filter: F) -> Vec<ClassVector>
where
    F: Fn(&ClassVector) -> bool + Sync,
{
    let ns: Vec<i64> = (bx.n.0..=bx.n.1).collect();
    let mut out: Vec<ClassVector> = ns
        .par_iter()
        .flat_map_iter(|&n| {
            let mut col = Vec::new();
            for k in bx.k.0..=bx.k.1 {
                if let Some((lo, hi)) = d_range(constraints, n, k, bx.d) {
                    for d in lo..=hi {
                        let c = ClassVector::new(n, d, k);
                        if !c.is_zero() && filter(&c) {
                            col.push(c);
                        }
                    }
                }
            }
            col
        })
        .collect();
    out.sort();
    out
}

/// Brute-force reference for [`enumerate`].
pub fn enumerate_naive<F>(bx: &LatticeBox, constraints: &[LinearConstraint], filter: F) -> Vec<ClassVector>
where
    F: Fn(&ClassVector) -> bool,
{
    let mut out = Vec::new();
    for n in bx.n.0..=bx.n.1 {
        for d in bx.d.0..=bx.d.1 {
            for k in bx.k.0..=bx.k.1 {
                let c = ClassVector::new(n, d, k);
                if !c.is_zero() && constraints.iter().all(|con| con.holds(&c)) && filter(&c) {
                    out.push(c);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::frac(p, q)
    }

    #[test]
    fn matches_naive_on_mixed_constraints() {
        let cons = vec![
            LinearConstraint::new([r(-2, 1), r(1, 1), r(1, 1)], Relation::Le, r(1, 1), "a"),
            LinearConstraint::new([r(2, 1), r(-1, 1), r(-1, 1)], Relation::Lt, r(0, 1), "b"),
            LinearConstraint::new([r(-5, 2), r(0, 1), r(1, 1)], Relation::Lt, r(1, 3), "c"),
            LinearConstraint::new([r(0, 1), r(-3, 2), r(1, 1)], Relation::Le, r(2, 1), "e"),
        ];
        let bx = LatticeBox::symmetric(7);
        let fast = enumerate(&bx, &cons, |c| c.n >= 0);
        let slow = enumerate_naive(&bx, &cons, |c| c.n >= 0);
        assert_eq!(fast, slow);
        assert!(!fast.is_empty());
    }

    #[test]
    fn equality_constraints() {
        let cons = vec![LinearConstraint::new([r(0, 1), r(2, 1), r(1, 1)], Relation::Eq, r(1, 1), "eq")];
        let bx = LatticeBox::symmetric(3);
        assert_eq!(enumerate(&bx, &cons, |_| true), enumerate_naive(&bx, &cons, |_| true));
    }

    #[test]
    fn display() {
        let c = LinearConstraint::new([r(1, 1), r(0, 1), r(-1, 2)], Relation::Lt, r(3, 1), "x");
        assert_eq!(c.to_string(), "(1)n + (-1/2)k < 3");
    }
}
