//! Parameter regions, the BG coefficient solver, discreteness of the
//! imaginary part, and comparison of charges up to `GL+(2, R)`.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::charges::ChargeFamily;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamTriple {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl ParamTriple {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        ParamTriple { alpha, beta, gamma }
    }

    pub fn ints(alpha: i64, beta: i64, gamma: i64) -> Self {
        ParamTriple::new(alpha.into(), beta.into(), gamma.into())
    }
}

pub fn in_ps(p: &ParamTriple) -> bool {
    !p.alpha.is_negative() && !p.beta.is_negative() && p.gamma > 1
}

/// Threshold on gamma that defines `S` at the given `(alpha, beta)`, with
/// `true` when the inequality is strict. Requires `beta` outside `{0, 1}`.
pub fn s_threshold(alpha: &Rational, beta: &Rational) -> Result<(Rational, bool)> {
    if beta.is_zero() || *beta == 1 {
        return Err(Error::Precondition(format!("beta = {beta} lies outside S")));
    }
    if !alpha.is_positive() {
        return Err(Error::UndefinedThreshold(format!(
            "alpha = {alpha}; the S thresholds divide by alpha"
        )));
    }
    if *beta > 1 {
        let num = beta * beta + alpha * beta * 2 - alpha;
        let den = alpha * (beta - 1);
        Ok((num / den, false))
    } else {
        let one_minus_alpha = Rational::one() - alpha;
        Ok((Rational::one() + beta * one_minus_alpha / (alpha * 2), true))
    }
}

pub fn in_s(p: &ParamTriple) -> Result<bool> {
    if !in_ps(p) || p.beta.is_zero() || p.beta == 1 {
        return Ok(false);
    }
    let (th, strict) = s_threshold(&p.alpha, &p.beta)?;
    Ok(if strict { p.gamma > th } else { p.gamma >= th })
}

/// True when gamma sits exactly on the `S` threshold.
pub fn on_s_boundary(p: &ParamTriple) -> bool {
    match s_threshold(&p.alpha, &p.beta) {
        Ok((th, _)) => p.gamma == th,
        Err(_) => false,
    }
}

/// A real interval with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Rational,
    pub lo_closed: bool,
    pub hi: Rational,
    pub hi_closed: bool,
}

impl Interval {
    pub fn is_empty(&self) -> bool {
        if self.lo_closed && self.hi_closed {
            self.lo > self.hi
        } else {
            self.lo >= self.hi
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = if self.lo_closed { x >= &self.lo } else { x > &self.lo };
        let below = if self.hi_closed { x <= &self.hi } else { x < &self.hi };
        above && below
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / 2
    }
}

/// Admissible values of `t` for the BG construction, following the case
/// analysis on `beta`.
///
/// For `beta < 1` the window is the one obtained by the same case analysis,
/// `0 < t <= min((alpha+1)/(1-beta), T9)`. Note that `u >= 1` cannot hold for
/// any `t > 0` when `beta < 1`; `bg_solve` reports that through its `u_ge_1`
/// flag.
pub fn t_window(alpha: &Rational, beta: &Rational, gamma: &Rational) -> Result<Option<Interval>> {
    if !alpha.is_positive() {
        return Err(Error::Precondition(format!("alpha must be positive, got {alpha}")));
    }
    if !beta.is_positive() {
        return Err(Error::Precondition(format!("beta must be positive, got {beta}")));
    }
    if *beta == 1 {
        return Err(Error::NoWindow("beta = 1 admits no t with t(beta-1) >= alpha+1".into()));
    }
    let app9 = (alpha * (gamma - 1) * 2 + beta * (alpha - 1)) / (beta * (beta + 1));
    let window = if *beta > 1 {
        Interval {
            lo: (alpha + 1) / (beta - 1),
            lo_closed: true,
            hi: app9,
            hi_closed: true,
        }
    } else {
        let cap = (alpha + 1) / (Rational::one() - beta);
        Interval {
            lo: Rational::zero(),
            lo_closed: false,
            hi: cap.min(app9),
            hi_closed: true,
        }
    };
    Ok(if window.is_empty() { None } else { Some(window) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidityFlags {
    pub p_nonneg: bool,
    pub q_nonneg: bool,
    pub u_ge_1: bool,
    pub u_le_alpha_plus_1: bool,
    pub t_positive: bool,
}

impl ValidityFlags {
    pub fn all(&self) -> bool {
        self.p_nonneg && self.q_nonneg && self.u_ge_1 && self.u_le_alpha_plus_1 && self.t_positive
    }
}

/// Coefficients of the discriminant and its linear decomposition, with the
/// `Re` row `(A, B, C)` and the `Im` row `(D, E, F)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct BGCoefficients {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub t: Rational,
    pub p: Rational,
    pub q: Rational,
    pub u: Rational,
    pub A: Rational,
    pub B: Rational,
    pub C: Rational,
    pub D: Rational,
    pub E: Rational,
    pub F: Rational,
    pub validity: ValidityFlags,
}

impl BGCoefficients {
    pub fn delta_r(&self) -> [Rational; 3] {
        [self.A.clone(), self.B.clone(), self.C.clone()]
    }

    pub fn delta_i(&self) -> [Rational; 3] {
        [self.D.clone(), self.E.clone(), self.F.clone()]
    }

    /// Real row of the dagger charge on `(n, d, k)`: `(1 + tD, tE, tF)`.
    pub fn dagger_re_row(&self) -> [Rational; 3] {
        [
            &self.t * &self.D + 1,
            &self.t * &self.E,
            &self.t * &self.F,
        ]
    }

    /// True iff the dagger real row equals `(gamma, 1, -1)`.
    pub fn reconstructs(&self) -> bool {
        self.dagger_re_row() == [self.gamma.clone(), Rational::one(), Rational::int(-1)]
    }

    pub fn dagger_family(&self) -> ChargeFamily {
        ChargeFamily::Dagger {
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            t: self.t.clone(),
            delta_i: self.delta_i(),
        }
    }
}

/// Solves for the BG coefficients at a given `t`.
pub fn bg_solve(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    t: &Rational,
) -> Result<BGCoefficients> {
    if alpha.is_zero() {
        return Err(Error::DivisionByZero("alpha = 0"));
    }
    if beta.is_zero() {
        return Err(Error::DivisionByZero("beta = 0"));
    }
    if t.is_zero() {
        return Err(Error::DivisionByZero("t = 0"));
    }
    let u = (t * beta * (alpha + 2) - alpha * (alpha + t + 1)) / (t * beta * 2);
    let p = (alpha - &u + 1) / (alpha * alpha);
    let a = (alpha - t * (beta + 1) - 1) / (t * alpha * 2);
    let q = (alpha * (gamma - 1) * 2 + beta * (alpha - t * (beta + 1) - 1)) / (t * alpha * 2);
    let b = -&p;
    let c = &p * alpha - 1;
    let d = &q - &a * beta;
    let e = &a + &p * beta;
    let f = &a * alpha + 1 - &c * beta;
    let validity = ValidityFlags {
        p_nonneg: !p.is_negative(),
        q_nonneg: !q.is_negative(),
        u_ge_1: u >= 1,
        u_le_alpha_plus_1: u <= alpha + 1,
        t_positive: t.is_positive(),
    };
    Ok(BGCoefficients {
        alpha: alpha.clone(),
        beta: beta.clone(),
        gamma: gamma.clone(),
        t: t.clone(),
        p,
        q,
        u,
        A: a,
        B: b,
        C: c,
        D: d,
        E: e,
        F: f,
        validity,
    })
}

/// Smallest positive value of `d + alpha k - beta n` over `Z^3`.
pub fn min_positive_im(alpha: &Rational, beta: &Rational) -> Result<Rational> {
    if alpha.is_negative() {
        return Err(Error::NegativeAlpha(alpha.to_string()));
    }
    let (aa, ba) = (alpha.numer(), alpha.denom());
    let (ab, bb) = (beta.numer(), beta.denom());
    let den: BigInt = ba * bb;
    let g = den.gcd(&(aa * bb)).gcd(&(ab * ba));
    Rational::new(g, den)
}

/// A parameter as supplied by a caller: an exact rational or a named
/// irrational such as `sqrt2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamInput {
    Rational(Rational),
    Irrational(String),
}

impl std::str::FromStr for ParamInput {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(name) = s.strip_prefix("marker:") {
            return Ok(ParamInput::Irrational(name.to_string()));
        }
        Ok(ParamInput::Rational(s.parse()?))
    }
}

/// The imaginary part is discrete iff both parameters are rational.
pub fn is_discrete_im(alpha: &ParamInput, beta: &ParamInput) -> bool {
    matches!(
        (alpha, beta),
        (ParamInput::Rational(_), ParamInput::Rational(_))
    )
}

pub type Matrix2 = [[Rational; 2]; 2];

fn det2(m: &Matrix2) -> Rational {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

fn inverse2(m: &Matrix2) -> Result<Matrix2> {
    let det = det2(m);
    if det.is_zero() {
        return Err(Error::DivisionByZero("singular matrix"));
    }
    Ok([
        [&m[1][1] / &det, -(&m[0][1] / &det)],
        [-(&m[1][0] / &det), &m[0][0] / &det],
    ])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitVerdict {
    pub equivalent: bool,
    /// `W` with `W o Z_source = Z_target` as maps on `Z^3`.
    pub witness: Option<Matrix2>,
    /// `W^{-1}`, the element `T` with `Z_target = T^{-1} o Z_source`, i.e.
    /// the group element acting on the source to produce the target.
    pub acting_element: Option<Matrix2>,
}

/// Decides whether `target` lies in the `GL+(2,R)` orbit of `source` by
/// solving for the 2x2 matrix row by row over the standard basis.
pub fn orbit_compare(source: &ChargeFamily, target: &ChargeFamily) -> Result<OrbitVerdict> {
    source.validate()?;
    target.validate()?;
    let ms = source.matrix()?;
    let mt = target.matrix()?;
    let not_equiv = OrbitVerdict {
        equivalent: false,
        witness: None,
        acting_element: None,
    };
    let mut rows = Vec::with_capacity(2);
    for target_row in &mt {
        // x * ms[0] + y * ms[1] = target_row, three equations.
        let system: Vec<[Rational; 3]> = (0..3)
            .map(|j| [ms[0][j].clone(), ms[1][j].clone(), target_row[j].clone()])
            .collect();
        match solve_overdetermined_2(&system) {
            Some(sol) => rows.push(sol),
            None => return Ok(not_equiv),
        }
    }
    let w: Matrix2 = [rows[0].clone(), rows[1].clone()];
    if !det2(&w).is_positive() {
        return Ok(not_equiv);
    }
    let acting = inverse2(&w)?;
    Ok(OrbitVerdict {
        equivalent: true,
        witness: Some(w),
        acting_element: Some(acting),
    })
}

/// Solves `a x + b y = c` for every row `[a, b, c]`. Returns a solution when
/// the system is consistent; free variables are set to zero.
fn solve_overdetermined_2(rows: &[[Rational; 3]]) -> Option<[Rational; 2]> {
    let mut m: Vec<[Rational; 3]> = rows.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for col in 0..2 {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let piv = m[r][col].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &piv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(pivot_row.iter()) {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        pivots.push((r, col));
        r += 1;
    }
    if m[r..].iter().any(|row| !row[2].is_zero()) {
        return None;
    }
    let mut sol = [Rational::zero(), Rational::zero()];
    for (row, col) in pivots {
        sol[col] = m[row][2].clone();
    }
    Some(sol)
}

/// Summary of region membership for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionReport {
    pub ps: bool,
    pub s: bool,
    pub s_boundary: bool,
    pub t_window: Option<Interval>,
    pub notes: Vec<String>,
}

pub fn region_check(p: &ParamTriple) -> Result<RegionReport> {
    let ps = in_ps(p);
    let s = in_s(p)?;
    let mut notes = Vec::new();
    let s_boundary = on_s_boundary(p);
    if s_boundary {
        notes.push("gamma lies exactly on the S threshold".to_string());
    }
    let t_window = if p.alpha.is_positive() && p.beta.is_positive() && p.beta != 1 {
        t_window(&p.alpha, &p.beta, &p.gamma)?
    } else {
        notes.push("t window undefined: needs alpha > 0, beta > 0, beta != 1".to_string());
        None
    };
    if p.beta.is_positive() && p.beta < 1 {
        notes.push("for beta < 1 the constraint u >= 1 fails at every t > 0".to_string());
    }
    Ok(RegionReport {
        ps,
        s,
        s_boundary,
        t_window,
        notes,
    })
}
