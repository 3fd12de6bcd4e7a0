//! Quadratic forms for the support property, the BG discriminant and its
//! decomposition along the central charge.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::admissible_unchecked;
use crate::charges::z_alpha;
use crate::class::ClassVector;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Symmetric form `v^T M v` on `(n, d, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticForm3 {
    pub m: [[Rational; 3]; 3],
}

impl QuadraticForm3 {
    /// Builds the form from monomial coefficients in the order
    /// `n^2, d^2, k^2, nd, nk, dk`.
    pub fn from_monomials(c: [Rational; 6]) -> Self {
        let [nn, dd, kk, nd, nk, dk] = c;
        let (nd, nk, dk) = (nd / 2, nk / 2, dk / 2);
        QuadraticForm3 {
            m: [
                [nn, nd.clone(), nk.clone()],
                [nd, dd, dk.clone()],
                [nk, dk, kk],
            ],
        }
    }

    /// Monomial coefficients in the order `n^2, d^2, k^2, nd, nk, dk`.
    pub fn monomials(&self) -> [Rational; 6] {
        let m = &self.m;
        [
            m[0][0].clone(),
            m[1][1].clone(),
            m[2][2].clone(),
            &m[0][1] * 2,
            &m[0][2] * 2,
            &m[1][2] * 2,
        ]
    }

    pub fn eval(&self, c: &ClassVector) -> Rational {
        let v = c.rationals();
        let mut s = Rational::zero();
        for i in 0..3 {
            for j in 0..3 {
                s += &(&self.m[i][j] * &v[i] * &v[j]);
            }
        }
        s
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuadraticForm3 {
            m: self.m.clone().map(|row| row.map(|x| x * r)),
        }
    }

    pub fn add(&self, other: &QuadraticForm3) -> Self {
        let mut m = self.m.clone();
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = &*x + &other.m[i][j];
            }
        }
        QuadraticForm3 { m }
    }
}

/// Linear form on `(n, d, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearForm3 {
    pub c: [Rational; 3],
}

impl LinearForm3 {
    pub fn new(c: [Rational; 3]) -> Self {
        LinearForm3 { c }
    }

    pub fn eval(&self, v: &ClassVector) -> Rational {
        &self.c[0] * v.n + &self.c[1] * v.d + &self.c[2] * v.k
    }

    /// The product of two linear forms as a quadratic form.
    pub fn times(&self, other: &LinearForm3) -> QuadraticForm3 {
        let (a, b) = (&self.c, &other.c);
        QuadraticForm3::from_monomials([
            &a[0] * &b[0],
            &a[1] * &b[1],
            &a[2] * &b[2],
            &a[0] * &b[1] + &a[1] * &b[0],
            &a[0] * &b[2] + &a[2] * &b[0],
            &a[1] * &b[2] + &a[2] * &b[1],
        ])
    }
}

fn require_positive_alpha(alpha: &Rational) -> Result<()> {
    if alpha.is_positive() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("alpha must be positive, got {alpha}")))
    }
}

/// Matrix of `Q_alpha`, branch chosen by `alpha <= 1` or `alpha >= 1`.
pub fn q_alpha_form(alpha: &Rational) -> Result<QuadraticForm3> {
    require_positive_alpha(alpha)?;
    Ok(if *alpha >= 1 {
        q_alpha_high_branch(alpha)
    } else {
        q_alpha_low_branch(alpha)
    })
}

/// `((1 - a^2)(n^2 + d^2) + 2 a d k) / a^2`.
pub fn q_alpha_low_branch(alpha: &Rational) -> QuadraticForm3 {
    let a2 = alpha * alpha;
    let sq = (Rational::one() - &a2) / &a2;
    QuadraticForm3::from_monomials([
        sq.clone(),
        sq,
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        alpha * 2 / &a2,
    ])
}

/// `(a^2 - 1) k^2 + 2 a d k`.
pub fn q_alpha_high_branch(alpha: &Rational) -> QuadraticForm3 {
    QuadraticForm3::from_monomials([
        Rational::zero(),
        Rational::zero(),
        alpha * alpha - 1,
        Rational::zero(),
        Rational::zero(),
        alpha * 2,
    ])
}

pub fn q_alpha(c: &ClassVector, alpha: &Rational) -> Result<Rational> {
    Ok(q_alpha_form(alpha)?.eval(c))
}

/// `Delta = k(d + n - k) + p d^2 + q n^2 + u k^2` as a quadratic form.
pub fn delta_form(p: &Rational, q: &Rational, u: &Rational) -> QuadraticForm3 {
    QuadraticForm3::from_monomials([
        q.clone(),
        p.clone(),
        u - 1,
        Rational::zero(),
        Rational::one(),
        Rational::one(),
    ])
}

pub fn delta(c: &ClassVector, p: &Rational, q: &Rational, u: &Rational) -> Rational {
    delta_form(p, q, u).eval(c)
}

/// `(Delta_R, Delta_I)` with `Delta = Re(Z_alpha^beta) Delta_R + Im(Z_alpha^beta) Delta_I`,
/// parameterized by the free coefficient `a`.
pub fn delta_forms(
    alpha: &Rational,
    beta: &Rational,
    p: &Rational,
    q: &Rational,
    u: &Rational,
    a: &Rational,
) -> Result<(LinearForm3, LinearForm3)> {
    require_positive_alpha(alpha)?;
    let forced = (alpha + 1 - u) / (alpha * alpha);
    if &forced != p {
        return Err(Error::Incompatible(format!(
            "p = {p} but alpha = {alpha}, u = {u} force p = {forced}"
        )));
    }
    let c = p * alpha - 1;
    let dr = LinearForm3::new([a.clone(), -p, c.clone()]);
    let di = LinearForm3::new([q - a * beta, a + p * beta, a * alpha + 1 - &c * beta]);
    Ok((dr, di))
}

/// Monomial coefficients of `Re Delta_R + Im Delta_I - Delta`; all zero when
/// the decomposition is exact.
pub fn decomposition_residual(
    alpha: &Rational,
    beta: &Rational,
    p: &Rational,
    q: &Rational,
    u: &Rational,
    dr: &LinearForm3,
    di: &LinearForm3,
) -> [Rational; 6] {
    // Re(Z_alpha^beta) = beta n - d - alpha k, Im = n.
    let re = LinearForm3::new([beta.clone(), Rational::int(-1), -alpha]);
    let im = LinearForm3::new([Rational::one(), Rational::zero(), Rational::zero()]);
    let lhs = re.times(dr).add(&im.times(di));
    let rhs = delta_form(p, q, u);
    let (l, r) = (lhs.monomials(), rhs.monomials());
    std::array::from_fn(|i| &l[i] - &r[i])
}

/// `Q^dagger_{r,t} = r Q + t Delta`.
pub fn q_dagger(
    c: &ClassVector,
    r: &Rational,
    t: &Rational,
    base: &QuadraticForm3,
    disc: &QuadraticForm3,
) -> Result<Rational> {
    if !r.is_positive() || !t.is_positive() {
        return Err(Error::Precondition(format!("r = {r} and t = {t} must be positive")));
    }
    Ok(r * base.eval(c) + t * disc.eval(c))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateCheck {
    /// `Q_alpha >= 0` on admissible classes.
    Positivity,
    /// `Q_alpha < 0` on the kernel of the charge.
    KernelNegativity,
    /// `|Z|^2 / |c|^2 >= min(alpha^2, 1)`.
    Ratio,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub class: ClassVector,
    pub check: CertificateCheck,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportCertificate {
    pub alpha: Rational,
    pub beta: Rational,
    pub bound: i64,
    /// Admissible classes checked for positivity and the ratio bound.
    pub checked: usize,
    pub kernel_checked: usize,
    pub ratio_min: Option<Rational>,
    pub ratio_floor: Rational,
    pub violations: Vec<Violation>,
}

impl SupportCertificate {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Exhaustive support-property check on `|n|, |d|, |k| <= bound`.
pub fn support_certificate(alpha: &Rational, beta: &Rational, bound: i64) -> Result<SupportCertificate> {
    require_positive_alpha(alpha)?;
    if bound < 1 {
        return Err(Error::Precondition(format!("bound must be >= 1, got {bound}")));
    }
    let form = q_alpha_form(alpha)?;
    let floor = (alpha * alpha).min(Rational::one());

    // (i) and (iii) over admissible classes; n, k >= 0 there.
    let per_n: Vec<(usize, Option<Rational>, Vec<Violation>)> = (0..=bound)
        .into_par_iter()
        .map(|n| {
            let mut count = 0usize;
            let mut ratio_min: Option<Rational> = None;
            let mut viol = Vec::new();
            for d in -bound..=bound {
                for k in 0..=bound {
                    let c = ClassVector::new(n, d, k);
                    if c.is_zero() || !admissible_unchecked(&c) {
                        continue;
                    }
                    count += 1;
                    let qv = form.eval(&c);
                    if qv.is_negative() {
                        viol.push(Violation {
                            class: c,
                            check: CertificateCheck::Positivity,
                            value: qv,
                        });
                    }
                    let z = z_alpha(&c, alpha).expect("alpha checked");
                    let ratio = (&z.re * &z.re + &z.im * &z.im) / c.norm_squared();
                    if ratio < floor {
                        viol.push(Violation {
                            class: c,
                            check: CertificateCheck::Ratio,
                            value: ratio.clone(),
                        });
                    }
                    if ratio_min.as_ref().is_none_or(|m| &ratio < m) {
                        ratio_min = Some(ratio);
                    }
                }
            }
            (count, ratio_min, viol)
        })
        .collect();

    let mut checked = 0;
    let mut ratio_min: Option<Rational> = None;
    let mut violations = Vec::new();
    for (count, rm, v) in per_n {
        checked += count;
        if let Some(rm) = rm {
            if ratio_min.as_ref().is_none_or(|m| &rm < m) {
                ratio_min = Some(rm);
            }
        }
        violations.extend(v);
    }

    // (ii) kernel classes (0, -alpha k, k) with integral d.
    let mut kernel_checked = 0;
    for k in -bound..=bound {
        let d = -(alpha * k);
        if k == 0 || !d.is_integer() {
            continue;
        }
        let Some(d) = d.to_i64() else { continue };
        if d.abs() > bound {
            continue;
        }
        let c = ClassVector::new(0, d, k);
        kernel_checked += 1;
        let qv = form.eval(&c);
        if !qv.is_negative() {
            violations.push(Violation {
                class: c,
                check: CertificateCheck::KernelNegativity,
                value: qv,
            });
        }
    }
    violations.sort_by_key(|v| v.class);

    Ok(SupportCertificate {
        alpha: alpha.clone(),
        beta: beta.clone(),
        bound,
        checked,
        kernel_checked,
        ratio_min,
        ratio_floor: floor,
        violations,
    })
}
