//! Central charges and slopes on class vectors.

use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::class::{ClassVector, SlopeValue};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A point of the complex plane with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }

    pub fn zero() -> Self {
        ComplexRational::new(Rational::zero(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Add for ComplexRational {
    type Output = ComplexRational;
    fn add(self, o: ComplexRational) -> ComplexRational {
        ComplexRational::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for ComplexRational {
    type Output = ComplexRational;
    fn sub(self, o: ComplexRational) -> ComplexRational {
        ComplexRational::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational::new(-self.re, -self.im)
    }
}

/// The charge families that appear in the theory. All are additive
/// homomorphisms `Z^3 -> C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum ChargeFamily {
    StandardAlpha {
        alpha: Rational,
    },
    StandardAlphaBeta {
        alpha: Rational,
        beta: Rational,
    },
    Tilted {
        alpha: Rational,
        beta: Rational,
        gamma: Rational,
    },
    /// `Im(Z_alpha^beta) + t * Delta_I - i Re(Z_alpha^beta)`, written with
    /// the BG linear form `delta_i` on `(n, d, k)`.
    Dagger {
        alpha: Rational,
        beta: Rational,
        t: Rational,
        delta_i: [Rational; 3],
    },
}

impl ChargeFamily {
    pub fn alpha(&self) -> &Rational {
        match self {
            ChargeFamily::StandardAlpha { alpha }
            | ChargeFamily::StandardAlphaBeta { alpha, .. }
            | ChargeFamily::Tilted { alpha, .. }
            | ChargeFamily::Dagger { alpha, .. } => alpha,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ChargeFamily::StandardAlpha { .. } => "standard_alpha",
            ChargeFamily::StandardAlphaBeta { .. } => "standard_alpha_beta",
            ChargeFamily::Tilted { .. } => "tilted",
            ChargeFamily::Dagger { .. } => "dagger",
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_alpha(self.alpha())?;
        if let ChargeFamily::Dagger { t, .. } = self {
            if !t.is_positive() {
                return Err(Error::Precondition(format!("t must be positive, got {t}")));
            }
        }
        Ok(())
    }

    pub fn eval(&self, c: &ClassVector) -> Result<ComplexRational> {
        match self {
            ChargeFamily::StandardAlpha { alpha } => z_alpha(c, alpha),
            ChargeFamily::StandardAlphaBeta { alpha, beta } => z_alpha_beta(c, alpha, beta),
            ChargeFamily::Tilted { alpha, beta, gamma } => z_tilt(c, alpha, beta, gamma),
            ChargeFamily::Dagger {
                alpha,
                beta,
                t,
                delta_i,
            } => {
                self.validate()?;
                let z = z_alpha_beta(c, alpha, beta)?;
                let [a, b, e] = c.rationals();
                let di = &delta_i[0] * &a + &delta_i[1] * &b + &delta_i[2] * &e;
                Ok(ComplexRational::new(z.im + t * &di, -z.re))
            }
        }
    }

    /// Real and imaginary rows of the charge as linear forms on `(n, d, k)`.
    pub fn matrix(&self) -> Result<[[Rational; 3]; 2]> {
        let basis = [
            ClassVector::new(1, 0, 0),
            ClassVector::new(0, 1, 0),
            ClassVector::new(0, 0, 1),
        ];
        let cols: Vec<ComplexRational> =
            basis.iter().map(|b| self.eval(b)).collect::<Result<_>>()?;
        Ok([
            [cols[0].re.clone(), cols[1].re.clone(), cols[2].re.clone()],
            [cols[0].im.clone(), cols[1].im.clone(), cols[2].im.clone()],
        ])
    }
}

fn check_alpha(alpha: &Rational) -> Result<()> {
    if alpha.is_negative() {
        Err(Error::NegativeAlpha(alpha.to_string()))
    } else {
        Ok(())
    }
}

/// `Z_alpha = -(d + alpha k) + i n`.
pub fn z_alpha(c: &ClassVector, alpha: &Rational) -> Result<ComplexRational> {
    check_alpha(alpha)?;
    let re = -(Rational::int(c.d) + alpha * c.k);
    Ok(ComplexRational::new(re, Rational::int(c.n)))
}

/// `Z_alpha^beta = Z_alpha + beta n`.
pub fn z_alpha_beta(c: &ClassVector, alpha: &Rational, beta: &Rational) -> Result<ComplexRational> {
    let z = z_alpha(c, alpha)?;
    Ok(ComplexRational::new(z.re + beta * c.n, z.im))
}

/// Tilted charge `(d + gamma n - k) + i (d + alpha k - beta n)`.
pub fn z_tilt(
    c: &ClassVector,
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
) -> Result<ComplexRational> {
    check_alpha(alpha)?;
    let re = gamma * c.n + (c.d - c.k);
    let im = alpha * c.k + (c.d) - beta * c.n;
    Ok(ComplexRational::new(re, im))
}

/// `Im(Z_alpha^{beta,gamma})` alone, `d + alpha k - beta n`.
pub fn tilt_im(c: &ClassVector, alpha: &Rational, beta: &Rational) -> Rational {
    alpha * c.k - beta * c.n + c.d
}

/// `-Re / Im`, or infinity when `Im = 0`.
pub fn slope(z: &ComplexRational) -> SlopeValue {
    if z.im.is_zero() {
        SlopeValue::Infinity
    } else {
        SlopeValue::Finite(-(&z.re / &z.im))
    }
}

pub fn mu_alpha(c: &ClassVector, alpha: &Rational) -> Result<SlopeValue> {
    Ok(slope(&z_alpha(c, alpha)?))
}

pub fn mu_tilt(
    c: &ClassVector,
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
) -> Result<SlopeValue> {
    Ok(slope(&z_tilt(c, alpha, beta, gamma)?))
}

/// Phase `arg(z)/pi`, for display only. It lies in `(0, 1]` on the upper
/// half plane; no predicate ever reads this value.
pub fn phase_display(z: &ComplexRational) -> Result<f64> {
    if z.is_zero() {
        return Err(Error::ZeroCharge);
    }
    let (re, im) = (z.re.to_f64(), z.im.to_f64());
    if im == 0.0 && re < 0.0 {
        return Ok(1.0);
    }
    Ok(im.atan2(re) / std::f64::consts::PI)
}

/// Orders two charges by phase through exact cross-multiplication, assuming
/// both lie in the closed upper half plane minus the origin ray `re > 0, im = 0`.
pub fn compare_phase(a: &ComplexRational, b: &ComplexRational) -> std::cmp::Ordering {
    // slope(-re/im) increases with phase on the upper half plane.
    crate::class::compare_slopes(&slope(a), &slope(b))
}
