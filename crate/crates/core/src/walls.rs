//! Walls and chambers in the gamma direction.
//!
//! For fixed `(alpha, beta)` the tilted slope of a class is an affine
//! function of `gamma` divided by the gamma-independent `Im`, so two slopes
//! cross at most once. A chamber scan enumerates the gamma-independent set
//! of candidate subobject classes, collects their crossings with the
//! target, and samples one rational point per chamber.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::admissible_unchecked;
use crate::charges::{mu_alpha, mu_tilt, tilt_im};
use crate::class::{compare_slopes, is_parallel, ClassVector, SlopeValue};
use crate::error::{Error, Result};
use crate::formal::{hn_filtration, tilt_classify, FormalCategory, TiltClass, TiltedRep};
use crate::rational::Rational;

/// `f(gamma) = m gamma + b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaLine {
    pub m: Rational,
    pub b: Rational,
}

impl GammaLine {
    pub fn eval(&self, gamma: &Rational) -> Rational {
        &self.m * gamma + &self.b
    }

    pub fn root(&self) -> Option<Rational> {
        if self.m.is_zero() {
            None
        } else {
            Some(-(&self.b / &self.m))
        }
    }

    pub fn monotonicity(&self) -> Monotonicity {
        match self.m.signum() {
            1 => Monotonicity::Increasing,
            -1 => Monotonicity::Decreasing,
            _ => Monotonicity::Constant,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    Constant,
}

fn nonzero_im(c: &ClassVector, alpha: &Rational, beta: &Rational) -> Result<Rational> {
    let im = tilt_im(c, alpha, beta);
    if im.is_zero() {
        Err(Error::InfiniteSlope(*c))
    } else {
        Ok(im)
    }
}

/// `f(gamma) = mu(a) - mu(b)` for the tilted slope at `(alpha, beta, gamma)`.
pub fn slope_diff_fn(
    a: &ClassVector,
    b: &ClassVector,
    alpha: &Rational,
    beta: &Rational,
) -> Result<(GammaLine, Monotonicity)> {
    let ia = nonzero_im(a, alpha, beta)?;
    let ib = nonzero_im(b, alpha, beta)?;
    // mu(c) = ((k - d) - gamma n) / I
    let m = Rational::int(b.n) / &ib - Rational::int(a.n) / &ia;
    let bb = Rational::int(a.k - a.d) / &ia - Rational::int(b.k - b.d) / &ib;
    let line = GammaLine { m, b: bb };
    let mono = line.monotonicity();
    Ok((line, mono))
}

/// The gamma at which `a` and `b` have equal tilted slope, if unique.
pub fn numerical_wall(
    a: &ClassVector,
    b: &ClassVector,
    alpha: &Rational,
    beta: &Rational,
) -> Result<Option<Rational>> {
    if is_parallel(a, b) {
        return Err(Error::ParallelClasses(*a, *b));
    }
    let ia = nonzero_im(a, alpha, beta)?;
    let ib = nonzero_im(b, alpha, beta)?;
    let den = &ia * b.n - &ib * a.n;
    if den.is_zero() {
        return Ok(None);
    }
    let num = &ib * (a.d - a.k) - &ia * (b.d - b.k);
    Ok(Some(num / den))
}

/// `(beta n - d(alpha + 1)) / (alpha n)`.
pub fn actual_wall_gamma0(c: &ClassVector, alpha: &Rational, beta: &Rational) -> Result<Rational> {
    if c.n <= 0 {
        return Err(Error::Precondition(format!("{c} needs positive rank")));
    }
    if !alpha.is_positive() {
        return Err(Error::Precondition(format!("alpha must be positive, got {alpha}")));
    }
    Ok((beta * c.n - (alpha + 1) * c.d) / (alpha * c.n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    /// Target is a torsion system `(0, t, u)`; subobjects in the tilted heart
    /// are `F` in `T` with a map onto a subsystem of the target whose kernel
    /// lies in `F`.
    MinimalObject,
    /// Target is `E[1]` with `E` of positive rank in `F`; subobjects are
    /// `F` in `T` with `0 -> E -> G -> F -> 0`, `G` in `F`.
    ShiftedStable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanOptions {
    /// Drop classes with `k = d + n` whose map to the target lands in a
    /// section-free subsystem: such a map needs a base point, and extremal
    /// systems have none.
    pub geometric_exclusion: bool,
    /// The section map of the target is injective. Defaults to `u <= t`
    /// for a torsion target.
    pub injective: Option<bool>,
    /// The shifted system is complete.
    pub complete: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            geometric_exclusion: true,
            injective: None,
            complete: false,
        }
    }
}

/// Gamma-independent candidate subobject classes of the target.
pub fn destabilizer_candidates(
    c: &ClassVector,
    alpha: &Rational,
    beta: &Rational,
    bound: i64,
    mode: ScanMode,
    opts: &ScanOptions,
) -> Result<Vec<ClassVector>> {
    if bound < 1 {
        return Err(Error::Precondition(format!("bound must be >= 1, got {bound}")));
    }
    if alpha.is_negative() {
        return Err(Error::NegativeAlpha(alpha.to_string()));
    }
    match mode {
        ScanMode::MinimalObject => torsion_target_candidates(c, alpha, beta, bound, opts),
        ScanMode::ShiftedStable => shifted_candidates(c, alpha, beta, bound, opts),
    }
}

fn above_beta(c: &ClassVector, alpha: &Rational, beta: &Rational) -> bool {
    mu_alpha(c, alpha).expect("alpha checked").gt_rational(beta)
}

fn torsion_target_candidates(
    c: &ClassVector,
    alpha: &Rational,
    beta: &Rational,
    bound: i64,
    opts: &ScanOptions,
) -> Result<Vec<ClassVector>> {
    if c.n != 0 || c.d < 0 || c.k < 0 || c.is_zero() {
        return Err(Error::Precondition(format!(
            "{c} is not a nonzero torsion class (0, t, u)"
        )));
    }
    let injective = opts.injective.unwrap_or(c.k <= c.d);
    let images: Vec<ClassVector> = (0..=c.d)
        .flat_map(|t| (0..=c.k).map(move |u| ClassVector::new(0, t, u)))
        .filter(|s| !s.is_zero() && (!injective || s.k <= s.d))
        .collect();
    let mut out: Vec<ClassVector> = images.iter().copied().filter(|s| s != c).collect();
    let rows: Vec<Vec<ClassVector>> = (1..=bound)
        .into_par_iter()
        .map(|n| {
            let mut row = Vec::new();
            for d in -bound..=bound {
                for k in 0..=bound {
                    let f = ClassVector::new(n, d, k);
                    if !admissible_unchecked(&f) || !above_beta(&f, alpha, beta) {
                        continue;
                    }
                    let extremal = f.k == f.d + f.n;
                    let ok = images.iter().any(|s| {
                        if opts.geometric_exclusion && extremal && s.k == 0 {
                            return false;
                        }
                        let kernel = f - *s;
                        kernel.k >= 0 && !above_beta(&kernel, alpha, beta)
                    });
                    if ok {
                        row.push(f);
                    }
                }
            }
            row
        })
        .collect();
    out.extend(rows.into_iter().flatten());
    out.sort();
    Ok(out)
}

fn shifted_candidates(
    c: &ClassVector,
    alpha: &Rational,
    beta: &Rational,
    bound: i64,
    opts: &ScanOptions,
) -> Result<Vec<ClassVector>> {
    let e = -*c;
    if e.n <= 0 {
        return Err(Error::Precondition(format!("{c} is not the shift of a positive-rank class")));
    }
    if above_beta(&e, alpha, beta) {
        return Err(Error::Precondition(format!("{e} has mu_alpha > beta, so it is not in F")));
    }
    let rows: Vec<Vec<ClassVector>> = (0..=bound)
        .into_par_iter()
        .map(|n| {
            let mut row = Vec::new();
            for d in 0..=bound {
                for k in 0..=bound {
                    let f = ClassVector::new(n, d, k);
                    if f.is_zero() || !above_beta(&f, alpha, beta) {
                        continue;
                    }
                    if (n > 0 || opts.complete) && k > d + n {
                        continue;
                    }
                    let g = e + f;
                    if above_beta(&g, alpha, beta) {
                        continue;
                    }
                    row.push(f);
                }
            }
            row
        })
        .collect();
    let mut out: Vec<ClassVector> = rows.into_iter().flatten().collect();
    out.sort();
    Ok(out)
}

/// `mu(f) >= mu(target)` at `gamma`.
fn destabilizes(
    f: &ClassVector,
    target_slope: &SlopeValue,
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
) -> bool {
    let s = mu_tilt(f, alpha, beta, gamma).expect("alpha checked");
    compare_slopes(&s, target_slope).is_ge()
}

/// Candidate classes whose tilted slope at `gamma` is at least the target's.
pub fn destabilizer_scan(
    c: &ClassVector,
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    bound: i64,
    mode: ScanMode,
    opts: &ScanOptions,
) -> Result<Vec<ClassVector>> {
    let candidates = destabilizer_candidates(c, alpha, beta, bound, mode, opts)?;
    let target = mu_tilt(c, alpha, beta, gamma)?;
    Ok(candidates
        .into_iter()
        .filter(|f| destabilizes(f, &target, alpha, beta, gamma))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WallKind {
    Numerical,
    Pseudo,
    ActualCandidate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallReport {
    pub gamma0: Option<Rational>,
    pub kind: WallKind,
    /// (subobject class, target class) for the representative crossing.
    pub pair: (ClassVector, ClassVector),
    /// Every candidate class crossing the target at `gamma0`.
    pub classes: Vec<ClassVector>,
    pub in_range: bool,
    pub monotonicity: Monotonicity,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// No candidate in the box destabilizes.
    StableWithinBox,
    Unstable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chamber {
    pub lo: Rational,
    pub hi: Rational,
    pub sample: Rational,
    pub verdict: Verdict,
    pub destabilizers: Vec<ClassVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberScan {
    pub target: ClassVector,
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma_min: Rational,
    pub gamma_max: Rational,
    pub bound: i64,
    pub mode: ScanMode,
    pub candidates: usize,
    pub walls: Vec<WallReport>,
    pub chambers: Vec<Chamber>,
    /// Every destabilizer's set of chambers is downward closed in gamma.
    pub monotone: bool,
    pub monotonicity_violations: Vec<ClassVector>,
    pub notes: Vec<String>,
}

const SAMPLE_DENOM_CAP: u64 = 1_000_000;

/// A point strictly inside `(lo, hi)`: the midpoint, or the simplest
/// rational in the interval when the midpoint's denominator is too large.
pub fn chamber_sample(lo: &Rational, hi: &Rational) -> Result<Rational> {
    if lo >= hi {
        return Err(Error::EmptyRange(format!("({lo}, {hi})")));
    }
    let mid = (lo + hi) / 2;
    if mid.denom() <= &BigInt::from(SAMPLE_DENOM_CAP) {
        Ok(mid)
    } else {
        Rational::simplest_between(lo, hi)
    }
}

/// Walls of the target in `(gamma_min, gamma_max)` with per-chamber
/// verdicts relative to the enumeration box.
#[allow(clippy::too_many_arguments)]
pub fn chamber_scan(
    c: &ClassVector,
    alpha: &Rational,
    beta: &Rational,
    gamma_min: &Rational,
    gamma_max: &Rational,
    bound: i64,
    mode: ScanMode,
    opts: &ScanOptions,
    fixture: Option<&FormalCategory>,
) -> Result<ChamberScan> {
    if gamma_min >= gamma_max {
        return Err(Error::EmptyRange(format!("({gamma_min}, {gamma_max})")));
    }
    if *gamma_min < 1 {
        return Err(Error::Precondition(format!("gamma range must lie in (1, inf), got min {gamma_min}")));
    }
    let candidates = destabilizer_candidates(c, alpha, beta, bound, mode, opts)?;
    let mut notes = Vec::new();
    let target_im = tilt_im(c, alpha, beta);

    let mut by_gamma: BTreeMap<Rational, Vec<ClassVector>> = BTreeMap::new();
    if target_im.is_zero() {
        notes.push("target has infinite tilted slope; no numerical walls".to_string());
    } else {
        let hits: Vec<(Rational, ClassVector)> = candidates
            .par_iter()
            .filter_map(|f| {
                if is_parallel(f, c) || tilt_im(f, alpha, beta).is_zero() {
                    return None;
                }
                let g0 = numerical_wall(f, c, alpha, beta).ok()??;
                (&g0 > gamma_min && &g0 < gamma_max).then_some((g0, *f))
            })
            .collect();
        for (g0, f) in hits {
            by_gamma.entry(g0).or_default().push(f);
        }
    }

    let mut walls = Vec::with_capacity(by_gamma.len());
    for (g0, mut classes) in by_gamma {
        classes.sort();
        let rep = classes[0];
        let (_, mono) = slope_diff_fn(&rep, c, alpha, beta)?;
        let (kind, wnotes) = match (fixture, mode) {
            (Some(cat), ScanMode::ShiftedStable) => classify_wall(cat, c, &classes, alpha, beta)?,
            _ => (WallKind::Numerical, Vec::new()),
        };
        walls.push(WallReport {
            in_range: g0 > 1,
            gamma0: Some(g0),
            kind,
            pair: (rep, *c),
            classes,
            monotonicity: mono,
            notes: wnotes,
        });
    }

    let mut cuts: Vec<Rational> = vec![gamma_min.clone()];
    cuts.extend(walls.iter().filter_map(|w| w.gamma0.clone()));
    cuts.push(gamma_max.clone());
    let mut chambers = Vec::with_capacity(cuts.len() - 1);
    for win in cuts.windows(2) {
        let sample = chamber_sample(&win[0], &win[1])?;
        let target = mu_tilt(c, alpha, beta, &sample)?;
        let destabilizers: Vec<ClassVector> = candidates
            .iter()
            .filter(|f| destabilizes(f, &target, alpha, beta, &sample))
            .copied()
            .collect();
        chambers.push(Chamber {
            lo: win[0].clone(),
            hi: win[1].clone(),
            sample,
            verdict: if destabilizers.is_empty() {
                Verdict::StableWithinBox
            } else {
                Verdict::Unstable
            },
            destabilizers,
        });
    }

    // Downward closure per destabilizer class.
    let mut last_seen: BTreeMap<ClassVector, Vec<usize>> = BTreeMap::new();
    for (i, ch) in chambers.iter().enumerate() {
        for f in &ch.destabilizers {
            last_seen.entry(*f).or_default().push(i);
        }
    }
    let monotonicity_violations: Vec<ClassVector> = last_seen
        .into_iter()
        .filter(|(_, idx)| idx.iter().enumerate().any(|(j, &i)| i != j))
        .map(|(f, _)| f)
        .collect();

    Ok(ChamberScan {
        target: *c,
        alpha: alpha.clone(),
        beta: beta.clone(),
        gamma_min: gamma_min.clone(),
        gamma_max: gamma_max.clone(),
        bound,
        mode,
        candidates: candidates.len(),
        monotone: monotonicity_violations.is_empty(),
        monotonicity_violations,
        walls,
        chambers,
        notes,
    })
}

/// Pseudo when the fixture holds `0 -> E -> Y -> F -> 0` with `Y` in `F`;
/// ActualCandidate when in addition `E` is stable and not complete, `Y`
/// is complete and stable, and the quotient-slope bounds hold.
fn classify_wall(
    cat: &FormalCategory,
    target: &ClassVector,
    classes: &[ClassVector],
    alpha: &Rational,
    beta: &Rational,
) -> Result<(WallKind, Vec<String>)> {
    let e_class = -*target;
    let mut best = (WallKind::Numerical, Vec::new());
    for y in cat.objects() {
        for s_id in cat.subobjects(&y.id)? {
            let s = cat.object(s_id)?;
            if s.cls != e_class || !classes.contains(&(y.cls - s.cls)) {
                continue;
            }
            let hn = hn_filtration(cat, &y.id, alpha)?;
            if tilt_classify(&hn.slopes(), beta) != TiltClass::Free {
                continue;
            }
            let mut notes = vec![format!("witness {} ⊂ {}", s.id, y.id)];
            let mut actual = y.complete && !s.complete;
            for (obj, label) in [(s, "sub"), (y, "extension")] {
                match obj.stable {
                    Some(true) => {}
                    Some(false) => actual = false,
                    None => {
                        actual = false;
                        notes.push(format!("{label} {}: stability unrecorded", obj.id));
                    }
                }
                if obj.cls.n >= 2 {
                    match &obj.delta {
                        Some(delta) if beta < delta => {}
                        Some(_) => actual = false,
                        None => {
                            actual = false;
                            notes.push(format!("{label} {}: quotient-slope bound unchecked", obj.id));
                        }
                    }
                }
            }
            let kind = if actual { WallKind::ActualCandidate } else { WallKind::Pseudo };
            if kind == WallKind::ActualCandidate || best.0 == WallKind::Numerical {
                best = (kind, notes);
            }
            if best.0 == WallKind::ActualCandidate {
                return Ok(best);
            }
        }
    }
    Ok(best)
}

/// Limit of `mu_tilt / gamma` as `gamma -> inf`, `-1 / (mu_alpha - beta)`.
pub fn large_gamma_limit(c: &ClassVector, alpha: &Rational, beta: &Rational) -> Result<SlopeValue> {
    if c.n == 0 {
        return Err(Error::Precondition(format!("{c} has rank 0")));
    }
    let mu = mu_alpha(c, alpha)?;
    let mu = mu.finite().expect("nonzero rank gives a finite slope");
    if mu == beta {
        return Err(Error::Hypothesis(format!("mu_alpha({c}) = beta; the limit is infinite")));
    }
    Ok(SlopeValue::Finite(-(Rational::one() / (mu - beta))))
}

/// `|mu_tilt(c, gamma) / gamma - limit|`, exactly.
pub fn limit_gap(c: &ClassVector, alpha: &Rational, beta: &Rational, gamma: &Rational) -> Result<Rational> {
    let lim = large_gamma_limit(c, alpha, beta)?;
    let lim = lim.finite().expect("finite limit").clone();
    match mu_tilt(c, alpha, beta, gamma)? {
        SlopeValue::Finite(s) => Ok((s / gamma - lim).abs()),
        SlopeValue::Infinity => Err(Error::InfiniteSlope(*c)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BClassification {
    ShiftOfSemistableFree,
    SemistableTorsionSide,
    NotInB,
}

/// Exactly one cohomology object, and it is `mu_alpha`-semistable.
pub fn b_classify(rep: &TiltedRep, cat: &FormalCategory, alpha: &Rational) -> Result<BClassification> {
    match (&rep.f_part, &rep.t_part) {
        (Some(f), None) if hn_filtration(cat, f, alpha)?.is_semistable() => {
            Ok(BClassification::ShiftOfSemistableFree)
        }
        (None, Some(t)) if hn_filtration(cat, t, alpha)?.is_semistable() => {
            Ok(BClassification::SemistableTorsionSide)
        }
        _ => Ok(BClassification::NotInB),
    }
}
