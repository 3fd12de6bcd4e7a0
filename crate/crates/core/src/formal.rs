//! Finite fixture categories: explicit subobject lattices on which HN
//! filtrations, torsion-pair splits, tilted-heart membership and elementary
//! transformations can be computed exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bounds::admissible_unchecked;
use crate::charges::mu_alpha;
use crate::class::{compare_slopes, ClassVector, SlopeValue};
use crate::error::{Error, Result};
use crate::lattice::{enumerate, LatticeBox, LinearConstraint, Relation};
use crate::rational::Rational;

/// One object as written in a fixture file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalObject {
    pub id: String,
    #[serde(rename = "class")]
    pub cls: ClassVector,
    #[serde(default, rename = "subobjects")]
    pub subobject_ids: Vec<String>,
    #[serde(default)]
    pub base_points: BTreeSet<String>,
    #[serde(default)]
    pub complete: bool,
    #[serde(default = "default_true")]
    pub injective: bool,
    /// `mu_alpha`-stability as recorded by the fixture author.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stable: Option<bool>,
    /// Minimal `mu_alpha` slope of a proper quotient, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pure: Option<bool>,
}

fn default_true() -> bool {
    true
}

/// `to` is an elementary transformation of `from` along a minimal class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementaryRecord {
    pub from: String,
    pub to: String,
    pub along: ClassVector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi1_nonzero: Option<bool>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
struct FixtureFile {
    objects: Vec<FormalObject>,
    #[serde(default)]
    elementary: Vec<ElementaryRecord>,
}

/// A validated fixture. Immutable after construction.
#[derive(Clone, Debug)]
pub struct FormalCategory {
    objects: BTreeMap<String, FormalObject>,
    /// Transitive closure of the subobject relation, in discovery order.
    closure: BTreeMap<String, Vec<String>>,
    elementary: Vec<ElementaryRecord>,
    warnings: Vec<String>,
}

impl FormalCategory {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: FixtureFile =
            serde_json::from_str(text).map_err(|e| Error::Fixture(e.to_string()))?;
        Self::new(file.objects, file.elementary)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        let file = FixtureFile {
            objects: self.objects.values().cloned().collect(),
            elementary: self.elementary.clone(),
        };
        serde_json::to_string_pretty(&file).expect("fixture serializes")
    }

    pub fn new(objects: Vec<FormalObject>, elementary: Vec<ElementaryRecord>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for obj in objects {
            if obj.cls.n < 0 || obj.cls.k < 0 {
                return Err(Error::Fixture(format!("{}: class {} has n or k < 0", obj.id, obj.cls)));
            }
            if obj.cls.is_zero() {
                return Err(Error::Fixture(format!("{}: zero class for a nonzero object", obj.id)));
            }
            if let Some(prev) = map.insert(obj.id.clone(), obj) {
                return Err(Error::Fixture(format!("duplicate id {}", prev.id)));
            }
        }
        for obj in map.values() {
            for s in &obj.subobject_ids {
                if !map.contains_key(s) {
                    return Err(Error::Fixture(format!("{}: unknown subobject {s}", obj.id)));
                }
            }
        }
        let mut closure = BTreeMap::new();
        for id in map.keys() {
            closure.insert(id.clone(), Self::close(&map, id)?);
        }
        let mut warnings = Vec::new();
        for (id, subs) in &closure {
            let x = &map[id];
            for s in subs {
                let q = x.cls - map[s].cls;
                if q.n < 0 || q.k < 0 || q.is_zero() {
                    return Err(Error::Fixture(format!(
                        "{id}/{s} has quotient class {q}; need n, k >= 0 and nonzero"
                    )));
                }
                if x.pure == Some(true) && map[s].pure == Some(false) {
                    warnings.push(format!("{s} is a non-pure subobject of the pure object {id}"));
                }
            }
        }
        for rec in &elementary {
            for id in [&rec.from, &rec.to] {
                if !map.contains_key(id) {
                    return Err(Error::Fixture(format!("elementary record names unknown id {id}")));
                }
            }
        }
        Ok(FormalCategory {
            objects: map,
            closure,
            elementary,
            warnings,
        })
    }

    fn close(map: &BTreeMap<String, FormalObject>, root: &str) -> Result<Vec<String>> {
        let mut seen: BTreeSet<String> = BTreeSet::new();
        let mut order = Vec::new();
        let mut stack: Vec<String> = map[root].subobject_ids.iter().rev().cloned().collect();
        while let Some(s) = stack.pop() {
            if s == root {
                return Err(Error::Fixture(format!("cycle in subobject relation through {root}")));
            }
            if seen.insert(s.clone()) {
                order.push(s.clone());
                stack.extend(map[&s].subobject_ids.iter().rev().cloned());
            }
        }
        Ok(order)
    }

    pub fn object(&self, id: &str) -> Result<&FormalObject> {
        self.objects
            .get(id)
            .ok_or_else(|| Error::Fixture(format!("unknown object {id}")))
    }

    pub fn objects(&self) -> impl Iterator<Item = &FormalObject> {
        self.objects.values()
    }

    pub fn ids(&self) -> impl Iterator<Item = &String> {
        self.objects.keys()
    }

    /// Proper nonzero subobjects of `id`, transitively closed.
    pub fn subobjects(&self, id: &str) -> Result<&[String]> {
        self.closure
            .get(id)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::Fixture(format!("unknown object {id}")))
    }

    pub fn is_subobject(&self, sub: &str, of: &str) -> bool {
        self.closure.get(of).is_some_and(|v| v.iter().any(|s| s == sub))
    }

    pub fn elementary(&self) -> &[ElementaryRecord] {
        &self.elementary
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HNFactor {
    pub class: ClassVector,
    pub slope: SlopeValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HNFiltration {
    pub object: String,
    pub factors: Vec<HNFactor>,
    /// Ids of `E_1 ⊂ ... ⊂ E_l = E`.
    pub chain: Vec<String>,
}

impl HNFiltration {
    pub fn slopes(&self) -> Vec<SlopeValue> {
        self.factors.iter().map(|f| f.slope.clone()).collect()
    }

    pub fn classes(&self) -> Vec<ClassVector> {
        self.factors.iter().map(|f| f.class).collect()
    }

    pub fn total(&self) -> ClassVector {
        self.factors.iter().map(|f| f.class).sum()
    }

    pub fn is_semistable(&self) -> bool {
        self.factors.len() == 1
    }
}

/// Greedy HN filtration of a fixture object with respect to `mu_alpha`.
///
/// At each step the next filtration object is the one of maximal quotient
/// slope in the interval above the current one, ties broken by larger
/// `n`, then `d`, then `k`, then the smaller id.
pub fn hn_filtration(cat: &FormalCategory, id: &str, alpha: &Rational) -> Result<HNFiltration> {
    let top = cat.object(id)?;
    let subs = cat.subobjects(id)?;
    let mut current: Option<&FormalObject> = None;
    let mut factors: Vec<HNFactor> = Vec::new();
    let mut chain = Vec::new();
    while current.map(|c| c.id.as_str()) != Some(id) {
        let base = current.map(|c| c.cls).unwrap_or(ClassVector::ZERO);
        let mut best: Option<(&FormalObject, ClassVector, SlopeValue)> = None;
        let candidates = subs.iter().map(String::as_str).chain(std::iter::once(id));
        for y_id in candidates {
            if let Some(cur) = current {
                if !cat.is_subobject(&cur.id, y_id) {
                    continue;
                }
            }
            let y = cat.object(y_id)?;
            let q = y.cls - base;
            let s = mu_alpha(&q, alpha)?;
            let better = match &best {
                None => true,
                Some((b, bq, bs)) => compare_slopes(&s, bs)
                    .then(q.n.cmp(&bq.n))
                    .then(q.d.cmp(&bq.d))
                    .then(q.k.cmp(&bq.k))
                    .then(b.id.cmp(&y.id))
                    .is_gt(),
            };
            if better {
                best = Some((y, q, s));
            }
        }
        let (y, q, s) = best.expect("the object itself is always a candidate");
        if let Some(prev) = factors.last() {
            if compare_slopes(&s, &prev.slope).is_ge() {
                return Err(Error::Fixture(format!(
                    "{id}: HN slopes not strictly decreasing ({} then {s})",
                    prev.slope
                )));
            }
        }
        factors.push(HNFactor { class: q, slope: s });
        chain.push(y.id.clone());
        current = Some(y);
    }
    debug_assert_eq!(factors.iter().map(|f| f.class).sum::<ClassVector>(), top.cls);
    Ok(HNFiltration {
        object: id.to_string(),
        factors,
        chain,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TiltClass {
    Torsion,
    Free,
    Mixed,
}

/// Places an object with the given HN slopes in `T` (all `> beta`), `F`
/// (all `<= beta`) or neither.
pub fn tilt_classify(slopes: &[SlopeValue], beta: &Rational) -> TiltClass {
    let above = slopes.iter().filter(|s| s.gt_rational(beta)).count();
    if above == slopes.len() {
        TiltClass::Torsion
    } else if above == 0 {
        TiltClass::Free
    } else {
        TiltClass::Mixed
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionSplit {
    pub t_class: ClassVector,
    pub f_class: ClassVector,
    pub t_slopes: Vec<SlopeValue>,
    pub f_slopes: Vec<SlopeValue>,
}

impl TorsionSplit {
    /// Every `T` slope exceeds `beta` and every `F` slope is at most `beta`.
    pub fn hom_vanishing(&self, beta: &Rational) -> bool {
        self.t_slopes.iter().all(|s| s.gt_rational(beta))
            && self.f_slopes.iter().all(|s| !s.gt_rational(beta))
    }
}

/// Cuts the HN filtration at `beta`.
pub fn torsion_pair_split(
    cat: &FormalCategory,
    id: &str,
    alpha: &Rational,
    beta: &Rational,
) -> Result<TorsionSplit> {
    let hn = hn_filtration(cat, id, alpha)?;
    let mut split = TorsionSplit {
        t_class: ClassVector::ZERO,
        f_class: ClassVector::ZERO,
        t_slopes: Vec::new(),
        f_slopes: Vec::new(),
    };
    for f in hn.factors {
        if f.slope.gt_rational(beta) {
            split.t_class = split.t_class + f.class;
            split.t_slopes.push(f.slope);
        } else {
            split.f_class = split.f_class + f.class;
            split.f_slopes.push(f.slope);
        }
    }
    Ok(split)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinimalKind {
    /// `(O_P, 0)`, one per point of the curve.
    PointSheaf,
    /// `(0, V_1)`, one per line.
    SectionLine,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalPattern {
    pub kind: MinimalKind,
    pub class: ClassVector,
    pub indexed_by: String,
}

pub fn minimal_objects() -> Vec<MinimalPattern> {
    vec![
        MinimalPattern {
            kind: MinimalKind::PointSheaf,
            class: ClassVector::new(0, 1, 0),
            indexed_by: "point".into(),
        },
        MinimalPattern {
            kind: MinimalKind::SectionLine,
            class: ClassVector::new(0, 0, 1),
            indexed_by: "vector_space".into(),
        },
    ]
}

pub fn is_minimal_class(c: &ClassVector) -> bool {
    minimal_objects().iter().any(|m| &m.class == c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ElementaryType {
    I,
    II,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementaryTransformation {
    #[serde(rename = "type")]
    pub kind: ElementaryType,
    pub target_class: ClassVector,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
}

/// Type I along each base point, type II when there is a section.
pub fn elementary_transformations(cat: &FormalCategory, id: &str) -> Result<Vec<ElementaryTransformation>> {
    let x = cat.object(id)?;
    let mut out: Vec<ElementaryTransformation> = x
        .base_points
        .iter()
        .map(|p| ElementaryTransformation {
            kind: ElementaryType::I,
            target_class: x.cls - ClassVector::new(0, 1, 0),
            point: Some(p.clone()),
        })
        .collect();
    if x.cls.k > 0 {
        out.push(ElementaryTransformation {
            kind: ElementaryType::II,
            target_class: x.cls - ClassVector::new(0, 0, 1),
            point: None,
        });
    }
    Ok(out)
}

/// Checks that the HN filtration of the elementary transformation `x'` of a
/// non-semistable `x` along `s` has the same length, its first factor is
/// the first factor of `x` minus `s`, and the remaining factors agree.
pub fn hn_transfer_check(
    cat: &FormalCategory,
    x_id: &str,
    xp_id: &str,
    s_class: &ClassVector,
    alpha: &Rational,
) -> Result<bool> {
    let rec = cat
        .elementary()
        .iter()
        .find(|r| r.from == x_id && r.to == xp_id && &r.along == s_class)
        .ok_or_else(|| {
            Error::Fixture(format!("no elementary record {x_id} -> {xp_id} along {s_class}"))
        })?;
    if !is_minimal_class(s_class) {
        return Err(Error::Fixture(format!("{s_class} is not a minimal class")));
    }
    let x = cat.object(x_id)?;
    let xp = cat.object(xp_id)?;
    if x.cls - *s_class != xp.cls {
        return Err(Error::Fixture(format!(
            "{xp_id} has class {} but {x_id} minus {s_class} is {}",
            xp.cls,
            x.cls - *s_class
        )));
    }
    match rec.psi1_nonzero {
        None => {
            return Err(Error::Inconclusive(format!(
                "fixture does not record whether psi_1 vanishes for {x_id} -> {xp_id}"
            )))
        }
        Some(false) => {
            return Err(Error::Inconclusive(format!(
                "psi_1 = 0 for {x_id} -> {xp_id}; the transfer statement does not apply"
            )))
        }
        Some(true) => {}
    }
    let hn = hn_filtration(cat, x_id, alpha)?;
    if hn.is_semistable() {
        return Err(Error::Precondition(format!("{x_id} is semistable")));
    }
    let hnp = hn_filtration(cat, xp_id, alpha)?;
    if hn.factors.len() != hnp.factors.len() {
        return Ok(false);
    }
    let first_ok = hnp.factors[0].class == hn.factors[0].class - *s_class;
    let rest_ok = hn.factors[1..]
        .iter()
        .zip(&hnp.factors[1..])
        .all(|(a, b)| a.class == b.class);
    Ok(first_ok && rest_ok)
}

/// An object of the tilted heart, given by its two cohomology objects.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltedRep {
    /// `H^{-1}`, in `F`, appears shifted.
    pub f_part: Option<String>,
    /// `H^0`, in `T`.
    pub t_part: Option<String>,
}

impl TiltedRep {
    pub fn signed_class(&self, cat: &FormalCategory) -> Result<ClassVector> {
        let t = match &self.t_part {
            Some(id) => cat.object(id)?.cls,
            None => ClassVector::ZERO,
        };
        let f = match &self.f_part {
            Some(id) => cat.object(id)?.cls,
            None => ClassVector::ZERO,
        };
        Ok(t - f)
    }
}

pub fn heart_member(rep: &TiltedRep, cat: &FormalCategory, alpha: &Rational, beta: &Rational) -> Result<bool> {
    if let Some(f) = &rep.f_part {
        let hn = hn_filtration(cat, f, alpha)?;
        if tilt_classify(&hn.slopes(), beta) != TiltClass::Free {
            return Ok(false);
        }
    }
    if let Some(t) = &rep.t_part {
        let hn = hn_filtration(cat, t, alpha)?;
        if tilt_classify(&hn.slopes(), beta) != TiltClass::Torsion {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinimalTarget {
    /// `(O_P, 0)`.
    Op,
    /// `(0, V_1)`.
    V1,
}

impl MinimalTarget {
    pub fn class(&self) -> ClassVector {
        match self {
            MinimalTarget::Op => ClassVector::new(0, 1, 0),
            MinimalTarget::V1 => ClassVector::new(0, 0, 1),
        }
    }
}

/// Linear constraints on the class `(n, d, k)` of a subobject that
/// destabilizes a minimal object. Admissibility (`k >= 0`, `d >= 0` when
/// `k > 0`, `k <= d + n`) is applied separately by [`scan_minimal`].
pub fn destabilizer_constraints_minimal(
    kind: MinimalTarget,
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
) -> Vec<LinearConstraint> {
    let one = Rational::one;
    let zero = Rational::zero;
    let mut cons = vec![LinearConstraint::new(
        [Rational::int(-1), zero(), zero()],
        Relation::Le,
        Rational::int(-1),
        "n >= 1",
    )];
    // mu_alpha(F) > beta: n beta < d + alpha k
    cons.push(LinearConstraint::new(
        [beta.clone(), Rational::int(-1), -alpha],
        Relation::Lt,
        zero(),
        "n beta < d + alpha k",
    ));
    match kind {
        MinimalTarget::Op => {
            cons.push(LinearConstraint::new(
                [-beta, one(), alpha.clone()],
                Relation::Le,
                one(),
                "d - 1 + alpha k <= n beta",
            ));
            cons.push(LinearConstraint::new(
                [beta + gamma, zero(), -(alpha + 1)],
                Relation::Lt,
                zero(),
                "k (alpha + 1) > n (beta + gamma)",
            ));
        }
        MinimalTarget::V1 => {
            cons.push(LinearConstraint::new(
                [zero(), zero(), Rational::int(-1)],
                Relation::Le,
                Rational::int(-1),
                "k >= 1",
            ));
            cons.push(LinearConstraint::new(
                [-beta, one(), alpha.clone()],
                Relation::Le,
                alpha.clone(),
                "d + alpha (k - 1) <= n beta",
            ));
            cons.push(LinearConstraint::new(
                [alpha * gamma - beta, alpha + 1, zero()],
                Relation::Lt,
                zero(),
                "n (beta - alpha gamma) > d (alpha + 1)",
            ));
        }
    }
    cons
}

/// Admissible solutions of [`destabilizer_constraints_minimal`] with
/// `1 <= n <= bound`, `|d| <= bound`, `0 <= k <= bound`.
pub fn scan_minimal(
    kind: MinimalTarget,
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    bound: i64,
) -> Vec<ClassVector> {
    let cons = destabilizer_constraints_minimal(kind, alpha, beta, gamma);
    let bx = LatticeBox::symmetric(bound).clamp_n(1, bound).clamp_k(0, bound);
    enumerate(&bx, &cons, admissible_unchecked)
}
