#![allow(dead_code)]

use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use stabsys::charges::mu_alpha;
use stabsys::formal::{FormalCategory, FormalObject};
use stabsys::{compare_slopes, ClassVector, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn r(p: i64, q: i64) -> Rational {
    Rational::frac(p, q)
}

/// Uniform numerator in `[lo*den, hi*den]` over a random denominator `1..=max_den`.
pub fn rational_in(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(lo * den..=hi * den);
    Rational::frac(num, den)
}

/// Strictly positive rational in `(0, hi]`.
pub fn positive_rational(rng: &mut ChaCha8Rng, hi: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(1..=hi * den);
    Rational::frac(num, den)
}

pub fn class_in(rng: &mut ChaCha8Rng, bound: i64) -> ClassVector {
    ClassVector::new(
        rng.gen_range(-bound..=bound),
        rng.gen_range(-bound..=bound),
        rng.gen_range(-bound..=bound),
    )
}

/// Gauss-Jordan elimination for a square system; `None` if singular.
pub fn solve_linear(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        b[col] = &b[col] / &p;
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            let row = a[col].clone();
            for (x, y) in a[i].iter_mut().zip(&row) {
                *x = &*x - &(&f * y);
            }
            b[i] = &b[i] - &(&f * &b[col]);
        }
    }
    Some(b)
}

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Every valid fixture, sorted by file name.
pub fn corpus() -> Vec<(String, FormalCategory)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(fixture_dir())
        .expect("fixture directory")
        .map(|e| e.expect("dir entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let cat = FormalCategory::load(&p).unwrap_or_else(|e| panic!("{name}: {e}"));
            (name, cat)
        })
        .collect()
}

/// The same fixture with objects and subobject lists in a random order.
pub fn shuffled(cat: &FormalCategory, rng: &mut ChaCha8Rng) -> FormalCategory {
    let mut objects: Vec<FormalObject> = cat.objects().cloned().collect();
    objects.shuffle(rng);
    for o in &mut objects {
        o.subobject_ids.shuffle(rng);
    }
    FormalCategory::new(objects, cat.elementary().to_vec()).expect("shuffle keeps validity")
}

/// All chains `0 < Y_1 < ... < X` whose factors have strictly decreasing
/// slope and are semistable inside the fixture; returns their factor classes.
pub fn hn_oracle(cat: &FormalCategory, id: &str, alpha: &Rational) -> Vec<Vec<ClassVector>> {
    let top = cat.object(id).unwrap();
    let mut members: Vec<&FormalObject> = cat
        .subobjects(id)
        .unwrap()
        .iter()
        .map(|s| cat.object(s).unwrap())
        .collect();
    members.push(top);
    let mut out = Vec::new();
    let mut chain: Vec<&FormalObject> = Vec::new();
    extend_chains(cat, &members, top, alpha, &mut chain, &mut out);
    out
}

fn below(cat: &FormalCategory, lower: Option<&FormalObject>, z: &FormalObject) -> bool {
    match lower {
        None => true,
        Some(l) => cat.is_subobject(&l.id, &z.id),
    }
}

fn extend_chains<'a>(
    cat: &FormalCategory,
    members: &[&'a FormalObject],
    top: &FormalObject,
    alpha: &Rational,
    chain: &mut Vec<&'a FormalObject>,
    out: &mut Vec<Vec<ClassVector>>,
) {
    let last = chain.last().copied();
    if last.is_some_and(|l| l.id == top.id) {
        let mut prev = ClassVector::ZERO;
        let classes: Vec<ClassVector> = chain
            .iter()
            .map(|y| {
                let q = y.cls - prev;
                prev = y.cls;
                q
            })
            .collect();
        out.push(classes);
        return;
    }
    let base = last.map(|l| l.cls).unwrap_or(ClassVector::ZERO);
    for y in members {
        if !below(cat, last, y) {
            continue;
        }
        let q = y.cls - base;
        let s = mu_alpha(&q, alpha).unwrap();
        if let Some(prev_slope) = chain_last_slope(chain, alpha) {
            if compare_slopes(&s, &prev_slope).is_ge() {
                continue;
            }
        }
        // Factor y / last is semistable within the fixture.
        let semistable = members.iter().all(|z| {
            if z.id == y.id || !below(cat, last, z) || !cat.is_subobject(&z.id, &y.id) {
                return true;
            }
            let sz = mu_alpha(&(z.cls - base), alpha).unwrap();
            compare_slopes(&sz, &s).is_le()
        });
        if !semistable {
            continue;
        }
        chain.push(y);
        extend_chains(cat, members, top, alpha, chain, out);
        chain.pop();
    }
}

fn chain_last_slope(chain: &[&FormalObject], alpha: &Rational) -> Option<stabsys::SlopeValue> {
    match chain.len() {
        0 => None,
        1 => Some(mu_alpha(&chain[0].cls, alpha).unwrap()),
        n => Some(mu_alpha(&(chain[n - 1].cls - chain[n - 2].cls), alpha).unwrap()),
    }
}

fn random_piece(rng: &mut ChaCha8Rng) -> ClassVector {
    loop {
        let n = rng.gen_range(0..=3);
        let d = if n == 0 { rng.gen_range(0..=4) } else { rng.gen_range(-3..=6) };
        let k = rng.gen_range(0..=3);
        let c = ClassVector::new(n, d, k);
        if !c.is_zero() {
            return c;
        }
    }
}

fn object(id: String, cls: ClassVector, subs: Vec<String>) -> FormalObject {
    FormalObject {
        id,
        cls,
        subobject_ids: subs,
        base_points: Default::default(),
        complete: false,
        injective: true,
        stable: None,
        delta: None,
        pure: None,
    }
}

/// A random chain or direct-sum lattice with at most 8 objects; the last
/// object returned is the top.
pub fn random_lattice(rng: &mut ChaCha8Rng) -> (FormalCategory, String) {
    if rng.gen_bool(0.5) {
        let len = rng.gen_range(1..=8);
        let mut objects = Vec::new();
        let mut total = ClassVector::ZERO;
        for i in 0..len {
            total = total + random_piece(rng);
            let subs = if i == 0 { vec![] } else { vec![format!("Y{}", i - 1)] };
            objects.push(object(format!("Y{i}"), total, subs));
        }
        let top = format!("Y{}", len - 1);
        (FormalCategory::new(objects, vec![]).unwrap(), top)
    } else {
        let m = rng.gen_range(1..=3usize);
        let pieces: Vec<ClassVector> = (0..m).map(|_| random_piece(rng)).collect();
        let name = |mask: usize| format!("S{mask}");
        let mut objects = Vec::new();
        for mask in 1..(1usize << m) {
            let cls = (0..m).filter(|i| mask & (1 << i) != 0).map(|i| pieces[i]).sum();
            // Direct subobjects: drop one summand.
            let subs = (0..m)
                .filter(|i| mask & (1 << i) != 0 && mask != 1 << i)
                .map(|i| name(mask & !(1 << i)))
                .collect();
            objects.push(object(name(mask), cls, subs));
        }
        (FormalCategory::new(objects, vec![]).unwrap(), name((1 << m) - 1))
    }
}
