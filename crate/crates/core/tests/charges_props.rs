mod common;

use common::{class_in, positive_rational, r, rational_in, rng};
use stabsys::charges::{mu_tilt, slope, z_alpha, z_alpha_beta, z_tilt, ChargeFamily};
use stabsys::{ClassVector, Rational};

fn families(g: &mut rand_chacha::ChaCha8Rng) -> Vec<ChargeFamily> {
    let alpha = rational_in(g, 0, 5, 9);
    let beta = rational_in(g, 0, 5, 9);
    let gamma = Rational::one() + positive_rational(g, 5, 9);
    vec![
        ChargeFamily::StandardAlpha { alpha: alpha.clone() },
        ChargeFamily::StandardAlphaBeta { alpha: alpha.clone(), beta: beta.clone() },
        ChargeFamily::Tilted { alpha: alpha.clone(), beta: beta.clone(), gamma },
        ChargeFamily::Dagger {
            alpha,
            beta,
            t: positive_rational(g, 4, 9),
            delta_i: [rational_in(g, -3, 3, 5), rational_in(g, -3, 3, 5), rational_in(g, -3, 3, 5)],
        },
    ]
}

#[test]
fn every_family_is_additive() {
    let mut g = rng(21);
    for _ in 0..100 {
        let fams = families(&mut g);
        for _ in 0..100 {
            let (a, b) = (class_in(&mut g, 50), class_in(&mut g, 50));
            for f in &fams {
                let sum = f.eval(&(a + b)).unwrap();
                let parts = f.eval(&a).unwrap() + f.eval(&b).unwrap();
                assert_eq!(sum, parts, "{} on {a} + {b}", f.name());
            }
        }
    }
}

#[test]
fn beta_shift_moves_only_the_real_part() {
    let mut g = rng(22);
    for _ in 0..2000 {
        let c = class_in(&mut g, 40);
        let alpha = rational_in(&mut g, 0, 6, 11);
        let beta = rational_in(&mut g, -6, 6, 11);
        let za = z_alpha(&c, &alpha).unwrap();
        let zb = z_alpha_beta(&c, &alpha, &beta).unwrap();
        assert_eq!(za.im, zb.im);
        assert_eq!(&zb.re - &za.re, &beta * c.n);
    }
}

#[test]
fn seesaw_on_tilted_slopes() {
    let mut g = rng(23);
    let mut tested = 0;
    while tested < 3000 {
        let alpha = rational_in(&mut g, 0, 4, 7);
        let beta = rational_in(&mut g, 0, 4, 7);
        let gamma = Rational::one() + positive_rational(&mut g, 4, 7);
        let (b, c) = (class_in(&mut g, 20), class_in(&mut g, 20));
        let zb = z_tilt(&b, &alpha, &beta, &gamma).unwrap();
        let zc = z_tilt(&c, &alpha, &beta, &gamma).unwrap();
        if !zb.im.is_positive() || !zc.im.is_positive() {
            continue;
        }
        let (sb, sc) = (slope(&zb), slope(&zc));
        let sa = mu_tilt(&(b + c), &alpha, &beta, &gamma).unwrap();
        let (lo, hi) = if sb <= sc { (&sb, &sc) } else { (&sc, &sb) };
        assert!(lo <= &sa && &sa <= hi, "{b} + {c}");
        // The same statement by cross-multiplication of Re and Im.
        let za = z_tilt(&(b + c), &alpha, &beta, &gamma).unwrap();
        let above_b = -&za.re * &zb.im >= -&zb.re * &za.im;
        let above_c = -&za.re * &zc.im >= -&zc.re * &za.im;
        let below_b = -&za.re * &zb.im <= -&zb.re * &za.im;
        let below_c = -&za.re * &zc.im <= -&zc.re * &za.im;
        assert!((above_b || above_c) && (below_b || below_c));
        tested += 1;
    }
}

#[test]
fn torsion_classes_have_nonpositive_tilted_slope() {
    for (alpha, beta, gamma) in [(r(1, 1), r(2, 1), r(3, 1)), (r(1, 3), r(0, 1), r(9, 8)), (r(5, 2), r(7, 2), r(11, 1))] {
        for d in 0..=25 {
            for k in 0..=d {
                if d == 0 && k == 0 {
                    continue;
                }
                let s = mu_tilt(&ClassVector::new(0, d, k), &alpha, &beta, &gamma).unwrap();
                let s = s.finite().expect("d + alpha k > 0").clone();
                assert!(!s.is_positive());
                assert_eq!(s.is_zero(), d == k);
            }
        }
    }
}

#[test]
fn negation_preserves_slope() {
    let mut g = rng(25);
    for _ in 0..5000 {
        let c = class_in(&mut g, 30);
        let alpha = rational_in(&mut g, 0, 4, 7);
        let beta = rational_in(&mut g, 0, 4, 7);
        let gamma = Rational::one() + positive_rational(&mut g, 4, 7);
        if z_tilt(&c, &alpha, &beta, &gamma).unwrap().is_zero() {
            continue;
        }
        assert_eq!(
            mu_tilt(&c, &alpha, &beta, &gamma).unwrap(),
            mu_tilt(&-c, &alpha, &beta, &gamma).unwrap()
        );
    }
}
