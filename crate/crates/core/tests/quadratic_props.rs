mod common;

use common::{class_in, r, rng};
use stabsys::bounds::admissible_semistable;
use stabsys::quadratic::{delta, q_alpha, q_alpha_high_branch, q_alpha_low_branch, q_dagger, delta_form, q_alpha_form};
use stabsys::{ClassVector, Rational};

#[test]
fn branches_agree_at_alpha_one() {
    let mut g = rng(41);
    let one = Rational::one();
    let (lo, hi) = (q_alpha_low_branch(&one), q_alpha_high_branch(&one));
    assert_eq!(lo, hi);
    for _ in 0..100 {
        let c = class_in(&mut g, 50);
        assert_eq!(lo.eval(&c), hi.eval(&c));
    }
}

#[test]
fn discriminant_is_nonnegative_on_admissible_classes() {
    let bound = 30;
    let one = Rational::one();
    for p in [0, 1] {
        for q in [0, 1] {
            for u in [1, 2] {
                let (p, q, u) = (Rational::int(p), Rational::int(q), Rational::int(u));
                for n in 0..=bound {
                    for d in -bound..=bound {
                        for k in 0..=bound {
                            let c = ClassVector::new(n, d, k);
                            if c.is_zero() || !admissible_semistable(&c, &one).unwrap() {
                                continue;
                            }
                            assert!(!delta(&c, &p, &q, &u).is_negative(), "{c} at p={p} q={q} u={u}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn integer_kernel_points_are_negative() {
    for alpha in [r(1, 2), r(1, 1), r(2, 1), r(7, 3), r(5, 8)] {
        let (a, b) = (alpha.numer().clone(), alpha.denom().clone());
        let (a, b) = (i64::try_from(a).unwrap(), i64::try_from(b).unwrap());
        for m in -50..=50 {
            if m == 0 {
                continue;
            }
            let c = ClassVector::new(0, -a * m, b * m);
            let qv = q_alpha(&c, &alpha).unwrap();
            assert!(qv.is_negative(), "{c} at alpha {alpha}");
            // Both branches reduce to -(alpha^2 + 1) k^2 on the kernel.
            let expected = -(&alpha * &alpha + 1) * Rational::int(b * m).pow(2);
            assert_eq!(qv, expected);
        }
    }
}

#[test]
fn q_dagger_combines_both_forms() {
    let mut g = rng(44);
    let base = q_alpha_form(&r(2, 1)).unwrap();
    let disc = delta_form(&r(1, 1), &r(0, 1), &r(1, 1));
    for _ in 0..200 {
        let c = class_in(&mut g, 20);
        let v = q_dagger(&c, &r(3, 1), &r(1, 2), &base, &disc).unwrap();
        assert_eq!(v, base.eval(&c) * 3 + disc.eval(&c) / 2);
    }
    assert!(q_dagger(&ClassVector::new(1, 0, 0), &r(0, 1), &r(1, 1), &base, &disc).is_err());
}
