mod common;

use rand::Rng;

use common::{positive_rational, r, rng};
use stabsys::charges::ChargeFamily;
use stabsys::regions::{bg_solve, in_ps, in_s, orbit_compare, region_check, s_threshold, t_window, ParamTriple};
use stabsys::Rational;

fn sample_alpha_beta(g: &mut rand_chacha::ChaCha8Rng, beta_above_one: bool) -> (Rational, Rational) {
    loop {
        let alpha = positive_rational(g, 10, 20);
        let beta = positive_rational(g, 10, 20);
        if beta != 1 && (beta > 1) == beta_above_one {
            return (alpha, beta);
        }
    }
}

#[test]
fn s_points_with_beta_above_one_pass_every_flag() {
    let mut g = rng(31);
    for _ in 0..500 {
        let (alpha, beta) = sample_alpha_beta(&mut g, true);
        let (th, _) = s_threshold(&alpha, &beta).unwrap();
        let gamma = th.max(Rational::one() + r(1, 20)) + Rational::frac(g.gen_range(0..=200), 20);
        let p = ParamTriple::new(alpha.clone(), beta.clone(), gamma.clone());
        assert!(in_s(&p).unwrap());
        let w = t_window(&alpha, &beta, &gamma).unwrap().expect("nonempty window on S");
        let bg = bg_solve(&alpha, &beta, &gamma, &w.midpoint()).unwrap();
        assert!(bg.validity.all(), "{p:?}");
        assert!(bg.reconstructs());
        // The endpoints of the window are valid too.
        for t in [&w.lo, &w.hi] {
            assert!(bg_solve(&alpha, &beta, &gamma, t).unwrap().validity.all());
        }
    }
}

#[test]
fn s_points_with_beta_below_one_never_reach_u_one() {
    let mut g = rng(32);
    for _ in 0..200 {
        let (alpha, beta) = sample_alpha_beta(&mut g, false);
        let (th, strict) = s_threshold(&alpha, &beta).unwrap();
        assert!(strict);
        let gamma = th.max(Rational::one()) + positive_rational(&mut g, 10, 20);
        let p = ParamTriple::new(alpha.clone(), beta.clone(), gamma.clone());
        assert!(in_s(&p).unwrap());
        let w = t_window(&alpha, &beta, &gamma).unwrap().expect("window for beta < 1");
        let bg = bg_solve(&alpha, &beta, &gamma, &w.midpoint()).unwrap();
        assert!(bg.reconstructs());
        assert!(bg.validity.p_nonneg && bg.validity.q_nonneg && bg.validity.u_le_alpha_plus_1);
        assert!(!bg.validity.u_ge_1);
        assert!(region_check(&p).unwrap().notes.iter().any(|n| n.contains("u >= 1")));
    }
}

#[test]
fn ps_outside_s_has_no_window() {
    let mut g = rng(33);
    let mut tested = 0;
    while tested < 500 {
        let (alpha, beta) = sample_alpha_beta(&mut g, true);
        let (th, _) = s_threshold(&alpha, &beta).unwrap();
        if th <= Rational::one() + r(1, 100) {
            continue;
        }
        // gamma strictly between 1 and the threshold.
        let frac = Rational::frac(g.gen_range(1..100), 100);
        let gamma = Rational::one() + (&th - 1) * frac;
        let p = ParamTriple::new(alpha.clone(), beta.clone(), gamma.clone());
        assert!(in_ps(&p) && !in_s(&p).unwrap());
        assert_eq!(t_window(&alpha, &beta, &gamma).unwrap(), None, "{p:?}");
        tested += 1;
    }
}

fn grid_families() -> Vec<ChargeFamily> {
    let vals = [r(1, 3), r(1, 1), r(2, 1), r(7, 2)];
    let mut out = Vec::new();
    for a in &vals {
        out.push(ChargeFamily::StandardAlpha { alpha: a.clone() });
        for b in &vals {
            out.push(ChargeFamily::StandardAlphaBeta { alpha: a.clone(), beta: b.clone() });
            out.push(ChargeFamily::Tilted { alpha: a.clone(), beta: b.clone(), gamma: b + 2 });
        }
    }
    let bg = bg_solve(&r(1, 1), &r(2, 1), &r(7, 1), &r(2, 1)).unwrap();
    out.push(bg.dagger_family());
    out
}

#[test]
fn orbit_comparison_is_reflexive_and_symmetric() {
    let fams = grid_families();
    let id = [[Rational::one(), Rational::zero()], [Rational::zero(), Rational::one()]];
    for f in &fams {
        let v = orbit_compare(f, f).unwrap();
        assert!(v.equivalent);
        assert_eq!(v.acting_element.as_ref(), Some(&id));
    }
    for f in &fams {
        for h in &fams {
            let a = orbit_compare(f, h).unwrap().equivalent;
            let b = orbit_compare(h, f).unwrap().equivalent;
            assert_eq!(a, b, "{f:?} vs {h:?}");
        }
    }
}

#[test]
fn dagger_charge_is_equivalent_to_the_tilted_charge() {
    let bg = bg_solve(&r(1, 1), &r(2, 1), &r(7, 1), &r(2, 1)).unwrap();
    let tilted = ChargeFamily::Tilted { alpha: r(1, 1), beta: r(2, 1), gamma: r(7, 1) };
    let v = orbit_compare(&bg.dagger_family(), &tilted).unwrap();
    assert!(v.equivalent);
}
