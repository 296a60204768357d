mod common;

use common::airy_oracle;
use proptest::prelude::*;
use quantum_bouncer::airy::{
    ai, asymptotic_coefficient, bessel_i, series_coefficients, series_f, series_g, SeriesFamily,
    ASYMPTOTIC_MIN, BI_SWITCHOVER, SWITCHOVER,
};
use quantum_bouncer::*;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;

const PROBES: [f64; 9] = [-8.0, -5.0, -2.0, -1.0, 0.0, 1.0, 2.0, 5.0, 8.0];

fn cfg() -> SeriesConfig {
    SeriesConfig::default()
}

fn ode_residual(f: impl Fn(f64) -> f64, x: f64) -> f64 {
    let h = 1e-4;
    let second = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    (second - x * f(x)).abs()
}

#[test]
fn f_and_g_at_origin() {
    assert_eq!(series_f(0.0, &cfg()).unwrap(), 1.0);
    assert_eq!(series_g(0.0, &cfg()).unwrap(), 0.0);
    let (a, _) = airy_series(0.0, &cfg()).unwrap();
    // g'(0) = 1 carries Ai'(0) = -c2
    assert_eq!(a.derivative, -AiryConstants::STORED.c2);
}

#[test]
fn f_and_g_reproduce_oracle_at_one() {
    let c = AiryConstants::STORED;
    let f = series_f(1.0, &cfg()).unwrap();
    let g = series_g(1.0, &cfg()).unwrap();
    let o = airy_oracle(1.0);
    assert!((c.c1 * f - c.c2 * g - o.ai).abs() < 1e-14);
    assert!((3f64.sqrt() * (c.c1 * f + c.c2 * g) - o.bi).abs() < 1e-14);
}

#[test]
fn f_and_g_at_minus_two_solve_the_oracle_system() {
    // Ai = c1 f - c2 g and Bi = sqrt3 (c1 f + c2 g), solved for f and g
    let c = AiryConstants::STORED;
    let o = airy_oracle(-2.0);
    let s = o.bi / 3f64.sqrt();
    let f_ref = (o.ai + s) / (2.0 * c.c1);
    let g_ref = (s - o.ai) / (2.0 * c.c2);
    let f = series_f(-2.0, &cfg()).unwrap();
    let g = series_g(-2.0, &cfg()).unwrap();
    assert!((f - f_ref).abs() < 1e-13, "{f} {f_ref}");
    assert!((g - g_ref).abs() < 1e-13, "{g} {g_ref}");
}

#[test]
fn series_reports_non_convergence() {
    let tight = SeriesConfig::new(1e-18, 5, AsymptoticTruncation::OptimalTruncation).unwrap();
    assert!(matches!(
        series_f(4.0, &tight),
        Err(Error::NonConvergence { .. })
    ));
    assert!(matches!(
        airy_series(-4.0, &tight),
        Err(Error::NonConvergence { .. })
    ));
}

#[test]
fn stored_constants_at_origin() {
    let (a, b) = airy_series(0.0, &cfg()).unwrap();
    assert_eq!(a.value, 0.355028053887817);
    assert_eq!(a.derivative, -0.258819403792807);
    let o = airy_oracle(0.0);
    assert!((b.value - o.bi).abs() < 1e-14);
    assert!((b.value - 0.614926627).abs() < 1e-9);
}

#[test]
fn term_exponents_follow_the_two_families() {
    let f: Vec<u32> = series_coefficients(SeriesFamily::F, 12)
        .iter()
        .map(|t| t.0)
        .collect();
    let g: Vec<u32> = series_coefficients(SeriesFamily::G, 12)
        .iter()
        .map(|t| t.0)
        .collect();
    assert!(f.iter().enumerate().all(|(k, &e)| e == 3 * k as u32));
    assert!(g.iter().enumerate().all(|(k, &e)| e == 3 * k as u32 + 1));
}

#[test]
fn bessel_route_matches_series() {
    let (sa, _) = airy_series(1.0, &cfg()).unwrap();
    let (ba, _) = airy_bessel(1.0, &cfg()).unwrap();
    assert!((sa.value - ba.value).abs() < 1e-12);
    assert!((ba.value - airy_oracle(1.0).ai).abs() < 1e-12);

    let (ha, _) = airy(4.0, &cfg()).unwrap();
    let (ba, _) = airy_bessel(4.0, &cfg()).unwrap();
    assert!((ha.value - ba.value).abs() < 1e-10);

    let (_, sb) = airy_series(0.5, &cfg()).unwrap();
    let (_, bb) = airy_bessel(0.5, &cfg()).unwrap();
    assert!((sb.value - bb.value).abs() < 1e-12);
}

#[test]
fn route_equivalence_on_positive_axis() {
    let mut worst: f64 = 0.0;
    for i in 1..=600 {
        let x = i as f64 * 0.01;
        let (sa, sb) = airy_series(x, &cfg()).unwrap();
        let (ba, bb) = airy_bessel(x, &cfg()).unwrap();
        worst = worst
            .max((sa.value - ba.value).abs())
            .max((sb.value - bb.value).abs());
    }
    assert!(worst < 1e-11, "worst {worst:e}");
}

#[test]
fn bessel_route_domain() {
    assert!(matches!(airy_bessel(0.0, &cfg()), Err(Error::Domain(_))));
    assert!(matches!(airy_bessel(-2.0, &cfg()), Err(Error::Domain(_))));
    // I_{1/3} at a modest argument against the oracle through Ai and Bi
    let xi: f64 = 2.0;
    let zeta = 2.0 / 3.0 * xi.powf(1.5);
    let o = airy_oracle(xi);
    let i_plus = (o.bi / 3f64.sqrt() - o.ai) * 1.5 / xi.sqrt();
    assert!((bessel_i(1.0 / 3.0, zeta, &cfg()).unwrap() - i_plus).abs() < 1e-13);
}

#[test]
fn asymptotic_coefficients() {
    assert!((asymptotic_coefficient(0) - 1.0).abs() < 1e-15);
    assert!((asymptotic_coefficient(1) - 5.0 / 72.0).abs() < 1e-16);
    // c2 = Gamma(6.5) / (54^2 2! Gamma(2.5)) = 385/10368
    assert!((asymptotic_coefficient(2) - 385.0 / 10368.0).abs() < 1e-16);
}

#[test]
fn leading_order_positive_axis() {
    let fixed = SeriesConfig::new(1e-18, 200, AsymptoticTruncation::FixedK(1)).unwrap();
    let (a, _) = airy_asymptotic_pos(10.0, &fixed).unwrap();
    let zeta = 2.0 / 3.0 * 10f64.powf(1.5);
    let lead = 0.5 / PI.sqrt() * 10f64.powf(-0.25) * (-zeta).exp();
    assert!(((a.value - lead) / lead).abs() < 1e-14);
}

#[test]
fn asymptotic_positive_matches_series_at_eight() {
    let (sa, sb) = airy_series(8.0, &cfg()).unwrap();
    let (aa, ab) = airy_asymptotic_pos(8.0, &cfg()).unwrap();
    let tol_a = 1e-10_f64.max(sa.est_error + aa.est_error);
    assert!((sa.value - aa.value).abs() < tol_a);
    // asymptotic Ai(8) is accurate to rounding; the series carries the stored constants
    let o = airy_oracle(8.0);
    assert!((aa.value - o.ai).abs() < 1e-20);
    assert!(((ab.value - sb.value) / sb.value).abs() < 1e-12);
}

#[test]
fn bi_grows_on_positive_axis() {
    let (_, b6) = airy_asymptotic_pos(6.0, &cfg()).unwrap();
    let (_, b8) = airy_asymptotic_pos(8.0, &cfg()).unwrap();
    assert!(b8.value > 100.0 * b6.value);
    assert!(((b6.value - airy_oracle(6.0).bi) / b6.value).abs() < 1e-9);
}

#[test]
fn asymptotic_negative_matches_series_at_five() {
    let a = airy_asymptotic_neg(5.0, &cfg()).unwrap();
    let (s, _) = airy_series(-5.0, &cfg()).unwrap();
    assert!((a.value - s.value).abs() < 1e-8);
    assert_eq!(a.route, Route::AsymptoticNeg);
}

#[test]
fn asymptotic_negative_envelope() {
    let a = airy_asymptotic_neg(10.0, &cfg()).unwrap();
    let envelope = 10f64.powf(-0.25) / PI.sqrt();
    assert!(a.value.abs() <= envelope * (1.0 + 1e-3));
}

#[test]
fn leading_order_negative_zero() {
    // sin(zeta + pi/4) = 0 at zeta + pi/4 = 4 pi; keep only the k = 0 term
    let fixed = SeriesConfig::new(1e-18, 200, AsymptoticTruncation::FixedK(1)).unwrap();
    let zeta = 4.0 * PI - PI / 4.0;
    let x = (1.5 * zeta).powf(2.0 / 3.0);
    assert!(airy_asymptotic_neg(x, &fixed).unwrap().value.abs() < 1e-14);
}

#[test]
fn asymptotic_routes_refuse_small_arguments() {
    assert!(matches!(
        airy_asymptotic_pos(ASYMPTOTIC_MIN - 0.1, &cfg()),
        Err(Error::Domain(_))
    ));
    assert!(matches!(
        airy_asymptotic_neg(1.0, &cfg()),
        Err(Error::Domain(_))
    ));
    assert!(matches!(
        bi_asymptotic_neg(1.0, &cfg()),
        Err(Error::Domain(_))
    ));
}

#[test]
fn hybrid_examples() {
    let (a, _) = airy(0.0, &cfg()).unwrap();
    assert_eq!(a.value, 0.355028053887817);
    let a = ai(-2.338_107_410_459_767, &cfg()).unwrap();
    assert!(a.value.abs() < 1e-13);
    assert!(matches!(airy(f64::NAN, &cfg()), Err(Error::Domain(_))));
    assert!(matches!(
        airy(f64::NEG_INFINITY, &cfg()),
        Err(Error::Domain(_))
    ));
}

#[test]
fn hybrid_records_the_branch() {
    let (a, b) = airy(-7.0, &cfg()).unwrap();
    assert_eq!(a.route, Route::Hybrid(Branch::AsymptoticNeg));
    assert_eq!(b.route, Route::Hybrid(Branch::AsymptoticNeg));
    let (a, b) = airy(7.0, &cfg()).unwrap();
    assert_eq!(a.route, Route::Hybrid(Branch::AsymptoticPos));
    assert_eq!(b.route, Route::Hybrid(Branch::Series));
    let (_, b) = airy(13.0, &cfg()).unwrap();
    assert_eq!(b.route, Route::Hybrid(Branch::AsymptoticPos));
    let (a, _) = airy(1.0, &cfg()).unwrap();
    assert_eq!(a.route, Route::Hybrid(Branch::Series));
}

#[test]
fn ode_residual_every_route() {
    let c = cfg();
    for &x in &PROBES {
        let r = ode_residual(|t| airy_series(t, &c).unwrap().0.value, x);
        assert!(r < 1e-6, "series Ai at {x}: {r:e}");
        let r = ode_residual(|t| airy(t, &c).unwrap().0.value, x);
        assert!(r < 1e-6, "hybrid Ai at {x}: {r:e}");
        if x > 0.0 {
            let r = ode_residual(|t| airy_bessel(t, &c).unwrap().0.value, x);
            assert!(r < 1e-6, "Bessel Ai at {x}: {r:e}");
        }
        if x >= ASYMPTOTIC_MIN {
            let r = ode_residual(|t| airy_asymptotic_pos(t, &c).unwrap().0.value, x);
            assert!(r < 1e-6, "asymptotic Ai at {x}: {r:e}");
        }
        if x <= -ASYMPTOTIC_MIN {
            let r = ode_residual(|t| airy_asymptotic_neg(-t, &c).unwrap().value, x);
            assert!(r < 1e-6, "asymptotic Ai at {x}: {r:e}");
        }
    }
}

#[test]
fn wronskian_across_series_domain() {
    let mut worst: f64 = 0.0;
    for i in 0..=1200 {
        let x = -6.0 + i as f64 * 0.01;
        let (a, b) = airy(x, &cfg()).unwrap();
        let w = a.value * b.derivative - a.derivative * b.value;
        worst = worst.max((w - 1.0 / PI).abs());
    }
    assert!(worst < 1e-10, "worst {worst:e}");
}

#[test]
fn derivatives_match_oracle() {
    for &x in &PROBES {
        let o = airy_oracle(x);
        let (a, b) = airy(x, &cfg()).unwrap();
        assert!((a.derivative - o.dai).abs() < 1e-9, "Ai' at {x}");
        assert!(
            ((b.derivative - o.dbi) / o.dbi.abs().max(1.0)).abs() < 1e-9,
            "Bi' at {x}"
        );
    }
}

#[test]
fn overlap_band_agreement() {
    let c = cfg();
    for i in 0..=20 {
        let x = SWITCHOVER - 1.0 + 0.1 * i as f64;
        let (sa, sb) = airy_series(x, &c).unwrap();
        let (aa, ab) = airy_asymptotic_pos(x, &c).unwrap();
        assert!(
            (sa.value - aa.value).abs() <= 1e-10_f64.max(sa.est_error + aa.est_error),
            "Ai {x}"
        );
        assert!(
            (sb.value - ab.value).abs() <= 1e-10_f64.max(sb.est_error + ab.est_error),
            "Bi {x}"
        );

        let (na, nb) = airy_series(-x, &c).unwrap();
        let ta = airy_asymptotic_neg(x, &c).unwrap();
        let tb = bi_asymptotic_neg(x, &c).unwrap();
        assert!(
            (na.value - ta.value).abs() <= 1e-10_f64.max(na.est_error + ta.est_error),
            "Ai -{x}"
        );
        assert!(
            (nb.value - tb.value).abs() <= 1e-10_f64.max(nb.est_error + tb.est_error),
            "Bi -{x}"
        );
    }
}

#[test]
fn switchover_continuity() {
    let c = cfg();
    let t = SWITCHOVER;
    let (sa, sb) = airy_series(t, &c).unwrap();
    let (aa, _) = airy_asymptotic_pos(t, &c).unwrap();
    assert!((sa.value - aa.value).abs() < 1e-10);
    let (na, nb) = airy_series(-t, &c).unwrap();
    assert!((na.value - airy_asymptotic_neg(t, &c).unwrap().value).abs() < 1e-10);
    assert!((nb.value - bi_asymptotic_neg(t, &c).unwrap().value).abs() < 1e-10);

    // the hybrid on either side of each handover
    let eps = 1e-12;
    for t in [-SWITCHOVER, SWITCHOVER] {
        let (l, r) = (airy(t - eps, &c).unwrap(), airy(t + eps, &c).unwrap());
        // allow for the slope over the 2 eps step
        let drift = |d: f64| 2.0 * eps * d.abs();
        assert!(
            (l.0.value - r.0.value).abs() < 1e-10 + drift(r.0.derivative),
            "Ai at {t}"
        );
        assert!(
            (l.1.value - r.1.value).abs() < 1e-10 + drift(r.1.derivative),
            "Bi at {t}"
        );
    }
    assert!((airy(t, &c).unwrap().1.value - sb.value).abs() == 0.0);

    // Bi hands over where it is ~1e12; compare relatively at the same point
    let (_, s) = airy_series(BI_SWITCHOVER, &c).unwrap();
    let (_, a) = airy_asymptotic_pos(BI_SWITCHOVER, &c).unwrap();
    assert!(((s.value - a.value) / a.value).abs() < 1e-10);
}

#[test]
fn est_error_is_honest_against_oracle() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x41a1);
    let c = cfg();
    for _ in 0..1000 {
        let x: f64 = rng.gen_range(-8.0..=8.0);
        let o = airy_oracle(x);
        let (a, b) = airy(x, &c).unwrap();
        assert!((a.value - o.ai).abs() <= 10.0 * a.est_error, "Ai at {x}");
        assert!((b.value - o.bi).abs() <= 10.0 * b.est_error, "Bi at {x}");
    }
}

#[test]
fn oracle_agreement_at_probes() {
    for &x in &PROBES {
        let o = airy_oracle(x);
        let (a, b) = airy(x, &cfg()).unwrap();
        assert!((a.value - o.ai).abs() < 1e-9, "Ai at {x}");
        assert!(
            ((b.value - o.bi) / o.bi.abs().max(1.0)).abs() < 1e-9,
            "Bi at {x}"
        );
    }
}

proptest! {
    #[test]
    fn est_error_finite_and_non_negative(x in -60.0f64..60.0) {
        let (a, b) = airy(x, &cfg()).unwrap();
        prop_assert!(a.est_error.is_finite() && a.est_error >= 0.0);
        prop_assert!(b.est_error.is_finite() && b.est_error >= 0.0);
    }

    #[test]
    fn ai_positive_and_decreasing_on_positive_axis(x in 0.0f64..40.0) {
        let (a, _) = airy(x, &cfg()).unwrap();
        prop_assert!(a.value > 0.0);
        prop_assert!(a.derivative < 0.0);
    }
}
