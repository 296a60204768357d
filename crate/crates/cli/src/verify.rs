//! Invariant checks behind `bouncer verify`.

use std::f64::consts::PI;
use std::fmt;

use quantum_bouncer::airy::{ASYMPTOTIC_MIN, BI_SWITCHOVER, SWITCHOVER};
use quantum_bouncer::fd::{convergence_study_on, richardson, solve_fd};
use quantum_bouncer::spectrum::{build_spectrum, fit_scaling_exponent, lambda_exact, DEFAULT_TOL};
use quantum_bouncer::{
    airy, airy_asymptotic_neg, airy_asymptotic_pos, airy_bessel, airy_series, bi_asymptotic_neg,
    BouncerSystem, Result, SeriesConfig,
};

use crate::Level;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    /// `key=value` pairs as printed.
    pub measured: String,
    pub limit: &'static str,
    pub pass: bool,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "{} {} {verdict}({})",
            self.name, self.measured, self.limit
        )
    }
}

fn ode_residual(f: impl Fn(f64) -> Result<f64>, x: f64) -> Result<f64> {
    let h = 1e-4;
    let (l, m, r) = (f(x - h)?, f(x)?, f(x + h)?);
    Ok(((l - 2.0 * m + r) / (h * h) - x * m).abs())
}

fn ode_check() -> Result<Check> {
    let cfg = SeriesConfig::default();
    let mut worst: f64 = 0.0;
    for x in [-8.0, -5.0, -2.0, -1.0, 0.0, 1.0, 2.0, 5.0, 8.0] {
        worst = worst.max(ode_residual(|t| Ok(airy_series(t, &cfg)?.0.value), x)?);
        worst = worst.max(ode_residual(|t| Ok(airy(t, &cfg)?.0.value), x)?);
        if x > 0.0 {
            worst = worst.max(ode_residual(|t| Ok(airy_bessel(t, &cfg)?.0.value), x)?);
        }
        if x >= ASYMPTOTIC_MIN {
            worst = worst.max(ode_residual(
                |t| Ok(airy_asymptotic_pos(t, &cfg)?.0.value),
                x,
            )?);
        }
        if x <= -ASYMPTOTIC_MIN {
            worst = worst.max(ode_residual(
                |t| Ok(airy_asymptotic_neg(-t, &cfg)?.value),
                x,
            )?);
        }
    }
    Ok(Check {
        name: "ode_residual",
        measured: format!("max={worst:.3e}"),
        limit: "<1e-6",
        pass: worst < 1e-6,
    })
}

fn wronskian_check() -> Result<Check> {
    let cfg = SeriesConfig::default();
    let mut worst: f64 = 0.0;
    for i in 0..=1200 {
        let (a, b) = airy(-6.0 + 0.01 * i as f64, &cfg)?;
        worst = worst.max((a.value * b.derivative - a.derivative * b.value - 1.0 / PI).abs());
    }
    Ok(Check {
        name: "wronskian",
        measured: format!("max_dev={worst:.3e}"),
        limit: "<1e-10",
        pass: worst < 1e-10,
    })
}

fn routes_check() -> Result<Check> {
    let cfg = SeriesConfig::default();
    let mut worst: f64 = 0.0;
    for i in 1..=600 {
        let x = 0.01 * i as f64;
        let (sa, sb) = airy_series(x, &cfg)?;
        let (ba, bb) = airy_bessel(x, &cfg)?;
        worst = worst
            .max((sa.value - ba.value).abs())
            .max((sb.value - bb.value).abs());
    }
    Ok(Check {
        name: "series_vs_bessel",
        measured: format!("max_diff={worst:.3e}"),
        limit: "<1e-11",
        pass: worst < 1e-11,
    })
}

fn switchover_check() -> Result<Check> {
    let cfg = SeriesConfig::default();
    let t = SWITCHOVER;
    let (sp, _) = airy_series(t, &cfg)?;
    let (ap, _) = airy_asymptotic_pos(t, &cfg)?;
    let (sn, snb) = airy_series(-t, &cfg)?;
    let an = airy_asymptotic_neg(t, &cfg)?;
    let anb = bi_asymptotic_neg(t, &cfg)?;
    let (_, bs) = airy_series(BI_SWITCHOVER, &cfg)?;
    let (_, ba) = airy_asymptotic_pos(BI_SWITCHOVER, &cfg)?;
    let jump = (sp.value - ap.value)
        .abs()
        .max((sn.value - an.value).abs())
        .max((snb.value - anb.value).abs())
        .max(((bs.value - ba.value) / ba.value).abs());
    Ok(Check {
        name: "switchover_continuity",
        measured: format!("max_jump={jump:.3e}"),
        limit: "<1e-10",
        pass: jump < 1e-10,
    })
}

fn one_percent_check() -> Result<Check> {
    let s = build_spectrum(100, DEFAULT_TOL)?;
    let worst = s.max_rel_error();
    Ok(Check {
        name: "closed_form_levels",
        measured: format!("n={} max_rel_error={}", worst.n, worst.rel_error),
        limit: "<0.01",
        pass: worst.rel_error < 0.01,
    })
}

fn scaling_check() -> Result<Check> {
    let s = build_spectrum(200, DEFAULT_TOL)?;
    let p = fit_scaling_exponent(&s, 10, 200)?;
    Ok(Check {
        name: "scaling_exponent",
        measured: format!("exponent={p:.6} n=10..200"),
        limit: "0.667±0.01",
        pass: (p - 0.667).abs() <= 0.01,
    })
}

fn fd_oracle_check() -> Result<Check> {
    let coarse = solve_fd(10, 2000, 20.0)?;
    let fine = solve_fd(10, 4000, 20.0)?;
    let mut worst: f64 = 0.0;
    for n in 1..=10 {
        let x = richardson(
            coarse.spacing(),
            coarse.eigenvalues[n - 1],
            fine.spacing(),
            fine.eigenvalues[n - 1],
        );
        worst = worst.max((x - lambda_exact(n, DEFAULT_TOL)?).abs());
    }
    Ok(Check {
        name: "fd_oracle",
        measured: format!("max_abs_diff={worst:.3e} n=1..10"),
        limit: "<1e-6",
        pass: worst < 1e-6,
    })
}

fn fd_order_check() -> Result<Check> {
    let study = convergence_study_on(1, &[1000, 2000, 4000], 20.0)?;
    Ok(Check {
        name: "fd_convergence",
        measured: format!("p={:.4}", study.order),
        limit: "2±0.2",
        pass: (study.order - 2.0).abs() <= 0.2,
    })
}

fn eigenstate_check() -> Result<Check> {
    let s = BouncerSystem::natural();
    let states = (1..=10)
        .map(|n| s.eigenstate(n))
        .collect::<Result<Vec<_>>>()?;
    let mut ortho: f64 = 0.0;
    let mut mean: f64 = 0.0;
    for a in &states {
        for b in &states[a.n - 1..] {
            let want = if a.n == b.n { 1.0 } else { 0.0 };
            ortho = ortho.max((s.overlap(a, b)? - want).abs());
        }
        let target = 2.0 / 3.0 * a.turning_point;
        mean = mean.max(((s.expectation_z(a)? - target) / target).abs());
    }
    Ok(Check {
        name: "eigenstates",
        measured: format!("orthonormality={ortho:.3e} mean_z_rel={mean:.3e}"),
        limit: "<1e-7,<1e-6",
        pass: ortho < 1e-7 && mean < 1e-6,
    })
}

type CheckFn = fn() -> Result<Check>;

/// Runs the checks for `level`. Numerical errors inside a check are
/// reported as a failing line rather than aborting the run.
pub fn run(level: Level) -> Vec<Check> {
    let mut suite: Vec<(&'static str, CheckFn)> = vec![
        ("ode_residual", ode_check),
        ("wronskian", wronskian_check),
        ("series_vs_bessel", routes_check),
        ("switchover_continuity", switchover_check),
        ("closed_form_levels", one_percent_check),
        ("scaling_exponent", scaling_check),
    ];
    if level == Level::Full {
        suite.extend([
            ("fd_oracle", fd_oracle_check as fn() -> Result<Check>),
            ("fd_convergence", fd_order_check),
            ("eigenstates", eigenstate_check),
        ]);
    }
    suite
        .into_iter()
        .map(|(name, f)| {
            f().unwrap_or_else(|e| Check {
                name,
                measured: format!("error=\"{e}\""),
                limit: "no error",
                pass: false,
            })
        })
        .collect()
}
