//! Independent Airy oracle for tests: the integral representations
//!
//!   Ai(x) = 1/pi int_0^inf cos(t^3/3 + x t) dt,
//!   Bi(x) = 1/pi int_0^inf [exp(-t^3/3 + x t) + sin(t^3/3 + x t)] dt,
//!
//! with the oscillatory parts moved onto complex contours through the
//! saddle points, where the integrand decays instead of oscillating. The
//! contour integrals use composite 20-point Gauss–Legendre panels with nodes
//! computed here, so nothing is shared with the library's quadrature or
//! series code.

#![allow(dead_code)]

use num_complex::Complex64 as C;
use std::f64::consts::PI;
use std::sync::OnceLock;

const GL_ORDER: usize = 20;

fn gauss_legendre() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GL_ORDER;
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-17 {
                    break;
                }
            }
            nodes.push(x);
            weights.push(2.0 / ((1.0 - x * x) * dp * dp));
        }
        (nodes, weights)
    })
}

fn panel<F: Fn(f64) -> C>(f: &F, a: f64, b: f64) -> C {
    let (nodes, weights) = gauss_legendre();
    let (c, h) = (0.5 * (a + b), 0.5 * (b - a));
    nodes
        .iter()
        .zip(weights)
        .map(|(x, w)| f(c + h * x) * *w)
        .sum::<C>()
        * h
}

/// Composite Gauss–Legendre integral of a complex-valued `f` over `[a, b]`.
/// The contour integrands are entire and decay fast, so a fixed fine
/// partition is accurate to rounding.
pub fn integrate_c<F: Fn(f64) -> C>(f: F, a: f64, b: f64) -> C {
    let pieces = 160;
    let h = (b - a) / pieces as f64;
    (0..pieces)
        .map(|i| panel(&f, a + i as f64 * h, a + (i + 1) as f64 * h))
        .sum()
}

const RAY_LENGTH: f64 = 10.0;

/// `int e^{i phi(t)} t^power dt` along `t = t0 + r dir`, `r` in `[0, len]`,
/// with `phi(t) = t^3/3 + x t` expanded about `t0` so the large parts of the
/// phase never cancel in floating point.
fn leg(x: f64, t0: C, dir: C, len: f64, power: i32) -> C {
    let i = C::i();
    let phi0 = t0 * t0 * t0 / 3.0 + t0 * x;
    let d1 = t0 * t0 + x;
    let d2 = t0;
    let f = |r: f64| {
        let w = dir * r;
        let phase = phi0 + d1 * w + d2 * w * w + w * w * w / 3.0;
        let t = t0 + w;
        (i * phase).exp() * t.powi(power) * dir
    };
    integrate_c(f, 0.0, len)
}

/// `int_C e^{i phi(t)} t^power dt` over a contour from `inf e^{5 i pi/6}` to
/// `inf e^{i pi/6}` passing through the saddle points.
fn full_contour(x: f64, power: i32) -> C {
    let e = |a: f64| C::from_polar(1.0, a);
    if x >= 0.0 {
        let t0 = C::new(0.0, x.sqrt());
        leg(x, t0, e(PI / 6.0), RAY_LENGTH, power)
            - leg(x, t0, e(5.0 * PI / 6.0), RAY_LENGTH, power)
    } else {
        let b = (-x).sqrt();
        let right = leg(x, C::new(b, 0.0), e(PI / 4.0), RAY_LENGTH, power);
        let left = leg(x, C::new(-b, 0.0), e(3.0 * PI / 4.0), RAY_LENGTH, power);
        let middle = leg(x, C::new(-b, 0.0), C::new(1.0, 0.0), 2.0 * b, power);
        right + middle - left
    }
}

/// `int_0^{inf e^{i pi/6}} e^{i phi(t)} t^power dt`.
fn half_contour(x: f64, power: i32) -> C {
    let e = |a: f64| C::from_polar(1.0, a);
    if x >= 0.0 {
        leg(x, C::new(0.0, 0.0), e(PI / 6.0), RAY_LENGTH, power)
    } else {
        let b = (-x).sqrt();
        leg(x, C::new(0.0, 0.0), C::new(1.0, 0.0), b, power)
            + leg(x, C::new(b, 0.0), e(PI / 4.0), RAY_LENGTH, power)
    }
}

/// `int_0^inf t^power exp(-t^3/3 + x t) dt`
fn growing_part(x: f64, power: i32) -> f64 {
    let upper = 2.0 * x.max(0.0).sqrt() + RAY_LENGTH;
    let f = |t: f64| C::new(t.powi(power) * (-t * t * t / 3.0 + x * t).exp(), 0.0);
    integrate_c(f, 0.0, upper).re
}

#[derive(Debug, Clone, Copy)]
pub struct OracleAiry {
    pub ai: f64,
    pub dai: f64,
    pub bi: f64,
    pub dbi: f64,
}

pub fn airy_oracle(x: f64) -> OracleAiry {
    let ai = full_contour(x, 0).re / (2.0 * PI);
    let dai = (C::i() * full_contour(x, 1)).re / (2.0 * PI);
    let bi = (growing_part(x, 0) + half_contour(x, 0).im) / PI;
    let dbi = (growing_part(x, 1) + half_contour(x, 1).re) / PI;
    OracleAiry { ai, dai, bi, dbi }
}

pub fn ai_oracle(x: f64) -> f64 {
    full_contour(x, 0).re / (2.0 * PI)
}

/// `int_{-lambda}^{inf} Ai(x)^2 dx` would need the evaluator; the tests use
/// this helper only with oracle values on a plain grid.
pub fn relative(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}
