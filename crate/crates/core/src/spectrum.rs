//! Zeros of `Ai(-lambda)`: exact by root finding, asymptotic by closed form.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::airy::{ai, SeriesConfig};
use crate::error::{Error, Result};

/// Default root tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Smallest tolerance accepted by [`lambda_exact`].
pub const MIN_TOL: f64 = 1e-14;

const MAX_ITERATIONS: usize = 100;

/// `[3 pi / 2 (n - 1/4)]^(2/3)`, the zeros of the leading-order sine.
pub fn lambda_asymptotic(n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain("level index n must be at least 1"));
    }
    Ok(libm::pow(1.5 * PI * (n as f64 - 0.25), 2.0 / 3.0))
}

/// `d lambda / dn` of the closed form, `pi / sqrt(lambda)`.
fn local_spacing(lambda: f64) -> f64 {
    PI / libm::sqrt(lambda)
}

/// A certified zero of `Ai(-lambda)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryZero {
    pub lambda: f64,
    /// `Ai(-a)` and `Ai(-b)` have opposite signs and `b - a < tol`.
    pub bracket: (f64, f64),
    pub iterations: usize,
}

/// `(Ai(-lambda), dAi(-lambda)/dlambda)` through the hybrid evaluator.
fn ai_neg(lambda: f64, cfg: &SeriesConfig) -> Result<(f64, f64)> {
    let v = ai(-lambda, cfg)?;
    Ok((v.value, -v.derivative))
}

/// The nth zero of `Ai(-lambda)` with its final bracket.
///
/// Starts from [`lambda_asymptotic`], brackets within ±0.4 (then ±0.5) of the
/// local spacing, and refines with Newton steps that fall back to bisection
/// whenever they leave the bracket.
///
/// `tol` is absolute. Where it is finer than the spacing of doubles near the
/// root (from about `lambda ~ 10` at `tol = 1e-14`, `lambda ~ 1000` at the
/// default) it is widened to eight ulps of `lambda`.
pub fn find_zero(n: usize, tol: f64) -> Result<AiryZero> {
    if !tol.is_finite() || tol < MIN_TOL {
        return Err(Error::Domain("root tolerance must be at least 1e-14"));
    }
    let cfg = SeriesConfig::default();
    let guess = lambda_asymptotic(n)?;
    let spacing = local_spacing(guess);
    let tol = tol.max(8.0 * f64::EPSILON * guess);

    let mut bracket = None;
    for width in [0.4, 0.5] {
        let a = (guess - width * spacing).max(0.0);
        let b = guess + width * spacing;
        let (fa, _) = ai_neg(a, &cfg)?;
        let (fb, _) = ai_neg(b, &cfg)?;
        if fa * fb < 0.0 {
            bracket = Some((a, fa, b));
            break;
        }
    }
    let (mut a, mut fa, mut b) = bracket.ok_or(Error::BracketFailure { n })?;

    let mut x = guess;
    for iteration in 1..=MAX_ITERATIONS {
        let (v, d) = ai_neg(x, &cfg)?;
        if (v < 0.0) == (fa < 0.0) && v != 0.0 {
            a = x;
            fa = v;
        } else {
            b = x;
        }
        if b - a < tol && v.abs() < tol * d.abs() {
            return Ok(AiryZero {
                lambda: x,
                bracket: (a, b),
                iterations: iteration,
            });
        }
        let step = -v / d;
        let mut next = x + step;
        if step.abs() < 0.25 * tol {
            // Newton has settled: probe just either side to certify the bracket
            for probe in [next - 0.45 * tol, next + 0.45 * tol] {
                if a < probe && probe < b {
                    let (fp, _) = ai_neg(probe, &cfg)?;
                    if (fp < 0.0) == (fa < 0.0) && fp != 0.0 {
                        a = probe;
                        fa = fp;
                    } else {
                        b = probe;
                    }
                }
            }
        }
        if !(a < next && next < b) {
            next = 0.5 * (a + b);
        }
        x = next;
    }
    Err(Error::MaxIterations {
        n,
        iterations: MAX_ITERATIONS,
    })
}

/// The nth positive root of `Ai(-lambda) = 0`.
pub fn lambda_exact(n: usize, tol: f64) -> Result<f64> {
    Ok(find_zero(n, tol)?.lambda)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub n: usize,
    pub lambda_exact: f64,
    pub lambda_asym: f64,
    /// `|lambda_asym - lambda_exact| / lambda_exact`
    pub rel_error: f64,
    /// Final root bracket, absent for spectra built from supplied values.
    pub bracket: Option<(f64, f64)>,
}

/// Levels `n = 1..=n_max` in order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    /// Wrap externally supplied exact values (level `i + 1` at index `i`).
    /// Values must be positive and strictly increasing.
    pub fn from_values(values: &[f64]) -> Result<Spectrum> {
        if values.is_empty() {
            return Err(Error::Domain("spectrum needs at least one level"));
        }
        if values.iter().any(|v| !v.is_finite() || *v <= 0.0) {
            return Err(Error::Domain("spectrum values must be positive and finite"));
        }
        if values.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Domain("spectrum values must increase strictly"));
        }
        let entries = values
            .iter()
            .enumerate()
            .map(|(i, &exact)| entry(i + 1, exact, None))
            .collect::<Result<Vec<_>>>()?;
        Ok(Spectrum { entries })
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn n_max(&self) -> usize {
        self.entries.len()
    }

    /// Entry for level `n` (1-based).
    pub fn get(&self, n: usize) -> Option<&SpectrumEntry> {
        n.checked_sub(1).and_then(|i| self.entries.get(i))
    }

    /// Entry with the largest `rel_error`.
    pub fn max_rel_error(&self) -> &SpectrumEntry {
        self.entries
            .iter()
            .max_by(|a, b| a.rel_error.total_cmp(&b.rel_error))
            .expect("spectrum is never empty")
    }
}

fn entry(n: usize, exact: f64, bracket: Option<(f64, f64)>) -> Result<SpectrumEntry> {
    let asym = lambda_asymptotic(n)?;
    Ok(SpectrumEntry {
        n,
        lambda_exact: exact,
        lambda_asym: asym,
        rel_error: libm::fabs(asym - exact) / exact,
        bracket,
    })
}

/// Exact and asymptotic zeros for `n = 1..=n_max`.
///
/// Each exact zero must sit strictly between the consecutive leading-order
/// sine zeros `lambda_asymptotic(n)` and `lambda_asymptotic(n + 1)`; a
/// violation is reported as a bracket failure for that `n`.
pub fn build_spectrum(n_max: usize, tol: f64) -> Result<Spectrum> {
    if n_max < 1 {
        return Err(Error::Domain("n_max must be at least 1"));
    }
    let mut entries = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let zero = find_zero(n, tol)?;
        let e = entry(n, zero.lambda, Some(zero.bracket))?;
        let upper = lambda_asymptotic(n + 1)?;
        if !(e.lambda_asym < e.lambda_exact && e.lambda_exact < upper) {
            return Err(Error::BracketFailure { n });
        }
        entries.push(e);
    }
    Ok(Spectrum { entries })
}

/// Least-squares slope of `log y` against `log x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Result<f64> {
    if points.len() < 2 {
        return Err(Error::Domain("slope fit needs at least two points"));
    }
    if points.iter().any(|&(x, y)| !(x > 0.0 && y > 0.0)) {
        return Err(Error::Domain("log-log fit needs positive data"));
    }
    let m = points.len() as f64;
    let (sx, sy) = points.iter().fold((0.0, 0.0), |(sx, sy), &(x, y)| {
        (sx + libm::log(x), sy + libm::log(y))
    });
    let (mx, my) = (sx / m, sy / m);
    let (sxy, sxx) = points.iter().fold((0.0, 0.0), |(sxy, sxx), &(x, y)| {
        let dx = libm::log(x) - mx;
        (sxy + dx * (libm::log(y) - my), sxx + dx * dx)
    });
    if sxx == 0.0 {
        return Err(Error::Domain("slope fit needs distinct abscissae"));
    }
    Ok(sxy / sxx)
}

/// Slope of `log lambda_exact` against `log n` over `n_lo..=n_hi`.
pub fn fit_scaling_exponent(spec: &Spectrum, n_lo: usize, n_hi: usize) -> Result<f64> {
    if n_lo < 1 || n_hi > spec.n_max() || n_hi < n_lo + 10 {
        return Err(Error::Domain(
            "scaling fit needs 1 <= n_lo, n_hi <= n_max and n_hi - n_lo >= 10",
        ));
    }
    let points: Vec<(f64, f64)> = spec.entries[n_lo - 1..n_hi]
        .iter()
        .map(|e| (e.n as f64, e.lambda_exact))
        .collect();
    loglog_slope(&points)
}
