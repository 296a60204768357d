use core::f64::consts::{FRAC_1_SQRT_2, PI};

use super::{AiryValue, AsymptoticTruncation, Route, SeriesConfig, ASYMPTOTIC_MIN};
use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::gamma::{gamma, ln_gamma};

/// `c_k = Gamma(3k + 1/2) / (54^k k! Gamma(k + 1/2))`.
pub fn asymptotic_coefficient(k: usize) -> f64 {
    let kf = k as f64;
    if 3.0 * kf + 0.5 < 170.0 {
        gamma(3.0 * kf + 0.5) / (libm::pow(54.0, kf) * gamma(kf + 1.0) * gamma(kf + 0.5))
    } else {
        libm::exp(
            ln_gamma(3.0 * kf + 0.5)
                - kf * libm::log(54.0)
                - ln_gamma(kf + 1.0)
                - ln_gamma(kf + 0.5),
        )
    }
}

/// `c_k / c_{k-1}`, the Gamma ratio above reduced with `Gamma(z+1) = z Gamma(z)`.
#[inline]
fn coefficient_ratio(k: usize) -> f64 {
    let k = k as f64;
    (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / (216.0 * k * (2.0 * k - 1.0))
}

/// Walk the terms `c_m zeta^-m` kept under the configured truncation and
/// call `visit(m, magnitude)` for each. Returns the magnitude of the first
/// omitted term.
fn for_each_term(zeta: f64, cfg: &SeriesConfig, mut visit: impl FnMut(usize, f64)) -> Result<f64> {
    let mut coeff = 1.0;
    let mut prev = f64::INFINITY;
    for m in 0.. {
        if m > 0 {
            coeff *= coefficient_ratio(m);
        }
        let mag = coeff * libm::pow(zeta, -(m as f64));
        let stop = match cfg.asym_truncation() {
            AsymptoticTruncation::FixedK(k) => m >= k,
            AsymptoticTruncation::OptimalTruncation => mag > prev || prev < cfg.abs_tol(),
        };
        if stop {
            return Ok(mag);
        }
        if m >= cfg.max_terms() {
            break;
        }
        visit(m, mag);
        prev = mag;
    }
    Err(Error::NonConvergence {
        series: "asymptotic expansion",
        terms: cfg.max_terms(),
    })
}

/// `zeta = 2/3 x^(3/2)` in double-double.
fn zeta_dd(x: f64) -> Dd {
    (Dd::sqrt_f64(x) * Dd::new(x)).mul_f64(2.0).div_f64(3.0)
}

fn check_domain(x: f64) -> Result<()> {
    if !x.is_finite() || x < ASYMPTOTIC_MIN {
        return Err(Error::Domain("asymptotic route needs |xi| >= 4.5"));
    }
    Ok(())
}

/// Ai and Bi for large positive `xi`:
/// `Ai ~ 1/2 pi^-1/2 xi^-1/4 exp(-zeta) sum (-1)^k c_k zeta^-k`,
/// `Bi ~ pi^-1/2 xi^-1/4 exp(+zeta) sum c_k zeta^-k`.
///
/// Derivatives come from differentiating every kept term.
pub fn airy_asymptotic_pos(xi: f64, cfg: &SeriesConfig) -> Result<(AiryValue, AiryValue)> {
    check_domain(xi)?;
    let zeta = zeta_dd(xi).to_f64();
    let root = libm::sqrt(xi);
    let base = -0.25 / xi;

    let (mut s_alt, mut s_all, mut d_alt, mut d_all) = (0.0, 0.0, 0.0, 0.0);
    let omitted = for_each_term(zeta, cfg, |k, mag| {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let shift = k as f64 * root / zeta;
        s_alt += sign * mag;
        s_all += mag;
        d_alt += sign * mag * (base - root - shift);
        d_all += mag * (base + root - shift);
    })?;

    let amp = 1.0 / (libm::sqrt(PI) * libm::sqrt(root));
    let decay = libm::exp(-zeta);
    let grow = libm::exp(zeta);

    let ai = 0.5 * amp * decay * s_alt;
    let dai = 0.5 * amp * decay * d_alt;
    // growing exponential: Bi is the non-normalizable solution
    let bi = amp * grow * s_all;
    let dbi = amp * grow * d_all;

    let ai_err = 0.5 * amp * decay * omitted + 8.0 * f64::EPSILON * ai.abs();
    // all terms share a sign, so the tail is not bounded by its first term;
    // in the overlap band it runs up to about 1.2x
    let bi_err = 2.0 * amp * grow * omitted + 8.0 * f64::EPSILON * bi.abs();
    Ok((
        AiryValue::new(ai, dai, Route::AsymptoticPos, ai_err),
        AiryValue::new(bi, dbi, Route::AsymptoticPos, bi_err),
    ))
}

struct Oscillatory {
    amp: f64,
    sin: f64,
    cos: f64,
    root: f64,
    /// even-index sum and its termwise d/dx companion
    p: f64,
    p1: f64,
    /// odd-index sum and companion
    q: f64,
    q1: f64,
    omitted: f64,
}

/// Shared pieces of the negative-axis expansion at `xi = -x`, with
/// `theta = zeta + pi/4`.
fn oscillatory(x: f64, cfg: &SeriesConfig) -> Result<Oscillatory> {
    check_domain(x)?;
    let z = zeta_dd(x);
    let zeta = z.to_f64();
    let root = libm::sqrt(x);
    let base = -0.25 / x;

    let (mut p, mut p1, mut q, mut q1) = (0.0, 0.0, 0.0, 0.0);
    let omitted = for_each_term(zeta, cfg, |m, mag| {
        let sign = if (m / 2) % 2 == 0 { 1.0 } else { -1.0 };
        let w = base - m as f64 * root / zeta;
        if m % 2 == 0 {
            p += sign * mag;
            p1 += sign * mag * w;
        } else {
            q += sign * mag;
            q1 += sign * mag * w;
        }
    })?;

    // sin/cos of zeta_hi + zeta_lo, then rotate by pi/4 without rounding the sum
    let (sh, ch) = (libm::sin(z.hi), libm::cos(z.hi));
    let sin_z = sh + z.lo * ch;
    let cos_z = ch - z.lo * sh;
    Ok(Oscillatory {
        amp: 1.0 / (libm::sqrt(PI) * libm::sqrt(root)),
        sin: FRAC_1_SQRT_2 * (sin_z + cos_z),
        cos: FRAC_1_SQRT_2 * (cos_z - sin_z),
        root,
        p,
        p1,
        q,
        q1,
        omitted,
    })
}

/// `Ai(-x)` for large positive `x`:
/// `pi^-1/2 x^-1/4 [sin(theta) P - cos(theta) Q]`, `theta = zeta + pi/4`,
/// with `P = sum (-1)^k c_2k zeta^-2k` and `Q = sum (-1)^k c_{2k+1} zeta^-(2k+1)`.
///
/// The returned derivative is `dAi/dxi` at `xi = -x`.
pub fn airy_asymptotic_neg(x: f64, cfg: &SeriesConfig) -> Result<AiryValue> {
    let o = oscillatory(x, cfg)?;
    // the cosine sum enters with a minus sign; a plus sign disagrees with the
    // power series on the overlap band at the 1e-2 level
    let value = o.amp * (o.sin * o.p - o.cos * o.q);
    let d_dx =
        o.amp * ((o.sin * o.p1 + o.root * o.cos * o.p) - (o.cos * o.q1 - o.root * o.sin * o.q));
    let est = o.amp * o.omitted + 8.0 * f64::EPSILON * o.amp * (o.p.abs() + o.q.abs());
    Ok(AiryValue::new(value, -d_dx, Route::AsymptoticNeg, est))
}

/// `Bi(-x)` for large positive `x`: `pi^-1/2 x^-1/4 [cos(theta) P + sin(theta) Q]`.
pub fn bi_asymptotic_neg(x: f64, cfg: &SeriesConfig) -> Result<AiryValue> {
    let o = oscillatory(x, cfg)?;
    let value = o.amp * (o.cos * o.p + o.sin * o.q);
    let d_dx =
        o.amp * ((o.cos * o.p1 - o.root * o.sin * o.p) + (o.sin * o.q1 + o.root * o.cos * o.q));
    let est = o.amp * o.omitted + 8.0 * f64::EPSILON * o.amp * (o.p.abs() + o.q.abs());
    Ok(AiryValue::new(value, -d_dx, Route::AsymptoticNeg, est))
}
