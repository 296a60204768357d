use super::{AiryValue, Route, SeriesConfig};
use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::gamma::gamma;

/// Relative accuracy assumed for the Lanczos Gamma values.
const GAMMA_REL_ERR: f64 = 2e-15;

/// Modified Bessel function of the first kind,
/// `I_p(x) = (x/2)^p sum_s (x^2/4)^s / (s! Gamma(s + p + 1))`, for `p > -1`
/// and `x >= 0`.
pub fn bessel_i(p: f64, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    if !p.is_finite() || p <= -1.0 {
        return Err(Error::Domain("bessel_i order must exceed -1"));
    }
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain("bessel_i argument must be non-negative"));
    }
    if x == 0.0 {
        return Ok(if p == 0.0 { 1.0 } else { 0.0 });
    }
    let q = 0.25 * x * x;
    let mut term = 1.0 / gamma(p + 1.0);
    let mut sum = term;
    for s in 1..cfg.max_terms() {
        let s = s as f64;
        term *= q / (s * (s + p));
        sum += term;
        if term.abs() < cfg.abs_tol() * sum.abs() {
            return Ok(libm::pow(0.5 * x, p) * sum);
        }
    }
    Err(Error::NonConvergence {
        series: "bessel I",
        terms: cfg.max_terms(),
    })
}

struct ScaledSum {
    value: Dd,
    /// sum of `3s t_s`; divide by xi for d/dxi
    weighted: Dd,
    last_term: f64,
}

/// `sum_s t_s` with `t_s = q^s Gamma(p+1) / (s! Gamma(s+p+1))`, `q = xi^3/9`
/// and `p = p_times_3 / 3`. The Gamma ratio is built from
/// `Gamma(s+p+1) = (s+p) Gamma(s+p)`, i.e. a factor `3 / (s (3s + p_times_3))`.
fn scaled_i_sum(p_times_3: i32, xi: f64, cfg: &SeriesConfig) -> Result<ScaledSum> {
    let x = Dd::new(xi);
    let q3 = (x * x * x).div_f64(3.0);
    let mut term = Dd::ONE;
    let mut value = term;
    let mut weighted = Dd::ZERO;
    for s in 1..cfg.max_terms() as i32 {
        term = (q3 * term).div_f64((s * (3 * s + p_times_3)) as f64);
        value = value + term;
        weighted = weighted + term.mul_f64((3 * s) as f64);
        let mag = term.hi.abs() * (3 * s) as f64;
        if !mag.is_finite() {
            break;
        }
        if mag < cfg.abs_tol() {
            return Ok(ScaledSum {
                value,
                weighted,
                last_term: mag,
            });
        }
    }
    Err(Error::NonConvergence {
        series: "bessel I",
        terms: cfg.max_terms(),
    })
}

/// Ai and Bi on the positive axis from `I_{-1/3}` and `I_{1/3}` at
/// `zeta = 2/3 xi^(3/2)`:
/// `Ai = sqrt(xi)/3 (I_{-1/3} - I_{1/3})`, `Bi = sqrt(xi/3) (I_{-1/3} + I_{1/3})`.
///
/// Note the `sqrt(3)` between the two prefactors; with a common `sqrt(xi)/3`
/// the result fails the Wronskian and disagrees with the series.
///
/// The prefactors `sqrt(xi) (zeta/2)^(-1/3) = 3^(1/3)` and
/// `sqrt(xi) (zeta/2)^(1/3) = 3^(-1/3) xi` are applied in closed form and the
/// two series are summed in double-double.
pub fn airy_bessel(xi: f64, cfg: &SeriesConfig) -> Result<(AiryValue, AiryValue)> {
    if !xi.is_finite() || xi <= 0.0 {
        return Err(Error::Domain("Bessel route needs xi > 0"));
    }
    let minus = scaled_i_sum(-1, xi, cfg)?;
    let plus = scaled_i_sum(1, xi, cfg)?;

    let a = libm::cbrt(3.0) / gamma(2.0 / 3.0);
    let b = 1.0 / (libm::cbrt(3.0) * gamma(4.0 / 3.0));

    // sqrt(xi)/3 * I_{-1/3} and sqrt(xi)/3 * I_{1/3}
    let im = minus.value.mul_f64(a).div_f64(3.0);
    let ip = (plus.value * Dd::new(xi)).mul_f64(b).div_f64(3.0);
    // derivatives of the two pieces
    let dim = minus.weighted.mul_f64(a).div_f64(3.0 * xi);
    let dip = (plus.value + plus.weighted).mul_f64(b).div_f64(3.0);

    let ai = (im - ip).to_f64();
    let sqrt3 = Dd::sqrt_f64(3.0);
    let bi = ((im + ip) * sqrt3).to_f64();
    let dai = (dim - dip).to_f64();
    let dbi = ((dim + dip) * sqrt3).to_f64();

    let scale = im.abs().hi + ip.abs().hi;
    let truncation = (a * minus.last_term + b * xi * plus.last_term) * 2.0;
    let ai_err = GAMMA_REL_ERR * scale + truncation + 4.0 * f64::EPSILON * ai.abs();
    let bi_err = (GAMMA_REL_ERR * scale + truncation) * sqrt3.hi + 4.0 * f64::EPSILON * bi.abs();

    Ok((
        AiryValue::new(ai, dai, Route::Bessel, ai_err),
        AiryValue::new(bi, dbi, Route::Bessel, bi_err),
    ))
}
