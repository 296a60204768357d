use alloc::vec::Vec;

use super::{AiryConstants, AiryValue, Route, SeriesConfig};
use crate::dd::Dd;
use crate::error::{Error, Result};

/// The two auxiliary Maclaurin series.
///
/// `f(xi) = sum_k 3^k (1/3)_k xi^(3k) / (3k)!` and
/// `g(xi) = sum_k 3^k (2/3)_k xi^(3k+1) / (3k+1)!`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesFamily {
    F,
    G,
}

impl SeriesFamily {
    /// Power offset: terms carry `xi^(3k + offset)`.
    fn offset(self) -> u32 {
        match self {
            SeriesFamily::F => 0,
            SeriesFamily::G => 1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            SeriesFamily::F => "series f",
            SeriesFamily::G => "series g",
        }
    }

    /// `3 alpha + 3k - 2`, the kth factor of `3^k (alpha + 1/3)_k` with
    /// `alpha = 0` for f and `alpha = 1/3` for g.
    fn pochhammer_factor(self, k: u32) -> f64 {
        (self.offset() + 3 * k) as f64 - 2.0
    }
}

pub(super) struct SeriesSum {
    pub value: Dd,
    pub derivative: Dd,
    /// Magnitude of the last term added to either sum.
    pub last_term: f64,
}

pub(super) fn sum_series(family: SeriesFamily, xi: f64, cfg: &SeriesConfig) -> Result<SeriesSum> {
    let m = family.offset();
    let x = Dd::new(xi);
    let x3 = x * x * x;

    let mut term = if m == 0 { Dd::ONE } else { x };
    let mut value = term;
    // derivative terms are P_k xi^(3k+m-1) / (3k+m-1)!; for f the k=0 term vanishes
    let mut dterm = if m == 0 { Dd::ZERO } else { Dd::ONE };
    let mut derivative = dterm;

    for k in 1..cfg.max_terms() as u32 {
        let n = (3 * k + m) as f64;
        let poch = family.pochhammer_factor(k);
        term = (x3 * term).mul_f64(poch).div_f64((n - 2.0) * (n - 1.0) * n);
        dterm = if m == 0 && k == 1 {
            (x * x).div_f64(2.0)
        } else {
            (x3 * dterm)
                .mul_f64(poch)
                .div_f64((n - 3.0) * (n - 2.0) * (n - 1.0))
        };
        value = value + term;
        derivative = derivative + dterm;
        let last_term = term.hi.abs().max(dterm.hi.abs());
        if !last_term.is_finite() {
            break;
        }
        if last_term < cfg.abs_tol() {
            return Ok(SeriesSum {
                value,
                derivative,
                last_term,
            });
        }
    }
    Err(Error::NonConvergence {
        series: family.name(),
        terms: cfg.max_terms(),
    })
}

/// Partial sum of `f(xi)`.
pub fn series_f(xi: f64, cfg: &SeriesConfig) -> Result<f64> {
    Ok(sum_series(SeriesFamily::F, xi, cfg)?.value.to_f64())
}

/// Partial sum of `g(xi)`.
pub fn series_g(xi: f64, cfg: &SeriesConfig) -> Result<f64> {
    Ok(sum_series(SeriesFamily::G, xi, cfg)?.value.to_f64())
}

/// First `count` terms of a family as `(power of xi, coefficient)`.
pub fn series_coefficients(family: SeriesFamily, count: usize) -> Vec<(u32, f64)> {
    let m = family.offset();
    let mut coeff = 1.0;
    (0..count as u32)
        .map(|k| {
            let n = 3 * k + m;
            if k > 0 {
                let n = n as f64;
                coeff *= family.pochhammer_factor(k) / ((n - 2.0) * (n - 1.0) * n);
            }
            (n, coeff)
        })
        .collect()
}

/// Ai and Bi from `c1 f - c2 g` and `sqrt(3) (c1 f + c2 g)`.
pub fn airy_series(xi: f64, cfg: &SeriesConfig) -> Result<(AiryValue, AiryValue)> {
    if !xi.is_finite() {
        return Err(Error::Domain("airy argument must be finite"));
    }
    let f = sum_series(SeriesFamily::F, xi, cfg)?;
    let g = sum_series(SeriesFamily::G, xi, cfg)?;
    let AiryConstants { c1, c2 } = AiryConstants::STORED;
    let sqrt3 = Dd::sqrt_f64(3.0);

    let cf = f.value.mul_f64(c1);
    let cg = g.value.mul_f64(c2);
    let cdf = f.derivative.mul_f64(c1);
    let cdg = g.derivative.mul_f64(c2);

    let ai = (cf - cg).to_f64();
    let dai = (cdf - cdg).to_f64();
    let bi = (sqrt3 * (cf + cg)).to_f64();
    let dbi = (sqrt3 * (cdf + cdg)).to_f64();

    let constant_err = AiryConstants::UNCERTAINTY * (f.value.abs().hi + g.value.abs().hi);
    let truncation_err = (c1 * f.last_term + c2 * g.last_term) * 2.0;
    let ai_err = constant_err + truncation_err + 4.0 * f64::EPSILON * ai.abs();
    let bi_err = sqrt3.hi * (constant_err + truncation_err) + 4.0 * f64::EPSILON * bi.abs();

    Ok((
        AiryValue::new(ai, dai, Route::Series, ai_err),
        AiryValue::new(bi, dbi, Route::Series, bi_err),
    ))
}
