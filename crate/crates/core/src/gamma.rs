//! Gamma function by the Lanczos approximation (g = 607/128, 15 terms).
//!
//! Relative error is below 2e-15 on [0.5, 50]. Arguments below 0.5 go through
//! the reflection formula.

use core::f64::consts::PI;

const LANCZOS_G: f64 = 607.0 / 128.0;

const LANCZOS_COEFFS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    3.399_464_998_481_189e-5,
    4.652_362_892_704_858e-5,
    -9.837_447_530_487_956e-5,
    1.580_887_032_249_125e-4,
    -2.102_644_417_241_048_8e-4,
    2.174_396_181_152_126_5e-4,
    -1.643_181_065_367_639e-4,
    8.441_822_398_385_275e-5,
    -2.619_083_840_158_140_8e-5,
    3.689_918_265_953_162_5e-6,
];

fn lanczos_sum(x: f64) -> f64 {
    LANCZOS_COEFFS[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS_COEFFS[0], |acc, (i, c)| {
            acc + c / (x + (i + 1) as f64)
        })
}

/// Gamma function for real `x`. Returns NaN at non-positive integers.
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        if x == libm::floor(x) {
            return f64::NAN;
        }
        return PI / (libm::sin(PI * x) * gamma(1.0 - x));
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    // split the power so that t^(z+1/2) does not overflow before exp(-t) pulls it back
    let half_pow = libm::pow(t, 0.5 * (z + 0.5));
    libm::sqrt(2.0 * PI) * half_pow * libm::exp(-t) * half_pow * lanczos_sum(z)
}

/// Natural log of |Gamma(x)| for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        return libm::log(PI / libm::fabs(libm::sin(PI * x))) - ln_gamma(1.0 - x);
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    0.5 * libm::log(2.0 * PI) + (z + 0.5) * libm::log(t) - t + libm::log(lanczos_sum(z))
}
