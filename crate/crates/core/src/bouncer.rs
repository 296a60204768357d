//! Physical units: length and energy scales, eigenstates and observables.

use core::f64::consts::PI;

use crate::airy::{ai, SeriesConfig};
use crate::error::{Error, Result};
use crate::quadrature::integrate;
use crate::spectrum::{lambda_asymptotic, lambda_exact, DEFAULT_TOL};

/// CODATA 2018 reduced Planck constant, J s.
pub const HBAR_CODATA: f64 = 1.054_571_817e-34;
/// Standard gravity, m/s^2.
pub const G_STANDARD: f64 = 9.806_65;
/// Mass of a cesium-133 atom, kg.
pub const CESIUM_MASS: f64 = 2.206_946_95e-25;

/// Absolute tolerance of the dimensionless normalization integrals.
pub const QUAD_TOL: f64 = 1e-10;
/// Ai(x)^2 is negligible past `x = ZCUT_MARGIN` beyond the turning point.
pub const ZCUT_MARGIN: f64 = 12.0;
/// Allowed relative gap between the quadrature and closed-form constants.
pub const NORM_CHECK_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BouncerSystem {
    mass: f64,
    g: f64,
    hbar: f64,
    z0: f64,
    e_scale: f64,
}

impl BouncerSystem {
    /// Derives `z0 = (hbar^2 / (2 m^2 g))^(1/3)` and `e_scale = m g z0`.
    pub fn new(mass: f64, g: f64, hbar: f64) -> Result<BouncerSystem> {
        for v in [mass, g, hbar] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Domain(
                    "mass, g and hbar must be positive and finite",
                ));
            }
        }
        // (hbar^2 / (2 m^2 g))^(1/3), factored to stay inside f64 range for SI inputs
        let z0 = libm::cbrt(hbar / mass) * libm::cbrt(hbar / mass) / libm::cbrt(2.0 * g);
        Ok(BouncerSystem {
            mass,
            g,
            hbar,
            z0,
            e_scale: mass * g * z0,
        })
    }

    /// Units in which `z0 = 1` and `e_scale = 1`: `m = g = 1`, `hbar = sqrt(2)`.
    pub fn natural() -> BouncerSystem {
        BouncerSystem::new(1.0, 1.0, core::f64::consts::SQRT_2).expect("natural units are valid")
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Characteristic length, m.
    pub fn z0(&self) -> f64 {
        self.z0
    }

    /// Energy unit `m g z0`, J.
    pub fn e_scale(&self) -> f64 {
        self.e_scale
    }

    /// `E_n = e_scale * lambda_n` with the exact zero.
    pub fn energy_exact(&self, n: usize) -> Result<f64> {
        Ok(self.e_scale * lambda_exact(n, DEFAULT_TOL)?)
    }

    /// `E_n = [9/8 pi^2 (n - 1/4)^2 m hbar^2 g^2]^(1/3)`.
    pub fn energy_asymptotic(&self, n: usize) -> Result<f64> {
        if n < 1 {
            return Err(Error::Domain("level index n must be at least 1"));
        }
        let k = n as f64 - 0.25;
        let mgh = self.mass * self.g * self.g * self.hbar;
        // m hbar^2 g^2 = (m g^2 hbar) * hbar, split for range
        Ok(libm::cbrt(9.0 / 8.0 * PI * PI * k * k) * libm::cbrt(mgh) * libm::cbrt(self.hbar))
    }

    /// Normalized eigenstate `phi_n(z) = s C_n Ai(z/z0 - lambda_n)`.
    pub fn eigenstate(&self, n: usize) -> Result<Eigenstate> {
        let lambda = lambda_exact(n, DEFAULT_TOL)?;
        let cfg = SeriesConfig::default();
        let slope = ai(-lambda, &cfg)?.derivative;
        // int_{-lambda}^{margin} Ai(x)^2 dx; the z-integral is z0 times this
        let q = integrate(
            |x| {
                let v = ai(x, &cfg)?.value;
                Ok(v * v)
            },
            -lambda,
            ZCUT_MARGIN,
            QUAD_TOL,
        )?;
        let norm_const = 1.0 / libm::sqrt(self.z0 * q.value);
        let closed = 1.0 / (libm::sqrt(self.z0) * libm::fabs(slope));
        if libm::fabs(norm_const - closed) > NORM_CHECK_TOL * closed {
            return Err(Error::QuadratureFailure {
                estimate: q.value,
                error: q.error,
            });
        }
        Ok(Eigenstate {
            n,
            lambda,
            energy: self.e_scale * lambda,
            turning_point: self.z0 * lambda,
            norm_const,
            phase: if slope < 0.0 { -1.0 } else { 1.0 },
        })
    }

    /// `phi_n(z)`; zero for `z < 0`.
    pub fn eval_wavefunction(&self, state: &Eigenstate, z: f64) -> Result<f64> {
        if !z.is_finite() {
            return Err(Error::Domain("z must be finite"));
        }
        if z < 0.0 {
            return Ok(0.0);
        }
        let v = ai(z / self.z0 - state.lambda, &SeriesConfig::default())?;
        Ok(state.phase * state.norm_const * v.value)
    }

    /// Upper end of the integration domain, `z0 (lambda_n + 12)`.
    pub fn z_cut(&self, state: &Eigenstate) -> f64 {
        self.z0 * (state.lambda + ZCUT_MARGIN)
    }

    /// `<z> = int z |phi_n|^2 dz`, m.
    pub fn expectation_z(&self, state: &Eigenstate) -> Result<f64> {
        let cfg = SeriesConfig::default();
        let lambda = state.lambda;
        let q = integrate(
            |x| {
                let v = ai(x, &cfg)?.value;
                Ok((x + lambda) * v * v)
            },
            -lambda,
            ZCUT_MARGIN,
            QUAD_TOL,
        )?;
        let c = state.norm_const;
        // z = z0 (x + lambda), dz = z0 dx
        Ok(c * c * self.z0 * self.z0 * q.value)
    }

    /// `<phi_a | phi_b>` by quadrature over `[0, z_cut]`.
    pub fn overlap(&self, a: &Eigenstate, b: &Eigenstate) -> Result<f64> {
        let cfg = SeriesConfig::default();
        let upper = a.lambda.max(b.lambda) + ZCUT_MARGIN;
        let q = integrate(
            |x| {
                let va = ai(x - a.lambda, &cfg)?.value;
                let vb = ai(x - b.lambda, &cfg)?.value;
                Ok(va * vb)
            },
            0.0,
            upper,
            QUAD_TOL,
        )?;
        Ok(a.phase * b.phase * a.norm_const * b.norm_const * self.z0 * q.value)
    }

    /// Classical turning point of the closed-form level, `z0 lambda_asym(n)`.
    pub fn turning_point_asymptotic(&self, n: usize) -> Result<f64> {
        Ok(self.z0 * lambda_asymptotic(n)?)
    }
}

/// The nth stationary state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenstate {
    pub n: usize,
    /// Dimensionless zero `lambda_n`.
    pub lambda: f64,
    /// J (or natural units).
    pub energy: f64,
    /// `z0 lambda_n`, m.
    pub turning_point: f64,
    /// `C_n > 0`, m^-1/2.
    pub norm_const: f64,
    /// `±1`, chosen so that `phi_n` rises from the floor.
    pub phase: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_units() {
        let s = BouncerSystem::natural();
        assert!((s.z0() - 1.0).abs() < 1e-15);
        assert!((s.e_scale() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn two_energy_scales_agree() {
        let s = BouncerSystem::new(CESIUM_MASS, G_STANDARD, HBAR_CODATA).unwrap();
        let alt = s.hbar() * s.hbar() / (2.0 * s.mass() * s.z0() * s.z0());
        assert!(((s.e_scale() - alt) / alt).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(BouncerSystem::new(-1.0, 1.0, 1.0).is_err());
        assert!(BouncerSystem::new(1.0, 0.0, 1.0).is_err());
        assert!(BouncerSystem::new(1.0, 1.0, f64::NAN).is_err());
        assert!(BouncerSystem::new(1.0, f64::INFINITY, 1.0).is_err());
    }

    #[test]
    fn wavefunction_is_zero_below_floor() {
        let s = BouncerSystem::natural();
        let st = s.eigenstate(1).unwrap();
        assert_eq!(s.eval_wavefunction(&st, -0.5).unwrap(), 0.0);
        assert!(s.eval_wavefunction(&st, f64::NAN).is_err());
    }

    #[test]
    fn phase_makes_slope_positive_at_floor() {
        let s = BouncerSystem::natural();
        for n in 1..=4 {
            let st = s.eigenstate(n).unwrap();
            let h = 1e-3;
            assert!(s.eval_wavefunction(&st, h).unwrap() > 0.0, "n={n}");
        }
    }
}
