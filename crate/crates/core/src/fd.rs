//! Finite-difference eigensolver for `-u'' + x u = lambda u` on `[0, L]`
//! with `u(0) = u(L) = 0`.
//!
//! Shares no code with the Airy evaluators: second-order central
//! differences, Sturm bisection for the lowest eigenvalues and inverse
//! iteration for their vectors.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::spectrum::lambda_asymptotic;
use crate::tridiag::{residual_inf, SymTridiagonal};

/// Grid intervals required per requested level.
pub const POINTS_PER_LEVEL: usize = 50;
/// `L` must exceed `lambda_asym(n_levels)` by this much.
pub const MIN_DOMAIN_MARGIN: f64 = 6.0;
/// Default margin: `L = lambda_asym(n_levels) + 12`.
pub const DEFAULT_DOMAIN_MARGIN: f64 = 12.0;

/// Default truncated domain for the lowest `n_levels` states.
pub fn default_domain_length(n_levels: usize) -> Result<f64> {
    Ok(lambda_asymptotic(n_levels)? + DEFAULT_DOMAIN_MARGIN)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridEigenSolution {
    /// Number of intervals; the unknowns sit at `x_i = i h`, `i = 1..grid_n-1`.
    pub grid_n: usize,
    pub domain_length: f64,
    pub eigenvalues: Vec<f64>,
    /// Unit Euclidean norm, first significant entry positive.
    pub eigenvectors: Vec<Vec<f64>>,
    /// Largest `|(A v - lambda v)_i|` over all returned pairs.
    pub max_residual: f64,
}

impl GridEigenSolution {
    pub fn spacing(&self) -> f64 {
        self.domain_length / self.grid_n as f64
    }

    /// Interior abscissae.
    pub fn abscissae(&self) -> Vec<f64> {
        let h = self.spacing();
        (1..self.grid_n).map(|i| i as f64 * h).collect()
    }
}

fn solve_with_potential(
    potential: impl Fn(f64) -> f64,
    n_levels: usize,
    grid_n: usize,
    domain_length: f64,
) -> Result<GridEigenSolution> {
    let h = domain_length / grid_n as f64;
    let inv_h2 = 1.0 / (h * h);
    let diag: Vec<f64> = (1..grid_n)
        .map(|i| 2.0 * inv_h2 + potential(i as f64 * h))
        .collect();
    let off = alloc::vec![-inv_h2; grid_n - 2];
    let t = SymTridiagonal::new(diag, off)?;

    let eigenvalues = (0..n_levels)
        .map(|k| t.eigenvalue(k))
        .collect::<Result<Vec<f64>>>()?;
    if eigenvalues.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::ConvergenceFailure("Sturm bisection"));
    }
    let eigenvectors = eigenvalues
        .iter()
        .map(|&l| t.eigenvector(l))
        .collect::<Result<Vec<_>>>()?;
    let max_residual = eigenvalues
        .iter()
        .zip(&eigenvectors)
        .fold(0.0f64, |m, (&l, v)| m.max(residual_inf(&t, v, l)));
    Ok(GridEigenSolution {
        grid_n,
        domain_length,
        eigenvalues,
        eigenvectors,
        max_residual,
    })
}

fn check_grid(n_levels: usize, grid_n: usize, domain_length: f64) -> Result<()> {
    if n_levels < 1 {
        return Err(Error::Domain("need at least one level"));
    }
    if grid_n < POINTS_PER_LEVEL * n_levels {
        return Err(Error::Domain(
            "grid_n must be at least 50 per requested level",
        ));
    }
    if !(domain_length > 0.0 && domain_length.is_finite()) {
        return Err(Error::Domain("domain length must be positive and finite"));
    }
    Ok(())
}

/// Lowest `n_levels` eigenpairs of the bouncer problem in dimensionless form.
pub fn solve_fd(n_levels: usize, grid_n: usize, domain_length: f64) -> Result<GridEigenSolution> {
    check_grid(n_levels, grid_n, domain_length)?;
    if domain_length <= lambda_asymptotic(n_levels)? + MIN_DOMAIN_MARGIN {
        return Err(Error::Domain(
            "domain must extend 6 units past the highest turning point",
        ));
    }
    solve_with_potential(|x| x, n_levels, grid_n, domain_length)
}

/// Lowest `n_levels` eigenpairs of `-u'' = lambda u` on `[0, L]`; the
/// continuum answer is `(k pi / L)^2`.
pub fn solve_square_well(
    n_levels: usize,
    grid_n: usize,
    domain_length: f64,
) -> Result<GridEigenSolution> {
    check_grid(n_levels, grid_n, domain_length)?;
    solve_with_potential(|_| 0.0, n_levels, grid_n, domain_length)
}

/// Richardson extrapolation for an `O(h^2)` quantity computed at spacings
/// `h_coarse > h_fine`.
pub fn richardson(h_coarse: f64, coarse: f64, h_fine: f64, fine: f64) -> f64 {
    let (c2, f2) = (h_coarse * h_coarse, h_fine * h_fine);
    (c2 * fine - f2 * coarse) / (c2 - f2)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceStudy {
    /// `(h, lambda_n(h))`, coarsest first.
    pub points: Vec<(f64, f64)>,
    /// Observed order from the three finest grids.
    pub order: f64,
    /// Richardson value from the two finest grids.
    pub extrapolated: f64,
}

/// Eigenvalue `n` on several grids and the observed convergence order,
/// on the default domain for that level.
pub fn convergence_study(n: usize, grids: &[usize]) -> Result<ConvergenceStudy> {
    convergence_study_on(n, grids, default_domain_length(n)?)
}

pub fn convergence_study_on(
    n: usize,
    grids: &[usize],
    domain_length: f64,
) -> Result<ConvergenceStudy> {
    if grids.len() < 3 {
        return Err(Error::Domain(
            "convergence study needs at least three grids",
        ));
    }
    let mut sorted = grids.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Domain("convergence study grids must be distinct"));
    }
    let points = sorted
        .iter()
        .map(|&g| {
            let sol = solve_fd(n, g, domain_length)?;
            Ok((sol.spacing(), sol.eigenvalues[n - 1]))
        })
        .collect::<Result<Vec<_>>>()?;
    let k = points.len();
    let (h1, l1) = points[k - 3];
    let (h2, l2) = points[k - 2];
    let (h3, l3) = points[k - 1];
    let order = observed_order((h1, l1), (h2, l2), (h3, l3))?;
    Ok(ConvergenceStudy {
        extrapolated: richardson(h2, l2, h3, l3),
        points,
        order,
    })
}

/// Solve `(l1 - l2) / (l2 - l3) = (h1^p - h2^p) / (h2^p - h3^p)` for `p`.
fn observed_order(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> Result<f64> {
    let target = (a.1 - b.1) / (b.1 - c.1);
    if !target.is_finite() || target <= 0.0 {
        return Err(Error::ConvergenceFailure(
            "convergence study (non-monotone sequence)",
        ));
    }
    let ratio =
        |p: f64| (libm::pow(a.0, p) - libm::pow(b.0, p)) / (libm::pow(b.0, p) - libm::pow(c.0, p));
    let (mut lo, mut hi) = (0.05, 12.0);
    if (ratio(lo) - target) * (ratio(hi) - target) > 0.0 {
        return Err(Error::ConvergenceFailure(
            "convergence study (order out of range)",
        ));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (ratio(mid) - target) * (ratio(lo) - target) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
