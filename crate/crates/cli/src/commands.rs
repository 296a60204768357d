use std::collections::BTreeMap;

use serde_json::{json, Value};

use quantum_bouncer::airy::{ai, BI_SWITCHOVER, SWITCHOVER};
use quantum_bouncer::bouncer::QUAD_TOL;
use quantum_bouncer::spectrum::{build_spectrum, fit_scaling_exponent, DEFAULT_TOL};
use quantum_bouncer::{BouncerSystem, Branch, Route, SeriesConfig};

use crate::config::PhysicalConstants;
use crate::output::{Cell, OutputRecord, Provenance, Table, SCHEMA_VERSION};
use crate::{CliError, Units};

fn numerical(op: &'static str) -> impl FnOnce(quantum_bouncer::Error) -> CliError {
    move |source| CliError::Numerical { op, source }
}

fn system(units: Units, constants: &PhysicalConstants) -> Result<BouncerSystem, CliError> {
    match units {
        Units::Natural => Ok(BouncerSystem::natural()),
        Units::Si => BouncerSystem::new(constants.mass, constants.g, constants.hbar)
            .map_err(|e| CliError::Usage(format!("physical constants: {e}"))),
    }
}

fn branch_name(route: Route) -> &'static str {
    match route {
        Route::Hybrid(Branch::Series) | Route::Series => "series",
        Route::Hybrid(Branch::AsymptoticPos) | Route::AsymptoticPos => "asymptotic_pos",
        Route::Hybrid(Branch::AsymptoticNeg) | Route::AsymptoticNeg => "asymptotic_neg",
        Route::Bessel => "bessel",
    }
}

/// Tally of the hybrid branch used for Ai at each `xi`.
fn route_stats(xis: impl IntoIterator<Item = f64>) -> Result<BTreeMap<String, usize>, CliError> {
    let cfg = SeriesConfig::default();
    let mut stats = BTreeMap::new();
    for x in xis {
        let v = ai(x, &cfg).map_err(numerical("airy"))?;
        *stats.entry(branch_name(v.route).to_string()).or_insert(0) += 1;
    }
    Ok(stats)
}

fn tolerances() -> BTreeMap<&'static str, f64> {
    let cfg = SeriesConfig::default();
    BTreeMap::from([
        ("root_tol", DEFAULT_TOL),
        ("series_abs_tol", cfg.abs_tol()),
        ("quadrature_abs_tol", QUAD_TOL),
        ("switchover", SWITCHOVER),
        ("bi_switchover", BI_SWITCHOVER),
    ])
}

fn units_params(units: Units, sys: &BouncerSystem) -> Vec<(&'static str, Value)> {
    vec![
        ("units", json!(units.name())),
        ("mass", json!(sys.mass())),
        ("g", json!(sys.g())),
        ("hbar", json!(sys.hbar())),
        ("z0", json!(sys.z0())),
        ("e_scale", json!(sys.e_scale())),
    ]
}

pub fn spectrum(
    n_max: usize,
    units: Units,
    constants: &PhysicalConstants,
) -> Result<OutputRecord, CliError> {
    if n_max < 1 {
        return Err(CliError::Usage("--n-max must be at least 1".into()));
    }
    let sys = system(units, constants)?;
    let spec = build_spectrum(n_max, DEFAULT_TOL).map_err(numerical("build_spectrum"))?;
    let mut rows = Vec::with_capacity(n_max);
    for e in spec.entries() {
        let e_asym = sys
            .energy_asymptotic(e.n)
            .map_err(numerical("energy_asymptotic"))?;
        rows.push(vec![
            Cell::Int(e.n as u64),
            Cell::Float(e.lambda_exact),
            Cell::Float(e.lambda_asym),
            Cell::Float(e.rel_error),
            Cell::Float(sys.e_scale() * e.lambda_exact),
            Cell::Float(e_asym),
        ]);
    }
    let worst = spec.max_rel_error();
    let mut params: BTreeMap<_, _> = units_params(units, &sys).into_iter().collect();
    params.insert("n_max", json!(n_max));
    Ok(OutputRecord {
        schema_version: SCHEMA_VERSION,
        command: "spectrum",
        params,
        rows: Table {
            columns: vec![
                "n",
                "lambda_exact",
                "lambda_asym",
                "rel_error",
                "energy_exact",
                "energy_asym",
            ],
            rows,
        },
        summary: BTreeMap::from([
            ("max_rel_error", json!(worst.rel_error)),
            ("max_rel_error_n", json!(worst.n)),
        ]),
        provenance: Provenance {
            evaluator_route_stats: route_stats(spec.entries().iter().map(|e| -e.lambda_exact))?,
            tolerances: tolerances(),
        },
    })
}

pub fn wavefunction(
    n: usize,
    points: usize,
    z_max_factor: f64,
    units: Units,
    constants: &PhysicalConstants,
) -> Result<OutputRecord, CliError> {
    if n < 1 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if points < 2 {
        return Err(CliError::Usage("--points must be at least 2".into()));
    }
    if !(z_max_factor > 0.0 && z_max_factor.is_finite()) {
        return Err(CliError::Usage("--z-max-factor must be positive".into()));
    }
    let sys = system(units, constants)?;
    let state = sys.eigenstate(n).map_err(numerical("eigenstate"))?;
    let z_max = z_max_factor * state.turning_point;
    let step = z_max / (points - 1) as f64;
    let mut rows = Vec::with_capacity(points);
    let mut xis = Vec::with_capacity(points);
    for i in 0..points {
        let z = if i == points - 1 {
            z_max
        } else {
            i as f64 * step
        };
        let phi = sys
            .eval_wavefunction(&state, z)
            .map_err(numerical("eval_wavefunction"))?;
        rows.push(vec![Cell::Float(z), Cell::Float(phi)]);
        xis.push(z / sys.z0() - state.lambda);
    }
    let mut params: BTreeMap<_, _> = units_params(units, &sys).into_iter().collect();
    params.extend([
        ("n", json!(n)),
        ("points", json!(points)),
        ("z_max_factor", json!(z_max_factor)),
        ("lambda", json!(state.lambda)),
        ("energy", json!(state.energy)),
        ("turning_point", json!(state.turning_point)),
        ("norm_const", json!(state.norm_const)),
    ]);
    Ok(OutputRecord {
        schema_version: SCHEMA_VERSION,
        command: "wavefunction",
        params,
        rows: Table {
            columns: vec!["z", "phi"],
            rows,
        },
        summary: BTreeMap::new(),
        provenance: Provenance {
            evaluator_route_stats: route_stats(xis)?,
            tolerances: tolerances(),
        },
    })
}

pub fn scaling(n_lo: usize, n_hi: usize) -> Result<OutputRecord, CliError> {
    if n_lo < 1 || n_hi < n_lo + 10 {
        return Err(CliError::Usage(
            "scaling needs 1 <= n-lo and n-hi - n-lo >= 10".into(),
        ));
    }
    let spec = build_spectrum(n_hi, DEFAULT_TOL).map_err(numerical("build_spectrum"))?;
    let exponent =
        fit_scaling_exponent(&spec, n_lo, n_hi).map_err(numerical("fit_scaling_exponent"))?;
    let used = &spec.entries()[n_lo - 1..n_hi];
    let rows = used
        .iter()
        .map(|e| {
            vec![
                Cell::Int(e.n as u64),
                Cell::Float(e.lambda_exact),
                Cell::Float((e.n as f64).ln()),
                Cell::Float(e.lambda_exact.ln()),
            ]
        })
        .collect();
    Ok(OutputRecord {
        schema_version: SCHEMA_VERSION,
        command: "scaling",
        params: BTreeMap::from([("n_lo", json!(n_lo)), ("n_hi", json!(n_hi))]),
        rows: Table {
            columns: vec!["n", "lambda_exact", "log_n", "log_lambda"],
            rows,
        },
        summary: BTreeMap::from([("exponent", json!(exponent))]),
        provenance: Provenance {
            evaluator_route_stats: route_stats(used.iter().map(|e| -e.lambda_exact))?,
            tolerances: tolerances(),
        },
    })
}
