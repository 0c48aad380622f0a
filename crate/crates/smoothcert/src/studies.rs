//! Deterministic studies built on the certifiers: approximation-error
//! tables, the EGG simulation grid, the B = 1 sweep, the dimension sweep
//! and the relaxed-concentration sweep. Every row type carries a schema
//! tag as its first field so emitted files are self-describing.

use serde::Serialize;

use crate::distribution::DistributionSpec;
use crate::dsrs::{dsrs_certify_b1_with, dsrs_certify_with, feasibility_check, heuristic_t, DsrsProblem, ProbabilityPair};
use crate::error::Result;
use crate::harness::{ClassifierKind, SyntheticClassifier};
use crate::lower_bound::{mu_table, lambda_table, ConcentrationParams, LambdaKind, LambdaTable};
use crate::parallel::Execution;
use crate::solve::SolverOptions;
use crate::special::{std_normal_cdf, SymmetricBeta};

pub const PSI_PHI_SCHEMA: &str = "smoothcert.psi-phi.v1";
pub const SIGMA_ERRORS_SCHEMA: &str = "smoothcert.sigma-errors.v1";
pub const LAMBDA_SCHEMA: &str = "smoothcert.lambda-table.v1";
pub const MU_SCHEMA: &str = "smoothcert.mu-table.v1";
pub const SIMULATION_SCHEMA: &str = "smoothcert.simulation.v1";
pub const B1_SCHEMA: &str = "smoothcert.b1-sweep.v1";
pub const DIMENSION_SCHEMA: &str = "smoothcert.d-sweep.v1";
pub const RELAXATION_SCHEMA: &str = "smoothcert.relaxation-sweep.v1";

/// Grid η values of the EGG simulation.
pub const SIMULATION_ETAS: [f64; 8] = [0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0];

/// (A, B) columns of the EGG simulation.
pub const SIMULATION_CELLS: [(f64, f64); 11] = [
    (0.6, 0.6),
    (0.6, 0.7),
    (0.6, 0.8),
    (0.6, 0.9),
    (0.7, 0.6),
    (0.7, 0.7),
    (0.7, 0.8),
    (0.7, 0.9),
    (0.8, 0.7),
    (0.8, 0.8),
    (0.8, 0.9),
];

/// Dimension of the EGG simulation grid.
pub const SIMULATION_D: u64 = 100_000;

/// k = d/2 - 5, the EGG order used by every simulation.
pub fn simulation_k(d: u64) -> u64 {
    (d / 2).saturating_sub(5)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PsiPhiRow {
    pub schema: &'static str,
    pub d: u64,
    pub points: usize,
    /// max |Ψ(½ + x/(2√d)) - Φ(x)| over the grid.
    pub max_abs_error: f64,
    /// max |Ψ - Φ| / Φ over the grid.
    pub max_rel_error: f64,
    pub argmax_x: f64,
}

/// Gap between the beta form Ψ_{(d-1)/2}(½ + x/(2√d)) and Φ(x) on
/// `points` equally spaced x in (0, √d).
pub fn psi_phi_errors(d: u64, points: usize) -> Result<PsiPhiRow> {
    let psi = SymmetricBeta::new((d as f64 - 1.0) / 2.0)?;
    let root = (d as f64).sqrt();
    let (mut ae, mut re, mut arg) = (0.0_f64, 0.0_f64, 0.0);
    for i in 1..=points {
        let x = root * i as f64 / (points + 1) as f64;
        let phi = std_normal_cdf(x);
        let gap = (psi.cdf(0.5 + x / (2.0 * root)) - phi).abs();
        if gap > ae {
            ae = gap;
            arg = x;
        }
        re = re.max(gap / phi);
    }
    Ok(PsiPhiRow {
        schema: PSI_PHI_SCHEMA,
        d,
        points,
        max_abs_error: ae,
        max_rel_error: re,
        argmax_x: arg,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SigmaErrorRow {
    pub schema: &'static str,
    pub d: u64,
    pub eta: f64,
    pub sigma: f64,
    pub exact: f64,
    pub approx: f64,
    pub abs_error: f64,
    pub rel_error: f64,
}

/// Exact ESG scale against its large-d approximation.
pub fn sigma_error(d: u64, eta: f64, sigma: f64) -> Result<SigmaErrorRow> {
    let spec = DistributionSpec::esg(d, sigma, eta)?;
    let exact = spec.formal_scale();
    let approx = spec.formal_scale_approx()?;
    let ae = (exact - approx).abs();
    Ok(SigmaErrorRow {
        schema: SIGMA_ERRORS_SCHEMA,
        d,
        eta,
        sigma,
        exact,
        approx,
        abs_error: ae,
        rel_error: ae / exact,
    })
}

/// The full σ-approximation study: d × η × σ.
pub fn sigma_error_table() -> Result<Vec<SigmaErrorRow>> {
    let mut rows = Vec::new();
    for d in [3072, 150_224] {
        for sigma in [0.12, 0.25, 0.5, 1.0] {
            for eta in [0.5, 1.0, 2.0, 4.0, 8.0] {
                rows.push(sigma_error(d, eta, sigma)?);
            }
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LambdaRow {
    pub schema: &'static str,
    pub table: &'static str,
    pub eta: String,
    pub d_minus_2k: u64,
    pub value: f64,
    /// Whether the cell exceeds 1/(2θ).
    pub passes: bool,
}

/// Flatten a Λ or μ table into rows (η order as built, then d - 2k).
pub fn table_rows(table: &LambdaTable, name: &'static str, schema: &'static str, threshold: f64) -> Vec<LambdaRow> {
    let mut out = Vec::new();
    for (eta, row) in table.etas.iter().zip(&table.rows) {
        for (j, &value) in row.iter().enumerate() {
            out.push(LambdaRow {
                schema,
                table: name,
                eta: eta.label(),
                d_minus_2k: j as u64 + 1,
                value,
                passes: value > threshold,
            });
        }
    }
    out
}

/// A Λ or μ table in its printed layout: one line per η (table order),
/// columns d - 2k = 1..30, schema tag first.
pub fn wide_table_csv(table: &LambdaTable, schema: &str) -> String {
    let mut out = String::from("schema,eta");
    for j in 1..=table.rows.first().map_or(0, Vec::len) {
        out.push_str(&format!(",{j}"));
    }
    out.push('\n');
    for (eta, row) in table.etas.iter().zip(&table.rows) {
        out.push_str(&format!("{schema},{}", eta.label()));
        for v in row {
            out.push_str(&format!(",{v}"));
        }
        out.push('\n');
    }
    out
}

/// Rows of a Λ table with pass marks at 1/(2θ).
pub fn lambda_rows(kind: LambdaKind, params: &ConcentrationParams, exec: Execution) -> Result<Vec<LambdaRow>> {
    let table = lambda_table(kind, params, exec)?;
    let name = match kind {
        LambdaKind::Fixbase => "fixbase",
        LambdaKind::Thcorres => "thcorres",
    };
    Ok(table_rows(&table, name, LAMBDA_SCHEMA, params.threshold()))
}

/// Rows of the tight-μ table; `passes` marks a positive μ.
pub fn mu_rows(params: &ConcentrationParams, e: f64, exec: Execution) -> Result<Vec<LambdaRow>> {
    let table = mu_table(params, e, exec)?;
    Ok(table_rows(&table, "mu", MU_SCHEMA, 0.0))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationRow {
    pub schema: &'static str,
    pub d: u64,
    pub k: u64,
    pub sigma: f64,
    pub eta: f64,
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: f64,
    #[serde(rename = "T")]
    pub t: f64,
    pub feasible: bool,
    pub radius: Option<f64>,
    pub outer_iterations: Option<usize>,
    pub residual: Option<f64>,
    pub error: Option<String>,
}

/// Settings shared by the simulation sweeps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    pub sigma: f64,
    pub tol: f64,
    pub solver: SolverOptions,
    pub exec: Execution,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            sigma: 1.0,
            tol: 1e-6,
            solver: SolverOptions::default(),
            exec: Execution::default(),
        }
    }
}

/// One DSRS cell with Q truncated at the half-mass radius (C = 2).
pub fn simulation_cell(d: u64, eta: f64, a: f64, b: f64, opts: &SweepOptions) -> SimulationRow {
    let k = simulation_k(d);
    let mut row = SimulationRow {
        schema: SIMULATION_SCHEMA,
        d,
        k,
        sigma: opts.sigma,
        eta,
        a,
        b,
        t: f64::NAN,
        feasible: false,
        radius: None,
        outer_iterations: None,
        residual: None,
        error: None,
    };
    let run = |row: &mut SimulationRow| -> Result<()> {
        let p = DistributionSpec::egg(d, opts.sigma, eta, k)?;
        row.t = heuristic_t(&p, 0.5)?;
        let q = p.with_truncation(row.t)?;
        if let Err(v) = feasibility_check(a, b, q.ratio_constant()?) {
            row.error = Some(v);
            return Ok(());
        }
        row.feasible = true;
        let problem = DsrsProblem::with_tol(p, q, ProbabilityPair::exact(a, b)?, opts.tol)?;
        let r = dsrs_certify_with(&problem, &opts.solver)?;
        row.radius = Some(r.radius);
        row.outer_iterations = Some(r.outer_iterations);
        row.residual = Some(r.residual);
        Ok(())
    };
    if let Err(e) = run(&mut row) {
        row.error = Some(e.to_string());
    }
    row
}

/// The η × (A, B) simulation grid, one cell per work item, in row-major
/// order (η outer).
pub fn simulation_grid(d: u64, etas: &[f64], cells: &[(f64, f64)], opts: &SweepOptions) -> Vec<SimulationRow> {
    let jobs: Vec<(f64, f64, f64)> = etas
        .iter()
        .flat_map(|&eta| cells.iter().map(move |&(a, b)| (eta, a, b)))
        .collect();
    opts.exec.map(&jobs, |&(eta, a, b)| simulation_cell(d, eta, a, b, opts))
}

/// Relative radius increase (percent) from η = `from` to η = `to` for each
/// (A, B) column of a grid.
pub fn eta_increase(rows: &[SimulationRow], from: f64, to: f64) -> Vec<((f64, f64), Option<f64>)> {
    let mut cols: Vec<(f64, f64)> = Vec::new();
    for r in rows {
        if !cols.contains(&(r.a, r.b)) {
            cols.push((r.a, r.b));
        }
    }
    cols.into_iter()
        .map(|(a, b)| {
            let pick = |eta: f64| {
                rows.iter()
                    .find(|r| r.eta == eta && r.a == a && r.b == b)
                    .and_then(|r| r.radius)
            };
            let inc = match (pick(from), pick(to)) {
                (Some(lo), Some(hi)) if lo > 0.0 => Some(100.0 * (hi / lo - 1.0)),
                _ => None,
            };
            ((a, b), inc)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct B1Row {
    pub schema: &'static str,
    pub d: u64,
    pub k: u64,
    pub sigma: f64,
    pub eta: f64,
    #[serde(rename = "T")]
    pub t: f64,
    pub radius: Option<f64>,
    pub error: Option<String>,
}

/// Radius σ√(2Λ^{-1}_{d/2}(p)) holding mass p of the Gaussian.
pub fn gaussian_mass_radius(d: u64, sigma: f64, p: f64) -> Result<f64> {
    DistributionSpec::esg(d, sigma, 2.0)?.radius_for_mass(p)
}

/// B = 1 radii with T fixed at the Gaussian half-mass radius.
pub fn b1_sweep(dims: &[u64], etas: &[f64], opts: &SweepOptions) -> Vec<B1Row> {
    let jobs: Vec<(u64, f64)> = dims.iter().flat_map(|&d| etas.iter().map(move |&e| (d, e))).collect();
    opts.exec.map(&jobs, |&(d, eta)| {
        let k = simulation_k(d);
        let mut row = B1Row {
            schema: B1_SCHEMA,
            d,
            k,
            sigma: opts.sigma,
            eta,
            t: f64::NAN,
            radius: None,
            error: None,
        };
        let run = |row: &mut B1Row| -> Result<()> {
            row.t = gaussian_mass_radius(d, opts.sigma, 0.5)?;
            let p = DistributionSpec::egg(d, opts.sigma, eta, k)?;
            let q = p.with_truncation(row.t)?;
            row.radius = Some(dsrs_certify_b1_with(&p, &q, opts.tol, &opts.solver)?.radius);
            Ok(())
        };
        if let Err(e) = run(&mut row) {
            row.error = Some(e.to_string());
        }
        row
    })
}

/// Dimension sweep of the simulation at fixed (A, B).
pub fn dimension_sweep(dims: &[u64], etas: &[f64], a: f64, b: f64, opts: &SweepOptions) -> Vec<SimulationRow> {
    let jobs: Vec<(u64, f64)> = dims.iter().flat_map(|&d| etas.iter().map(move |&e| (d, e))).collect();
    opts.exec.map(&jobs, |&(d, eta)| {
        let mut row = simulation_cell(d, eta, a, b, opts);
        row.schema = DIMENSION_SCHEMA;
        row
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelaxationRow {
    pub schema: &'static str,
    pub d: u64,
    pub eta: f64,
    pub p_inner: f64,
    pub p_outer: f64,
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: f64,
    #[serde(rename = "T")]
    pub t: f64,
    pub radius: Option<f64>,
    pub error: Option<String>,
}

/// Shell classifiers whose inner accuracy `p_inner` relaxes below 1 while
/// the outer accuracy is calibrated so every η sees the same P-mass
/// `target_a`. Both the shell and Q use the Gaussian half-mass radius, and
/// (A, B) are the exact classifier probabilities.
pub fn relaxation_sweep(d: u64, etas: &[f64], target_a: f64, p_inner: &[f64], opts: &SweepOptions) -> Vec<RelaxationRow> {
    let jobs: Vec<(f64, f64)> = p_inner.iter().flat_map(|&p| etas.iter().map(move |&e| (e, p))).collect();
    opts.exec.map(&jobs, |&(eta, p)| {
        let mut row = RelaxationRow {
            schema: RELAXATION_SCHEMA,
            d,
            eta,
            p_inner: p,
            p_outer: f64::NAN,
            a: f64::NAN,
            b: f64::NAN,
            t: f64::NAN,
            radius: None,
            error: None,
        };
        let run = |row: &mut RelaxationRow| -> Result<()> {
            row.t = gaussian_mass_radius(d, opts.sigma, 0.5)?;
            let p_spec = DistributionSpec::egg(d, opts.sigma, eta, simulation_k(d))?;
            let q_spec = p_spec.with_truncation(row.t)?;
            let inside = p_spec.mass_within(row.t);
            row.p_outer = ((target_a - p * inside) / (1.0 - inside)).clamp(0.0, 1.0);
            let cls = SyntheticClassifier::new(ClassifierKind::Shell {
                t_star: row.t,
                p_inner: p,
                p_outer: row.p_outer,
            })?;
            row.a = cls.exact_probability(&p_spec);
            row.b = cls.exact_probability(&q_spec).min(1.0);
            let problem = DsrsProblem::with_tol(p_spec, q_spec, ProbabilityPair::exact(row.a, row.b)?, opts.tol)?;
            row.radius = Some(dsrs_certify_with(&problem, &opts.solver)?.radius);
            Ok(())
        };
        if let Err(e) = run(&mut row) {
            row.error = Some(e.to_string());
        }
        row
    })
}
