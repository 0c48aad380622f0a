//! Concentration lower bounds: when the base classifier is always right
//! inside the ball of mass p, the B = 1 certificate grows like σ√d. This
//! module evaluates the discriminant, the tight constant μ, and the two Λ
//! tables that witness the bound.

use serde::{Deserialize, Serialize};

use crate::distribution::DistributionSpec;
use crate::dsrs::ball_shift_mass;
use crate::error::{Error, Result};
use crate::parallel::Execution;
use crate::solve::SolverOptions;
use crate::special::{gamma_pq, ln_gamma};

/// Constants of the concentration argument.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConcentrationParams {
    /// Beta-concentration level θ.
    pub theta: f64,
    /// Gamma-concentration level β.
    pub beta: f64,
    /// Ψ threshold τ ∈ (½, 1).
    pub tau: f64,
    /// Radius constant μ (fixed-base table) or ζ (d-corrected table).
    pub mu_or_zeta: f64,
    /// Concentration mass p (d-corrected table only).
    pub p: f64,
    /// Reference dimension d̃ (d-corrected table only).
    pub d_tilde: u64,
}

impl Default for ConcentrationParams {
    fn default() -> Self {
        Self {
            theta: 0.999,
            beta: 0.99,
            tau: 0.6,
            mu_or_zeta: 0.02,
            p: 0.5,
            d_tilde: 25_000,
        }
    }
}

impl ConcentrationParams {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("theta", self.theta), ("beta", self.beta), ("p", self.p)] {
            if !(v > 0.0 && v < 1.0) {
                return Err(Error::invalid(name, format!("{v} must lie in (0, 1)")));
            }
        }
        if !(self.tau > 0.5 && self.tau < 1.0) {
            return Err(Error::invalid("tau", format!("{} must lie in (1/2, 1)", self.tau)));
        }
        if !(self.mu_or_zeta > 0.0) {
            return Err(Error::invalid("mu_or_zeta", "must be positive"));
        }
        if self.d_tilde == 0 {
            return Err(Error::invalid("d_tilde", "must be positive"));
        }
        Ok(())
    }

    /// The pass mark 1/(2θ) the Λ tables are compared against.
    pub fn threshold(&self) -> f64 {
        0.5 / self.theta
    }
}

/// E_u[Ψ((T² - (t-ρ)²)/(4ρt))] under P = EGG(σ, η, k) (ESG when k = 0):
/// ρ is certified in the B = 1 limit iff this is at least ½.
pub fn concentrated_lhs(d: u64, k: u64, eta: f64, sigma: f64, t: f64, rho: f64) -> Result<f64> {
    let spec = if k == 0 {
        DistributionSpec::esg(d, sigma, eta)?
    } else {
        DistributionSpec::egg(d, sigma, eta, k)?
    };
    ball_shift_mass(&spec.with_truncation(t)?, rho, &SolverOptions::default())
}

/// Radius T with P{‖z‖₂ ≤ T} = p under ESG(σ, η).
pub fn concentration_t(d: u64, sigma: f64, p: f64, eta: f64) -> Result<f64> {
    DistributionSpec::esg(d, sigma, eta)?.radius_for_mass(p)
}

/// Mean factor √(Γ((n+2)/η)/Γ(n/η)).
fn ln_root_gamma_ratio(n: u64, eta: f64) -> f64 {
    let n = n as f64;
    0.5 * (ln_gamma((n + 2.0) / eta) - ln_gamma(n / eta))
}

fn check_cell(d_minus_2k: u64, eta: f64) -> Result<()> {
    if d_minus_2k == 0 {
        return Err(Error::invalid("d_minus_2k", "must be at least 1"));
    }
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(Error::invalid("eta", format!("{eta} must be positive")));
    }
    Ok(())
}

/// Gamma argument m(μ) of the fixed-base table.
fn fixbase_m(d_minus_2k: u64, eta: f64, params: &ConcentrationParams, mu: f64) -> f64 {
    let tau = params.tau;
    let inner = (1.0 - 2.0 * tau) * mu + (params.beta + (4.0 * tau * tau - 4.0 * tau) * mu * mu).sqrt();
    (eta * (ln_root_gamma_ratio(d_minus_2k, eta) + inner.ln())).exp()
}

/// Λ_{(d-2k)/η}(m) with m at μ = `params.mu_or_zeta`: one fixed-base cell.
pub fn lambda_table_fixbase(d_minus_2k: u64, eta: f64, params: &ConcentrationParams) -> Result<f64> {
    check_cell(d_minus_2k, eta)?;
    params.validate()?;
    let m = fixbase_m(d_minus_2k, eta, params, params.mu_or_zeta);
    Ok(gamma_pq(d_minus_2k as f64 / eta, m).0)
}

/// Reciprocal exponent n = 2/η, required to be a positive integer.
fn product_length(eta: f64) -> Result<u64> {
    let n = 2.0 / eta;
    let rounded = n.round();
    if !(rounded >= 1.0 && (n - rounded).abs() <= 1e-9 * rounded) {
        return Err(Error::domain(
            "lambda_table_thcorres",
            format!("2/η = {n} is not a positive integer"),
        ));
    }
    Ok(rounded as u64)
}

/// ln ∏_{i=1}^{2/η} ((x+2)/η - i).
fn ln_product(x: f64, eta: f64, len: u64) -> f64 {
    (1..=len).map(|i| ((x + 2.0) / eta - i as f64).ln()).sum()
}

/// g(x) = x / (∏_{i=1}^{2/η} ((x+2)/η - i))^{η/2}, the d-correction factor.
pub fn thcorres_g(x: f64, eta: f64) -> Result<f64> {
    let len = product_length(eta)?;
    if !(x > 0.0) {
        return Err(Error::invalid("x", format!("{x} must be positive")));
    }
    Ok((x.ln() - 0.5 * eta * ln_product(x, eta, len)).exp())
}

/// One cell of the d-corrected table (η = 1/n or 2/n with integer n).
pub fn lambda_table_thcorres(d_minus_2k: u64, eta: f64, params: &ConcentrationParams) -> Result<f64> {
    check_cell(d_minus_2k, eta)?;
    params.validate()?;
    let len = product_length(eta)?;
    let dt = params.d_tilde as f64;
    let ln_pref = dt.ln() - std::f64::consts::LN_2 - 0.5 * eta * ln_product(dt, eta, len);
    let (tau, zeta) = (params.tau, params.mu_or_zeta);
    let base = (2.0 * params.beta / eta).powf(2.0 / eta);
    let inner = (1.0 - 2.0 * tau) * zeta + (base + (4.0 * tau * tau - 4.0 * tau) * zeta * zeta).sqrt();
    let m = (ln_pref + eta * (ln_root_gamma_ratio(d_minus_2k, eta) + inner.ln())).exp();
    Ok(gamma_pq(d_minus_2k as f64 / eta, m).0)
}

/// Largest μ ∈ [0, 1] (to width `e`) with θ Λ(m(μ)) > ½; 0 if μ = e fails.
pub fn tight_mu(d_minus_2k: u64, eta: f64, params: &ConcentrationParams, e: f64) -> Result<f64> {
    check_cell(d_minus_2k, eta)?;
    params.validate()?;
    if !(e > 0.0 && e < 1.0) {
        return Err(Error::invalid("e", format!("{e} must lie in (0, 1)")));
    }
    let shape = d_minus_2k as f64 / eta;
    let passes = |mu: f64| params.theta * gamma_pq(shape, fixbase_m(d_minus_2k, eta, params, mu)).0 > 0.5;
    if !passes(e) {
        return Ok(0.0);
    }
    let (mut lo, mut hi) = (e, 1.0);
    if passes(hi) {
        return Ok(hi);
    }
    while hi - lo > e {
        let mid = 0.5 * (lo + hi);
        if passes(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// η rows of the fixed-base table: 10, 9, …, 2, then 1, 1/2, …, 1/50.
pub fn fixbase_etas() -> Vec<Eta> {
    (2..=10)
        .rev()
        .map(Eta::integer)
        .chain((1..=50).map(Eta::reciprocal))
        .collect()
}

/// η rows of the d-corrected table: 1, 1/2, …, 1/50.
pub fn thcorres_etas() -> Vec<Eta> {
    (1..=50).map(Eta::reciprocal).collect()
}

/// An η value with its display label ("3" or "1/7").
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eta {
    pub value: f64,
    numerator: u64,
    denominator: u64,
}

impl Eta {
    pub fn integer(n: u64) -> Self {
        Self { value: n as f64, numerator: n, denominator: 1 }
    }

    pub fn reciprocal(n: u64) -> Self {
        Self { value: 1.0 / n as f64, numerator: 1, denominator: n }
    }

    pub fn label(&self) -> String {
        if self.denominator == 1 {
            self.numerator.to_string()
        } else {
            format!("{}/{}", self.numerator, self.denominator)
        }
    }
}

/// Columns d - 2k = 1..=30 of both tables.
pub const TABLE_COLUMNS: u64 = 30;

/// A full Λ table: one row per η, one value per d - 2k.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LambdaTable {
    pub etas: Vec<Eta>,
    pub rows: Vec<Vec<f64>>,
}

impl LambdaTable {
    /// Cells at or below the pass mark, as (row, column) with column = d - 2k.
    pub fn failing_cells(&self, threshold: f64) -> Vec<(usize, u64)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v <= threshold {
                    out.push((i, j as u64 + 1));
                }
            }
        }
        out
    }
}

/// Which of the two Λ tables to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LambdaKind {
    Fixbase,
    Thcorres,
}

/// Build a full Λ table, one η row per work item.
pub fn lambda_table(kind: LambdaKind, params: &ConcentrationParams, exec: Execution) -> Result<LambdaTable> {
    let etas = match kind {
        LambdaKind::Fixbase => fixbase_etas(),
        LambdaKind::Thcorres => thcorres_etas(),
    };
    let rows: Result<Vec<Vec<f64>>> = exec
        .map(&etas, |eta| {
            (1..=TABLE_COLUMNS)
                .map(|n| match kind {
                    LambdaKind::Fixbase => lambda_table_fixbase(n, eta.value, params),
                    LambdaKind::Thcorres => lambda_table_thcorres(n, eta.value, params),
                })
                .collect()
        })
        .into_iter()
        .collect();
    Ok(LambdaTable { etas, rows: rows? })
}

/// Tight μ for every fixed-base cell.
pub fn mu_table(params: &ConcentrationParams, e: f64, exec: Execution) -> Result<LambdaTable> {
    let etas = fixbase_etas();
    let rows: Result<Vec<Vec<f64>>> = exec
        .map(&etas, |eta| (1..=TABLE_COLUMNS).map(|n| tight_mu(n, eta.value, params, e)).collect())
        .into_iter()
        .collect();
    Ok(LambdaTable { etas, rows: rows? })
}

/// Round half-up to `digits` decimals, the convention of printed tables.
pub fn round_half_up(x: f64, digits: i32) -> f64 {
    let scale = 10f64.powi(digits);
    // nudge by a few ulps so values printed as ...5 round up
    let y = x * scale;
    (y + 0.5 + 4.0 * f64::EPSILON * y.abs()).floor() / scale
}
