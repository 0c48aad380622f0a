//! Single-distribution (Neyman–Pearson) certification for ESG and EGG
//! noise, the closed-form ESG approximation and the Gaussian baseline.
//!
//! For a shift of length ρ the worst-case classifier is a level set of
//! p(x - δ)/p(x). Its multiplier ν is fixed by E_u[ω♮] = A, and ρ is
//! certified when the shifted mass E_u[ω♯] stays at least ½.

use serde::{Deserialize, Serialize};

use crate::distribution::{DistributionSpec, Family};
use crate::error::{Error, Result};
use crate::kernel::{Kernel, Side};
use crate::solve::{
    bisect_increasing, radius_bisection, CertificationResult, Method, SolverOptions,
};
use crate::special::{std_normal_cdf_inv, SymmetricBeta};

/// Initial half-width of the ln(-ν) bracket.
const NU_BRACKET: f64 = 40.0;

/// Inputs of one NP certification.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NpProblem {
    pub spec: DistributionSpec,
    /// Lower confidence bound on the correct-class probability.
    #[serde(rename = "A")]
    pub a: f64,
    /// Radius bisection tolerance.
    pub tol: f64,
}

impl NpProblem {
    pub fn new(spec: DistributionSpec, a: f64) -> Result<Self> {
        Self::with_tol(spec, a, 1e-6)
    }

    pub fn with_tol(spec: DistributionSpec, a: f64, tol: f64) -> Result<Self> {
        if spec.truncation().is_some() {
            return Err(Error::invalid("spec", "NP certification needs an untruncated spec"));
        }
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::invalid("A", format!("{a} is not a probability")));
        }
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::invalid("tol", format!("{tol} must be positive")));
        }
        Ok(Self { spec, a, tol })
    }
}

/// Solved multiplier of the NP dual at one radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DualState {
    /// ln(-ν).
    pub log_neg_nu: f64,
    /// Achieved constraint value minus its target.
    pub residual: f64,
    pub iterations: usize,
}

/// ESG ω♯ at (u, ln(-ν)) for shift ρ.
pub fn esg_omega_sharp(u: f64, log_neg_nu: f64, rho: f64, spec: &DistributionSpec) -> Result<f64> {
    omega(u, log_neg_nu, rho, spec, Side::Sharp)
}

/// ESG ω♮ at (u, ln(-ν)) for shift ρ.
pub fn esg_omega_natural(
    u: f64,
    log_neg_nu: f64,
    rho: f64,
    spec: &DistributionSpec,
) -> Result<f64> {
    omega(u, log_neg_nu, rho, spec, Side::Natural)
}

fn omega(u: f64, l: f64, rho: f64, spec: &DistributionSpec, side: Side) -> Result<f64> {
    if !(u >= 0.0) {
        return Err(Error::domain("omega", format!("u = {u} must be nonnegative")));
    }
    let k = Kernel::new(spec, rho)?;
    if u == 0.0 {
        return Ok(match side {
            Side::Sharp => 0.0,
            Side::Natural => 1.0,
        });
    }
    Ok(match side {
        Side::Sharp => k.omega_sharp(u, l),
        Side::Natural => k.omega_natural(u, l),
    })
}

fn breakpoints(k: &Kernel, l: f64, side: Side) -> Vec<f64> {
    k.branch_points(l, side).into_iter().collect()
}

/// E_u[ω♮(u, L)] under the untruncated law.
pub(crate) fn natural_mass(
    k: &Kernel,
    spec: &DistributionSpec,
    l: f64,
    opts: &SolverOptions,
) -> Result<f64> {
    opts.integrator
        .expect(spec.shape(), |u| k.omega_natural(u, l), &breakpoints(k, l, Side::Natural))
}

/// E_u[ω♯(u, L)] under the untruncated law.
pub(crate) fn sharp_mass(
    k: &Kernel,
    spec: &DistributionSpec,
    l: f64,
    opts: &SolverOptions,
) -> Result<f64> {
    opts.integrator
        .expect(spec.shape(), |u| k.omega_sharp(u, l), &breakpoints(k, l, Side::Sharp))
}

/// Solve E_u[ω♮] = A for ln(-ν) at shift ρ.
pub fn np_solve_dual(
    spec: &DistributionSpec,
    rho: f64,
    a: f64,
    opts: &SolverOptions,
) -> Result<DualState> {
    let k = Kernel::new(spec, rho)?;
    solve_dual(&k, spec, a, opts)
}

fn solve_dual(k: &Kernel, spec: &DistributionSpec, a: f64, opts: &SolverOptions) -> Result<DualState> {
    let root = bisect_increasing(
        "NP multiplier ln(-ν)",
        |l| natural_mass(k, spec, l, opts),
        a,
        -NU_BRACKET,
        NU_BRACKET,
        opts.dual_tol,
        opts.max_iterations,
    )?;
    Ok(DualState {
        log_neg_nu: root.x,
        residual: root.value - a,
        iterations: root.iterations,
    })
}

/// Shifted mass E_u[ω♯] at the given dual.
pub fn np_sharp_mass(
    spec: &DistributionSpec,
    rho: f64,
    dual: &DualState,
    opts: &SolverOptions,
) -> Result<f64> {
    let k = Kernel::new(spec, rho)?;
    sharp_mass(&k, spec, dual.log_neg_nu, opts)
}

/// NP certification with default solver options.
pub fn np_certify(problem: &NpProblem) -> Result<CertificationResult> {
    np_certify_with(problem, &SolverOptions::default())
}

/// ESG NP certification; rejects EGG specs.
pub fn esg_np_certify(problem: &NpProblem) -> Result<CertificationResult> {
    require_family(&problem.spec, Family::Esg)?;
    np_certify(problem)
}

/// EGG NP certification; rejects ESG specs.
pub fn egg_np_certify(problem: &NpProblem) -> Result<CertificationResult> {
    require_family(&problem.spec, Family::Egg)?;
    np_certify(problem)
}

fn require_family(spec: &DistributionSpec, family: Family) -> Result<()> {
    if spec.family() != family {
        return Err(Error::invalid(
            "family",
            format!("expected a {family} spec, got {}", spec.family()),
        ));
    }
    Ok(())
}

/// Two-layer bisection: outer over ρ, inner over ln(-ν).
pub fn np_certify_with(problem: &NpProblem, opts: &SolverOptions) -> Result<CertificationResult> {
    let NpProblem { spec, a, tol } = *problem;
    if a <= 0.5 {
        return Ok(CertificationResult::zero(Method::Np));
    }
    if a >= 1.0 {
        return Err(Error::invalid("A", "A = 1 certifies every radius"));
    }
    let mut inner = 0;
    let mut predicate = |rho: f64| -> Result<(bool, DualState, f64)> {
        let k = Kernel::new(&spec, rho)?;
        let dual = solve_dual(&k, &spec, a, opts).map_err(|e| at(rho, e))?;
        inner += dual.iterations;
        let shifted = sharp_mass(&k, &spec, dual.log_neg_nu, opts).map_err(|e| at(rho, e))?;
        Ok((shifted >= 0.5, dual, shifted))
    };
    let upper = 20.0 * spec.sigma() * std_normal_cdf_inv(a)?.max(1.0);
    let search = radius_bisection(|rho| predicate(rho).map(|p| p.0), upper, tol)?;
    if search.radius == 0.0 {
        let mut out = CertificationResult::zero(Method::Np);
        out.outer_iterations = search.iterations;
        out.inner_iterations = inner;
        return Ok(out);
    }
    let (_, dual, shifted) = predicate(search.radius)?;
    Ok(CertificationResult {
        method: Method::Np,
        radius: search.radius,
        outer_iterations: search.iterations,
        inner_iterations: inner,
        residual: dual.residual.abs(),
        margin: shifted - 0.5,
        log_neg_nu1: Some(dual.log_neg_nu),
        log_neg_combined: None,
    })
}

pub(crate) fn at(rho: f64, e: Error) -> Error {
    match e {
        Error::AtRadius { .. } => e,
        other => Error::AtRadius { rho, source: Box::new(other) },
    }
}

/// Probability A whose NP certificate is exactly ρ: solve E[ω♯] = ½ for
/// ν, then A = E[ω♮]. Also returns the multiplier.
pub fn esg_probability_from_radius(spec: &DistributionSpec, rho: f64) -> Result<(f64, DualState)> {
    probability_from_radius_with(spec, rho, &SolverOptions::default())
}

pub fn probability_from_radius_with(
    spec: &DistributionSpec,
    rho: f64,
    opts: &SolverOptions,
) -> Result<(f64, DualState)> {
    if !(rho > 0.0) {
        return Err(Error::invalid("rho", format!("{rho} must be positive")));
    }
    let k = Kernel::new(spec, rho)?;
    let root = bisect_increasing(
        "radius-to-probability multiplier",
        |l| sharp_mass(&k, spec, l, opts),
        0.5,
        -NU_BRACKET,
        NU_BRACKET,
        opts.dual_tol,
        opts.max_iterations,
    )?;
    let a = natural_mass(&k, spec, root.x, opts)?;
    Ok((
        a,
        DualState {
            log_neg_nu: root.x,
            residual: root.value - 0.5,
            iterations: root.iterations,
        },
    ))
}

/// Closed-form approximation A = Ψ_{(d-1)/2}(½ + ρ/(2σ√d)).
pub fn esg_analytic_probability(d: u64, sigma: f64, rho: f64) -> Result<f64> {
    let psi = analytic_psi(d, sigma)?;
    if !(rho >= 0.0) {
        return Err(Error::invalid("rho", format!("{rho} must be nonnegative")));
    }
    Ok(psi.cdf(0.5 + rho / (2.0 * sigma * (d as f64).sqrt())))
}

/// Inverse of [`esg_analytic_probability`] via the beta quantile.
pub fn esg_analytic_radius(d: u64, sigma: f64, a: f64) -> Result<f64> {
    let psi = analytic_psi(d, sigma)?;
    if !(0.5..1.0).contains(&a) {
        return Err(Error::invalid("A", format!("{a} must lie in [1/2, 1)")));
    }
    let x = psi.quantile(a);
    Ok(((x - 0.5) * 2.0 * sigma * (d as f64).sqrt()).max(0.0))
}

fn analytic_psi(d: u64, sigma: f64) -> Result<SymmetricBeta> {
    if d < 2 {
        return Err(Error::invalid("d", format!("{d} must be at least 2")));
    }
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::invalid("sigma", format!("{sigma} must be positive")));
    }
    SymmetricBeta::new((d as f64 - 1.0) / 2.0)
}

/// Gaussian baseline σ Φ^{-1}(A).
pub fn cohen_radius(sigma: f64, a: f64) -> Result<f64> {
    if !(0.5..1.0).contains(&a) {
        return Err(Error::invalid("A", format!("{a} must lie in [1/2, 1)")));
    }
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::invalid("sigma", format!("{sigma} must be positive")));
    }
    Ok(sigma * std_normal_cdf_inv(a)?)
}
