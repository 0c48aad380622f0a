//! Bisection machinery and the result record shared by the certifiers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integrate::Integrator;

/// Numerical settings shared by the NP and DSRS certifiers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverOptions {
    pub integrator: Integrator,
    /// Target |residual| of each dual constraint, in probability.
    pub dual_tol: f64,
    /// Iteration cap of every bisection.
    pub max_iterations: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            integrator: Integrator::default(),
            dual_tol: 1e-10,
            max_iterations: 300,
        }
    }
}

/// Which certification produced a radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Np,
    Dsrs,
    DsrsB1,
    Analytic,
    Cohen,
}

/// Certified radius plus solver diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CertificationResult {
    pub method: Method,
    pub radius: f64,
    /// Radius bisection steps.
    pub outer_iterations: usize,
    /// Dual bisection steps summed over all radius trials.
    pub inner_iterations: usize,
    /// Largest |dual residual| at the returned radius.
    pub residual: f64,
    /// Certification predicate minus ½ at the returned radius.
    pub margin: f64,
    /// ln(-ν) (NP) or ln(-ν₁) (DSRS) at the returned radius.
    pub log_neg_nu1: Option<f64>,
    /// ln(-(ν₁ + Cν₂)) at the returned radius (DSRS only).
    pub log_neg_combined: Option<f64>,
}

impl CertificationResult {
    pub(crate) fn zero(method: Method) -> Self {
        Self {
            method,
            radius: 0.0,
            outer_iterations: 0,
            inner_iterations: 0,
            residual: 0.0,
            margin: 0.0,
            log_neg_nu1: None,
            log_neg_combined: None,
        }
    }
}

/// Root of a monotone nondecreasing map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Root {
    pub x: f64,
    pub value: f64,
    pub iterations: usize,
}

/// Solve f(x) = target for nondecreasing f by bisection, growing the
/// initial bracket [lo, hi] geometrically until it encloses the target.
pub(crate) fn bisect_increasing(
    what: &'static str,
    mut f: impl FnMut(f64) -> Result<f64>,
    target: f64,
    lo: f64,
    hi: f64,
    f_tol: f64,
    max_iterations: usize,
) -> Result<Root> {
    const MAX_GROWTH: usize = 48;
    const MONOTONE_SLACK: f64 = 1e-8;
    let (mut lo, mut hi) = (lo, hi);
    let mut f_lo = f(lo)?;
    let mut f_hi = f(hi)?;
    let mut iterations = 2;
    let mut grow = 0;
    while f_lo > target {
        if (f_lo - target).abs() <= f_tol {
            return Ok(Root { x: lo, value: f_lo, iterations });
        }
        if grow == MAX_GROWTH {
            return Err(Error::Bracket { what, lo, hi, f_lo, f_hi, target });
        }
        let width = hi - lo;
        hi = lo;
        f_hi = f_lo;
        lo -= 2.0 * width;
        f_lo = f(lo)?;
        iterations += 1;
        grow += 1;
    }
    while f_hi < target {
        if (f_hi - target).abs() <= f_tol {
            return Ok(Root { x: hi, value: f_hi, iterations });
        }
        if grow == MAX_GROWTH {
            return Err(Error::Bracket { what, lo, hi, f_lo, f_hi, target });
        }
        let width = hi - lo;
        lo = hi;
        f_lo = f_hi;
        hi += 2.0 * width;
        f_hi = f(hi)?;
        iterations += 1;
        grow += 1;
    }
    let mut best = if (f_lo - target).abs() <= (f_hi - target).abs() {
        Root { x: lo, value: f_lo, iterations }
    } else {
        Root { x: hi, value: f_hi, iterations }
    };
    for _ in 0..max_iterations {
        if (best.value - target).abs() <= f_tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if !(mid > lo && mid < hi) {
            break;
        }
        let f_mid = f(mid)?;
        iterations += 1;
        if f_mid < f_lo - MONOTONE_SLACK || f_mid > f_hi + MONOTONE_SLACK {
            return Err(Error::NoConvergence {
                what,
                iterations,
                residual: f_mid - target,
            });
        }
        if (f_mid - target).abs() < (best.value - target).abs() {
            best = Root { x: mid, value: f_mid, iterations };
        }
        if f_mid < target {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    best.iterations = iterations;
    Ok(best)
}

/// Outcome of the radius search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct RadiusSearch {
    pub radius: f64,
    pub iterations: usize,
}

/// Largest ρ (to `tol`) for which `certifies(ρ)` holds, assuming the
/// predicate is monotone nonincreasing in ρ. Returns 0 if ρ = tol fails.
pub(crate) fn radius_bisection(
    mut certifies: impl FnMut(f64) -> Result<bool>,
    initial_upper: f64,
    tol: f64,
) -> Result<RadiusSearch> {
    let mut iterations = 1;
    if !certifies(tol)? {
        return Ok(RadiusSearch { radius: 0.0, iterations });
    }
    let mut lo = tol;
    let mut hi = initial_upper.max(2.0 * tol);
    let mut doublings = 0;
    loop {
        iterations += 1;
        if !certifies(hi)? {
            break;
        }
        lo = hi;
        hi *= 2.0;
        doublings += 1;
        if doublings > 40 {
            return Err(Error::NoConvergence {
                what: "radius upper bound",
                iterations,
                residual: hi,
            });
        }
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        iterations += 1;
        if certifies(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RadiusSearch { radius: lo, iterations })
}
