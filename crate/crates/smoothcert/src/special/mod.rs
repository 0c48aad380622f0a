//! Scalar special functions in double precision.
//!
//! Quantities that grow with the dimension (gamma functions of d/η, beta
//! prefactors at α = (d-1)/2) are only ever formed in log space.

mod beta;
mod gamma;
mod lambert;
mod normal;

pub use beta::{beta_cdf_sym, beta_inc, beta_inc_inv, SymmetricBeta};
pub use gamma::{
    gamma_cdf, gamma_cdf_inv, gamma_ln_pdf, gamma_sf, log1pmx, log_gamma, stirling_correction,
};
pub use lambert::{lambert_w0, lambert_w0_from_log};
pub use normal::{std_normal_cdf, std_normal_cdf_inv, std_normal_pdf, std_normal_sf};

pub(crate) use gamma::{gamma_pq, gamma_quantile, ln_gamma};

use crate::error::{Error, Result};

/// ln of the surface measure of the radius-r sphere in R^d,
/// d π^{d/2} / Γ(d/2 + 1) · r^{d-1}.
pub fn log_hypersphere_surface(d: u64, r: f64) -> Result<f64> {
    if d == 0 {
        return Err(Error::domain("log_hypersphere_surface", "d must be at least 1"));
    }
    if !(r > 0.0) {
        return Err(Error::domain("log_hypersphere_surface", format!("r = {r} must be positive")));
    }
    let d = d as f64;
    Ok(d.ln() + 0.5 * d * std::f64::consts::PI.ln() - ln_gamma(0.5 * d + 1.0) + (d - 1.0) * r.ln())
}
