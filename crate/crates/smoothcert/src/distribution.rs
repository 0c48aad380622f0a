//! ESG and EGG smoothing distributions.
//!
//! Both families are isotropic, so everything is expressed through the
//! radial law: ‖z‖₂ = scale · (2u)^{1/η} with u ~ Γ(shape, 1), where
//! shape = (d - 2k)/η (k = 0 for ESG) and `scale` is the formal variance
//! σ_s or σ_g. Truncation at radius T restricts u to u ≤ T^η / (2 scale^η).

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::{Distribution as _, Gamma, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{self, gamma_pq, gamma_quantile, ln_gamma, stirling_correction};

/// Distribution family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Exponential Standard Gaussian, density ∝ exp(-r^η / (2σ_s^η)).
    Esg,
    /// Exponential General Gaussian, density ∝ r^{-2k} exp(-r^η / (2σ_g^η)).
    Egg,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Esg => "esg",
            Family::Egg => "egg",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "esg" => Ok(Family::Esg),
            "egg" => Ok(Family::Egg),
            other => Err(Error::invalid("family", format!("unknown family `{other}` (esg|egg)"))),
        }
    }
}

/// Named (d, k) presets used for the image benchmarks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KPreset {
    /// d = 3072, k = 1530.
    Cifar10,
    /// d = 150528, k = 75260.
    ImageNet,
}

impl KPreset {
    pub fn d(self) -> u64 {
        match self {
            KPreset::Cifar10 => 3072,
            KPreset::ImageNet => 150_528,
        }
    }

    pub fn k(self) -> u64 {
        match self {
            KPreset::Cifar10 => 1530,
            KPreset::ImageNet => 75_260,
        }
    }
}

/// Flat key-value form of a spec: family, d, sigma, eta, k, T (absent = untruncated).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpecRecord {
    pub family: Family,
    pub d: u64,
    pub sigma: f64,
    pub eta: f64,
    #[serde(default)]
    pub k: u64,
    #[serde(rename = "T", default, skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
}

/// A validated smoothing distribution with its derived gamma shape and scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SpecRecord", into = "SpecRecord")]
pub struct DistributionSpec {
    family: Family,
    d: u64,
    sigma: f64,
    eta: f64,
    k: u64,
    truncation: Option<f64>,
    shape: f64,
    ln_scale: f64,
    scale: f64,
}

impl TryFrom<SpecRecord> for DistributionSpec {
    type Error = Error;

    fn try_from(r: SpecRecord) -> Result<Self> {
        DistributionSpec::new(r.family, r.d, r.sigma, r.eta, r.k, r.t)
    }
}

impl From<DistributionSpec> for SpecRecord {
    fn from(s: DistributionSpec) -> Self {
        SpecRecord {
            family: s.family,
            d: s.d,
            sigma: s.sigma,
            eta: s.eta,
            k: s.k,
            t: s.truncation,
        }
    }
}

/// lnΓ(x + h) - lnΓ(x) without differencing two large log-gammas.
pub(crate) fn ln_gamma_ratio(x: f64, h: f64) -> f64 {
    if x >= 10.0 {
        (x - 0.5) * (h / x).ln_1p() + h * (x + h).ln() - h + stirling_correction(x + h)
            - stirling_correction(x)
    } else {
        ln_gamma(x + h) - ln_gamma(x)
    }
}

impl DistributionSpec {
    /// Validating constructor.
    pub fn new(
        family: Family,
        d: u64,
        sigma: f64,
        eta: f64,
        k: u64,
        truncation: Option<f64>,
    ) -> Result<Self> {
        if d == 0 {
            return Err(Error::invalid("d", "dimension must be at least 1"));
        }
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::invalid("sigma", format!("{sigma} must be positive")));
        }
        if !(eta > 0.0) || !eta.is_finite() {
            return Err(Error::invalid("eta", format!("{eta} must be positive")));
        }
        match family {
            Family::Esg if k != 0 => {
                return Err(Error::invalid("k", "ESG requires k = 0"));
            }
            Family::Egg if 2 * k >= d => {
                return Err(Error::invalid("k", format!("EGG requires d - 2k >= 1 (d = {d}, k = {k})")));
            }
            _ => {}
        }
        if let Some(t) = truncation {
            if !(t > 0.0) || !t.is_finite() {
                return Err(Error::invalid("T", format!("{t} must be positive and finite")));
            }
        }
        let n = (d - 2 * k) as f64;
        let shape = n / eta;
        let ln_scale = -std::f64::consts::LN_2 / eta
            + 0.5 * ((d as f64).ln() - ln_gamma_ratio(shape, 2.0 / eta))
            + sigma.ln();
        Ok(Self {
            family,
            d,
            sigma,
            eta,
            k,
            truncation,
            shape,
            ln_scale,
            scale: ln_scale.exp(),
        })
    }

    /// Untruncated ESG.
    pub fn esg(d: u64, sigma: f64, eta: f64) -> Result<Self> {
        Self::new(Family::Esg, d, sigma, eta, 0, None)
    }

    /// Untruncated EGG.
    pub fn egg(d: u64, sigma: f64, eta: f64, k: u64) -> Result<Self> {
        Self::new(Family::Egg, d, sigma, eta, k, None)
    }

    /// Same distribution truncated at radius `t`.
    pub fn with_truncation(&self, t: f64) -> Result<Self> {
        Self::new(self.family, self.d, self.sigma, self.eta, self.k, Some(t))
    }

    /// Same distribution without truncation.
    pub fn untruncated(&self) -> Self {
        Self {
            truncation: None,
            ..*self
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn truncation(&self) -> Option<f64> {
        self.truncation
    }

    /// Gamma shape of the radial variable u: (d - 2k)/η.
    pub fn shape(&self) -> f64 {
        self.shape
    }

    /// Beta parameter (d - 1)/2 of the ω formulas.
    pub fn beta_alpha(&self) -> f64 {
        (self.d as f64 - 1.0) / 2.0
    }

    /// Level-set exponent 2k/η (zero for ESG).
    pub fn level_exponent(&self) -> f64 {
        2.0 * self.k as f64 / self.eta
    }

    /// σ_s (ESG) or σ_g (EGG): the scale calibrated so that E‖z‖² = dσ².
    pub fn formal_scale(&self) -> f64 {
        self.scale
    }

    pub fn ln_formal_scale(&self) -> f64 {
        self.ln_scale
    }

    /// Large-d approximation (η/2)^{1/η} σ d^{1/2 - 1/η} of σ_s.
    pub fn formal_scale_approx(&self) -> Result<f64> {
        if self.family != Family::Esg {
            return Err(Error::invalid("family", "the σ_s approximation is defined for ESG only"));
        }
        let eta = self.eta;
        Ok((0.5 * eta).powf(1.0 / eta) * self.sigma * (self.d as f64).powf(0.5 - 1.0 / eta))
    }

    /// Radius → gamma variable, u = r^η / (2 scale^η).
    #[inline]
    pub fn radius_to_u(&self, r: f64) -> f64 {
        0.5 * (self.eta * (r.ln() - self.ln_scale)).exp()
    }

    /// Gamma variable → radius, r = scale (2u)^{1/η}.
    #[inline]
    pub fn u_to_radius(&self, u: f64) -> f64 {
        ((2.0 * u).ln() / self.eta + self.ln_scale).exp()
    }

    /// u-threshold of the truncation ball, if any.
    pub fn truncation_u(&self) -> Option<f64> {
        self.truncation.map(|t| self.radius_to_u(t))
    }

    /// P{‖z‖₂ ≤ radius} under the untruncated law.
    pub fn mass_within(&self, radius: f64) -> f64 {
        if radius <= 0.0 {
            return 0.0;
        }
        gamma_pq(self.shape, self.radius_to_u(radius)).0
    }

    /// Ratio constant C = 1 / P{‖z‖₂ ≤ T} between truncated and untruncated densities.
    pub fn ratio_constant(&self) -> Result<f64> {
        let t = self
            .truncation
            .ok_or_else(|| Error::invalid("T", "ratio constant needs a truncated spec"))?;
        let mass = self.mass_within(t);
        if mass <= 0.0 {
            return Err(Error::invalid("T", format!("truncation radius {t} captures no mass")));
        }
        Ok(1.0 / mass)
    }

    /// Radius capturing probability `kappa` of the untruncated law,
    /// scale · (2 Λ^{-1}_shape(κ))^{1/η}.
    pub fn radius_for_mass(&self, kappa: f64) -> Result<f64> {
        if !(kappa > 0.0 && kappa < 1.0) {
            return Err(Error::invalid("kappa", format!("{kappa} must lie in (0, 1)")));
        }
        Ok(self.u_to_radius(gamma_quantile(self.shape, kappa)))
    }

    /// ln K in ln φ(r) = ln K - a ln u - u, with a = 2k/η and
    /// u = r^η / (2 scale^η); includes ln C when truncated.
    fn ln_density_const(&self) -> f64 {
        let d = self.d as f64;
        let ln_2s = std::f64::consts::LN_2 + self.eta * self.ln_scale;
        let mut k = (0.5 * self.eta).ln() + ln_gamma(0.5 * d) - ln_gamma(self.shape)
            - 0.5 * d * std::f64::consts::PI.ln()
            - (self.shape + self.level_exponent()) * ln_2s;
        if let Some(t) = self.truncation {
            k -= gamma_pq(self.shape, self.radius_to_u(t)).0.ln();
        }
        k
    }

    /// ln of the density shared by all points of norm r (−∞ beyond T).
    pub fn log_pdf(&self, r: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(Error::domain("log_pdf", format!("r = {r} must be positive")));
        }
        if self.truncation.is_some_and(|t| r > t) {
            return Ok(f64::NEG_INFINITY);
        }
        // ln u from ln r directly so tiny radii do not underflow
        let ln_u = self.eta * (r.ln() - self.ln_scale) - std::f64::consts::LN_2;
        let a = self.level_exponent();
        let pow = if a == 0.0 { 0.0 } else { a * ln_u };
        Ok(self.ln_density_const() - pow - ln_u.exp())
    }

    /// ln of the density of ‖z‖₂ at r (zero mass beyond T when truncated).
    pub fn log_radial_density(&self, r: f64) -> f64 {
        match self.log_pdf(r) {
            Ok(v) if v > f64::NEG_INFINITY => {
                v + special::log_hypersphere_surface(self.d, r).unwrap_or(f64::NEG_INFINITY)
            }
            _ => f64::NEG_INFINITY,
        }
    }

    /// Radius at which the density equals y (for EGG the density is
    /// unbounded at the origin, so every y > 0 has a preimage).
    pub fn pdf_inv(&self, y: f64) -> Result<f64> {
        if !(y > 0.0) {
            return Err(Error::domain("pdf_inv", format!("y = {y} must be positive")));
        }
        self.pdf_inv_log(y.ln())
    }

    /// [`Self::pdf_inv`] taking ln y, for densities far below f64 range.
    pub fn pdf_inv_log(&self, ln_y: f64) -> Result<f64> {
        let a = self.level_exponent();
        let m = self.ln_density_const() - ln_y;
        let u = if a == 0.0 {
            if m < 0.0 {
                return Err(Error::domain(
                    "pdf_inv",
                    "y exceeds the density maximum at the origin",
                ));
            }
            m
        } else {
            a * special::lambert_w0_from_log(m / a - a.ln())
        };
        let r = self.u_to_radius(u);
        if let Some(t) = self.truncation {
            if r > t * (1.0 + 1e-12) {
                return Err(Error::domain("pdf_inv", "level lies outside the truncation ball"));
            }
        }
        Ok(r)
    }

    /// (r, φ(r)·S_d(r)) pairs: the density of ‖z‖₂ on a radius grid.
    pub fn radial_density_curve(&self, r_grid: &[f64]) -> Vec<(f64, f64)> {
        r_grid
            .iter()
            .map(|&r| (r, self.log_radial_density(r).exp()))
            .collect()
    }

    /// One draw of ‖z‖₂. Truncated specs use the inverse CDF restricted to
    /// the truncation ball.
    pub fn sample_radius<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let u = match self.truncation {
            None => Gamma::new(self.shape, 1.0)
                .expect("shape validated at construction")
                .sample(rng),
            Some(t) => {
                let mass = gamma_pq(self.shape, self.radius_to_u(t)).0;
                let p: f64 = rng.random::<f64>() * mass;
                if p <= 0.0 {
                    0.0
                } else {
                    gamma_quantile(self.shape, p)
                }
            }
        };
        let r = self.u_to_radius(u);
        match self.truncation {
            Some(t) => r.min(t),
            None => r,
        }
    }

    /// One d-dimensional draw: sampled radius times a uniform direction.
    pub fn sample_vector<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        let r = self.sample_radius(rng);
        let mut v: Vec<f64> = (0..self.d).map(|_| StandardNormal.sample(rng)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in &mut v {
            *x *= r / norm;
        }
        v
    }
}
