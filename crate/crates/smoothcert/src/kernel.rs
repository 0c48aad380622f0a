//! Shifted-ball probabilities ω used by every certifier.
//!
//! For a point at gamma coordinate u (radius t = scale·(2u)^{1/η}) and a
//! shift of length ρ, each ω is a symmetric beta CDF of a ratio built from
//! t, ρ and the radius ξ of a density level set. Level sets are indexed by
//! L = ln(-ν): the sharp side at u solves p(ξ) = -ν p(t) and the natural
//! side solves p(t) = -ν p(ξ), so for ESG v = u ± L and for EGG
//! v = a W((u/a) e^{(u ± L)/a}) with a = 2k/η. Only the ratio q = ln(v/u)
//! is carried, which keeps ξ - t accurate when the level set hugs the
//! sphere of radius t; for EGG it is solved from (u/a)(e^q - 1) + q = ±L/a,
//! the same equation the Lambert-W form solves, without the cancellation
//! of ln v - ln u.

use crate::distribution::{DistributionSpec, Family};
use crate::error::{Error, Result};
use crate::special::SymmetricBeta;

/// Which level-set equation ξ solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    /// ξ where the shifted density equals -ν times the base density.
    Sharp,
    /// ξ where the base density equals -ν times the shifted density.
    Natural,
}

/// ω evaluator for one spec and one shift length.
#[derive(Debug, Clone)]
pub(crate) struct Kernel {
    psi: SymmetricBeta,
    family: Family,
    /// 2k/η (EGG) or 0 (ESG).
    a: f64,
    inv_eta: f64,
    ln_scale: f64,
    rho: f64,
    /// Truncation radius, if any.
    t_trunc: Option<f64>,
}

impl Kernel {
    pub fn new(spec: &DistributionSpec, rho: f64) -> Result<Self> {
        if !(rho > 0.0 && rho.is_finite()) {
            return Err(Error::invalid("rho", format!("{rho} must be positive and finite")));
        }
        let a = spec.level_exponent();
        Ok(Self {
            psi: SymmetricBeta::new(spec.beta_alpha())?,
            family: spec.family(),
            a,
            inv_eta: 1.0 / spec.eta(),
            ln_scale: spec.ln_formal_scale(),
            rho,
            t_trunc: spec.truncation(),
        })
    }

    #[inline]
    pub fn radius(&self, u: f64) -> f64 {
        ((2.0 * u).ln() * self.inv_eta + self.ln_scale).exp()
    }

    /// ln(v/u) for the level set at ln(-ν) = `l`; `None` when the level set
    /// is empty (ESG branch v ≤ 0).
    #[inline]
    pub fn level_log_ratio(&self, u: f64, l: f64, side: Side) -> Option<f64> {
        let signed = match side {
            Side::Sharp => l,
            Side::Natural => -l,
        };
        match self.family {
            Family::Esg => {
                let x = signed / u;
                if x <= -1.0 || x.is_nan() {
                    None
                } else {
                    Some(x.ln_1p())
                }
            }
            Family::Egg => Some(egg_log_ratio(u / self.a, signed / self.a)),
        }
    }

    /// ξ and ξ - t for the level set, as radii.
    #[inline]
    fn level(&self, t: f64, q: f64) -> (f64, f64) {
        let g = q * self.inv_eta;
        (t * g.exp(), t * g.exp_m1())
    }

    /// Probability that the shifted sphere of radius t lies inside the
    /// natural-side level set: Ψ(((ρ+t)² - ξ²)/(4ρt)).
    #[inline]
    pub fn omega_natural(&self, u: f64, l: f64) -> f64 {
        let q = match self.level_log_ratio(u, l, Side::Natural) {
            Some(q) => q,
            None => return 1.0,
        };
        let t = self.radius(u);
        let (xi, delta) = self.level(t, q);
        let rho = self.rho;
        self.psi.cdf((rho - delta) * (rho + t + xi) / (4.0 * rho * t))
    }

    /// Probability mass of the sharp-side ball on the sphere of radius t
    /// after shifting: Ψ((ξ² - (t-ρ)²)/(4ρt)).
    #[inline]
    pub fn omega_sharp(&self, u: f64, l: f64) -> f64 {
        let q = match self.level_log_ratio(u, l, Side::Sharp) {
            Some(q) => q,
            None => return 0.0,
        };
        let t = self.radius(u);
        self.sharp_at(t, q)
    }

    #[inline]
    fn sharp_at(&self, t: f64, q: f64) -> f64 {
        let (xi, delta) = self.level(t, q);
        let rho = self.rho;
        self.psi.cdf((delta + rho) * (xi + t - rho) / (4.0 * rho * t))
    }

    /// Share of the sphere of radius t (centred at the shift) inside the
    /// truncation ball: Ψ((T² - (t-ρ)²)/(4ρt)).
    #[inline]
    pub fn omega_ball(&self, u: f64) -> f64 {
        let t = self.radius(u);
        self.ball_at(t)
    }

    #[inline]
    fn ball_at(&self, t: f64) -> f64 {
        let big_t = self.t_trunc.unwrap_or(f64::INFINITY);
        let rho = self.rho;
        self.psi.cdf((big_t - t + rho) * (big_t + t - rho) / (4.0 * rho * t))
    }

    /// Sharp-side mass clipped to the truncation ball (the inner region).
    #[inline]
    pub fn omega_inner(&self, u: f64, l: f64) -> f64 {
        let q = match self.level_log_ratio(u, l, Side::Sharp) {
            Some(q) => q,
            None => return 0.0,
        };
        let t = self.radius(u);
        let big_t = self.t_trunc.unwrap_or(f64::INFINITY);
        if t * (q * self.inv_eta).exp() >= big_t {
            self.ball_at(t)
        } else {
            self.sharp_at(t, q)
        }
    }

    /// Sharp-side mass outside the truncation ball.
    #[inline]
    pub fn omega_outer(&self, u: f64, l: f64) -> f64 {
        let q = match self.level_log_ratio(u, l, Side::Sharp) {
            Some(q) => q,
            None => return 0.0,
        };
        let t = self.radius(u);
        (self.sharp_at(t, q) - self.ball_at(t)).max(0.0)
    }

    /// Breakpoints in u where the ESG level set appears or vanishes.
    pub fn branch_points(&self, l: f64, side: Side) -> Option<f64> {
        if self.family != Family::Esg || !l.is_finite() {
            return None;
        }
        match side {
            Side::Natural if l > 0.0 => Some(l),
            Side::Sharp if l < 0.0 => Some(-l),
            _ => None,
        }
    }
}

/// Root q of c (e^q - 1) + q = y for c > 0.
#[inline]
fn egg_log_ratio(c: f64, y: f64) -> f64 {
    if y.is_infinite() || y == 0.0 {
        return y;
    }
    // the map is convex and increasing and both starts lie right of the
    // root, so Newton decreases monotonically onto it
    let mut q = y / (c + 1.0);
    if y > 0.0 {
        q = q.min((y / c).ln_1p());
    }
    for _ in 0..200 {
        let e = q.exp_m1();
        let g = c * e + q - y;
        if g <= 0.0 {
            break;
        }
        let step = g / (c * (e + 1.0) + 1.0);
        q -= step;
        if step <= 1e-17 * q.abs() {
            break;
        }
    }
    q
}
