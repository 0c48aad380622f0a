//! Regularized incomplete beta function, with a dedicated fast path for the
//! symmetric law Beta(α, α) at very large α.
//!
//! The symmetric evaluator follows the TOMS 708 strategy: the Temme-style
//! asymptotic expansion near x = ½ when α > 100, a continued fraction
//! everywhere else. The prefactor x^α(1-x)^α / B(α, α) is assembled from
//! Stirling corrections so nothing overflows at α ≈ 5·10⁵.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::special::gamma::{ln_gamma, stirling_correction};

const FOUR_PI: f64 = 4.0 * std::f64::consts::PI;
const TWO_PI: f64 = 2.0 * std::f64::consts::PI;
const CF_EPS: f64 = 1e-16;
const CF_MAX_ITER: usize = 100_000;

/// Ψ_α(x), the CDF of Beta(α, α); arguments outside [0, 1] clamp.
pub fn beta_cdf_sym(alpha: f64, x: f64) -> Result<f64> {
    Ok(SymmetricBeta::new(alpha)?.cdf(x))
}

/// Beta(α, α) with the α-dependent constants precomputed, for hot loops.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricBeta {
    alpha: f64,
    ln_norm: f64,
    bcorr: f64,
}

impl SymmetricBeta {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::domain(
                "beta_cdf_sym",
                format!("alpha = {alpha} must be positive and finite"),
            ));
        }
        let bcorr = 2.0 * stirling_correction(alpha) - stirling_correction(2.0 * alpha);
        Ok(Self {
            alpha,
            // ln[x^α y^α / B(α,α)] = α ln(4xy) + ln_norm
            ln_norm: 0.5 * (alpha / FOUR_PI).ln() - bcorr,
            bcorr,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Ψ_α(x) with clamping of out-of-range arguments.
    #[inline]
    pub fn cdf(&self, x: f64) -> f64 {
        if x.is_nan() {
            return f64::NAN;
        }
        if x <= 0.0 {
            return 0.0;
        }
        if x >= 1.0 {
            return 1.0;
        }
        if x == 0.5 {
            return 0.5;
        }
        if x < 0.5 {
            self.lower_tail(x)
        } else {
            1.0 - self.lower_tail(1.0 - x)
        }
    }

    /// Density of Beta(α, α).
    pub fn pdf(&self, x: f64) -> f64 {
        if !(x > 0.0 && x < 1.0) {
            return 0.0;
        }
        (self.ln_xy_term(x) - (x * (1.0 - x)).ln()).exp()
    }

    /// Ψ_α^{-1}(p) for p in [0, 1].
    pub fn quantile(&self, p: f64) -> f64 {
        if p <= 0.0 {
            return 0.0;
        }
        if p >= 1.0 {
            return 1.0;
        }
        if p == 0.5 {
            return 0.5;
        }
        let z = crate::special::normal::std_normal_cdf_inv_unchecked(p);
        let guess = (0.5 + z / (2.0 * (2.0 * self.alpha + 1.0).sqrt())).clamp(1e-300, 1.0 - 1e-16);
        invert_cdf(guess, p, |x| self.cdf(x), |x| self.pdf(x))
    }

    /// ln[x^α (1-x)^α / B(α, α)].
    #[inline]
    fn ln_xy_term(&self, x: f64) -> f64 {
        let ln4xy = if x < 0.25 {
            std::f64::consts::LN_2 * 2.0 + x.ln() + (-x).ln_1p()
        } else {
            let e = 1.0 - 2.0 * x;
            (-e * e).ln_1p()
        };
        self.alpha * ln4xy + self.ln_norm
    }

    /// I_x(α, α) for 0 < x < ½.
    #[inline]
    fn lower_tail(&self, x: f64) -> f64 {
        let e = 1.0 - 2.0 * x;
        if self.alpha > 100.0 && e <= 0.03 {
            self.asymptotic(e)
        } else {
            let front = self.ln_xy_term(x).exp();
            if front == 0.0 {
                return 0.0;
            }
            front * beta_cf(self.alpha, self.alpha, x) / self.alpha
        }
    }

    /// Asymptotic expansion for large α with e = 1 - 2x small.
    fn asymptotic(&self, e: f64) -> f64 {
        const E0: f64 = std::f64::consts::FRAC_2_SQRT_PI;
        const E1: f64 = 0.353_553_390_593_273_8; // 2^{-3/2}
        let d = basym_coefficients();
        let f = -self.alpha * (-e * e).ln_1p();
        let t = (-f).exp();
        if t == 0.0 {
            return 0.0;
        }
        let z0 = f.sqrt();
        let z = z0 / E1 * 0.5;
        let z2 = f + f;
        let w0 = 1.0 / (2.0 * self.alpha).sqrt();

        let mut j0 = 0.5 / E0 * erfcx(z0);
        let mut j1 = E1;
        let mut sum = j0 + d[0] * w0 * j1;
        let mut w = w0;
        let mut znm1 = z;
        let mut zn = z2;
        let mut n = 2;
        while n <= BASYM_TERMS {
            j0 = E1 * znm1 + (n as f64 - 1.0) * j0;
            j1 = E1 * zn + n as f64 * j1;
            znm1 *= z2;
            zn *= z2;
            w *= w0;
            let t0 = d[n - 1] * w * j0;
            w *= w0;
            let t1 = d[n] * w * j1;
            sum += t0 + t1;
            if t0.abs() + t1.abs() <= 1e-16 * sum {
                break;
            }
            n += 2;
        }
        E0 * t * (-self.bcorr).exp() * sum
    }
}

const BASYM_TERMS: usize = 20;

/// Series coefficients of the asymptotic expansion for a = b; they do not
/// depend on α, so they are generated once.
fn basym_coefficients() -> &'static [f64; BASYM_TERMS + 1] {
    static COEFFS: OnceLock<[f64; BASYM_TERMS + 1]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        const N: usize = BASYM_TERMS + 1;
        let (h, r0, r1) = (1.0_f64, 0.5_f64, 0.0_f64);
        let mut a0 = [0.0_f64; N];
        let mut b0 = [0.0_f64; N];
        let mut c = [0.0_f64; N];
        let mut d = [0.0_f64; N];
        a0[0] = r1 * 2.0 / 3.0;
        c[0] = -0.5 * a0[0];
        d[0] = -c[0];
        let h2 = h * h;
        let mut hn = 1.0;
        let mut s = 1.0;
        for n in (2..=BASYM_TERMS).step_by(2) {
            hn *= h2;
            a0[n - 1] = r0 * 2.0 * (h * hn + 1.0) / (n as f64 + 2.0);
            let np1 = n + 1;
            s += hn;
            a0[np1 - 1] = r1 * 2.0 * s / (n as f64 + 3.0);
            for i in n..=np1 {
                let r = (i as f64 + 1.0) * -0.5;
                b0[0] = r * a0[0];
                for m in 2..=i {
                    let mut bsum = 0.0;
                    for j in 1..m {
                        let mmj = m - j;
                        bsum += (j as f64 * r - mmj as f64) * a0[j - 1] * b0[mmj - 1];
                    }
                    b0[m - 1] = r * a0[m - 1] + bsum / m as f64;
                }
                c[i - 1] = b0[i - 1] / (i as f64 + 1.0);
                let mut dsum = 0.0;
                for j in 1..i {
                    dsum += d[i - j - 1] * c[j - 1];
                }
                d[i - 1] = -(dsum + c[i - 1]);
            }
        }
        d
    })
}

/// e^{z²} erfc(z) for z ≥ 0.
fn erfcx(z: f64) -> f64 {
    if z < 25.0 {
        (z * z).exp() * libm::erfc(z)
    } else {
        let r = 1.0 / (z * z);
        (1.0 - 0.5 * r * (1.0 - 1.5 * r * (1.0 - 2.5 * r))) / (z * std::f64::consts::PI.sqrt())
    }
}

/// Continued fraction for I_x(a, b) (modified Lentz); converges quickly for
/// x < (a + 1) / (a + b + 2).
fn beta_cf(a: f64, b: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=CF_MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < CF_EPS {
            break;
        }
    }
    h
}

/// x - ln(1 + x).
fn rlog1(x: f64) -> f64 {
    -crate::special::gamma::log1pmx(x)
}

/// ln[x^a y^b / B(a, b)] with y = 1 - x, stable for large a and b.
fn ln_beta_front(a: f64, b: f64, x: f64, y: f64) -> f64 {
    if a.min(b) >= 8.0 {
        let lambda = if a > b { (a + b) * y - b } else { a - (a + b) * x };
        let bcorr = stirling_correction(a) + stirling_correction(b) - stirling_correction(a + b);
        0.5 * (a * b / (TWO_PI * (a + b))).ln() - a * rlog1(-lambda / a) - b * rlog1(lambda / b)
            - bcorr
    } else {
        a * x.ln() + b * y.ln() - (ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b))
    }
}

/// Regularized incomplete beta I_x(a, b).
pub fn beta_inc(a: f64, b: f64, x: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain("beta_inc", format!("a = {a}, b = {b} must be positive")));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain("beta_inc", format!("x = {x} must lie in [0, 1]")));
    }
    Ok(beta_inc_unchecked(a, b, x))
}

fn beta_inc_unchecked(a: f64, b: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let y = 1.0 - x;
    if x < (a + 1.0) / (a + b + 2.0) {
        let front = ln_beta_front(a, b, x, y).exp();
        front * beta_cf(a, b, x) / a
    } else {
        let front = ln_beta_front(b, a, y, x).exp();
        1.0 - front * beta_cf(b, a, y) / b
    }
}

fn beta_pdf(a: f64, b: f64, x: f64) -> f64 {
    if !(x > 0.0 && x < 1.0) {
        return 0.0;
    }
    let y = 1.0 - x;
    (ln_beta_front(a, b, x, y) - x.ln() - y.ln()).exp()
}

/// Inverse of [`beta_inc`] in x.
pub fn beta_inc_inv(a: f64, b: f64, p: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::domain("beta_inc_inv", format!("a = {a}, b = {b} must be positive")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain("beta_inc_inv", format!("p = {p} must lie in [0, 1]")));
    }
    if p == 0.0 {
        return Ok(0.0);
    }
    if p == 1.0 {
        return Ok(1.0);
    }
    let mean = a / (a + b);
    let sd = (a * b / ((a + b) * (a + b) * (a + b + 1.0))).sqrt();
    let z = crate::special::normal::std_normal_cdf_inv_unchecked(p);
    let guess = (mean + z * sd).clamp(1e-12_f64.min(mean * 0.5), 1.0 - 1e-12_f64.min((1.0 - mean) * 0.5));
    Ok(invert_cdf(guess, p, |x| beta_inc_unchecked(a, b, x), |x| beta_pdf(a, b, x)))
}

/// Safeguarded Newton on a CDF supported on [0, 1].
fn invert_cdf(guess: f64, p: f64, cdf: impl Fn(f64) -> f64, pdf: impl Fn(f64) -> f64) -> f64 {
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    let mut x = guess;
    for _ in 0..400 {
        let err = cdf(x) - p;
        if err == 0.0 {
            return x;
        }
        if err > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let dens = pdf(x);
        let mut next = if dens > 0.0 && dens.is_finite() { x - err / dens } else { f64::NAN };
        if !(next > lo && next < hi) {
            next = if lo > 0.0 && hi / lo > 1e3 { (lo * hi).sqrt() } else { 0.5 * (lo + hi) };
        }
        if (next - x).abs() <= 2.0 * f64::EPSILON * next || hi - lo <= 2.0 * f64::EPSILON * hi {
            return next;
        }
        x = next;
    }
    x
}
