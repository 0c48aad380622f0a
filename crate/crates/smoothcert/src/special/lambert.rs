//! Principal branch of the Lambert W function.

use crate::error::{Error, Result};

const INV_E: f64 = 0.367_879_441_171_442_33;

/// W₀(x) for x ≥ -1/e.
pub fn lambert_w0(x: f64) -> Result<f64> {
    if x.is_nan() || x < -INV_E - 4.0 * f64::EPSILON {
        return Err(Error::domain("lambert_w0", format!("x = {x} is below -1/e")));
    }
    if x.is_infinite() {
        return Ok(f64::INFINITY);
    }
    Ok(w0(x.max(-INV_E)))
}

/// W₀(e^{ln_x}) evaluated from the logarithm of its argument, so the
/// argument itself never has to be representable.
pub fn lambert_w0_from_log(ln_x: f64) -> f64 {
    if ln_x.is_nan() {
        return f64::NAN;
    }
    if ln_x == f64::INFINITY {
        return f64::INFINITY;
    }
    if ln_x <= 1.0 {
        return w0(ln_x.exp());
    }
    // solve w + ln w = ln_x; w ≥ 1 here so the iteration is well conditioned
    let mut w = ln_x - ln_x.ln();
    if w < 1.0 {
        w = 1.0;
    }
    for _ in 0..50 {
        let f = w + w.ln() - ln_x;
        let fp = 1.0 + 1.0 / w;
        let fpp = -1.0 / (w * w);
        let step = f / (fp - 0.5 * f * fpp / fp);
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * w {
            break;
        }
    }
    w
}

fn w0(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if x == -INV_E {
        return -1.0;
    }
    let mut w = if x < -0.25 {
        // branch-point series in p = sqrt(2(e x + 1))
        let p = (2.0 * (std::f64::consts::E * x + 1.0)).max(0.0).sqrt();
        -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))))
    } else if x < 3.0 {
        let l = x.ln_1p();
        l * (1.0 - l.ln_1p() / (2.0 + l))
    } else {
        let l1 = x.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    };
    for _ in 0..50 {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        if wp1.abs() < 1e-300 {
            break;
        }
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let step = f / denom;
        if !step.is_finite() {
            break;
        }
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * w.abs().max(1e-300) {
            break;
        }
    }
    w
}
