//! Expectations E_{u~Γ(shape,1)}[f(u)].
//!
//! Two schemes: the uniform-grid trapezoid over the Chebyshev concentration
//! interval (LNI), and adaptive Gauss–Kronrod over the whole support with
//! caller-supplied breakpoints at the kinks of f.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{gamma_ln_pdf, ln_gamma};

/// Linear Numerical Integration settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LniConfig {
    pub segments: usize,
    /// Probability mass allowed outside the integration interval.
    pub iota: f64,
}

impl Default for LniConfig {
    fn default() -> Self {
        Self {
            segments: 256,
            iota: 1e-4,
        }
    }
}

impl LniConfig {
    pub fn validate(&self) -> Result<()> {
        if self.segments < 2 {
            return Err(Error::invalid("segments", "at least 2 segments are required"));
        }
        if !(self.iota > 0.0 && self.iota < 1.0) {
            return Err(Error::invalid("iota", format!("{} must lie in (0, 1)", self.iota)));
        }
        Ok(())
    }

    /// [lower, upper] = [max(0, (1-ε)s), (1+ε)s] with ε = √(1/(ι s)).
    pub fn interval(&self, shape: f64) -> (f64, f64) {
        let eps = (1.0 / (self.iota * shape)).sqrt();
        (((1.0 - eps) * shape).max(0.0), (1.0 + eps) * shape)
    }
}

/// Adaptive quadrature settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdaptiveConfig {
    /// Absolute tolerance on the expectation.
    pub tol: f64,
    /// Maximum number of subintervals before giving up.
    pub max_intervals: usize,
}

impl Default for AdaptiveConfig {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            max_intervals: 4000,
        }
    }
}

/// Which scheme the certifiers use for their expectations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "scheme", rename_all = "lowercase")]
pub enum Integrator {
    Adaptive(AdaptiveConfig),
    Lni(LniConfig),
}

impl Default for Integrator {
    fn default() -> Self {
        Integrator::Adaptive(AdaptiveConfig {
            tol: 1e-11,
            max_intervals: 4000,
        })
    }
}

impl Integrator {
    /// E[f(u) 1{lo ≤ u ≤ hi}] for u ~ Γ(shape, 1). Breakpoints are only used
    /// by the adaptive scheme.
    pub fn expect_on<F: Fn(f64) -> f64>(
        &self,
        shape: f64,
        f: F,
        lo: f64,
        hi: f64,
        breakpoints: &[f64],
    ) -> Result<f64> {
        match self {
            Integrator::Adaptive(cfg) => {
                expectation_adaptive_on(shape, f, lo, hi, breakpoints, cfg).map(|e| e.value)
            }
            Integrator::Lni(cfg) => expectation_lni_on(shape, f, lo, hi, cfg),
        }
    }

    /// E[f(u)] over the full support.
    pub fn expect<F: Fn(f64) -> f64>(&self, shape: f64, f: F, breakpoints: &[f64]) -> Result<f64> {
        self.expect_on(shape, f, 0.0, f64::INFINITY, breakpoints)
    }
}

/// LNI expectation over the concentration interval; the mass outside is dropped.
pub fn expectation_lni<F: Fn(f64) -> f64>(shape: f64, f: F, cfg: &LniConfig) -> Result<f64> {
    expectation_lni_on(shape, f, 0.0, f64::INFINITY, cfg)
}

fn expectation_lni_on<F: Fn(f64) -> f64>(
    shape: f64,
    f: F,
    lo: f64,
    hi: f64,
    cfg: &LniConfig,
) -> Result<f64> {
    check_shape(shape)?;
    cfg.validate()?;
    let (a, b) = cfg.interval(shape);
    let (a, b) = (a.max(lo), b.min(hi));
    if b <= a {
        return Ok(0.0);
    }
    let n = cfg.segments;
    let h = (b - a) / n as f64;
    let mut sum = 0.0;
    let mut comp = 0.0;
    for i in 0..=n {
        let u = a + h * i as f64;
        let ln_pdf = gamma_ln_pdf(shape, u);
        // a shape < 1 density is infinite at the origin; that node is skipped
        let v = if ln_pdf.is_finite() { f(u) * ln_pdf.exp() } else { 0.0 };
        let w = if i == 0 || i == n { 0.5 } else { 1.0 };
        // Kahan summation, left to right
        let y = w * v - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    Ok(sum * h)
}

/// Result of an adaptive expectation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Expectation {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Adaptive expectation over (0, ∞) with absolute tolerance `tol`.
pub fn expectation_adaptive<F: Fn(f64) -> f64>(shape: f64, f: F, tol: f64) -> Result<f64> {
    let cfg = AdaptiveConfig {
        tol,
        ..AdaptiveConfig::default()
    };
    expectation_adaptive_on(shape, f, 0.0, f64::INFINITY, &[], &cfg).map(|e| e.value)
}

/// Adaptive expectation with explicit breakpoints.
pub fn expectation_adaptive_with<F: Fn(f64) -> f64>(
    shape: f64,
    f: F,
    breakpoints: &[f64],
    cfg: &AdaptiveConfig,
) -> Result<Expectation> {
    expectation_adaptive_on(shape, f, 0.0, f64::INFINITY, breakpoints, cfg)
}

fn check_shape(shape: f64) -> Result<()> {
    if !(shape > 0.0) || !shape.is_finite() {
        return Err(Error::domain("expectation", format!("shape = {shape} must be positive")));
    }
    Ok(())
}

/// Tail bound: the support is cut where the Chernoff bound on the omitted
/// gamma mass drops below e^{-TAIL_LOG}.
const TAIL_LOG: f64 = 42.0;

/// Support [lo, hi] of Γ(shape, 1) outside of which the mass is negligible.
pub fn effective_support(shape: f64) -> (f64, f64) {
    // P(u ≥ s(1+x)) ≤ exp(-s (x - ln(1+x)))
    let target = TAIL_LOG / shape;
    let mut x = (2.0 * target).sqrt() + target;
    for _ in 0..60 {
        let g = x - x.ln_1p() - target;
        let dg = x / (1.0 + x);
        let step = g / dg;
        x -= step;
        if step.abs() < 1e-12 * x {
            break;
        }
    }
    let hi = shape * (1.0 + x) + 1.0;
    // P(u ≤ s(1-y)) ≤ exp(-s (-y - ln(1-y)))
    let lo = if target >= 1.0 {
        0.0
    } else {
        let mut y = (2.0 * target).sqrt().min(0.999);
        for _ in 0..60 {
            let g = -y - (-y).ln_1p() - target;
            let dg = y / (1.0 - y);
            let mut next = y - g / dg;
            if !(next > 0.0 && next < 1.0) {
                next = 0.5 * (y + if g > 0.0 { 0.0 } else { 1.0 });
            }
            if (next - y).abs() < 1e-12 * y {
                y = next;
                break;
            }
            y = next;
        }
        (shape * (1.0 - y)).max(0.0)
    };
    (lo, hi)
}

fn expectation_adaptive_on<F: Fn(f64) -> f64>(
    shape: f64,
    f: F,
    lo: f64,
    hi: f64,
    breakpoints: &[f64],
    cfg: &AdaptiveConfig,
) -> Result<Expectation> {
    check_shape(shape)?;
    if !(cfg.tol > 0.0) {
        return Err(Error::invalid("tol", "tolerance must be positive"));
    }
    let (s_lo, s_hi) = effective_support(shape);
    let a = lo.max(s_lo);
    let b = hi.min(s_hi);
    if !(b > a) {
        return Ok(Expectation {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
        });
    }
    if shape < 1.0 {
        // w = u^shape removes the integrable singularity at the origin:
        // dΓ = e^{-u} dw / Γ(shape + 1)
        let inv = 1.0 / shape;
        let ln_norm = -ln_gamma(shape + 1.0);
        let g = |w: f64| {
            let u = w.powf(inv);
            f(u) * (ln_norm - u).exp()
        };
        let map = |u: f64| u.powf(shape);
        let bps: Vec<f64> = breakpoints.iter().map(|&u| map(u)).collect();
        gauss_kronrod(g, map(a), map(b), &bps, cfg)
    } else {
        let g = |u: f64| {
            let ln_pdf = gamma_ln_pdf(shape, u);
            if ln_pdf == f64::NEG_INFINITY {
                0.0
            } else {
                f(u) * ln_pdf.exp()
            }
        };
        gauss_kronrod(g, a, b, breakpoints, cfg)
    }
}

// 21-point Kronrod extension of the 10-point Gauss rule.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_932_303_836,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[derive(Debug, Clone, Copy)]
struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Piece {}

impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn kronrod_piece<G: Fn(f64) -> f64>(g: &G, a: f64, b: f64) -> Piece {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = g(centre);
    let mut resk = WGK[10] * fc;
    let mut resg = 0.0;
    let mut resabs = resk.abs();
    let mut fv = [0.0_f64; 20];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = g(centre - dx);
        let f2 = g(centre + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * resk;
    let mut resasc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        resasc += WGK[j] * ((fv[2 * j] - mean).abs() + (fv[2 * j + 1] - mean).abs());
    }
    let value = resk * half;
    resabs *= half.abs();
    resasc *= half.abs();
    let mut error = ((resk - resg) * half).abs();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }
    Piece { a, b, value, error }
}

/// Globally adaptive Gauss–Kronrod 21 on [a, b], pre-split at breakpoints.
fn gauss_kronrod<G: Fn(f64) -> f64>(
    g: G,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    cfg: &AdaptiveConfig,
) -> Result<Expectation> {
    let mut cuts: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|&x| x.is_finite() && x > a && x < b)
        .collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut edges = Vec::with_capacity(cuts.len() + 2);
    edges.push(a);
    edges.extend(cuts);
    edges.push(b);

    let mut heap = BinaryHeap::new();
    let mut evaluations = 0;
    for w in edges.windows(2) {
        if w[1] > w[0] {
            heap.push(kronrod_piece(&g, w[0], w[1]));
            evaluations += 21;
        }
    }
    let total_err = |h: &BinaryHeap<Piece>| h.iter().map(|p| p.error).sum::<f64>();
    let mut err = total_err(&heap);
    while err > cfg.tol {
        if heap.len() >= cfg.max_intervals {
            return Err(Error::NoConvergence {
                what: "adaptive quadrature",
                iterations: heap.len(),
                residual: err,
            });
        }
        let worst = heap.pop().expect("heap is non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            // interval at floating-point resolution; accept it as is
            heap.push(Piece { error: 0.0, ..worst });
            err = total_err(&heap);
            continue;
        }
        heap.push(kronrod_piece(&g, worst.a, mid));
        heap.push(kronrod_piece(&g, mid, worst.b));
        evaluations += 42;
        err = total_err(&heap);
    }
    let mut pieces = heap.into_vec();
    pieces.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value = pieces.iter().map(|p| p.value).sum();
    Ok(Expectation {
        value,
        error_estimate: err,
        evaluations,
    })
}
