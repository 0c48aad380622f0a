//! Monte-Carlo pipeline with synthetic base classifiers: sample under P,
//! pick T, sample under the truncated Q, bound both rates by Clopper–Pearson,
//! repair the pair to feasibility and certify with DSRS and NP.
//!
//! The synthetic classifiers decide from the noise norm alone, so every
//! probability the certifiers consume is exact for them. Draws are split
//! into fixed-size chunks, each with its own ChaCha stream keyed by
//! (seed, stream, chunk), so counts do not depend on scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::distribution::DistributionSpec;
use crate::dsrs::{dsrs_certify_with, feasibility_check, heuristic_t, DsrsProblem, ProbabilityPair, Provenance};
use crate::error::{Error, Result};
use crate::np::{np_certify_with, NpProblem};
use crate::parallel::Execution;
use crate::solve::SolverOptions;
use crate::special::beta_inc_inv;

/// Schema tag embedded in serialized pipeline reports.
pub const REPORT_SCHEMA: &str = "smoothcert.pipeline-report.v1";

/// Draws per RNG chunk.
const CHUNK: u64 = 4096;

/// Decision rule of a synthetic classifier, as a function of ‖z‖₂.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassifierKind {
    /// Always right inside the ball of radius `t_star`, always wrong outside.
    Concentrated { t_star: f64 },
    /// Right with probability `p_inner` inside the ball, `p_outer` outside.
    Shell { t_star: f64, p_inner: f64, p_outer: f64 },
    AlwaysCorrect,
    AlwaysWrong,
}

/// A radius-only base classifier.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SyntheticClassifier {
    #[serde(flatten)]
    pub kind: ClassifierKind,
}

impl SyntheticClassifier {
    pub fn new(kind: ClassifierKind) -> Result<Self> {
        match kind {
            ClassifierKind::Concentrated { t_star } => check_radius(t_star)?,
            ClassifierKind::Shell { t_star, p_inner, p_outer } => {
                check_radius(t_star)?;
                for (name, p) in [("p_inner", p_inner), ("p_outer", p_outer)] {
                    if !(0.0..=1.0).contains(&p) {
                        return Err(Error::invalid(name, format!("{p} is not a probability")));
                    }
                }
            }
            ClassifierKind::AlwaysCorrect | ClassifierKind::AlwaysWrong => {}
        }
        Ok(Self { kind })
    }

    /// Probability of a correct prediction on noise of norm `r`.
    pub fn correct_probability(&self, r: f64) -> f64 {
        match self.kind {
            ClassifierKind::Concentrated { t_star } => f64::from(r <= t_star),
            ClassifierKind::Shell { t_star, p_inner, p_outer } => {
                if r <= t_star {
                    p_inner
                } else {
                    p_outer
                }
            }
            ClassifierKind::AlwaysCorrect => 1.0,
            ClassifierKind::AlwaysWrong => 0.0,
        }
    }

    /// Exact success probability under `spec` (for oracle checks).
    pub fn exact_probability(&self, spec: &DistributionSpec) -> f64 {
        let within = |t: f64| match spec.truncation() {
            Some(big_t) if t >= big_t => 1.0,
            Some(_) => spec.untruncated().mass_within(t) * spec.ratio_constant().unwrap_or(1.0),
            None => spec.mass_within(t),
        };
        match self.kind {
            ClassifierKind::Concentrated { t_star } => within(t_star),
            ClassifierKind::Shell { t_star, p_inner, p_outer } => {
                let m = within(t_star);
                p_inner * m + p_outer * (1.0 - m)
            }
            ClassifierKind::AlwaysCorrect => 1.0,
            ClassifierKind::AlwaysWrong => 0.0,
        }
    }
}

fn check_radius(t: f64) -> Result<()> {
    if !(t > 0.0) {
        return Err(Error::invalid("t_star", format!("{t} must be positive")));
    }
    Ok(())
}

/// Sample sizes and significance levels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplingConfig {
    pub n1: u64,
    pub n2: u64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub n_np: u64,
    pub alpha_np: f64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        Self {
            n1: 50_000,
            n2: 50_000,
            alpha1: 5e-4,
            alpha2: 5e-4,
            n_np: 100_000,
            alpha_np: 1e-3,
        }
    }
}

impl SamplingConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, n) in [("n1", self.n1), ("n2", self.n2), ("n_np", self.n_np)] {
            if n == 0 {
                return Err(Error::invalid(name, "sample size must be positive"));
            }
        }
        for (name, a) in [("alpha1", self.alpha1), ("alpha2", self.alpha2), ("alpha_np", self.alpha_np)] {
            if !(a > 0.0 && a < 1.0) {
                return Err(Error::invalid(name, format!("{a} must lie in (0, 1)")));
            }
        }
        Ok(())
    }
}

/// Identifies an independent, reproducible draw sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawStream {
    pub seed: u64,
    pub stream: u32,
}

fn chunk_rng(stream: DrawStream, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(stream.seed);
    rng.set_stream((u64::from(stream.stream) << 40) | chunk);
    rng
}

/// Count correct predictions over `n` noise draws from `spec`.
pub fn estimate_probability(
    classifier: &SyntheticClassifier,
    spec: &DistributionSpec,
    n: u64,
    stream: DrawStream,
    exec: Execution,
) -> (u64, u64) {
    let chunks = n.div_ceil(CHUNK) as usize;
    let counts = exec.map_range(chunks, |c| {
        let c = c as u64;
        let mut rng = chunk_rng(stream, c);
        let draws = CHUNK.min(n - c * CHUNK);
        let mut hits = 0u64;
        for _ in 0..draws {
            let r = spec.sample_radius(&mut rng);
            let p = classifier.correct_probability(r);
            let coin: f64 = rng.random();
            if coin < p {
                hits += 1;
            }
        }
        hits
    });
    (counts.iter().sum(), n)
}

/// One-sided Clopper–Pearson lower confidence bound at level 1 - α.
pub fn clopper_pearson_lower(successes: u64, n: u64, alpha: f64) -> Result<f64> {
    if successes > n || n == 0 {
        return Err(Error::invalid("successes", format!("{successes} of {n} is not a valid count")));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::invalid("alpha", format!("{alpha} must lie in (0, 1)")));
    }
    if successes == 0 {
        return Ok(0.0);
    }
    if successes == n {
        return Ok(alpha.powf(1.0 / n as f64));
    }
    beta_inc_inv(successes as f64, (n - successes + 1) as f64, alpha)
}

/// Repair (A₁, B₁) into a feasible pair that never certifies more than the
/// inputs: B is lowered to C·A when above it, and A is lowered to
/// (B + C - 1)/C when B sits below the lower edge.
pub fn conservative_pair(a1: f64, b1: f64, c: f64) -> Result<ProbabilityPair> {
    if !(c >= 1.0 && c.is_finite()) {
        return Err(Error::invalid("C", format!("{c} must be finite and at least 1")));
    }
    let mut a = a1.clamp(0.0, 1.0);
    let mut b = b1.clamp(0.0, 1.0);
    if b > c * a {
        b = c * a;
    }
    if b < c * (a - 1.0) + 1.0 {
        a = ((b + c - 1.0) / c).max(0.0);
    }
    ProbabilityPair::new(a, b.min(1.0), Provenance::ClopperPearson)
}

/// Everything a pipeline run measured and certified.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SamplingReport {
    pub schema: String,
    pub seed: u64,
    pub spec: DistributionSpec,
    pub classifier: SyntheticClassifier,
    pub config: SamplingConfig,
    pub successes_p: u64,
    pub successes_q: u64,
    pub successes_np: u64,
    #[serde(rename = "A1")]
    pub a1: f64,
    #[serde(rename = "B1")]
    pub b1: f64,
    #[serde(rename = "A_np")]
    pub a_np: f64,
    pub kappa: f64,
    #[serde(rename = "T")]
    pub t: f64,
    #[serde(rename = "C")]
    pub c: f64,
    pub pair: Option<ProbabilityPair>,
    /// Whether the conservative repair changed (A₁, B₁).
    pub pair_adjusted: bool,
    /// Label of the repair rule used for the pair.
    pub pair_rule: String,
    pub radius_dsrs: Option<f64>,
    pub radius_np: Option<f64>,
}

impl SamplingReport {
    /// CSV header matching [`Self::csv_row`].
    pub const CSV_HEADER: &'static str =
        "schema,seed,family,d,sigma,eta,k,successes_p,successes_q,successes_np,A1,B1,A_np,kappa,T,C,A,B,pair_adjusted,radius_dsrs,radius_np";

    pub fn csv_row(&self) -> String {
        let opt = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.schema,
            self.seed,
            self.spec.family(),
            self.spec.d(),
            self.spec.sigma(),
            self.spec.eta(),
            self.spec.k(),
            self.successes_p,
            self.successes_q,
            self.successes_np,
            self.a1,
            self.b1,
            self.a_np,
            self.kappa,
            self.t,
            self.c,
            opt(self.pair.map(|p| p.a)),
            opt(self.pair.map(|p| p.b)),
            self.pair_adjusted,
            opt(self.radius_dsrs),
            opt(self.radius_np),
        )
    }
}

/// A pipeline failure, with everything measured so far when sampling
/// already finished.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("pipeline failed: {source}")]
pub struct PipelineError {
    pub report: Option<Box<SamplingReport>>,
    pub source: Error,
}

impl From<Error> for PipelineError {
    fn from(source: Error) -> Self {
        PipelineError { report: None, source }
    }
}

/// Options of a pipeline run beyond the sampling sizes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PipelineOptions {
    /// Mass of P inside T; defaults to the P success rate.
    pub kappa: Option<f64>,
    pub solver: SolverOptions,
    pub tol: f64,
    pub exec: Execution,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self {
            kappa: None,
            solver: SolverOptions::default(),
            tol: 1e-6,
            exec: Execution::default(),
        }
    }
}

/// Sample, bound, repair and certify.
pub fn run_pipeline(
    classifier: &SyntheticClassifier,
    spec: &DistributionSpec,
    config: &SamplingConfig,
    seed: u64,
    opts: &PipelineOptions,
) -> std::result::Result<SamplingReport, PipelineError> {
    config.validate()?;
    let spec = spec.untruncated();
    let draw = |stream| DrawStream { seed, stream };
    let (s1, n1) = estimate_probability(classifier, &spec, config.n1, draw(1), opts.exec);
    let a1 = clopper_pearson_lower(s1, n1, config.alpha1)?;
    // keep κ strictly inside (0, 1) so T stays finite and positive
    let edge = 0.5 / n1 as f64;
    let kappa = opts.kappa.unwrap_or(s1 as f64 / n1 as f64).clamp(edge, 1.0 - edge);
    let t = heuristic_t(&spec, kappa)?;
    let q_spec = spec.with_truncation(t)?;
    let c = q_spec.ratio_constant()?;
    let (s2, n2) = estimate_probability(classifier, &q_spec, config.n2, draw(2), opts.exec);
    let b1 = clopper_pearson_lower(s2, n2, config.alpha2)?;
    let (s_np, n_np) = estimate_probability(classifier, &spec, config.n_np, draw(3), opts.exec);
    let a_np = clopper_pearson_lower(s_np, n_np, config.alpha_np)?;
    let pair = conservative_pair(a1, b1, c)?;
    let mut report = SamplingReport {
        schema: REPORT_SCHEMA.to_string(),
        seed,
        spec,
        classifier: *classifier,
        config: *config,
        successes_p: s1,
        successes_q: s2,
        successes_np: s_np,
        a1,
        b1,
        a_np,
        kappa,
        t,
        c,
        pair: Some(pair),
        pair_adjusted: pair.a != a1 || pair.b != b1,
        pair_rule: "minimal-conservative-completion".to_string(),
        radius_dsrs: None,
        radius_np: None,
    };
    let fail = |report: &SamplingReport, source: Error| PipelineError {
        report: Some(Box::new(report.clone())),
        source,
    };
    if let Err(violation) = feasibility_check(pair.a, pair.b, c) {
        return Err(fail(&report, Error::Infeasible { violation }));
    }
    let problem = DsrsProblem::with_tol(spec, q_spec, pair, opts.tol).map_err(|e| fail(&report, e))?;
    report.radius_dsrs = Some(dsrs_certify_with(&problem, &opts.solver).map_err(|e| fail(&report, e))?.radius);
    let np = NpProblem::with_tol(spec, a_np, opts.tol).map_err(|e| fail(&report, e))?;
    report.radius_np = Some(np_certify_with(&np, &opts.solver).map_err(|e| fail(&report, e))?.radius);
    Ok(report)
}
