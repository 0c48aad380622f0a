//! Double-sampling certification: the correct-class probability A under P
//! and B under a truncated companion Q = P restricted to ‖z‖₂ ≤ T.
//!
//! Q's density is C·p inside the ball and 0 outside, so the worst-case
//! region uses the multiplier ν₁ + Cν₂ inside the ball and ν₁ outside.
//! P_Q(W) therefore depends on the combination alone and fixes it from B;
//! the part of P_P(W) outside the ball then fixes ν₁ from A - B/C.

use serde::{Deserialize, Serialize};

use crate::distribution::DistributionSpec;
use crate::error::{Error, Result};
use crate::kernel::{Kernel, Side};
use crate::np::at;
use crate::solve::{
    bisect_increasing, radius_bisection, CertificationResult, Method, SolverOptions,
};
use crate::special::std_normal_cdf_inv;

/// Initial half-width of both log-multiplier brackets.
const NU_BRACKET: f64 = 60.0;
/// Slack on the feasibility inequalities.
const FEASIBILITY_SLACK: f64 = 1e-12;

/// Where a probability pair came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    #[default]
    Exact,
    ClopperPearson,
}

/// Correct-class probabilities under P (A) and Q (B).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityPair {
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: f64,
    #[serde(default)]
    pub provenance: Provenance,
}

impl ProbabilityPair {
    pub fn new(a: f64, b: f64, provenance: Provenance) -> Result<Self> {
        for (name, v) in [("A", a), ("B", b)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::invalid(name, format!("{v} is not a probability")));
            }
        }
        Ok(Self { a, b, provenance })
    }

    pub fn exact(a: f64, b: f64) -> Result<Self> {
        Self::new(a, b, Provenance::Exact)
    }
}

/// Check B/C ≤ A ≤ 1 - (1-B)/C and 0 ≤ B ≤ 1; `Err` names the violation.
pub fn feasibility_check(a: f64, b: f64, c: f64) -> std::result::Result<(), String> {
    if !(c >= 1.0) {
        return Err(format!("ratio constant C = {c} is below 1"));
    }
    if !(0.0..=1.0).contains(&b) {
        return Err(format!("B = {b} is not a probability"));
    }
    if !(0.0..=1.0).contains(&a) {
        return Err(format!("A = {a} is not a probability"));
    }
    let lower = b / c;
    let upper = 1.0 - (1.0 - b) / c;
    if a < lower - FEASIBILITY_SLACK {
        return Err(format!("A = {a} < B/C = {lower}"));
    }
    if a > upper + FEASIBILITY_SLACK {
        return Err(format!("A = {a} > 1 - (1-B)/C = {upper}"));
    }
    Ok(())
}

/// Truncation radius capturing probability κ of P.
pub fn heuristic_t(spec: &DistributionSpec, kappa: f64) -> Result<f64> {
    spec.untruncated().radius_for_mass(kappa)
}

/// Inputs of one double-sampling certification.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DsrsProblem {
    pub p_spec: DistributionSpec,
    pub q_spec: DistributionSpec,
    pub pair: ProbabilityPair,
    pub tol: f64,
}

impl DsrsProblem {
    pub fn new(p_spec: DistributionSpec, q_spec: DistributionSpec, pair: ProbabilityPair) -> Result<Self> {
        Self::with_tol(p_spec, q_spec, pair, 1e-6)
    }

    /// Q is P truncated at radius `t`.
    pub fn truncated(p_spec: DistributionSpec, t: f64, pair: ProbabilityPair) -> Result<Self> {
        let q = p_spec.with_truncation(t)?;
        Self::new(p_spec, q, pair)
    }

    pub fn with_tol(
        p_spec: DistributionSpec,
        q_spec: DistributionSpec,
        pair: ProbabilityPair,
        tol: f64,
    ) -> Result<Self> {
        if p_spec.truncation().is_some() {
            return Err(Error::invalid("p_spec", "P must be untruncated"));
        }
        let t = q_spec
            .truncation()
            .ok_or_else(|| Error::invalid("q_spec", "Q must carry a truncation radius"))?;
        if p_spec.with_truncation(t)? != q_spec {
            return Err(Error::invalid("q_spec", "Q must differ from P only by its truncation"));
        }
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::invalid("tol", format!("{tol} must be positive")));
        }
        let pair = ProbabilityPair::new(pair.a, pair.b, pair.provenance)?;
        let c = q_spec.ratio_constant()?;
        feasibility_check(pair.a, pair.b, c).map_err(|violation| Error::Infeasible { violation })?;
        Ok(Self { p_spec, q_spec, pair, tol })
    }

    pub fn ratio_constant(&self) -> f64 {
        self.q_spec.ratio_constant().unwrap_or(f64::INFINITY)
    }
}

/// Solved multipliers, stored as the two log combinations the ω formulas use.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DualSolution {
    /// ln(-ν₁); -∞ when ν₁ ≥ 0.
    pub log_neg_nu1: f64,
    /// Whether ν₁ ≥ 0, in which case the outer part of W is empty.
    pub nu1_nonnegative: bool,
    /// ln(-(ν₁ + Cν₂)); +∞ in the B = 1 limit.
    pub log_neg_combined: f64,
    #[serde(rename = "residual_A")]
    pub residual_a: f64,
    #[serde(rename = "residual_B")]
    pub residual_b: f64,
    pub iterations: usize,
}

/// P_P(W), P_Q(W) and P_{P+δ}(W) for the worst-case region W.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThreeMasses {
    pub p_mass: f64,
    pub q_mass: f64,
    pub shifted_mass: f64,
}

struct Setup {
    kernel: Kernel,
    shape: f64,
    u_t: f64,
    c: f64,
}

impl Setup {
    fn new(problem: &DsrsProblem, rho: f64) -> Result<Self> {
        let q = &problem.q_spec;
        Ok(Self {
            kernel: Kernel::new(q, rho)?,
            shape: q.shape(),
            u_t: q.truncation_u().unwrap_or(f64::INFINITY),
            c: q.ratio_constant()?,
        })
    }

    fn cuts(&self, l: f64, side: Side) -> Vec<f64> {
        self.kernel.branch_points(l, side).into_iter().collect()
    }

    /// E[ω♮(u, L) 1{u ≤ u_T}].
    fn inside_natural(&self, l: f64, opts: &SolverOptions) -> Result<f64> {
        let k = &self.kernel;
        opts.integrator
            .expect_on(self.shape, |u| k.omega_natural(u, l), 0.0, self.u_t, &self.cuts(l, Side::Natural))
    }

    /// E[ω♮(u, L) 1{u > u_T}].
    fn outside_natural(&self, l: f64, opts: &SolverOptions) -> Result<f64> {
        let k = &self.kernel;
        opts.integrator.expect_on(
            self.shape,
            |u| k.omega_natural(u, l),
            self.u_t,
            f64::INFINITY,
            &self.cuts(l, Side::Natural),
        )
    }

    fn shifted(&self, dual: &DualSolution, opts: &SolverOptions) -> Result<f64> {
        let k = &self.kernel;
        let lc = dual.log_neg_combined;
        let inner = opts.integrator.expect(
            self.shape,
            |u| k.omega_inner(u, lc),
            &self.cuts(lc, Side::Sharp),
        )?;
        if dual.nu1_nonnegative {
            return Ok(inner);
        }
        let l1 = dual.log_neg_nu1;
        let outer = opts.integrator.expect(
            self.shape,
            |u| k.omega_outer(u, l1),
            &self.cuts(l1, Side::Sharp),
        )?;
        Ok(inner + outer)
    }

    fn masses(&self, dual: &DualSolution, opts: &SolverOptions) -> Result<ThreeMasses> {
        let inside = self.inside_natural(dual.log_neg_combined, opts)?;
        let outside = if dual.nu1_nonnegative {
            0.0
        } else {
            self.outside_natural(dual.log_neg_nu1, opts)?
        };
        Ok(ThreeMasses {
            p_mass: inside + outside,
            q_mass: self.c * inside,
            shifted_mass: self.shifted(dual, opts)?,
        })
    }

    fn solve(&self, pair: &ProbabilityPair, opts: &SolverOptions) -> Result<DualSolution> {
        let (a, b, c) = (pair.a, pair.b, self.c);
        let tol = opts.dual_tol;
        let mut iterations = 0;
        let (lc, inside) = if b >= 1.0 - tol / c {
            (f64::INFINITY, 1.0 / c)
        } else if b <= tol {
            (f64::NEG_INFINITY, 0.0)
        } else {
            let root = bisect_increasing(
                "combined multiplier ln(-(ν₁+Cν₂))",
                |l| Ok(c * self.inside_natural(l, opts)?),
                b,
                -NU_BRACKET,
                NU_BRACKET,
                tol,
                opts.max_iterations,
            )?;
            iterations += root.iterations;
            (root.x, root.value / c)
        };
        let target = a - inside;
        let tail = 1.0 - 1.0 / c;
        let (l1, nonneg, outside) = if target <= tol {
            (f64::NEG_INFINITY, true, 0.0)
        } else if target >= tail - tol {
            (f64::INFINITY, false, tail)
        } else {
            let root = bisect_increasing(
                "multiplier ln(-ν₁)",
                |l| self.outside_natural(l, opts),
                target,
                -NU_BRACKET,
                NU_BRACKET,
                tol,
                opts.max_iterations,
            )?;
            iterations += root.iterations;
            (root.x, false, root.value)
        };
        Ok(DualSolution {
            log_neg_nu1: l1,
            nu1_nonnegative: nonneg,
            log_neg_combined: lc,
            residual_a: inside + outside - a,
            residual_b: c * inside - b,
            iterations,
        })
    }
}

/// Solve both dual constraints at shift ρ.
pub fn solve_duals(problem: &DsrsProblem, rho: f64, opts: &SolverOptions) -> Result<DualSolution> {
    Setup::new(problem, rho)?.solve(&problem.pair, opts)
}

/// The three probabilities of the region defined by `dual` at shift ρ.
pub fn dsrs_three_masses(
    problem: &DsrsProblem,
    rho: f64,
    dual: &DualSolution,
    opts: &SolverOptions,
) -> Result<ThreeMasses> {
    Setup::new(problem, rho)?.masses(dual, opts)
}

/// Double-sampling certification with default solver options.
pub fn dsrs_certify(problem: &DsrsProblem) -> Result<CertificationResult> {
    dsrs_certify_with(problem, &SolverOptions::default())
}

/// Largest ρ with P_{P+δ}(W) > ½ at the solved duals; +∞ when the pair
/// sits on the upper feasibility edge and every radius certifies.
pub fn dsrs_certify_with(problem: &DsrsProblem, opts: &SolverOptions) -> Result<CertificationResult> {
    let mut inner = 0;
    let mut evaluate = |rho: f64| -> Result<(bool, DualSolution, f64)> {
        let setup = Setup::new(problem, rho)?;
        let dual = setup.solve(&problem.pair, opts).map_err(|e| at(rho, e))?;
        inner += dual.iterations;
        let shifted = setup.shifted(&dual, opts).map_err(|e| at(rho, e))?;
        Ok((shifted > 0.5, dual, shifted))
    };
    let sigma = problem.p_spec.sigma();
    let mut upper = 20.0 * sigma * std_normal_cdf_inv(problem.pair.a.clamp(1e-300, 1.0 - 1e-16))?.max(1.0);
    let mut out = CertificationResult::zero(Method::Dsrs);
    let (a, b, c) = (problem.pair.a, problem.pair.b, problem.ratio_constant());
    if a >= 1.0 - (1.0 - b) / c - opts.dual_tol {
        // On the upper feasibility edge W holds the whole exterior of the
        // ball. Once the shifted ball is empty the predicate cannot fail, so
        // either it holds there (every radius certifies) or that radius
        // brackets the search.
        let mut far = upper.max(problem.q_spec.truncation().unwrap_or(upper));
        for _ in 0..60 {
            if ball_shift_mass(&problem.q_spec, far, opts)? < 1e-12 {
                break;
            }
            far *= 2.0;
        }
        out.outer_iterations = 1;
        if evaluate(far)?.0 {
            out.radius = f64::INFINITY;
            out.margin = 0.5;
            out.inner_iterations = inner;
            return Ok(out);
        }
        upper = far;
    }
    let search = radius_bisection(|rho| evaluate(rho).map(|e| e.0), upper, problem.tol)?;
    out.outer_iterations += search.iterations;
    if search.radius > 0.0 {
        let (_, dual, shifted) = evaluate(search.radius)?;
        out.radius = search.radius;
        out.residual = dual.residual_a.abs().max(dual.residual_b.abs());
        out.margin = shifted - 0.5;
        out.log_neg_nu1 = Some(dual.log_neg_nu1);
        out.log_neg_combined = Some(dual.log_neg_combined);
    }
    out.inner_iterations = inner;
    Ok(out)
}

/// E_u[Ψ((T² - (t-ρ)²)/(4ρt))]: the shifted mass of the truncation ball,
/// which is the certification predicate in the B = 1 limit.
pub fn ball_shift_mass(q_spec: &DistributionSpec, rho: f64, opts: &SolverOptions) -> Result<f64> {
    if q_spec.truncation().is_none() {
        return Err(Error::invalid("q_spec", "needs a truncation radius"));
    }
    let k = Kernel::new(q_spec, rho)?;
    opts.integrator.expect(q_spec.shape(), |u| k.omega_ball(u), &[])
}

/// B = 1 certification: no duals, only the ball-shift predicate.
pub fn dsrs_certify_b1(p_spec: &DistributionSpec, q_spec: &DistributionSpec) -> Result<CertificationResult> {
    dsrs_certify_b1_with(p_spec, q_spec, 1e-6, &SolverOptions::default())
}

pub fn dsrs_certify_b1_with(
    p_spec: &DistributionSpec,
    q_spec: &DistributionSpec,
    tol: f64,
    opts: &SolverOptions,
) -> Result<CertificationResult> {
    let t = q_spec
        .truncation()
        .ok_or_else(|| Error::invalid("q_spec", "needs a truncation radius"))?;
    if p_spec.untruncated() != q_spec.untruncated() {
        return Err(Error::invalid("q_spec", "Q must differ from P only by its truncation"));
    }
    let search = radius_bisection(|rho| Ok(ball_shift_mass(q_spec, rho, opts)? >= 0.5), t, tol)?;
    let mut out = CertificationResult::zero(Method::DsrsB1);
    out.radius = search.radius;
    out.outer_iterations = search.iterations;
    if search.radius > 0.0 {
        out.margin = ball_shift_mass(q_spec, search.radius, opts)? - 0.5;
    }
    Ok(out)
}
