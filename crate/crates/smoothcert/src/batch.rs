//! Batch certification: one input record per problem, one output record
//! per input, in input order.
//!
//! Input columns: `method` (np|dsrs), `family`, `d`, `sigma`, `eta`, `k`,
//! optional `T`, `A`, optional `B`, optional `kappa`, optional `tol`.
//! A DSRS record without `T` takes the radius holding mass `kappa`
//! (default ½) of P.

use serde::{Deserialize, Serialize};

use crate::distribution::{DistributionSpec, Family};
use crate::dsrs::{dsrs_certify_with, heuristic_t, DsrsProblem, ProbabilityPair};
use crate::error::{Error, Result};
use crate::np::{np_certify_with, NpProblem};
use crate::parallel::Execution;
use crate::solve::{CertificationResult, SolverOptions};

pub const BATCH_SCHEMA: &str = "smoothcert.batch.v1";

/// Certification kind requested by a batch record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BatchMethod {
    Np,
    Dsrs,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchRecord {
    pub method: BatchMethod,
    pub family: Family,
    pub d: u64,
    pub sigma: f64,
    pub eta: f64,
    #[serde(default)]
    pub k: u64,
    #[serde(rename = "T", default)]
    pub t: Option<f64>,
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B", default)]
    pub b: Option<f64>,
    #[serde(default)]
    pub kappa: Option<f64>,
    #[serde(default)]
    pub tol: Option<f64>,
}

/// Output row; column order is the field order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchResult {
    pub schema: String,
    pub index: usize,
    pub method: BatchMethod,
    pub family: Family,
    pub d: u64,
    pub sigma: f64,
    pub eta: f64,
    pub k: u64,
    #[serde(rename = "T")]
    pub t: Option<f64>,
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: Option<f64>,
    #[serde(rename = "C")]
    pub c: Option<f64>,
    /// `ok` or the error kind.
    pub status: String,
    pub radius: Option<f64>,
    pub outer_iterations: Option<usize>,
    pub inner_iterations: Option<usize>,
    pub residual: Option<f64>,
    pub margin: Option<f64>,
    pub log_neg_nu1: Option<f64>,
    pub log_neg_combined: Option<f64>,
    pub error: Option<String>,
}

/// Certify a single record.
pub fn certify_record(rec: &BatchRecord, opts: &SolverOptions) -> Result<(CertificationResult, Option<f64>, Option<f64>)> {
    let tol = rec.tol.unwrap_or(1e-6);
    let p = DistributionSpec::new(rec.family, rec.d, rec.sigma, rec.eta, rec.k, None)?;
    match rec.method {
        BatchMethod::Np => {
            let problem = NpProblem::with_tol(p, rec.a, tol)?;
            Ok((np_certify_with(&problem, opts)?, None, None))
        }
        BatchMethod::Dsrs => {
            let b = rec.b.ok_or_else(|| Error::invalid("B", "a dsrs record needs B"))?;
            let t = match rec.t {
                Some(t) => t,
                None => heuristic_t(&p, rec.kappa.unwrap_or(0.5))?,
            };
            let q = p.with_truncation(t)?;
            let c = q.ratio_constant()?;
            let problem = DsrsProblem::with_tol(p, q, ProbabilityPair::exact(rec.a, b)?, tol)?;
            Ok((dsrs_certify_with(&problem, opts)?, Some(t), Some(c)))
        }
    }
}

/// Output row for record `index` given its certification outcome.
pub fn result_row(
    index: usize,
    rec: &BatchRecord,
    outcome: &Result<(CertificationResult, Option<f64>, Option<f64>)>,
) -> BatchResult {
    let mut row = BatchResult {
        schema: BATCH_SCHEMA.to_string(),
        index,
        method: rec.method,
        family: rec.family,
        d: rec.d,
        sigma: rec.sigma,
        eta: rec.eta,
        k: rec.k,
        t: rec.t,
        a: rec.a,
        b: rec.b,
        c: None,
        status: "ok".to_string(),
        radius: None,
        outer_iterations: None,
        inner_iterations: None,
        residual: None,
        margin: None,
        log_neg_nu1: None,
        log_neg_combined: None,
        error: None,
    };
    match outcome {
        Ok((r, t, c)) => {
            row.t = t.or(row.t);
            row.c = *c;
            // JSON has no infinity: an unbounded radius is null with its own status
            if r.radius.is_infinite() {
                row.status = "unbounded".to_string();
            } else {
                row.radius = Some(r.radius);
            }
            row.outer_iterations = Some(r.outer_iterations);
            row.inner_iterations = Some(r.inner_iterations);
            row.residual = Some(r.residual);
            row.margin = Some(r.margin);
            row.log_neg_nu1 = r.log_neg_nu1;
            row.log_neg_combined = r.log_neg_combined;
        }
        Err(e) => {
            row.status = e.kind().to_string();
            row.error = Some(e.to_string());
        }
    }
    row
}

/// Certify every record; failures are reported in-row.
pub fn run_batch(records: &[BatchRecord], opts: &SolverOptions, exec: Execution) -> Vec<BatchResult> {
    let indexed: Vec<(usize, &BatchRecord)> = records.iter().enumerate().collect();
    exec.map(&indexed, |&(index, rec)| result_row(index, rec, &certify_record(rec, opts)))
}
