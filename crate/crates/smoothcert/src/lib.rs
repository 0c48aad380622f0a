//! Certified ℓ₂ radii for randomized smoothing under Exponential Standard
//! Gaussian (ESG) and Exponential General Gaussian (EGG) noise.
//!
//! The crate covers single-distribution Neyman–Pearson certification,
//! double-sampling certification with a truncated companion distribution,
//! the concentration lower-bound tables, and a Monte-Carlo harness with
//! synthetic classifiers.

// `!(x > 0.0)` is used deliberately so NaN fails validation; series
// coefficients keep their published digits.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod batch;
pub mod distribution;
pub mod dsrs;
pub mod error;
pub mod harness;
pub mod integrate;
pub mod io;
mod kernel;
pub mod lower_bound;
pub mod np;
pub mod parallel;
pub mod solve;
pub mod special;
pub mod studies;

pub use distribution::{DistributionSpec, Family, KPreset};
pub use error::{Error, Result};
pub use integrate::Integrator;
pub use parallel::Execution;
pub use solve::{CertificationResult, Method, SolverOptions};
