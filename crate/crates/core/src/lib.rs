#![allow(clippy::neg_cmp_op_on_partial_ord)]

//! Explicit bounds for Re ξ′/ξ(s) near the critical line, truncated zero
//! sums over zeta-zero tables, independent quadrature oracles and region
//! scans.

pub mod bounds;
pub mod decimal;
pub mod error;
pub mod oracle;
pub mod quad;
pub mod regions;
pub mod root;
pub mod sums;
pub mod zerodata;

pub use bounds::{BoundParams, EpsilonVariant, Kernel};
pub use decimal::Decimal;
pub use error::{Error, Result};
pub use sums::{EvalPoint, HypotheticalZero};
pub use zerodata::{TableManifest, ZeroTable};

/// Ordinate of the lowest nontrivial zeta zero.
pub const GAMMA1: f64 = 14.134_725_141_734_694;
