//! Connectivity maximization for UAV networks assisted by a reconfigurable
//! intelligent surface (RIS).
//!
//! The crate models a ground/air network of UEs and UAVs whose links come from
//! SNR thresholds, and picks the single UE → RIS → UAV reflected link whose
//! addition maximizes the algebraic connectivity λ₂ of the network graph.
//!
//! Modules, bottom-up:
//!
//! - [`scenario`]: radio parameters, RIS geometry, seeded random placement and
//!   the JSON configuration file.
//! - [`channel`]: direct and reflected SNRs, planar-array LoS channels and RIS
//!   phase configurations.
//! - [`linalg`]: dense symmetric matrices, a cyclic Jacobi eigensolver and a
//!   faster tridiagonal QL path with inverse iteration.
//! - [`graph`]: the network graph, incidence vectors, Laplacian and λ₂.
//! - [`optimizer`]: candidate enumeration, linear search for one UE, the convex
//!   relaxation with max-entry rounding for many UEs, and baselines.
//! - [`harness`]: Monte Carlo instances, parameter sweeps and CSV output.
//!
//! The `examples/` directory walks through each of these in turn.

// `!(x > 0.0)` is deliberate throughout: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channel;
pub mod error;
pub mod graph;
pub mod harness;
pub mod linalg;
pub mod optimizer;
pub mod scenario;

pub use error::{Error, Result};
