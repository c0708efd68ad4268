//! Causal-arrow algebra over network dyads, growing-network samplers and
//! their asymptotic analytics.
//!
//! * [`arrows`]: arrow types, composition, transitive closure, the 96
//!   deletion-invariant and 21 closed meta-DAG classes, and their poset.
//! * [`network`]: the affine preferential-attachment model with sequential
//!   and block-parallel samplers and the edge-list format.
//! * [`dorpa`]: the exponential-link variant with trigger-based sequential
//!   and event-driven samplers.
//! * [`analytics`]: degree statistics, regime predictions and fits.
//! * [`verify`]: the acceptance checks shared by tests and the CLI.

pub mod analytics;
pub mod arrows;
pub mod dorpa;
pub mod error;
pub mod network;
pub mod rng;
pub mod verify;

pub use error::{Error, Result};
