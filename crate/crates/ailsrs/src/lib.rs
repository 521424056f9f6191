//! Derivative-free adversarial imitation learning with linear policies.
//!
//! The crate trains linear policies by antithetic random search in parameter
//! space, either against a true environment reward (expert training) or
//! against a least-squares-GAN discriminator score over expert demonstrations
//! (imitation without environment reward). Everything is seeded through
//! counter-based random streams so runs are reproducible bit-for-bit,
//! independent of rollout parallelism.

pub mod dataset;
pub mod disc;
pub mod envs;
pub mod error;
pub mod imitation;
pub mod linalg;
pub mod policy;
pub mod rng;
pub mod rollout;
pub mod search;
pub mod stats;
pub mod streams;

pub use error::{Error, Result};
