//! Total stability conditions for Dynkin quivers.
//!
//! Enumerates the indecomposable representations of an oriented ADE quiver,
//! computes which dimension vectors occur as submodules of each one, turns the
//! stability requirement for `mu = theta / dim` into a strict homogeneous linear
//! system, and decides that system exactly with a witness or a Gordan certificate.

pub mod arquiver;
pub mod cli;
pub mod error;
pub mod feasibility;
pub mod linalg;
pub mod quiver;
pub mod repr;
pub mod stability;
pub mod submods;

pub use error::{Error, Result};
pub use quiver::{DimVector, DynkinType, Family, Quiver};

/// Default seed for every randomized rank test.
pub const DEFAULT_SEED: u64 = 0xD15EA5E;
