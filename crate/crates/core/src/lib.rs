//! Exact evaluation of symplectic Chern-number obstructions to compatible
//! Einstein and Kähler metrics, with the holomorphic-twist and product
//! families, their asymptotics and certified obstruction thresholds.

pub mod arith;
pub mod cli;
pub mod error;
pub mod exterior;
pub mod families;
pub mod invariants;

pub use error::{Error, Result};
