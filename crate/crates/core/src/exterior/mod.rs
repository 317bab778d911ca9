//! Brute-force exterior algebra over the standard symplectic model space
//! (ℝ²ⁿ, J, ω, g), used as an exact oracle for the pointwise identities.

pub mod forms;
pub mod multivector;
pub mod sample;
pub mod signature;

pub use forms::{
    decompose, pairing, verify_hodge_riemann, verify_omega_power_identity,
    verify_square_identity, HodgeRiemannCheck, IdentityCheck, SquareIdentityCheck,
    TypeDecomposition,
};
pub use multivector::{ModelSpace, MultiVector};
pub use signature::{signature_of_pairing, Inertia};

/// Default upper limit on the half-dimension for exhaustive checks.
pub const DEFAULT_MAX_N: usize = 6;
