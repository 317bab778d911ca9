//! The holomorphic-twist and product families: invariants as exact
//! polynomials in t, asymptotic ratios and certified obstruction regions.

pub mod asymptotics;
pub mod specs;
pub mod thresholds;

pub use asymptotics::{asymptotic_verdict, asymptotic_verdict_toward, classify_limit, ratio_limit, AsymptoticVerdict};
pub use specs::{
    product_invariants, twist_invariants, FamilyInvariants, FamilyKind, ProductFamilySpec,
    TwistFamilySpec,
};
pub use thresholds::{
    default_refine_width, obstruction_thresholds, obstruction_thresholds_with, Endpoint, Region,
    Segment, Signs, ThresholdReport,
};
