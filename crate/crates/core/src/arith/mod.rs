//! Exact scalar, polynomial and combinatorial arithmetic.

pub mod binom;
pub mod limit;
pub mod poly;
pub mod rational;
pub mod roots;

pub use binom::{binom, choose};
pub use limit::{rational_function_limit, Direction, Limit};
pub use poly::PolyQ;
pub use rational::{GaussianRational, Rational};
pub use roots::{isolate_common_roots, isolate_real_roots, Domain, IsolatingInterval, SturmSequence};
