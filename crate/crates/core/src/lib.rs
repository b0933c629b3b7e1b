//! Exact first-order algebra of the two-dimensional twisted Moyal plane,
//! with numeric cross-checks and a conformance report generator.

pub mod algebra;
pub mod error;
pub mod scalar;

pub use algebra::{Coefficient, Monomial, NormTag, NormalizedState, TwistedElement, Var};
pub use scalar::Scalar;
pub mod conformance;
pub mod numeric;
pub mod report;
pub mod sample;
pub mod star;
pub mod states;
