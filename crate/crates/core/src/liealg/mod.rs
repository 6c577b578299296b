//! Restricted Lie algebras given by structure constants, elementary
//! subalgebras as points, and the classical families.

mod algebra;
pub mod classical;
pub mod orbit;
mod point;

pub use algebra::{AlgebraJson, Check, RealizationJson, RestrictedLieAlgebra, SpanCoordinates, ValidationReport};
pub use point::{is_elementary, EPoint};
