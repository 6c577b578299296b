//! Exact arithmetic: finite fields, polynomials, rational functions and
//! linear algebra over them.

pub mod field;
pub mod graded;
pub mod linalg;
pub mod matrix;
pub mod pid;
pub mod poly;
pub mod ratfunc;
pub mod upoly;

pub use field::{FiniteField, Field, Fp, Gf, GfElem, Ring};
pub use matrix::Matrix;
pub use poly::{Mono, Poly, PolyRing};
pub use ratfunc::{RatFunc, RatFuncField};
pub use upoly::UPoly;
