//! Modules over restricted enveloping algebras and their radical and socle
//! series at elementary subalgebras.

pub mod constructions;
mod module;
pub mod series;

pub use module::{validate_module, ModuleJson, UModule};
pub use series::{jordan_type, rad_j, rad_soc_dims, soc_j, JordanType};
