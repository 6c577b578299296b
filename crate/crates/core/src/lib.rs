pub mod catalog;
pub mod cli;
pub mod error;
pub mod evariety;
pub mod exact;
pub mod liealg;
pub mod modrep;
pub mod p1split;
pub mod theta;

pub use error::{Error, Result};
