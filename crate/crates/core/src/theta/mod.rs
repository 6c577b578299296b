//! Kernel and image sheaves of a module over a parametrized chart of
//! E(r, g): generic ranks, fibers and constancy certificates.

mod report;
mod system;

pub use report::{
    all_parameter_points, bundle_certificate, fiber_compare, kernel_module_basis, BundleCertificate, FiberRecord,
    GenericRanks, SheafReport,
};
pub use system::{build_theta, check_degree, check_operators, generic_rank, operator_of_column, ThetaSystem};
