//! Splitting types of kernel and image bundles over lines `P^1 ⊂ E(r, g)`.

mod split;
mod system;

pub use split::{
    default_d_max, graded_image_hilbert, graded_kernel_hilbert, image_charts, image_splitting, kernel_piece,
    kernel_splitting, saturated_image_hilbert, saturated_image_piece, splitting_from_hilbert, splitting_with_window,
    ImageCharts, SplittingReport, SplittingType,
};
pub use system::{build_p1, dehomogenize, dehomogenize_upoly, P1LocusJson, P1Param, P1System};
