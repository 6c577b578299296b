//! Points, charts and loci of the variety of elementary subalgebras.

pub mod chart;
pub mod enumerate;
pub mod scan;

pub use chart::{chart_of_point, Chart, ChartParam, LocusJson};
pub use enumerate::enumerate_elementary;
pub use scan::{scan_ranks, ScanReport};
