//! Built-in algebras, modules and loci.

pub mod classical;
pub mod entries;
pub mod semidirect;
pub mod sl2;
pub mod small;

pub use classical::{cominuscule_identities, cominuscule_table, make_classical, CominusculeEntry, CominusculeReport};
pub use semidirect::{make_semidirect, semidirect_algebra, semidirect_line, SemidirectKind};
pub use sl2::{make_sl2_pims, make_sl2_r, regular_module, sl2_nilcone_line, Pim, PimSummary, Sl2Sum};
pub use small::{heisenberg_algebra, make_heisenberg, make_jump_fixture, Heisenberg, TwoParameterFixture};
pub use entries::{build_entry, catalog_bundle, catalog_entry, catalog_list, emit_bundle, Built, CatalogBundle, CatalogEntry};
