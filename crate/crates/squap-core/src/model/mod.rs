//! The SQuAP model: vocabulary constants, the bundled TBox, catalog, and
//! example data, the punning registry, and OPLa pattern annotations.

mod bundled;
mod catalog;
mod patterns;
mod registry;
pub mod vocab;

pub use bundled::{
    bundled_alignments, bundled_catalog_graph, bundled_tbox, fixtures, ALIGNMENTS_TTL, CATALOG_TTL,
    TBOX_TTL,
};
pub use catalog::{CatalogError, CharacteristicRef, Dimension, FactorCatalog, FactorEntry};
pub use patterns::{pattern_annotations, PatternAnnotation, PatternRelation};
pub use registry::{registry_of, EntityRegistry, Facets};

/// Loads the bundled factor catalog.
pub fn default_catalog() -> FactorCatalog {
    FactorCatalog::load(&bundled_catalog_graph()).expect("the bundled catalog is well-formed")
}
