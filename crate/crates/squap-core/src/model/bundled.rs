//! The bundled ontology, catalog, alignment, and example files, embedded
//! at build time. `export` writes these bytes verbatim, which keeps the
//! exported files byte-identical across runs.

use crate::rdf::Graph;
use crate::turtle;

pub const TBOX_TTL: &str = include_str!("../../data/squap.ttl");
pub const CATALOG_TTL: &str = include_str!("../../data/factors.ttl");
pub const ALIGNMENTS_TTL: &str = include_str!("../../data/alignments-dul.ttl");

fn parse_bundled(name: &str, source: &str) -> Graph {
    match turtle::parse(source, None) {
        Ok((graph, _)) => graph,
        Err(e) => panic!("bundled file {name} does not parse: {e}"),
    }
}

/// The SQuAP TBox: subclass, disjointness, transitivity, chain, and
/// cardinality declarations, plus pattern annotations and the punned
/// characteristic individuals.
pub fn bundled_tbox() -> Graph {
    parse_bundled("squap.ttl", TBOX_TTL)
}

/// The factor catalog as a raw graph; feed it to
/// [`FactorCatalog::load`](super::FactorCatalog::load) for the
/// structured form.
pub fn bundled_catalog_graph() -> Graph {
    parse_bundled("factors.ttl", CATALOG_TTL)
}

/// The DOLCE+DnS UltraLight alignment tables, as data only.
pub fn bundled_alignments() -> Graph {
    parse_bundled("alignments-dul.ttl", ALIGNMENTS_TTL)
}

/// The example datasets shipped with the engine.
pub mod fixtures {
    use super::*;

    pub const GQM_TTL: &str = include_str!("../../data/examples/gqm.ttl");
    pub const DOGFOODING_TTL: &str = include_str!("../../data/examples/dogfooding.ttl");

    /// The GQM assessment example.
    pub fn gqm() -> Graph {
        parse_bundled("gqm.ttl", GQM_TTL)
    }

    /// The dogfooding example (the ontology measuring its own
    /// documentation).
    pub fn dogfooding() -> Graph {
        parse_bundled("dogfooding.ttl", DOGFOODING_TTL)
    }
}
