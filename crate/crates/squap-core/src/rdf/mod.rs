//! The RDF data model: terms, triples, prefix maps, and an indexed
//! in-memory graph with pattern matching.

mod graph;
mod iso;
mod prefix;
mod term;

pub use graph::{Graph, IndexOrder};
pub use iso::isomorphic;
pub use prefix::PrefixMap;
pub(crate) use term::escape_literal as escape;
pub use term::{BlankNode, Iri, Literal, Term, TermError, Triple, TripleError};
