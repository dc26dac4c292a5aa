//! SQuAP knowledge-graph engine.
//!
//! The crate models software-quality assessments as RDF: measurement
//! results assess quality characteristics drawn from three dimensions
//! (software quality, architectural alignment, process maturity), and
//! relational quality factors tie those characteristics together. On top
//! of an indexed triple store and a Turtle subset reader/writer it
//! provides:
//!
//! * forward-chaining materialization of the ontology's axioms
//!   ([`reasoner`]),
//! * consistency checking and closed-world validation ([`reasoner`]),
//! * inference of the factors enabled by available measurements and
//!   materialization of factor occurrences ([`factors`]),
//! * the five fixed competency queries ([`cq`]).
//!
//! The bundled ontology, factor catalog, and example datasets live in
//! [`model`].

pub mod cq;
pub mod factors;
pub mod model;
pub mod rdf;
pub mod reasoner;
pub mod turtle;
pub mod vocab;

pub use rdf::{Graph, PrefixMap, Term, Triple};
