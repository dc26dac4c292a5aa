//! Punning registry: which IRIs play class roles, individual roles, or
//! both.
//!
//! SQuAP puns factors and characteristics: one IRI is read as a class or
//! as an individual depending on syntactic context. The registry keeps
//! the two facets separate instead of renaming; assertions made against
//! one facet never leak into the other.

use std::collections::{BTreeMap, BTreeSet};

use crate::rdf::{Graph, Term};
use crate::vocab::{owl, rdf, rdfs};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Facets {
    pub class: bool,
    pub individual: bool,
}

impl Facets {
    pub fn is_punned(&self) -> bool {
        self.class && self.individual
    }

    pub fn is_empty(&self) -> bool {
        !self.class && !self.individual
    }
}

#[derive(Debug, Clone, Default)]
struct Entry {
    facets: Facets,
    /// Classes this IRI is an instance of (its meta-types when punned).
    types: BTreeSet<String>,
}

/// Facet roles per IRI, derived from one scan of a graph.
#[derive(Debug, Clone, Default)]
pub struct EntityRegistry {
    entries: BTreeMap<String, Entry>,
}

/// OWL/RDFS meta-types that declare structure rather than membership of
/// a domain class.
fn is_meta_type(iri: &str) -> bool {
    matches!(
        iri,
        owl::ONTOLOGY
            | owl::RESTRICTION
            | owl::OBJECT_PROPERTY
            | owl::DATATYPE_PROPERTY
            | owl::TRANSITIVE_PROPERTY
    )
}

fn is_structural_namespace(iri: &str) -> bool {
    iri.starts_with(rdf::NS) || iri.starts_with(rdfs::NS) || iri.starts_with(owl::NS)
}

impl EntityRegistry {
    /// Scans a graph and assigns facets:
    ///
    /// * subject of `rdf:type owl:Class` → class facet (a declaration);
    /// * subject of any other `rdf:type` → individual facet, and the
    ///   object gains the class facet;
    /// * both sides of `rdfs:subClassOf` → class facet;
    /// * object of a non-structural object property → individual facet.
    ///
    /// OWL structural typings (`owl:Restriction`, property declarations,
    /// `owl:Ontology`) assign no domain facet, and blank nodes are not
    /// tracked.
    pub fn from_graph(graph: &Graph) -> Self {
        let mut registry = EntityRegistry::default();
        let rdf_type = rdf::type_term();
        for triple in graph.iter() {
            let (s, p, o) = (triple.subject(), triple.predicate(), triple.object());
            let Some(pred) = p.iri_str() else { continue };
            if *p == rdf_type {
                let Some(obj) = o.iri_str() else { continue };
                if obj == owl::CLASS {
                    registry.mark_class(s);
                } else if is_meta_type(obj) {
                    // structural declaration, no domain facet
                } else {
                    registry.mark_individual_typed(s, obj);
                    registry.mark_class(o);
                }
            } else if pred == rdfs::SUB_CLASS_OF {
                registry.mark_class(s);
                registry.mark_class(o);
            } else if !is_structural_namespace(pred) && (o.is_iri() || o.is_blank()) {
                registry.mark_individual(o);
            }
        }
        registry
    }

    fn mark_class(&mut self, term: &Term) {
        if let Some(iri) = term.iri_str() {
            self.entries.entry(iri.to_owned()).or_default().facets.class = true;
        }
    }

    fn mark_individual(&mut self, term: &Term) {
        if let Some(iri) = term.iri_str() {
            self.entries
                .entry(iri.to_owned())
                .or_default()
                .facets
                .individual = true;
        }
    }

    fn mark_individual_typed(&mut self, term: &Term, class: &str) {
        if let Some(iri) = term.iri_str() {
            let entry = self.entries.entry(iri.to_owned()).or_default();
            entry.facets.individual = true;
            entry.types.insert(class.to_owned());
        }
    }

    /// The facets of an IRI; an IRI the graph never mentions has none.
    pub fn facets(&self, iri: &str) -> Facets {
        self.entries.get(iri).map(|e| e.facets).unwrap_or_default()
    }

    /// The classes this IRI is asserted to be an instance of.
    pub fn types_of(&self, iri: &str) -> impl Iterator<Item = &str> {
        self.entries
            .get(iri)
            .into_iter()
            .flat_map(|e| e.types.iter().map(String::as_str))
    }

    /// IRIs holding both facets.
    pub fn punned(&self) -> impl Iterator<Item = &str> {
        self.entries
            .iter()
            .filter(|(_, e)| e.facets.is_punned())
            .map(|(iri, _)| iri.as_str())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Convenience wrapper over [`EntityRegistry::from_graph`].
pub fn registry_of(graph: &Graph) -> EntityRegistry {
    EntityRegistry::from_graph(graph)
}
