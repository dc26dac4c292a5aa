//! OPLa pattern annotations: which ontology design patterns the
//! ontology reuses as templates, and which entities are native to a
//! pattern.

use crate::rdf::Graph;
use crate::vocab::opla;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternRelation {
    ReusedAsTemplate,
    NativeTo,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternAnnotation {
    /// The annotated ontology entity (or the ontology itself).
    pub entity: String,
    pub relation: PatternRelation,
    /// The design pattern IRI.
    pub pattern: String,
}

/// Collects every OPLa annotation in the graph, sorted by entity then
/// pattern.
pub fn pattern_annotations(graph: &Graph) -> Vec<PatternAnnotation> {
    let mut out = Vec::new();
    for (property, relation) in [
        (
            opla::REUSES_PATTERN_AS_TEMPLATE,
            PatternRelation::ReusedAsTemplate,
        ),
        (opla::IS_NATIVE_TO, PatternRelation::NativeTo),
    ] {
        let prop = crate::vocab::term(property);
        for triple in graph.matching(None, Some(&prop), None) {
            let (Some(entity), Some(pattern)) =
                (triple.subject().iri_str(), triple.object().iri_str())
            else {
                continue;
            };
            out.push(PatternAnnotation {
                entity: entity.to_owned(),
                relation,
                pattern: pattern.to_owned(),
            });
        }
    }
    out.sort_by(|a, b| (&a.entity, &a.pattern).cmp(&(&b.entity, &b.pattern)));
    out
}
