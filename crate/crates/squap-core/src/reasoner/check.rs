//! Consistency checking and closed-world validation over a materialized
//! graph.
//!
//! Disjointness clashes are the only source of inconsistencies.
//! Exact-cardinality breaches are only falsifiable when distinct IRIs
//! denote distinct individuals, so they are reported as constraint
//! violations under the unique name assumption flag. The existential and
//! covering axioms are open-world: the strict validator audits them as
//! warnings instead of inferring anything.

use std::collections::BTreeSet;
use std::fmt;

use super::axioms::AxiomSet;
use crate::rdf::{Graph, Term, Triple};
use crate::vocab::rdf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Warning,
    ConstraintViolation,
    Inconsistency,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Severity::Warning => "warning",
            Severity::ConstraintViolation => "constraint-violation",
            Severity::Inconsistency => "inconsistency",
        };
        f.write_str(text)
    }
}

/// One finding: the axioms it cites, its severity, the offending
/// triples, and a human-readable message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    /// Equation numbers of every axiom stating the violated constraint.
    pub equations: Vec<u32>,
    pub severity: Severity,
    pub triples: Vec<Triple>,
    pub message: String,
}

impl Diagnostic {
    /// The rule identifier, e.g. `eq12/eq15`.
    pub fn rule_id(&self) -> String {
        self.equations
            .iter()
            .map(|eq| format!("eq{eq}"))
            .collect::<Vec<_>>()
            .join("/")
    }

    /// Does this diagnostic cite the given equation?
    pub fn cites(&self, eq: u32) -> bool {
        self.equations.contains(&eq)
    }

    /// Machine-readable record: rule id, severity, offending triples in
    /// N-Triples form, and message, tab-separated.
    pub fn to_record(&self) -> String {
        let triples = self
            .triples
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        format!(
            "{}\t{}\t{}\t{}",
            self.rule_id(),
            self.severity,
            triples,
            self.message
        )
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}]: {}",
            self.severity,
            self.rule_id(),
            self.message
        )?;
        for t in &self.triples {
            write!(f, "\n    {t}")?;
        }
        Ok(())
    }
}

fn short(term: &Term) -> String {
    let stems: [(&str, &str); 5] = [
        ("factor", crate::model::vocab::NS_FACTOR),
        ("sw", crate::model::vocab::NS_SOFTWARE_QUALITY),
        ("arc", crate::model::vocab::NS_ARCHITECTURAL_ALIGNMENT),
        ("prc", crate::model::vocab::NS_PROCESS_MATURITY),
        ("squap", crate::model::vocab::NS),
    ];
    match term.iri_str() {
        Some(iri) => {
            for (label, stem) in stems {
                if let Some(local) = iri.strip_prefix(stem) {
                    return format!("{label}:{local}");
                }
            }
            format!("<{iri}>")
        }
        None => term.to_string(),
    }
}

/// Reports every disjointness clash as an inconsistency and, when `una`
/// is set, every exact-cardinality breach as a constraint violation. An
/// empty result means the graph is consistent.
pub fn check_consistency(graph: &Graph, axioms: &AxiomSet, una: bool) -> Vec<Diagnostic> {
    let rdf_type = rdf::type_term();
    let mut out = Vec::new();

    for ax in &axioms.disjointness {
        let class_a = crate::vocab::term(ax.a);
        let class_b = crate::vocab::term(ax.b);
        let in_a: BTreeSet<Term> = graph.instances_of(&class_a).collect();
        let in_b: BTreeSet<Term> = graph.instances_of(&class_b).collect();
        for x in in_a.intersection(&in_b) {
            out.push(Diagnostic {
                equations: ax.eqs.to_vec(),
                severity: Severity::Inconsistency,
                triples: vec![
                    Triple::new_unchecked(x.clone(), rdf_type.clone(), class_a.clone()),
                    Triple::new_unchecked(x.clone(), rdf_type.clone(), class_b.clone()),
                ],
                message: format!(
                    "{} is typed with the disjoint classes {} and {}",
                    short(x),
                    short(&class_a),
                    short(&class_b)
                ),
            });
        }
    }

    if una {
        for ax in &axioms.cardinality {
            let class = crate::vocab::term(ax.class);
            let property = crate::vocab::term(ax.property);
            for x in graph.instances_of(&class) {
                let objects: Vec<Term> = graph.objects(&x, &property).collect();
                if objects.len() >= 2 {
                    let mut triples = vec![Triple::new_unchecked(
                        x.clone(),
                        rdf_type.clone(),
                        class.clone(),
                    )];
                    triples.extend(
                        objects
                            .iter()
                            .map(|o| Triple::new_unchecked(x.clone(), property.clone(), o.clone())),
                    );
                    out.push(Diagnostic {
                        equations: vec![ax.eq],
                        severity: Severity::ConstraintViolation,
                        triples,
                        message: format!(
                            "{} has {} distinct values for {}; exactly one is allowed \
                             under the unique name assumption",
                            short(&x),
                            objects.len(),
                            short(&property)
                        ),
                    });
                }
            }
        }
    }

    out
}

/// Closed-world audit: warns about individuals that do not exhibit the
/// structure the existential, lower-bound cardinality, and covering
/// axioms promise. Useful when a dataset is expected to be complete.
pub fn validate_strict(graph: &Graph, axioms: &AxiomSet) -> Vec<Diagnostic> {
    let rdf_type = rdf::type_term();
    let mut out = Vec::new();

    for ax in &axioms.existential {
        let class = crate::vocab::term(ax.class);
        let properties: Vec<Term> = ax
            .properties
            .iter()
            .map(|p| crate::vocab::term(p))
            .collect();
        for x in graph.instances_of(&class) {
            let satisfied = properties
                .iter()
                .any(|p| graph.objects(&x, p).next().is_some());
            if !satisfied {
                out.push(Diagnostic {
                    equations: vec![ax.eq],
                    severity: Severity::Warning,
                    triples: vec![Triple::new_unchecked(
                        x.clone(),
                        rdf_type.clone(),
                        class.clone(),
                    )],
                    message: format!(
                        "{} is a {} but has no {}",
                        short(&x),
                        short(&class),
                        properties
                            .iter()
                            .map(short)
                            .collect::<Vec<_>>()
                            .join(" or ")
                    ),
                });
            }
        }
    }

    for ax in axioms.cardinality.iter().filter(|ax| ax.strict_lower) {
        let class = crate::vocab::term(ax.class);
        let property = crate::vocab::term(ax.property);
        for x in graph.instances_of(&class) {
            if graph.objects(&x, &property).next().is_none() {
                out.push(Diagnostic {
                    equations: vec![ax.eq],
                    severity: Severity::Warning,
                    triples: vec![Triple::new_unchecked(
                        x.clone(),
                        rdf_type.clone(),
                        class.clone(),
                    )],
                    message: format!(
                        "{} is a {} but has no {} (exactly one is required)",
                        short(&x),
                        short(&class),
                        short(&property)
                    ),
                });
            }
        }
    }

    for ax in &axioms.covering {
        let class = crate::vocab::term(ax.class);
        let subtypes: Vec<Term> = ax.subtypes.iter().map(|s| crate::vocab::term(s)).collect();
        for x in graph.instances_of(&class) {
            let covered = subtypes.iter().any(|s| graph.has(&x, &rdf_type, s));
            if !covered {
                out.push(Diagnostic {
                    equations: vec![ax.eq],
                    severity: Severity::Warning,
                    triples: vec![Triple::new_unchecked(
                        x.clone(),
                        rdf_type.clone(),
                        class.clone(),
                    )],
                    message: format!(
                        "{} is typed {} but none of its covering subtypes ({})",
                        short(&x),
                        short(&class),
                        subtypes.iter().map(short).collect::<Vec<_>>().join(", ")
                    ),
                });
            }
        }
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::fixtures;
    use crate::model::vocab;
    use crate::reasoner::{materialize, AxiomSet};

    fn iri(s: &str) -> Term {
        Term::iri(s).unwrap()
    }

    fn type_triple(s: &str, class: &str) -> Triple {
        Triple::new(iri(s), rdf::type_term(), iri(class)).unwrap()
    }

    fn closure_of(graph: &Graph) -> Graph {
        materialize(graph, &AxiomSet::standard()).into_graph()
    }

    #[test]
    fn gqm_fixture_is_consistent() {
        let closure = closure_of(&fixtures::gqm());
        let diags = check_consistency(&closure, &AxiomSet::standard(), true);
        assert!(diags.is_empty(), "unexpected diagnostics: {diags:?}");
    }

    #[test]
    fn injected_dimension_clash_is_one_inconsistency() {
        let mut graph = fixtures::gqm();
        // sw:Compatibility is a SoftwareQuality in the catalog; type it
        // ProcessMaturity as well to force the clash.
        graph.insert(type_triple(
            "https://w3id.org/squap/SoftwareQuality/Compatibility",
            vocab::SOFTWARE_QUALITY,
        ));
        graph.insert(type_triple(
            "https://w3id.org/squap/SoftwareQuality/Compatibility",
            vocab::PROCESS_MATURITY,
        ));
        let closure = closure_of(&graph);
        let diags = check_consistency(&closure, &AxiomSet::standard(), true);
        let clashes: Vec<&Diagnostic> = diags
            .iter()
            .filter(|d| d.severity == Severity::Inconsistency)
            .collect();
        assert_eq!(clashes.len(), 1);
        assert!(clashes[0].cites(12));
        assert!(clashes[0].cites(15));
        assert_eq!(clashes[0].rule_id(), "eq12/eq15");
        assert_eq!(clashes[0].triples.len(), 2);
    }

    #[test]
    fn second_value_breaches_cardinality_under_una() {
        let mut graph = fixtures::gqm();
        graph.insert(
            Triple::new(
                iri("https://w3id.org/squap/examples/gqm/compatibility-result"),
                iri(vocab::HAS_VALUE),
                iri("https://w3id.org/squap/examples/gqm/sonarqube-value-a"),
            )
            .unwrap(),
        );
        let closure = closure_of(&graph);
        let diags = check_consistency(&closure, &AxiomSet::standard(), true);
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].severity, Severity::ConstraintViolation);
        assert!(diags[0].cites(22));

        // Without the unique name assumption the breach is unprovable.
        let relaxed = check_consistency(&closure, &AxiomSet::standard(), false);
        assert!(relaxed.is_empty());
    }

    #[test]
    fn dogfooding_fixture_passes_strict_validation() {
        let closure = closure_of(&fixtures::dogfooding());
        let warnings = validate_strict(&closure, &AxiomSet::standard());
        assert!(warnings.is_empty(), "unexpected warnings: {warnings:?}");
    }

    #[test]
    fn occurrence_missing_an_affecting_result_warns_eq28() {
        let graph: Graph = [
            type_triple("http://e/occ", vocab::FACTOR_OCCURRENCE),
            Triple::new(
                iri("http://e/occ"),
                iri(vocab::SATISFIES_FACTOR),
                iri("http://e/f"),
            )
            .unwrap(),
        ]
        .into_iter()
        .collect();
        let closure = closure_of(&graph);
        let warnings = validate_strict(&closure, &AxiomSet::standard());
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].cites(28));
    }

    #[test]
    fn bare_characteristic_typing_warns_on_the_covering_axiom() {
        let graph: Graph = [type_triple(
            "http://e/c",
            vocab::SOFTWARE_QUALITY_CHARACTERISTIC,
        )]
        .into_iter()
        .collect();
        let closure = closure_of(&graph);
        let warnings = validate_strict(&closure, &AxiomSet::standard());
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].cites(6));
    }

    #[test]
    fn diagnostics_render_as_text_and_records() {
        let mut graph = Graph::new();
        graph.insert(type_triple("http://e/x", vocab::CONCEPT));
        graph.insert(type_triple("http://e/x", vocab::DESCRIPTION));
        let diags = check_consistency(&graph, &AxiomSet::standard(), true);
        assert_eq!(diags.len(), 1);
        let text = diags[0].to_string();
        assert!(text.starts_with("inconsistency [eq3/eq4/eq16]:"));
        let record = diags[0].to_record();
        let fields: Vec<&str> = record.split('\t').collect();
        assert_eq!(fields.len(), 4);
        assert_eq!(fields[0], "eq3/eq4/eq16");
        assert_eq!(fields[1], "inconsistency");
        assert!(fields[2].contains("<http://e/x>"));
    }
}
