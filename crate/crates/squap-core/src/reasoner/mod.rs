//! Forward-chaining materialization and validation.
//!
//! Materialization computes the least fixpoint of the rule set over an
//! input graph: subclass propagation, transitive closure of
//! `specializes`, the `usesConcept ∘ specializes` chain, inverse and
//! sub-property completion, and object typing for the factor/
//! characteristic universal restriction. Existential and covering axioms
//! never fire as rules — they are audited by the checkers — and no rule
//! invents fresh individuals, so the closure only ever mentions terms
//! from the input and the vocabulary.
//!
//! Evaluation is semi-naive: each triple enters a work queue exactly
//! once, and every rule joins the new triple against the full closure.
//! All rules are monotone Horn rules, so the fixpoint is
//! order-independent.

mod axioms;
mod check;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

pub use axioms::{
    Axiom, AxiomSet, ChainAxiom, CoveringAxiom, DisjointnessAxiom, ExactCardinalityAxiom,
    ExistentialAxiom, SubclassAxiom, UniversalAxiom,
};
pub use check::{check_consistency, validate_strict, Diagnostic, Severity};

use crate::model::vocab as squap;
use crate::rdf::{Graph, Term, Triple};
use crate::vocab::{rdf, rdfs};

/// Identifies the rule that produced an inferred triple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum RuleId {
    /// A numbered axiom (subclass propagation, the chain, the universal
    /// restriction).
    Equation(u32),
    /// An `rdfs:subClassOf` triple asserted in the data.
    GraphSubclass,
    /// Transitive closure of the named property.
    Transitive(&'static str),
    /// Inverse completion between the two named properties.
    Inverse(&'static str, &'static str),
    /// Sub-property propagation from the first to the second property.
    SubProperty(&'static str, &'static str),
}

fn short(iri: &str) -> String {
    match iri.strip_prefix(squap::NS) {
        Some(local) => format!("squap:{local}"),
        None => iri.to_owned(),
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleId::Equation(eq) => write!(f, "eq{eq}"),
            RuleId::GraphSubclass => write!(f, "rdfs:subClassOf"),
            RuleId::Transitive(p) => write!(f, "transitive({})", short(p)),
            RuleId::Inverse(a, b) => write!(f, "inverse({}/{})", short(a), short(b)),
            RuleId::SubProperty(a, b) => write!(f, "subproperty({}<={})", short(b), short(a)),
        }
    }
}

/// How one inferred triple was derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub rule: RuleId,
    pub premises: Vec<Triple>,
}

/// Derivations for every inferred (non-asserted) triple. When several
/// derivations exist, the first one found is kept.
#[derive(Debug, Clone, Default)]
pub struct InferenceTrace {
    entries: BTreeMap<Triple, TraceEntry>,
}

impl InferenceTrace {
    fn record(&mut self, triple: Triple, rule: RuleId, premises: Vec<Triple>) {
        self.entries
            .entry(triple)
            .or_insert(TraceEntry { rule, premises });
    }

    pub fn get(&self, triple: &Triple) -> Option<&TraceEntry> {
        self.entries.get(triple)
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.entries.contains_key(triple)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Triple, &TraceEntry)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A materialized graph together with the trace of every inference.
#[derive(Debug, Clone)]
pub struct Closure {
    graph: Graph,
    trace: InferenceTrace,
}

impl Closure {
    /// Wraps an unmaterialized graph (empty trace); queries over it see
    /// asserted triples only.
    pub fn asserted(graph: Graph) -> Closure {
        Closure {
            graph,
            trace: InferenceTrace::default(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn trace(&self) -> &InferenceTrace {
        &self.trace
    }

    pub fn is_inferred(&self, triple: &Triple) -> bool {
        self.trace.contains(triple)
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

/// The rule families, in their default application order. The closure is
/// the same set for any order; tests shuffle this list to assert it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    Subclass,
    Transitive,
    Inverse,
    SubProperty,
    Chain,
    UniversalTyping,
}

impl RuleKind {
    pub const ALL: [RuleKind; 6] = [
        RuleKind::Subclass,
        RuleKind::Transitive,
        RuleKind::Inverse,
        RuleKind::SubProperty,
        RuleKind::Chain,
        RuleKind::UniversalTyping,
    ];
}

/// Computes the least fixpoint of the rule set over `graph`.
pub fn materialize(graph: &Graph, axioms: &AxiomSet) -> Closure {
    materialize_with_rule_order(graph, axioms, &RuleKind::ALL)
}

/// Materialization with an explicit rule application order; the result
/// set is order-independent.
#[doc(hidden)]
pub fn materialize_with_rule_order(
    graph: &Graph,
    axioms: &AxiomSet,
    order: &[RuleKind],
) -> Closure {
    let engine = Engine::new(axioms);
    let mut closure = graph.clone();
    let mut trace = InferenceTrace::default();
    let mut queue: VecDeque<Triple> = closure.iter().collect();
    let mut derived = Vec::new();

    while let Some(triple) = queue.pop_front() {
        for kind in order {
            derived.clear();
            engine.apply(*kind, &triple, &closure, &mut derived);
            for (new_triple, rule, premises) in derived.drain(..) {
                if closure.insert(new_triple.clone()) {
                    trace.record(new_triple.clone(), rule, premises);
                    queue.push_back(new_triple);
                }
            }
        }
    }

    Closure {
        graph: closure,
        trace,
    }
}

type Derived = (Triple, RuleId, Vec<Triple>);

struct Engine<'a> {
    /// superclasses per class IRI, with the axiom's equation number
    superclasses: BTreeMap<&'static str, Vec<(&'static str, u32)>>,
    inverses: BTreeMap<&'static str, &'static str>,
    superproperties: BTreeMap<&'static str, Vec<&'static str>>,
    axioms: &'a AxiomSet,
    rdf_type: Term,
    sub_class_of: Term,
}

impl<'a> Engine<'a> {
    fn new(axioms: &'a AxiomSet) -> Self {
        let mut superclasses: BTreeMap<&'static str, Vec<(&'static str, u32)>> = BTreeMap::new();
        for ax in &axioms.subclass {
            superclasses
                .entry(ax.sub)
                .or_default()
                .push((ax.sup, ax.eq));
        }
        let mut inverses = BTreeMap::new();
        for (a, b) in &axioms.inverses {
            inverses.insert(*a, *b);
            inverses.insert(*b, *a);
        }
        let mut superproperties: BTreeMap<&'static str, Vec<&'static str>> = BTreeMap::new();
        for (sub, sup) in &axioms.subproperties {
            superproperties.entry(sub).or_default().push(sup);
        }
        Engine {
            superclasses,
            inverses,
            superproperties,
            axioms,
            rdf_type: rdf::type_term(),
            sub_class_of: crate::vocab::term(rdfs::SUB_CLASS_OF),
        }
    }

    fn apply(&self, kind: RuleKind, triple: &Triple, closure: &Graph, out: &mut Vec<Derived>) {
        match kind {
            RuleKind::Subclass => self.subclass(triple, closure, out),
            RuleKind::Transitive => self.transitive(triple, closure, out),
            RuleKind::Inverse => self.inverse(triple, out),
            RuleKind::SubProperty => self.subproperty(triple, out),
            RuleKind::Chain => self.chain(triple, closure, out),
            RuleKind::UniversalTyping => self.universal_typing(triple, closure, out),
        }
    }

    fn subclass(&self, triple: &Triple, closure: &Graph, out: &mut Vec<Derived>) {
        if *triple.predicate() == self.rdf_type {
            let class = triple.object();
            // Axiom-declared superclasses.
            if let Some(class_iri) = class.iri_str() {
                if let Some(sups) = self.superclasses.get(class_iri) {
                    for (sup, eq) in sups {
                        out.push((
                            Triple::new_unchecked(
                                triple.subject().clone(),
                                self.rdf_type.clone(),
                                crate::vocab::term(sup),
                            ),
                            RuleId::Equation(*eq),
                            vec![triple.clone()],
                        ));
                    }
                }
            }
            // rdfs:subClassOf triples asserted in the data.
            for sup in closure.objects(class, &self.sub_class_of) {
                let premise =
                    Triple::new_unchecked(class.clone(), self.sub_class_of.clone(), sup.clone());
                out.push((
                    Triple::new_unchecked(triple.subject().clone(), self.rdf_type.clone(), sup),
                    RuleId::GraphSubclass,
                    vec![triple.clone(), premise],
                ));
            }
        } else if *triple.predicate() == self.sub_class_of {
            for instance in closure.subjects(&self.rdf_type, triple.subject()) {
                let premise = Triple::new_unchecked(
                    instance.clone(),
                    self.rdf_type.clone(),
                    triple.subject().clone(),
                );
                out.push((
                    Triple::new_unchecked(instance, self.rdf_type.clone(), triple.object().clone()),
                    RuleId::GraphSubclass,
                    vec![premise, triple.clone()],
                ));
            }
        }
    }

    fn transitive(&self, triple: &Triple, closure: &Graph, out: &mut Vec<Derived>) {
        let Some(p) = triple.predicate().iri_str() else {
            return;
        };
        let Some(p_static) = self.axioms.transitive.iter().copied().find(|t| *t == p) else {
            return;
        };
        let (x, y) = (triple.subject(), triple.object());
        // (x p y), (y p z) => (x p z)
        for z in closure.objects(y, triple.predicate()) {
            let premise = Triple::new_unchecked(y.clone(), triple.predicate().clone(), z.clone());
            out.push((
                Triple::new_unchecked(x.clone(), triple.predicate().clone(), z),
                RuleId::Transitive(p_static),
                vec![triple.clone(), premise],
            ));
        }
        // (w p x), (x p y) => (w p y)
        for w in closure.subjects(triple.predicate(), x) {
            let premise = Triple::new_unchecked(w.clone(), triple.predicate().clone(), x.clone());
            out.push((
                Triple::new_unchecked(w, triple.predicate().clone(), y.clone()),
                RuleId::Transitive(p_static),
                vec![premise, triple.clone()],
            ));
        }
    }

    fn inverse(&self, triple: &Triple, out: &mut Vec<Derived>) {
        let Some(p) = triple.predicate().iri_str() else {
            return;
        };
        let Some((&p_static, &q)) = self.inverses.get_key_value(p) else {
            return;
        };
        if triple.object().is_literal() {
            return;
        }
        out.push((
            Triple::new_unchecked(
                triple.object().clone(),
                crate::vocab::term(q),
                triple.subject().clone(),
            ),
            RuleId::Inverse(p_static, q),
            vec![triple.clone()],
        ));
    }

    fn subproperty(&self, triple: &Triple, out: &mut Vec<Derived>) {
        let Some(p) = triple.predicate().iri_str() else {
            return;
        };
        let Some((&p_static, sups)) = self.superproperties.get_key_value(p) else {
            return;
        };
        for sup in sups {
            out.push((
                Triple::new_unchecked(
                    triple.subject().clone(),
                    crate::vocab::term(sup),
                    triple.object().clone(),
                ),
                RuleId::SubProperty(p_static, sup),
                vec![triple.clone()],
            ));
        }
    }

    fn chain(&self, triple: &Triple, closure: &Graph, out: &mut Vec<Derived>) {
        let Some(p) = triple.predicate().iri_str() else {
            return;
        };
        for ax in &self.axioms.chains {
            let implied = crate::vocab::term(ax.implied);
            if p == ax.first {
                // t = (x first y); (y second z) => (x implied z)
                let second = crate::vocab::term(ax.second);
                for z in closure.objects(triple.object(), &second) {
                    let premise =
                        Triple::new_unchecked(triple.object().clone(), second.clone(), z.clone());
                    out.push((
                        Triple::new_unchecked(triple.subject().clone(), implied.clone(), z),
                        RuleId::Equation(ax.eq),
                        vec![triple.clone(), premise],
                    ));
                }
            }
            if p == ax.second {
                // t = (y second z); (x first y) => (x implied z)
                let first = crate::vocab::term(ax.first);
                for x in closure.subjects(&first, triple.subject()) {
                    let premise =
                        Triple::new_unchecked(x.clone(), first.clone(), triple.subject().clone());
                    out.push((
                        Triple::new_unchecked(x, implied.clone(), triple.object().clone()),
                        RuleId::Equation(ax.eq),
                        vec![premise, triple.clone()],
                    ));
                }
            }
        }
    }

    fn universal_typing(&self, triple: &Triple, closure: &Graph, out: &mut Vec<Derived>) {
        for ax in &self.axioms.universal {
            let class = crate::vocab::term(ax.class);
            let property = crate::vocab::term(ax.property);
            let object_class = crate::vocab::term(ax.object_class);
            if *triple.predicate() == self.rdf_type && *triple.object() == class {
                // t = (f type Class); (f property y) => (y type ObjectClass)
                for y in closure.objects(triple.subject(), &property) {
                    if y.is_literal() {
                        continue;
                    }
                    let premise = Triple::new_unchecked(
                        triple.subject().clone(),
                        property.clone(),
                        y.clone(),
                    );
                    out.push((
                        Triple::new_unchecked(y, self.rdf_type.clone(), object_class.clone()),
                        RuleId::Equation(ax.eq),
                        vec![triple.clone(), premise],
                    ));
                }
            } else if *triple.predicate() == property {
                // t = (f property y); (f type Class) => (y type ObjectClass)
                if triple.object().is_literal() {
                    continue;
                }
                if closure.has(triple.subject(), &self.rdf_type, &class) {
                    let premise = Triple::new_unchecked(
                        triple.subject().clone(),
                        self.rdf_type.clone(),
                        class.clone(),
                    );
                    out.push((
                        Triple::new_unchecked(
                            triple.object().clone(),
                            self.rdf_type.clone(),
                            object_class.clone(),
                        ),
                        RuleId::Equation(ax.eq),
                        vec![premise, triple.clone()],
                    ));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::fixtures;
    use crate::model::vocab;

    fn iri(s: &str) -> Term {
        Term::iri(s).unwrap()
    }

    fn t(s: &str, p: &str, o: &str) -> Triple {
        Triple::new(iri(s), iri(p), iri(o)).unwrap()
    }

    fn type_triple(s: &str, class: &str) -> Triple {
        Triple::new(iri(s), rdf::type_term(), iri(class)).unwrap()
    }

    #[test]
    fn subclass_propagation_reaches_measurement_result() {
        let graph: Graph = [type_triple("http://e/r", vocab::SOFTWARE_QUALITY_RESULT)]
            .into_iter()
            .collect();
        let closure = materialize(&graph, &AxiomSet::standard());
        let inferred = type_triple("http://e/r", vocab::MEASUREMENT_RESULT);
        assert!(closure.graph().contains(&inferred));
        assert!(closure.is_inferred(&inferred));
        assert_eq!(
            closure.trace().get(&inferred).unwrap().rule,
            RuleId::Equation(26)
        );
    }

    #[test]
    fn chain_composes_uses_concept_over_specializes() {
        // F usesConcept A, A specializes B, B specializes C.
        let graph: Graph = [
            t("http://e/F", vocab::USES_CONCEPT, "http://e/A"),
            t("http://e/A", vocab::SPECIALIZES, "http://e/B"),
            t("http://e/B", vocab::SPECIALIZES, "http://e/C"),
        ]
        .into_iter()
        .collect();
        let closure = materialize(&graph, &AxiomSet::standard());
        let g = closure.graph();
        // Transitivity: A specializes C.
        assert!(g.contains(&t("http://e/A", vocab::SPECIALIZES, "http://e/C")));
        // Chain: F usesConcept B and F usesConcept C.
        assert!(g.contains(&t("http://e/F", vocab::USES_CONCEPT, "http://e/B")));
        assert!(g.contains(&t("http://e/F", vocab::USES_CONCEPT, "http://e/C")));
        // Inverse completion mirrors the specializes edges.
        assert!(g.contains(&t("http://e/B", vocab::IS_SPECIALIZED_BY, "http://e/A")));
    }

    #[test]
    fn chain_fires_for_links_asserted_with_the_sub_property() {
        let graph: Graph = [
            t(
                "http://e/F",
                vocab::USES_QUALITY_CHARACTERISTIC,
                "http://e/A",
            ),
            t("http://e/A", vocab::SPECIALIZES, "http://e/G"),
        ]
        .into_iter()
        .collect();
        let closure = materialize(&graph, &AxiomSet::standard());
        assert!(closure
            .graph()
            .contains(&t("http://e/F", vocab::USES_CONCEPT, "http://e/A")));
        assert!(closure
            .graph()
            .contains(&t("http://e/F", vocab::USES_CONCEPT, "http://e/G")));
    }

    #[test]
    fn universal_restriction_types_the_object() {
        let graph: Graph = [
            type_triple("http://e/F", vocab::SOFTWARE_QUALITY_FACTOR),
            t(
                "http://e/F",
                vocab::USES_QUALITY_CHARACTERISTIC,
                "http://e/c",
            ),
        ]
        .into_iter()
        .collect();
        let closure = materialize(&graph, &AxiomSet::standard());
        assert!(closure.graph().contains(&type_triple(
            "http://e/c",
            vocab::SOFTWARE_QUALITY_CHARACTERISTIC
        )));
        // ... and on through eq5 to Concept.
        assert!(closure
            .graph()
            .contains(&type_triple("http://e/c", vocab::CONCEPT)));
    }

    #[test]
    fn graph_asserted_subclass_triples_propagate() {
        let graph: Graph = [
            type_triple("http://e/x", "http://e/C"),
            t("http://e/C", rdfs::SUB_CLASS_OF, "http://e/D"),
            t("http://e/D", rdfs::SUB_CLASS_OF, "http://e/E"),
        ]
        .into_iter()
        .collect();
        let closure = materialize(&graph, &AxiomSet::standard());
        assert!(closure
            .graph()
            .contains(&type_triple("http://e/x", "http://e/D")));
        assert!(closure
            .graph()
            .contains(&type_triple("http://e/x", "http://e/E")));
    }

    #[test]
    fn materialization_is_idempotent_on_the_fixtures() {
        let axioms = AxiomSet::standard();
        for fixture in [fixtures::gqm(), fixtures::dogfooding()] {
            let once = materialize(&fixture, &axioms);
            let twice = materialize(once.graph(), &axioms);
            assert_eq!(once.graph(), twice.graph());
        }
    }

    #[test]
    fn closure_introduces_no_fresh_terms() {
        let axioms = AxiomSet::standard();
        let graph = fixtures::gqm();
        let closure = materialize(&graph, &axioms);
        let mut allowed = graph.terms();
        for iri_str in [
            vocab::MEASUREMENT_RESULT,
            vocab::SOFTWARE_QUALITY_CHARACTERISTIC,
            vocab::CONCEPT,
            vocab::DESCRIPTION,
            vocab::SITUATION,
            vocab::REGION,
            vocab::USES_CONCEPT,
            vocab::IS_SPECIALIZED_BY,
            vocab::AFFECTS_MEASUREMENT_OF,
            vocab::IS_AFFECTED_BY,
            vocab::SPECIALIZES,
        ] {
            allowed.insert(iri(iri_str));
        }
        for term in closure.graph().terms() {
            assert!(allowed.contains(&term), "fresh term {term} in closure");
        }
    }

    #[test]
    fn every_inferred_triple_has_a_trace_entry() {
        let axioms = AxiomSet::standard();
        let graph = fixtures::gqm();
        let closure = materialize(&graph, &axioms);
        for triple in closure.graph().iter() {
            if !graph.contains(&triple) {
                assert!(
                    closure.trace().get(&triple).is_some(),
                    "inferred triple without trace: {triple}"
                );
            }
        }
    }

    #[test]
    fn trace_premises_are_in_the_closure_and_rules_replay() {
        let axioms = AxiomSet::standard();
        let mut graph = fixtures::dogfooding();
        graph.union_with(&crate::model::bundled_catalog_graph());
        let closure = materialize(&graph, &axioms);
        for (triple, entry) in closure.trace().iter() {
            for premise in &entry.premises {
                assert!(
                    closure.graph().contains(premise),
                    "premise {premise} of {triple} not in closure"
                );
            }
            let replayed = replay(&entry.rule, &entry.premises);
            assert_eq!(
                replayed.as_ref(),
                Some(triple),
                "rule {} does not reproduce {triple} from its premises",
                entry.rule
            );
        }
    }

    /// Independent single-step re-application of a rule to its premises,
    /// used to audit the trace.
    fn replay(rule: &RuleId, premises: &[Triple]) -> Option<Triple> {
        let rdf_type = rdf::type_term();
        match rule {
            RuleId::Equation(eq) => {
                let axioms = AxiomSet::standard();
                match axioms.equation(*eq)? {
                    Axiom::Subclass(ax) => {
                        let [p] = premises else { return None };
                        (*p.predicate() == rdf_type && p.object().iri_str() == Some(ax.sub)).then(
                            || {
                                Triple::new_unchecked(
                                    p.subject().clone(),
                                    rdf_type.clone(),
                                    crate::vocab::term(ax.sup),
                                )
                            },
                        )
                    }
                    Axiom::Chain(ax) => {
                        let [p1, p2] = premises else { return None };
                        (p1.predicate().iri_str() == Some(ax.first)
                            && p2.predicate().iri_str() == Some(ax.second)
                            && p1.object() == p2.subject())
                        .then(|| {
                            Triple::new_unchecked(
                                p1.subject().clone(),
                                crate::vocab::term(ax.implied),
                                p2.object().clone(),
                            )
                        })
                    }
                    Axiom::Universal(ax) => {
                        let [p1, p2] = premises else { return None };
                        (*p1.predicate() == rdf_type
                            && p1.object().iri_str() == Some(ax.class)
                            && p2.predicate().iri_str() == Some(ax.property)
                            && p1.subject() == p2.subject())
                        .then(|| {
                            Triple::new_unchecked(
                                p2.object().clone(),
                                rdf_type.clone(),
                                crate::vocab::term(ax.object_class),
                            )
                        })
                    }
                    _ => None,
                }
            }
            RuleId::GraphSubclass => {
                let [p1, p2] = premises else { return None };
                (*p1.predicate() == rdf_type
                    && p2.predicate().iri_str() == Some(rdfs::SUB_CLASS_OF)
                    && p1.object() == p2.subject())
                .then(|| {
                    Triple::new_unchecked(
                        p1.subject().clone(),
                        rdf_type.clone(),
                        p2.object().clone(),
                    )
                })
            }
            RuleId::Transitive(p) => {
                let [p1, p2] = premises else { return None };
                (p1.predicate().iri_str() == Some(p)
                    && p2.predicate().iri_str() == Some(p)
                    && p1.object() == p2.subject())
                .then(|| {
                    Triple::new_unchecked(
                        p1.subject().clone(),
                        p1.predicate().clone(),
                        p2.object().clone(),
                    )
                })
            }
            RuleId::Inverse(from, to) => {
                let [p] = premises else { return None };
                (p.predicate().iri_str() == Some(from)).then(|| {
                    Triple::new_unchecked(
                        p.object().clone(),
                        crate::vocab::term(to),
                        p.subject().clone(),
                    )
                })
            }
            RuleId::SubProperty(sub, sup) => {
                let [p] = premises else { return None };
                (p.predicate().iri_str() == Some(sub)).then(|| {
                    Triple::new_unchecked(
                        p.subject().clone(),
                        crate::vocab::term(sup),
                        p.object().clone(),
                    )
                })
            }
        }
    }

    #[test]
    fn rule_order_does_not_change_the_closure() {
        let axioms = AxiomSet::standard();
        let mut graph = fixtures::gqm();
        graph.union_with(&crate::model::bundled_catalog_graph());
        graph.insert(t("http://e/A", vocab::SPECIALIZES, "http://e/B"));
        graph.insert(t("http://e/F", vocab::USES_CONCEPT, "http://e/A"));

        let baseline = materialize(&graph, &axioms);
        let mut order = RuleKind::ALL;
        order.reverse();
        let reversed = materialize_with_rule_order(&graph, &axioms, &order);
        assert_eq!(baseline.graph(), reversed.graph());

        let rotated = [
            RuleKind::Chain,
            RuleKind::UniversalTyping,
            RuleKind::Subclass,
            RuleKind::SubProperty,
            RuleKind::Inverse,
            RuleKind::Transitive,
        ];
        let shuffled = materialize_with_rule_order(&graph, &axioms, &rotated);
        assert_eq!(baseline.graph(), shuffled.graph());
    }
}
