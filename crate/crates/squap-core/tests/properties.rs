//! Property tests: pattern matching against a brute-force filter,
//! index agreement, Turtle round-trips, and the algebraic laws of
//! materialization and factor enablement.

use std::collections::BTreeSet;

use proptest::prelude::*;

use squap_core::cq;
use squap_core::factors::{enabled_factors, EnableMode};
use squap_core::model::{default_catalog, vocab};
use squap_core::rdf::{isomorphic, Graph, IndexOrder, PrefixMap, Term, Triple};
use squap_core::reasoner::{materialize, AxiomSet, Closure};
use squap_core::turtle;

fn iri(s: &str) -> Term {
    Term::iri(s).unwrap()
}

fn subject_strategy() -> impl Strategy<Value = Term> {
    prop_oneof![
        (0..8u8).prop_map(|n| iri(&format!("http://t/s{n}"))),
        (0..3u8).prop_map(|n| Term::blank(format!("b{n}"))),
    ]
}

fn predicate_strategy() -> impl Strategy<Value = Term> {
    (0..5u8).prop_map(|n| iri(&format!("http://t/p{n}")))
}

fn object_strategy() -> impl Strategy<Value = Term> {
    prop_oneof![
        (0..8u8).prop_map(|n| iri(&format!("http://t/o{n}"))),
        (0..3u8).prop_map(|n| Term::blank(format!("b{n}"))),
        ".{0,12}".prop_map(Term::literal_str),
        any::<i32>().prop_map(|n| Term::literal_integer(n as i64)),
        ("[a-z]{1,6}", "[a-z]{2}").prop_map(|(s, tag)| Term::literal_lang(s, tag)),
    ]
}

fn triple_strategy() -> impl Strategy<Value = Triple> {
    (subject_strategy(), predicate_strategy(), object_strategy())
        .prop_map(|(s, p, o)| Triple::new(s, p, o).unwrap())
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    prop::collection::vec(triple_strategy(), 0..40).prop_map(Graph::from_iter)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// match with a bound subject equals filtering the full scan.
    #[test]
    fn match_equals_brute_force_filter(graph in graph_strategy(), pick in 0..8u8) {
        let s = iri(&format!("http://t/s{pick}"));
        let matched: BTreeSet<Triple> = graph.matching(Some(&s), None, None).collect();
        let filtered: BTreeSet<Triple> = graph
            .iter()
            .filter(|t| *t.subject() == s)
            .collect();
        prop_assert_eq!(matched, filtered);
    }

    /// Any pattern answered through the indexes equals the brute-force
    /// filter over the full triple set.
    #[test]
    fn arbitrary_patterns_agree_with_filtering(
        graph in graph_strategy(),
        bind_s in proptest::option::of(subject_strategy()),
        bind_p in proptest::option::of(predicate_strategy()),
        bind_o in proptest::option::of(object_strategy()),
    ) {
        let matched: BTreeSet<Triple> = graph
            .matching(bind_s.as_ref(), bind_p.as_ref(), bind_o.as_ref())
            .collect();
        let filtered: BTreeSet<Triple> = graph
            .iter()
            .filter(|t| bind_s.as_ref().is_none_or(|s| t.subject() == s))
            .filter(|t| bind_p.as_ref().is_none_or(|p| t.predicate() == p))
            .filter(|t| bind_o.as_ref().is_none_or(|o| t.object() == o))
            .collect();
        prop_assert_eq!(matched, filtered);
    }

    /// The three permutation indexes hold identical triple sets.
    #[test]
    fn indexes_hold_the_same_triples(graph in graph_strategy()) {
        let spo: BTreeSet<Triple> = graph.triples_via_index(IndexOrder::Spo).into_iter().collect();
        let pos: BTreeSet<Triple> = graph.triples_via_index(IndexOrder::Pos).into_iter().collect();
        let osp: BTreeSet<Triple> = graph.triples_via_index(IndexOrder::Osp).into_iter().collect();
        prop_assert_eq!(&spo, &pos);
        prop_assert_eq!(&spo, &osp);
        prop_assert_eq!(spo.len(), graph.len());
    }

    /// Inserting then removing a fresh triple restores the graph.
    #[test]
    fn insert_then_remove_restores(graph in graph_strategy(), extra in triple_strategy()) {
        let mut g = graph.clone();
        let was_present = g.contains(&extra);
        g.insert(extra.clone());
        g.remove(&extra);
        if was_present {
            prop_assert_ne!(&g, &graph); // removed an original triple
        } else {
            prop_assert_eq!(&g, &graph);
        }
    }

    /// parse(serialize(G)) is isomorphic to G for every expressible graph.
    #[test]
    fn turtle_round_trip_is_isomorphic(graph in graph_strategy()) {
        let mut prefixes = PrefixMap::new();
        prefixes.insert("t", "http://t/");
        let text = turtle::serialize(&graph, &prefixes);
        let (reparsed, _) = turtle::parse(&text, None)
            .map_err(|e| TestCaseError::fail(format!("reparse failed: {e}\n{text}")))?;
        prop_assert!(isomorphic(&graph, &reparsed), "round trip changed the graph:\n{}", text);
    }

    /// serialize is a pure function of (graph, prefixes).
    #[test]
    fn serialization_is_deterministic(triples in prop::collection::vec(triple_strategy(), 0..30)) {
        let forward: Graph = triples.iter().cloned().collect();
        let backward: Graph = triples.iter().rev().cloned().collect();
        let prefixes = PrefixMap::new();
        prop_assert_eq!(
            turtle::serialize(&forward, &prefixes),
            turtle::serialize(&backward, &prefixes)
        );
    }
}

// Graphs shaped like SQuAP data: typed individuals, specialization
// edges, factor links, and assessments.
fn squap_graph_strategy() -> impl Strategy<Value = Graph> {
    let ind = |n: u8| format!("http://t/i{n}");
    let class_pool = [
        "http://t/C0".to_owned(),
        "http://t/C1".to_owned(),
        "http://t/C2".to_owned(),
        vocab::SOFTWARE_QUALITY_FACTOR.to_owned(),
        vocab::SOFTWARE_QUALITY_RESULT.to_owned(),
        vocab::VALUE.to_owned(),
    ];
    let link_pool = [
        vocab::SPECIALIZES.to_owned(),
        vocab::USES_CONCEPT.to_owned(),
        vocab::USES_QUALITY_CHARACTERISTIC.to_owned(),
        vocab::ASSESSES.to_owned(),
        "http://t/p0".to_owned(),
    ];
    let types = prop::collection::vec((0..10u8, 0..6usize), 0..12).prop_map(move |pairs| {
        pairs
            .into_iter()
            .map(|(i, c)| {
                Triple::new(
                    iri(&ind(i)),
                    squap_core::vocab::rdf::type_term(),
                    iri(&class_pool[c]),
                )
                .unwrap()
            })
            .collect::<Vec<_>>()
    });
    let subclasses = prop::collection::vec((0..3u8, 0..3u8), 0..4).prop_map(|pairs| {
        pairs
            .into_iter()
            .map(|(a, b)| {
                Triple::new(
                    iri(&format!("http://t/C{a}")),
                    iri(squap_core::vocab::rdfs::SUB_CLASS_OF),
                    iri(&format!("http://t/C{b}")),
                )
                .unwrap()
            })
            .collect::<Vec<_>>()
    });
    let links =
        prop::collection::vec((0..10u8, 0..5usize, 0..10u8), 0..15).prop_map(move |triples| {
            triples
                .into_iter()
                .map(|(a, p, b)| {
                    Triple::new(
                        iri(&format!("http://t/i{a}")),
                        iri(&link_pool[p]),
                        iri(&format!("http://t/i{b}")),
                    )
                    .unwrap()
                })
                .collect::<Vec<_>>()
        });
    (types, subclasses, links)
        .prop_map(|(a, b, c)| a.into_iter().chain(b).chain(c).collect::<Graph>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// materialize(materialize(G)) = materialize(G).
    #[test]
    fn materialization_is_idempotent(graph in squap_graph_strategy()) {
        let axioms = AxiomSet::standard();
        let once = materialize(&graph, &axioms);
        let twice = materialize(once.graph(), &axioms);
        prop_assert_eq!(once.graph(), twice.graph());
    }

    /// G ⊆ G' implies materialize(G) ⊆ materialize(G').
    #[test]
    fn materialization_is_monotone(
        graph in squap_graph_strategy(),
        extra in prop::collection::vec(triple_strategy(), 0..6),
    ) {
        let axioms = AxiomSet::standard();
        let small = materialize(&graph, &axioms);
        let mut bigger = graph.clone();
        bigger.extend(extra);
        let big = materialize(&bigger, &axioms);
        for t in small.graph().iter() {
            prop_assert!(big.graph().contains(&t), "lost {t} in the larger closure");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// all-mode enablement is a subset of any-mode enablement, and
    /// adding a measurement never shrinks either set.
    #[test]
    fn enablement_is_monotone_and_all_implies_any(
        assessments in prop::collection::vec((0..6u8, 0..10usize), 0..12),
    ) {
        let catalog = default_catalog();
        let characteristics: Vec<String> = catalog
            .entries()
            .iter()
            .flat_map(|e| e.characteristics.iter().map(|c| c.iri.clone()))
            .collect();
        prop_assume!(!characteristics.is_empty());

        let assesses = iri(vocab::ASSESSES);
        let mut graph = Graph::new();
        let mut last = None;
        for (r, c) in &assessments {
            let t = Triple::new(
                iri(&format!("http://t/r{r}")),
                assesses.clone(),
                iri(&characteristics[c % characteristics.len()]),
            )
            .unwrap();
            last = Some(t.clone());
            graph.insert(t);
        }
        let closure = materialize(&graph, &AxiomSet::standard());

        let any: BTreeSet<String> = enabled_factors(closure.graph(), &catalog, EnableMode::Any)
            .into_iter()
            .map(|f| f.factor)
            .collect();
        let all: BTreeSet<String> = enabled_factors(closure.graph(), &catalog, EnableMode::All)
            .into_iter()
            .map(|f| f.factor)
            .collect();
        prop_assert!(all.is_subset(&any));

        // Removing the last assessment never grows the enabled sets, in
        // either mode.
        if let Some(t) = last {
            let mut smaller = closure.graph().clone();
            smaller.remove(&t);
            let any_small: BTreeSet<String> =
                enabled_factors(&smaller, &catalog, EnableMode::Any)
                    .into_iter()
                    .map(|f| f.factor)
                    .collect();
            prop_assert!(any_small.is_subset(&any));
            let all_small: BTreeSet<String> =
                enabled_factors(&smaller, &catalog, EnableMode::All)
                    .into_iter()
                    .map(|f| f.factor)
                    .collect();
            prop_assert!(all_small.is_subset(&all));
        }
    }

    /// cq2/cq3 duality: c ∈ cq3(f) iff f ∈ cq2(c).
    #[test]
    fn cq2_cq3_duality(graph in squap_graph_strategy()) {
        let closure = materialize(&graph, &AxiomSet::standard());
        let link_props = [vocab::USES_CONCEPT, vocab::USES_QUALITY_CHARACTERISTIC];
        let mut pairs: BTreeSet<(String, String)> = BTreeSet::new();
        for p in link_props {
            for t in closure.graph().matching(None, Some(&iri(p)), None) {
                if let (Some(f), Some(c)) = (t.subject().iri_str(), t.object().iri_str()) {
                    pairs.insert((f.to_owned(), c.to_owned()));
                }
            }
        }
        for (f, c) in &pairs {
            let forward = cq::cq3(&closure, f);
            let has_c = forward
                .bindings
                .iter()
                .any(|b| b.values[0] == iri(c));
            prop_assert!(has_c, "cq3({f}) is missing {c}");
            let backward = cq::cq2(&closure, c);
            let has_f = backward
                .bindings
                .iter()
                .any(|b| b.values[0] == iri(f));
            prop_assert!(has_f, "cq2({c}) is missing {f}");
        }
    }

    /// Closure-based CQ answers contain the raw-graph answers.
    #[test]
    fn cq_results_on_closure_superset_raw(graph in squap_graph_strategy(), c in 0..10u8) {
        let characteristic = format!("http://t/i{c}");
        let raw = Closure::asserted(graph.clone());
        let closed = materialize(&graph, &AxiomSet::standard());
        for (raw_result, closed_result) in [
            (cq::cq2(&raw, &characteristic), cq::cq2(&closed, &characteristic)),
            (cq::cq4(&raw, &characteristic), cq::cq4(&closed, &characteristic)),
            (cq::cq5(&raw, &characteristic), cq::cq5(&closed, &characteristic)),
        ] {
            let closed_values: BTreeSet<&[Term]> = closed_result
                .bindings
                .iter()
                .map(|b| b.values.as_slice())
                .collect();
            for binding in &raw_result.bindings {
                prop_assert!(closed_values.contains(binding.values.as_slice()));
            }
        }
    }
}
