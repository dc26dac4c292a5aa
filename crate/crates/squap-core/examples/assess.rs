//! Runs the bundled GQM example through the whole engine: materialize,
//! validate, infer enabled factors, and answer two competency
//! questions.
//!
//! ```console
//! cargo run -p squap-core --example assess
//! ```

use squap_core::cq;
use squap_core::factors::{enabled_factors, EnableMode};
use squap_core::model::{bundled_catalog_graph, default_catalog, fixtures};
use squap_core::reasoner::{check_consistency, materialize, AxiomSet};

fn main() {
    let mut graph = fixtures::gqm();
    graph.union_with(&bundled_catalog_graph());

    let axioms = AxiomSet::standard();
    let closure = materialize(&graph, &axioms);
    println!(
        "asserted {} triples, closure holds {} ({} inferred)",
        graph.len(),
        closure.graph().len(),
        closure.trace().len()
    );

    let diagnostics = check_consistency(closure.graph(), &axioms, true);
    println!("consistency findings: {}", diagnostics.len());

    let catalog = default_catalog();
    for factor in enabled_factors(closure.graph(), &catalog, EnableMode::Any) {
        println!(
            "enabled: {} ({}/{} characteristics assessed)",
            factor.label.as_deref().unwrap_or(&factor.factor),
            factor.matched.len(),
            factor.total_characteristics
        );
    }

    let compatibility = "https://w3id.org/squap/SoftwareQuality/Compatibility";
    print!("{}", cq::render_text(&cq::cq4(&closure, compatibility)));
    print!("{}", cq::render_text(&cq::cq5(&closure, compatibility)));
}
