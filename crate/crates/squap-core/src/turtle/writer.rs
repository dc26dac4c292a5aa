//! Turtle and N-Triples writers.
//!
//! `serialize` is a pure function of the graph and the prefix map:
//! prefixes are emitted sorted by label, triples are grouped by subject
//! and ordered by subject, then predicate, then object. `rdf:type` is
//! written as `a`, integer and boolean literals in their bare shorthand
//! when the lexical form allows it.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::rdf::{Graph, PrefixMap, Term, Triple};
use crate::vocab::{rdf, xsd};

pub fn serialize(graph: &Graph, prefixes: &PrefixMap) -> String {
    let mut out = String::new();
    for (label, ns) in prefixes.iter() {
        let _ = writeln!(out, "@prefix {label}: <{ns}> .");
    }

    // Group by subject; BTree iteration already sorts by subject,
    // predicate, object.
    let mut by_subject: BTreeMap<Term, BTreeMap<Term, Vec<Term>>> = BTreeMap::new();
    for t in graph.iter() {
        let (s, p, o) = t.into_parts();
        by_subject
            .entry(s)
            .or_default()
            .entry(p)
            .or_default()
            .push(o);
    }

    if !prefixes.is_empty() && !by_subject.is_empty() {
        out.push('\n');
    }

    let mut first = true;
    for (subject, predicates) in &by_subject {
        if !first {
            out.push('\n');
        }
        first = false;
        let _ = write!(out, "{}", render_term(subject, prefixes, false));
        let mut first_predicate = true;
        for (predicate, objects) in predicates {
            if first_predicate {
                out.push(' ');
                first_predicate = false;
            } else {
                out.push_str(" ;\n  ");
            }
            let _ = write!(out, "{}", render_term(predicate, prefixes, true));
            let rendered: Vec<String> = objects
                .iter()
                .map(|o| render_term(o, prefixes, false))
                .collect();
            let _ = write!(out, " {}", rendered.join(" , "));
        }
        out.push_str(" .\n");
    }
    out
}

/// One N-Triples line per triple, in graph order.
pub fn to_ntriples(graph: &Graph) -> String {
    let mut out = String::new();
    for t in graph.iter() {
        let _ = writeln!(out, "{t}");
    }
    out
}

/// A single triple in N-Triples form (no trailing newline).
pub fn triple_to_ntriples(triple: &Triple) -> String {
    triple.to_string()
}

/// One literal in Turtle shorthand: bare integers and booleans, quoted
/// strings, `@lang` tags, and angle-bracket datatypes otherwise.
pub fn literal_to_turtle(literal: &crate::rdf::Literal) -> String {
    render_term(&Term::Literal(literal.clone()), &PrefixMap::new(), false)
}

fn render_term(term: &Term, prefixes: &PrefixMap, predicate_position: bool) -> String {
    match term {
        Term::Iri(iri) => {
            if predicate_position && iri.as_str() == rdf::TYPE {
                return "a".to_owned();
            }
            render_iri(iri.as_str(), prefixes)
        }
        Term::Blank(b) => format!("_:{}", b.label()),
        Term::Literal(lit) => {
            let dt = lit.datatype().as_str();
            if dt == xsd::INTEGER && is_bare_integer(lit.lexical_form()) {
                return lit.lexical_form().to_owned();
            }
            if dt == xsd::BOOLEAN && matches!(lit.lexical_form(), "true" | "false") {
                return lit.lexical_form().to_owned();
            }
            let quoted = format!("\"{}\"", crate::rdf::escape(lit.lexical_form()));
            if let Some(tag) = lit.language() {
                format!("{quoted}@{tag}")
            } else if dt == xsd::STRING {
                quoted
            } else {
                format!("{quoted}^^{}", render_iri(dt, prefixes))
            }
        }
    }
}

fn render_iri(iri: &str, prefixes: &PrefixMap) -> String {
    if let Some((label, local)) = prefixes.compact(iri) {
        if label_ok(label) && local_ok(local) {
            return format!("{label}:{local}");
        }
    }
    format!("<{iri}>")
}

fn is_bare_integer(lexical: &str) -> bool {
    let digits = lexical.strip_prefix(['+', '-']).unwrap_or(lexical);
    !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit())
}

fn label_ok(label: &str) -> bool {
    label.is_empty()
        || (label.chars().all(name_char)
            && !label.starts_with(['-', '.'])
            && !label.ends_with('.')
            && !label.starts_with(|c: char| c.is_ascii_digit()))
}

/// A local name survives the round trip when it only uses name
/// characters and does not end with a dot (the lexer strips trailing
/// dots as statement terminators).
fn local_ok(local: &str) -> bool {
    local.chars().all(name_char) && !local.ends_with('.') && !local.starts_with('-')
}

fn name_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.')
}
