//! Graph isomorphism under bijective blank-node relabeling.
//!
//! Ground triples must match exactly; blank nodes may be renamed as long
//! as one consistent bijection explains every triple. The search is a
//! straightforward backtracking assignment, which is fine at the scale
//! this engine works with (tens of blank nodes).

use std::collections::{BTreeMap, BTreeSet};

use super::graph::Graph;
use super::term::{Term, Triple};

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.len() != b.len() {
        return false;
    }

    let (ground_a, blank_a): (BTreeSet<_>, Vec<_>) = split(a);
    let (ground_b, blank_b): (BTreeSet<_>, Vec<_>) = split(b);
    if ground_a != ground_b || blank_a.len() != blank_b.len() {
        return false;
    }
    if blank_a.is_empty() {
        return true;
    }

    let labels_a = blank_labels(&blank_a);
    let labels_b = blank_labels(&blank_b);
    if labels_a.len() != labels_b.len() {
        return false;
    }

    let blank_b_set: BTreeSet<&Triple> = blank_b.iter().collect();
    let mut mapping = BTreeMap::new();
    let mut used = BTreeSet::new();
    assign(
        &labels_a,
        0,
        &labels_b,
        &mut mapping,
        &mut used,
        &blank_a,
        &blank_b_set,
    )
}

fn split(g: &Graph) -> (BTreeSet<Triple>, Vec<Triple>) {
    let mut ground = BTreeSet::new();
    let mut blank = Vec::new();
    for t in g.iter() {
        if t.subject().is_blank() || t.object().is_blank() {
            blank.push(t);
        } else {
            ground.insert(t);
        }
    }
    (ground, blank)
}

fn blank_labels(triples: &[Triple]) -> Vec<String> {
    let mut labels = BTreeSet::new();
    for t in triples {
        for term in [t.subject(), t.object()] {
            if let Term::Blank(b) = term {
                labels.insert(b.label().to_string());
            }
        }
    }
    labels.into_iter().collect()
}

fn assign(
    labels_a: &[String],
    next: usize,
    labels_b: &[String],
    mapping: &mut BTreeMap<String, String>,
    used: &mut BTreeSet<String>,
    blank_a: &[Triple],
    blank_b: &BTreeSet<&Triple>,
) -> bool {
    if next == labels_a.len() {
        return blank_a
            .iter()
            .all(|t| blank_b.contains(&rename(t, mapping)));
    }
    let label = &labels_a[next];
    for candidate in labels_b {
        if used.contains(candidate) {
            continue;
        }
        mapping.insert(label.clone(), candidate.clone());
        used.insert(candidate.clone());
        // Prune: every fully-mapped triple must already exist in b.
        let consistent = blank_a.iter().all(|t| {
            if fully_mapped(t, mapping) {
                blank_b.contains(&rename(t, mapping))
            } else {
                true
            }
        });
        if consistent
            && assign(
                labels_a,
                next + 1,
                labels_b,
                mapping,
                used,
                blank_a,
                blank_b,
            )
        {
            return true;
        }
        mapping.remove(label);
        used.remove(candidate);
    }
    false
}

fn fully_mapped(t: &Triple, mapping: &BTreeMap<String, String>) -> bool {
    [t.subject(), t.object()]
        .into_iter()
        .all(|term| match term {
            Term::Blank(b) => mapping.contains_key(b.label()),
            _ => true,
        })
}

fn rename(t: &Triple, mapping: &BTreeMap<String, String>) -> Triple {
    let map = |term: &Term| match term {
        Term::Blank(b) => match mapping.get(b.label()) {
            Some(new) => Term::blank(new.clone()),
            None => term.clone(),
        },
        _ => term.clone(),
    };
    Triple::new(map(t.subject()), t.predicate().clone(), map(t.object()))
        .expect("renaming preserves triple shape")
}
