//! An indexed, in-memory triple set.
//!
//! The graph keeps three permutation indexes (SPO, POS, OSP) so that any
//! triple pattern is answered by a single index walk. All indexes are
//! ordered maps, which makes iteration order deterministic regardless of
//! insertion history.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::term::{Term, Triple};
use crate::vocab::rdf;

type Index = BTreeMap<Term, BTreeMap<Term, BTreeSet<Term>>>;

/// Which permutation index to read. Exposed so tests can cross-check that
/// all three indexes hold the same triple set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexOrder {
    Spo,
    Pos,
    Osp,
}

#[derive(Clone, Default)]
pub struct Graph {
    spo: Index,
    pos: Index,
    osp: Index,
    len: usize,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Inserts a triple; returns `true` when the triple was not already
    /// present (set semantics).
    pub fn insert(&mut self, triple: Triple) -> bool {
        let (s, p, o) = triple.into_parts();
        let added = index_insert(&mut self.spo, s.clone(), p.clone(), o.clone());
        if added {
            index_insert(&mut self.pos, p.clone(), o.clone(), s.clone());
            index_insert(&mut self.osp, o, s, p);
            self.len += 1;
        }
        added
    }

    /// Removes a triple; returns `true` when it was present.
    pub fn remove(&mut self, triple: &Triple) -> bool {
        let (s, p, o) = (triple.subject(), triple.predicate(), triple.object());
        let removed = index_remove(&mut self.spo, s, p, o);
        if removed {
            index_remove(&mut self.pos, p, o, s);
            index_remove(&mut self.osp, o, s, p);
            self.len -= 1;
        }
        removed
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.spo
            .get(triple.subject())
            .and_then(|ps| ps.get(triple.predicate()))
            .is_some_and(|os| os.contains(triple.object()))
    }

    /// All triples in SPO order.
    pub fn iter(&self) -> impl Iterator<Item = Triple> + '_ {
        self.spo.iter().flat_map(|(s, ps)| {
            ps.iter().flat_map(move |(p, os)| {
                os.iter()
                    .map(move |o| Triple::new_unchecked(s.clone(), p.clone(), o.clone()))
            })
        })
    }

    /// Matches a pattern; `None` positions are wildcards. Each index
    /// serves the patterns for which its key prefix is bound.
    pub fn matching<'a>(
        &'a self,
        s: Option<&'a Term>,
        p: Option<&'a Term>,
        o: Option<&'a Term>,
    ) -> Box<dyn Iterator<Item = Triple> + 'a> {
        match (s, p, o) {
            (Some(s), Some(p), Some(o)) => {
                let t = Triple::new_unchecked(s.clone(), p.clone(), o.clone());
                if self.contains(&t) {
                    Box::new(std::iter::once(t))
                } else {
                    Box::new(std::iter::empty())
                }
            }
            (Some(s), Some(p), None) => match self.spo.get(s).and_then(|ps| ps.get(p)) {
                Some(os) => Box::new(
                    os.iter()
                        .map(move |o| Triple::new_unchecked(s.clone(), p.clone(), o.clone())),
                ),
                None => Box::new(std::iter::empty()),
            },
            (Some(s), None, None) => match self.spo.get(s) {
                Some(ps) => Box::new(ps.iter().flat_map(move |(p, os)| {
                    os.iter()
                        .map(move |o| Triple::new_unchecked(s.clone(), p.clone(), o.clone()))
                })),
                None => Box::new(std::iter::empty()),
            },
            (None, Some(p), Some(o)) => match self.pos.get(p).and_then(|os| os.get(o)) {
                Some(ss) => Box::new(
                    ss.iter()
                        .map(move |s| Triple::new_unchecked(s.clone(), p.clone(), o.clone())),
                ),
                None => Box::new(std::iter::empty()),
            },
            (None, Some(p), None) => match self.pos.get(p) {
                Some(os) => Box::new(os.iter().flat_map(move |(o, ss)| {
                    ss.iter()
                        .map(move |s| Triple::new_unchecked(s.clone(), p.clone(), o.clone()))
                })),
                None => Box::new(std::iter::empty()),
            },
            (Some(s), None, Some(o)) => match self.osp.get(o).and_then(|ss| ss.get(s)) {
                Some(ps) => Box::new(
                    ps.iter()
                        .map(move |p| Triple::new_unchecked(s.clone(), p.clone(), o.clone())),
                ),
                None => Box::new(std::iter::empty()),
            },
            (None, None, Some(o)) => match self.osp.get(o) {
                Some(ss) => Box::new(ss.iter().flat_map(move |(s, ps)| {
                    ps.iter()
                        .map(move |p| Triple::new_unchecked(s.clone(), p.clone(), o.clone()))
                })),
                None => Box::new(std::iter::empty()),
            },
            (None, None, None) => Box::new(self.iter()),
        }
    }

    /// Objects of `(s, p, ?)`.
    pub fn objects<'a>(&'a self, s: &Term, p: &Term) -> impl Iterator<Item = Term> + 'a {
        self.spo
            .get(s)
            .and_then(|ps| ps.get(p))
            .into_iter()
            .flat_map(|os| os.iter().cloned())
    }

    /// Subjects of `(?, p, o)`.
    pub fn subjects<'a>(&'a self, p: &Term, o: &Term) -> impl Iterator<Item = Term> + 'a {
        self.pos
            .get(p)
            .and_then(|os| os.get(o))
            .into_iter()
            .flat_map(|ss| ss.iter().cloned())
    }

    /// Subjects typed `class` via `rdf:type`.
    pub fn instances_of<'a>(&'a self, class: &Term) -> impl Iterator<Item = Term> + 'a {
        self.subjects(&rdf::type_term(), class)
    }

    pub fn has(&self, s: &Term, p: &Term, o: &Term) -> bool {
        self.spo
            .get(s)
            .and_then(|ps| ps.get(p))
            .is_some_and(|os| os.contains(o))
    }

    /// True when the term occurs anywhere in the graph (the three index
    /// key sets are exactly the subjects, predicates, and objects).
    pub fn mentions(&self, t: &Term) -> bool {
        self.spo.contains_key(t) || self.pos.contains_key(t) || self.osp.contains_key(t)
    }

    /// Every distinct term appearing in some triple.
    pub fn terms(&self) -> BTreeSet<Term> {
        let mut out = BTreeSet::new();
        for t in self.iter() {
            let (s, p, o) = t.into_parts();
            out.insert(s);
            out.insert(p);
            out.insert(o);
        }
        out
    }

    pub fn union_with(&mut self, other: &Graph) {
        for t in other.iter() {
            self.insert(t);
        }
    }

    /// Reconstructs the full triple set by walking one chosen index.
    /// Intended for index-consistency checks.
    #[doc(hidden)]
    pub fn triples_via_index(&self, order: IndexOrder) -> Vec<Triple> {
        let mut out = Vec::with_capacity(self.len);
        match order {
            IndexOrder::Spo => out.extend(self.iter()),
            IndexOrder::Pos => {
                for (p, os) in &self.pos {
                    for (o, ss) in os {
                        for s in ss {
                            out.push(Triple::new_unchecked(s.clone(), p.clone(), o.clone()));
                        }
                    }
                }
            }
            IndexOrder::Osp => {
                for (o, ss) in &self.osp {
                    for (s, ps) in ss {
                        for p in ps {
                            out.push(Triple::new_unchecked(s.clone(), p.clone(), o.clone()));
                        }
                    }
                }
            }
        }
        out
    }
}

fn index_insert(index: &mut Index, a: Term, b: Term, c: Term) -> bool {
    index.entry(a).or_default().entry(b).or_default().insert(c)
}

fn index_remove(index: &mut Index, a: &Term, b: &Term, c: &Term) -> bool {
    let Some(bs) = index.get_mut(a) else {
        return false;
    };
    let Some(cs) = bs.get_mut(b) else {
        return false;
    };
    let removed = cs.remove(c);
    if cs.is_empty() {
        bs.remove(b);
        if bs.is_empty() {
            index.remove(a);
        }
    }
    removed
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len && self.spo == other.spo
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Graph({} triples)", self.len)?;
        for t in self.iter() {
            writeln!(f, "  {t}")?;
        }
        Ok(())
    }
}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        let mut g = Graph::new();
        for t in iter {
            g.insert(t);
        }
        g
    }
}

impl Extend<Triple> for Graph {
    fn extend<I: IntoIterator<Item = Triple>>(&mut self, iter: I) {
        for t in iter {
            self.insert(t);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iri(s: &str) -> Term {
        Term::iri(s).unwrap()
    }

    fn t(s: &str, p: &str, o: &str) -> Triple {
        Triple::new(iri(s), iri(p), iri(o)).unwrap()
    }

    #[test]
    fn duplicate_insert_keeps_size() {
        let mut g = Graph::new();
        assert!(g.insert(t("http://e/s", "http://e/p", "http://e/o")));
        assert_eq!(g.len(), 1);
        assert!(!g.insert(t("http://e/s", "http://e/p", "http://e/o")));
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn distinct_objects_grow_size() {
        let mut g = Graph::new();
        g.insert(t("http://e/s", "http://e/p", "http://e/o1"));
        g.insert(t("http://e/s", "http://e/p", "http://e/o2"));
        assert_eq!(g.len(), 2);
    }

    #[test]
    fn insert_then_remove_restores() {
        let mut g = Graph::new();
        g.insert(t("http://e/s", "http://e/p", "http://e/o"));
        let before = g.clone();
        let extra = t("http://e/x", "http://e/p", "http://e/o");
        g.insert(extra.clone());
        assert_ne!(g, before);
        assert!(g.remove(&extra));
        assert_eq!(g, before);
        assert!(!g.remove(&extra));
    }

    #[test]
    fn match_on_empty_graph_is_empty() {
        let g = Graph::new();
        assert_eq!(g.matching(None, None, None).count(), 0);
    }

    #[test]
    fn all_patterns_hit_the_right_index() {
        let mut g = Graph::new();
        g.insert(t("http://e/s1", "http://e/p1", "http://e/o1"));
        g.insert(t("http://e/s1", "http://e/p2", "http://e/o2"));
        g.insert(t("http://e/s2", "http://e/p1", "http://e/o1"));

        let s1 = iri("http://e/s1");
        let p1 = iri("http://e/p1");
        let o1 = iri("http://e/o1");

        assert_eq!(g.matching(Some(&s1), None, None).count(), 2);
        assert_eq!(g.matching(None, Some(&p1), None).count(), 2);
        assert_eq!(g.matching(None, None, Some(&o1)).count(), 2);
        assert_eq!(g.matching(Some(&s1), Some(&p1), None).count(), 1);
        assert_eq!(g.matching(None, Some(&p1), Some(&o1)).count(), 2);
        assert_eq!(g.matching(Some(&s1), None, Some(&o1)).count(), 1);
        assert_eq!(g.matching(Some(&s1), Some(&p1), Some(&o1)).count(), 1);
        assert_eq!(g.matching(None, None, None).count(), 3);
    }

    #[test]
    fn result_description_grows_one_triple_at_a_time() {
        // The three property triples of a measurement result, then its
        // type triple.
        let mut g = Graph::new();
        let result = "https://w3id.org/squap/examples/gqm/compatibility-result";
        g.insert(t(
            result,
            "https://w3id.org/squap/assesses",
            "https://w3id.org/squap/SoftwareQuality/Compatibility",
        ));
        g.insert(t(
            result,
            "https://w3id.org/squap/hasMetric",
            "https://w3id.org/squap/examples/gqm/sonarqube-sw-quality",
        ));
        g.insert(t(
            result,
            "https://w3id.org/squap/hasValue",
            "https://w3id.org/squap/examples/gqm/sonarqube-value-b",
        ));
        assert_eq!(g.len(), 3);
        let subject = iri(result);
        assert_eq!(g.matching(Some(&subject), None, None).count(), 3);

        g.insert(t(
            result,
            "http://www.w3.org/1999/02/22-rdf-syntax-ns#type",
            "https://w3id.org/squap/SoftwareQualityResult",
        ));
        assert_eq!(g.len(), 4);
        assert_eq!(g.matching(Some(&subject), None, None).count(), 4);
    }

    #[test]
    fn indexes_agree_after_removals() {
        let mut g = Graph::new();
        for i in 0..10 {
            g.insert(t(
                &format!("http://e/s{}", i % 3),
                &format!("http://e/p{}", i % 2),
                &format!("http://e/o{i}"),
            ));
        }
        g.remove(&t("http://e/s0", "http://e/p0", "http://e/o0"));
        let spo: BTreeSet<_> = g.triples_via_index(IndexOrder::Spo).into_iter().collect();
        let pos: BTreeSet<_> = g.triples_via_index(IndexOrder::Pos).into_iter().collect();
        let osp: BTreeSet<_> = g.triples_via_index(IndexOrder::Osp).into_iter().collect();
        assert_eq!(spo, pos);
        assert_eq!(spo, osp);
        assert_eq!(spo.len(), g.len());
    }
}
