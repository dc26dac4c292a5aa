//! Prefix label to namespace mapping.

use std::collections::BTreeMap;

/// Maps prefix labels (possibly empty, for the default `:` prefix) to
/// namespace IRIs. Expansion is exact concatenation of namespace and
/// local part.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrefixMap {
    entries: BTreeMap<String, String>,
}

impl PrefixMap {
    pub fn new() -> Self {
        PrefixMap::default()
    }

    /// Binds a label; a later binding for the same label wins.
    pub fn insert(&mut self, label: impl Into<String>, namespace: impl Into<String>) {
        self.entries.insert(label.into(), namespace.into());
    }

    pub fn namespace(&self, label: &str) -> Option<&str> {
        self.entries.get(label).map(String::as_str)
    }

    pub fn expand(&self, label: &str, local: &str) -> Option<String> {
        self.namespace(label).map(|ns| format!("{ns}{local}"))
    }

    /// Expands a `prefix:local` name, splitting at the first colon.
    pub fn resolve(&self, pname: &str) -> Option<String> {
        let (label, local) = pname.split_once(':')?;
        self.expand(label, local)
    }

    /// Finds the longest declared namespace that prefixes `iri`, returning
    /// the label and the remaining local part.
    pub fn compact<'a>(&'a self, iri: &'a str) -> Option<(&'a str, &'a str)> {
        self.entries
            .iter()
            .filter(|(_, ns)| iri.starts_with(ns.as_str()) && !ns.is_empty())
            .max_by_key(|(_, ns)| ns.len())
            .map(|(label, ns)| (label.as_str(), &iri[ns.len()..]))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(l, n)| (l.as_str(), n.as_str()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Copies every binding from `other`, overriding clashes.
    pub fn merge(&mut self, other: &PrefixMap) {
        for (label, ns) in other.iter() {
            self.insert(label, ns);
        }
    }
}
