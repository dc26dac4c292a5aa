//! Factor enablement and occurrence materialization.
//!
//! A factor is enabled when measurement results assess the
//! characteristics it uses. The join mirrors the productive rule the
//! ontology ships with: factor links come from the catalog plus any
//! `usesConcept`/`usesQualityCharacteristic` triples in the (materialized)
//! closure, supporting results are the subjects of `assesses` triples,
//! and each enabled factor mints exactly one occurrence IRI by
//! concatenating the base IRI with the factor's label.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::model::vocab;
use crate::model::{Dimension, FactorCatalog};
use crate::rdf::{Graph, Term, Triple};
use crate::vocab::rdf;

/// Enablement semantics: `Any` follows the productive rule (one assessed
/// characteristic suffices); `All` requires every used characteristic to
/// be assessed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EnableMode {
    #[default]
    Any,
    All,
}

/// One characteristic of an enabled factor that measurement results
/// assess.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedCharacteristic {
    pub characteristic: String,
    /// Supporting measurement result IRIs, sorted.
    pub results: Vec<String>,
}

/// A factor enabled by the available measurements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnabledFactor {
    pub factor: String,
    pub label: Option<String>,
    /// Assessed characteristics with their supporting results; never
    /// empty.
    pub matched: Vec<MatchedCharacteristic>,
    /// Number of characteristics the factor uses in total.
    pub total_characteristics: usize,
}

impl EnabledFactor {
    /// Matched over used characteristics, in `[0, 1]`.
    pub fn coverage(&self) -> f64 {
        if self.total_characteristics == 0 {
            0.0
        } else {
            self.matched.len() as f64 / self.total_characteristics as f64
        }
    }

    /// All supporting result IRIs across characteristics, deduplicated
    /// and sorted.
    pub fn supporting_results(&self) -> Vec<String> {
        let set: BTreeSet<&str> = self
            .matched
            .iter()
            .flat_map(|m| m.results.iter().map(String::as_str))
            .collect();
        set.into_iter().map(str::to_owned).collect()
    }
}

/// How occurrence IRIs are minted: exact concatenation of the base IRI
/// and the factor's label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MintingPolicy {
    pub base: String,
}

pub const DEFAULT_OCCURRENCE_BASE: &str = "https://w3id.org/squap/example/gqm/";

impl Default for MintingPolicy {
    fn default() -> Self {
        MintingPolicy {
            base: DEFAULT_OCCURRENCE_BASE.to_owned(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("factor <{factor}> has no rdfs:label; the minting policy requires one")]
    MissingLabel { factor: String },
    #[error(
        "factors <{first}> and <{second}> share the label {label:?}; occurrence IRIs would collide"
    )]
    LabelCollision {
        label: String,
        first: String,
        second: String,
    },
    #[error("minted occurrence IRI is not a valid IRI: {iri:?}")]
    InvalidOccurrenceIri { iri: String },
    #[error("factor <{iri}> is not in the catalog")]
    UnknownFactor { iri: String },
}

/// The characteristics a factor uses: its catalog entry plus any links
/// asserted or inferred in the closure.
fn used_characteristics(
    closure: &Graph,
    catalog_entry_chars: &[crate::model::CharacteristicRef],
    factor: &Term,
) -> BTreeSet<String> {
    let mut used: BTreeSet<String> = catalog_entry_chars.iter().map(|c| c.iri.clone()).collect();
    for property in [vocab::USES_QUALITY_CHARACTERISTIC, vocab::USES_CONCEPT] {
        let p = vocab::term(property);
        for object in closure.objects(factor, &p) {
            if let Some(iri) = object.iri_str() {
                used.insert(iri.to_owned());
            }
        }
    }
    used
}

fn supporters(closure: &Graph, characteristic: &str) -> Vec<String> {
    let assesses = vocab::term(vocab::ASSESSES);
    let c = vocab::term(characteristic);
    let mut out: Vec<String> = closure
        .subjects(&assesses, &c)
        .filter_map(|s| match s {
            Term::Iri(iri) => Some(iri.into_string()),
            Term::Blank(b) => Some(format!("_:{}", b.label())),
            Term::Literal(_) => None,
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Computes the factors enabled by the measurements in `closure`, sorted
/// by factor IRI. An empty input graph yields an empty list.
pub fn enabled_factors(
    closure: &Graph,
    catalog: &FactorCatalog,
    mode: EnableMode,
) -> Vec<EnabledFactor> {
    let mut out = Vec::new();
    for entry in catalog.entries() {
        let factor = vocab::term(&entry.iri);
        let used = used_characteristics(closure, &entry.characteristics, &factor);
        if used.is_empty() {
            continue;
        }
        let mut matched = Vec::new();
        for characteristic in &used {
            let results = supporters(closure, characteristic);
            if !results.is_empty() {
                matched.push(MatchedCharacteristic {
                    characteristic: characteristic.clone(),
                    results,
                });
            }
        }
        let enabled = match mode {
            EnableMode::Any => !matched.is_empty(),
            EnableMode::All => !matched.is_empty() && matched.len() == used.len(),
        };
        if enabled {
            out.push(EnabledFactor {
                factor: entry.iri.clone(),
                label: entry.label.clone(),
                matched,
                total_characteristics: used.len(),
            });
        }
    }
    out
}

fn valid_iri(iri: &str) -> bool {
    Term::iri(iri).is_ok()
        && iri
            .chars()
            .all(|c| c > ' ' && !matches!(c, '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\'))
}

/// Materializes occurrence triples for every enabled factor: one
/// occurrence per factor (minted as `base + label`), typed
/// `squap:FactorOccurrence`, satisfying the factor, and linked to each
/// supporting result in both directions. Returns only triples absent
/// from the closure, so re-running on the union adds nothing.
pub fn materialize_occurrences(
    closure: &Graph,
    catalog: &FactorCatalog,
    policy: &MintingPolicy,
    mode: EnableMode,
) -> Result<Graph, FactorError> {
    let enabled = enabled_factors(closure, catalog, mode);

    let mut seen_labels: BTreeMap<&str, &str> = BTreeMap::new();
    for factor in &enabled {
        let label = factor
            .label
            .as_deref()
            .ok_or_else(|| FactorError::MissingLabel {
                factor: factor.factor.clone(),
            })?;
        if let Some(first) = seen_labels.insert(label, &factor.factor) {
            return Err(FactorError::LabelCollision {
                label: label.to_owned(),
                first: first.to_owned(),
                second: factor.factor.clone(),
            });
        }
    }

    let rdf_type = rdf::type_term();
    let occurrence_class = vocab::term(vocab::FACTOR_OCCURRENCE);
    let satisfies_factor = vocab::term(vocab::SATISFIES_FACTOR);
    let affects = vocab::term(vocab::AFFECTS_MEASUREMENT_OF);
    let is_affected_by = vocab::term(vocab::IS_AFFECTED_BY);

    let mut out = Graph::new();
    let mut emit = |triple: Triple| {
        if !closure.contains(&triple) {
            out.insert(triple);
        }
    };

    for factor in &enabled {
        let label = factor.label.as_deref().expect("checked above");
        let minted = format!("{}{}", policy.base, label);
        if !valid_iri(&minted) {
            return Err(FactorError::InvalidOccurrenceIri { iri: minted });
        }
        let occurrence = vocab::term(&minted);
        emit(Triple::new_unchecked(
            occurrence.clone(),
            rdf_type.clone(),
            occurrence_class.clone(),
        ));
        emit(Triple::new_unchecked(
            occurrence.clone(),
            satisfies_factor.clone(),
            vocab::term(&factor.factor),
        ));
        for result in factor.supporting_results() {
            let result_term = if let Some(label) = result.strip_prefix("_:") {
                Term::blank(label)
            } else {
                vocab::term(&result)
            };
            emit(Triple::new_unchecked(
                result_term.clone(),
                affects.clone(),
                occurrence.clone(),
            ));
            emit(Triple::new_unchecked(
                occurrence.clone(),
                is_affected_by.clone(),
                result_term,
            ));
        }
    }
    Ok(out)
}

fn render_value(term: &Term) -> String {
    match term {
        Term::Literal(lit) => crate::turtle::literal_to_turtle(lit),
        other => other.to_string(),
    }
}

/// One assessment of a characteristic in an explain report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assessment {
    pub result: String,
    pub metrics: Vec<String>,
    /// Literal values reached through `hasValue`/`value`.
    pub values: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicReport {
    pub characteristic: String,
    pub dimension: Option<Dimension>,
    pub assessments: Vec<Assessment>,
}

impl CharacteristicReport {
    pub fn assessed(&self) -> bool {
        !self.assessments.is_empty()
    }
}

/// Everything known about one factor: its characteristics, their
/// dimensions, and how each is assessed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub factor: String,
    pub label: Option<String>,
    pub stub: bool,
    pub characteristics: Vec<CharacteristicReport>,
}

/// Explains a factor against a closure: each used characteristic, its
/// dimension, and the results (with metric and value) assessing it.
pub fn explain(
    factor_iri: &str,
    closure: &Graph,
    catalog: &FactorCatalog,
) -> Result<FactorReport, FactorError> {
    let entry = catalog
        .get(factor_iri)
        .ok_or_else(|| FactorError::UnknownFactor {
            iri: factor_iri.to_owned(),
        })?;

    let factor = vocab::term(&entry.iri);
    let used = used_characteristics(closure, &entry.characteristics, &factor);

    let has_metric = vocab::term(vocab::HAS_METRIC);
    let has_value = vocab::term(vocab::HAS_VALUE);
    let value_prop = vocab::term(vocab::VALUE_PROP);
    let rdf_type = rdf::type_term();

    let mut characteristics = Vec::new();
    for characteristic in used {
        let dimension = entry
            .characteristics
            .iter()
            .find(|c| c.iri == characteristic)
            .map(|c| c.dimension)
            .or_else(|| {
                let c = vocab::term(&characteristic);
                closure
                    .objects(&c, &rdf_type)
                    .find_map(|t| t.iri_str().and_then(Dimension::from_class_iri))
            });

        let mut assessments = Vec::new();
        for result in supporters(closure, &characteristic) {
            let result_term = if let Some(label) = result.strip_prefix("_:") {
                Term::blank(label)
            } else {
                vocab::term(&result)
            };
            let mut metrics: Vec<String> = closure
                .objects(&result_term, &has_metric)
                .filter_map(|m| m.iri_str().map(str::to_owned))
                .collect();
            metrics.sort();
            let mut values = Vec::new();
            for value_node in closure.objects(&result_term, &has_value) {
                for literal in closure.objects(&value_node, &value_prop) {
                    if literal.is_literal() {
                        values.push(literal);
                    }
                }
            }
            values.sort();
            values.dedup();
            assessments.push(Assessment {
                result,
                metrics,
                values,
            });
        }

        characteristics.push(CharacteristicReport {
            characteristic,
            dimension,
            assessments,
        });
    }

    Ok(FactorReport {
        factor: entry.iri.clone(),
        label: entry.label.clone(),
        stub: entry.stub,
        characteristics,
    })
}

impl FactorReport {
    /// Plain-text rendering, one block per characteristic.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let name = self.label.as_deref().unwrap_or(&self.factor);
        let _ = writeln!(out, "factor {name} <{}>", self.factor);
        if self.stub {
            let _ = writeln!(out, "  (stub entry: characteristic mappings not bundled)");
        }
        if self.characteristics.is_empty() {
            let _ = writeln!(out, "  no characteristics");
        }
        for c in &self.characteristics {
            let dimension = c
                .dimension
                .map(|d| d.to_string())
                .unwrap_or_else(|| "unknown dimension".to_owned());
            let _ = writeln!(out, "  {} [{}]", c.characteristic, dimension);
            if c.assessments.is_empty() {
                let _ = writeln!(out, "    unassessed");
            }
            for a in &c.assessments {
                let metrics = if a.metrics.is_empty() {
                    "no metric".to_owned()
                } else {
                    a.metrics.join(", ")
                };
                let values = if a.values.is_empty() {
                    "no value".to_owned()
                } else {
                    a.values
                        .iter()
                        .map(render_value)
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                let _ = writeln!(
                    out,
                    "    assessed by {} metric {} value {}",
                    a.result, metrics, values
                );
            }
        }
        out
    }

    /// Tab-separated records: factor, characteristic, dimension,
    /// assessed flag, result, metrics, values.
    pub fn to_records(&self) -> String {
        let mut out = String::new();
        for c in &self.characteristics {
            let dimension = c
                .dimension
                .map(|d| d.to_string())
                .unwrap_or_else(|| "-".to_owned());
            if c.assessments.is_empty() {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\tunassessed\t-\t-\t-",
                    self.factor, c.characteristic, dimension
                );
            }
            for a in &c.assessments {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\tassessed\t{}\t{}\t{}",
                    self.factor,
                    c.characteristic,
                    dimension,
                    a.result,
                    a.metrics.join(","),
                    a.values
                        .iter()
                        .map(render_value)
                        .collect::<Vec<_>>()
                        .join(",")
                );
            }
        }
        out
    }
}
