//! Loading the factor catalog from a graph.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::vocab;
use crate::rdf::{Graph, Term};

/// The three quality dimensions a characteristic can belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Dimension {
    SoftwareQuality,
    ArchitecturalAlignment,
    ProcessMaturity,
}

impl Dimension {
    pub fn class_iri(self) -> &'static str {
        match self {
            Dimension::SoftwareQuality => vocab::SOFTWARE_QUALITY,
            Dimension::ArchitecturalAlignment => vocab::ARCHITECTURAL_ALIGNMENT,
            Dimension::ProcessMaturity => vocab::PROCESS_MATURITY,
        }
    }

    pub fn from_class_iri(iri: &str) -> Option<Self> {
        match iri {
            vocab::SOFTWARE_QUALITY => Some(Dimension::SoftwareQuality),
            vocab::ARCHITECTURAL_ALIGNMENT => Some(Dimension::ArchitecturalAlignment),
            vocab::PROCESS_MATURITY => Some(Dimension::ProcessMaturity),
            _ => None,
        }
    }

    pub fn all() -> [Dimension; 3] {
        [
            Dimension::SoftwareQuality,
            Dimension::ArchitecturalAlignment,
            Dimension::ProcessMaturity,
        ]
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Dimension::SoftwareQuality => "software quality",
            Dimension::ArchitecturalAlignment => "architectural alignment",
            Dimension::ProcessMaturity => "process maturity",
        };
        f.write_str(name)
    }
}

/// A characteristic a factor uses, with its dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicRef {
    pub iri: String,
    pub dimension: Dimension,
}

/// One catalog entry. Stub entries carry a label but no characteristic
/// mappings yet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorEntry {
    pub iri: String,
    pub label: Option<String>,
    pub characteristics: Vec<CharacteristicRef>,
    pub stub: bool,
}

/// The quality factors and the characteristics each uses, loaded from a
/// catalog graph. Entries are sorted by factor IRI.
#[derive(Debug, Clone, Default)]
pub struct FactorCatalog {
    entries: Vec<FactorEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error(
        "factor <{factor}> uses no quality characteristic and carries no stub marker \
         (axiom eq20 requires at least one)"
    )]
    UnmappedFactor { factor: String },
    #[error(
        "characteristic <{characteristic}> is typed with two disjoint dimensions \
         ({first} and {second})"
    )]
    DimensionClash {
        characteristic: String,
        first: Dimension,
        second: Dimension,
    },
    #[error("characteristic <{characteristic}> used by factor <{factor}> has no dimension type")]
    MissingDimension {
        characteristic: String,
        factor: String,
    },
}

impl FactorCatalog {
    /// Builds the catalog: one entry per individual typed
    /// `squap:SoftwareQualityFactor`, characteristics gathered through
    /// `usesQualityCharacteristic` and `usesConcept`, dimensions read
    /// from the characteristics' type triples in the same graph.
    pub fn load(graph: &Graph) -> Result<Self, CatalogError> {
        let factor_class = vocab::term(vocab::SOFTWARE_QUALITY_FACTOR);
        let label_prop = crate::vocab::term(crate::vocab::rdfs::LABEL);
        let stub_prop = vocab::term(vocab::CATALOG_STUB);
        let uses = [
            vocab::term(vocab::USES_QUALITY_CHARACTERISTIC),
            vocab::term(vocab::USES_CONCEPT),
        ];

        let mut factors: Vec<Term> = graph.instances_of(&factor_class).collect();
        factors.sort();
        factors.dedup();

        let mut entries = Vec::with_capacity(factors.len());
        for factor in factors {
            let factor_iri = factor
                .iri_str()
                .expect("factor individuals are IRIs in the bundled data")
                .to_owned();

            let label = graph
                .objects(&factor, &label_prop)
                .find_map(|o| o.as_literal().map(|l| l.lexical_form().to_owned()));

            let stub = graph.objects(&factor, &stub_prop).next().is_some();

            let mut characteristic_iris: Vec<String> = uses
                .iter()
                .flat_map(|p| graph.objects(&factor, p))
                .filter_map(|o| o.iri_str().map(str::to_owned))
                .collect();
            characteristic_iris.sort();
            characteristic_iris.dedup();

            if characteristic_iris.is_empty() && !stub {
                return Err(CatalogError::UnmappedFactor { factor: factor_iri });
            }

            let mut characteristics = Vec::with_capacity(characteristic_iris.len());
            for iri in characteristic_iris {
                let dimension = dimension_of(graph, &iri, &factor_iri)?;
                characteristics.push(CharacteristicRef { iri, dimension });
            }

            entries.push(FactorEntry {
                iri: factor_iri,
                label,
                characteristics,
                stub,
            });
        }
        Ok(FactorCatalog { entries })
    }

    pub fn entries(&self) -> &[FactorEntry] {
        &self.entries
    }

    pub fn get(&self, iri: &str) -> Option<&FactorEntry> {
        self.entries.iter().find(|e| e.iri == iri)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Characteristic dimensions known to the catalog, for callers that
    /// need to classify characteristics outside any factor entry.
    pub fn dimension_of(&self, characteristic: &str) -> Option<Dimension> {
        self.entries
            .iter()
            .flat_map(|e| e.characteristics.iter())
            .find(|c| c.iri == characteristic)
            .map(|c| c.dimension)
    }
}

fn dimension_of(
    graph: &Graph,
    characteristic: &str,
    factor: &str,
) -> Result<Dimension, CatalogError> {
    let term = vocab::term(characteristic);
    let mut found: BTreeMap<Dimension, ()> = BTreeMap::new();
    for class in graph.objects(&term, &crate::vocab::rdf::type_term()) {
        if let Some(dim) = class.iri_str().and_then(Dimension::from_class_iri) {
            found.insert(dim, ());
        }
    }
    let mut dims = found.into_keys();
    let Some(first) = dims.next() else {
        return Err(CatalogError::MissingDimension {
            characteristic: characteristic.to_owned(),
            factor: factor.to_owned(),
        });
    };
    if let Some(second) = dims.next() {
        return Err(CatalogError::DimensionClash {
            characteristic: characteristic.to_owned(),
            first,
            second,
        });
    }
    Ok(first)
}
