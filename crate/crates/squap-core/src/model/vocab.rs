//! The SQuAP vocabulary: every class and property IRI, the namespace
//! stems, and the default prefix bindings.
//!
//! Individual IRIs follow the convention that the type name precedes the
//! local ID, realized through per-dimension namespace stems
//! (`.../ArchitecturalAlignment/ObjectiveCharacteristic` is the
//! individual `ObjectiveCharacteristic` typed `ArchitecturalAlignment`).

use crate::rdf::{PrefixMap, Term};

pub const NS: &str = "https://w3id.org/squap/";
pub const NS_FACTOR: &str = "https://w3id.org/squap/Factor/";
pub const NS_SOFTWARE_QUALITY: &str = "https://w3id.org/squap/SoftwareQuality/";
pub const NS_ARCHITECTURAL_ALIGNMENT: &str = "https://w3id.org/squap/ArchitecturalAlignment/";
pub const NS_PROCESS_MATURITY: &str = "https://w3id.org/squap/ProcessMaturity/";
pub const NS_CATALOG: &str = "https://w3id.org/squap/catalog/";

// Classes.
pub const REGION: &str = "https://w3id.org/squap/Region";
pub const VALUE: &str = "https://w3id.org/squap/Value";
pub const PARAMETER: &str = "https://w3id.org/squap/Parameter";
pub const METRIC: &str = "https://w3id.org/squap/Metric";
pub const CONCEPT: &str = "https://w3id.org/squap/Concept";
pub const DESCRIPTION: &str = "https://w3id.org/squap/Description";
pub const SITUATION: &str = "https://w3id.org/squap/Situation";
pub const SOFTWARE_QUALITY_CHARACTERISTIC: &str =
    "https://w3id.org/squap/SoftwareQualityCharacteristic";
pub const SOFTWARE_QUALITY: &str = "https://w3id.org/squap/SoftwareQuality";
pub const ARCHITECTURAL_ALIGNMENT: &str = "https://w3id.org/squap/ArchitecturalAlignment";
pub const PROCESS_MATURITY: &str = "https://w3id.org/squap/ProcessMaturity";
pub const SOFTWARE_QUALITY_FACTOR: &str = "https://w3id.org/squap/SoftwareQualityFactor";
pub const MEASUREMENT_RESULT: &str = "https://w3id.org/squap/MeasurementResult";
pub const SOFTWARE_QUALITY_RESULT: &str = "https://w3id.org/squap/SoftwareQualityResult";
pub const ARCHITECTURAL_ALIGNMENT_RESULT: &str =
    "https://w3id.org/squap/ArchitecturalAlignmentResult";
pub const PROCESS_MATURITY_RESULT: &str = "https://w3id.org/squap/ProcessMaturityResult";
pub const FACTOR_OCCURRENCE: &str = "https://w3id.org/squap/FactorOccurrence";

// Object properties.
pub const USES_QUALITY_CHARACTERISTIC: &str = "https://w3id.org/squap/usesQualityCharacteristic";
pub const USES_CONCEPT: &str = "https://w3id.org/squap/usesConcept";
pub const SPECIALIZES: &str = "https://w3id.org/squap/specializes";
pub const IS_SPECIALIZED_BY: &str = "https://w3id.org/squap/isSpecializedBy";
pub const ASSESSES: &str = "https://w3id.org/squap/assesses";
pub const HAS_VALUE: &str = "https://w3id.org/squap/hasValue";
pub const HAS_METRIC: &str = "https://w3id.org/squap/hasMetric";
pub const HAS_PARAMETER: &str = "https://w3id.org/squap/hasParameter";
pub const PARAMETRIZES: &str = "https://w3id.org/squap/parametrizes";
pub const IS_AFFECTED_BY: &str = "https://w3id.org/squap/isAffectedBy";
pub const AFFECTS_MEASUREMENT_OF: &str = "https://w3id.org/squap/affectsMeasurementOf";
pub const SATISFIES_FACTOR: &str = "https://w3id.org/squap/satisfiesFactor";
pub const IS_SETTING_FOR: &str = "https://w3id.org/squap/isSettingFor";
pub const CLASSIFIES: &str = "https://w3id.org/squap/classifies";
pub const IS_CLASSIFIED_BY: &str = "https://w3id.org/squap/isClassifiedBy";
pub const SATISFIES: &str = "https://w3id.org/squap/satisfies";
pub const IS_SATISFIED: &str = "https://w3id.org/squap/isSatisfied";

// Data properties.
pub const VALUE_PROP: &str = "https://w3id.org/squap/value";

// Catalog bookkeeping (not part of the ontology vocabulary proper):
// marks a factor entry that ships without characteristic mappings.
pub const CATALOG_STUB: &str = "https://w3id.org/squap/catalog/stub";

/// The term for a vocabulary constant.
pub fn term(iri: &str) -> Term {
    crate::vocab::term(iri)
}

/// Prefix bindings for the SQuAP namespaces plus the W3C standards,
/// matching the bundled files.
pub fn default_prefixes() -> PrefixMap {
    let mut p = PrefixMap::new();
    p.insert("squap", NS);
    p.insert("factor", NS_FACTOR);
    p.insert("sw", NS_SOFTWARE_QUALITY);
    p.insert("arc", NS_ARCHITECTURAL_ALIGNMENT);
    p.insert("prc", NS_PROCESS_MATURITY);
    p.insert("cat", NS_CATALOG);
    p.insert("rdf", crate::vocab::rdf::NS);
    p.insert("rdfs", crate::vocab::rdfs::NS);
    p.insert("owl", crate::vocab::owl::NS);
    p.insert("xsd", crate::vocab::xsd::NS);
    p.insert("opla", crate::vocab::opla::NS);
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_vocabulary_iris_share_the_base_namespace() {
        for iri in [
            REGION,
            VALUE,
            PARAMETER,
            METRIC,
            CONCEPT,
            DESCRIPTION,
            SITUATION,
            SOFTWARE_QUALITY_CHARACTERISTIC,
            SOFTWARE_QUALITY,
            ARCHITECTURAL_ALIGNMENT,
            PROCESS_MATURITY,
            SOFTWARE_QUALITY_FACTOR,
            MEASUREMENT_RESULT,
            SOFTWARE_QUALITY_RESULT,
            ARCHITECTURAL_ALIGNMENT_RESULT,
            PROCESS_MATURITY_RESULT,
            FACTOR_OCCURRENCE,
            USES_QUALITY_CHARACTERISTIC,
            USES_CONCEPT,
            SPECIALIZES,
            IS_SPECIALIZED_BY,
            ASSESSES,
            HAS_VALUE,
            HAS_METRIC,
            HAS_PARAMETER,
            PARAMETRIZES,
            IS_AFFECTED_BY,
            AFFECTS_MEASUREMENT_OF,
            SATISFIES_FACTOR,
            IS_SETTING_FOR,
            CLASSIFIES,
            IS_CLASSIFIED_BY,
            SATISFIES,
            IS_SATISFIED,
            VALUE_PROP,
            CATALOG_STUB,
        ] {
            assert!(iri.starts_with(NS), "{iri} escapes the base namespace");
        }
    }

    #[test]
    fn individual_iris_put_the_type_name_before_the_id() {
        let iri = format!("{NS_ARCHITECTURAL_ALIGNMENT}ObjectiveCharacteristic");
        assert_eq!(
            iri,
            "https://w3id.org/squap/ArchitecturalAlignment/ObjectiveCharacteristic"
        );
        assert!(NS_FACTOR.starts_with(NS));
    }
}
