//! The machine-checkable axiom set, numbered eq1–eq30.
//!
//! Every axiom of the formalisation is registered exactly once under its
//! equation number; duplicated statements of the same disjointness
//! collapse into one entry carrying all of its equation numbers, so a
//! clash is reported once but cites every equation that states it.

use crate::model::vocab as squap;

/// `sub ⊑ sup`, applied as a type-propagation rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubclassAxiom {
    pub sub: &'static str,
    pub sup: &'static str,
    pub eq: u32,
}

/// `a` and `b` share no instances. `eqs` lists every equation stating
/// this pair, in either order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointnessAxiom {
    pub a: &'static str,
    pub b: &'static str,
    pub eqs: &'static [u32],
}

/// `class` is covered by `subtypes` (the union direction); audited in
/// strict mode, never case-split during inference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringAxiom {
    pub class: &'static str,
    pub subtypes: &'static [&'static str],
    pub eq: u32,
}

/// `class ⊑ ∀property.object_class`, applied as object typing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalAxiom {
    pub class: &'static str,
    pub property: &'static str,
    pub object_class: &'static str,
    pub eq: u32,
}

/// `class ⊑ ∃p.C` for at least one of `properties`. Validation only: no
/// individual is ever invented to satisfy it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistentialAxiom {
    pub class: &'static str,
    pub properties: &'static [&'static str],
    pub eq: u32,
}

/// `class ⊑ =1 property`. The upper bound is checked under the unique
/// name assumption; `strict_lower` marks the axioms whose lower bound is
/// also audited in strict mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCardinalityAxiom {
    pub class: &'static str,
    pub property: &'static str,
    pub eq: u32,
    pub strict_lower: bool,
}

/// `first ∘ second ⊑ implied`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainAxiom {
    pub first: &'static str,
    pub second: &'static str,
    pub implied: &'static str,
    pub eq: u32,
}

/// A view of the axiom registered under one equation number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Axiom<'a> {
    Subclass(&'a SubclassAxiom),
    Disjointness(&'a DisjointnessAxiom),
    Covering(&'a CoveringAxiom),
    Universal(&'a UniversalAxiom),
    Existential(&'a ExistentialAxiom),
    ExactCardinality(&'a ExactCardinalityAxiom),
    Chain(&'a ChainAxiom),
}

#[derive(Debug, Clone)]
pub struct AxiomSet {
    pub subclass: Vec<SubclassAxiom>,
    pub disjointness: Vec<DisjointnessAxiom>,
    pub covering: Vec<CoveringAxiom>,
    pub universal: Vec<UniversalAxiom>,
    pub existential: Vec<ExistentialAxiom>,
    pub cardinality: Vec<ExactCardinalityAxiom>,
    /// Properties closed transitively.
    pub transitive: Vec<&'static str>,
    pub chains: Vec<ChainAxiom>,
    /// Declared inverse pairs, completed in both directions.
    pub inverses: Vec<(&'static str, &'static str)>,
    /// `(sub, sup)` property pairs: every `sub` assertion also holds as
    /// `sup`.
    pub subproperties: Vec<(&'static str, &'static str)>,
}

impl AxiomSet {
    /// The SQuAP axiom set.
    pub fn standard() -> AxiomSet {
        AxiomSet {
            subclass: vec![
                SubclassAxiom {
                    sub: squap::VALUE,
                    sup: squap::REGION,
                    eq: 1,
                },
                SubclassAxiom {
                    sub: squap::SOFTWARE_QUALITY_CHARACTERISTIC,
                    sup: squap::CONCEPT,
                    eq: 5,
                },
                SubclassAxiom {
                    sub: squap::ARCHITECTURAL_ALIGNMENT,
                    sup: squap::SOFTWARE_QUALITY_CHARACTERISTIC,
                    eq: 7,
                },
                SubclassAxiom {
                    sub: squap::PROCESS_MATURITY,
                    sup: squap::SOFTWARE_QUALITY_CHARACTERISTIC,
                    eq: 10,
                },
                SubclassAxiom {
                    sub: squap::SOFTWARE_QUALITY,
                    sup: squap::SOFTWARE_QUALITY_CHARACTERISTIC,
                    eq: 13,
                },
                SubclassAxiom {
                    sub: squap::SOFTWARE_QUALITY_FACTOR,
                    sup: squap::DESCRIPTION,
                    eq: 18,
                },
                SubclassAxiom {
                    sub: squap::ARCHITECTURAL_ALIGNMENT_RESULT,
                    sup: squap::MEASUREMENT_RESULT,
                    eq: 24,
                },
                SubclassAxiom {
                    sub: squap::PROCESS_MATURITY_RESULT,
                    sup: squap::MEASUREMENT_RESULT,
                    eq: 25,
                },
                SubclassAxiom {
                    sub: squap::SOFTWARE_QUALITY_RESULT,
                    sup: squap::MEASUREMENT_RESULT,
                    eq: 26,
                },
                SubclassAxiom {
                    sub: squap::FACTOR_OCCURRENCE,
                    sup: squap::SITUATION,
                    eq: 27,
                },
            ],
            disjointness: vec![
                DisjointnessAxiom {
                    a: squap::CONCEPT,
                    b: squap::DESCRIPTION,
                    eqs: &[3, 4, 16],
                },
                DisjointnessAxiom {
                    a: squap::ARCHITECTURAL_ALIGNMENT,
                    b: squap::PROCESS_MATURITY,
                    eqs: &[8, 11],
                },
                DisjointnessAxiom {
                    a: squap::ARCHITECTURAL_ALIGNMENT,
                    b: squap::SOFTWARE_QUALITY,
                    eqs: &[9, 14],
                },
                DisjointnessAxiom {
                    a: squap::PROCESS_MATURITY,
                    b: squap::SOFTWARE_QUALITY,
                    eqs: &[12, 15],
                },
                DisjointnessAxiom {
                    a: squap::DESCRIPTION,
                    b: squap::SITUATION,
                    eqs: &[17],
                },
            ],
            covering: vec![CoveringAxiom {
                class: squap::SOFTWARE_QUALITY_CHARACTERISTIC,
                subtypes: &[
                    squap::ARCHITECTURAL_ALIGNMENT,
                    squap::PROCESS_MATURITY,
                    squap::SOFTWARE_QUALITY,
                ],
                eq: 6,
            }],
            universal: vec![UniversalAxiom {
                class: squap::SOFTWARE_QUALITY_FACTOR,
                property: squap::USES_QUALITY_CHARACTERISTIC,
                object_class: squap::SOFTWARE_QUALITY_CHARACTERISTIC,
                eq: 19,
            }],
            existential: vec![
                // The factor-level existential accepts either property:
                // usesQualityCharacteristic is a sub-property of
                // usesConcept and the bundled data links factors through
                // both.
                ExistentialAxiom {
                    class: squap::SOFTWARE_QUALITY_FACTOR,
                    properties: &[squap::USES_QUALITY_CHARACTERISTIC, squap::USES_CONCEPT],
                    eq: 20,
                },
                ExistentialAxiom {
                    class: squap::MEASUREMENT_RESULT,
                    properties: &[squap::ASSESSES],
                    eq: 21,
                },
                ExistentialAxiom {
                    class: squap::FACTOR_OCCURRENCE,
                    properties: &[squap::IS_AFFECTED_BY],
                    eq: 28,
                },
                ExistentialAxiom {
                    class: squap::FACTOR_OCCURRENCE,
                    properties: &[squap::SATISFIES_FACTOR],
                    eq: 29,
                },
            ],
            cardinality: vec![
                ExactCardinalityAxiom {
                    class: squap::VALUE,
                    property: squap::VALUE_PROP,
                    eq: 2,
                    strict_lower: false,
                },
                ExactCardinalityAxiom {
                    class: squap::MEASUREMENT_RESULT,
                    property: squap::HAS_VALUE,
                    eq: 22,
                    strict_lower: true,
                },
                ExactCardinalityAxiom {
                    class: squap::MEASUREMENT_RESULT,
                    property: squap::HAS_METRIC,
                    eq: 23,
                    strict_lower: true,
                },
            ],
            transitive: vec![squap::SPECIALIZES],
            chains: vec![ChainAxiom {
                first: squap::USES_CONCEPT,
                second: squap::SPECIALIZES,
                implied: squap::USES_CONCEPT,
                eq: 30,
            }],
            inverses: vec![
                (squap::SPECIALIZES, squap::IS_SPECIALIZED_BY),
                (squap::IS_AFFECTED_BY, squap::AFFECTS_MEASUREMENT_OF),
            ],
            subproperties: vec![(squap::USES_QUALITY_CHARACTERISTIC, squap::USES_CONCEPT)],
        }
    }

    /// The axiom registered under an equation number (1–30).
    pub fn equation(&self, eq: u32) -> Option<Axiom<'_>> {
        if let Some(a) = self.subclass.iter().find(|a| a.eq == eq) {
            return Some(Axiom::Subclass(a));
        }
        if let Some(a) = self.disjointness.iter().find(|a| a.eqs.contains(&eq)) {
            return Some(Axiom::Disjointness(a));
        }
        if let Some(a) = self.covering.iter().find(|a| a.eq == eq) {
            return Some(Axiom::Covering(a));
        }
        if let Some(a) = self.universal.iter().find(|a| a.eq == eq) {
            return Some(Axiom::Universal(a));
        }
        if let Some(a) = self.cardinality.iter().find(|a| a.eq == eq) {
            return Some(Axiom::ExactCardinality(a));
        }
        if let Some(a) = self.existential.iter().find(|a| a.eq == eq) {
            return Some(Axiom::Existential(a));
        }
        if let Some(a) = self.chains.iter().find(|a| a.eq == eq) {
            return Some(Axiom::Chain(a));
        }
        None
    }
}
