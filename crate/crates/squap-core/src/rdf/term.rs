//! RDF terms: IRIs, literals, and blank nodes.
//!
//! Term equality is strictly lexical. `"7"^^xsd:integer` and
//! `"07"^^xsd:integer` are different terms; no value-space normalization
//! happens here. Code that needs numeric interpretation does it at the
//! point of use.

use std::fmt;

use thiserror::Error;

use crate::vocab::{rdf, xsd};

/// An absolute IRI.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Iri(String);

impl Iri {
    /// Parses an absolute IRI. The string must start with a scheme
    /// (`ALPHA (ALPHA | DIGIT | "+" | "-" | ".")*`) followed by `:`.
    pub fn new(value: impl Into<String>) -> Result<Self, TermError> {
        let value = value.into();
        if has_scheme(&value) {
            Ok(Iri(value))
        } else {
            Err(TermError::RelativeIri(value))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

fn has_scheme(value: &str) -> bool {
    let Some(colon) = value.find(':') else {
        return false;
    };
    let scheme = &value[..colon];
    let mut chars = scheme.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'))
}

/// A blank node label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlankNode(String);

impl BlankNode {
    pub fn new(label: impl Into<String>) -> Self {
        BlankNode(label.into())
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for BlankNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "_:{}", self.0)
    }
}

/// An RDF literal: lexical form plus exactly one datatype IRI, with a
/// language tag when (and only when) the datatype is `rdf:langString`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    lexical: String,
    datatype: Iri,
    language: Option<String>,
}

impl Literal {
    /// A plain string literal, typed `xsd:string`.
    pub fn string(lexical: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype: Iri::new(xsd::STRING).expect("xsd:string is absolute"),
            language: None,
        }
    }

    /// A literal with an explicit datatype. `rdf:langString` is rejected
    /// here; language-tagged literals go through [`Literal::lang`].
    pub fn typed(
        lexical: impl Into<String>,
        datatype: impl Into<String>,
    ) -> Result<Self, TermError> {
        let datatype = datatype.into();
        if datatype == rdf::LANG_STRING {
            return Err(TermError::LangStringWithoutTag);
        }
        Ok(Literal {
            lexical: lexical.into(),
            datatype: Iri::new(datatype)?,
            language: None,
        })
    }

    /// A language-tagged literal, typed `rdf:langString`.
    pub fn lang(lexical: impl Into<String>, tag: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype: Iri::new(rdf::LANG_STRING).expect("rdf:langString is absolute"),
            language: Some(tag.into()),
        }
    }

    /// An integer literal, typed `xsd:integer`.
    pub fn integer(value: i64) -> Self {
        Literal {
            lexical: value.to_string(),
            datatype: Iri::new(xsd::INTEGER).expect("xsd:integer is absolute"),
            language: None,
        }
    }

    /// A boolean literal, typed `xsd:boolean`.
    pub fn boolean(value: bool) -> Self {
        Literal {
            lexical: value.to_string(),
            datatype: Iri::new(xsd::BOOLEAN).expect("xsd:boolean is absolute"),
            language: None,
        }
    }

    pub fn lexical_form(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> &Iri {
        &self.datatype
    }

    pub fn language(&self) -> Option<&str> {
        self.language.as_deref()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", escape_literal(&self.lexical))?;
        if let Some(tag) = &self.language {
            write!(f, "@{tag}")
        } else if self.datatype.as_str() == xsd::STRING {
            Ok(())
        } else {
            write!(f, "^^{}", self.datatype)
        }
    }
}

pub(crate) fn escape_literal(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            _ => out.push(c),
        }
    }
    out
}

/// An RDF term. The variant order (IRI, blank, literal) is also the sort
/// order used by the indexes and the serializer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Iri(Iri),
    Blank(BlankNode),
    Literal(Literal),
}

impl Term {
    pub fn iri(value: impl Into<String>) -> Result<Self, TermError> {
        Ok(Term::Iri(Iri::new(value)?))
    }

    pub fn blank(label: impl Into<String>) -> Self {
        Term::Blank(BlankNode::new(label))
    }

    pub fn literal_str(lexical: impl Into<String>) -> Self {
        Term::Literal(Literal::string(lexical))
    }

    pub fn literal_typed(
        lexical: impl Into<String>,
        datatype: impl Into<String>,
    ) -> Result<Self, TermError> {
        Ok(Term::Literal(Literal::typed(lexical, datatype)?))
    }

    pub fn literal_lang(lexical: impl Into<String>, tag: impl Into<String>) -> Self {
        Term::Literal(Literal::lang(lexical, tag))
    }

    pub fn literal_integer(value: i64) -> Self {
        Term::Literal(Literal::integer(value))
    }

    pub fn is_iri(&self) -> bool {
        matches!(self, Term::Iri(_))
    }

    pub fn is_blank(&self) -> bool {
        matches!(self, Term::Blank(_))
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Term::Literal(_))
    }

    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Term::Literal(lit) => Some(lit),
            _ => None,
        }
    }

    /// The IRI string, when this term is an IRI.
    pub fn iri_str(&self) -> Option<&str> {
        self.as_iri().map(Iri::as_str)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(iri) => iri.fmt(f),
            Term::Blank(b) => b.fmt(f),
            Term::Literal(lit) => lit.fmt(f),
        }
    }
}

/// A single RDF statement. The constructor enforces that the predicate is
/// an IRI and the subject is not a literal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    subject: Term,
    predicate: Term,
    object: Term,
}

impl Triple {
    pub fn new(subject: Term, predicate: Term, object: Term) -> Result<Self, TripleError> {
        if subject.is_literal() {
            return Err(TripleError::LiteralSubject(subject.to_string()));
        }
        if !predicate.is_iri() {
            return Err(TripleError::NonIriPredicate(predicate.to_string()));
        }
        Ok(Triple {
            subject,
            predicate,
            object,
        })
    }

    /// Builds a triple whose parts are already known to satisfy the
    /// invariants (rule engines, index reconstruction).
    pub(crate) fn new_unchecked(subject: Term, predicate: Term, object: Term) -> Self {
        debug_assert!(!subject.is_literal());
        debug_assert!(predicate.is_iri());
        Triple {
            subject,
            predicate,
            object,
        }
    }

    pub fn subject(&self) -> &Term {
        &self.subject
    }

    pub fn predicate(&self) -> &Term {
        &self.predicate
    }

    pub fn object(&self) -> &Term {
        &self.object
    }

    pub fn into_parts(self) -> (Term, Term, Term) {
        (self.subject, self.predicate, self.object)
    }
}

impl fmt::Display for Triple {
    /// N-Triples form, including the terminating dot.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} .", self.subject, self.predicate, self.object)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("IRI is not absolute (missing scheme): {0:?}")]
    RelativeIri(String),
    #[error("rdf:langString literals require a language tag")]
    LangStringWithoutTag,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripleError {
    #[error("triple subject may not be a literal: {0}")]
    LiteralSubject(String),
    #[error("triple predicate must be an IRI: {0}")]
    NonIriPredicate(String),
}
