//! Turtle subset reader and writer.
//!
//! This is the wire format for every file the engine touches: ontology,
//! catalog, measurement input, and inference output. The grammar covers
//! what those files need (prefix declarations, predicate/object lists,
//! typed and language-tagged literals, bare integers and booleans, blank
//! node labels, comments); collections, anonymous blank nodes, and
//! multiline strings are out of scope.

mod parser;
mod writer;

use std::fmt;

use thiserror::Error;

pub use parser::parse;
pub use writer::{literal_to_turtle, serialize, to_ntriples, triple_to_ntriples};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedToken,
    UndeclaredPrefix,
    BadIri,
    BadLiteral,
    UnterminatedStatement,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            ParseErrorKind::UnexpectedToken => "unexpected token",
            ParseErrorKind::UndeclaredPrefix => "undeclared prefix",
            ParseErrorKind::BadIri => "bad IRI",
            ParseErrorKind::BadLiteral => "bad literal",
            ParseErrorKind::UnterminatedStatement => "unterminated statement",
        };
        f.write_str(text)
    }
}

/// A parse failure, pointing at the offending token. Parsing is
/// fail-fast: no partial graph is produced.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}: {message}")]
pub struct ParseError {
    pub line: u32,
    pub column: u32,
    pub kind: ParseErrorKind,
    pub message: String,
}
