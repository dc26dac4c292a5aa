//! Recursive-descent parser for the Turtle subset.
//!
//! Supported syntax: `@prefix` declarations, absolute IRIs in angle
//! brackets, prefixed names, blank node labels, the `a` keyword,
//! predicate lists with `;`, object lists with `,`, string literals with
//! `^^` datatype or `@lang` annotations, bare integers and booleans, and
//! `#` comments. The first error aborts the parse; no partial graph is
//! returned.

use std::collections::VecDeque;

use super::{ParseError, ParseErrorKind};
use crate::rdf::{Graph, PrefixMap, Term, Triple};
use crate::vocab::{rdf, xsd};

pub fn parse(source: &str, base: Option<&str>) -> Result<(Graph, PrefixMap), ParseError> {
    // Tolerate a UTF-8 byte order mark at the start of the document.
    let source = source.strip_prefix('\u{feff}').unwrap_or(source);
    Parser::new(source, base)?.run()
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    IriRef(String),
    PName { prefix: String, local: String },
    BlankLabel(String),
    StringLit(String),
    Integer(String),
    Boolean(bool),
    A,
    PrefixKeyword,
    LangTag(String),
    Semicolon,
    Comma,
    Dot,
    CaretCaret,
    Eof,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::IriRef(i) => format!("<{i}>"),
            Token::PName { prefix, local } => format!("{prefix}:{local}"),
            Token::BlankLabel(l) => format!("_:{l}"),
            Token::StringLit(_) => "string literal".into(),
            Token::Integer(v) => v.clone(),
            Token::Boolean(b) => b.to_string(),
            Token::A => "'a'".into(),
            Token::PrefixKeyword => "@prefix".into(),
            Token::LangTag(t) => format!("@{t}"),
            Token::Semicolon => "';'".into(),
            Token::Comma => "','".into(),
            Token::Dot => "'.'".into(),
            Token::CaretCaret => "'^^'".into(),
            Token::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: u32,
    column: u32,
}

struct Lexer {
    chars: Vec<char>,
    at: usize,
    line: u32,
    column: u32,
    pending: VecDeque<(Token, Pos)>,
}

impl Lexer {
    fn new(source: &str) -> Self {
        Lexer {
            chars: source.chars().collect(),
            at: 0,
            line: 1,
            column: 1,
            pending: VecDeque::new(),
        }
    }

    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            column: self.column,
        }
    }

    fn peek_char(&self) -> Option<char> {
        self.chars.get(self.at).copied()
    }

    fn peek_char_at(&self, ahead: usize) -> Option<char> {
        self.chars.get(self.at + ahead).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.at).copied()?;
        self.at += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        loop {
            match self.peek_char() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while let Some(c) = self.peek_char() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    fn next_token(&mut self) -> Result<(Token, Pos), ParseError> {
        if let Some(tok) = self.pending.pop_front() {
            return Ok(tok);
        }
        self.skip_trivia();
        let pos = self.pos();
        let Some(c) = self.peek_char() else {
            return Ok((Token::Eof, pos));
        };
        match c {
            '<' => self.lex_iriref(pos),
            '"' => self.lex_string(pos),
            '@' => self.lex_at_word(pos),
            ';' => {
                self.bump();
                Ok((Token::Semicolon, pos))
            }
            ',' => {
                self.bump();
                Ok((Token::Comma, pos))
            }
            '.' => {
                self.bump();
                Ok((Token::Dot, pos))
            }
            '^' => {
                self.bump();
                if self.peek_char() == Some('^') {
                    self.bump();
                    Ok((Token::CaretCaret, pos))
                } else {
                    Err(err(pos, ParseErrorKind::UnexpectedToken, "expected '^^'"))
                }
            }
            '_' if self.peek_char_at(1) == Some(':') => {
                self.bump();
                self.bump();
                let label = self.take_name_chars();
                if label.is_empty() {
                    return Err(err(
                        pos,
                        ParseErrorKind::UnexpectedToken,
                        "blank node label may not be empty",
                    ));
                }
                Ok((Token::BlankLabel(label), pos))
            }
            '+' | '-' => self.lex_integer(pos),
            c if c.is_ascii_digit() => self.lex_integer(pos),
            c if is_name_char(c) || c == ':' => self.lex_word(pos),
            other => Err(err(
                pos,
                ParseErrorKind::UnexpectedToken,
                format!("unexpected character {other:?}"),
            )),
        }
    }

    fn lex_iriref(&mut self, pos: Pos) -> Result<(Token, Pos), ParseError> {
        self.bump(); // '<'
        let mut out = String::new();
        loop {
            match self.bump() {
                Some('>') => return Ok((Token::IriRef(out), pos)),
                Some(c)
                    if c <= ' ' || matches!(c, '<' | '"' | '{' | '}' | '|' | '^' | '`' | '\\') =>
                {
                    return Err(err(
                        pos,
                        ParseErrorKind::BadIri,
                        format!("character {c:?} is not allowed inside an IRI"),
                    ));
                }
                Some(c) => out.push(c),
                None => {
                    return Err(err(pos, ParseErrorKind::BadIri, "unterminated IRI"));
                }
            }
        }
    }

    fn lex_string(&mut self, pos: Pos) -> Result<(Token, Pos), ParseError> {
        self.bump(); // '"'
        let mut out = String::new();
        loop {
            match self.bump() {
                Some('"') => return Ok((Token::StringLit(out), pos)),
                Some('\\') => match self.bump() {
                    Some('"') => out.push('"'),
                    Some('\\') => out.push('\\'),
                    Some('n') => out.push('\n'),
                    Some('r') => out.push('\r'),
                    Some('t') => out.push('\t'),
                    Some('u') => out.push(self.lex_unicode_escape(pos, 4)?),
                    Some('U') => out.push(self.lex_unicode_escape(pos, 8)?),
                    Some(other) => {
                        return Err(err(
                            pos,
                            ParseErrorKind::BadLiteral,
                            format!("unknown escape sequence \\{other}"),
                        ));
                    }
                    None => {
                        return Err(err(pos, ParseErrorKind::BadLiteral, "unterminated string"));
                    }
                },
                Some('\n') | None => {
                    return Err(err(pos, ParseErrorKind::BadLiteral, "unterminated string"));
                }
                Some(c) => out.push(c),
            }
        }
    }

    fn lex_unicode_escape(&mut self, pos: Pos, len: usize) -> Result<char, ParseError> {
        let mut value = 0u32;
        for _ in 0..len {
            let Some(c) = self.bump().and_then(|c| c.to_digit(16)) else {
                return Err(err(
                    pos,
                    ParseErrorKind::BadLiteral,
                    "invalid unicode escape",
                ));
            };
            value = value * 16 + c;
        }
        char::from_u32(value).ok_or_else(|| {
            err(
                pos,
                ParseErrorKind::BadLiteral,
                "invalid unicode code point",
            )
        })
    }

    fn lex_at_word(&mut self, pos: Pos) -> Result<(Token, Pos), ParseError> {
        self.bump(); // '@'
        let mut word = String::new();
        while let Some(c) = self.peek_char() {
            if c.is_ascii_alphanumeric() || c == '-' {
                word.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if word == "prefix" {
            Ok((Token::PrefixKeyword, pos))
        } else if !word.is_empty() && word.chars().next().unwrap().is_ascii_alphabetic() {
            Ok((Token::LangTag(word), pos))
        } else {
            Err(err(
                pos,
                ParseErrorKind::UnexpectedToken,
                "expected @prefix or a language tag",
            ))
        }
    }

    fn lex_integer(&mut self, pos: Pos) -> Result<(Token, Pos), ParseError> {
        let mut out = String::new();
        if matches!(self.peek_char(), Some('+' | '-')) {
            out.push(self.bump().unwrap());
        }
        let mut digits = 0;
        while let Some(c) = self.peek_char() {
            if c.is_ascii_digit() {
                out.push(c);
                digits += 1;
                self.bump();
            } else {
                break;
            }
        }
        if digits == 0 {
            return Err(err(
                pos,
                ParseErrorKind::UnexpectedToken,
                "expected digits after sign",
            ));
        }
        Ok((Token::Integer(out), pos))
    }

    /// Prefixed names and barewords (`a`, `true`, `false`). The local
    /// part is taken greedily including dots; trailing dots are pushed
    /// back as statement terminators.
    fn lex_word(&mut self, pos: Pos) -> Result<(Token, Pos), ParseError> {
        let word = self.take_name_chars();
        if self.peek_char() == Some(':') {
            self.bump();
            let mut local = self.take_name_chars();
            while local.ends_with('.') {
                local.pop();
                self.pending.push_back((Token::Dot, self.pos()));
            }
            return Ok((
                Token::PName {
                    prefix: word,
                    local,
                },
                pos,
            ));
        }
        match word.as_str() {
            "a" => Ok((Token::A, pos)),
            "true" => Ok((Token::Boolean(true), pos)),
            "false" => Ok((Token::Boolean(false), pos)),
            "" => Err(err(
                pos,
                ParseErrorKind::UnexpectedToken,
                "unexpected character",
            )),
            other => Err(err(
                pos,
                ParseErrorKind::UnexpectedToken,
                format!("unexpected word {other:?}"),
            )),
        }
    }

    fn take_name_chars(&mut self) -> String {
        let mut out = String::new();
        while let Some(c) = self.peek_char() {
            if is_name_char(c) {
                out.push(c);
                self.bump();
            } else {
                break;
            }
        }
        out
    }
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.')
}

fn err(pos: Pos, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
    ParseError {
        line: pos.line,
        column: pos.column,
        kind,
        message: message.into(),
    }
}

struct Parser {
    lexer: Lexer,
    peeked: Option<(Token, Pos)>,
    prefixes: PrefixMap,
    base: Option<String>,
    graph: Graph,
}

impl Parser {
    fn new(source: &str, base: Option<&str>) -> Result<Self, ParseError> {
        if let Some(b) = base {
            if !has_scheme(b) {
                return Err(err(
                    Pos { line: 1, column: 1 },
                    ParseErrorKind::BadIri,
                    format!("base IRI is not absolute: {b:?}"),
                ));
            }
        }
        Ok(Parser {
            lexer: Lexer::new(source),
            peeked: None,
            prefixes: PrefixMap::new(),
            base: base.map(str::to_owned),
            graph: Graph::new(),
        })
    }

    fn peek(&mut self) -> Result<&(Token, Pos), ParseError> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lexer.next_token()?);
        }
        Ok(self.peeked.as_ref().unwrap())
    }

    fn next(&mut self) -> Result<(Token, Pos), ParseError> {
        match self.peeked.take() {
            Some(t) => Ok(t),
            None => self.lexer.next_token(),
        }
    }

    fn run(mut self) -> Result<(Graph, PrefixMap), ParseError> {
        loop {
            match &self.peek()?.0 {
                Token::Eof => break,
                Token::PrefixKeyword => self.parse_prefix_decl()?,
                _ => self.parse_statement()?,
            }
        }
        Ok((self.graph, self.prefixes))
    }

    fn parse_prefix_decl(&mut self) -> Result<(), ParseError> {
        self.next()?; // @prefix
        let (tok, pos) = self.next()?;
        let label = match tok {
            Token::PName { prefix, local } if local.is_empty() => prefix,
            other => {
                return Err(err(
                    pos,
                    ParseErrorKind::UnexpectedToken,
                    format!("expected a prefix label, found {}", other.describe()),
                ));
            }
        };
        let (tok, pos) = self.next()?;
        let namespace = match tok {
            Token::IriRef(raw) => self.make_absolute(raw, pos)?,
            other => {
                return Err(err(
                    pos,
                    ParseErrorKind::UnexpectedToken,
                    format!("expected a namespace IRI, found {}", other.describe()),
                ));
            }
        };
        self.expect_dot()?;
        self.prefixes.insert(label, namespace);
        Ok(())
    }

    fn parse_statement(&mut self) -> Result<(), ParseError> {
        let subject = self.parse_subject()?;
        loop {
            let predicate = self.parse_predicate()?;
            loop {
                let object = self.parse_object()?;
                let triple = Triple::new(subject.clone(), predicate.clone(), object)
                    .expect("parser only builds valid triples");
                self.graph.insert(triple);
                if matches!(self.peek()?.0, Token::Comma) {
                    self.next()?;
                } else {
                    break;
                }
            }
            if matches!(self.peek()?.0, Token::Semicolon) {
                while matches!(self.peek()?.0, Token::Semicolon) {
                    self.next()?;
                }
                if matches!(self.peek()?.0, Token::Dot) {
                    break;
                }
            } else {
                break;
            }
        }
        self.expect_dot()
    }

    fn expect_dot(&mut self) -> Result<(), ParseError> {
        let (tok, pos) = self.next()?;
        match tok {
            Token::Dot => Ok(()),
            other => Err(err(
                pos,
                ParseErrorKind::UnterminatedStatement,
                format!("expected '.', found {}", other.describe()),
            )),
        }
    }

    fn parse_subject(&mut self) -> Result<Term, ParseError> {
        let (tok, pos) = self.next()?;
        match tok {
            Token::IriRef(raw) => self.make_iri(raw, pos),
            Token::PName { prefix, local } => self.expand_pname(&prefix, &local, pos),
            Token::BlankLabel(l) => Ok(Term::blank(l)),
            Token::StringLit(_) | Token::Integer(_) | Token::Boolean(_) => Err(err(
                pos,
                ParseErrorKind::UnexpectedToken,
                "a literal cannot be the subject of a statement",
            )),
            Token::Eof => Err(err(
                pos,
                ParseErrorKind::UnterminatedStatement,
                "input ends where a subject was expected",
            )),
            other => Err(err(
                pos,
                ParseErrorKind::UnexpectedToken,
                format!("expected a subject, found {}", other.describe()),
            )),
        }
    }

    fn parse_predicate(&mut self) -> Result<Term, ParseError> {
        let (tok, pos) = self.next()?;
        match tok {
            Token::A => Ok(crate::vocab::term(rdf::TYPE)),
            Token::IriRef(raw) => self.make_iri(raw, pos),
            Token::PName { prefix, local } => self.expand_pname(&prefix, &local, pos),
            Token::Eof => Err(err(
                pos,
                ParseErrorKind::UnterminatedStatement,
                "input ends where a predicate was expected",
            )),
            other => Err(err(
                pos,
                ParseErrorKind::UnexpectedToken,
                format!("expected a predicate, found {}", other.describe()),
            )),
        }
    }

    fn parse_object(&mut self) -> Result<Term, ParseError> {
        let (tok, pos) = self.next()?;
        match tok {
            Token::IriRef(raw) => self.make_iri(raw, pos),
            Token::PName { prefix, local } => self.expand_pname(&prefix, &local, pos),
            Token::BlankLabel(l) => Ok(Term::blank(l)),
            Token::Integer(lex) => Term::literal_typed(lex, xsd::INTEGER)
                .map_err(|e| err(pos, ParseErrorKind::BadLiteral, e.to_string())),
            Token::Boolean(b) => Ok(Term::Literal(crate::rdf::Literal::boolean(b))),
            Token::StringLit(lex) => self.finish_literal(lex, pos),
            Token::Eof => Err(err(
                pos,
                ParseErrorKind::UnterminatedStatement,
                "input ends where an object was expected",
            )),
            other => Err(err(
                pos,
                ParseErrorKind::UnexpectedToken,
                format!("expected an object, found {}", other.describe()),
            )),
        }
    }

    fn finish_literal(&mut self, lex: String, pos: Pos) -> Result<Term, ParseError> {
        match &self.peek()?.0 {
            Token::CaretCaret => {
                self.next()?;
                let (tok, dt_pos) = self.next()?;
                let datatype = match tok {
                    Token::IriRef(raw) => self.make_absolute(raw, dt_pos)?,
                    Token::PName { prefix, local } => {
                        let term = self.expand_pname(&prefix, &local, dt_pos)?;
                        term.iri_str().expect("pname expands to IRI").to_owned()
                    }
                    other => {
                        return Err(err(
                            dt_pos,
                            ParseErrorKind::BadLiteral,
                            format!("expected a datatype IRI, found {}", other.describe()),
                        ));
                    }
                };
                Term::literal_typed(lex, datatype)
                    .map_err(|e| err(pos, ParseErrorKind::BadLiteral, e.to_string()))
            }
            Token::LangTag(_) => {
                let (tok, _) = self.next()?;
                let Token::LangTag(tag) = tok else {
                    unreachable!()
                };
                Ok(Term::literal_lang(lex, tag))
            }
            // "@prefix" directly after a literal can only be a language
            // tag that happens to spell "prefix".
            Token::PrefixKeyword => {
                self.next()?;
                Ok(Term::literal_lang(lex, "prefix"))
            }
            _ => Ok(Term::literal_str(lex)),
        }
    }

    fn expand_pname(&mut self, prefix: &str, local: &str, pos: Pos) -> Result<Term, ParseError> {
        let Some(expanded) = self.prefixes.expand(prefix, local) else {
            return Err(err(
                pos,
                ParseErrorKind::UndeclaredPrefix,
                format!("prefix {prefix:?} has not been declared"),
            ));
        };
        Term::iri(expanded).map_err(|e| err(pos, ParseErrorKind::BadIri, e.to_string()))
    }

    fn make_iri(&self, raw: String, pos: Pos) -> Result<Term, ParseError> {
        let abs = self.make_absolute(raw, pos)?;
        Term::iri(abs).map_err(|e| err(pos, ParseErrorKind::BadIri, e.to_string()))
    }

    fn make_absolute(&self, raw: String, pos: Pos) -> Result<String, ParseError> {
        if has_scheme(&raw) {
            return Ok(raw);
        }
        match &self.base {
            Some(base) => Ok(resolve_reference(base, &raw)),
            None => Err(err(
                pos,
                ParseErrorKind::BadIri,
                format!("relative IRI {raw:?} with no base"),
            )),
        }
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

/// Minimal RFC 3986-style reference resolution, enough for fragment,
/// query, absolute-path, and relative-path references against an
/// absolute base.
fn resolve_reference(base: &str, reference: &str) -> String {
    if reference.is_empty() {
        return strip_fragment(base).to_owned();
    }
    if let Some(rest) = reference.strip_prefix("//") {
        let scheme_end = base.find(':').unwrap_or(0);
        return format!("{}://{}", &base[..scheme_end], rest.trim_start_matches('/'));
    }
    if reference.starts_with('#') {
        return format!("{}{}", strip_fragment(base), reference);
    }
    if reference.starts_with('?') {
        return format!("{}{}", strip_query(strip_fragment(base)), reference);
    }
    let root = authority_end(base);
    if reference.starts_with('/') {
        return format!("{}{}", &base[..root], reference);
    }
    // Relative path: replace everything after the last slash.
    let trimmed = strip_query(strip_fragment(base));
    match trimmed[root..].rfind('/') {
        Some(slash) => format!("{}{}", &trimmed[..root + slash + 1], reference),
        None => format!("{}/{}", &trimmed[..root], reference),
    }
}

fn strip_fragment(iri: &str) -> &str {
    match iri.find('#') {
        Some(i) => &iri[..i],
        None => iri,
    }
}

fn strip_query(iri: &str) -> &str {
    match iri.find('?') {
        Some(i) => &iri[..i],
        None => iri,
    }
}

/// Byte offset just past `scheme://authority`.
fn authority_end(iri: &str) -> usize {
    let after_scheme = iri.find(':').map(|i| i + 1).unwrap_or(0);
    if iri[after_scheme..].starts_with("//") {
        let host_start = after_scheme + 2;
        match iri[host_start..].find('/') {
            Some(i) => host_start + i,
            None => iri.len(),
        }
    } else {
        after_scheme
    }
}
