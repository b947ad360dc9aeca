//! Concrete text syntax.
//!
//! Two formats:
//!
//! * a functional-style subset (`.ofn`): parsed by [`parse_functional`] and
//!   written by [`serialize_functional`]. Serialization is canonical — equal
//!   ontologies produce byte-identical documents — and round-trips exactly.
//! * RDF/XML (`.owl`): emit-only via [`serialize_rdfxml`]. The toolkit never
//!   parses RDF/XML.
//!
//! The grammar is whitespace-insensitive; `#` starts a comment running to the
//! end of the line. IRIs appear either in angle brackets or as
//! `prefix:local` compact names expanded against the document's `Prefix`
//! declarations. String literals support exactly two escapes, `\"` and `\\`.

mod functional;
mod lexer;
mod parser;
mod rdfxml;

use std::fmt;

pub use functional::{render_axiom, serialize_functional};
pub use parser::parse_functional;
pub use rdfxml::serialize_rdfxml;

/// A syntax error with its 1-based source position.
///
/// `token` holds the offending source fragment; it is empty when the error is
/// an unexpected end of input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub token: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>, token: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
            token: token.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if !self.token.is_empty() {
            write!(f, " (near `{}`)", self.token)?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}
