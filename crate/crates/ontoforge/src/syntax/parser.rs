//! Recursive-descent parser for the functional-style syntax.
//!
//! Document shape:
//!
//! ```text
//! Prefix(name:=<namespace>)*
//! Ontology(<ontology-iri>
//!   Import(<iri>)*
//!   axiom*
//! )
//! ```
//!
//! Parsing stops at the first failure; duplicate axioms collapse silently
//! through the ontology's set semantics.

use crate::model::{
    AnnotationValue, Axiom, Characteristic, EntityKind, Iri, Literal, ModelError, Ontology,
    PrefixMap,
};

use super::lexer::{tokenize, Lexeme, Tok, TokenStream};
use super::ParseError;

pub fn parse_functional(src: &str) -> Result<Ontology, ParseError> {
    let stream = tokenize(src)?;
    Parser::new(stream).document()
}

struct Parser {
    lexemes: Vec<Lexeme>,
    pos: usize,
    end_line: usize,
    end_column: usize,
    prefixes: PrefixMap,
}

impl Parser {
    fn new(stream: TokenStream) -> Self {
        let TokenStream {
            lexemes,
            end_line,
            end_column,
        } = stream;
        Parser {
            lexemes,
            pos: 0,
            end_line,
            end_column,
            prefixes: PrefixMap::new(),
        }
    }

    fn peek(&self) -> Option<&Lexeme> {
        self.lexemes.get(self.pos)
    }

    fn next(&mut self) -> Option<Lexeme> {
        let lex = self.lexemes.get(self.pos).cloned();
        if lex.is_some() {
            self.pos += 1;
        }
        lex
    }

    fn error_at(&self, lex: &Lexeme, message: impl Into<String>) -> ParseError {
        ParseError::new(lex.line, lex.column, message, lex.raw.clone())
    }

    fn error_eof(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.end_line, self.end_column, message, "")
    }

    fn take(&mut self, message: &str) -> Result<Lexeme, ParseError> {
        self.next().ok_or_else(|| self.error_eof(message))
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Lexeme, ParseError> {
        let lex = self.take(&format!("expected {what}, found end of document"))?;
        if lex.tok == tok {
            Ok(lex)
        } else {
            Err(self.error_at(&lex, format!("expected {what}")))
        }
    }

    fn document(mut self) -> Result<Ontology, ParseError> {
        while self.peek_is_ident("Prefix") {
            self.prefix_declaration()?;
        }
        let keyword = self.take("expected `Ontology`, found end of document")?;
        if !matches!(&keyword.tok, Tok::Ident(name) if name == "Ontology") {
            return Err(self.error_at(&keyword, "expected `Ontology`"));
        }
        self.expect(Tok::LParen, "`(` after `Ontology`")?;
        let iri = self.iri("an ontology IRI")?;
        let mut ontology = Ontology::new(iri);
        *ontology.prefixes_mut() = self.prefixes.clone();

        while self.peek_is_ident("Import") {
            self.next();
            self.expect(Tok::LParen, "`(` after `Import`")?;
            let import = self.iri("an import IRI")?;
            self.expect(Tok::RParen, "`)` closing `Import`")?;
            ontology.add_import(import);
        }

        loop {
            match self.peek() {
                None => return Err(self.error_eof("expected an axiom or `)` closing `Ontology`")),
                Some(lex) if lex.tok == Tok::RParen => {
                    self.next();
                    break;
                }
                Some(_) => {
                    let (axiom, at) = self.axiom()?;
                    ontology
                        .add_axiom(axiom)
                        .map_err(|e| ParseError::new(at.0, at.1, e.to_string(), at.2.clone()))?;
                }
            }
        }

        if let Some(extra) = self.peek() {
            return Err(self.error_at(extra, "expected end of document after `Ontology(...)`"));
        }
        Ok(ontology)
    }

    fn peek_is_ident(&self, name: &str) -> bool {
        matches!(self.peek(), Some(lex) if matches!(&lex.tok, Tok::Ident(id) if id == name))
    }

    fn prefix_declaration(&mut self) -> Result<(), ParseError> {
        self.next(); // `Prefix`
        self.expect(Tok::LParen, "`(` after `Prefix`")?;
        let lex = self.take("expected a prefix name, found end of document")?;
        let name = match &lex.tok {
            Tok::Pname { prefix, local } if local.is_empty() => prefix.clone(),
            _ => return Err(self.error_at(&lex, "expected a prefix name followed by `:=`")),
        };
        self.expect(Tok::Equals, "`:=` in the prefix declaration")?;
        let ns_lex = self.take("expected a namespace IRI, found end of document")?;
        let Tok::IriRef(ns_text) = &ns_lex.tok else {
            return Err(self.error_at(&ns_lex, "expected a namespace IRI in angle brackets"));
        };
        let ns = Iri::new(ns_text.clone()).map_err(|e| self.error_at(&ns_lex, e.to_string()))?;
        self.expect(Tok::RParen, "`)` closing `Prefix`")?;
        if self.prefixes.namespace(&name).is_some() {
            return Err(self.error_at(&lex, format!("prefix `{name}` is declared twice")));
        }
        self.prefixes
            .bind(name, ns)
            .map_err(|e| self.error_at(&lex, e.to_string()))?;
        Ok(())
    }

    /// Parses an IRI argument: either `<...>` or a compact name expanded
    /// against the document's prefixes.
    fn iri(&mut self, what: &str) -> Result<Iri, ParseError> {
        let lex = self.take(&format!("expected {what}, found end of document"))?;
        match &lex.tok {
            Tok::IriRef(text) => {
                Iri::new(text.clone()).map_err(|e| self.error_at(&lex, e.to_string()))
            }
            Tok::Pname { prefix, local } => {
                self.prefixes
                    .expand(&format!("{prefix}:{local}"))
                    .map_err(|e| match e {
                        ModelError::UnboundPrefix(p) => {
                            self.error_at(&lex, format!("unbound prefix `{p}`"))
                        }
                        other => self.error_at(&lex, other.to_string()),
                    })
            }
            _ => Err(self.error_at(&lex, format!("expected {what}"))),
        }
    }

    fn literal(&mut self) -> Result<Literal, ParseError> {
        let lex = self.take("expected a literal, found end of document")?;
        let Tok::StringLit(value) = &lex.tok else {
            return Err(self.error_at(&lex, "expected a quoted literal"));
        };
        let value = value.clone();
        if matches!(self.peek(), Some(l) if l.tok == Tok::CaretCaret) {
            self.next();
            let datatype = self.iri("a datatype IRI")?;
            Ok(Literal::typed(value, datatype))
        } else {
            Ok(Literal::string(value))
        }
    }

    /// Parses one axiom; also returns (line, column, raw keyword) so the
    /// caller can position model-level rejections (punning, degenerate
    /// axioms) at the axiom keyword.
    fn axiom(&mut self) -> Result<(Axiom, (usize, usize, String)), ParseError> {
        let lex = self.take("expected an axiom keyword, found end of document")?;
        let Tok::Ident(keyword) = &lex.tok else {
            return Err(self.error_at(&lex, "expected an axiom keyword"));
        };
        let keyword = keyword.clone();
        let at = (lex.line, lex.column, lex.raw.clone());
        self.expect(Tok::LParen, &format!("`(` after `{keyword}`"))?;
        let axiom = match keyword.as_str() {
            "Declaration" => {
                let kind_lex = self.take("expected an entity kind, found end of document")?;
                let Tok::Ident(kind_name) = &kind_lex.tok else {
                    return Err(self.error_at(&kind_lex, "expected an entity kind"));
                };
                let kind = EntityKind::ALL
                    .into_iter()
                    .find(|k| k.keyword() == kind_name)
                    .ok_or_else(|| {
                        self.error_at(&kind_lex, format!("unknown entity kind `{kind_name}`"))
                    })?;
                self.expect(Tok::LParen, &format!("`(` after `{kind_name}`"))?;
                let entity = self.iri("an entity IRI")?;
                self.expect(Tok::RParen, "`)` closing the entity")?;
                Axiom::Declaration(kind, entity)
            }
            "SubClassOf" => {
                let sub = self.iri("a subclass IRI")?;
                let sup = self.iri("a superclass IRI")?;
                Axiom::SubClassOf(sub, sup)
            }
            "DisjointClasses" => {
                let mut members = vec![self.iri("a class IRI")?, self.iri("a class IRI")?];
                while !matches!(self.peek(), Some(l) if l.tok == Tok::RParen) {
                    members.push(self.iri("a class IRI or `)`")?);
                }
                Axiom::DisjointClasses(members)
            }
            "ComplementClasses" => {
                let a = self.iri("a class IRI")?;
                let b = self.iri("a class IRI")?;
                Axiom::ComplementClasses(a, b)
            }
            "ObjectPropertyDomain" => {
                let p = self.iri("a property IRI")?;
                let c = self.iri("a class IRI")?;
                Axiom::ObjectPropertyDomain(p, c)
            }
            "ObjectPropertyRange" => {
                let p = self.iri("a property IRI")?;
                let c = self.iri("a class IRI")?;
                Axiom::ObjectPropertyRange(p, c)
            }
            "DataPropertyDomain" => {
                let p = self.iri("a property IRI")?;
                let c = self.iri("a class IRI")?;
                Axiom::DataPropertyDomain(p, c)
            }
            "DataPropertyRange" => {
                let p = self.iri("a property IRI")?;
                let dt = self.iri("a datatype IRI")?;
                Axiom::DataPropertyRange(p, dt)
            }
            "ClassAssertion" => {
                let class = self.iri("a class IRI")?;
                let individual = self.iri("an individual IRI")?;
                Axiom::ClassAssertion(class, individual)
            }
            "ObjectPropertyAssertion" => {
                let p = self.iri("a property IRI")?;
                let subj = self.iri("a subject IRI")?;
                let obj = self.iri("an object IRI")?;
                Axiom::ObjectPropertyAssertion(p, subj, obj)
            }
            "DataPropertyAssertion" => {
                let p = self.iri("a property IRI")?;
                let subj = self.iri("a subject IRI")?;
                let value = self.literal()?;
                Axiom::DataPropertyAssertion(p, subj, value)
            }
            "AnnotationAssertion" => {
                let ap = self.iri("an annotation property IRI")?;
                let subject = self.iri("a subject IRI")?;
                let value = match self.peek() {
                    Some(l) if matches!(l.tok, Tok::StringLit(_)) => {
                        AnnotationValue::Literal(self.literal()?)
                    }
                    _ => AnnotationValue::Iri(self.iri("an annotation value (IRI or literal)")?),
                };
                Axiom::AnnotationAssertion(ap, subject, value)
            }
            "Import" => {
                return Err(ParseError::new(
                    at.0,
                    at.1,
                    "Import declarations must appear before axioms",
                    at.2,
                ))
            }
            other => {
                if let Some(ch) = Characteristic::ALL.into_iter().find(|c| c.keyword() == other) {
                    let p = self.iri("a property IRI")?;
                    Axiom::PropertyCharacteristic(p, ch)
                } else {
                    return Err(ParseError::new(
                        at.0,
                        at.1,
                        format!("unknown axiom keyword `{other}`"),
                        at.2,
                    ));
                }
            }
        };
        self.expect(Tok::RParen, &format!("`)` closing `{keyword}`"))?;
        Ok((axiom, at))
    }
}
