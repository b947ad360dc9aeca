//! Tokenizer for the functional-style syntax.
//!
//! Produces a flat token list up front; the parser then works over the list.
//! Positions are 1-based (line, column) counted in Unicode scalar values,
//! so error locations always point into the source text.

use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) enum Tok {
    /// Bare keyword such as `Ontology` or `SubClassOf`.
    Ident(String),
    /// Compact name `prefix:local`; the prefix may be empty.
    Pname { prefix: String, local: String },
    /// Contents of an `<...>` IRI reference, brackets stripped.
    IriRef(String),
    /// String literal contents with escapes resolved.
    StringLit(String),
    LParen,
    RParen,
    Equals,
    CaretCaret,
}

#[derive(Debug, Clone)]
pub(super) struct Lexeme {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
    /// Raw source text of the token, kept for error messages.
    pub raw: String,
}

/// Token list plus the position just past the final character, used to
/// report unexpected-end-of-input errors in bounds.
#[derive(Debug)]
pub(super) struct TokenStream {
    pub lexemes: Vec<Lexeme>,
    pub end_line: usize,
    pub end_column: usize,
}

pub(super) fn tokenize(src: &str) -> Result<TokenStream, ParseError> {
    Lexer::new(src).run()
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

fn is_prefix_start(c: char) -> bool {
    c.is_ascii_alphabetic()
}

fn is_prefix_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-'
}

pub(super) fn is_local_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-' || c == '.'
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            chars: src.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn run(mut self) -> Result<TokenStream, ParseError> {
        let mut lexemes = Vec::new();
        loop {
            match self.peek() {
                None => break,
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                Some(_) => lexemes.push(self.lex_token()?),
            }
        }
        Ok(TokenStream {
            lexemes,
            end_line: self.line,
            end_column: self.column,
        })
    }

    fn lex_token(&mut self) -> Result<Lexeme, ParseError> {
        let line = self.line;
        let column = self.column;
        let c = self.bump().expect("caller checked non-empty");
        let lexeme = |tok, raw: String| Lexeme {
            tok,
            line,
            column,
            raw,
        };
        match c {
            '(' => Ok(lexeme(Tok::LParen, "(".into())),
            ')' => Ok(lexeme(Tok::RParen, ")".into())),
            '=' => Ok(lexeme(Tok::Equals, "=".into())),
            '^' => {
                if self.peek() == Some('^') {
                    self.bump();
                    Ok(lexeme(Tok::CaretCaret, "^^".into()))
                } else {
                    Err(ParseError::new(line, column, "expected `^^`", "^"))
                }
            }
            '<' => self.lex_iri_ref(line, column),
            '"' => self.lex_string(line, column),
            ':' => {
                let local = self.take_while(is_local_char);
                let raw = format!(":{local}");
                Ok(lexeme(
                    Tok::Pname {
                        prefix: String::new(),
                        local,
                    },
                    raw,
                ))
            }
            c if is_prefix_start(c) => {
                let mut name = String::from(c);
                name.push_str(&self.take_while(is_prefix_char));
                if self.peek() == Some(':') {
                    self.bump();
                    let local = self.take_while(is_local_char);
                    let raw = format!("{name}:{local}");
                    Ok(lexeme(
                        Tok::Pname {
                            prefix: name,
                            local,
                        },
                        raw,
                    ))
                } else {
                    let raw = name.clone();
                    Ok(lexeme(Tok::Ident(name), raw))
                }
            }
            other => Err(ParseError::new(
                line,
                column,
                format!("unexpected character `{other}`"),
                other.to_string(),
            )),
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if !pred(c) {
                break;
            }
            out.push(c);
            self.bump();
        }
        out
    }

    fn lex_iri_ref(&mut self, line: usize, column: usize) -> Result<Lexeme, ParseError> {
        let mut content = String::new();
        loop {
            match self.bump() {
                None => {
                    return Err(ParseError::new(
                        line,
                        column,
                        "unterminated IRI reference",
                        format!("<{content}"),
                    ))
                }
                Some('>') => break,
                Some(c @ (' ' | '\t' | '\n' | '\r' | '<' | '"')) => {
                    return Err(ParseError::new(
                        self.line,
                        self.column.saturating_sub(1).max(1),
                        format!("character `{}` is not allowed inside an IRI reference", c.escape_default()),
                        format!("<{content}"),
                    ))
                }
                Some(c) => content.push(c),
            }
        }
        let raw = format!("<{content}>");
        Ok(Lexeme {
            tok: Tok::IriRef(content),
            line,
            column,
            raw,
        })
    }

    fn lex_string(&mut self, line: usize, column: usize) -> Result<Lexeme, ParseError> {
        let mut value = String::new();
        let mut raw = String::from("\"");
        loop {
            match self.bump() {
                None => {
                    return Err(ParseError::new(
                        line,
                        column,
                        "unterminated string literal",
                        raw,
                    ))
                }
                Some('"') => break,
                Some('\\') => match self.bump() {
                    Some(esc @ ('"' | '\\')) => {
                        value.push(esc);
                        raw.push('\\');
                        raw.push(esc);
                    }
                    Some(other) => {
                        return Err(ParseError::new(
                            self.line,
                            self.column.saturating_sub(2).max(1),
                            format!("unsupported escape `\\{other}` (only `\\\"` and `\\\\` exist)"),
                            format!("\\{other}"),
                        ))
                    }
                    None => {
                        return Err(ParseError::new(
                            line,
                            column,
                            "unterminated string literal",
                            raw,
                        ))
                    }
                },
                Some(c) => {
                    value.push(c);
                    raw.push(c);
                }
            }
        }
        raw.push('"');
        Ok(Lexeme {
            tok: Tok::StringLit(value),
            line,
            column,
            raw,
        })
    }
}
