//! The ARDL lexer.
//!
//! Every character of the input is either covered by a token or skipped with
//! a diagnostic; lexing never aborts. Columns count Unicode scalar values and
//! are 1-based. `\r\n` and `\n` line endings are both accepted.

use std::sync::Arc;

use crate::diagnostics::{codes, Diagnostic, Position, Span};

use super::ast::SourceFile;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    /// `[A-Za-z_][A-Za-z0-9_-]*` — keywords are contextual identifiers.
    Ident(String),
    /// Double-quoted string, `\"` and `\\` escapes resolved.
    Str(String),
    Int(i64),
    LBrace,
    RBrace,
    Colon,
    Comma,
    Dot,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(id) => format!("`{id}`"),
            TokenKind::Str(_) => "string literal".to_string(),
            TokenKind::Int(_) => "integer".to_string(),
            TokenKind::LBrace => "`{`".to_string(),
            TokenKind::RBrace => "`}`".to_string(),
            TokenKind::Colon => "`:`".to_string(),
            TokenKind::Comma => "`,`".to_string(),
            TokenKind::Dot => "`.`".to_string(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { chars: text.chars().peekable(), line: 1, col: 1 }
    }

    fn pos(&self) -> Position {
        Position::new(self.line, self.col)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }
}

/// Splits a source file into tokens. Comments (`//` to end of line) and
/// whitespace are discarded.
pub fn tokenize(source: &SourceFile) -> (Vec<Token>, Vec<Diagnostic>) {
    let file: Arc<str> = source.path.clone();
    let mut cursor = Cursor::new(&source.text);
    let mut tokens = Vec::new();
    let mut diagnostics = Vec::new();

    while let Some(c) = cursor.peek() {
        let start = cursor.pos();
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                cursor.bump();
            }
            '/' => {
                cursor.bump();
                if cursor.peek() == Some('/') {
                    while let Some(c) = cursor.peek() {
                        if c == '\n' {
                            break;
                        }
                        cursor.bump();
                    }
                } else {
                    diagnostics.push(Diagnostic::error(
                        codes::ARD002,
                        "stray `/`; comments start with `//`",
                        Span::point(file.clone(), start),
                    ));
                }
            }
            '{' | '}' | ':' | ',' | '.' => {
                cursor.bump();
                let kind = match c {
                    '{' => TokenKind::LBrace,
                    '}' => TokenKind::RBrace,
                    ':' => TokenKind::Colon,
                    ',' => TokenKind::Comma,
                    _ => TokenKind::Dot,
                };
                tokens.push(Token { kind, span: Span::point(file.clone(), start) });
            }
            '"' => {
                cursor.bump();
                let mut value = String::new();
                let mut terminated = false;
                let mut end = cursor.pos();
                while let Some(c) = cursor.peek() {
                    if c == '\n' {
                        break;
                    }
                    cursor.bump();
                    match c {
                        '"' => {
                            terminated = true;
                            break;
                        }
                        '\\' => match cursor.peek() {
                            Some('"') | Some('\\') => {
                                value.push(cursor.bump().unwrap());
                            }
                            _ => value.push('\\'),
                        },
                        other => value.push(other),
                    }
                    end = cursor.pos();
                }
                if terminated {
                    let end = Position::new(cursor.line, cursor.col.saturating_sub(1));
                    tokens.push(Token {
                        kind: TokenKind::Str(value),
                        span: Span::new(file.clone(), start, end),
                    });
                } else {
                    diagnostics.push(Diagnostic::error(
                        codes::ARD001,
                        "unterminated string literal",
                        Span::new(file.clone(), start, end.max(start)),
                    ));
                }
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(c) = cursor.peek() {
                    if !c.is_ascii_digit() {
                        break;
                    }
                    digits.push(c);
                    cursor.bump();
                }
                let end = Position::new(cursor.line, cursor.col - 1);
                match digits.parse::<i64>() {
                    Ok(n) => tokens.push(Token {
                        kind: TokenKind::Int(n),
                        span: Span::new(file.clone(), start, end),
                    }),
                    Err(_) => diagnostics.push(Diagnostic::error(
                        codes::ARD002,
                        format!("integer literal `{digits}` out of range"),
                        Span::new(file.clone(), start, end),
                    )),
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(c) = cursor.peek() {
                    if !(c.is_ascii_alphanumeric() || c == '_' || c == '-') {
                        break;
                    }
                    ident.push(c);
                    cursor.bump();
                }
                let end = Position::new(cursor.line, cursor.col - 1);
                tokens.push(Token {
                    kind: TokenKind::Ident(ident),
                    span: Span::new(file.clone(), start, end),
                });
            }
            other => {
                cursor.bump();
                diagnostics.push(Diagnostic::error(
                    codes::ARD002,
                    format!("character `{}` is not part of ARDL", other.escape_default()),
                    Span::point(file.clone(), start),
                ));
            }
        }
    }

    (tokens, diagnostics)
}
