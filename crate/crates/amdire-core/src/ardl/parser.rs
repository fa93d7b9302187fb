//! Recursive-descent parser for ARDL with panic-mode error recovery.
//!
//! Parsing always returns a root node; every problem is reported as an
//! `ARD010` diagnostic and recovery skips to the next `}` or known keyword.
//! Well-formed input parses without diagnostics.

use std::sync::Arc;

use crate::catalog::{ArtefactType, ConceptKind, ContentItemId, ElementStatus, Relation};
use crate::diagnostics::{codes, Diagnostic, Position, Span};

use super::ast::*;
use super::lexer::{tokenize, Token, TokenKind};

/// Parses one source file into a syntax tree plus diagnostics (lexing
/// diagnostics included). Pure and deterministic.
pub fn parse(source: &SourceFile) -> (ArtefactDecl, Vec<Diagnostic>) {
    let (tokens, mut diagnostics) = tokenize(source);
    let eof = end_position(&source.text);
    let mut parser = Parser {
        file: source.path.clone(),
        tokens,
        index: 0,
        eof,
        eof_reported: false,
        diagnostics: Vec::new(),
    };
    let root = parser.parse_file();
    diagnostics.append(&mut parser.diagnostics);
    (root, diagnostics)
}

/// Position just past the end of `text` (1-based).
fn end_position(text: &str) -> Position {
    let mut line = 1u32;
    let mut col = 1u32;
    for c in text.chars() {
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    Position::new(line, col)
}

fn is_item_keyword(word: &str) -> bool {
    ContentItemId::ALL.iter().any(|i| i.keyword() == word)
}

fn is_kind_keyword(word: &str) -> bool {
    ConceptKind::from_keyword(word).is_some()
}

struct Parser {
    file: Arc<str>,
    tokens: Vec<Token>,
    index: usize,
    eof: Position,
    eof_reported: bool,
    diagnostics: Vec<Diagnostic>,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index)
    }

    fn peek2(&self) -> Option<&Token> {
        self.tokens.get(self.index + 1)
    }

    fn bump(&mut self) -> Option<Token> {
        let token = self.tokens.get(self.index).cloned();
        if token.is_some() {
            self.index += 1;
        }
        token
    }

    fn here(&self) -> Span {
        match self.peek() {
            Some(t) => t.span.clone(),
            None => Span::point(self.file.clone(), self.eof),
        }
    }

    fn with_ident(&self) -> Option<(&str, Span)> {
        match self.peek() {
            Some(Token { kind: TokenKind::Ident(id), span }) => Some((id.as_str(), span.clone())),
            _ => None,
        }
    }

    fn error(&mut self, message: String) {
        let at_eof = self.peek().is_none();
        if at_eof {
            if self.eof_reported {
                return;
            }
            self.eof_reported = true;
        }
        let span = self.here();
        self.diagnostics.push(Diagnostic::error(codes::ARD010, message, span));
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(t) => format!("found {}", t.kind.describe()),
            None => "found end of file".to_string(),
        }
    }

    /// Panic-mode recovery: skip tokens until a `}` at the current nesting
    /// depth or an identifier that can start a declaration.
    fn recover(&mut self) {
        let mut depth = 0usize;
        while let Some(token) = self.peek() {
            match &token.kind {
                TokenKind::RBrace => {
                    if depth == 0 {
                        return;
                    }
                    depth -= 1;
                    self.bump();
                }
                TokenKind::LBrace => {
                    depth += 1;
                    self.bump();
                }
                TokenKind::Ident(id) if depth == 0 => {
                    if ArtefactType::from_keyword(id).is_some()
                        || is_item_keyword(id)
                        || is_kind_keyword(id)
                        || Relation::from_keyword(id).is_some()
                    {
                        return;
                    }
                    self.bump();
                }
                _ => {
                    self.bump();
                }
            }
        }
    }

    fn expect_lbrace(&mut self, context: &str) -> bool {
        if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::LBrace)) {
            self.bump();
            true
        } else {
            self.error(format!("expected `{{` after {context}, {}", self.found()));
            self.recover();
            // A recovery landing on `{` lets the block continue.
            if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::LBrace)) {
                self.bump();
                true
            } else {
                false
            }
        }
    }

    fn parse_file(&mut self) -> ArtefactDecl {
        let start = self.here();
        let mut artefact = None;
        let mut title = None;
        let mut header_span = start.clone();

        match self.with_ident() {
            Some((word, span)) => {
                if let Some(kind) = ArtefactType::from_keyword(word) {
                    artefact = Some(kind);
                    header_span = span;
                    self.bump();
                } else {
                    self.error(format!(
                        "expected `context-specification`, `requirements-specification`, \
                         or `system-specification`, found `{word}`"
                    ));
                    self.recover();
                    if let Some((word, span)) = self.with_ident() {
                        if let Some(kind) = ArtefactType::from_keyword(word) {
                            artefact = Some(kind);
                            header_span = span;
                            self.bump();
                        }
                    }
                }
            }
            None => {
                if self.peek().is_some() {
                    self.error(format!("expected artefact header, {}", self.found()));
                    self.recover();
                }
            }
        }

        if artefact.is_some() {
            match self.peek().map(|t| t.kind.clone()) {
                Some(TokenKind::Str(s)) => {
                    let token = self.bump().unwrap();
                    header_span = header_span.merge(&token.span);
                    title = Some(s);
                }
                _ => {
                    self.error(format!("expected artefact title string, {}", self.found()));
                }
            }
        }

        let mut items = Vec::new();
        let mut end = header_span.end;
        let has_body = artefact.is_some() || self.peek().is_some();
        if has_body && self.expect_lbrace("artefact header") {
            loop {
                match self.peek().map(|t| t.kind.clone()) {
                    None => {
                        self.error("expected `}` to close the artefact, found end of file".into());
                        break;
                    }
                    Some(TokenKind::RBrace) => {
                        end = self.bump().unwrap().span.end;
                        break;
                    }
                    Some(TokenKind::Ident(word)) if is_item_keyword(&word) => {
                        let item = self.parse_item_block();
                        if let Some(item) = item {
                            end = item.span.end;
                            items.push(item);
                        }
                    }
                    _ => {
                        self.error(format!("expected a content-item block, {}", self.found()));
                        self.recover();
                        if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::RBrace)) {
                            continue;
                        }
                        if self.peek().is_none() {
                            break;
                        }
                    }
                }
            }
        }

        if let Some(extra) = self.peek() {
            let span = extra.span.clone();
            self.diagnostics.push(Diagnostic::error(
                codes::ARD010,
                format!("unexpected content after the artefact declaration, {}", self.found()),
                span,
            ));
        }

        let span = Span::new(self.file.clone(), start.start, end.max(start.start));
        ArtefactDecl { artefact, title, header_span, span, items }
    }

    fn parse_item_block(&mut self) -> Option<ItemBlock> {
        let (keyword, keyword_span) = match self.with_ident() {
            Some((word, span)) => (word.to_string(), span),
            None => return None,
        };
        self.bump();
        if !self.expect_lbrace(&format!("`{keyword}`")) {
            return Some(ItemBlock {
                keyword,
                span: keyword_span.clone(),
                keyword_span,
                elements: Vec::new(),
            });
        }
        let mut elements = Vec::new();
        let end;
        loop {
            match self.peek().map(|t| t.kind.clone()) {
                None => {
                    self.error(format!("expected `}}` to close `{keyword}`, found end of file"));
                    end = self.eof;
                    break;
                }
                Some(TokenKind::RBrace) => {
                    end = self.bump().unwrap().span.end;
                    break;
                }
                Some(TokenKind::Ident(word)) if is_kind_keyword(&word) => {
                    if let Some(element) = self.parse_element() {
                        elements.push(element);
                    }
                }
                _ => {
                    self.error(format!(
                        "expected an element declaration or `}}` in `{keyword}`, {}",
                        self.found()
                    ));
                    self.recover();
                }
            }
        }
        let span = Span::new(self.file.clone(), keyword_span.start, end);
        Some(ItemBlock { keyword, keyword_span, span, elements })
    }

    fn parse_element(&mut self) -> Option<ElementDecl> {
        let (kind_keyword, kind_span) = match self.with_ident() {
            Some((word, span)) => (word.to_string(), span),
            None => return None,
        };
        self.bump();

        let (name, name_span) = match self.with_ident() {
            Some((word, span)) => {
                let name = word.to_string();
                self.bump();
                (name, span)
            }
            None => {
                self.error(format!("expected an element name after `{kind_keyword}`, {}", self.found()));
                self.recover();
                return None;
            }
        };

        let mut title = None;
        if let Some(TokenKind::Str(s)) = self.peek().map(|t| t.kind.clone()) {
            self.bump();
            title = Some(s);
        }

        let mut element = ElementDecl {
            kind_keyword,
            name,
            title,
            span: kind_span.clone(),
            name_span,
            attributes: Vec::new(),
            relations: Vec::new(),
            status: None,
            children: Vec::new(),
        };

        if !self.expect_lbrace(&format!("element `{}`", element.name)) {
            return Some(element);
        }

        let end;
        loop {
            match self.peek().map(|t| t.kind.clone()) {
                None => {
                    self.error(format!(
                        "expected `}}` to close element `{}`, found end of file",
                        element.name
                    ));
                    end = self.eof;
                    break;
                }
                Some(TokenKind::RBrace) => {
                    end = self.bump().unwrap().span.end;
                    break;
                }
                Some(TokenKind::Ident(word)) => {
                    let follows_colon =
                        matches!(self.peek2().map(|t| &t.kind), Some(TokenKind::Colon));
                    if follows_colon {
                        if word == "status" {
                            self.parse_status_clause(&mut element);
                        } else {
                            self.parse_attribute(&mut element);
                        }
                    } else if let Some(relation) = Relation::from_keyword(&word) {
                        self.parse_relation_clause(relation, &mut element);
                    } else if is_kind_keyword(&word) {
                        if let Some(child) = self.parse_element() {
                            element.children.push(child);
                        }
                    } else {
                        self.error(format!(
                            "expected an attribute, relation, status, or nested element, found `{word}`"
                        ));
                        self.recover();
                    }
                }
                _ => {
                    self.error(format!(
                        "expected an attribute, relation, status, or nested element, {}",
                        self.found()
                    ));
                    self.recover();
                }
            }
        }

        element.span = Span::new(self.file.clone(), kind_span.start, end);
        Some(element)
    }

    fn parse_status_clause(&mut self, element: &mut ElementDecl) {
        let start = self.bump().unwrap().span; // `status`
        self.bump(); // `:`
        match self.with_ident() {
            Some((word, span)) => match ElementStatus::from_str(word) {
                Some(status) => {
                    self.bump();
                    let clause = StatusClause { status, span: start.merge(&span) };
                    if element.status.is_some() {
                        self.diagnostics.push(Diagnostic::error(
                            codes::ARD010,
                            format!("element `{}` declares its status twice", element.name),
                            clause.span.clone(),
                        ));
                    }
                    element.status = Some(clause);
                }
                None => {
                    self.error(format!("expected `draft`, `defined`, or `agreed`, found `{word}`"));
                    self.bump();
                }
            },
            None => {
                self.error(format!("expected `draft`, `defined`, or `agreed`, {}", self.found()));
                self.recover();
            }
        }
    }

    fn parse_attribute(&mut self, element: &mut ElementDecl) {
        let name_token = self.bump().unwrap();
        let name = match name_token.kind {
            TokenKind::Ident(id) => id,
            _ => unreachable!("attribute entry starts at an identifier"),
        };
        self.bump(); // `:`
        let value = match self.peek().map(|t| t.kind.clone()) {
            Some(TokenKind::Str(s)) => {
                let token = self.bump().unwrap();
                Some((AttrValue::Text(s), token.span))
            }
            Some(TokenKind::Int(n)) => {
                let token = self.bump().unwrap();
                Some((AttrValue::Int(n), token.span))
            }
            Some(TokenKind::Ident(word)) => {
                let token = self.bump().unwrap();
                let value = match word.as_str() {
                    "true" | "yes" => AttrValue::Bool(true),
                    "false" | "no" => AttrValue::Bool(false),
                    other => AttrValue::Text(other.to_string()),
                };
                Some((value, token.span))
            }
            _ => {
                self.error(format!("expected a value for attribute `{name}`, {}", self.found()));
                self.recover();
                None
            }
        };
        if let Some((value, value_span)) = value {
            element.attributes.push(AttributeAssign {
                name,
                value,
                span: name_token.span.merge(&value_span),
            });
        }
    }

    fn parse_relation_clause(&mut self, relation: Relation, element: &mut ElementDecl) {
        let keyword_span = self.bump().unwrap().span;
        let mut targets = Vec::new();
        let mut span = keyword_span.clone();
        loop {
            match self.parse_qualified_name() {
                Some(name) => {
                    span = span.merge(&name.span);
                    targets.push(name);
                }
                None => {
                    self.error(format!(
                        "expected a qualified name after `{}`, {}",
                        relation.keyword(),
                        self.found()
                    ));
                    self.recover();
                    break;
                }
            }
            if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Comma)) {
                self.bump();
                continue;
            }
            break;
        }
        if !targets.is_empty() {
            element.relations.push(RelationClause { relation, targets, span });
        }
    }

    fn parse_qualified_name(&mut self) -> Option<QualifiedName> {
        let (first, first_span) = self.with_ident()?;
        let mut text = first.to_string();
        let mut span = first_span;
        self.bump();
        while matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Dot)) {
            self.bump();
            match self.with_ident() {
                Some((segment, segment_span)) => {
                    text.push('.');
                    text.push_str(segment);
                    span = span.merge(&segment_span);
                    self.bump();
                }
                None => {
                    self.error(format!("expected an identifier after `.`, {}", self.found()));
                    break;
                }
            }
        }
        Some(QualifiedName { text, span })
    }
}
