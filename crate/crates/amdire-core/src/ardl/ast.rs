//! Position-annotated syntax tree for ARDL files.

use std::sync::Arc;

use crate::catalog::{ArtefactType, ElementStatus, Relation};
use crate::diagnostics::Span;

/// One ARDL source file held in memory.
#[derive(Debug, Clone)]
pub struct SourceFile {
    pub path: Arc<str>,
    pub text: String,
}

impl SourceFile {
    pub fn new(path: impl Into<Arc<str>>, text: impl Into<String>) -> Self {
        SourceFile { path: path.into(), text: text.into() }
    }
}

/// Root of a parsed file. Always produced, even for erroneous input.
#[derive(Debug, Clone)]
pub struct ArtefactDecl {
    /// Artefact kind from the file header; `None` when the header was
    /// unrecoverable.
    pub artefact: Option<ArtefactType>,
    pub title: Option<String>,
    /// Span of the header line (keyword plus title).
    pub header_span: Span,
    /// Span of the whole declaration.
    pub span: Span,
    pub items: Vec<ItemBlock>,
}

/// A content-item block (`system-vision { ... }`).
#[derive(Debug, Clone)]
pub struct ItemBlock {
    pub keyword: String,
    pub keyword_span: Span,
    pub span: Span,
    pub elements: Vec<ElementDecl>,
}

/// An element declaration with its attributes, relations, status, and
/// nested children.
#[derive(Debug, Clone)]
pub struct ElementDecl {
    pub kind_keyword: String,
    pub name: String,
    pub title: Option<String>,
    pub span: Span,
    pub name_span: Span,
    pub attributes: Vec<AttributeAssign>,
    pub relations: Vec<RelationClause>,
    pub status: Option<StatusClause>,
    pub children: Vec<ElementDecl>,
}

#[derive(Debug, Clone)]
pub struct AttributeAssign {
    pub name: String,
    pub value: AttrValue,
    pub span: Span,
}

/// Scalar attribute value. Identifiers are kept as text.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum AttrValue {
    Text(String),
    Int(i64),
    Bool(bool),
}

impl AttrValue {
    pub fn as_text(&self) -> Option<&str> {
        match self {
            AttrValue::Text(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            AttrValue::Bool(b) => Some(*b),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RelationClause {
    pub relation: Relation,
    pub targets: Vec<QualifiedName>,
    pub span: Span,
}

#[derive(Debug, Clone)]
pub struct QualifiedName {
    pub text: String,
    pub span: Span,
}

#[derive(Debug, Clone)]
pub struct StatusClause {
    pub status: ElementStatus,
    pub span: Span,
}

/// Structural equality ignoring spans, for lossless-span checks.
pub fn elements_structurally_equal(a: &ElementDecl, b: &ElementDecl) -> bool {
    a.kind_keyword == b.kind_keyword
        && a.name == b.name
        && a.title == b.title
        && a.status.as_ref().map(|s| s.status) == b.status.as_ref().map(|s| s.status)
        && a.attributes.len() == b.attributes.len()
        && a.attributes
            .iter()
            .zip(&b.attributes)
            .all(|(x, y)| x.name == y.name && x.value == y.value)
        && a.relations.len() == b.relations.len()
        && a.relations.iter().zip(&b.relations).all(|(x, y)| {
            x.relation == y.relation
                && x.targets.len() == y.targets.len()
                && x.targets.iter().zip(&y.targets).all(|(s, t)| s.text == t.text)
        })
        && a.children.len() == b.children.len()
        && a.children.iter().zip(&b.children).all(|(x, y)| elements_structurally_equal(x, y))
}
