//! ARDL, the textual notation for authoring artefact instances.
//!
//! One file holds one artefact. The grammar, sketched:
//!
//! ```text
//! file            := artefact-header "{" content-item-block* "}"
//! artefact-header := ("context-specification" | "requirements-specification"
//!                     | "system-specification") string
//! content-item-block := item-keyword "{" element-decl* "}"
//! element-decl    := kind-keyword identifier string? "{" member* "}"
//! member          := attribute | relation-clause | status-clause | element-decl
//! relation-clause := relation-keyword qualified-name ("," qualified-name)*
//! status-clause   := "status" ":" ("draft" | "defined" | "agreed")
//! attribute       := identifier ":" (string | integer | identifier)
//! qualified-name  := identifier ("." identifier)*
//! ```
//!
//! Item, kind, and relation keywords are generated from the catalog, so the
//! accepted vocabulary always matches the artefact model. Files use the
//! `.ardl` extension and UTF-8 encoding; `//` comments run to end of line.

mod ast;
mod lexer;
mod parser;

pub use ast::{
    elements_structurally_equal, ArtefactDecl, AttrValue, AttributeAssign, ElementDecl, ItemBlock,
    QualifiedName, RelationClause, SourceFile, StatusClause,
};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::parse;
