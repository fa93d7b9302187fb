//! Source positions, severities, and the diagnostic type shared by every
//! stage of the pipeline.
//!
//! All user-facing findings are `Diagnostic`s; nothing in the pipeline aborts
//! on bad input. Positions are 1-based and count Unicode scalar values, not
//! bytes.

use std::fmt;
use std::sync::Arc;

/// A 1-based line/column position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub line: u32,
    pub col: u32,
}

impl Position {
    pub fn new(line: u32, col: u32) -> Self {
        Position { line, col }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// A contiguous region of one source file. `start <= end`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Span {
    pub file: Arc<str>,
    pub start: Position,
    pub end: Position,
}

impl Span {
    pub fn new(file: Arc<str>, start: Position, end: Position) -> Self {
        debug_assert!(start <= end, "span start must not exceed end");
        Span { file, start, end }
    }

    pub fn point(file: Arc<str>, pos: Position) -> Self {
        Span::new(file, pos, pos)
    }

    /// Smallest span covering both `self` and `other` (same file).
    pub fn merge(&self, other: &Span) -> Span {
        Span {
            file: self.file.clone(),
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }

    /// True if `pos` lies within this span (inclusive on both ends).
    pub fn contains(&self, file: &str, pos: Position) -> bool {
        &*self.file == file && self.start <= pos && pos <= self.end
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.file, self.start)
    }
}

/// Severity of a finding. Exit codes and summaries count by severity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
    Info,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
            Severity::Info => "info",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A secondary location attached to a diagnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatedNote {
    pub span: Span,
    pub note: String,
}

/// A located, coded finding produced by lexing, parsing, linking, tailoring,
/// or validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: &'static str,
    pub severity: Severity,
    pub message: String,
    pub span: Span,
    pub related: Vec<RelatedNote>,
}

impl Diagnostic {
    pub fn new(code: &'static str, severity: Severity, message: impl Into<String>, span: Span) -> Self {
        Diagnostic {
            code,
            severity,
            message: message.into(),
            span,
            related: Vec::new(),
        }
    }

    pub fn error(code: &'static str, message: impl Into<String>, span: Span) -> Self {
        Diagnostic::new(code, Severity::Error, message, span)
    }

    pub fn warning(code: &'static str, message: impl Into<String>, span: Span) -> Self {
        Diagnostic::new(code, Severity::Warning, message, span)
    }

    pub fn info(code: &'static str, message: impl Into<String>, span: Span) -> Self {
        Diagnostic::new(code, Severity::Info, message, span)
    }

    pub fn with_related(mut self, span: Span, note: impl Into<String>) -> Self {
        self.related.push(RelatedNote { span, note: note.into() });
        self
    }
}

/// Sorts diagnostics into the canonical report order:
/// (file, line, column, code, message).
pub fn sort_diagnostics(diags: &mut [Diagnostic]) {
    diags.sort_by(|a, b| {
        (&*a.span.file, a.span.start, a.code, &a.message)
            .cmp(&(&*b.span.file, b.span.start, b.code, &b.message))
    });
}

/// Diagnostic codes. `ARD` codes come from the ARDL frontend, `AMD` codes
/// from linking, tailoring, and validation.
pub mod codes {
    /// Unterminated string literal.
    pub const ARD001: &str = "ARD001";
    /// Character outside the ARDL alphabet.
    pub const ARD002: &str = "ARD002";
    /// Syntax error (panic-mode recovery point).
    pub const ARD010: &str = "ARD010";

    /// Unresolved qualified reference.
    pub const AMD001: &str = "AMD001";
    /// Duplicate fully qualified name.
    pub const AMD002: &str = "AMD002";
    /// Ambiguous partially qualified reference.
    pub const AMD003: &str = "AMD003";
    /// Element kind not homed in the declaring content item.
    pub const AMD004: &str = "AMD004";
    /// Content item not part of the declaring artefact type.
    pub const AMD005: &str = "AMD005";
    /// Artefact type declared by more than one file.
    pub const AMD006: &str = "AMD006";

    /// Missing or empty mandatory content item.
    pub const AMD020: &str = "AMD020";
    /// Actor without realisation of a user group or external system.
    pub const AMD030: &str = "AMD030";
    /// Data object without realisation of a business object.
    pub const AMD031: &str = "AMD031";
    /// Action without realisation of a process step.
    pub const AMD032: &str = "AMD032";
    /// System function without realisation of a system action or
    /// user-visible function.
    pub const AMD033: &str = "AMD033";
    /// Data element without realisation of a data object.
    pub const AMD034: &str = "AMD034";
    /// State realising something other than a mode.
    pub const AMD035: &str = "AMD035";
    /// State without realisation of a mode (embedded profiles).
    pub const AMD036: &str = "AMD036";
    /// External interface without a realising system interface.
    pub const AMD037: &str = "AMD037";
    /// Quality requirement without an assessment.
    pub const AMD040: &str = "AMD040";
    /// Quality requirement not connected to the goal hierarchy.
    pub const AMD041: &str = "AMD041";
    /// Usage goal unrelated to any business goal.
    pub const AMD050: &str = "AMD050";
    /// System goal unrelated to any usage goal.
    pub const AMD051: &str = "AMD051";
    /// Cycle in the goal hierarchy.
    pub const AMD052: &str = "AMD052";
    /// System goal without a demanded quality attribute.
    pub const AMD053: &str = "AMD053";
    /// Goal without an issuing stakeholder.
    pub const AMD054: &str = "AMD054";
    /// Use case without functional scenarios.
    pub const AMD060: &str = "AMD060";
    /// Functional scenario never triggered by an event.
    pub const AMD061: &str = "AMD061";
    /// Requirements risk without a causing risk factor.
    pub const AMD070: &str = "AMD070";
    /// Cycle in the component decomposition.
    pub const AMD071: &str = "AMD071";
    /// State transition with a missing source or target state.
    pub const AMD072: &str = "AMD072";
    /// Relation not allowed between the two element kinds.
    pub const AMD080: &str = "AMD080";
    /// Service model content present under an embedded profile.
    pub const AMD081: &str = "AMD081";
    /// Realisation multiplicity exceeded.
    pub const AMD084: &str = "AMD084";
    /// Core content item disabled without justification.
    pub const AMD085: &str = "AMD085";
    /// Conflicting domain profiles between tailoring levels.
    pub const AMD086: &str = "AMD086";
    /// Unknown situation factor.
    pub const AMD087: &str = "AMD087";
    /// Situation factor conflicts with a tailoring decision.
    pub const AMD088: &str = "AMD088";
    /// Unknown key in a manifest or tailoring file.
    pub const AMD090: &str = "AMD090";
    /// Title uses an abbreviation not defined in the glossary.
    pub const AMD091: &str = "AMD091";
}
