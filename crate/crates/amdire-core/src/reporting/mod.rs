//! Rendering of specification documents, trace matrices, and diagnostic
//! reports.

mod canonical;
mod emit;
mod markdown;
mod trace;

pub use canonical::render_canonical;
pub use emit::{emit_diagnostics, emit_human, emit_json, ReportFormat};
pub use markdown::render_markdown;
pub use trace::{trace_matrix, TraceError, TraceMatrix, TraceRow};

use crate::catalog::{ArtefactType, Catalog};
use crate::diagnostics::Diagnostic;
use crate::linker::ModelGraph;
use crate::tailoring::ProjectConfig;

/// Output format of a rendered specification document.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentFormat {
    Markdown,
    Ardl,
}

impl DocumentFormat {
    pub fn from_str(s: &str) -> Option<Self> {
        match s {
            "markdown" | "md" => Some(DocumentFormat::Markdown),
            "ardl" => Some(DocumentFormat::Ardl),
            _ => None,
        }
    }
}

/// A rendered specification document.
#[derive(Debug, Clone)]
pub struct RenderedDocument {
    pub artefact: ArtefactType,
    pub format: DocumentFormat,
    pub body: String,
}

/// Renders one artefact of the graph. Markdown output carries front matter
/// with milestone status; ARDL output is canonical.
pub fn render_spec(
    graph: &ModelGraph,
    catalog: &Catalog,
    config: &ProjectConfig,
    diagnostics: &[Diagnostic],
    artefact: ArtefactType,
    format: DocumentFormat,
) -> RenderedDocument {
    let body = match format {
        DocumentFormat::Markdown => render_markdown(graph, catalog, config, diagnostics, artefact),
        DocumentFormat::Ardl => render_canonical(graph, catalog, config, artefact),
    };
    RenderedDocument { artefact, format, body }
}
