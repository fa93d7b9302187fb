//! Toolchain for authoring and checking AMDiRE-style requirements
//! specifications.
//!
//! The crate is organised along the pipeline:
//!
//! - [`catalog`]: the embedded artefact model — three artefact types, their
//!   content items, 70+ concept kinds, and the legal relations between them.
//! - [`ardl`]: lexer and parser for the ARDL notation (one artefact per
//!   file, block-structured, position-annotated, error-recovering).
//! - [`linker`]: symbol table, reference resolution, and the typed model
//!   graph.
//! - [`validator`]: the rule engine producing coded, located diagnostics.
//! - [`tailoring`] and [`milestones`]: organisational/project tailoring,
//!   situation factors, milestone maturity, and completeness metrics.
//! - [`reporting`]: markdown documents, canonical ARDL, traceability
//!   matrices, and human/JSON diagnostic reports.
//! - [`pipeline`]: one-call project analysis used by the CLI and tests.

pub mod ardl;
pub mod catalog;
pub mod diagnostics;
pub mod linker;
pub mod milestones;
pub mod pipeline;
pub mod project;
pub mod reporting;
pub mod tailoring;
pub mod validator;

pub use catalog::load_catalog;
pub use pipeline::{analyze_dir, analyze_project, Analysis, InMemoryProject, ProjectLoadError};
