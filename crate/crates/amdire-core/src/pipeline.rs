//! End-to-end analysis of a project: load, parse, link, tailor, validate.
//!
//! Projects can come from a directory on disk or from in-memory sources
//! (tests and tooling). The result bundles the graph, the resolved
//! configuration, and the merged, sorted diagnostic list with severity
//! overrides applied.

use std::collections::BTreeMap;
use std::path::Path;

use crate::ardl::{parse, SourceFile};
use crate::catalog::{load_catalog, Catalog};
use crate::diagnostics::{sort_diagnostics, Diagnostic, Severity};
use crate::linker::{link, LinkInput, ModelGraph};
use crate::project::{
    parse_manifest, parse_tailoring, ProjectManifest, SeveritySetting, MANIFEST_FILE_NAME,
};
use crate::tailoring::{resolve_config, ProjectConfig};
use crate::validator::{is_overridable, validate};

/// A project held in memory: the manifest plus every file it references,
/// keyed by the path used in the manifest.
#[derive(Debug, Clone, Default)]
pub struct InMemoryProject {
    pub manifest: String,
    pub files: BTreeMap<String, String>,
}

/// Result of a full analysis run.
#[derive(Debug)]
pub struct Analysis {
    pub manifest: ProjectManifest,
    pub config: ProjectConfig,
    pub graph: ModelGraph,
    /// Merged and sorted; severity overrides applied, `off` rules dropped.
    pub diagnostics: Vec<Diagnostic>,
}

impl Analysis {
    pub fn error_count(&self) -> usize {
        self.diagnostics.iter().filter(|d| d.severity == Severity::Error).count()
    }

    pub fn has_errors(&self) -> bool {
        self.error_count() > 0
    }
}

/// Failure to load a project before analysis can start.
#[derive(Debug, thiserror::Error)]
pub enum ProjectLoadError {
    #[error("no {MANIFEST_FILE_NAME} in {0}")]
    MissingManifest(String),
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("manifest references `{0}`, which does not exist")]
    MissingFile(String),
}

/// Analyzes an in-memory project.
pub fn analyze_project(project: &InMemoryProject) -> Result<Analysis, ProjectLoadError> {
    let catalog = load_catalog();
    let manifest_source = SourceFile::new(MANIFEST_FILE_NAME, project.manifest.clone());
    let (manifest, mut diagnostics) = parse_manifest(&manifest_source);

    let mut profiles = Vec::new();
    for (path, _) in &manifest.tailoring_paths {
        let text = project
            .files
            .get(path)
            .ok_or_else(|| ProjectLoadError::MissingFile(path.clone()))?;
        let (profile, mut profile_diags) =
            parse_tailoring(&SourceFile::new(path.as_str(), text.clone()));
        diagnostics.append(&mut profile_diags);
        profiles.push(profile);
    }

    let (config, mut config_diags) = resolve_config(catalog, &manifest, &profiles);
    diagnostics.append(&mut config_diags);

    let mut inputs = Vec::new();
    for alias in &manifest.aliases {
        let text = project
            .files
            .get(&alias.path)
            .ok_or_else(|| ProjectLoadError::MissingFile(alias.path.clone()))?;
        let source = SourceFile::new(alias.path.as_str(), text.clone());
        let (tree, mut parse_diags) = parse(&source);
        diagnostics.append(&mut parse_diags);
        inputs.push(LinkInput { alias: alias.alias.clone(), file: source.path, tree });
    }

    let (graph, mut link_diags) = link(inputs);
    diagnostics.append(&mut link_diags);

    let mut validation = validate(&graph, catalog, &config);
    diagnostics.append(&mut validation);

    apply_overrides(&mut diagnostics, &config);
    sort_diagnostics(&mut diagnostics);
    Ok(Analysis { manifest, config, graph, diagnostics })
}

/// Reads a project directory (manifest plus referenced files) into memory.
pub fn read_project_dir(dir: &Path) -> Result<InMemoryProject, ProjectLoadError> {
    let manifest_path = dir.join(MANIFEST_FILE_NAME);
    if !manifest_path.is_file() {
        return Err(ProjectLoadError::MissingManifest(dir.display().to_string()));
    }
    let manifest = read(&manifest_path)?;
    let (parsed, _) = parse_manifest(&SourceFile::new(MANIFEST_FILE_NAME, manifest.clone()));

    let mut files = BTreeMap::new();
    for alias in &parsed.aliases {
        insert_file(dir, &alias.path, &mut files)?;
    }
    for (path, _) in &parsed.tailoring_paths {
        insert_file(dir, path, &mut files)?;
    }
    Ok(InMemoryProject { manifest, files })
}

/// Analyzes a project directory on disk.
pub fn analyze_dir(dir: &Path) -> Result<Analysis, ProjectLoadError> {
    let project = read_project_dir(dir)?;
    analyze_project(&project)
}

fn insert_file(
    dir: &Path,
    relative: &str,
    files: &mut BTreeMap<String, String>,
) -> Result<(), ProjectLoadError> {
    let full = dir.join(relative);
    if !full.is_file() {
        return Err(ProjectLoadError::MissingFile(relative.to_string()));
    }
    files.insert(relative.to_string(), read(&full)?);
    Ok(())
}

fn read(path: &Path) -> Result<String, ProjectLoadError> {
    std::fs::read_to_string(path)
        .map_err(|source| ProjectLoadError::Io { path: path.display().to_string(), source })
}

/// Applies manifest severity overrides to overridable codes and drops rules
/// switched off. Presence of findings never changes, only their severity.
fn apply_overrides(diagnostics: &mut Vec<Diagnostic>, config: &ProjectConfig) {
    if config.severity_overrides.is_empty() {
        return;
    }
    diagnostics.retain_mut(|diag| {
        let Some(setting) = config.severity_overrides.get(diag.code) else { return true };
        if !is_overridable(diag.code) {
            return true;
        }
        match setting {
            SeveritySetting::Error => diag.severity = Severity::Error,
            SeveritySetting::Warning => diag.severity = Severity::Warning,
            SeveritySetting::Info => diag.severity = Severity::Info,
            SeveritySetting::Off => return false,
        }
        true
    });
}

/// The embedded catalog, exposed for CLI convenience.
pub fn catalog() -> &'static Catalog {
    load_catalog()
}
