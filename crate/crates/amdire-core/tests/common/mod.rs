//! Shared helpers for integration tests: fixture loading, graph comparison,
//! and span-based source surgery.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use amdire_core::ardl::{parse, RelationClause, SourceFile};
use amdire_core::catalog::Relation;
use amdire_core::diagnostics::{Diagnostic, Position, Severity};
use amdire_core::linker::ModelGraph;
use amdire_core::pipeline::{analyze_project, Analysis, InMemoryProject};

pub fn fixture_dir(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

/// Loads a fixture project into memory so tests can mutate it freely.
pub fn load_fixture(name: &str) -> InMemoryProject {
    let dir = fixture_dir(name);
    amdire_core::pipeline::read_project_dir(&dir)
        .unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub fn analyze_fixture(name: &str) -> Analysis {
    analyze_project(&load_fixture(name)).expect("fixture analyzes")
}

pub fn errors(diags: &[Diagnostic]) -> Vec<&Diagnostic> {
    diags.iter().filter(|d| d.severity == Severity::Error).collect()
}

/// Fingerprint of a graph that is stable under element-id renumbering:
/// elements keyed by fully qualified name, edges by endpoint names.
pub fn graph_fingerprint(graph: &ModelGraph) -> (BTreeMap<String, String>, BTreeSet<String>) {
    let elements = graph
        .elements()
        .map(|e| {
            let attrs: Vec<String> =
                e.attributes.iter().map(|(k, v)| format!("{k}={v:?}")).collect();
            (
                e.fqn.clone(),
                format!(
                    "{:?}|{:?}|{:?}|{}|{:?}",
                    e.kind,
                    e.title,
                    e.status,
                    attrs.join(","),
                    e.parent.map(|p| graph.element(p).fqn.clone())
                ),
            )
        })
        .collect();
    let edges = graph
        .edges()
        .iter()
        .map(|edge| {
            format!(
                "{}|{:?}|{}",
                graph.element(edge.source).fqn,
                edge.relation,
                graph.element(edge.target).fqn
            )
        })
        .collect();
    (elements, edges)
}

pub fn assert_isomorphic(a: &ModelGraph, b: &ModelGraph) {
    let (elements_a, edges_a) = graph_fingerprint(a);
    let (elements_b, edges_b) = graph_fingerprint(b);
    assert_eq!(elements_a, elements_b, "element sets differ");
    assert_eq!(edges_a, edges_b, "edge sets differ");
}

/// Renders all three artefacts canonically and re-assembles a project with
/// the same manifest.
pub fn rendered_project(analysis: &Analysis, original: &InMemoryProject) -> InMemoryProject {
    use amdire_core::catalog::ArtefactType;
    use amdire_core::reporting::{render_spec, DocumentFormat};

    let catalog = amdire_core::load_catalog();
    let mut files = BTreeMap::new();
    for alias in &analysis.manifest.aliases {
        let artefact = ArtefactType::ALL
            .iter()
            .copied()
            .find(|&a| {
                analysis.graph.artefact(a).is_some_and(|i| &*i.file == alias.path.as_str())
            })
            .expect("alias maps to an artefact");
        let document = render_spec(
            &analysis.graph,
            catalog,
            &analysis.config,
            &analysis.diagnostics,
            artefact,
            DocumentFormat::Ardl,
        );
        files.insert(alias.path.clone(), document.body);
    }
    for (path, text) in &original.files {
        if !files.contains_key(path) {
            files.insert(path.clone(), text.clone());
        }
    }
    InMemoryProject { manifest: original.manifest.clone(), files }
}

/// Converts a 1-based position to a byte offset in `text`.
pub fn byte_offset(text: &str, pos: Position) -> usize {
    let mut line = 1u32;
    let mut col = 1u32;
    for (offset, c) in text.char_indices() {
        if line == pos.line && col == pos.col {
            return offset;
        }
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    text.len()
}

/// One realises clause occurrence in a fixture file, with enough context to
/// delete a single target from it.
#[derive(Debug, Clone)]
pub struct RealisesSite {
    pub file: String,
    pub source_element: String,
    pub target_text: String,
    /// Byte range of the whole clause in the file.
    pub clause_range: (usize, usize),
    /// 1-based position where the clause starts.
    pub clause_start: Position,
    pub target_count: usize,
    pub target_index: usize,
}

/// Enumerates every realises target in the project by walking the parse
/// trees. Independent of linker and validator.
pub fn realises_sites(project: &InMemoryProject) -> Vec<RealisesSite> {
    let mut sites = Vec::new();
    for (path, text) in &project.files {
        if !path.ends_with(".ardl") {
            continue;
        }
        let (tree, diags) = parse(&SourceFile::new(path.as_str(), text.clone()));
        assert!(diags.is_empty(), "{path}: {diags:?}");
        for item in &tree.items {
            for element in &item.elements {
                collect_sites(path, text, element, &mut sites);
            }
        }
    }
    sites
}

fn collect_sites(
    path: &str,
    text: &str,
    element: &amdire_core::ardl::ElementDecl,
    sites: &mut Vec<RealisesSite>,
) {
    for clause in &element.relations {
        if clause.relation != Relation::Realises {
            continue;
        }
        let range = clause_byte_range(text, clause);
        for (index, target) in clause.targets.iter().enumerate() {
            sites.push(RealisesSite {
                file: path.to_string(),
                source_element: element.name.clone(),
                target_text: target.text.clone(),
                clause_range: range,
                clause_start: clause.span.start,
                target_count: clause.targets.len(),
                target_index: index,
            });
        }
    }
    for child in &element.children {
        collect_sites(path, text, child, sites);
    }
}

fn clause_byte_range(text: &str, clause: &RelationClause) -> (usize, usize) {
    let start = byte_offset(text, clause.span.start);
    let end_pos = clause.span.end;
    let mut end = byte_offset(text, end_pos);
    // Spans are inclusive; step past the final scalar value.
    if let Some(c) = text[end..].chars().next() {
        end += c.len_utf8();
    }
    (start, end)
}

/// Rewrites every `status:` clause in an ARDL file. The callback sees the
/// containing item keyword and the element name and returns the replacement
/// status, or `None` to leave the clause alone.
pub fn rewrite_statuses(
    text: &str,
    mut decide: impl FnMut(&str, &str) -> Option<&'static str>,
) -> String {
    let (tree, diags) = parse(&SourceFile::new("rewrite.ardl", text.to_string()));
    assert!(diags.is_empty(), "{diags:?}");
    // (byte range, replacement), collected deepest-last then applied in
    // reverse so earlier offsets stay valid.
    let mut edits: Vec<((usize, usize), String)> = Vec::new();
    fn visit(
        text: &str,
        item_keyword: &str,
        element: &amdire_core::ardl::ElementDecl,
        decide: &mut impl FnMut(&str, &str) -> Option<&'static str>,
        edits: &mut Vec<((usize, usize), String)>,
    ) {
        if let Some(status) = &element.status {
            if let Some(new_status) = decide(item_keyword, &element.name) {
                let start = byte_offset(text, status.span.start);
                let mut end = byte_offset(text, status.span.end);
                if let Some(c) = text[end..].chars().next() {
                    end += c.len_utf8();
                }
                edits.push(((start, end), format!("status: {new_status}")));
            }
        }
        for child in &element.children {
            visit(text, item_keyword, child, decide, edits);
        }
    }
    for item in &tree.items {
        for element in &item.elements {
            visit(text, &item.keyword, element, &mut decide, &mut edits);
        }
    }
    edits.sort_by_key(|(range, _)| range.0);
    let mut out = text.to_string();
    for ((start, end), replacement) in edits.into_iter().rev() {
        out.replace_range(start..end, &replacement);
    }
    out
}

/// Returns the fixture with every element status in every artefact file
/// rewritten by `decide`.
pub fn with_statuses(
    project: &InMemoryProject,
    mut decide: impl FnMut(&str, &str, &str) -> Option<&'static str>,
) -> InMemoryProject {
    let mut out = project.clone();
    for (path, text) in &project.files {
        if !path.ends_with(".ardl") {
            continue;
        }
        let rewritten = rewrite_statuses(text, |item, element| decide(path, item, element));
        out.files.insert(path.clone(), rewritten);
    }
    out
}

/// Returns the project with one realises target removed. Single-target
/// clauses are deleted whole; multi-target clauses lose one name.
pub fn delete_realises_target(project: &InMemoryProject, site: &RealisesSite) -> InMemoryProject {
    let mut mutated = project.clone();
    let text = mutated.files.get_mut(&site.file).expect("file exists");
    let (start, end) = site.clause_range;
    let clause_text = &text[start..end];
    let replacement = if site.target_count == 1 {
        String::new()
    } else {
        // Drop exactly one comma-separated target from the clause.
        let mut parts: Vec<&str> = clause_text
            .strip_prefix("realises")
            .expect("clause starts with the keyword")
            .split(',')
            .map(str::trim)
            .collect();
        parts.remove(site.target_index);
        format!("realises {}", parts.join(", "))
    };
    let mut updated = String::with_capacity(text.len());
    updated.push_str(&text[..start]);
    updated.push_str(&replacement);
    updated.push_str(&text[end..]);
    *text = updated;
    mutated
}
