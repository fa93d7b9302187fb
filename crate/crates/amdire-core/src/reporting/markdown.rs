//! Markdown rendering of specification documents.
//!
//! Sections follow catalog item order; every element appears with its title,
//! status, attributes, and outgoing relations. The front-matter block carries
//! the artefact's milestone status and completeness.

use std::fmt::Write;

use crate::ardl::AttrValue;
use crate::catalog::{ArtefactType, Catalog, ConceptKind, Relation};
use crate::diagnostics::Diagnostic;
use crate::linker::{ModelElement, ModelGraph};
use crate::milestones::{completeness, milestone_status};
use crate::tailoring::ProjectConfig;

pub fn render_markdown(
    graph: &ModelGraph,
    catalog: &Catalog,
    config: &ProjectConfig,
    diagnostics: &[Diagnostic],
    artefact: ArtefactType,
) -> String {
    let instance = graph.artefact(artefact);
    let title = instance
        .and_then(|i| i.title.clone())
        .unwrap_or_else(|| format!("{} {}", config.name, artefact.display_name()));

    let milestones = milestone_status(graph, catalog, config, diagnostics);
    let report = completeness(graph, config, diagnostics, artefact);

    let mut out = String::new();
    out.push_str("---\n");
    let _ = writeln!(out, "artefact: {}", artefact.display_name());
    let _ = writeln!(out, "project: {}", config.name);
    let _ = writeln!(out, "domain-profile: {}", config.domain_profile);
    for status in milestones.iter().filter(|m| m.artefact == artefact) {
        let _ = writeln!(
            out,
            "milestone {}: {}",
            status.milestone.ident(),
            if status.reached { "reached" } else { "not reached" }
        );
    }
    let _ = writeln!(out, "completeness: {:.2}", report.ratio);
    out.push_str("---\n\n");

    let _ = writeln!(out, "# {title}");
    if let Some(role) = catalog.roles.iter().find(|r| r.responsible_for == artefact) {
        let owner = config
            .role_assignments
            .get(&role.id)
            .map(|person| format!("{} ({person})", role.display_name))
            .unwrap_or_else(|| role.display_name.to_string());
        let _ = writeln!(out, "\nResponsible: {owner}");
    }

    for &item in config.enabled_items(artefact) {
        let _ = writeln!(out, "\n## {}", item.display_name());
        let mut roots: Vec<&ModelElement> = graph
            .partition(artefact)
            .filter(|e| e.home_item == item && e.parent.is_none())
            .collect();
        roots.sort_by(|a, b| a.name.cmp(&b.name));
        if roots.is_empty() {
            out.push_str("\n_No content yet._\n");
            continue;
        }
        out.push('\n');
        for element in roots {
            render_element(&mut out, graph, element, 0);
        }
    }
    out
}

fn render_element(out: &mut String, graph: &ModelGraph, element: &ModelElement, depth: usize) {
    let indent = "  ".repeat(depth);
    let title = element.title.as_deref().unwrap_or("");
    let _ = writeln!(
        out,
        "{indent}- **{}** `{}` ({}){}",
        element.name,
        element.fqn,
        element.kind.display_name(),
        if title.is_empty() { String::new() } else { format!(" — {title}") }
    );
    let inner = "  ".repeat(depth + 1);
    let _ = writeln!(out, "{inner}- status: {}", element.status);
    for (name, value) in &element.attributes {
        let rendered = match value {
            AttrValue::Text(text) => text.clone(),
            AttrValue::Int(n) => n.to_string(),
            AttrValue::Bool(b) => b.to_string(),
        };
        let _ = writeln!(out, "{inner}- {name}: {rendered}");
    }
    for relation in Relation::ALL {
        let mut targets: Vec<String> = graph
            .outgoing(element.id)
            .filter(|e| e.relation == relation && !e.from_nesting)
            .map(|e| format!("`{}`", graph.element(e.target).fqn))
            .collect();
        if targets.is_empty() {
            continue;
        }
        targets.sort();
        let _ = writeln!(out, "{inner}- {}: {}", relation.keyword(), targets.join(", "));
    }

    // The use-case overview is a generated cross-reference over the usage model.
    if element.kind == ConceptKind::UseCaseOverview {
        let mut use_cases: Vec<&str> = graph
            .elements()
            .filter(|e| e.kind == ConceptKind::UseCase)
            .map(|e| e.fqn.as_str())
            .collect();
        use_cases.sort();
        for use_case in use_cases {
            let _ = writeln!(out, "{inner}- covers use case: `{use_case}`");
        }
    }

    let mut children: Vec<&ModelElement> =
        graph.children_of(element.id).iter().map(|&id| graph.element(id)).collect();
    children.sort_by(|a, b| a.name.cmp(&b.name));
    for child in children {
        render_element(out, graph, child, depth + 1);
    }
}
