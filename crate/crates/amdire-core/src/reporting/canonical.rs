//! Canonical ARDL rendering.
//!
//! Canonical form is deterministic: items in catalog order, elements and
//! children sorted by name, attributes sorted by name, relations in catalog
//! relation order with sorted targets, two-space indentation, LF line
//! endings. Rendering the parse of a canonical document reproduces it byte
//! for byte, and a rendered artefact re-links to an isomorphic graph.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::ardl::AttrValue;
use crate::catalog::{ArtefactType, Catalog, ContentItemId, ElementStatus, Relation};
use crate::linker::{ElementId, ModelElement, ModelGraph};
use crate::tailoring::ProjectConfig;

/// Renders one artefact of the graph as canonical ARDL.
pub fn render_canonical(
    graph: &ModelGraph,
    catalog: &Catalog,
    config: &ProjectConfig,
    artefact: ArtefactType,
) -> String {
    let instance = graph.artefact(artefact);
    let title = instance
        .and_then(|i| i.title.clone())
        .unwrap_or_else(|| format!("{} {}", config.name, artefact.display_name()));

    let mut out = String::new();
    let _ = writeln!(out, "{} {}", artefact.keyword(), quote(&title));
    // Re-open the header brace on the same line as the title.
    out.pop();
    out.push_str(" {\n");

    // Enabled items plus any item that actually holds elements.
    let mut wanted: BTreeSet<ContentItemId> =
        config.enabled_items(artefact).iter().copied().collect();
    for element in graph.partition(artefact) {
        wanted.insert(element.home_item);
    }

    for item in &catalog.artefact_type(artefact).content_items {
        if !wanted.contains(item) {
            continue;
        }
        let _ = writeln!(out, "  {} {{", item.keyword());
        let mut roots: Vec<&ModelElement> = graph
            .partition(artefact)
            .filter(|e| e.home_item == *item && e.parent.is_none())
            .collect();
        roots.sort_by(|a, b| a.name.cmp(&b.name));
        for element in roots {
            render_element(&mut out, graph, element, 2);
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

fn render_element(out: &mut String, graph: &ModelGraph, element: &ModelElement, depth: usize) {
    let indent = "  ".repeat(depth);
    let keyword = element.kind.keyword().unwrap_or("element");
    let _ = write!(out, "{indent}{keyword} {}", element.name);
    if let Some(title) = &element.title {
        let _ = write!(out, " {}", quote(title));
    }

    let mut body: Vec<String> = Vec::new();
    if element.status != ElementStatus::Draft {
        body.push(format!("status: {}", element.status));
    }
    for (name, value) in &element.attributes {
        body.push(format!("{name}: {}", render_value(value)));
    }
    for relation in Relation::ALL {
        let mut targets: Vec<String> = graph
            .outgoing(element.id)
            .filter(|e| e.relation == relation && !e.from_nesting)
            .map(|e| graph.element(e.target).fqn.clone())
            .collect();
        if targets.is_empty() {
            continue;
        }
        targets.sort();
        targets.dedup();
        body.push(format!("{} {}", relation.keyword(), targets.join(", ")));
    }

    let mut children: Vec<ElementId> = graph.children_of(element.id).to_vec();
    children.sort_by(|a, b| graph.element(*a).name.cmp(&graph.element(*b).name));

    if body.is_empty() && children.is_empty() {
        out.push_str(" {}\n");
        return;
    }
    out.push_str(" {\n");
    let inner = "  ".repeat(depth + 1);
    for line in body {
        let _ = writeln!(out, "{inner}{line}");
    }
    for child in children {
        render_element(out, graph, graph.element(child), depth + 1);
    }
    let _ = writeln!(out, "{indent}}}");
}

fn render_value(value: &AttrValue) -> String {
    match value {
        AttrValue::Text(text) => quote(text),
        AttrValue::Int(n) => n.to_string(),
        AttrValue::Bool(true) => "true".to_string(),
        AttrValue::Bool(false) => "false".to_string(),
    }
}

fn quote(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            other => out.push(other),
        }
    }
    out.push('"');
    out
}
