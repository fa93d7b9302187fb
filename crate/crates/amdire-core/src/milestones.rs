//! Milestone maturity and completeness metrics per artefact type.
//!
//! The first milestone of an artefact is reached when its first content item
//! is defined: present, non-empty, every element at least `defined`, and free
//! of errors. The finalisation milestone requires all enabled items present
//! and non-empty, every element `agreed`, and an error-free artefact.
//! Finalisation never precedes the first milestone.

use std::collections::HashMap;

use crate::catalog::{
    ArtefactType, Catalog, ContentItemId, ElementStatus, MilestoneId, MilestoneKind,
};
use crate::diagnostics::{Diagnostic, Severity};
use crate::linker::ModelGraph;
use crate::tailoring::ProjectConfig;

/// Maturity of one milestone, with what blocks it.
#[derive(Debug, Clone)]
pub struct MilestoneStatus {
    pub milestone: MilestoneId,
    pub artefact: ArtefactType,
    pub kind: MilestoneKind,
    pub reached: bool,
    pub blocking: Vec<(ContentItemId, String)>,
}

#[derive(Debug, Clone)]
pub struct ItemCompleteness {
    pub item: ContentItemId,
    pub present: bool,
    pub non_empty: bool,
    pub error_free: bool,
}

impl ItemCompleteness {
    pub fn complete(&self) -> bool {
        self.present && self.non_empty && self.error_free
    }
}

/// The completeness ratio of one artefact with its per-item breakdown.
#[derive(Debug, Clone)]
pub struct CompletenessReport {
    pub artefact: ArtefactType,
    pub ratio: f64,
    pub items: Vec<ItemCompleteness>,
}

struct ItemFacts {
    element_count: usize,
    below_defined: usize,
    below_agreed: usize,
    error_count: usize,
    block_present: bool,
}

struct ArtefactFacts {
    items: HashMap<ContentItemId, ItemFacts>,
    /// Error diagnostics in the artefact's file, including those outside any
    /// item block.
    error_count: usize,
}

fn collect_facts(
    graph: &ModelGraph,
    config: &ProjectConfig,
    diagnostics: &[Diagnostic],
) -> HashMap<ArtefactType, ArtefactFacts> {
    let mut facts: HashMap<ArtefactType, ArtefactFacts> = ArtefactType::ALL
        .iter()
        .map(|&a| (a, ArtefactFacts { items: HashMap::new(), error_count: 0 }))
        .collect();

    for artefact in ArtefactType::ALL {
        let entry = facts.get_mut(&artefact).unwrap();
        for &item in config.enabled_items(artefact) {
            entry.items.insert(
                item,
                ItemFacts {
                    element_count: 0,
                    below_defined: 0,
                    below_agreed: 0,
                    error_count: 0,
                    block_present: false,
                },
            );
        }
        if let Some(instance) = graph.artefact(artefact) {
            for block in &instance.item_blocks {
                if let Some(item) = entry.items.get_mut(&block.item) {
                    item.block_present = true;
                }
            }
        }
    }

    for element in graph.elements() {
        if let Some(item) =
            facts.get_mut(&element.artefact).and_then(|f| f.items.get_mut(&element.home_item))
        {
            item.element_count += 1;
            if element.status < ElementStatus::Defined {
                item.below_defined += 1;
            }
            if element.status < ElementStatus::Agreed {
                item.below_agreed += 1;
            }
        }
    }

    // Attribute error diagnostics to artefacts and items by span containment.
    for diagnostic in diagnostics {
        if diagnostic.severity != Severity::Error {
            continue;
        }
        for artefact in ArtefactType::ALL {
            let Some(instance) = graph.artefact(artefact) else { continue };
            if *instance.file != *diagnostic.span.file {
                continue;
            }
            let entry = facts.get_mut(&artefact).unwrap();
            entry.error_count += 1;
            for block in &instance.item_blocks {
                if block.span.contains(&diagnostic.span.file, diagnostic.span.start) {
                    if let Some(item) = entry.items.get_mut(&block.item) {
                        item.error_count += 1;
                    }
                    break;
                }
            }
        }
    }

    facts
}

/// Computes the six milestone statuses, in catalog order.
pub fn milestone_status(
    graph: &ModelGraph,
    catalog: &Catalog,
    config: &ProjectConfig,
    diagnostics: &[Diagnostic],
) -> Vec<MilestoneStatus> {
    let facts = collect_facts(graph, config, diagnostics);
    let mut result = Vec::with_capacity(catalog.milestones.len());
    let mut first_reached: HashMap<ArtefactType, bool> = HashMap::new();

    for milestone in &catalog.milestones {
        let artefact = milestone.artefact_type;
        let artefact_facts = &facts[&artefact];
        let mut blocking: Vec<(ContentItemId, String)> = Vec::new();

        match milestone.kind {
            MilestoneKind::FirstItemDefined => {
                let item = milestone.trigger_item.expect("first milestone has a trigger item");
                match artefact_facts.items.get(&item) {
                    None => blocking.push((item, "disabled by tailoring".to_string())),
                    Some(item_facts) => {
                        if !item_facts.block_present && item_facts.element_count == 0 {
                            blocking.push((item, "missing".to_string()));
                        } else if item_facts.element_count == 0 {
                            blocking.push((item, "empty".to_string()));
                        } else {
                            if item_facts.below_defined > 0 {
                                blocking.push((
                                    item,
                                    format!(
                                        "{} element(s) still in draft",
                                        item_facts.below_defined
                                    ),
                                ));
                            }
                            if item_facts.error_count > 0 {
                                blocking.push((
                                    item,
                                    format!("{} error(s)", item_facts.error_count),
                                ));
                            }
                        }
                    }
                }
                let reached = blocking.is_empty();
                first_reached.insert(artefact, reached);
                result.push(MilestoneStatus {
                    milestone: milestone.id,
                    artefact,
                    kind: milestone.kind,
                    reached,
                    blocking,
                });
            }
            MilestoneKind::Finalised => {
                let mut item_errors = 0usize;
                for &item in config.enabled_items(artefact) {
                    let item_facts = &artefact_facts.items[&item];
                    item_errors += item_facts.error_count;
                    if !item_facts.block_present && item_facts.element_count == 0 {
                        blocking.push((item, "missing".to_string()));
                    } else if item_facts.element_count == 0 {
                        blocking.push((item, "empty".to_string()));
                    } else if item_facts.below_agreed > 0 {
                        blocking.push((
                            item,
                            format!("{} element(s) not yet agreed", item_facts.below_agreed),
                        ));
                    } else if item_facts.error_count > 0 {
                        blocking.push((item, format!("{} error(s)", item_facts.error_count)));
                    }
                }
                if artefact_facts.error_count > item_errors {
                    if let Some(&first_item) = config.enabled_items(artefact).first() {
                        blocking.push((
                            first_item,
                            format!(
                                "{} artefact-level error(s)",
                                artefact_facts.error_count - item_errors
                            ),
                        ));
                    }
                }
                // Finalisation presupposes the first milestone.
                let first = first_reached.get(&artefact).copied().unwrap_or(false);
                if !first {
                    if let Some(item) = catalog
                        .milestones
                        .iter()
                        .find(|m| m.artefact_type == artefact && m.kind == MilestoneKind::FirstItemDefined)
                        .and_then(|m| m.trigger_item)
                    {
                        if !blocking.iter().any(|(i, _)| *i == item) {
                            blocking.push((item, "first milestone not reached".to_string()));
                        }
                    }
                }
                let reached = blocking.is_empty() && first;
                result.push(MilestoneStatus {
                    milestone: milestone.id,
                    artefact,
                    kind: milestone.kind,
                    reached,
                    blocking,
                });
            }
        }
    }
    result
}

/// Ratio of enabled items that are present, non-empty, and error-free.
/// An artefact with no enabled items is vacuously complete.
pub fn completeness(
    graph: &ModelGraph,
    config: &ProjectConfig,
    diagnostics: &[Diagnostic],
    artefact: ArtefactType,
) -> CompletenessReport {
    let facts = collect_facts(graph, config, diagnostics);
    let artefact_facts = &facts[&artefact];
    let items: Vec<ItemCompleteness> = config
        .enabled_items(artefact)
        .iter()
        .map(|&item| {
            let item_facts = &artefact_facts.items[&item];
            ItemCompleteness {
                item,
                present: item_facts.block_present || item_facts.element_count > 0,
                non_empty: item_facts.element_count > 0,
                error_free: item_facts.error_count == 0,
            }
        })
        .collect();
    let ratio = if items.is_empty() {
        1.0
    } else {
        items.iter().filter(|i| i.complete()).count() as f64 / items.len() as f64
    };
    CompletenessReport { artefact, ratio, items }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::load_catalog;
    use crate::linker::link;

    #[test]
    fn empty_project_reaches_no_milestone() {
        let catalog = load_catalog();
        let (graph, _) = link(Vec::new());
        let config = ProjectConfig::bare(catalog, crate::catalog::DomainProfile::Both);
        let statuses = milestone_status(&graph, catalog, &config, &[]);
        assert_eq!(statuses.len(), 6);
        assert!(statuses.iter().all(|s| !s.reached));
        // Each artefact type is covered exactly twice.
        for artefact in ArtefactType::ALL {
            assert_eq!(statuses.iter().filter(|s| s.artefact == artefact).count(), 2);
        }
    }

    #[test]
    fn empty_artefact_completeness_is_zero() {
        let catalog = load_catalog();
        let (graph, _) = link(Vec::new());
        let config = ProjectConfig::bare(catalog, crate::catalog::DomainProfile::Both);
        let report = completeness(&graph, &config, &[], ArtefactType::Requirements);
        assert_eq!(report.ratio, 0.0);
        assert_eq!(report.items.len(), 10);
    }
}
