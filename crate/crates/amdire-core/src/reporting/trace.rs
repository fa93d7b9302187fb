//! Traceability matrices over realisation chains.
//!
//! Supported kind pairs are exactly the realisation rules of the catalog,
//! plus the two-hop data chain Data Element -> Data Object -> Business
//! Object. Anything else is a usage error naming the valid targets.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde::Serialize;

use crate::catalog::{Catalog, ConceptKind, Relation};
use crate::linker::ModelGraph;

/// One source element with its realisation targets.
#[derive(Debug, Clone, Serialize)]
pub struct TraceRow {
    pub source: String,
    pub targets: Vec<String>,
    pub covered: bool,
}

/// Tabulation of `from_kind` elements against their realisation targets.
#[derive(Debug, Clone)]
pub struct TraceMatrix {
    pub from_kind: ConceptKind,
    pub to_kind: ConceptKind,
    pub rows: Vec<TraceRow>,
}

impl TraceMatrix {
    pub fn covered_count(&self) -> usize {
        self.rows.iter().filter(|r| r.covered).count()
    }

    /// Coverage ratio; an empty matrix is vacuously fully covered.
    pub fn coverage(&self) -> f64 {
        if self.rows.is_empty() {
            1.0
        } else {
            self.covered_count() as f64 / self.rows.len() as f64
        }
    }

    /// Plain-text table with a coverage summary line.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} -> {}",
            self.from_kind.display_name(),
            self.to_kind.display_name()
        );
        let width = self
            .rows
            .iter()
            .map(|r| r.source.chars().count())
            .chain(["source".len()])
            .max()
            .unwrap_or(6);
        let _ = writeln!(out, "{:<width$} | covered | targets", "source");
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{:<width$} | {:<7} | {}",
                row.source,
                if row.covered { "yes" } else { "no" },
                row.targets.join(", ")
            );
        }
        let _ = writeln!(
            out,
            "coverage: {}/{} ({:.1}%)",
            self.covered_count(),
            self.rows.len(),
            self.coverage() * 100.0
        );
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct JsonMatrix<'a> {
            from: &'a str,
            to: &'a str,
            coverage: JsonCoverage,
            rows: &'a [TraceRow],
        }
        #[derive(Serialize)]
        struct JsonCoverage {
            covered: usize,
            total: usize,
            ratio: f64,
        }
        let value = JsonMatrix {
            from: self.from_kind.ident(),
            to: self.to_kind.ident(),
            coverage: JsonCoverage {
                covered: self.covered_count(),
                total: self.rows.len(),
                ratio: self.coverage(),
            },
            rows: &self.rows,
        };
        let mut out = serde_json::to_string(&value).expect("matrix serializes");
        out.push('\n');
        out
    }
}

/// Why a matrix could not be computed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TraceError {
    #[error(
        "no realisation path from {from} to {to}; valid targets for {from}: {}",
        if valid_targets.is_empty() { "none".to_string() } else { valid_targets.join(", ") }
    )]
    InvalidPair { from: String, to: String, valid_targets: Vec<String> },
}

/// Valid target kinds for `from_kind`, including the documented two-hop
/// data chain.
fn valid_targets(catalog: &Catalog, from_kind: ConceptKind) -> Vec<ConceptKind> {
    let mut targets: BTreeSet<ConceptKind> = catalog
        .rule_for(from_kind, Relation::Realises)
        .map(|rule| rule.target_kinds.iter().copied().collect())
        .unwrap_or_default();
    if from_kind == ConceptKind::DataElement {
        targets.insert(ConceptKind::BusinessObject);
    }
    targets.into_iter().collect()
}

/// Computes the trace matrix for a catalog-sanctioned kind pair.
pub fn trace_matrix(
    graph: &ModelGraph,
    catalog: &Catalog,
    from_kind: ConceptKind,
    to_kind: ConceptKind,
) -> Result<TraceMatrix, TraceError> {
    let valid = valid_targets(catalog, from_kind);
    if !valid.contains(&to_kind) {
        return Err(TraceError::InvalidPair {
            from: from_kind.display_name().to_string(),
            to: to_kind.display_name().to_string(),
            valid_targets: valid.iter().map(|k| k.display_name().to_string()).collect(),
        });
    }

    let two_hop = from_kind == ConceptKind::DataElement && to_kind == ConceptKind::BusinessObject;
    let mut rows: Vec<TraceRow> = graph
        .elements()
        .filter(|e| e.kind == from_kind)
        .map(|element| {
            let mut targets: Vec<String> = Vec::new();
            for edge in graph.outgoing(element.id) {
                if edge.relation != Relation::Realises {
                    continue;
                }
                let first = graph.element(edge.target);
                if two_hop {
                    // Walk the intermediate data object onward.
                    if first.kind == ConceptKind::DataObject {
                        for hop in graph.outgoing(first.id) {
                            if hop.relation == Relation::Realises {
                                let second = graph.element(hop.target);
                                if second.kind == to_kind {
                                    targets.push(second.fqn.clone());
                                }
                            }
                        }
                    }
                } else if first.kind == to_kind {
                    targets.push(first.fqn.clone());
                }
            }
            targets.sort();
            targets.dedup();
            TraceRow { source: element.fqn.clone(), covered: !targets.is_empty(), targets }
        })
        .collect();
    rows.sort_by(|a, b| a.source.cmp(&b.source));
    Ok(TraceMatrix { from_kind, to_kind, rows })
}
