//! Human-readable and JSON diagnostic reports.
//!
//! The human line format is `file:line:col: severity[CODE] message`. The JSON
//! report is byte-deterministic: struct field order fixes the key order, and
//! the diagnostics array keeps the validator's sort order.

use serde::Serialize;

use crate::diagnostics::{Diagnostic, Severity};

/// Output format for diagnostic reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Human,
    Json,
}

impl ReportFormat {
    pub fn from_str(s: &str) -> Option<Self> {
        match s {
            "human" => Some(ReportFormat::Human),
            "json" => Some(ReportFormat::Json),
            _ => None,
        }
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    version: u32,
    summary: JsonSummary,
    disabled_rules: &'a [String],
    diagnostics: Vec<JsonDiagnostic<'a>>,
}

#[derive(Serialize)]
struct JsonSummary {
    error: usize,
    warning: usize,
    info: usize,
}

#[derive(Serialize)]
struct JsonDiagnostic<'a> {
    code: &'a str,
    severity: Severity,
    message: &'a str,
    file: &'a str,
    line: u32,
    col: u32,
    related: Vec<JsonRelated<'a>>,
}

#[derive(Serialize)]
struct JsonRelated<'a> {
    file: &'a str,
    line: u32,
    col: u32,
    note: &'a str,
}

fn count(diags: &[Diagnostic], severity: Severity) -> usize {
    diags.iter().filter(|d| d.severity == severity).count()
}

/// Renders diagnostics in the requested format. `disabled_rules` is recorded
/// in the report header for auditability.
pub fn emit_diagnostics(
    diags: &[Diagnostic],
    format: ReportFormat,
    disabled_rules: &[String],
) -> String {
    match format {
        ReportFormat::Human => emit_human(diags, disabled_rules, false),
        ReportFormat::Json => emit_json(diags, disabled_rules),
    }
}

/// Human format, optionally with ANSI colors on the severity word.
pub fn emit_human(diags: &[Diagnostic], disabled_rules: &[String], color: bool) -> String {
    let mut out = String::new();
    if !disabled_rules.is_empty() {
        out.push_str(&format!("# disabled rules: {}\n", disabled_rules.join(", ")));
    }
    for diag in diags {
        let severity = if color {
            let code = match diag.severity {
                Severity::Error => "31",
                Severity::Warning => "33",
                Severity::Info => "36",
            };
            format!("\x1b[{code}m{}\x1b[0m", diag.severity)
        } else {
            diag.severity.to_string()
        };
        out.push_str(&format!(
            "{}:{}:{}: {severity}[{}] {}\n",
            diag.span.file, diag.span.start.line, diag.span.start.col, diag.code, diag.message
        ));
        for related in &diag.related {
            out.push_str(&format!(
                "    related: {}:{}:{}: {}\n",
                related.span.file, related.span.start.line, related.span.start.col, related.note
            ));
        }
    }
    out.push_str(&format!(
        "{} error(s), {} warning(s), {} info(s)\n",
        count(diags, Severity::Error),
        count(diags, Severity::Warning),
        count(diags, Severity::Info)
    ));
    out
}

/// Byte-deterministic JSON report.
pub fn emit_json(diags: &[Diagnostic], disabled_rules: &[String]) -> String {
    let report = JsonReport {
        version: 1,
        summary: JsonSummary {
            error: count(diags, Severity::Error),
            warning: count(diags, Severity::Warning),
            info: count(diags, Severity::Info),
        },
        disabled_rules,
        diagnostics: diags
            .iter()
            .map(|d| JsonDiagnostic {
                code: d.code,
                severity: d.severity,
                message: &d.message,
                file: &d.span.file,
                line: d.span.start.line,
                col: d.span.start.col,
                related: d
                    .related
                    .iter()
                    .map(|r| JsonRelated {
                        file: &r.span.file,
                        line: r.span.start.line,
                        col: r.span.start.col,
                        note: &r.note,
                    })
                    .collect(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string(&report).expect("report serializes");
    out.push('\n');
    out
}
