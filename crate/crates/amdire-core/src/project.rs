//! Parsing of the project manifest (`amdire-project.txt`) and tailoring
//! files (`tailoring.txt`).
//!
//! Both formats are line-oriented `key: value` records. Blank lines and `#`
//! comments are skipped; unknown keys are reported as `AMD090` warnings and
//! ignored.

use std::sync::Arc;

use crate::ardl::SourceFile;
use crate::catalog::{ContentItemId, DomainProfile, ItemNameError, RoleId};
use crate::diagnostics::{codes, Diagnostic, Position, Span};

pub const MANIFEST_FILE_NAME: &str = "amdire-project.txt";

/// Severity override value for one rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeveritySetting {
    Error,
    Warning,
    Info,
    Off,
}

impl SeveritySetting {
    pub fn from_str(s: &str) -> Option<Self> {
        match s {
            "error" => Some(SeveritySetting::Error),
            "warning" => Some(SeveritySetting::Warning),
            "info" => Some(SeveritySetting::Info),
            "off" => Some(SeveritySetting::Off),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct FileAlias {
    pub alias: String,
    pub path: String,
    pub span: Span,
}

#[derive(Debug, Clone)]
pub struct RuleOverride {
    pub code: String,
    pub setting: SeveritySetting,
    pub span: Span,
}

/// The parsed project manifest.
#[derive(Debug, Clone)]
pub struct ProjectManifest {
    pub file: Arc<str>,
    pub name: Option<String>,
    pub domain_profile: Option<(DomainProfile, Span)>,
    pub aliases: Vec<FileAlias>,
    pub tailoring_paths: Vec<(String, Span)>,
    pub rule_overrides: Vec<RuleOverride>,
}

/// Organisational profiles state the company standard; project profiles the
/// per-project instantiation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TailoringLevel {
    Organisational,
    Project,
}

impl TailoringLevel {
    pub fn as_str(self) -> &'static str {
        match self {
            TailoringLevel::Organisational => "org",
            TailoringLevel::Project => "project",
        }
    }
}

#[derive(Debug, Clone)]
pub struct DisabledItem {
    pub item: ContentItemId,
    pub justification: Option<String>,
    pub span: Span,
}

#[derive(Debug, Clone)]
pub struct FactorSetting {
    pub name: String,
    pub value: bool,
    pub span: Span,
}

/// One tailoring file: enablement decisions over content items plus role
/// assignments and situation factors.
#[derive(Debug, Clone)]
pub struct TailoringProfile {
    pub file: Arc<str>,
    pub level: TailoringLevel,
    pub domain_profile: Option<(DomainProfile, Span)>,
    pub disabled_items: Vec<DisabledItem>,
    pub role_assignments: Vec<(RoleId, String)>,
    pub factors: Vec<FactorSetting>,
}

struct Line<'a> {
    number: u32,
    key: &'a str,
    value: &'a str,
    key_span: Span,
}

fn lines<'a>(source: &'a SourceFile) -> impl Iterator<Item = Line<'a>> {
    let file = source.path.clone();
    source.text.lines().enumerate().filter_map(move |(index, raw)| {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let number = index as u32 + 1;
        let (key, value) = match trimmed.split_once(':') {
            Some((k, v)) => (k.trim(), v.trim()),
            None => (trimmed, ""),
        };
        let span = Span::new(
            file.clone(),
            Position::new(number, 1),
            Position::new(number, raw.chars().count().max(1) as u32),
        );
        Some(Line { number, key, value, key_span: span })
    })
}

fn unquote(value: &str) -> Option<String> {
    let value = value.trim();
    if value.len() >= 2 && value.starts_with('"') && value.ends_with('"') {
        Some(value[1..value.len() - 1].to_string())
    } else if value.is_empty() {
        None
    } else {
        Some(value.to_string())
    }
}

/// Parses `amdire-project.txt`.
pub fn parse_manifest(source: &SourceFile) -> (ProjectManifest, Vec<Diagnostic>) {
    let mut manifest = ProjectManifest {
        file: source.path.clone(),
        name: None,
        domain_profile: None,
        aliases: Vec::new(),
        tailoring_paths: Vec::new(),
        rule_overrides: Vec::new(),
    };
    let mut diagnostics = Vec::new();

    for line in lines(source) {
        let span = line.key_span.clone();
        match line.key {
            "name" => manifest.name = unquote(line.value),
            "domain-profile" => match DomainProfile::from_str(line.value) {
                Some(profile) => manifest.domain_profile = Some((profile, span)),
                None => diagnostics.push(Diagnostic::warning(
                    codes::AMD090,
                    format!(
                        "unknown domain profile `{}` on line {}; expected bis, embedded, or both",
                        line.value, line.number
                    ),
                    span,
                )),
            },
            "tailoring" => {
                manifest.tailoring_paths.push((line.value.to_string(), span));
            }
            key if key.starts_with("alias ") => {
                let alias = key["alias ".len()..].trim();
                if alias.is_empty() || line.value.is_empty() {
                    diagnostics.push(Diagnostic::warning(
                        codes::AMD090,
                        format!("malformed alias entry on line {}", line.number),
                        span,
                    ));
                } else {
                    manifest.aliases.push(FileAlias {
                        alias: alias.to_string(),
                        path: line.value.to_string(),
                        span,
                    });
                }
            }
            key if key.starts_with("rule ") => {
                let code = key["rule ".len()..].trim();
                match SeveritySetting::from_str(line.value) {
                    Some(setting) if !code.is_empty() => {
                        manifest.rule_overrides.push(RuleOverride {
                            code: code.to_string(),
                            setting,
                            span,
                        });
                    }
                    _ => diagnostics.push(Diagnostic::warning(
                        codes::AMD090,
                        format!(
                            "malformed rule override on line {}; expected `rule CODE: error|warning|info|off`",
                            line.number
                        ),
                        span,
                    )),
                }
            }
            other => diagnostics.push(Diagnostic::warning(
                codes::AMD090,
                format!("unknown manifest key `{other}` on line {}", line.number),
                span,
            )),
        }
    }

    (manifest, diagnostics)
}

/// Parses a tailoring file.
pub fn parse_tailoring(source: &SourceFile) -> (TailoringProfile, Vec<Diagnostic>) {
    let mut profile = TailoringProfile {
        file: source.path.clone(),
        level: TailoringLevel::Project,
        domain_profile: None,
        disabled_items: Vec::new(),
        role_assignments: Vec::new(),
        factors: Vec::new(),
    };
    let mut diagnostics = Vec::new();

    for line in lines(source) {
        let span = line.key_span.clone();
        match line.key {
            "level" => match line.value {
                "org" | "organisational" => profile.level = TailoringLevel::Organisational,
                "project" => profile.level = TailoringLevel::Project,
                other => diagnostics.push(Diagnostic::warning(
                    codes::AMD090,
                    format!("unknown tailoring level `{other}` on line {}", line.number),
                    span,
                )),
            },
            "domain-profile" => match DomainProfile::from_str(line.value) {
                Some(p) => profile.domain_profile = Some((p, span)),
                None => diagnostics.push(Diagnostic::warning(
                    codes::AMD090,
                    format!("unknown domain profile `{}` on line {}", line.value, line.number),
                    span,
                )),
            },
            key if key.starts_with("disable ") => {
                let item_name = key["disable ".len()..].trim();
                match ContentItemId::from_name(item_name) {
                    Ok(item) => profile.disabled_items.push(DisabledItem {
                        item,
                        justification: unquote(line.value),
                        span,
                    }),
                    Err(ItemNameError::Ambiguous(candidates)) => {
                        let names: Vec<&str> =
                            candidates.iter().map(|i| i.qualified_ident()).collect();
                        diagnostics.push(Diagnostic::warning(
                            codes::AMD090,
                            format!(
                                "content item `{item_name}` is ambiguous; use one of: {}",
                                names.join(", ")
                            ),
                            span,
                        ));
                    }
                    Err(ItemNameError::Unknown) => diagnostics.push(Diagnostic::warning(
                        codes::AMD090,
                        format!("unknown content item `{item_name}` on line {}", line.number),
                        span,
                    )),
                }
            }
            key if key.starts_with("assign ") => {
                let role_name = key["assign ".len()..].trim();
                match (RoleId::from_ident(role_name), unquote(line.value)) {
                    (Some(role), Some(person)) => profile.role_assignments.push((role, person)),
                    _ => diagnostics.push(Diagnostic::warning(
                        codes::AMD090,
                        format!("malformed role assignment on line {}", line.number),
                        span,
                    )),
                }
            }
            key if key.starts_with("factor ") => {
                let name = key["factor ".len()..].trim();
                let value = match line.value {
                    "yes" | "true" => Some(true),
                    "no" | "false" => Some(false),
                    _ => None,
                };
                match value {
                    Some(value) => profile.factors.push(FactorSetting {
                        name: name.to_string(),
                        value,
                        span,
                    }),
                    None => diagnostics.push(Diagnostic::warning(
                        codes::AMD090,
                        format!("factor `{name}` needs a yes/no value on line {}", line.number),
                        span,
                    )),
                }
            }
            other => diagnostics.push(Diagnostic::warning(
                codes::AMD090,
                format!("unknown tailoring key `{other}` on line {}", line.number),
                span,
            )),
        }
    }

    (profile, diagnostics)
}
