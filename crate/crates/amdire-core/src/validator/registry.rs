//! The rule registry: metadata for every diagnostic code the toolchain can
//! emit, including the anchor into the AMDiRE method documentation that
//! motivates each model rule.

use crate::catalog::{ConceptKind, ContentItemId};
use crate::diagnostics::{codes, Severity};

/// Where a rule looks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleScope {
    /// Whole-model or infrastructure rule.
    Model,
    Kind(ConceptKind),
    Item(ContentItemId),
}

impl std::fmt::Display for RuleScope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RuleScope::Model => f.write_str("model"),
            RuleScope::Kind(kind) => f.write_str(kind.display_name()),
            RuleScope::Item(item) => f.write_str(item.display_name()),
        }
    }
}

/// Static description of one rule.
#[derive(Debug, Clone, Copy)]
pub struct Rule {
    pub code: &'static str,
    pub title: &'static str,
    pub default_severity: Severity,
    pub scope: RuleScope,
    /// Anchor into the AMDiRE method documentation, or "plumbing" for
    /// infrastructure rules.
    pub paper_anchor: &'static str,
    /// Whether the manifest may override the severity.
    pub overridable: bool,
    /// Rules that must be opted into (`rule CODE: info`).
    pub default_enabled: bool,
}

const fn rule(
    code: &'static str,
    title: &'static str,
    default_severity: Severity,
    scope: RuleScope,
    paper_anchor: &'static str,
    overridable: bool,
) -> Rule {
    Rule { code, title, default_severity, scope, paper_anchor, overridable, default_enabled: true }
}

use ConceptKind as K;
use ContentItemId as I;
use RuleScope::{Item, Kind, Model};
use Severity::{Error, Info, Warning};

/// All rules, ordered by code.
pub static RULES: &[Rule] = &[
    rule(codes::ARD001, "unterminated string literal", Error, Model, "plumbing", false),
    rule(codes::ARD002, "character outside the ARDL alphabet", Error, Model, "plumbing", false),
    rule(codes::ARD010, "syntax error", Error, Model, "plumbing", false),
    rule(codes::AMD001, "unresolved reference", Error, Model, "plumbing", false),
    rule(codes::AMD002, "duplicate fully qualified name", Error, Model, "plumbing", false),
    rule(codes::AMD003, "ambiguous reference", Error, Model, "plumbing", false),
    rule(codes::AMD004, "element kind outside its home content item", Error, Model, "plumbing", false),
    rule(codes::AMD005, "content item outside its artefact type", Error, Model, "plumbing", false),
    rule(codes::AMD006, "artefact type declared twice", Error, Model, "plumbing", false),
    rule(
        codes::AMD020,
        "missing or empty mandatory content item",
        Error,
        Model,
        "AMDiRE Appendix A, Tables 6-8 (content item lists)",
        true,
    ),
    rule(
        codes::AMD030,
        "actor without realisation of a user group or external system",
        Error,
        Kind(K::Actor),
        "AMDiRE sec. 4.2.1: actors realise either user groups or external systems",
        true,
    ),
    rule(
        codes::AMD031,
        "data object without realisation of a business object",
        Warning,
        Kind(K::DataObject),
        "AMDiRE sec. 4.2.1: data objects realise selected business objects",
        true,
    ),
    rule(
        codes::AMD032,
        "action without realisation of a process step",
        Warning,
        Kind(K::Action),
        "AMDiRE sec. 4.2.1: actions realise selected process steps",
        true,
    ),
    rule(
        codes::AMD033,
        "system function without realisation of a system action or user-visible function",
        Error,
        Kind(K::SystemFunction),
        "AMDiRE sec. 4.2.1: system functions realise user-visible functions",
        true,
    ),
    rule(
        codes::AMD034,
        "data element without realisation of a data object",
        Error,
        Kind(K::DataElement),
        "AMDiRE sec. 4.2.1: data elements realise the data objects specified",
        true,
    ),
    rule(
        codes::AMD035,
        "state realising something other than a mode",
        Error,
        Kind(K::State),
        "AMDiRE sec. 4.2.1: states realise the modes",
        true,
    ),
    rule(
        codes::AMD036,
        "state without realisation of a mode under an embedded profile",
        Warning,
        Kind(K::State),
        "AMDiRE sec. 4.2.1: states realise the modes (embedded reactive systems)",
        true,
    ),
    rule(
        codes::AMD037,
        "external interface without a realising system interface",
        Error,
        Kind(K::Interface),
        "AMDiRE sec. 4.2.1: realisation is limited to the external interfaces and functions",
        true,
    ),
    rule(
        codes::AMD040,
        "quality requirement without an assessment",
        Error,
        Kind(K::QualityRequirement),
        "AMDiRE Table 7: quality requirements are assessed by a normative reference or a metric",
        true,
    ),
    rule(
        codes::AMD041,
        "quality requirement not connected to a system goal",
        Warning,
        Kind(K::QualityRequirement),
        "AMDiRE sec. 4.2.1: goals are refined via generic scenarios to assessable quality requirements",
        true,
    ),
    rule(
        codes::AMD050,
        "usage goal unrelated to any business goal",
        Error,
        Kind(K::UsageGoal),
        "AMDiRE Table 6: each usage goal is related to a business goal",
        true,
    ),
    rule(
        codes::AMD051,
        "system goal unrelated to any usage goal",
        Error,
        Kind(K::SystemGoal),
        "AMDiRE Table 6: each system goal is related to a usage goal",
        true,
    ),
    rule(
        codes::AMD052,
        "cycle in the goal hierarchy",
        Error,
        Kind(K::Goal),
        "AMDiRE Table 6: goals build a hierarchy",
        true,
    ),
    rule(
        codes::AMD053,
        "system goal without a demanded quality attribute",
        Warning,
        Kind(K::SystemGoal),
        "AMDiRE Table 6: system goals demand one or more quality attributes",
        true,
    ),
    rule(
        codes::AMD054,
        "goal without an issuing stakeholder",
        Warning,
        Kind(K::Goal),
        "AMDiRE Table 6: each goal is issued by a stakeholder",
        true,
    ),
    rule(
        codes::AMD060,
        "use case without functional scenarios",
        Error,
        Kind(K::UseCase),
        "AMDiRE Table 7: for each use case there is at least one functional scenario",
        true,
    ),
    rule(
        codes::AMD061,
        "functional scenario never triggered by an event",
        Warning,
        Kind(K::FunctionalScenario),
        "AMDiRE Table 7: functional scenarios are triggered by events",
        true,
    ),
    rule(
        codes::AMD070,
        "requirements risk without a causing risk factor",
        Error,
        Kind(K::RequirementsRisk),
        "AMDiRE Table 7: each risk is caused by a risk factor",
        true,
    ),
    rule(
        codes::AMD071,
        "cycle in the component decomposition",
        Error,
        Kind(K::Component),
        "AMDiRE Table 8: components can be decomposed into further sub-components",
        true,
    ),
    rule(
        codes::AMD072,
        "state transition with a missing source or target state",
        Error,
        Kind(K::StateTransition),
        "AMDiRE Table 8: behaviour is specified by events, states and state transitions",
        true,
    ),
    rule(
        codes::AMD080,
        "relation not allowed between the two element kinds",
        Error,
        Model,
        "AMDiRE sec. 4.2.2: the content model defines the elements and their relations",
        true,
    ),
    rule(
        codes::AMD081,
        "service model content under an embedded profile",
        Error,
        Item(I::ServiceModel),
        "AMDiRE Table 7: the service model is relevant for business information systems",
        true,
    ),
    rule(
        codes::AMD084,
        "realisation multiplicity exceeded",
        Error,
        Model,
        "AMDiRE sec. 4.2.1: realisation dependencies",
        true,
    ),
    rule(
        codes::AMD085,
        "core content item disabled without justification",
        Error,
        Model,
        "AMDiRE sec. 4.2.3: customisation decides for specific content items",
        false,
    ),
    rule(
        codes::AMD086,
        "conflicting domain profiles between tailoring levels",
        Error,
        Model,
        "AMDiRE sec. 4.2.3: customisation over two levels of abstraction",
        false,
    ),
    rule(
        codes::AMD087,
        "unknown situation factor",
        Error,
        Model,
        "AMDiRE sec. 4.2.3: situation-aware creation of content items",
        false,
    ),
    rule(
        codes::AMD088,
        "situation factor conflicts with a tailoring decision",
        Error,
        Model,
        "AMDiRE sec. 4.2.3: situation-aware creation of content items",
        false,
    ),
    rule(codes::AMD090, "unknown key in a manifest or tailoring file", Warning, Model, "plumbing", false),
    Rule {
        code: codes::AMD091,
        title: "title uses an abbreviation not defined in the glossary",
        default_severity: Info,
        scope: Item(I::Glossary),
        paper_anchor: "AMDiRE Table 6: the glossary contains all important terms",
        overridable: true,
        default_enabled: false,
    },
];

/// All rules in stable order by code.
pub fn list_rules() -> Vec<Rule> {
    let mut rules = RULES.to_vec();
    rules.sort_by_key(|r| r.code);
    rules
}

pub fn rule_by_code(code: &str) -> Option<&'static Rule> {
    RULES.iter().find(|r| r.code == code)
}

/// Whether the manifest may override this rule's severity.
pub fn is_overridable(code: &str) -> bool {
    rule_by_code(code).is_some_and(|r| r.overridable)
}
