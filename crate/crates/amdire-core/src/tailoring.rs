//! Organisational and project-level tailoring: deciding the effective
//! content-item set and applying situation-driven adjustments.
//!
//! Tailoring happens in two steps. `effective_items` starts from the
//! profile-admitted catalog items and applies the explicit `disable`
//! decisions; `static_tailor` then applies the shipped situation table.
//! Every situation-driven decision is recorded with its triggering factor.

use std::collections::{BTreeMap, BTreeSet};

use crate::catalog::{ArtefactType, Catalog, ContentItemId, DomainProfile, RoleId};
use crate::diagnostics::{codes, sort_diagnostics, Diagnostic, Position, Span};
use crate::project::{
    DisabledItem, FactorSetting, ProjectManifest, SeveritySetting, TailoringLevel,
    TailoringProfile,
};

/// The registered situation factors, with the items each one affects.
pub const FACTOR_SAFETY_CRITICAL: &str = "safety_critical";
pub const FACTOR_CUSTOM_DEVELOPMENT: &str = "custom_development";
pub const FACTOR_PREDECESSOR_SYSTEM: &str = "predecessor_system_exists";

pub const FACTOR_REGISTRY: [&str; 3] = [
    FACTOR_SAFETY_CRITICAL,
    FACTOR_CUSTOM_DEVELOPMENT,
    FACTOR_PREDECESSOR_SYSTEM,
];

/// What a situation factor did to a content item.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecisionAction {
    ForcedMandatory,
    ImportCandidate,
}

/// One recorded situation-driven decision, traceable to its factor.
#[derive(Debug, Clone)]
pub struct TailoringDecision {
    pub factor: String,
    pub value: bool,
    pub item: ContentItemId,
    pub action: DecisionAction,
    pub note: String,
}

/// Effective per-artefact item lists before situation factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EffectiveItems {
    pub context: Vec<ContentItemId>,
    pub requirements: Vec<ContentItemId>,
    pub system: Vec<ContentItemId>,
}

impl EffectiveItems {
    pub fn for_artefact(&self, artefact: ArtefactType) -> &[ContentItemId] {
        match artefact {
            ArtefactType::Context => &self.context,
            ArtefactType::Requirements => &self.requirements,
            ArtefactType::System => &self.system,
        }
    }
}

/// The resolved project configuration every downstream stage consumes.
#[derive(Debug, Clone)]
pub struct ProjectConfig {
    pub name: String,
    pub manifest_file: std::sync::Arc<str>,
    pub domain_profile: DomainProfile,
    pub items: EffectiveItems,
    /// Items disabled by tailoring, with their justification.
    pub disabled: BTreeMap<ContentItemId, String>,
    /// Items a situation factor made non-disableable.
    pub forced_mandatory: BTreeSet<ContentItemId>,
    /// Items marked as candidates for import from a predecessor system.
    pub import_candidates: BTreeSet<ContentItemId>,
    pub decisions: Vec<TailoringDecision>,
    pub role_assignments: BTreeMap<RoleId, String>,
    pub severity_overrides: BTreeMap<String, SeveritySetting>,
}

impl ProjectConfig {
    pub fn enabled_items(&self, artefact: ArtefactType) -> &[ContentItemId] {
        self.items.for_artefact(artefact)
    }

    pub fn is_enabled(&self, item: ContentItemId) -> bool {
        self.items.for_artefact(item.artefact()).contains(&item)
    }

    /// Rules explicitly switched off, for the report header.
    pub fn disabled_rules(&self) -> Vec<String> {
        self.severity_overrides
            .iter()
            .filter(|(_, s)| **s == SeveritySetting::Off)
            .map(|(code, _)| code.clone())
            .collect()
    }

    /// A minimal configuration for catalog-only operations.
    pub fn bare(catalog: &Catalog, profile: DomainProfile) -> ProjectConfig {
        ProjectConfig {
            name: String::new(),
            manifest_file: std::sync::Arc::from(crate::project::MANIFEST_FILE_NAME),
            domain_profile: profile,
            items: admitted_items(catalog, profile, &BTreeSet::new()),
            disabled: BTreeMap::new(),
            forced_mandatory: BTreeSet::new(),
            import_candidates: BTreeSet::new(),
            decisions: Vec::new(),
            role_assignments: BTreeMap::new(),
            severity_overrides: BTreeMap::new(),
        }
    }
}

fn admitted_items(
    catalog: &Catalog,
    profile: DomainProfile,
    disabled: &BTreeSet<ContentItemId>,
) -> EffectiveItems {
    let list = |artefact| {
        catalog
            .content_items_for(artefact, profile)
            .into_iter()
            .filter(|item| !disabled.contains(item))
            .collect()
    };
    EffectiveItems {
        context: list(ArtefactType::Context),
        requirements: list(ArtefactType::Requirements),
        system: list(ArtefactType::System),
    }
}

/// Resolves the effective domain profile. The manifest supplies the project
/// baseline; tailoring files may narrow it. Directly contradictory profiles
/// (bis vs. embedded) raise `AMD086`.
pub fn resolve_domain_profile(
    manifest: &ProjectManifest,
    profiles: &[TailoringProfile],
) -> (DomainProfile, Vec<Diagnostic>) {
    let mut diagnostics = Vec::new();
    let mut explicit: Vec<(DomainProfile, Span, u8)> = Vec::new();
    if let Some((profile, span)) = &manifest.domain_profile {
        explicit.push((*profile, span.clone(), 0));
    }
    for profile in profiles {
        if let Some((value, span)) = &profile.domain_profile {
            let rank = match profile.level {
                TailoringLevel::Organisational => 1,
                TailoringLevel::Project => 2,
            };
            explicit.push((*value, span.clone(), rank));
        }
    }

    let has_bis = explicit.iter().any(|(p, _, _)| *p == DomainProfile::Bis);
    let has_embedded = explicit.iter().any(|(p, _, _)| *p == DomainProfile::Embedded);
    if has_bis && has_embedded {
        let span = explicit
            .iter()
            .rev()
            .find(|(p, _, _)| *p == DomainProfile::Bis || *p == DomainProfile::Embedded)
            .map(|(_, s, _)| s.clone())
            .unwrap();
        diagnostics.push(Diagnostic::error(
            codes::AMD086,
            "conflicting domain profiles: both bis and embedded are requested; using both",
            span,
        ));
        return (DomainProfile::Both, diagnostics);
    }

    // Highest-ranked specific profile wins; `both` only when nothing narrows.
    let resolved = explicit
        .iter()
        .filter(|(p, _, _)| *p != DomainProfile::Both)
        .max_by_key(|(_, _, rank)| *rank)
        .map(|(p, _, _)| *p)
        .unwrap_or(DomainProfile::Both);
    (resolved, diagnostics)
}

/// Applies the explicit disablement decisions of the tailoring profiles.
/// Removing a core (non-stereotyped) item without justification raises
/// `AMD085` and keeps the item enabled.
pub fn effective_items(
    catalog: &Catalog,
    domain_profile: DomainProfile,
    profiles: &[TailoringProfile],
) -> (EffectiveItems, BTreeMap<ContentItemId, String>, Vec<Diagnostic>) {
    let mut diagnostics = Vec::new();
    let mut accepted: BTreeMap<ContentItemId, (String, Span)> = BTreeMap::new();

    let mut ordered: Vec<&TailoringProfile> = profiles.iter().collect();
    ordered.sort_by_key(|p| p.level);

    for profile in ordered {
        for DisabledItem { item, justification, span } in &profile.disabled_items {
            let item_def = catalog.content_item(*item);
            let is_core = item_def.domain_stereotype.is_none();
            match justification {
                Some(text) if !text.trim().is_empty() => {
                    accepted.insert(*item, (text.clone(), span.clone()));
                }
                _ if !is_core => {
                    accepted.insert(*item, (String::new(), span.clone()));
                }
                _ => {
                    diagnostics.push(Diagnostic::error(
                        codes::AMD085,
                        format!(
                            "disabling core content item {} requires a justification; the item stays enabled",
                            item.qualified_ident()
                        ),
                        span.clone(),
                    ));
                }
            }
        }
    }

    let disabled_set: BTreeSet<ContentItemId> = accepted.keys().copied().collect();
    let items = admitted_items(catalog, domain_profile, &disabled_set);
    let disabled = accepted.into_iter().map(|(item, (text, _))| (item, text)).collect();
    (items, disabled, diagnostics)
}

/// Result of applying the situation table.
#[derive(Debug)]
pub struct StaticTailoring {
    pub items: EffectiveItems,
    pub disabled: BTreeMap<ContentItemId, String>,
    pub decisions: Vec<TailoringDecision>,
    pub forced_mandatory: BTreeSet<ContentItemId>,
    pub import_candidates: BTreeSet<ContentItemId>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Applies the shipped situation table on top of the effective item set and
/// records every decision. Unknown factor names raise `AMD087`; a factor
/// forcing an item that tailoring disabled raises `AMD088` and re-enables it.
pub fn static_tailor(
    catalog: &Catalog,
    domain_profile: DomainProfile,
    items: &EffectiveItems,
    disabled: &BTreeMap<ContentItemId, String>,
    situation: &[FactorSetting],
) -> StaticTailoring {
    let mut diagnostics = Vec::new();
    let mut decisions = Vec::new();
    let mut forced: BTreeSet<ContentItemId> = BTreeSet::new();
    let mut import_candidates: BTreeSet<ContentItemId> = BTreeSet::new();
    let mut disabled = disabled.clone();

    // Last setting of a factor wins.
    let mut settings: BTreeMap<&str, &FactorSetting> = BTreeMap::new();
    for factor in situation {
        if FACTOR_REGISTRY.contains(&factor.name.as_str()) {
            settings.insert(factor.name.as_str(), factor);
        } else {
            diagnostics.push(Diagnostic::error(
                codes::AMD087,
                format!(
                    "unknown situation factor `{}`; known factors: {}",
                    factor.name,
                    FACTOR_REGISTRY.join(", ")
                ),
                factor.span.clone(),
            ));
        }
    }

    let force = |item: ContentItemId,
                     factor: &FactorSetting,
                     note: &str,
                     forced: &mut BTreeSet<ContentItemId>,
                     disabled: &mut BTreeMap<ContentItemId, String>,
                     decisions: &mut Vec<TailoringDecision>,
                     diagnostics: &mut Vec<Diagnostic>| {
        forced.insert(item);
        decisions.push(TailoringDecision {
            factor: factor.name.clone(),
            value: factor.value,
            item,
            action: DecisionAction::ForcedMandatory,
            note: note.to_string(),
        });
        if disabled.remove(&item).is_some() {
            diagnostics.push(Diagnostic::error(
                codes::AMD088,
                format!(
                    "{}={} forces {} to stay enabled; the tailoring decision disabling it is rejected",
                    factor.name,
                    if factor.value { "yes" } else { "no" },
                    item.qualified_ident()
                ),
                factor.span.clone(),
            ));
        }
    };

    if let Some(factor) = settings.get(FACTOR_SAFETY_CRITICAL).filter(|f| f.value) {
        force(
            ContentItemId::RiskList,
            factor,
            "safety-critical projects must track requirements risks",
            &mut forced,
            &mut disabled,
            &mut decisions,
            &mut diagnostics,
        );
        force(
            ContentItemId::QualityRequirements,
            factor,
            "safety-critical projects must specify assessable quality requirements",
            &mut forced,
            &mut disabled,
            &mut decisions,
            &mut diagnostics,
        );
    }

    if let Some(factor) = settings.get(FACTOR_CUSTOM_DEVELOPMENT).filter(|f| !f.value) {
        force(
            ContentItemId::ProcessRequirements,
            factor,
            "procurement projects must constrain the supplier's process",
            &mut forced,
            &mut disabled,
            &mut decisions,
            &mut diagnostics,
        );
    }

    if let Some(factor) = settings.get(FACTOR_PREDECESSOR_SYSTEM).filter(|f| f.value) {
        import_candidates.insert(ContentItemId::DomainModel);
        decisions.push(TailoringDecision {
            factor: factor.name.clone(),
            value: factor.value,
            item: ContentItemId::DomainModel,
            action: DecisionAction::ImportCandidate,
            note: "the predecessor system's domain model can be imported".to_string(),
        });
    }

    let disabled_set: BTreeSet<ContentItemId> = disabled.keys().copied().collect();
    let items = if decisions.is_empty() && diagnostics.is_empty() {
        items.clone()
    } else {
        admitted_items(catalog, domain_profile, &disabled_set)
    };
    StaticTailoring {
        items,
        disabled,
        decisions,
        forced_mandatory: forced,
        import_candidates,
        diagnostics,
    }
}

/// Builds the full project configuration from the manifest and tailoring
/// profiles. At most one organisational and one project profile are
/// expected; extras are processed with an `AMD090` warning.
pub fn resolve_config(
    catalog: &Catalog,
    manifest: &ProjectManifest,
    profiles: &[TailoringProfile],
) -> (ProjectConfig, Vec<Diagnostic>) {
    let mut diagnostics = Vec::new();

    for level in [TailoringLevel::Organisational, TailoringLevel::Project] {
        let of_level: Vec<_> = profiles.iter().filter(|p| p.level == level).collect();
        if of_level.len() > 1 {
            diagnostics.push(Diagnostic::warning(
                codes::AMD090,
                format!(
                    "{} tailoring profiles at {} level; decisions are merged",
                    of_level.len(),
                    level.as_str()
                ),
                Span::point(of_level[1].file.clone(), Position::new(1, 1)),
            ));
        }
    }

    let (domain_profile, mut profile_diags) = resolve_domain_profile(manifest, profiles);
    diagnostics.append(&mut profile_diags);

    let (items, disabled, mut item_diags) = effective_items(catalog, domain_profile, profiles);
    diagnostics.append(&mut item_diags);

    let situation: Vec<FactorSetting> = {
        let mut ordered: Vec<&TailoringProfile> = profiles.iter().collect();
        ordered.sort_by_key(|p| p.level);
        ordered.iter().flat_map(|p| p.factors.iter().cloned()).collect()
    };
    let mut tailored = static_tailor(catalog, domain_profile, &items, &disabled, &situation);
    diagnostics.append(&mut tailored.diagnostics);

    let mut role_assignments = BTreeMap::new();
    {
        let mut ordered: Vec<&TailoringProfile> = profiles.iter().collect();
        ordered.sort_by_key(|p| p.level);
        for profile in ordered {
            for (role, person) in &profile.role_assignments {
                role_assignments.insert(*role, person.clone());
            }
        }
    }

    let mut severity_overrides = BTreeMap::new();
    for rule_override in &manifest.rule_overrides {
        if crate::validator::is_overridable(&rule_override.code) {
            severity_overrides.insert(rule_override.code.clone(), rule_override.setting);
        } else {
            diagnostics.push(Diagnostic::warning(
                codes::AMD090,
                format!("rule `{}` does not exist or cannot be overridden", rule_override.code),
                rule_override.span.clone(),
            ));
        }
    }

    let config = ProjectConfig {
        name: manifest.name.clone().unwrap_or_else(|| "unnamed".to_string()),
        manifest_file: manifest.file.clone(),
        domain_profile,
        items: tailored.items,
        disabled: tailored.disabled,
        forced_mandatory: tailored.forced_mandatory,
        import_candidates: tailored.import_candidates,
        decisions: tailored.decisions,
        role_assignments,
        severity_overrides,
    };
    sort_diagnostics(&mut diagnostics);
    (config, diagnostics)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ardl::SourceFile;
    use crate::catalog::load_catalog;
    use crate::project::{parse_manifest, parse_tailoring};

    fn manifest(text: &str) -> ProjectManifest {
        parse_manifest(&SourceFile::new("amdire-project.txt", text)).0
    }

    fn tailoring(text: &str) -> TailoringProfile {
        let (profile, diags) = parse_tailoring(&SourceFile::new("tailoring.txt", text));
        assert!(diags.is_empty(), "{diags:?}");
        profile
    }

    #[test]
    fn embedded_profile_removes_service_model() {
        let catalog = load_catalog();
        let profile = tailoring("level: org\ndomain-profile: embedded\n");
        let (config, diags) = resolve_config(catalog, &manifest("name: X\n"), &[profile]);
        assert!(diags.is_empty(), "{diags:?}");
        assert_eq!(config.enabled_items(ArtefactType::Requirements).len(), 9);
        assert!(!config.is_enabled(ContentItemId::ServiceModel));
    }

    #[test]
    fn empty_profiles_keep_full_lists() {
        let catalog = load_catalog();
        let (config, diags) = resolve_config(catalog, &manifest("name: X\n"), &[]);
        assert!(diags.is_empty());
        assert_eq!(config.enabled_items(ArtefactType::Context).len(), 7);
        assert_eq!(config.enabled_items(ArtefactType::Requirements).len(), 10);
        assert_eq!(config.enabled_items(ArtefactType::System).len(), 5);
    }

    #[test]
    fn justified_disable_shrinks_requirements_list() {
        let catalog = load_catalog();
        let profile = tailoring(
            "level: project\ndisable RiskList: \"internal tooling, risk managed centrally\"\n",
        );
        let (config, diags) = resolve_config(catalog, &manifest("name: X\n"), &[profile]);
        assert!(diags.iter().all(|d| d.code != codes::AMD085));
        assert_eq!(config.enabled_items(ArtefactType::Requirements).len(), 9);
        assert!(!config.is_enabled(ContentItemId::RiskList));
    }

    #[test]
    fn unjustified_core_disable_raises_amd085_and_keeps_item() {
        let catalog = load_catalog();
        let profile = tailoring("level: project\ndisable RiskList\n");
        let (config, diags) = resolve_config(catalog, &manifest("name: X\n"), &[profile]);
        assert_eq!(diags.iter().filter(|d| d.code == codes::AMD085).count(), 1);
        assert!(config.is_enabled(ContentItemId::RiskList));
    }

    #[test]
    fn stereotyped_item_disable_needs_no_justification() {
        let catalog = load_catalog();
        let profile = tailoring("level: project\ndisable ServiceModel\n");
        let (config, diags) = resolve_config(catalog, &manifest("name: X\n"), &[profile]);
        assert!(diags.is_empty(), "{diags:?}");
        assert!(!config.is_enabled(ContentItemId::ServiceModel));
    }

    #[test]
    fn conflicting_profiles_raise_amd086_and_fall_back_to_both() {
        let catalog = load_catalog();
        let org = tailoring("level: org\ndomain-profile: bis\n");
        let project = tailoring("level: project\ndomain-profile: embedded\n");
        let (config, diags) = resolve_config(catalog, &manifest("name: X\n"), &[org, project]);
        assert_eq!(diags.iter().filter(|d| d.code == codes::AMD086).count(), 1);
        assert_eq!(config.domain_profile, DomainProfile::Both);
    }

    #[test]
    fn safety_critical_conflicts_with_disabled_risk_list() {
        let catalog = load_catalog();
        let profile = tailoring(
            "level: project\ndisable RiskList: \"we like risk\"\nfactor safety_critical: yes\n",
        );
        let (config, diags) = resolve_config(catalog, &manifest("name: X\n"), &[profile]);
        assert_eq!(diags.iter().filter(|d| d.code == codes::AMD088).count(), 1);
        assert!(config.is_enabled(ContentItemId::RiskList));
        assert!(config.forced_mandatory.contains(&ContentItemId::RiskList));
    }

    #[test]
    fn empty_situation_is_identity() {
        let catalog = load_catalog();
        let (items, disabled, _) = effective_items(catalog, DomainProfile::Both, &[]);
        let tailored = static_tailor(catalog, DomainProfile::Both, &items, &disabled, &[]);
        assert_eq!(items, tailored.items);
        assert!(tailored.decisions.is_empty());
        assert!(tailored.forced_mandatory.is_empty());
        assert!(tailored.import_candidates.is_empty());
        assert!(tailored.diagnostics.is_empty());
    }

    #[test]
    fn procurement_forces_process_requirements() {
        let catalog = load_catalog();
        let profile = tailoring("level: project\nfactor custom_development: no\n");
        let (config, diags) = resolve_config(catalog, &manifest("name: X\n"), &[profile]);
        assert!(diags.is_empty(), "{diags:?}");
        assert!(config.forced_mandatory.contains(&ContentItemId::ProcessRequirements));
        let decision = &config.decisions[0];
        assert_eq!(decision.factor, FACTOR_CUSTOM_DEVELOPMENT);
        assert_eq!(decision.action, DecisionAction::ForcedMandatory);
    }

    #[test]
    fn predecessor_system_marks_domain_model_import() {
        let catalog = load_catalog();
        let profile = tailoring("level: project\nfactor predecessor_system_exists: yes\n");
        let (config, _) = resolve_config(catalog, &manifest("name: X\n"), &[profile]);
        assert!(config.import_candidates.contains(&ContentItemId::DomainModel));
    }

    #[test]
    fn unknown_factor_raises_amd087() {
        let catalog = load_catalog();
        let profile = tailoring("level: project\nfactor phase_of_moon: yes\n");
        let (_, diags) = resolve_config(catalog, &manifest("name: X\n"), &[profile]);
        assert_eq!(diags.iter().filter(|d| d.code == codes::AMD087).count(), 1);
    }
}
