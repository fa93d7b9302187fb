//! The embedded artefact model: artefact types, content items, concept
//! kinds, relation rules, roles, and milestones.
//!
//! The catalog is the single source of truth for what kinds of elements
//! exist, where they live, and which relations between them are legal. It is
//! immutable after load and safe to share across threads.

mod kinds;
mod relations;

pub use kinds::{
    ArtefactType, ConceptKind, ContentItemId, DomainProfile, DomainStereotype, ElementStatus,
    ItemNameError, Multiplicity, Relation,
};
pub use relations::RelationRule;

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

/// One of the three top-level specifications.
#[derive(Debug, Clone)]
pub struct ArtefactTypeDef {
    pub id: ArtefactType,
    pub display_name: &'static str,
    pub content_items: Vec<ContentItemId>,
    pub owning_role: RoleId,
    /// (first-item milestone, finalisation milestone)
    pub milestones: (MilestoneId, MilestoneId),
}

/// A named section of an artefact type.
#[derive(Debug, Clone)]
pub struct ContentItemDef {
    pub id: ContentItemId,
    pub display_name: &'static str,
    pub artefact_type: ArtefactType,
    pub domain_stereotype: Option<DomainStereotype>,
    pub mandatory: bool,
    pub concept_elements: Vec<ConceptKind>,
}

/// A typed attribute documented for a concept kind.
#[derive(Debug, Clone, Copy)]
pub struct AttributeDef {
    pub name: &'static str,
    pub scalar: ScalarType,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarType {
    Text,
    Bool,
    Int,
}

/// A modelling concept definition.
#[derive(Debug, Clone)]
pub struct ConceptDef {
    pub kind: ConceptKind,
    pub home_item: ContentItemId,
    pub attributes: Vec<AttributeDef>,
}

/// The role responsible for one artefact type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RoleId {
    BusinessAnalyst,
    RequirementsEngineer,
    SystemArchitect,
}

impl RoleId {
    pub const ALL: [RoleId; 3] =
        [RoleId::BusinessAnalyst, RoleId::RequirementsEngineer, RoleId::SystemArchitect];

    pub fn ident(self) -> &'static str {
        match self {
            RoleId::BusinessAnalyst => "BusinessAnalyst",
            RoleId::RequirementsEngineer => "RequirementsEngineer",
            RoleId::SystemArchitect => "SystemArchitect",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            RoleId::BusinessAnalyst => "Business Analyst",
            RoleId::RequirementsEngineer => "Requirements Engineer",
            RoleId::SystemArchitect => "System Architect",
        }
    }

    pub fn from_ident(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|r| r.ident() == s)
    }
}

#[derive(Debug, Clone)]
pub struct RoleDef {
    pub id: RoleId,
    pub display_name: &'static str,
    pub responsible_for: ArtefactType,
}

/// Identifier of one of the six milestones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MilestoneId {
    CsM1,
    CsM2,
    RsM1,
    RsM2,
    SsM1,
    SsM2,
}

impl MilestoneId {
    pub const ALL: [MilestoneId; 6] = [
        MilestoneId::CsM1,
        MilestoneId::CsM2,
        MilestoneId::RsM1,
        MilestoneId::RsM2,
        MilestoneId::SsM1,
        MilestoneId::SsM2,
    ];

    pub fn ident(self) -> &'static str {
        match self {
            MilestoneId::CsM1 => "CS-M1",
            MilestoneId::CsM2 => "CS-M2",
            MilestoneId::RsM1 => "RS-M1",
            MilestoneId::RsM2 => "RS-M2",
            MilestoneId::SsM1 => "SS-M1",
            MilestoneId::SsM2 => "SS-M2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MilestoneKind {
    FirstItemDefined,
    Finalised,
}

#[derive(Debug, Clone)]
pub struct MilestoneDef {
    pub id: MilestoneId,
    pub artefact_type: ArtefactType,
    pub kind: MilestoneKind,
    /// For `FirstItemDefined`: the artefact's first content item.
    pub trigger_item: Option<ContentItemId>,
}

/// The fully populated artefact model.
#[derive(Debug)]
pub struct Catalog {
    pub artefact_types: Vec<ArtefactTypeDef>,
    pub content_items: Vec<ContentItemDef>,
    pub concepts: Vec<ConceptDef>,
    pub relation_rules: Vec<RelationRule>,
    pub roles: Vec<RoleDef>,
    pub milestones: Vec<MilestoneDef>,
    rule_index: HashMap<(ConceptKind, Relation), usize>,
}

/// Error raised when a kind name cannot be resolved.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown concept kind `{0}`")]
pub struct UnknownKind(pub String);

/// Returns the embedded catalog, building and self-checking it on first use.
///
/// A self-check failure is a build defect, never a user error, and panics.
pub fn load_catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let catalog = build_catalog();
        if let Err(defect) = catalog.self_check() {
            panic!("artefact model self-check failed: {defect}");
        }
        catalog
    })
}

fn build_catalog() -> Catalog {
    let content_items: Vec<ContentItemDef> = ContentItemId::ALL
        .iter()
        .map(|&id| ContentItemDef {
            id,
            display_name: id.display_name(),
            artefact_type: id.artefact(),
            domain_stereotype: match id {
                ContentItemId::ServiceModel => Some(DomainStereotype::BusinessInformationSystems),
                _ => None,
            },
            mandatory: true,
            concept_elements: ConceptKind::ALL
                .iter()
                .copied()
                .filter(|k| k.home_item() == id)
                .collect(),
        })
        .collect();

    let concepts: Vec<ConceptDef> = ConceptKind::ALL
        .iter()
        .map(|&kind| ConceptDef {
            kind,
            home_item: kind.home_item(),
            attributes: documented_attributes(kind),
        })
        .collect();

    let roles = vec![
        RoleDef {
            id: RoleId::BusinessAnalyst,
            display_name: RoleId::BusinessAnalyst.display_name(),
            responsible_for: ArtefactType::Context,
        },
        RoleDef {
            id: RoleId::RequirementsEngineer,
            display_name: RoleId::RequirementsEngineer.display_name(),
            responsible_for: ArtefactType::Requirements,
        },
        RoleDef {
            id: RoleId::SystemArchitect,
            display_name: RoleId::SystemArchitect.display_name(),
            responsible_for: ArtefactType::System,
        },
    ];

    let milestones = vec![
        MilestoneDef {
            id: MilestoneId::CsM1,
            artefact_type: ArtefactType::Context,
            kind: MilestoneKind::FirstItemDefined,
            trigger_item: Some(ContentItemId::ProjectScope),
        },
        MilestoneDef {
            id: MilestoneId::CsM2,
            artefact_type: ArtefactType::Context,
            kind: MilestoneKind::Finalised,
            trigger_item: None,
        },
        MilestoneDef {
            id: MilestoneId::RsM1,
            artefact_type: ArtefactType::Requirements,
            kind: MilestoneKind::FirstItemDefined,
            trigger_item: Some(ContentItemId::SystemVision),
        },
        MilestoneDef {
            id: MilestoneId::RsM2,
            artefact_type: ArtefactType::Requirements,
            kind: MilestoneKind::Finalised,
            trigger_item: None,
        },
        MilestoneDef {
            id: MilestoneId::SsM1,
            artefact_type: ArtefactType::System,
            kind: MilestoneKind::FirstItemDefined,
            trigger_item: Some(ContentItemId::ArchitectureOverview),
        },
        MilestoneDef {
            id: MilestoneId::SsM2,
            artefact_type: ArtefactType::System,
            kind: MilestoneKind::Finalised,
            trigger_item: None,
        },
    ];

    let artefact_types = vec![
        ArtefactTypeDef {
            id: ArtefactType::Context,
            display_name: ArtefactType::Context.display_name(),
            content_items: items_of(&content_items, ArtefactType::Context),
            owning_role: RoleId::BusinessAnalyst,
            milestones: (MilestoneId::CsM1, MilestoneId::CsM2),
        },
        ArtefactTypeDef {
            id: ArtefactType::Requirements,
            display_name: ArtefactType::Requirements.display_name(),
            content_items: items_of(&content_items, ArtefactType::Requirements),
            owning_role: RoleId::RequirementsEngineer,
            milestones: (MilestoneId::RsM1, MilestoneId::RsM2),
        },
        ArtefactTypeDef {
            id: ArtefactType::System,
            display_name: ArtefactType::System.display_name(),
            content_items: items_of(&content_items, ArtefactType::System),
            owning_role: RoleId::SystemArchitect,
            milestones: (MilestoneId::SsM1, MilestoneId::SsM2),
        },
    ];

    let relation_rules = relations::relation_rules();
    let rule_index = relation_rules
        .iter()
        .enumerate()
        .map(|(i, r)| ((r.source_kind, r.relation), i))
        .collect();

    Catalog {
        artefact_types,
        content_items,
        concepts,
        relation_rules,
        roles,
        milestones,
        rule_index,
    }
}

fn items_of(items: &[ContentItemDef], artefact: ArtefactType) -> Vec<ContentItemId> {
    items.iter().filter(|i| i.artefact_type == artefact).map(|i| i.id).collect()
}

/// Attributes documented for a kind, from the artefact model's item
/// descriptions. Attribute assignment in ARDL is open; these drive rendering
/// and documentation.
fn documented_attributes(kind: ConceptKind) -> Vec<AttributeDef> {
    use ConceptKind::*;
    use ScalarType::*;
    let attr = |name, scalar| AttributeDef { name, scalar };
    match kind {
        Term => vec![
            attr("abbreviation", Text),
            attr("synonyms", Text),
            attr("description", Text),
        ],
        Interface => vec![attr("external", Bool), attr("description", Text)],
        StateTransition => vec![attr("from", Text), attr("to", Text), attr("on", Text)],
        Channel => vec![attr("from", Text), attr("to", Text)],
        Metric => vec![attr("unit", Text), attr("target", Text), attr("description", Text)],
        ServiceLevel => vec![attr("value", Text), attr("description", Text)],
        Cost | Value | Risk => vec![attr("amount", Int), attr("description", Text)],
        _ => vec![attr("description", Text)],
    }
}

impl Catalog {
    pub fn artefact_type(&self, id: ArtefactType) -> &ArtefactTypeDef {
        self.artefact_types.iter().find(|a| a.id == id).expect("artefact type present")
    }

    pub fn content_item(&self, id: ContentItemId) -> &ContentItemDef {
        self.content_items.iter().find(|i| i.id == id).expect("content item present")
    }

    pub fn concept(&self, kind: ConceptKind) -> &ConceptDef {
        self.concepts.iter().find(|c| c.kind == kind).expect("concept present")
    }

    pub fn role(&self, id: RoleId) -> &RoleDef {
        self.roles.iter().find(|r| r.id == id).expect("role present")
    }

    pub fn milestone(&self, id: MilestoneId) -> &MilestoneDef {
        self.milestones.iter().find(|m| m.id == id).expect("milestone present")
    }

    /// Resolves a kind name, for callers holding user input.
    pub fn kind_by_name(&self, name: &str) -> Result<ConceptKind, UnknownKind> {
        ConceptKind::from_name(name).ok_or_else(|| UnknownKind(name.to_string()))
    }

    /// Pure lookup against the relation rule set. Returns the governing
    /// multiplicity when the triple is allowed, `None` otherwise.
    pub fn relation_allowed(
        &self,
        source: ConceptKind,
        relation: Relation,
        target: ConceptKind,
    ) -> Option<Multiplicity> {
        let rule = self.rule_for(source, relation)?;
        rule.target_kinds.contains(&target).then_some(rule.multiplicity)
    }

    /// The rule governing outgoing `relation` edges of `source`, if any.
    pub fn rule_for(&self, source: ConceptKind, relation: Relation) -> Option<&RelationRule> {
        self.rule_index.get(&(source, relation)).map(|&i| &self.relation_rules[i])
    }

    /// Content items of `artefact` admitted by `profile`, in catalog order.
    pub fn content_items_for(
        &self,
        artefact: ArtefactType,
        profile: DomainProfile,
    ) -> Vec<ContentItemId> {
        self.content_items
            .iter()
            .filter(|i| i.artefact_type == artefact)
            .filter(|i| i.domain_stereotype.is_none_or(|s| profile.admits(s)))
            .map(|i| i.id)
            .collect()
    }

    /// Verifies internal consistency. An `Err` signals a defect in the
    /// embedded model itself.
    fn self_check(&self) -> Result<(), String> {
        if self.artefact_types.len() != 3 {
            return Err(format!("expected 3 artefact types, found {}", self.artefact_types.len()));
        }
        if self.roles.len() != 3 {
            return Err(format!("expected 3 roles, found {}", self.roles.len()));
        }
        if self.milestones.len() != 6 {
            return Err(format!("expected 6 milestones, found {}", self.milestones.len()));
        }
        for concept in &self.concepts {
            if !self.content_items.iter().any(|i| i.id == concept.home_item) {
                return Err(format!(
                    "concept {:?} references missing home item {:?}",
                    concept.kind, concept.home_item
                ));
            }
        }
        for item in &self.content_items {
            for kind in &item.concept_elements {
                if self.concept(*kind).home_item != item.id {
                    return Err(format!("item {:?} lists foreign concept {kind:?}", item.id));
                }
            }
        }
        let kinds: HashSet<ConceptKind> = self.concepts.iter().map(|c| c.kind).collect();
        for rule in &self.relation_rules {
            if !kinds.contains(&rule.source_kind) {
                return Err(format!("rule references unknown source {:?}", rule.source_kind));
            }
            for target in &rule.target_kinds {
                if !kinds.contains(target) {
                    return Err(format!("rule references unknown target {target:?}"));
                }
            }
            if rule.relation == Relation::Realises {
                let source_level = rule.source_kind.artefact();
                let expected = source_level.higher().ok_or_else(|| {
                    format!("realisation rule sourced at top level: {:?}", rule.source_kind)
                })?;
                for target in &rule.target_kinds {
                    if target.artefact() != expected {
                        return Err(format!(
                            "realisation rule {:?} -> {:?} does not point one level up",
                            rule.source_kind, target
                        ));
                    }
                }
            }
        }
        for artefact in &self.artefact_types {
            let first = self.milestone(artefact.milestones.0);
            let second = self.milestone(artefact.milestones.1);
            if first.kind != MilestoneKind::FirstItemDefined || second.kind != MilestoneKind::Finalised {
                return Err(format!("artefact {:?} has mis-kinded milestones", artefact.id));
            }
            let first_item = *artefact.content_items.first().ok_or("artefact without items")?;
            if first.trigger_item != Some(first_item) {
                return Err(format!(
                    "milestone {:?} trigger item mismatch: {:?} vs {:?}",
                    first.id, first.trigger_item, first_item
                ));
            }
        }
        Ok(())
    }
}
