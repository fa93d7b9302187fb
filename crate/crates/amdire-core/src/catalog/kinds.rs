//! Enumerations of the artefact model vocabulary: artefact types, content
//! items, concept kinds, relations, and multiplicities.
//!
//! Every user-facing keyword of ARDL is derived from these tables, so the
//! grammar stays generatable from the catalog.

use std::fmt;

/// The three abstraction levels. Declaration order is the refinement order:
/// `Context` is the highest level, `System` the lowest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArtefactType {
    Context,
    Requirements,
    System,
}

impl ArtefactType {
    pub const ALL: [ArtefactType; 3] =
        [ArtefactType::Context, ArtefactType::Requirements, ArtefactType::System];

    /// The ARDL file header keyword.
    pub fn keyword(self) -> &'static str {
        match self {
            ArtefactType::Context => "context-specification",
            ArtefactType::Requirements => "requirements-specification",
            ArtefactType::System => "system-specification",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            ArtefactType::Context => "Context Specification",
            ArtefactType::Requirements => "Requirements Specification",
            ArtefactType::System => "System Specification",
        }
    }

    /// Short name used by the CLI (`--artefact context`).
    pub fn short_name(self) -> &'static str {
        match self {
            ArtefactType::Context => "context",
            ArtefactType::Requirements => "requirements",
            ArtefactType::System => "system",
        }
    }

    pub fn from_keyword(kw: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|a| a.keyword() == kw)
    }

    pub fn from_short_name(name: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|a| a.short_name() == name)
    }

    /// The adjacent higher abstraction level, if any.
    pub fn higher(self) -> Option<ArtefactType> {
        match self {
            ArtefactType::Context => None,
            ArtefactType::Requirements => Some(ArtefactType::Context),
            ArtefactType::System => Some(ArtefactType::Requirements),
        }
    }
}

impl fmt::Display for ArtefactType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.display_name())
    }
}

/// Domain stereotype restricting a content item to one family of systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainStereotype {
    BusinessInformationSystems,
    EmbeddedReactiveSystems,
}

/// The domain profile a project is tailored for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DomainProfile {
    Bis,
    Embedded,
    Both,
}

impl DomainProfile {
    pub fn as_str(self) -> &'static str {
        match self {
            DomainProfile::Bis => "bis",
            DomainProfile::Embedded => "embedded",
            DomainProfile::Both => "both",
        }
    }

    pub fn from_str(s: &str) -> Option<Self> {
        match s {
            "bis" => Some(DomainProfile::Bis),
            "embedded" => Some(DomainProfile::Embedded),
            "both" => Some(DomainProfile::Both),
            _ => None,
        }
    }

    /// True if content stereotyped for `stereotype` belongs to a project with
    /// this profile.
    pub fn admits(self, stereotype: DomainStereotype) -> bool {
        matches!(
            (self, stereotype),
            (DomainProfile::Both, _)
                | (DomainProfile::Bis, DomainStereotype::BusinessInformationSystems)
                | (DomainProfile::Embedded, DomainStereotype::EmbeddedReactiveSystems)
        )
    }
}

impl fmt::Display for DomainProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Maturity of a single model element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum ElementStatus {
    #[default]
    Draft,
    Defined,
    Agreed,
}

impl ElementStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ElementStatus::Draft => "draft",
            ElementStatus::Defined => "defined",
            ElementStatus::Agreed => "agreed",
        }
    }

    pub fn from_str(s: &str) -> Option<Self> {
        match s {
            "draft" => Some(ElementStatus::Draft),
            "defined" => Some(ElementStatus::Defined),
            "agreed" => Some(ElementStatus::Agreed),
            _ => None,
        }
    }
}

impl fmt::Display for ElementStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

macro_rules! content_items {
    ($( $variant:ident => ($artefact:ident, $keyword:literal, $display:literal) ),+ $(,)?) => {
        /// One named section of an artefact type. The two data models are
        /// distinct items because each artefact type owns its own.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum ContentItemId {
            $($variant),+
        }

        impl ContentItemId {
            pub const ALL: [ContentItemId; content_items!(@count $($variant)+)] =
                [$(ContentItemId::$variant),+];

            pub fn artefact(self) -> ArtefactType {
                match self {
                    $(ContentItemId::$variant => ArtefactType::$artefact),+
                }
            }

            /// The ARDL block keyword. Unique within one artefact type.
            pub fn keyword(self) -> &'static str {
                match self {
                    $(ContentItemId::$variant => $keyword),+
                }
            }

            pub fn display_name(self) -> &'static str {
                match self {
                    $(ContentItemId::$variant => $display),+
                }
            }
        }
    };
    (@count $($x:ident)+) => { 0usize $(+ content_items!(@one $x))+ };
    (@one $x:ident) => { 1usize };
}

content_items! {
    ProjectScope        => (Context, "project-scope", "Project Scope"),
    ConstraintsAndRules => (Context, "constraints-and-rules", "Constraints and Rules"),
    StakeholderModel    => (Context, "stakeholder-model", "Stakeholder Model"),
    BusinessCase        => (Context, "business-case", "Business Case"),
    ObjectivesAndGoals  => (Context, "objectives-and-goals", "Objectives and Goals"),
    DomainModel         => (Context, "domain-model", "Domain Model"),
    Glossary            => (Context, "glossary", "Glossary"),

    SystemVision           => (Requirements, "system-vision", "System Vision"),
    UsageModel             => (Requirements, "usage-model", "Usage Model"),
    ServiceModel           => (Requirements, "service-model", "Service Model"),
    RequirementsDataModel  => (Requirements, "data-model", "Data Model"),
    FunctionalHierarchy    => (Requirements, "functional-hierarchy", "Functional Hierarchy"),
    QualityRequirements    => (Requirements, "quality-requirements", "Quality Requirements"),
    DeploymentRequirements => (Requirements, "deployment-requirements", "Deployment Requirements"),
    SystemConstraints      => (Requirements, "system-constraints", "System Constraints"),
    ProcessRequirements    => (Requirements, "process-requirements", "Process Requirements"),
    RiskList               => (Requirements, "risk-list", "Risk List"),

    ArchitectureOverview => (System, "architecture-overview", "Architecture Overview"),
    FunctionModel        => (System, "function-model", "Function Model"),
    ComponentModel       => (System, "component-model", "Component Model"),
    BehaviourModel       => (System, "behaviour-model", "Behaviour Model"),
    SystemDataModel      => (System, "data-model", "Data Model"),
}

impl ContentItemId {
    /// Resolves an item keyword within one artefact type.
    pub fn from_keyword(artefact: ArtefactType, kw: &str) -> Option<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|i| i.artefact() == artefact && i.keyword() == kw)
    }

    /// Resolves a user-supplied item name, e.g. from a tailoring file.
    /// `DataModel` alone is ambiguous; it must be qualified as
    /// `Requirements.DataModel` or `System.DataModel`.
    pub fn from_name(name: &str) -> Result<Self, ItemNameError> {
        let (artefact, bare) = match name.split_once('.') {
            Some((prefix, rest)) => {
                let artefact = match prefix {
                    "Context" => ArtefactType::Context,
                    "Requirements" => ArtefactType::Requirements,
                    "System" => ArtefactType::System,
                    _ => return Err(ItemNameError::Unknown),
                };
                (Some(artefact), rest)
            }
            None => (None, name),
        };
        let mut matches = Self::ALL.iter().copied().filter(|i| {
            i.ident() == bare && artefact.is_none_or(|a| i.artefact() == a)
        });
        match (matches.next(), matches.next()) {
            (Some(item), None) => Ok(item),
            (Some(a), Some(b)) => Err(ItemNameError::Ambiguous(vec![a, b])),
            (None, _) => Err(ItemNameError::Unknown),
        }
    }

    /// Identifier form of the item name (`RiskList`, `DataModel`).
    pub fn ident(self) -> &'static str {
        match self {
            ContentItemId::RequirementsDataModel | ContentItemId::SystemDataModel => "DataModel",
            other => other.canonical_ident(),
        }
    }

    /// Unambiguous identifier, qualifying the two data models.
    pub fn qualified_ident(self) -> &'static str {
        match self {
            ContentItemId::RequirementsDataModel => "Requirements.DataModel",
            ContentItemId::SystemDataModel => "System.DataModel",
            other => other.canonical_ident(),
        }
    }

    fn canonical_ident(self) -> &'static str {
        match self {
            ContentItemId::ProjectScope => "ProjectScope",
            ContentItemId::ConstraintsAndRules => "ConstraintsAndRules",
            ContentItemId::StakeholderModel => "StakeholderModel",
            ContentItemId::BusinessCase => "BusinessCase",
            ContentItemId::ObjectivesAndGoals => "ObjectivesAndGoals",
            ContentItemId::DomainModel => "DomainModel",
            ContentItemId::Glossary => "Glossary",
            ContentItemId::SystemVision => "SystemVision",
            ContentItemId::UsageModel => "UsageModel",
            ContentItemId::ServiceModel => "ServiceModel",
            ContentItemId::RequirementsDataModel => "DataModel",
            ContentItemId::FunctionalHierarchy => "FunctionalHierarchy",
            ContentItemId::QualityRequirements => "QualityRequirements",
            ContentItemId::DeploymentRequirements => "DeploymentRequirements",
            ContentItemId::SystemConstraints => "SystemConstraints",
            ContentItemId::ProcessRequirements => "ProcessRequirements",
            ContentItemId::RiskList => "RiskList",
            ContentItemId::ArchitectureOverview => "ArchitectureOverview",
            ContentItemId::FunctionModel => "FunctionModel",
            ContentItemId::ComponentModel => "ComponentModel",
            ContentItemId::BehaviourModel => "BehaviourModel",
            ContentItemId::SystemDataModel => "DataModel",
        }
    }
}

/// Error resolving a user-supplied content item name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ItemNameError {
    Unknown,
    Ambiguous(Vec<ContentItemId>),
}

macro_rules! concept_kinds {
    ($( $variant:ident => ($item:ident, $keyword:expr, $display:literal) ),+ $(,)?) => {
        /// A modelling concept of the artefact model. Abstract kinds (keyword
        /// `None`) classify concrete ones and cannot be instantiated in ARDL.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum ConceptKind {
            $($variant),+
        }

        impl ConceptKind {
            pub const ALL: [ConceptKind; concept_kinds!(@count $($variant)+)] =
                [$(ConceptKind::$variant),+];

            /// The content item this kind is homed in.
            pub fn home_item(self) -> ContentItemId {
                match self {
                    $(ConceptKind::$variant => ContentItemId::$item),+
                }
            }

            /// The ARDL declaration keyword; `None` for abstract kinds.
            pub fn keyword(self) -> Option<&'static str> {
                match self {
                    $(ConceptKind::$variant => $keyword),+
                }
            }

            pub fn display_name(self) -> &'static str {
                match self {
                    $(ConceptKind::$variant => $display),+
                }
            }
        }
    };
    (@count $($x:ident)+) => { 0usize $(+ concept_kinds!(@one $x))+ };
    (@one $x:ident) => { 1usize };
}

concept_kinds! {
    // Context: Project Scope
    ProblemDescription => (ProjectScope, Some("problem-description"), "Problem Description"),
    StatementOfIntent  => (ProjectScope, Some("statement-of-intent"), "Statement of Intent"),
    // Context: Constraints and Rules
    Restriction => (ConstraintsAndRules, None, "Restriction"),
    Constraint  => (ConstraintsAndRules, Some("constraint"), "Constraint"),
    Rule        => (ConstraintsAndRules, Some("rule"), "Rule"),
    // Context: Stakeholder Model
    Stakeholder => (StakeholderModel, Some("stakeholder"), "Stakeholder"),
    UserGroup   => (StakeholderModel, Some("user-group"), "User Group"),
    // Context: Business Case
    BusinessCase => (BusinessCase, Some("business-case"), "Business Case"),
    Cost         => (BusinessCase, Some("cost"), "Cost"),
    Value        => (BusinessCase, Some("value"), "Value"),
    Risk         => (BusinessCase, Some("risk"), "Risk"),
    // Context: Objectives and Goals
    Goal             => (ObjectivesAndGoals, None, "Goal"),
    BusinessGoal     => (ObjectivesAndGoals, Some("business-goal"), "Business Goal"),
    UsageGoal        => (ObjectivesAndGoals, Some("usage-goal"), "Usage Goal"),
    SystemGoal       => (ObjectivesAndGoals, Some("system-goal"), "System Goal"),
    QualityAttribute => (ObjectivesAndGoals, Some("quality-attribute"), "Quality Attribute"),
    // Context: Domain Model
    ExternalSystem       => (DomainModel, Some("external-system"), "External System"),
    BusinessProcessModel => (DomainModel, Some("business-process-model"), "Business Process Model"),
    Activity             => (DomainModel, None, "Activity"),
    BusinessProcess      => (DomainModel, Some("business-process"), "Business Process"),
    BusinessTask         => (DomainModel, Some("business-task"), "Business Task"),
    ProcessStep          => (DomainModel, Some("process-step"), "Process Step"),
    BusinessObject       => (DomainModel, Some("business-object"), "Business Object"),
    // Context: Glossary
    Term => (Glossary, Some("term"), "Term"),

    // Requirements: System Vision
    SystemUnderConsideration => (SystemVision, Some("system-under-consideration"), "System under Consideration"),
    SystemBoundary           => (SystemVision, Some("system-boundary"), "System Boundary"),
    Feature                  => (SystemVision, Some("feature"), "Feature"),
    UseCaseOverview          => (SystemVision, Some("use-case-overview"), "Use Case Overview"),
    // Requirements: Usage Model
    Scenario           => (UsageModel, None, "Scenario"),
    UseCase            => (UsageModel, Some("use-case"), "Use Case"),
    FunctionalScenario => (UsageModel, Some("functional-scenario"), "Functional Scenario"),
    GenericScenario    => (UsageModel, Some("generic-scenario"), "Generic Scenario"),
    Actor              => (UsageModel, Some("actor"), "Actor"),
    Action             => (UsageModel, None, "Action"),
    ActorAction        => (UsageModel, Some("actor-action"), "Actor Action"),
    SystemAction       => (UsageModel, Some("system-action"), "System Action"),
    Event              => (UsageModel, Some("event"), "Event"),
    // Requirements: Service Model
    Service               => (ServiceModel, Some("service"), "Service"),
    CollaborationContract => (ServiceModel, Some("collaboration-contract"), "Collaboration Contract"),
    QualityOfService      => (ServiceModel, Some("quality-of-service"), "Quality of Service"),
    ServiceParameter      => (ServiceModel, Some("service-parameter"), "Service Parameter"),
    ServiceLevel          => (ServiceModel, Some("service-level"), "Service Level"),
    // Requirements: Data Model
    DataObject => (RequirementsDataModel, Some("data-object"), "Data Object"),
    // Requirements: Functional Hierarchy
    UserVisibleFunction => (FunctionalHierarchy, Some("user-visible-function"), "User-visible Function"),
    Mode                => (FunctionalHierarchy, Some("mode"), "Mode"),
    Interface           => (FunctionalHierarchy, Some("interface"), "Interface"),
    // Requirements: Quality Requirements
    NonFunctionalRequirement => (QualityRequirements, None, "Non-functional Requirement"),
    QualityRequirement       => (QualityRequirements, Some("quality-requirement"), "Quality Requirement"),
    Measurement              => (QualityRequirements, None, "Measurement"),
    Metric                   => (QualityRequirements, Some("metric"), "Metric"),
    NormativeReference       => (QualityRequirements, Some("normative-reference"), "Normative Reference"),
    // Requirements: remaining requirement categories
    DeploymentRequirement => (DeploymentRequirements, Some("deployment-requirement"), "Deployment Requirement"),
    SystemConstraint      => (SystemConstraints, Some("system-constraint"), "System Constraint"),
    ProcessRequirement    => (ProcessRequirements, Some("process-requirement"), "Process Requirement"),
    // Requirements: Risk List
    RequirementsRisk => (RiskList, Some("requirements-risk"), "Requirements Risk"),
    RiskFactor       => (RiskList, Some("risk-factor"), "Risk Factor"),
    RiskTrend        => (RiskList, Some("risk-trend"), "Risk Trend"),

    // System: Architecture Overview
    ComponentOverview => (ArchitectureOverview, Some("component-overview"), "Component Overview"),
    MajorFunction     => (ArchitectureOverview, Some("major-function"), "Major Function"),
    // System: Function Model
    SystemFunction  => (FunctionModel, Some("system-function"), "System Function"),
    SystemInterface => (FunctionModel, Some("system-interface"), "System Interface"),
    // System: Component Model
    Component => (ComponentModel, Some("component"), "Component"),
    Port      => (ComponentModel, Some("port"), "Port"),
    Channel   => (ComponentModel, Some("channel"), "Channel"),
    // System: Behaviour Model
    StateMachine    => (BehaviourModel, Some("state-machine"), "State Machine"),
    State           => (BehaviourModel, Some("state"), "State"),
    StateTransition => (BehaviourModel, Some("state-transition"), "State Transition"),
    SystemEvent     => (BehaviourModel, Some("system-event"), "System Event"),
    // System: Data Model
    DataElement => (SystemDataModel, Some("data-element"), "Data Element"),
    DataType    => (SystemDataModel, Some("data-type"), "Data Type"),
}

impl ConceptKind {
    pub fn is_abstract(self) -> bool {
        self.keyword().is_none()
    }

    /// The artefact type this kind belongs to, via its home item.
    pub fn artefact(self) -> ArtefactType {
        self.home_item().artefact()
    }

    pub fn from_keyword(kw: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|k| k.keyword() == Some(kw))
    }

    /// Resolves a kind from either its keyword or its identifier form
    /// (`data-element` or `DataElement`). Used by the CLI.
    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|k| k.keyword() == Some(name) || k.ident() == name)
    }

    /// Identifier form of the kind name (`DataElement`).
    pub fn ident(self) -> &'static str {
        match self {
            ConceptKind::BusinessCase => "BusinessCaseElement",
            other => other.raw_ident(),
        }
    }

    fn raw_ident(self) -> &'static str {
        macro_rules! idents {
            ($($v:ident),+ $(,)?) => {
                match self { $(ConceptKind::$v => stringify!($v)),+ }
            };
        }
        idents!(
            ProblemDescription, StatementOfIntent, Restriction, Constraint, Rule,
            Stakeholder, UserGroup, BusinessCase, Cost, Value, Risk, Goal,
            BusinessGoal, UsageGoal, SystemGoal, QualityAttribute, ExternalSystem,
            BusinessProcessModel, Activity, BusinessProcess, BusinessTask,
            ProcessStep, BusinessObject, Term, SystemUnderConsideration,
            SystemBoundary, Feature, UseCaseOverview, Scenario, UseCase,
            FunctionalScenario, GenericScenario, Actor, Action, ActorAction,
            SystemAction, Event, Service, CollaborationContract, QualityOfService,
            ServiceParameter, ServiceLevel, DataObject, UserVisibleFunction, Mode,
            Interface, NonFunctionalRequirement, QualityRequirement, Measurement,
            Metric, NormativeReference, DeploymentRequirement, SystemConstraint,
            ProcessRequirement, RequirementsRisk, RiskFactor, RiskTrend,
            ComponentOverview, MajorFunction, SystemFunction, SystemInterface,
            Component, Port, Channel, StateMachine, State, StateTransition,
            SystemEvent, DataElement, DataType,
        )
    }
}

impl fmt::Display for ConceptKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.display_name())
    }
}

/// The relations elements can take part in. `Composes` is also derived from
/// nesting: a child element composes its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Realises,
    Refines,
    Satisfies,
    Constrains,
    IssuedBy,
    Composes,
    Triggers,
    AssessedBy,
    CausedBy,
    DemandsQualityAttribute,
    RelatedTo,
}

impl Relation {
    pub const ALL: [Relation; 11] = [
        Relation::Realises,
        Relation::Refines,
        Relation::Satisfies,
        Relation::Constrains,
        Relation::IssuedBy,
        Relation::Composes,
        Relation::Triggers,
        Relation::AssessedBy,
        Relation::CausedBy,
        Relation::DemandsQualityAttribute,
        Relation::RelatedTo,
    ];

    /// The ARDL clause keyword.
    pub fn keyword(self) -> &'static str {
        match self {
            Relation::Realises => "realises",
            Relation::Refines => "refines",
            Relation::Satisfies => "satisfies",
            Relation::Constrains => "constrains",
            Relation::IssuedBy => "issued-by",
            Relation::Composes => "composes",
            Relation::Triggers => "triggers",
            Relation::AssessedBy => "assessed-by",
            Relation::CausedBy => "caused-by",
            Relation::DemandsQualityAttribute => "demands",
            Relation::RelatedTo => "related-to",
        }
    }

    pub fn from_keyword(kw: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|r| r.keyword() == kw)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// How many outgoing edges of one relation rule a source element may carry.
/// Lower bounds are enforced by dedicated validation rules; upper bounds by
/// the multiplicity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Multiplicity {
    ExactlyOne,
    AtMostOne,
    AtLeastOne,
    Any,
}

impl Multiplicity {
    pub fn as_str(self) -> &'static str {
        match self {
            Multiplicity::ExactlyOne => "exactly one",
            Multiplicity::AtMostOne => "at most one",
            Multiplicity::AtLeastOne => "at least one",
            Multiplicity::Any => "any",
        }
    }

    /// Upper bound implied by the multiplicity, if finite.
    pub fn max(self) -> Option<usize> {
        match self {
            Multiplicity::ExactlyOne | Multiplicity::AtMostOne => Some(1),
            Multiplicity::AtLeastOne | Multiplicity::Any => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_at_least_seventy_kinds() {
        assert!(ConceptKind::ALL.len() >= 70, "got {}", ConceptKind::ALL.len());
    }

    #[test]
    fn item_counts_match_artefact_structure() {
        let count = |a: ArtefactType| ContentItemId::ALL.iter().filter(|i| i.artefact() == a).count();
        assert_eq!(count(ArtefactType::Context), 7);
        assert_eq!(count(ArtefactType::Requirements), 10);
        assert_eq!(count(ArtefactType::System), 5);
    }

    #[test]
    fn item_keywords_unique_per_artefact() {
        for a in ArtefactType::ALL {
            let mut kws: Vec<_> = ContentItemId::ALL
                .iter()
                .filter(|i| i.artefact() == a)
                .map(|i| i.keyword())
                .collect();
            kws.sort();
            kws.dedup();
            let expected = ContentItemId::ALL.iter().filter(|i| i.artefact() == a).count();
            assert_eq!(kws.len(), expected, "duplicate item keyword in {a:?}");
        }
    }

    #[test]
    fn concrete_kind_keywords_are_unique() {
        let mut kws: Vec<_> = ConceptKind::ALL.iter().filter_map(|k| k.keyword()).collect();
        let concrete = kws.len();
        kws.sort();
        kws.dedup();
        assert_eq!(kws.len(), concrete);
    }

    #[test]
    fn data_model_name_requires_qualification() {
        assert!(matches!(ContentItemId::from_name("DataModel"), Err(ItemNameError::Ambiguous(_))));
        assert_eq!(
            ContentItemId::from_name("Requirements.DataModel"),
            Ok(ContentItemId::RequirementsDataModel)
        );
        assert_eq!(ContentItemId::from_name("System.DataModel"), Ok(ContentItemId::SystemDataModel));
        assert_eq!(ContentItemId::from_name("RiskList"), Ok(ContentItemId::RiskList));
        assert!(matches!(ContentItemId::from_name("Nope"), Err(ItemNameError::Unknown)));
    }

    #[test]
    fn status_ordering_follows_ladder() {
        assert!(ElementStatus::Draft < ElementStatus::Defined);
        assert!(ElementStatus::Defined < ElementStatus::Agreed);
    }
}
