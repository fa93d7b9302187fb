//! The relation rule table: which (source kind, relation, target kind)
//! triples are legal, and with which multiplicity.
//!
//! `Composes` rules double as the nesting schema — a child element declared
//! inside a parent yields a derived `Composes` edge that must satisfy one of
//! these rules.

use super::kinds::{ConceptKind, Multiplicity, Relation};

/// One legal relation between concept kinds.
#[derive(Debug, Clone)]
pub struct RelationRule {
    pub relation: Relation,
    pub source_kind: ConceptKind,
    pub target_kinds: Vec<ConceptKind>,
    pub multiplicity: Multiplicity,
}

impl RelationRule {
    fn new(
        source_kind: ConceptKind,
        relation: Relation,
        target_kinds: &[ConceptKind],
        multiplicity: Multiplicity,
    ) -> Self {
        RelationRule {
            relation,
            source_kind,
            target_kinds: target_kinds.to_vec(),
            multiplicity,
        }
    }
}

pub(super) fn relation_rules() -> Vec<RelationRule> {
    use ConceptKind::*;
    use Multiplicity::*;
    use Relation::*;

    let rule = RelationRule::new;
    vec![
        // Realisation across adjacent abstraction levels: requirements
        // elements realise context elements.
        rule(Actor, Realises, &[UserGroup, ExternalSystem], AtLeastOne),
        rule(DataObject, Realises, &[BusinessObject], Any),
        rule(ActorAction, Realises, &[ProcessStep], Any),
        rule(SystemAction, Realises, &[ProcessStep], Any),
        // System elements realise requirements elements.
        rule(SystemFunction, Realises, &[SystemAction, UserVisibleFunction], AtLeastOne),
        rule(SystemInterface, Realises, &[Interface], Any),
        rule(DataElement, Realises, &[DataObject], ExactlyOne),
        rule(State, Realises, &[Mode], AtMostOne),
        // Goal refinement within one goal kind.
        rule(BusinessGoal, Refines, &[BusinessGoal], Any),
        rule(UsageGoal, Refines, &[UsageGoal], Any),
        rule(SystemGoal, Refines, &[SystemGoal], Any),
        // Satisfaction: the business case and the goals satisfy the statement
        // of intent; generic scenarios satisfy goals and quality requirements.
        rule(BusinessCase, Satisfies, &[StatementOfIntent], Any),
        rule(BusinessGoal, Satisfies, &[StatementOfIntent], Any),
        rule(UsageGoal, Satisfies, &[StatementOfIntent], Any),
        rule(SystemGoal, Satisfies, &[StatementOfIntent], Any),
        rule(
            GenericScenario,
            Satisfies,
            &[QualityRequirement, SystemGoal, UsageGoal, BusinessGoal],
            Any,
        ),
        // Constraining relations.
        rule(QualityRequirement, Constrains, &[SystemAction], Any),
        rule(SystemConstraint, Constrains, &[Component, SystemFunction], Any),
        // Every goal is issued by a stakeholder.
        rule(BusinessGoal, IssuedBy, &[Stakeholder, UserGroup], AtLeastOne),
        rule(UsageGoal, IssuedBy, &[Stakeholder, UserGroup], AtLeastOne),
        rule(SystemGoal, IssuedBy, &[Stakeholder, UserGroup], AtLeastOne),
        // Triggering: usage events trigger functional scenarios, system
        // events trigger state transitions.
        rule(Event, Triggers, &[FunctionalScenario], Any),
        rule(SystemEvent, Triggers, &[StateTransition], Any),
        // Assessment of quality requirements.
        rule(QualityRequirement, AssessedBy, &[Metric, NormativeReference], AtLeastOne),
        // Risk causation.
        rule(RequirementsRisk, CausedBy, &[RiskFactor], AtLeastOne),
        // System goals demand quality attributes.
        rule(SystemGoal, DemandsQualityAttribute, &[QualityAttribute], AtLeastOne),
        // Cross-references.
        rule(UsageGoal, RelatedTo, &[BusinessGoal], AtLeastOne),
        rule(SystemGoal, RelatedTo, &[UsageGoal], AtLeastOne),
        rule(Constraint, RelatedTo, &[Constraint, Rule], Any),
        rule(Rule, RelatedTo, &[Constraint, Rule], Any),
        rule(UseCase, RelatedTo, &[Feature], Any),
        rule(ServiceParameter, RelatedTo, &[Metric], Any),
        rule(Interface, RelatedTo, &[DataObject], Any),
        rule(UserVisibleFunction, RelatedTo, &[SystemAction, Service], Any),
        rule(
            RequirementsRisk,
            RelatedTo,
            &[
                UseCase,
                QualityRequirement,
                DeploymentRequirement,
                SystemConstraint,
                ProcessRequirement,
            ],
            Any,
        ),
        // Composition: legal element nesting. Stakeholder hierarchies.
        rule(Stakeholder, Composes, &[Stakeholder], Any),
        rule(UserGroup, Composes, &[Stakeholder, UserGroup], Any),
        // Business case breakdown.
        rule(Cost, Composes, &[BusinessCase], Any),
        rule(Value, Composes, &[BusinessCase], Any),
        rule(Risk, Composes, &[BusinessCase], Any),
        // Goal hierarchies.
        rule(BusinessGoal, Composes, &[BusinessGoal], Any),
        rule(UsageGoal, Composes, &[UsageGoal], Any),
        rule(SystemGoal, Composes, &[SystemGoal], Any),
        // Business process decomposition.
        rule(BusinessProcess, Composes, &[BusinessProcessModel], Any),
        rule(BusinessTask, Composes, &[BusinessProcess, BusinessProcessModel], Any),
        rule(ProcessStep, Composes, &[BusinessTask, BusinessProcess], Any),
        // System vision structure.
        rule(SystemBoundary, Composes, &[SystemUnderConsideration], Any),
        rule(Feature, Composes, &[SystemUnderConsideration], Any),
        // Usage model structure.
        rule(FunctionalScenario, Composes, &[UseCase], Any),
        rule(ActorAction, Composes, &[FunctionalScenario, GenericScenario], Any),
        rule(SystemAction, Composes, &[FunctionalScenario, GenericScenario], Any),
        // Service model structure.
        rule(CollaborationContract, Composes, &[Service], Any),
        rule(QualityOfService, Composes, &[Service], Any),
        rule(ServiceParameter, Composes, &[Service, QualityOfService], Any),
        rule(ServiceLevel, Composes, &[ServiceParameter], Any),
        // Functional hierarchy.
        rule(UserVisibleFunction, Composes, &[UserVisibleFunction], Any),
        rule(Mode, Composes, &[UserVisibleFunction], Any),
        // Risk structure.
        rule(RiskFactor, Composes, &[RiskTrend], Any),
        // Component decomposition and ports.
        rule(Component, Composes, &[Component], Any),
        rule(Port, Composes, &[Component], Any),
        // Behaviour model structure.
        rule(State, Composes, &[StateMachine], Any),
        rule(StateTransition, Composes, &[StateMachine], Any),
        rule(SystemEvent, Composes, &[StateMachine], Any),
    ]
}
