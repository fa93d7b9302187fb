//! The rule engine: structural and content checks over a linked model graph.
//!
//! `validate` is a pure function of (graph, catalog, config); its output is
//! sorted by (file, line, column, code). Rules touching disabled content
//! items stay silent, with one deliberate exception: `AMD081` reports service
//! model content that an embedded profile excludes.

mod registry;

pub use registry::{is_overridable, list_rules, rule_by_code, Rule, RuleScope};

use std::collections::{HashMap, HashSet};

use crate::catalog::{
    ArtefactType, Catalog, ConceptKind, ContentItemId, DomainProfile, Relation,
};
use crate::diagnostics::{codes, sort_diagnostics, Diagnostic, Position, Severity, Span};
use crate::linker::{ElementId, ModelEdge, ModelElement, ModelGraph};
use crate::project::SeveritySetting;
use crate::tailoring::ProjectConfig;

/// Effective severity of a rule under the project's overrides; `None` means
/// the rule is off.
pub fn effective_severity(config: &ProjectConfig, code: &str) -> Option<Severity> {
    if let Some(setting) = config.severity_overrides.get(code) {
        return match setting {
            SeveritySetting::Error => Some(Severity::Error),
            SeveritySetting::Warning => Some(Severity::Warning),
            SeveritySetting::Info => Some(Severity::Info),
            SeveritySetting::Off => None,
        };
    }
    let rule = registry::rule_by_code(code)?;
    rule.default_enabled.then_some(rule.default_severity)
}

struct Checker<'a> {
    graph: &'a ModelGraph,
    catalog: &'a Catalog,
    config: &'a ProjectConfig,
    /// Element participates in validation: its content item is enabled.
    active: Vec<bool>,
    out: Vec<Diagnostic>,
}

impl<'a> Checker<'a> {
    fn emit(&mut self, code: &'static str, message: String, span: Span) -> Option<&mut Diagnostic> {
        let severity = effective_severity(self.config, code)?;
        self.out.push(Diagnostic::new(code, severity, message, span));
        self.out.last_mut()
    }

    fn is_active(&self, id: ElementId) -> bool {
        self.active[id.index()]
    }

    /// Outgoing edges of `relation` whose target has one of `target_kinds`.
    fn valid_targets(
        &self,
        element: &ModelElement,
        relation: Relation,
        target_kinds: &[ConceptKind],
    ) -> usize {
        self.graph
            .outgoing(element.id)
            .filter(|e| e.relation == relation)
            .filter(|e| target_kinds.contains(&self.graph.element(e.target).kind))
            .count()
    }
}

/// Runs every enabled rule over the graph.
pub fn validate(graph: &ModelGraph, catalog: &Catalog, config: &ProjectConfig) -> Vec<Diagnostic> {
    let active = graph
        .elements()
        .map(|e| config.is_enabled(e.home_item))
        .collect();
    let mut checker = Checker { graph, catalog, config, active, out: Vec::new() };

    check_missing_items(&mut checker);
    check_service_model_profile(&mut checker);
    for element in graph.elements() {
        if checker.is_active(element.id) {
            check_element(&mut checker, element);
        }
    }
    check_edges(&mut checker);
    check_goal_cycles(&mut checker);
    check_component_cycles(&mut checker);
    check_quality_goal_connection(&mut checker);
    check_glossary_coverage(&mut checker);

    let mut out = checker.out;
    sort_diagnostics(&mut out);
    out
}

/// AMD020: every enabled content item must be present and non-empty.
fn check_missing_items(c: &mut Checker) {
    let mut counts: HashMap<ContentItemId, usize> = HashMap::new();
    for element in c.graph.elements() {
        *counts.entry(element.home_item).or_default() += 1;
    }
    for artefact in ArtefactType::ALL {
        let instance = c.graph.artefact(artefact);
        for &item in c.config.enabled_items(artefact) {
            if counts.get(&item).copied().unwrap_or(0) > 0 {
                continue;
            }
            let block_span = instance.and_then(|i| {
                i.item_blocks.iter().find(|b| b.item == item).map(|b| b.span.clone())
            });
            let (span, state) = match (block_span, instance) {
                (Some(span), _) => (span, "empty"),
                (None, Some(instance)) => (instance.header_span.clone(), "missing"),
                (None, None) => (
                    Span::point(c.config.manifest_file.clone(), Position::new(1, 1)),
                    "missing",
                ),
            };
            c.emit(
                codes::AMD020,
                format!(
                    "mandatory content item {} of the {} is {}",
                    item.display_name(),
                    artefact.display_name(),
                    state
                ),
                span,
            );
        }
    }
}

/// AMD081: service model content has no place in an embedded project.
fn check_service_model_profile(c: &mut Checker) {
    if c.config.domain_profile != DomainProfile::Embedded {
        return;
    }
    let blocks: Vec<Span> = c
        .graph
        .artefact(ArtefactType::Requirements)
        .map(|instance| {
            instance
                .item_blocks
                .iter()
                .filter(|b| b.item == ContentItemId::ServiceModel)
                .map(|b| b.span.clone())
                .collect()
        })
        .unwrap_or_default();
    for span in blocks {
        c.emit(
            codes::AMD081,
            "Service Model content is present, but the embedded domain profile excludes it"
                .to_string(),
            span,
        );
    }
}

fn check_element(c: &mut Checker, element: &ModelElement) {
    use ConceptKind::*;
    let fqn = &element.fqn;
    match element.kind {
        Actor => {
            if c.valid_targets(element, Relation::Realises, &[UserGroup, ExternalSystem]) == 0 {
                c.emit(
                    codes::AMD030,
                    format!("Actor `{fqn}` must realise a User Group or an External System"),
                    element.span.clone(),
                );
            }
        }
        DataObject => {
            if c.valid_targets(element, Relation::Realises, &[BusinessObject]) == 0 {
                c.emit(
                    codes::AMD031,
                    format!("Data Object `{fqn}` does not realise any Business Object"),
                    element.span.clone(),
                );
            }
        }
        ActorAction | SystemAction => {
            if c.valid_targets(element, Relation::Realises, &[ProcessStep]) == 0 {
                c.emit(
                    codes::AMD032,
                    format!(
                        "{} `{fqn}` does not realise any Process Step",
                        element.kind.display_name()
                    ),
                    element.span.clone(),
                );
            }
        }
        SystemFunction => {
            if c.valid_targets(element, Relation::Realises, &[SystemAction, UserVisibleFunction])
                == 0
            {
                c.emit(
                    codes::AMD033,
                    format!(
                        "System Function `{fqn}` must realise a System Action or a User-visible Function"
                    ),
                    element.span.clone(),
                );
            }
        }
        DataElement => {
            if c.valid_targets(element, Relation::Realises, &[DataObject]) == 0 {
                c.emit(
                    codes::AMD034,
                    format!("Data Element `{fqn}` must realise a Data Object"),
                    element.span.clone(),
                );
            }
        }
        State => {
            let embedded = matches!(
                c.config.domain_profile,
                DomainProfile::Embedded | DomainProfile::Both
            );
            if embedded && c.valid_targets(element, Relation::Realises, &[Mode]) == 0 {
                c.emit(
                    codes::AMD036,
                    format!("State `{fqn}` does not realise any Mode"),
                    element.span.clone(),
                );
            }
        }
        Interface => {
            if element.attr_bool("external") == Some(true) {
                let realised = c
                    .graph
                    .incoming(element.id)
                    .filter(|e| e.relation == Relation::Realises)
                    .any(|e| c.graph.element(e.source).kind == SystemInterface);
                if !realised {
                    c.emit(
                        codes::AMD037,
                        format!(
                            "external Interface `{fqn}` is not realised by any System Interface"
                        ),
                        element.span.clone(),
                    );
                }
            }
        }
        QualityRequirement => {
            if c.valid_targets(element, Relation::AssessedBy, &[Metric, NormativeReference]) == 0 {
                c.emit(
                    codes::AMD040,
                    format!(
                        "Quality Requirement `{fqn}` must be assessed by a Metric or a Normative Reference"
                    ),
                    element.span.clone(),
                );
            }
        }
        UsageGoal => {
            if c.valid_targets(element, Relation::RelatedTo, &[BusinessGoal]) == 0 {
                c.emit(
                    codes::AMD050,
                    format!("Usage Goal `{fqn}` must be related to a Business Goal"),
                    element.span.clone(),
                );
            }
        }
        SystemGoal => {
            if c.valid_targets(element, Relation::RelatedTo, &[UsageGoal]) == 0 {
                c.emit(
                    codes::AMD051,
                    format!("System Goal `{fqn}` must be related to a Usage Goal"),
                    element.span.clone(),
                );
            }
            if c.valid_targets(element, Relation::DemandsQualityAttribute, &[QualityAttribute])
                == 0
            {
                c.emit(
                    codes::AMD053,
                    format!("System Goal `{fqn}` does not demand any Quality Attribute"),
                    element.span.clone(),
                );
            }
        }
        UseCase => {
            let scenarios = c
                .graph
                .children_of(element.id)
                .iter()
                .filter(|&&child| c.graph.element(child).kind == FunctionalScenario)
                .count();
            if scenarios == 0 {
                c.emit(
                    codes::AMD060,
                    format!("Use Case `{fqn}` has no Functional Scenario"),
                    element.span.clone(),
                );
            }
        }
        FunctionalScenario => {
            let triggered = c
                .graph
                .incoming(element.id)
                .filter(|e| e.relation == Relation::Triggers)
                .any(|e| c.graph.element(e.source).kind == Event);
            if !triggered {
                c.emit(
                    codes::AMD061,
                    format!("Functional Scenario `{fqn}` is not triggered by any Event"),
                    element.span.clone(),
                );
            }
        }
        RequirementsRisk => {
            if c.valid_targets(element, Relation::CausedBy, &[RiskFactor]) == 0 {
                c.emit(
                    codes::AMD070,
                    format!("Requirements Risk `{fqn}` must be caused by a Risk Factor"),
                    element.span.clone(),
                );
            }
        }
        StateTransition => check_transition(c, element),
        _ => {}
    }

    // Goal issuance applies to all three concrete goal kinds.
    if matches!(element.kind, BusinessGoal | UsageGoal | SystemGoal)
        && c.valid_targets(element, Relation::IssuedBy, &[Stakeholder, UserGroup]) == 0
    {
        c.emit(
            codes::AMD054,
            format!(
                "{} `{fqn}` is not issued by any Stakeholder",
                element.kind.display_name()
            ),
            element.span.clone(),
        );
    }

    check_multiplicities(c, element);
}

/// AMD072: `from`/`to` of a transition must name sibling states.
fn check_transition(c: &mut Checker, element: &ModelElement) {
    let siblings: Vec<ElementId> = match element.parent {
        Some(parent) => c.graph.children_of(parent).to_vec(),
        None => c
            .graph
            .elements()
            .filter(|e| e.parent.is_none() && e.home_item == element.home_item)
            .map(|e| e.id)
            .collect(),
    };
    for attr in ["from", "to"] {
        match element.attr_text(attr) {
            Some(state_name) => {
                let found = siblings.iter().any(|&id| {
                    let sibling = c.graph.element(id);
                    sibling.kind == ConceptKind::State && sibling.name == state_name
                });
                if !found {
                    c.emit(
                        codes::AMD072,
                        format!(
                            "State Transition `{}` names `{attr}: {state_name}`, but no such State exists in its scope",
                            element.fqn
                        ),
                        element.span.clone(),
                    );
                }
            }
            None => {
                c.emit(
                    codes::AMD072,
                    format!("State Transition `{}` is missing its `{attr}` state", element.fqn),
                    element.span.clone(),
                );
            }
        }
    }
}

/// AMD084: upper bounds of realisation multiplicities.
fn check_multiplicities(c: &mut Checker, element: &ModelElement) {
    for relation in Relation::ALL {
        let Some(rule) = c.catalog.rule_for(element.kind, relation) else { continue };
        if rule.multiplicity.max() != Some(1) {
            continue;
        }
        let targets = rule.target_kinds.clone();
        let multiplicity = rule.multiplicity;
        let edges: Vec<Span> = c
            .graph
            .outgoing(element.id)
            .filter(|e| e.relation == relation)
            .filter(|e| targets.contains(&c.graph.element(e.target).kind))
            .map(|e| e.span.clone())
            .collect();
        if edges.len() > 1 {
            let first = edges[0].clone();
            if let Some(diag) = c.emit(
                codes::AMD084,
                format!(
                    "{} `{}` may take `{}` to {} target, but has {}",
                    element.kind.display_name(),
                    element.fqn,
                    relation.keyword(),
                    multiplicity.as_str(),
                    edges.len()
                ),
                edges[1].clone(),
            ) {
                diag.related.push(crate::diagnostics::RelatedNote {
                    span: first,
                    note: "first target here".to_string(),
                });
            }
        }
    }
}

/// AMD035 and AMD080: per-edge kind checks.
fn check_edges(c: &mut Checker) {
    let edges: Vec<ModelEdge> = c.graph.edges().to_vec();
    for edge in edges {
        if !c.is_active(edge.source) || !c.is_active(edge.target) {
            continue;
        }
        let source = c.graph.element(edge.source);
        let target = c.graph.element(edge.target);
        let source_fqn = source.fqn.clone();
        let source_kind = source.kind;
        let target_fqn = target.fqn.clone();
        let target_kind = target.kind;

        // A state realising the wrong thing has its own rule.
        if source_kind == ConceptKind::State
            && edge.relation == Relation::Realises
            && target_kind != ConceptKind::Mode
        {
            c.emit(
                codes::AMD035,
                format!(
                    "State `{source_fqn}` may only realise a Mode, but realises {} `{target_fqn}`",
                    target_kind.display_name()
                ),
                edge.span.clone(),
            );
            continue;
        }

        if c.catalog.relation_allowed(source_kind, edge.relation, target_kind).is_some() {
            continue;
        }
        let message = if edge.from_nesting {
            format!(
                "{} `{source_fqn}` may not be nested inside {} `{target_fqn}`",
                source_kind.display_name(),
                target_kind.display_name()
            )
        } else {
            match c.catalog.rule_for(source_kind, edge.relation) {
                Some(rule) => {
                    let allowed: Vec<&str> =
                        rule.target_kinds.iter().map(|k| k.display_name()).collect();
                    format!(
                        "`{}` from {} `{source_fqn}` must target {}; found {} `{target_fqn}`",
                        edge.relation.keyword(),
                        source_kind.display_name(),
                        allowed.join(" or "),
                        target_kind.display_name()
                    )
                }
                None => format!(
                    "{} `{source_fqn}` does not take part in `{}` relations (target was {} `{target_fqn}`)",
                    source_kind.display_name(),
                    edge.relation.keyword(),
                    target_kind.display_name()
                ),
            }
        };
        c.emit(codes::AMD080, message, edge.span.clone());
    }
}

fn is_goal_kind(kind: ConceptKind) -> bool {
    matches!(kind, ConceptKind::BusinessGoal | ConceptKind::UsageGoal | ConceptKind::SystemGoal)
}

/// AMD052: cycles over goal refinement, relation, and nesting edges.
fn check_goal_cycles(c: &mut Checker) {
    let nodes: Vec<ElementId> = c
        .graph
        .elements()
        .filter(|e| is_goal_kind(e.kind) && c.is_active(e.id))
        .map(|e| e.id)
        .collect();
    let edge_filter = |e: &ModelEdge, g: &ModelGraph| {
        matches!(e.relation, Relation::Refines | Relation::RelatedTo | Relation::Composes)
            && is_goal_kind(g.element(e.target).kind)
    };
    report_cycles(c, &nodes, edge_filter, codes::AMD052, "goal hierarchy");
}

/// AMD071: cycles over component decomposition edges.
fn check_component_cycles(c: &mut Checker) {
    let nodes: Vec<ElementId> = c
        .graph
        .elements()
        .filter(|e| e.kind == ConceptKind::Component && c.is_active(e.id))
        .map(|e| e.id)
        .collect();
    let edge_filter = |e: &ModelEdge, g: &ModelGraph| {
        e.relation == Relation::Composes && g.element(e.target).kind == ConceptKind::Component
    };
    report_cycles(c, &nodes, edge_filter, codes::AMD071, "component decomposition");
}

/// Reports one diagnostic per cyclic strongly connected component.
fn report_cycles(
    c: &mut Checker,
    nodes: &[ElementId],
    edge_filter: impl Fn(&ModelEdge, &ModelGraph) -> bool,
    code: &'static str,
    what: &str,
) {
    let node_set: HashSet<ElementId> = nodes.iter().copied().collect();
    let adjacency: HashMap<ElementId, Vec<ElementId>> = nodes
        .iter()
        .map(|&id| {
            let mut targets: Vec<ElementId> = c
                .graph
                .outgoing(id)
                .filter(|e| edge_filter(e, c.graph) && node_set.contains(&e.target))
                .map(|e| e.target)
                .collect();
            targets.sort();
            targets.dedup();
            (id, targets)
        })
        .collect();

    for scc in cyclic_components(nodes, &adjacency) {
        let members: Vec<&ModelElement> =
            scc.iter().map(|&id| c.graph.element(id)).collect();
        let anchor = members.iter().min_by_key(|e| e.id).unwrap();
        let mut names: Vec<&str> = members.iter().map(|e| e.fqn.as_str()).collect();
        names.sort();
        let span = anchor.span.clone();
        let related: Vec<(Span, String)> = members
            .iter()
            .filter(|e| e.id != anchor.id)
            .map(|e| (e.span.clone(), format!("`{}` takes part in the cycle", e.fqn)))
            .collect();
        if let Some(diag) = c.emit(
            code,
            format!("cycle in the {what}: {}", names.join(" -> ")),
            span,
        ) {
            for (span, note) in related {
                diag.related.push(crate::diagnostics::RelatedNote { span, note });
            }
        }
    }
}

/// Tarjan's algorithm, iterative; returns components that contain a cycle.
fn cyclic_components(
    nodes: &[ElementId],
    adjacency: &HashMap<ElementId, Vec<ElementId>>,
) -> Vec<Vec<ElementId>> {
    #[derive(Default, Clone)]
    struct NodeState {
        index: Option<u32>,
        lowlink: u32,
        on_stack: bool,
    }

    let mut states: HashMap<ElementId, NodeState> = HashMap::new();
    let mut stack: Vec<ElementId> = Vec::new();
    let mut next_index = 0u32;
    let mut result = Vec::new();

    for &root in nodes {
        if states.get(&root).and_then(|s| s.index).is_some() {
            continue;
        }
        // Explicit DFS stack of (node, next child position).
        let mut work: Vec<(ElementId, usize)> = vec![(root, 0)];
        while let Some(&mut (node, ref mut child_pos)) = work.last_mut() {
            if *child_pos == 0 {
                let state = states.entry(node).or_default();
                if state.index.is_none() {
                    state.index = Some(next_index);
                    state.lowlink = next_index;
                    state.on_stack = true;
                    next_index += 1;
                    stack.push(node);
                }
            }
            let children = adjacency.get(&node).map(|v| v.as_slice()).unwrap_or(&[]);
            if *child_pos < children.len() {
                let child = children[*child_pos];
                *child_pos += 1;
                let child_state = states.entry(child).or_default().clone();
                match child_state.index {
                    None => work.push((child, 0)),
                    Some(child_index) => {
                        if child_state.on_stack {
                            let node_state = states.get_mut(&node).unwrap();
                            node_state.lowlink = node_state.lowlink.min(child_index);
                        }
                    }
                }
            } else {
                work.pop();
                let node_state = states.get(&node).unwrap().clone();
                if let Some(&(parent, _)) = work.last() {
                    let parent_state = states.get_mut(&parent).unwrap();
                    parent_state.lowlink = parent_state.lowlink.min(node_state.lowlink);
                }
                if node_state.index == Some(node_state.lowlink) {
                    let mut component = Vec::new();
                    while let Some(member) = stack.pop() {
                        states.get_mut(&member).unwrap().on_stack = false;
                        component.push(member);
                        if member == node {
                            break;
                        }
                    }
                    let is_cycle = component.len() > 1
                        || adjacency
                            .get(&node)
                            .is_some_and(|targets| targets.contains(&node));
                    if is_cycle {
                        component.sort();
                        result.push(component);
                    }
                }
            }
        }
    }
    result.sort_by_key(|component| component[0]);
    result
}

/// AMD041: every quality requirement should be the target of a generic
/// scenario that satisfies a goal reachable from some system goal.
fn check_quality_goal_connection(c: &mut Checker) {
    // Goals reachable from any system goal over `related-to` edges.
    let mut reachable: HashSet<ElementId> = c
        .graph
        .elements()
        .filter(|e| e.kind == ConceptKind::SystemGoal && c.is_active(e.id))
        .map(|e| e.id)
        .collect();
    let mut frontier: Vec<ElementId> = reachable.iter().copied().collect();
    frontier.sort();
    while let Some(id) = frontier.pop() {
        for edge in c.graph.outgoing(id) {
            if edge.relation == Relation::RelatedTo
                && is_goal_kind(c.graph.element(edge.target).kind)
                && reachable.insert(edge.target)
            {
                frontier.push(edge.target);
            }
        }
    }

    let mut connected_requirements: HashSet<ElementId> = HashSet::new();
    for scenario in c.graph.elements().filter(|e| e.kind == ConceptKind::GenericScenario) {
        let satisfies: Vec<&ModelEdge> = c
            .graph
            .outgoing(scenario.id)
            .filter(|e| e.relation == Relation::Satisfies)
            .collect();
        let goal_connected = satisfies.iter().any(|e| reachable.contains(&e.target));
        if goal_connected {
            for edge in satisfies {
                if c.graph.element(edge.target).kind == ConceptKind::QualityRequirement {
                    connected_requirements.insert(edge.target);
                }
            }
        }
    }

    let requirements: Vec<(ElementId, String, Span)> = c
        .graph
        .elements()
        .filter(|e| e.kind == ConceptKind::QualityRequirement && c.is_active(e.id))
        .map(|e| (e.id, e.fqn.clone(), e.span.clone()))
        .collect();
    for (id, fqn, span) in requirements {
        if !connected_requirements.contains(&id) {
            c.emit(
                codes::AMD041,
                format!(
                    "Quality Requirement `{fqn}` is not reachable from any System Goal via a Generic Scenario"
                ),
                span,
            );
        }
    }
}

/// AMD091 (opt-in): abbreviations used in titles should be glossary terms.
fn check_glossary_coverage(c: &mut Checker) {
    if effective_severity(c.config, codes::AMD091).is_none() {
        return;
    }
    let mut terms: HashSet<String> = HashSet::new();
    for term in c.graph.elements().filter(|e| e.kind == ConceptKind::Term) {
        terms.insert(term.name.to_lowercase());
        if let Some(abbreviation) = term.attr_text("abbreviation") {
            terms.insert(abbreviation.to_lowercase());
        }
    }
    let candidates: Vec<(String, String, Span)> = c
        .graph
        .elements()
        .filter(|e| e.kind != ConceptKind::Term && c.is_active(e.id))
        .filter_map(|e| e.title.as_ref().map(|t| (t.clone(), e.fqn.clone(), e.span.clone())))
        .collect();
    for (title, fqn, span) in candidates {
        let mut seen: HashSet<String> = HashSet::new();
        for word in title.split(|ch: char| !ch.is_ascii_alphanumeric()) {
            let is_abbreviation = word.len() >= 2
                && word.chars().all(|ch| ch.is_ascii_uppercase() || ch.is_ascii_digit())
                && word.chars().any(|ch| ch.is_ascii_uppercase());
            if !is_abbreviation || !seen.insert(word.to_string()) {
                continue;
            }
            if !terms.contains(&word.to_lowercase()) {
                c.emit(
                    codes::AMD091,
                    format!("title of `{fqn}` uses `{word}`, which is not defined in the Glossary"),
                    span.clone(),
                );
            }
        }
    }
}
