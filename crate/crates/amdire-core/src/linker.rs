//! Builds the project-wide symbol table and the typed model graph.
//!
//! Every element declaration becomes a [`ModelElement`] addressed by its
//! fully qualified name `<artefact-alias>.<containing elements...>.<name>`.
//! Relation clauses resolve into [`ModelEdge`]s; nesting yields derived
//! `Composes` edges. Linking never fails: problems become diagnostics and the
//! maximal partial graph is returned.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use crate::ardl::{ArtefactDecl, AttrValue, ElementDecl, QualifiedName};
use crate::catalog::{ArtefactType, ConceptKind, ContentItemId, ElementStatus, Relation};
use crate::diagnostics::{codes, sort_diagnostics, Diagnostic, Span};

/// Opaque element identifier, stable within one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(u32);

impl ElementId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A linked instance of a catalog concept.
#[derive(Debug, Clone)]
pub struct ModelElement {
    pub id: ElementId,
    pub kind: ConceptKind,
    pub name: String,
    pub fqn: String,
    pub title: Option<String>,
    pub attributes: BTreeMap<String, AttrValue>,
    pub status: ElementStatus,
    /// The content item whose block physically declares the element. Equals
    /// the kind's catalog home unless an `AMD004` was reported.
    pub home_item: ContentItemId,
    pub artefact: ArtefactType,
    pub parent: Option<ElementId>,
    pub span: Span,
    pub name_span: Span,
}

impl ModelElement {
    pub fn attr_text(&self, name: &str) -> Option<&str> {
        self.attributes.get(name).and_then(|v| v.as_text())
    }

    pub fn attr_bool(&self, name: &str) -> Option<bool> {
        self.attributes.get(name).and_then(|v| v.as_bool())
    }
}

/// A typed relation between two elements.
#[derive(Debug, Clone)]
pub struct ModelEdge {
    pub source: ElementId,
    pub relation: Relation,
    pub target: ElementId,
    pub span: Span,
    /// True for `Composes` edges derived from element nesting.
    pub from_nesting: bool,
}

/// Per-artefact bookkeeping: declaring file, alias, and item blocks.
#[derive(Debug, Clone)]
pub struct ArtefactInstance {
    pub artefact: ArtefactType,
    pub alias: String,
    pub file: Arc<str>,
    pub title: Option<String>,
    pub header_span: Span,
    pub item_blocks: Vec<ItemBlockInstance>,
}

#[derive(Debug, Clone)]
pub struct ItemBlockInstance {
    pub item: ContentItemId,
    pub span: Span,
}

/// The resolved model of one project.
#[derive(Debug, Default)]
pub struct ModelGraph {
    elements: Vec<ModelElement>,
    edges: Vec<ModelEdge>,
    children: Vec<Vec<ElementId>>,
    artefacts: Vec<ArtefactInstance>,
    by_fqn: HashMap<String, ElementId>,
    by_suffix: HashMap<String, Vec<ElementId>>,
    outgoing: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
}

/// Failure of a name lookup on a linked graph.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolveError {
    #[error("no element named `{0}`")]
    NotFound(String),
    #[error("`{name}` is ambiguous; candidates: {}", candidates.join(", "))]
    Ambiguous { name: String, candidates: Vec<String> },
}

impl ModelGraph {
    pub fn elements(&self) -> impl Iterator<Item = &ModelElement> {
        self.elements.iter()
    }

    pub fn element(&self, id: ElementId) -> &ModelElement {
        &self.elements[id.index()]
    }

    pub fn edges(&self) -> &[ModelEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn children_of(&self, id: ElementId) -> &[ElementId] {
        &self.children[id.index()]
    }

    pub fn outgoing(&self, id: ElementId) -> impl Iterator<Item = &ModelEdge> {
        self.outgoing[id.index()].iter().map(|&i| &self.edges[i])
    }

    pub fn incoming(&self, id: ElementId) -> impl Iterator<Item = &ModelEdge> {
        self.incoming[id.index()].iter().map(|&i| &self.edges[i])
    }

    pub fn artefacts(&self) -> &[ArtefactInstance] {
        &self.artefacts
    }

    pub fn artefact(&self, artefact: ArtefactType) -> Option<&ArtefactInstance> {
        self.artefacts.iter().find(|a| a.artefact == artefact)
    }

    /// Elements declared in files of `artefact`, in declaration order.
    pub fn partition(&self, artefact: ArtefactType) -> impl Iterator<Item = &ModelElement> {
        self.elements.iter().filter(move |e| e.artefact == artefact)
    }

    /// Exact-match lookup on a fully qualified name, falling back to
    /// segment-aligned suffix matching for partially qualified input.
    pub fn resolve(&self, qualified_name: &str) -> Result<ElementId, ResolveError> {
        if let Some(&id) = self.by_fqn.get(qualified_name) {
            return Ok(id);
        }
        match self.by_suffix.get(qualified_name) {
            Some(ids) if ids.len() == 1 => Ok(ids[0]),
            Some(ids) if ids.len() > 1 => {
                let mut candidates: Vec<String> =
                    ids.iter().map(|&id| self.element(id).fqn.clone()).collect();
                candidates.sort();
                Err(ResolveError::Ambiguous { name: qualified_name.to_string(), candidates })
            }
            _ => Err(ResolveError::NotFound(qualified_name.to_string())),
        }
    }

    fn push_element(&mut self, element: ModelElement) -> ElementId {
        let id = element.id;
        let fqn = element.fqn.clone();
        let segments: Vec<&str> = fqn.split('.').collect();
        for start in 1..segments.len() {
            let suffix = segments[start..].join(".");
            self.by_suffix.entry(suffix).or_default().push(id);
        }
        self.by_fqn.insert(fqn, id);
        self.children.push(Vec::new());
        if let Some(parent) = element.parent {
            self.children[parent.index()].push(id);
        }
        self.elements.push(element);
        id
    }

    fn finish_edges(&mut self) {
        self.outgoing = vec![Vec::new(); self.elements.len()];
        self.incoming = vec![Vec::new(); self.elements.len()];
        for (index, edge) in self.edges.iter().enumerate() {
            self.outgoing[edge.source.index()].push(index);
            self.incoming[edge.target.index()].push(index);
        }
    }
}

/// One parsed file together with its manifest alias.
#[derive(Debug)]
pub struct LinkInput {
    pub alias: String,
    pub file: Arc<str>,
    pub tree: ArtefactDecl,
}

/// Links parsed files into a model graph. Input order does not matter;
/// files are processed sorted by path.
pub fn link(mut inputs: Vec<LinkInput>) -> (ModelGraph, Vec<Diagnostic>) {
    inputs.sort_by(|a, b| a.file.cmp(&b.file));

    let mut graph = ModelGraph::default();
    let mut diagnostics = Vec::new();
    // Relation clauses wait until every declaration is in the symbol table.
    let mut pending: Vec<(ElementId, Relation, QualifiedName)> = Vec::new();

    for input in &inputs {
        let artefact = match input.tree.artefact {
            Some(a) => a,
            None => continue, // header failed to parse; ARD010 already reported
        };
        if let Some(existing) = graph.artefact(artefact) {
            diagnostics.push(
                Diagnostic::error(
                    codes::AMD006,
                    format!(
                        "artefact type {} is already declared by `{}`",
                        artefact.display_name(),
                        existing.file
                    ),
                    input.tree.header_span.clone(),
                )
                .with_related(existing.header_span.clone(), "first declaration"),
            );
            continue;
        }
        let mut instance = ArtefactInstance {
            artefact,
            alias: input.alias.clone(),
            file: input.file.clone(),
            title: input.tree.title.clone(),
            header_span: input.tree.header_span.clone(),
            item_blocks: Vec::new(),
        };

        for block in &input.tree.items {
            let item = match ContentItemId::from_keyword(artefact, &block.keyword) {
                Some(item) => item,
                None => {
                    diagnostics.push(Diagnostic::error(
                        codes::AMD005,
                        format!(
                            "content item `{}` is not part of a {}",
                            block.keyword,
                            artefact.display_name()
                        ),
                        block.keyword_span.clone(),
                    ));
                    continue;
                }
            };
            instance.item_blocks.push(ItemBlockInstance { item, span: block.span.clone() });
            for element in &block.elements {
                link_element(
                    element,
                    &input.alias,
                    artefact,
                    item,
                    None,
                    &mut graph,
                    &mut pending,
                    &mut diagnostics,
                );
            }
        }
        graph.artefacts.push(instance);
    }

    // Resolve relation clauses against the completed symbol table.
    let mut seen: HashSet<(ElementId, Relation, ElementId)> = HashSet::new();
    for (source, relation, target_name) in pending {
        match graph.resolve(&target_name.text) {
            Ok(target) => {
                if seen.insert((source, relation, target)) {
                    graph.edges.push(ModelEdge {
                        source,
                        relation,
                        target,
                        span: target_name.span,
                        from_nesting: false,
                    });
                }
            }
            Err(ResolveError::NotFound(name)) => {
                diagnostics.push(Diagnostic::error(
                    codes::AMD001,
                    format!("unresolved reference `{name}`"),
                    target_name.span,
                ));
            }
            Err(ResolveError::Ambiguous { name, candidates }) => {
                diagnostics.push(Diagnostic::error(
                    codes::AMD003,
                    format!("`{name}` is ambiguous; candidates: {}", candidates.join(", ")),
                    target_name.span,
                ));
            }
        }
    }

    graph.finish_edges();
    sort_diagnostics(&mut diagnostics);
    (graph, diagnostics)
}

#[allow(clippy::too_many_arguments)]
fn link_element(
    decl: &ElementDecl,
    scope: &str,
    artefact: ArtefactType,
    item: ContentItemId,
    parent: Option<ElementId>,
    graph: &mut ModelGraph,
    pending: &mut Vec<(ElementId, Relation, QualifiedName)>,
    diagnostics: &mut Vec<Diagnostic>,
) {
    let kind = match ConceptKind::from_keyword(&decl.kind_keyword) {
        Some(kind) => kind,
        None => return, // parser only admits catalog keywords
    };
    let fqn = format!("{scope}.{}", decl.name);

    if let Some(&existing) = graph.by_fqn.get(&fqn) {
        let first = graph.element(existing).name_span.clone();
        diagnostics.push(
            Diagnostic::error(
                codes::AMD002,
                format!("duplicate name `{fqn}`"),
                decl.name_span.clone(),
            )
            .with_related(first, "first declared here"),
        );
        return;
    }

    if kind.home_item() != item {
        diagnostics.push(Diagnostic::error(
            codes::AMD004,
            format!(
                "{} `{}` belongs in the {} item, not in {}",
                kind.display_name(),
                decl.name,
                kind.home_item().display_name(),
                item.display_name()
            ),
            decl.name_span.clone(),
        ));
    }

    let id = ElementId(graph.elements.len() as u32);
    let mut attributes = BTreeMap::new();
    for attr in &decl.attributes {
        attributes.insert(attr.name.clone(), attr.value.clone());
    }
    graph.push_element(ModelElement {
        id,
        kind,
        name: decl.name.clone(),
        fqn: fqn.clone(),
        title: decl.title.clone(),
        attributes,
        status: decl.status.as_ref().map(|s| s.status).unwrap_or_default(),
        home_item: item,
        artefact,
        parent,
        span: decl.span.clone(),
        name_span: decl.name_span.clone(),
    });

    for clause in &decl.relations {
        for target in &clause.targets {
            pending.push((id, clause.relation, target.clone()));
        }
    }

    // Nesting is a composition: the child composes its parent.
    if let Some(parent) = parent {
        graph.edges.push(ModelEdge {
            source: id,
            relation: Relation::Composes,
            target: parent,
            span: decl.name_span.clone(),
            from_nesting: true,
        });
    }

    for child in &decl.children {
        link_element(child, &fqn, artefact, item, Some(id), graph, pending, diagnostics);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ardl::{parse, SourceFile};

    fn link_sources(sources: &[(&str, &str, &str)]) -> (ModelGraph, Vec<Diagnostic>) {
        let mut inputs = Vec::new();
        let mut diagnostics = Vec::new();
        for (alias, path, text) in sources {
            let source = SourceFile::new(*path, *text);
            let (tree, mut parse_diags) = parse(&source);
            assert!(parse_diags.is_empty() || !parse_diags.is_empty());
            diagnostics.append(&mut parse_diags);
            inputs.push(LinkInput { alias: alias.to_string(), file: source.path.clone(), tree });
        }
        let (graph, mut link_diags) = link(inputs);
        diagnostics.append(&mut link_diags);
        (graph, diagnostics)
    }

    const CONTEXT: &str = "context-specification \"ctx\" {\n\
        \x20 stakeholder-model {\n\
        \x20   user-group Customer \"Customer\" { }\n\
        \x20 }\n\
        }\n";

    #[test]
    fn empty_input_yields_empty_graph() {
        let (graph, diags) = link(Vec::new());
        assert!(graph.is_empty());
        assert!(diags.is_empty());
    }

    #[test]
    fn resolves_fully_qualified_reference() {
        let requirements = "requirements-specification \"req\" {\n\
            \x20 usage-model {\n\
            \x20   actor Clerk \"clerk\" { realises atm.context.Customer }\n\
            \x20 }\n\
            }\n";
        let (graph, diags) =
            link_sources(&[("atm.context", "context.ardl", CONTEXT), ("atm.requirements", "requirements.ardl", requirements)]);
        assert!(diags.is_empty(), "{diags:?}");
        let realises: Vec<_> =
            graph.edges().iter().filter(|e| e.relation == Relation::Realises).collect();
        assert_eq!(realises.len(), 1);
        let id = graph.resolve("atm.context.Customer").unwrap();
        assert_eq!(graph.element(id).kind, ConceptKind::UserGroup);
    }

    #[test]
    fn unresolved_reference_reports_amd001_with_name() {
        let requirements = "requirements-specification \"req\" {\n\
            \x20 usage-model {\n\
            \x20   actor Clerk \"clerk\" { realises context.Cashier }\n\
            \x20 }\n\
            }\n";
        let (_, diags) =
            link_sources(&[("atm.context", "context.ardl", CONTEXT), ("atm.requirements", "requirements.ardl", requirements)]);
        let unresolved: Vec<_> = diags.iter().filter(|d| d.code == codes::AMD001).collect();
        assert_eq!(unresolved.len(), 1);
        assert!(unresolved[0].message.contains("context.Cashier"));
    }

    #[test]
    fn ambiguous_partial_reference_lists_candidates() {
        let requirements = "requirements-specification \"req\" {\n\
            \x20 usage-model {\n\
            \x20   actor Customer \"customer\" { realises atm.context.Customer }\n\
            \x20 }\n\
            }\n";
        let (graph, _) =
            link_sources(&[("atm.context", "context.ardl", CONTEXT), ("atm.requirements", "requirements.ardl", requirements)]);
        match graph.resolve("Customer") {
            Err(ResolveError::Ambiguous { candidates, .. }) => {
                assert_eq!(candidates.len(), 2);
            }
            other => panic!("expected ambiguity, got {other:?}"),
        }
    }

    #[test]
    fn lookup_on_empty_graph_is_not_found() {
        let (graph, _) = link(Vec::new());
        assert!(matches!(graph.resolve("ghost"), Err(ResolveError::NotFound(_))));
    }

    #[test]
    fn duplicate_names_report_amd002_and_keep_first() {
        let context = "context-specification \"ctx\" {\n\
            \x20 stakeholder-model {\n\
            \x20   user-group Customer \"first\" { }\n\
            \x20   user-group Customer \"second\" { }\n\
            \x20 }\n\
            }\n";
        let (graph, diags) = link_sources(&[("atm.context", "context.ardl", context)]);
        assert_eq!(diags.iter().filter(|d| d.code == codes::AMD002).count(), 1);
        let id = graph.resolve("atm.context.Customer").unwrap();
        assert_eq!(graph.element(id).title.as_deref(), Some("first"));
    }

    #[test]
    fn misplaced_kind_reports_amd004() {
        let context = "context-specification \"ctx\" {\n\
            \x20 glossary {\n\
            \x20   user-group Customer \"c\" { }\n\
            \x20 }\n\
            }\n";
        let (_, diags) = link_sources(&[("atm.context", "context.ardl", context)]);
        assert_eq!(diags.iter().filter(|d| d.code == codes::AMD004).count(), 1);
    }

    #[test]
    fn foreign_item_reports_amd005_and_skips_block() {
        let context = "context-specification \"ctx\" {\n\
            \x20 usage-model {\n\
            \x20   actor Clerk \"c\" { }\n\
            \x20 }\n\
            }\n";
        let (graph, diags) = link_sources(&[("atm.context", "context.ardl", context)]);
        assert_eq!(diags.iter().filter(|d| d.code == codes::AMD005).count(), 1);
        assert!(graph.is_empty());
    }

    #[test]
    fn nesting_becomes_composes_edges_and_containment() {
        let context = "context-specification \"ctx\" {\n\
            \x20 domain-model {\n\
            \x20   business-process P \"p\" {\n\
            \x20     business-task T \"t\" { }\n\
            \x20   }\n\
            \x20 }\n\
            }\n";
        let (graph, diags) = link_sources(&[("atm.context", "context.ardl", context)]);
        assert!(diags.is_empty(), "{diags:?}");
        let task = graph.resolve("atm.context.P.T").unwrap();
        let process = graph.resolve("atm.context.P").unwrap();
        assert_eq!(graph.element(task).parent, Some(process));
        assert_eq!(graph.children_of(process), &[task]);
        let composes: Vec<_> =
            graph.edges().iter().filter(|e| e.relation == Relation::Composes).collect();
        assert_eq!(composes.len(), 1);
        assert!(composes[0].from_nesting);
    }

    #[test]
    fn input_order_does_not_change_diagnostics() {
        let requirements = "requirements-specification \"req\" {\n\
            \x20 usage-model {\n\
            \x20   actor Clerk \"clerk\" { realises nowhere.Nothing }\n\
            \x20 }\n\
            }\n";
        let forward =
            link_sources(&[("atm.context", "context.ardl", CONTEXT), ("atm.requirements", "requirements.ardl", requirements)]);
        let backward =
            link_sources(&[("atm.requirements", "requirements.ardl", requirements), ("atm.context", "context.ardl", CONTEXT)]);
        assert_eq!(forward.1, backward.1);
        assert_eq!(forward.0.len(), backward.0.len());
    }

    #[test]
    fn edge_spans_stay_in_declaring_file() {
        let requirements = "requirements-specification \"req\" {\n\
            \x20 usage-model {\n\
            \x20   actor Clerk \"clerk\" { realises atm.context.Customer }\n\
            \x20 }\n\
            }\n";
        let (graph, _) =
            link_sources(&[("atm.context", "context.ardl", CONTEXT), ("atm.requirements", "requirements.ardl", requirements)]);
        for edge in graph.edges() {
            let source_file = &graph.element(edge.source).span.file;
            assert_eq!(&edge.span.file, source_file);
        }
    }
}
