//! Property tests: the frontend never panics or mis-positions diagnostics,
//! parsing is deterministic, and canonical rendering is idempotent for
//! arbitrary generated models.

mod common;

use proptest::prelude::*;

use amdire_core::ardl::{parse, tokenize, SourceFile};
use amdire_core::diagnostics::Position;
use amdire_core::pipeline::{analyze_project, InMemoryProject};

use common::assert_isomorphic;

/// Upper bound (line, column) positions of `text`, 1-based.
fn bounds(text: &str) -> Vec<u32> {
    let mut widths = Vec::new();
    let mut col = 0u32;
    for c in text.chars() {
        if c == '\n' {
            widths.push(col + 1);
            col = 0;
        } else {
            col += 1;
        }
    }
    widths.push(col + 1);
    widths
}

fn in_bounds(text: &str, pos: Position) -> bool {
    let widths = bounds(text);
    pos.line >= 1
        && (pos.line as usize) <= widths.len()
        && pos.col >= 1
        && pos.col <= widths[pos.line as usize - 1]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn tokenizer_covers_arbitrary_input(text in ".{0,200}") {
        let source = SourceFile::new("fuzz.ardl", text.clone());
        let (tokens, diags) = tokenize(&source);
        for token in &tokens {
            prop_assert!(in_bounds(&text, token.span.start), "{:?}", token.span);
            prop_assert!(in_bounds(&text, token.span.end), "{:?}", token.span);
            prop_assert!(token.span.start <= token.span.end);
        }
        for diag in &diags {
            prop_assert!(in_bounds(&text, diag.span.start), "{:?}", diag.span);
        }
    }

    #[test]
    fn parser_never_panics_and_positions_stay_in_bounds(text in ".{0,300}") {
        let source = SourceFile::new("fuzz.ardl", text.clone());
        let (_, diags) = parse(&source);
        for diag in &diags {
            prop_assert!(in_bounds(&text, diag.span.start), "{:?}", diag.span);
        }
    }

    #[test]
    fn parsing_is_deterministic(text in ".{0,300}") {
        let source = SourceFile::new("fuzz.ardl", text.clone());
        let (tree_a, diags_a) = parse(&source);
        let (tree_b, diags_b) = parse(&source);
        prop_assert_eq!(diags_a, diags_b);
        prop_assert_eq!(tree_a.items.len(), tree_b.items.len());
    }
}

/// A small generated project: glossary terms with arbitrary titles and
/// attributes, and a nested domain process tree. Names may collide, which
/// exercises duplicate handling before rendering.
fn generated_project() -> impl Strategy<Value = InMemoryProject> {
    const NAME: &str = "[A-Z][a-z0-9]{0,5}";
    const TITLE: &str = "[ -~]{0,24}";
    let term = (NAME, TITLE, proptest::option::of(TITLE)).prop_map(
        |(name, title, description)| {
            let mut body = format!("    term {name} \"{}\" {{\n", escape(&title));
            if let Some(description) = description {
                body.push_str(&format!("      description: \"{}\"\n", escape(&description)));
            }
            body.push_str("    }\n");
            body
        },
    );
    let step = (NAME, TITLE).prop_map(|(name, title)| {
        format!("        process-step {name} \"{}\" {{ status: defined }}\n", escape(&title))
    });
    let process = (NAME, TITLE, proptest::collection::vec(step, 0..4)).prop_map(
        |(name, title, steps)| {
            // Tasks keep the nesting legal: steps compose tasks.
            let mut body =
                format!("    business-process {name} \"{}\" {{\n      business-task T{name} \"task\" {{\n", escape(&title));
            for step in steps {
                body.push_str(&step);
            }
            body.push_str("      }\n    }\n");
            body
        },
    );
    (proptest::collection::vec(term, 0..6), proptest::collection::vec(process, 0..4)).prop_map(
        |(terms, processes)| {
            let mut context = String::from("context-specification \"Generated\" {\n");
            context.push_str("  glossary {\n");
            for term in terms {
                context.push_str(&term);
            }
            context.push_str("  }\n  domain-model {\n");
            for process in processes {
                context.push_str(&process);
            }
            context.push_str("  }\n}\n");
            let mut files = std::collections::BTreeMap::new();
            files.insert("context.ardl".to_string(), context);
            InMemoryProject {
                manifest: "name: generated\nalias gen.context: context.ardl\n".to_string(),
                files,
            }
        },
    )
}

fn escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_rendering_is_idempotent_for_generated_models(project in generated_project()) {
        use amdire_core::catalog::ArtefactType;
        use amdire_core::reporting::render_canonical;

        let catalog = amdire_core::load_catalog();
        let analysis = analyze_project(&project).unwrap();
        let once = render_canonical(&analysis.graph, catalog, &analysis.config, ArtefactType::Context);

        let mut rendered = project.clone();
        rendered.files.insert("context.ardl".to_string(), once.clone());
        let again = analyze_project(&rendered).unwrap();
        let twice = render_canonical(&again.graph, catalog, &again.config, ArtefactType::Context);

        prop_assert_eq!(&once, &twice, "canonical form must be stable");
        assert_isomorphic(&analysis.graph, &again.graph);
    }
}
