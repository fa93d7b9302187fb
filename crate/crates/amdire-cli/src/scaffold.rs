//! Project scaffolding for `amdire init`.
//!
//! Skeletons are generated from the catalog, so catalog changes propagate
//! into fresh projects without touching templates.

use std::fmt::Write as _;
use std::path::Path;

use amdire_core::catalog::{ArtefactType, DomainProfile};
use amdire_core::pipeline::catalog;
use amdire_core::project::MANIFEST_FILE_NAME;

fn sanitize(name: &str) -> String {
    let mut out: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '_' || c == '-' { c } else { '_' })
        .collect();
    if out.is_empty() || out.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        out.insert(0, 'p');
    }
    out.to_lowercase()
}

/// Creates the manifest and one skeleton file per artefact type. Refuses to
/// overwrite an existing manifest.
pub fn init_project(dir: &Path, name: &str, profile: DomainProfile) -> Result<(), String> {
    let manifest_path = dir.join(MANIFEST_FILE_NAME);
    if manifest_path.exists() {
        return Err(format!("{} already exists", manifest_path.display()));
    }
    std::fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;

    let alias_base = sanitize(name);
    let catalog = catalog();

    let mut manifest = String::new();
    let _ = writeln!(manifest, "name: {name}");
    let _ = writeln!(manifest, "domain-profile: {profile}");
    for artefact in ArtefactType::ALL {
        let _ = writeln!(
            manifest,
            "alias {alias_base}.{}: {}.ardl",
            artefact.short_name(),
            artefact.short_name()
        );
    }
    write_new(&manifest_path, &manifest)?;

    for artefact in ArtefactType::ALL {
        let mut body = String::new();
        let _ = writeln!(body, "{} \"{name} {}\" {{", artefact.keyword(), artefact.display_name());
        for item in catalog.content_items_for(artefact, profile) {
            let def = catalog.content_item(item);
            let keywords: Vec<&str> =
                def.concept_elements.iter().filter_map(|k| k.keyword()).collect();
            let _ = writeln!(body, "  // {}: {}", def.display_name, keywords.join(", "));
            let _ = writeln!(body, "  {} {{", item.keyword());
            let _ = writeln!(body, "  }}");
        }
        body.push_str("}\n");
        write_new(&dir.join(format!("{}.ardl", artefact.short_name())), &body)?;
    }
    Ok(())
}

fn write_new(path: &Path, content: &str) -> Result<(), String> {
    if path.exists() {
        return Err(format!("{} already exists", path.display()));
    }
    std::fs::write(path, content).map_err(|e| format!("cannot write {}: {e}", path.display()))
}
