//! `amdire` — check, tailor, trace, and render AMDiRE projects.
//!
//! Exit codes: 0 when no error-severity diagnostics were found, 1 when
//! errors were found, 2 on usage or I/O failures. Diagnostics go to stdout,
//! logs and usage errors to stderr.

use std::io::{IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use amdire_core::catalog::{ArtefactType, DomainProfile};
use amdire_core::diagnostics::Severity;
use amdire_core::milestones::{completeness, milestone_status};
use amdire_core::pipeline::{analyze_dir, catalog, Analysis};
use amdire_core::reporting::{
    emit_human, emit_json, render_spec, trace_matrix, DocumentFormat,
};
use amdire_core::validator::list_rules;

mod scaffold;

#[derive(Parser)]
#[command(
    name = "amdire",
    version,
    about = "Author, validate, and render artefact-based requirements specifications"
)]
struct Cli {
    /// Project directory (containing amdire-project.txt).
    #[arg(long, global = true, default_value = ".")]
    project: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckFormat {
    Human,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TraceFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Markdown,
    Ardl,
}

#[derive(Clone, Copy, ValueEnum)]
enum ArtefactArg {
    Context,
    Requirements,
    System,
}

impl From<ArtefactArg> for ArtefactType {
    fn from(value: ArtefactArg) -> Self {
        match value {
            ArtefactArg::Context => ArtefactType::Context,
            ArtefactArg::Requirements => ArtefactType::Requirements,
            ArtefactArg::System => ArtefactType::System,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Bis,
    Embedded,
    Both,
}

impl From<ProfileArg> for DomainProfile {
    fn from(value: ProfileArg) -> Self {
        match value {
            ProfileArg::Bis => DomainProfile::Bis,
            ProfileArg::Embedded => DomainProfile::Embedded,
            ProfileArg::Both => DomainProfile::Both,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Scaffold a new project: manifest plus skeleton artefact files.
    Init {
        /// Project name; defaults to the directory name.
        #[arg(long)]
        name: Option<String>,
        /// Domain profile for the scaffold.
        #[arg(long, value_enum, default_value = "both")]
        profile: ProfileArg,
    },
    /// Parse, link, tailor, and validate; print diagnostics.
    Check {
        #[arg(long, value_enum, default_value = "human")]
        format: CheckFormat,
    },
    /// Print the effective content-item lists and tailoring decisions.
    Tailor,
    /// Print a traceability matrix between two concept kinds.
    Trace {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value = "table")]
        format: TraceFormat,
    },
    /// Render one artefact as markdown or canonical ARDL.
    Render {
        #[arg(long, value_enum)]
        artefact: ArtefactArg,
        #[arg(long, value_enum, default_value = "markdown")]
        format: RenderFormat,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print catalog and project statistics.
    Stats,
    /// List every rule with its code, severity, and anchor.
    Rules,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn color_enabled() -> bool {
    std::env::var_os("AMDIRE_NO_COLOR").is_none_or(|v| v != "1")
        && std::io::stdout().is_terminal()
}

fn load(project: &Path) -> Result<Analysis, String> {
    analyze_dir(project).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Init { name, profile } => {
            let name = match name {
                Some(name) => name,
                None => cli
                    .project
                    .canonicalize()
                    .ok()
                    .and_then(|p| p.file_name().map(|n| n.to_string_lossy().into_owned()))
                    .unwrap_or_else(|| "project".to_string()),
            };
            scaffold::init_project(&cli.project, &name, profile.into())?;
            eprintln!("initialised project `{name}` in {}", cli.project.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { format } => {
            let analysis = load(&cli.project)?;
            let disabled = analysis.config.disabled_rules();
            let output = match format {
                CheckFormat::Human => {
                    emit_human(&analysis.diagnostics, &disabled, color_enabled())
                }
                CheckFormat::Json => emit_json(&analysis.diagnostics, &disabled),
            };
            print!("{output}");
            Ok(if analysis.has_errors() { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Tailor => {
            let analysis = load(&cli.project)?;
            let config = &analysis.config;
            println!("domain profile: {}", config.domain_profile);
            for artefact in ArtefactType::ALL {
                let items = config.enabled_items(artefact);
                let names: Vec<&str> = items.iter().map(|i| i.qualified_ident()).collect();
                println!(
                    "{} ({} items): {}",
                    artefact.display_name(),
                    items.len(),
                    names.join(", ")
                );
            }
            for (item, justification) in &config.disabled {
                println!("disabled {}: \"{justification}\"", item.qualified_ident());
            }
            if config.decisions.is_empty() {
                println!("no situation-driven decisions");
            } else {
                println!("situation-driven decisions:");
                for decision in &config.decisions {
                    println!(
                        "  {}={} -> {}: {:?} ({})",
                        decision.factor,
                        if decision.value { "yes" } else { "no" },
                        decision.item.qualified_ident(),
                        decision.action,
                        decision.note
                    );
                }
            }
            Ok(if analysis.has_errors() { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Trace { from, to, format } => {
            let analysis = load(&cli.project)?;
            let catalog = catalog();
            let from_kind = catalog.kind_by_name(&from).map_err(|e| e.to_string())?;
            let to_kind = catalog.kind_by_name(&to).map_err(|e| e.to_string())?;
            let matrix = trace_matrix(&analysis.graph, catalog, from_kind, to_kind)
                .map_err(|e| e.to_string())?;
            match format {
                TraceFormat::Table => print!("{}", matrix.to_table()),
                TraceFormat::Json => print!("{}", matrix.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { artefact, format, out } => {
            let analysis = load(&cli.project)?;
            let format = match format {
                RenderFormat::Markdown => DocumentFormat::Markdown,
                RenderFormat::Ardl => DocumentFormat::Ardl,
            };
            let document = render_spec(
                &analysis.graph,
                catalog(),
                &analysis.config,
                &analysis.diagnostics,
                artefact.into(),
                format,
            );
            match out {
                Some(path) => {
                    let mut file = std::fs::File::create(&path)
                        .map_err(|e| format!("cannot write `{}`: {e}", path.display()))?;
                    file.write_all(document.body.as_bytes())
                        .map_err(|e| format!("cannot write `{}`: {e}", path.display()))?;
                    eprintln!("wrote {}", path.display());
                }
                None => print!("{}", document.body),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats => {
            let catalog = catalog();
            println!("catalog:");
            println!("  artefact types: {}", catalog.artefact_types.len());
            println!("  content items: {}", catalog.content_items.len());
            println!("  concept kinds: {}", catalog.concepts.len());
            println!("  relation rules: {}", catalog.relation_rules.len());
            println!("  roles: {}", catalog.roles.len());
            println!("  milestones: {}", catalog.milestones.len());
            let analysis = load(&cli.project)?;
            let errors = analysis.error_count();
            let warnings = analysis
                .diagnostics
                .iter()
                .filter(|d| d.severity == Severity::Warning)
                .count();
            println!("project: {}", analysis.config.name);
            println!("  files: {}", analysis.manifest.aliases.len());
            println!("  elements: {}", analysis.graph.len());
            println!("  edges: {}", analysis.graph.edges().len());
            println!("  diagnostics: {errors} error(s), {warnings} warning(s)");
            let statuses =
                milestone_status(&analysis.graph, catalog, &analysis.config, &analysis.diagnostics);
            let reached = statuses.iter().filter(|s| s.reached).count();
            println!("  milestones reached: {reached}/{}", statuses.len());
            for artefact in ArtefactType::ALL {
                let report =
                    completeness(&analysis.graph, &analysis.config, &analysis.diagnostics, artefact);
                println!("  completeness {}: {:.2}", artefact.short_name(), report.ratio);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rules => {
            for rule in list_rules() {
                println!(
                    "{} [{}] {} (scope: {}; anchor: {})",
                    rule.code, rule.default_severity, rule.title, rule.scope, rule.paper_anchor
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
