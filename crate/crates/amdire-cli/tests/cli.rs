//! End-to-end tests of the `amdire` binary: exit codes, output formats, and
//! the init/check/tailor/trace/render/stats flows.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_amdire"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../amdire-core/tests/fixtures")
        .join(name)
}

fn run(args: &[&str], project: &Path) -> Output {
    bin()
        .args(args)
        .arg("--project")
        .arg(project)
        .env("AMDIRE_NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn copy_fixture(name: &str, into: &Path) {
    for entry in std::fs::read_dir(fixture(name)).unwrap() {
        let entry = entry.unwrap();
        std::fs::copy(entry.path(), into.join(entry.file_name())).unwrap();
    }
}

#[test]
fn check_clean_fixture_exits_zero() {
    let output = run(&["check"], &fixture("atm"));
    assert_eq!(output.status.code(), Some(0), "{}", stdout(&output));
    assert!(stdout(&output).contains("0 error(s), 0 warning(s), 0 info(s)"));
}

#[test]
fn check_mutated_fixture_exits_one_with_amd033() {
    let dir = tempfile::tempdir().unwrap();
    copy_fixture("atm", dir.path());
    let system = dir.path().join("system.ardl");
    let text = std::fs::read_to_string(&system).unwrap();
    std::fs::write(&system, text.replace("realises atm.requirements.WithdrawCashFunction\n", ""))
        .unwrap();

    let output = run(&["check"], dir.path());
    assert_eq!(output.status.code(), Some(1));
    let text = stdout(&output);
    assert!(text.contains("error[AMD033]"), "{text}");
    assert!(text.contains("system.ardl:"), "{text}");
}

#[test]
fn check_json_is_byte_identical_across_runs() {
    let first = run(&["check", "--format", "json"], &fixture("atm"));
    let second = run(&["check", "--format", "json"], &fixture("atm"));
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let value: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(value["version"], 1);
    assert_eq!(value["summary"]["error"], 0);
}

#[test]
fn init_then_check_exits_one_then_stats_shows_empty_project() {
    let dir = tempfile::tempdir().unwrap();
    let init = run(&["init", "--name", "demo"], dir.path());
    assert_eq!(init.status.code(), Some(0), "{:?}", init);

    // Mandatory items exist but are empty, so check finds errors — never a
    // usage failure.
    let check = run(&["check"], dir.path());
    assert_eq!(check.status.code(), Some(1));
    assert!(stdout(&check).contains("[AMD020]"));

    let stats = run(&["stats"], dir.path());
    assert_eq!(stats.status.code(), Some(0));
    let text = stdout(&stats);
    assert!(text.contains("artefact types: 3"), "{text}");
    assert!(text.contains("elements: 0"), "{text}");

    // A second init must refuse to overwrite.
    let again = run(&["init", "--name", "demo"], dir.path());
    assert_eq!(again.status.code(), Some(2));
}

#[test]
fn tailor_lists_nine_requirements_items_for_embedded() {
    let output = run(&["tailor"], &fixture("atm_embedded"));
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("Requirements Specification (9 items)"), "{text}");
    assert!(!text.contains("ServiceModel"), "{text}");
}

#[test]
fn tailor_reports_situation_decisions() {
    let dir = tempfile::tempdir().unwrap();
    copy_fixture("atm", dir.path());
    let manifest = dir.path().join("amdire-project.txt");
    let mut text = std::fs::read_to_string(&manifest).unwrap();
    text.push_str("tailoring: tailoring.txt\n");
    std::fs::write(&manifest, text).unwrap();
    std::fs::write(
        dir.path().join("tailoring.txt"),
        "level: project\nfactor safety_critical: yes\n",
    )
    .unwrap();

    let output = run(&["tailor"], dir.path());
    let text = stdout(&output);
    assert!(text.contains("safety_critical=yes -> RiskList"), "{text}");
    assert!(text.contains("safety_critical=yes -> QualityRequirements"), "{text}");
}

#[test]
fn trace_prints_full_coverage_table() {
    let output =
        run(&["trace", "--from", "DataElement", "--to", "DataObject"], &fixture("atm"));
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("coverage: 2/2 (100.0%)"), "{text}");
}

#[test]
fn trace_rejects_invalid_pair_with_usage_error() {
    let output = run(&["trace", "--from", "Actor", "--to", "Component"], &fixture("atm"));
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("User Group"), "{stderr}");
}

#[test]
fn render_writes_markdown_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("requirements.md");
    let output = run(
        &[
            "render",
            "--artefact",
            "requirements",
            "--format",
            "markdown",
            "--out",
            out.to_str().unwrap(),
        ],
        &fixture("atm"),
    );
    assert_eq!(output.status.code(), Some(0));
    let body = std::fs::read_to_string(&out).unwrap();
    assert!(body.contains("## System Vision"));
    assert!(body.contains("**Withdrawal**"));
}

#[test]
fn render_ardl_to_stdout_reparses() {
    let output = run(&["render", "--artefact", "context", "--format", "ardl"], &fixture("atm"));
    assert_eq!(output.status.code(), Some(0));
    let body = stdout(&output);
    assert!(body.starts_with("context-specification \"ATM Context\" {"));
}

#[test]
fn unknown_flag_exits_two() {
    let output = bin().arg("check").arg("--frobnicate").output().unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn missing_manifest_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&["check"], dir.path());
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("amdire-project.txt"), "{stderr}");
}

#[test]
fn rules_lists_the_realisation_rule() {
    let output = bin().arg("rules").output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("AMD033"), "{text}");
    assert!(text.contains("4.2.1"), "{text}");
}
