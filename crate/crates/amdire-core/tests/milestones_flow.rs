//! Milestone semantics over the ATM fixture: the status ladder, blocking
//! lists, monotonicity, and completeness arithmetic.

mod common;

use amdire_core::catalog::{ArtefactType, MilestoneId};
use amdire_core::milestones::{completeness, milestone_status, MilestoneStatus};
use amdire_core::pipeline::{analyze_project, InMemoryProject};

use common::{load_fixture, with_statuses};

fn statuses(project: &InMemoryProject) -> Vec<MilestoneStatus> {
    let analysis = analyze_project(project).unwrap();
    milestone_status(
        &analysis.graph,
        amdire_core::load_catalog(),
        &analysis.config,
        &analysis.diagnostics,
    )
}

fn reached(statuses: &[MilestoneStatus]) -> Vec<MilestoneId> {
    statuses.iter().filter(|s| s.reached).map(|s| s.milestone).collect()
}

fn by_id(statuses: &[MilestoneStatus], id: MilestoneId) -> &MilestoneStatus {
    statuses.iter().find(|s| s.milestone == id).unwrap()
}

#[test]
fn fully_agreed_fixture_reaches_all_six() {
    let all = statuses(&load_fixture("atm"));
    assert_eq!(all.len(), 6);
    assert_eq!(reached(&all).len(), 6);
}

#[test]
fn all_draft_reaches_nothing() {
    let project = with_statuses(&load_fixture("atm"), |_, _, _| Some("draft"));
    let all = statuses(&project);
    assert!(reached(&all).is_empty(), "{all:?}");
}

#[test]
fn defined_trigger_item_reaches_the_first_milestone() {
    // Definition suffices for the first milestone; agreement is for
    // finalisation.
    let project = with_statuses(&load_fixture("atm"), |_, item, _| {
        if item == "system-vision" {
            Some("defined")
        } else {
            Some("draft")
        }
    });
    let all = statuses(&project);
    assert_eq!(reached(&all), vec![MilestoneId::RsM1]);
}

#[test]
fn agreed_vision_with_drafted_rest_blocks_finalisation_on_the_items() {
    let project = with_statuses(&load_fixture("atm"), |path, item, _| {
        if path == "requirements.ardl" && item == "system-vision" {
            Some("agreed")
        } else {
            Some("draft")
        }
    });
    let all = statuses(&project);
    assert!(by_id(&all, MilestoneId::RsM1).reached);
    let final_milestone = by_id(&all, MilestoneId::RsM2);
    assert!(!final_milestone.reached);
    // Every drafted requirements item shows up as blocking.
    let blocked: Vec<&str> =
        final_milestone.blocking.iter().map(|(item, _)| item.keyword()).collect();
    for keyword in [
        "usage-model",
        "service-model",
        "data-model",
        "functional-hierarchy",
        "quality-requirements",
        "deployment-requirements",
        "system-constraints",
        "process-requirements",
        "risk-list",
    ] {
        assert!(blocked.contains(&keyword), "{keyword} missing from {blocked:?}");
    }
    assert!(!by_id(&all, MilestoneId::CsM1).reached);
}

#[test]
fn partially_agreed_vision_does_not_reach_the_first_milestone() {
    let mut flip = true;
    let project = with_statuses(&load_fixture("atm"), |path, item, _| {
        if path == "requirements.ardl" && item == "system-vision" {
            flip = !flip;
            Some(if flip { "agreed" } else { "draft" })
        } else {
            Some("draft")
        }
    });
    let all = statuses(&project);
    assert!(!by_id(&all, MilestoneId::RsM1).reached);
}

#[test]
fn raising_statuses_never_unflips_a_milestone() {
    // Climb the ladder in three monotone steps and watch the reached set.
    let fixture = load_fixture("atm");
    let ladder = [
        with_statuses(&fixture, |_, _, _| Some("draft")),
        with_statuses(&fixture, |_, _, _| Some("defined")),
        with_statuses(&fixture, |_, _, _| Some("agreed")),
    ];
    let mut previous: Vec<MilestoneId> = Vec::new();
    for step in &ladder {
        let now = reached(&statuses(step));
        for milestone in &previous {
            assert!(now.contains(milestone), "{milestone:?} was lost while raising statuses");
        }
        previous = now;
    }
    assert_eq!(previous.len(), 6);
}

#[test]
fn errors_in_the_trigger_item_block_the_first_milestone() {
    let mut project = load_fixture("atm");
    // Misplace an element inside the system vision: AMD004 is an error
    // located in that block.
    let requirements = project.files.get_mut("requirements.ardl").unwrap();
    *requirements = requirements.replace(
        "    use-case-overview MainUseCases",
        "    term Stray \"misplaced\" { status: agreed }\n    use-case-overview MainUseCases",
    );
    let all = statuses(&project);
    assert!(!by_id(&all, MilestoneId::RsM1).reached);
    assert!(!by_id(&all, MilestoneId::RsM2).reached);
    // Other artefacts are unaffected.
    assert!(by_id(&all, MilestoneId::CsM1).reached);
}

#[test]
fn finalisation_never_precedes_first_item() {
    // Try a handful of scripted states; the implication must hold in all.
    let fixture = load_fixture("atm");
    let scripted = [
        with_statuses(&fixture, |_, _, _| Some("draft")),
        with_statuses(&fixture, |_, item, _| {
            if item == "system-vision" { Some("draft") } else { Some("agreed") }
        }),
        with_statuses(&fixture, |path, _, _| {
            if path == "context.ardl" { Some("draft") } else { Some("agreed") }
        }),
        fixture.clone(),
    ];
    for project in &scripted {
        let all = statuses(project);
        for artefact in ArtefactType::ALL {
            let of_artefact: Vec<&MilestoneStatus> =
                all.iter().filter(|s| s.artefact == artefact).collect();
            let first = of_artefact[0];
            let last = of_artefact[1];
            assert!(
                !last.reached || first.reached,
                "{artefact:?}: finalised without first milestone"
            );
        }
    }
}

#[test]
fn completeness_counts_finished_items() {
    let fixture = load_fixture("atm");
    let analysis = analyze_project(&fixture).unwrap();
    let full = completeness(
        &analysis.graph,
        &analysis.config,
        &analysis.diagnostics,
        ArtefactType::Requirements,
    );
    assert_eq!(full.ratio, 1.0);
    assert_eq!(full.items.len(), 10);

    // Empty half of the requirements items: 5 of 10 complete. Only items
    // without inbound references are emptied, so nothing dangles.
    let mut project = fixture.clone();
    let requirements = project.files.get_mut("requirements.ardl").unwrap();
    let mut emptied = String::new();
    let halved = [
        ("  service-model {", "  }"),
        ("  risk-list {", "  }"),
        ("  deployment-requirements {", "  }"),
        ("  system-constraints {", "  }"),
        ("  process-requirements {", "  }"),
    ];
    let mut text = requirements.replace(", atm.requirements.CashWithdrawalService", "");
    for (start_marker, end_marker) in halved {
        let start = text.find(start_marker).unwrap();
        let end = text[start..].find(&format!("\n{end_marker}\n")).unwrap()
            + start
            + end_marker.len()
            + 2;
        emptied.clear();
        emptied.push_str(start_marker);
        emptied.push_str("\n  }\n");
        text.replace_range(start..end, &emptied);
    }
    *requirements = text;
    let analysis = analyze_project(&project).unwrap();
    let half = completeness(
        &analysis.graph,
        &analysis.config,
        &analysis.diagnostics,
        ArtefactType::Requirements,
    );
    assert_eq!(half.ratio, 0.5, "{:?}", half.items);
    // Adding error-free elements back never lowers the ratio.
    assert!(full.ratio >= half.ratio);
}
