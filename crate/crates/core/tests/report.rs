use c4_blowup::graph::BaseGraph;
use c4_blowup::verify::{flags, run_verify, FamilyChoice, Flag, MethodChoice, RunConfig, VerificationReport};

#[test]
fn json_round_trip() {
    let report = run_verify(&BaseGraph::Theta222, &RunConfig::new(FamilyChoice::Theta222, 1)).unwrap();
    let text = report.to_json();
    let back = VerificationReport::from_json(&text).unwrap();
    assert_eq!(back, report);

    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["family", "config", "levels", "findings", "meta"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
    let level1 = &value["levels"][1];
    assert_eq!(level1["N"], 1);
    assert_eq!(level1["T_enum"], "2886");
    assert_eq!(level1["T_diagonal"], "2886");
    assert_eq!(level1["T_recurrence"], "2886");
    assert_eq!(level1["T_closed_derived"], "2886");
    assert_eq!(level1["non_edges_graph"], "120");
    assert_eq!(level1["breakdown"]["all_blob_term"], "1875");
    assert_eq!(value["levels"][0]["T_closed_stated"], "-150/1240");
    assert!(chrono_like(value["meta"]["timestamp"].as_str().unwrap()));
}

fn chrono_like(ts: &str) -> bool {
    ts.len() >= 20 && ts.as_bytes()[4] == b'-' && ts.contains('T')
}

#[test]
fn worker_count_does_not_change_outcome() {
    let mut cfg = RunConfig::new(FamilyChoice::C4, 2);
    cfg.workers = 1;
    let a = run_verify(&BaseGraph::C4, &cfg).unwrap();
    cfg.workers = 3;
    let b = run_verify(&BaseGraph::C4, &cfg).unwrap();
    for (x, y) in a.levels.iter().zip(&b.levels) {
        assert_eq!(x.t_enum, y.t_enum);
        assert_eq!(x.t_diagonal, y.t_diagonal);
        assert_eq!(x.match_flags, y.match_flags);
    }
    assert_eq!(a.findings, b.findings);
}

#[test]
fn c4_two_levels_all_checks_match() {
    let report = run_verify(&BaseGraph::C4, &RunConfig::new(FamilyChoice::C4, 2)).unwrap();
    assert!(report.passed());
    for level in &report.levels {
        for name in [flags::NON_EDGES, flags::EDGES, flags::ENUM_VS_DIAGONAL, flags::RECURRENCE_VS_ORACLE,
                     flags::PARTIAL_SUMS, flags::DERIVED_VS_RECURRENCE, flags::DERIVED_VS_ORACLE] {
            assert_eq!(level.flag(name), Some(&Flag::Match), "N={} {name}", level.level);
        }
        assert_eq!(level.flag(flags::STATED_VS_RECURRENCE), Some(&Flag::Mismatch));
    }
    let table = report.summary_table();
    assert!(table.contains("114512"));
    assert!(table.contains("result: PASS"));
}

#[test]
fn method_selection() {
    let mut cfg = RunConfig::new(FamilyChoice::C4, 1);
    cfg.methods = MethodChoice::Enum;
    let report = run_verify(&BaseGraph::C4, &cfg).unwrap();
    assert_eq!(report.levels[1].t_diagonal.to_string(), "skipped: not requested");
    assert_eq!(
        report.levels[1].flag(flags::ENUM_VS_DIAGONAL),
        Some(&Flag::Skipped("not requested".into()))
    );
    assert_eq!(report.levels[1].flag(flags::DERIVED_VS_ORACLE), Some(&Flag::Match));
}

#[test]
fn tampered_report_fails() {
    let report = run_verify(&BaseGraph::C4, &RunConfig::new(FamilyChoice::C4, 1)).unwrap();
    let mut broken = report.clone();
    broken.levels[1]
        .match_flags
        .insert(flags::DERIVED_VS_ORACLE.to_owned(), Flag::Mismatch);
    assert!(!broken.passed());
    assert_eq!(broken.exit_code(), 1);
    assert!(broken.summary_table().contains("FAIL"));
}
