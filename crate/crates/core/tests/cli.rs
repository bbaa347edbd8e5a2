use std::path::PathBuf;

use bordyn::cli::{run, EXIT_BUDGET, EXIT_INPUT, EXIT_OK, EXIT_VERIFICATION};

fn scenario(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("scenarios")
        .join(name)
        .display()
        .to_string()
}

fn bordyn(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("bordyn").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn enumerate_lists_every_order() {
    for (m, rows) in [("3", 13), ("4", 75)] {
        let (code, out, _) = bordyn(&["enumerate", "-m", m]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), rows + 1);
    }
    let (_, out, _) = bordyn(&["enumerate", "-m", "3"]);
    assert_eq!(out.lines().nth(5).unwrap(), "4,(xyz),1/1 1/1 1/1,(xyz),6");
}

#[test]
fn enumerate_dot_has_one_vertex_per_order() {
    let (code, out, _) = bordyn(&["enumerate", "-m", "3", "--dot"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("graph H {"));
    assert_eq!(out.lines().filter(|l| l.contains("[label=")).count(), 13);
    assert_eq!(out.lines().filter(|l| l.contains(" -- ")).count(), 18);
}

#[test]
fn enumerate_rejects_unsupported_sizes() {
    for m in ["1", "7"] {
        let (code, _, err) = bordyn(&["enumerate", "-m", m]);
        assert_eq!(code, EXIT_INPUT, "{err}");
    }
}

#[test]
fn simulate_reports_periods() {
    for (file, mu, period) in [
        ("consensus.json", Some(0), 1),
        ("wave4.json", Some(0), 4),
        ("gadget.json", None, 2),
    ] {
        let (code, out, err) = bordyn(&["simulate", &scenario(file)]);
        assert_eq!(code, EXIT_OK, "{err}");
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["period"], period, "{file}");
        if let Some(mu) = mu {
            assert_eq!(doc["mu"], mu);
        }
    }
}

#[test]
fn simulate_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let report = dir.path().join("r.json");
    let (code, out, _) = bordyn(&[
        "simulate",
        &scenario("wave4.json"),
        "--csv",
        csv.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let csv = std::fs::read_to_string(csv).unwrap();
    assert_eq!(csv.lines().next().unwrap(), "time,n0,n1,n2,n3");
    assert_eq!(csv.lines().nth(1).unwrap(), "0,(xyz),x>(yz),x>y>z,(xy)>z");
    assert_eq!(csv.lines().count(), 5);
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(doc["min_margin"], "1/1");
}

#[test]
fn simulate_seed_override_changes_the_async_run() {
    let (_, a, _) = bordyn(&["simulate", &scenario("gadget_async.json"), "--csv", "-"]);
    let (_, b, _) = bordyn(&[
        "simulate",
        &scenario("gadget_async.json"),
        "--csv",
        "-",
        "--seed",
        "11",
    ]);
    assert_eq!(a, b);
    let outputs: std::collections::BTreeSet<String> = (0..8)
        .map(|s| {
            bordyn(&[
                "simulate",
                &scenario("gadget_async.json"),
                "--csv",
                "-",
                "--seed",
                &s.to_string(),
            ])
            .1
        })
        .collect();
    assert!(outputs.len() > 1);
}

#[test]
fn budget_exhaustion_has_its_own_code() {
    let (code, _, err) = bordyn(&[
        "simulate",
        &scenario("gadget_async.json"),
        "--max-steps",
        "2",
    ]);
    assert_eq!(code, EXIT_BUDGET);
    assert!(err.contains("budget"));
}

#[test]
fn parse_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let text = std::fs::read_to_string(scenario("gadget.json"))
        .unwrap()
        .replace("\"9/10\"", "\"0.9\"");
    std::fs::write(&path, text).unwrap();
    let (code, _, err) = bordyn(&["simulate", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("network.edges[0].weight"), "{err}");
    assert!(err.contains("bad.json"), "{err}");
}

#[test]
fn default_suite_passes() {
    let (code, out, err) = bordyn(&["verify", &scenario("default.suite.json")]);
    assert_eq!(code, EXIT_OK, "{err}");
    let results: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(results.len(), 10);
    assert!(results.iter().all(|r| r["outcome"]["passed"] == true));
}

#[test]
fn controls_fail_as_expected() {
    let (code, out, _) = bordyn(&["verify", &scenario("controls.suite.json")]);
    assert_eq!(code, EXIT_OK);
    let results: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
    for r in &results {
        assert_eq!(r["as_expected"], true);
        assert_eq!(r["outcome"]["passed"], false);
        assert_eq!(r["outcome"]["counterexample"]["scenario"], r["entry"]);
    }
}

#[test]
fn unmet_expectation_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let suite = dir.path().join("s.json");
    let text = format!(
        r#"{{"name": "wrong", "entries": [{{"label": "flat", "scenario": "{}", "check": {{"verifier": "traveling_wave", "expected_k": 4}}}}]}}"#,
        scenario("wave4_flat.json")
    );
    std::fs::write(&suite, text).unwrap();
    let (code, out, _) = bordyn(&["verify", suite.to_str().unwrap()]);
    assert_eq!(code, EXIT_VERIFICATION);
    assert!(out.contains("\"as_expected\": false"));
}

#[test]
fn missing_files_are_named() {
    let (code, _, err) = bordyn(&["verify", "no/such/suite.json"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("no/such/suite.json"));
    let dir = tempfile::tempdir().unwrap();
    let suite = dir.path().join("s.json");
    std::fs::write(&suite, r#"{"name": "x", "entries": [{"label": "a", "scenario": "gone.json", "check": {"verifier": "traveling_wave", "expected_k": 4}}]}"#).unwrap();
    let (code, _, err) = bordyn(&["verify", suite.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("gone.json"), "{err}");
}

#[test]
fn export_dot() {
    let (code, out, _) = bordyn(&["export-dot", &scenario("gadget.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("digraph G {"));
    assert!(out.contains("9/10"));
    let (code, out, _) = bordyn(&[
        "export-dot",
        &scenario("gadget.json"),
        "--graph",
        "move-graph",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("graph H {"));
}

#[test]
fn usage_errors_are_input_errors() {
    assert_eq!(bordyn(&["frobnicate"]).0, EXIT_INPUT);
    assert_eq!(bordyn(&["simulate"]).0, EXIT_INPUT);
    assert_eq!(bordyn(&["--help"]).0, EXIT_OK);
}
