//! Every bundled scenario parses and runs within its default budget.

use std::path::PathBuf;

use bordyn::scenario::{load_scenario, GraphCache};

#[test]
fn bundled_scenarios_run() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios");
    let mut cache = GraphCache::default();
    let mut count = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_str().unwrap().to_string();
        if !name.ends_with(".json") || name.ends_with(".suite.json") {
            continue;
        }
        let sc = load_scenario(&path, &mut cache).unwrap_or_else(|e| panic!("{name}: {e}"));
        let report = sc.run().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(report.period >= 1);
        let sys = sc.system().unwrap();
        if sc.schedule == bordyn::Schedule::Synchronous {
            let last = report.trajectory.last().unwrap();
            assert_eq!(
                &sys.step_sync(last),
                report.state_at(report.trajectory.len()),
                "{name}"
            );
        }
        count += 1;
    }
    assert_eq!(count, 14);
}

#[test]
fn suites_reference_existing_scenarios() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios");
    for suite in ["default.suite.json", "controls.suite.json"] {
        let manifest = bordyn::scenario::load_suite(&dir.join(suite)).unwrap();
        let mut labels = std::collections::HashSet::new();
        for entry in &manifest.entries {
            assert!(
                dir.join(&entry.scenario).exists(),
                "{suite}: {}",
                entry.scenario
            );
            assert!(labels.insert(&entry.label));
        }
    }
}
