//! Bipartite networks: the two-step map sampled on one side, and how its
//! cycles relate to cycles of the full synchronous map.

use std::sync::Arc;

use bordyn::dynamics::FIXED_POINT_BUDGET;
use bordyn::influence::default_names;
use bordyn::theorems::{check_bipartite_decoupling, verify_even_period_lifting};
use bordyn::{InfluenceNetwork, MoveGraph, PersistentConfig, Profile, ScenarioConfig};

fn main() -> bordyn::Result<()> {
    let g = Arc::new(MoveGraph::build(3)?);
    let net = InfluenceNetwork::normalize_random_walk(
        default_names(4),
        &[(0, 1), (1, 2), (2, 3), (3, 0)],
    )?;
    let start = Profile::parse(g.space(), &["x>z>y", "x>y>z", "x>y>z", "x>y>z"])?;
    let sc = ScenarioConfig::new(
        "four-cycle",
        g.clone(),
        net,
        PersistentConfig::none(),
        start,
    )?;

    let out = verify_even_period_lifting(&sc, Some(FIXED_POINT_BUDGET))?;
    println!("{}", serde_json::to_string_pretty(&out).expect("json"));

    // Periods reachable on this network at all.
    let sys = sc.system()?;
    let mut periods = std::collections::BTreeMap::new();
    for code in 0..13u32.pow(4) {
        let p = Profile(
            (0..4)
                .map(|v| bordyn::OrderId(code / 13u32.pow(v) % 13))
                .collect(),
        );
        *periods
            .entry(sys.run_until_cycle(&p, &sc.schedule, 1000)?.period)
            .or_insert(0) += 1;
    }
    println!("\nperiod histogram over all 28561 starts: {periods:?}");

    // Two steps do compose from half-steps, but one side's state after two
    // steps still depends on its own starting state.
    let check = check_bipartite_decoupling(&sys, &sc.initial, &[0, 2], &[1, 3], FIXED_POINT_BUDGET);
    println!("half-steps compose: {}", check.composed_matches);
    if let Some(alt) = check.context_dependence {
        println!(
            "same A half, different outcome on A from {:?}",
            alt.to_text(g.space())
        );
    }
    Ok(())
}
