//! Single-peaked weak orders and whether bounded steps keep profiles inside
//! that domain; also the strict-order restriction of H.

use std::sync::Arc;

use bordyn::theorems::{
    enumerate_single_peaked, restrict_to_strict, single_peaked_trials, StrictRestriction,
};
use bordyn::{InfluenceNetwork, MoveGraph, PersistentConfig, Profile, ScenarioConfig};

fn main() -> bordyn::Result<()> {
    let g = Arc::new(MoveGraph::build(3)?);
    let s = g.space();
    let axis = [0, 1, 2];
    let domain = enumerate_single_peaked(s, &axis)?;
    println!(
        "{} orders single-peaked on x<y<z: {:?}",
        domain.len(),
        domain.iter().map(|&v| s.format(v)).collect::<Vec<_>>()
    );
    println!(
        "{} on x<y<z<u",
        enumerate_single_peaked(MoveGraph::build(4)?.space(), &[0, 1, 2, 3])?.len()
    );

    let tally = single_peaked_trials(g.clone(), &axis, 50, 5)?;
    println!(
        "\n50 random cases: {} kept, {} lost single-peaked targets, {} left the domain",
        tally.passed, tally.hypothesis_broken, tally.violated
    );
    for cex in tally.counterexamples.iter().take(3) {
        println!(
            "  {} step {}: {} ({:?})",
            cex.scenario, cex.step, cex.detail, cex.state
        );
    }

    let strict = s.parse("y>x>z")?;
    let sc = ScenarioConfig::new(
        "strict",
        g,
        InfluenceNetwork::directed_cycle(3)?,
        PersistentConfig::none(),
        Profile::uniform(3, strict),
    )?;
    match restrict_to_strict(&sc)? {
        StrictRestriction::Infeasible {
            strict_orders,
            induced_edges,
            reason,
            ..
        } => {
            println!(
                "\nstrict restriction: {strict_orders} orders, {induced_edges} edges: {reason}"
            )
        }
        StrictRestriction::Connected { vertices, .. } => println!(
            "\nstrict restriction connected on {} orders",
            vertices.len()
        ),
    }
    Ok(())
}
