//! The two-node contrarian gadget: i listens to j and to a node pinned at
//! rho, j listens to i and to a node pinned at the antipode of rho.

use std::sync::Arc;

use bordyn::dynamics::{format_targets, FIXED_POINT_BUDGET};
use bordyn::rational::ratio;
use bordyn::theorems::{build_gadget, verify_forced_even_period, ForcedOptions};
use bordyn::MoveGraph;

fn main() -> bordyn::Result<()> {
    let g = Arc::new(MoveGraph::build(3)?);
    let s = g.space();
    let rho = s.parse("x>y>z")?;
    let sc = build_gadget(g.clone(), rho, ratio(1, 10), None)?;

    let report = sc.run()?;
    println!(
        "mu={} period={} margin={}",
        report.transient, report.period, report.min_margin
    );
    for t in 0..report.transient + report.period {
        println!(
            "t={t}: {:?}  targets {}",
            report.state_at(t).to_text(s),
            format_targets(s, report.targets_at(t))
        );
    }

    let fixed = sc.system()?.enumerate_fixed_points(FIXED_POINT_BUDGET)?;
    println!("\n{} fixed points among 169 free profiles:", fixed.len());
    for p in &fixed {
        println!("  {:?}", p.to_text(s));
    }

    let out = verify_forced_even_period(&sc, ForcedOptions::default())?;
    println!("\nverifier: {:?}", out.status);
    println!(
        "{}",
        serde_json::to_string_pretty(&out.evidence).expect("json")
    );

    println!("\nperiod from (rho, antipode) as the pin weight varies:");
    for k in 1..20 {
        let run = build_gadget(g.clone(), rho, ratio(k, 20), None)?.run()?;
        println!(
            "  eps={:>5}: period {}",
            ratio(k, 20).to_string(),
            run.period
        );
    }
    Ok(())
}
