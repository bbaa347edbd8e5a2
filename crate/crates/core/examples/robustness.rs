//! Perturbing influence weights below the margin bound leaves the symbolic
//! orbit intact; a large perturbation of a near-critical gadget does not.

use std::sync::Arc;

use bordyn::rational::ratio;
use bordyn::theorems::{
    build_gadget, build_traveling_wave, verify_robustness, verify_robustness_at,
};
use bordyn::MoveGraph;

fn main() -> bordyn::Result<()> {
    let g = Arc::new(MoveGraph::build(3)?);
    let s = g.space();
    let square: Vec<_> = ["(xyz)", "x>(yz)", "x>y>z", "(xy)>z"]
        .iter()
        .map(|t| s.parse(t))
        .collect::<Result<_, _>>()?;
    let rho = s.parse("x>y>z")?;

    for sc in [
        build_traveling_wave(g.clone(), 4, &square)?,
        build_gadget(g.clone(), rho, ratio(1, 10), None)?,
    ] {
        let out = verify_robustness(&sc, 20, 7)?;
        println!(
            "{}: {:?} delta={} eps*={} eps={}",
            sc.label,
            out.status,
            out.evidence["delta"],
            out.evidence["epsilon_star"],
            out.evidence["epsilon"]
        );
    }

    let wide = build_gadget(g, rho, ratio(2, 5), None)?;
    let out = verify_robustness_at(&wide, 20, 7, Some(ratio(1, 5)))?;
    println!("\n{} with eps=1/5: {:?}", wide.label, out.status);
    if let Some(cex) = out.counterexample {
        println!("  first divergence at step {}: {}", cex.step, cex.detail);
    }
    Ok(())
}
