//! A ring of copiers started along a cycle of H carries a traveling wave.
//!
//! Every node copies its predecessor, so it moves one edge of H per step and
//! the pattern rotates with the length of the H-cycle.

use std::sync::Arc;

use bordyn::theorems::{build_traveling_wave, verify_traveling_wave};
use bordyn::MoveGraph;

fn main() -> bordyn::Result<()> {
    let g = Arc::new(MoveGraph::build(3)?);
    let square: Vec<_> = ["(xyz)", "x>(yz)", "x>y>z", "(xy)>z"]
        .iter()
        .map(|t| g.space().parse(t))
        .collect::<Result<_, _>>()?;
    let perimeter = g.find_cycle(12).expect("H(3) has a 12-cycle");

    for (len, cycle) in [(4, &square), (8, &square), (12, &perimeter)] {
        let sc = build_traveling_wave(g.clone(), len, cycle)?;
        let out = verify_traveling_wave(&sc, cycle.len())?;
        println!(
            "ring {len:>2}, cycle {:>2}: passed={} period={} mu={}",
            cycle.len(),
            out.passed,
            out.evidence["period"],
            out.evidence["mu"]
        );
    }

    let sc = build_traveling_wave(g.clone(), 4, &square)?;
    let report = sc.run()?;
    println!();
    print!("{}", report.to_csv(&sc.network, sc.space())?);

    // A ring length the cycle does not divide cannot be initialized.
    println!(
        "\nring 6 on the 4-cycle: {}",
        build_traveling_wave(g, 6, &square).unwrap_err()
    );
    Ok(())
}
