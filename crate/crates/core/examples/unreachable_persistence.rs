//! Pins only matter downstream: nodes they cannot reach evolve the same way
//! whatever the pinned states are.

use std::collections::BTreeMap;
use std::path::Path;

use bordyn::scenario::{load_scenario, GraphCache};
use bordyn::theorems::verify_unreachable_persistence;

fn main() -> bordyn::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios/islands.json");
    let sc = load_scenario(&path, &mut GraphCache::default())?;
    println!("{}", sc.network.to_dot());

    for order in ["x>y>z", "z>x>y", "(xyz)"] {
        let alt: BTreeMap<_, _> = [(0, sc.space().parse(order)?)].into();
        let out = verify_unreachable_persistence(&sc, &alt)?;
        println!(
            "pin -> {order:<6} {:?}, unreached {}",
            out.status, out.evidence["unreached_free"]
        );
        let mut twin = sc.clone();
        twin.persistent = sc.persistent.repinned(&alt)?;
        twin.initial.0[0] = alt[&0];
        let r = twin.run()?;
        println!(
            "  orbit: {:?}",
            r.orbit()
                .iter()
                .map(|p| p.to_text(sc.space()))
                .collect::<Vec<_>>()
        );
    }
    Ok(())
}
