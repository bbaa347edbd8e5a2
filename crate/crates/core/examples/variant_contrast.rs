//! Synchronous against asynchronous updates on the contrarian gadget.

use std::path::Path;

use bordyn::scenario::{load_scenario, GraphCache};
use bordyn::theorems::verify_variant_contrast;
use bordyn::Schedule;

fn main() -> bordyn::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios/gadget.json");
    let sc = load_scenario(&path, &mut GraphCache::default())?;
    let s = sc.space();

    for schedule in [
        Schedule::Synchronous,
        Schedule::Sequence(vec![0, 1]),
        Schedule::SeededUniform(3),
    ] {
        let r = sc.clone().with_schedule(schedule.clone()).run()?;
        let last = r.state_at(r.transient).to_text(s);
        println!(
            "{schedule:?}: mu={} period={} settles at {last:?}",
            r.transient, r.period
        );
    }

    let out = verify_variant_contrast(&sc, 20, 11)?;
    println!(
        "\n{:?}: {}",
        out.status,
        serde_json::to_string(&out.evidence).expect("json")
    );
    Ok(())
}
