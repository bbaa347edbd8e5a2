//! The cover graph H(3): degrees, distances, the bounded step and cycles.

use bordyn::{MoveGraph, StepPolicy};

fn main() -> bordyn::Result<()> {
    let g = MoveGraph::build(3)?;
    let s = g.space();
    println!(
        "H(3): {} vertices, {} edges, diameter {}",
        g.order_count(),
        g.edge_count(),
        g.diameter()
    );
    println!("H(4): {} edges", MoveGraph::build(4)?.edge_count());

    let (a, b) = (s.parse("x>y>z")?, s.parse("z>y>x")?);
    println!(
        "d({}, {}) = {}, {} shortest paths",
        s.format(a),
        s.format(b),
        g.distance(a, b),
        g.geodesic_count(a, b)
    );

    // Walk from a to b one bounded step at a time.
    let mut at = a;
    let mut path = vec![s.format(at)];
    while at != b {
        at = g.step(StepPolicy::default(), at, b);
        path.push(s.format(at));
    }
    println!("walk: {}", path.join(" -> "));

    for len in [3, 4, 12] {
        match g.find_cycle(len) {
            Some(c) => println!(
                "cycle of length {len}: {}",
                c.iter().map(|&v| s.format(v)).collect::<Vec<_>>().join(" ")
            ),
            None => println!("no simple cycle of length {len}"),
        }
    }

    print!("\n{}", g.to_dot());
    Ok(())
}
