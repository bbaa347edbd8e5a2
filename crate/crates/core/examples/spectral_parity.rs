//! Communicating classes, their periods, and the -1 eigenvector of
//! bipartite influence matrices.

use std::collections::BTreeSet;

use bordyn::influence::default_names;
use bordyn::theorems::random_bipartite;
use bordyn::InfluenceNetwork;

fn report(name: &str, net: &InfluenceNetwork) -> bordyn::Result<()> {
    let all: BTreeSet<usize> = (0..net.n()).collect();
    let structure = net.class_structure(&all);
    println!("{name}:");
    for class in &structure.classes {
        println!(
            "  class {:?} closed={} period={:?}",
            class.nodes, class.closed, class.period
        );
    }
    match net.two_coloring(&all) {
        Some((a, b)) => println!(
            "  W f = -f on {a:?} | {b:?}: {}",
            net.verify_minus_one_mode(&a, &b)?
        ),
        None => println!("  not bipartite"),
    }
    Ok(())
}

fn main() -> bordyn::Result<()> {
    let ring = |l: usize| {
        InfluenceNetwork::normalize_random_walk(
            default_names(l),
            &(0..l).map(|i| (i, (i + 1) % l)).collect::<Vec<_>>(),
        )
    };
    report("4-cycle", &ring(4)?)?;
    report("6-cycle", &ring(6)?)?;
    report("5-cycle", &ring(5)?)?;
    report("random bipartite", &random_bipartite(4, 5)?)?;
    report("directed 4-cycle", &InfluenceNetwork::directed_cycle(4)?)?;
    print!("\n{}", random_bipartite(4, 5)?.to_dot());
    Ok(())
}
