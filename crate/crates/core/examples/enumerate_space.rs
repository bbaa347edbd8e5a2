//! Weak orders on three and four alternatives: counts, Borda scores,
//! antipodes and Kemeny distances.
//!
//! ```text
//! cargo run --example enumerate_space
//! ```

use bordyn::preference::{fubini, kemeny_distance, margin_from_ties};
use bordyn::PreferenceSpace;

fn main() -> bordyn::Result<()> {
    for m in 1..=6 {
        println!("F({m}) = {}", fubini(m));
    }

    let space = PreferenceSpace::new(3)?;
    println!(
        "\n{:>3}  {:<8} {:<18} {:<8}",
        "id", "order", "borda", "antipode"
    );
    for id in space.ids() {
        let scores: Vec<String> = space
            .scores(id)
            .entries()
            .iter()
            .map(|s| s.to_string())
            .collect();
        println!(
            "{:>3}  {:<8} {:<18} {:<8}",
            id.0,
            space.format(id),
            scores.join(" "),
            space.format(space.antipode(id))
        );
    }

    let tied = space.parse("(xyz)")?;
    let strict = space.parse("x>y>z")?;
    let reversed = space.parse("z>y>x")?;
    println!(
        "\nKemeny (xyz) vs x>y>z = {}",
        kemeny_distance(space.order(tied), space.order(strict))?
    );
    println!(
        "Kemeny x>y>z vs z>y>x = {}",
        kemeny_distance(space.order(strict), space.order(reversed))?
    );

    let mixed = space.parse("(xy)>z")?;
    println!(
        "margin of the scores of (xy)>z: {}",
        margin_from_ties(space.scores(mixed))
    );
    println!(
        "margin of the scores of (xyz): {}",
        margin_from_ties(space.scores(tied))
    );
    Ok(())
}
