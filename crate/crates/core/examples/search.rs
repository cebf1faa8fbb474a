//! Bounded searches for solvable rational groups with a prescribed prime graph.
//!
//! cargo run --release --example search

use ratgk::search::{search_witness, solvable_subgroup_classes, SearchSpace};
use ratgk::PrimeGraph;

fn main() -> ratgk::Result<()> {
    let counts: Vec<usize> = (1..=2)
        .map(|n| solvable_subgroup_classes(n).map(|c| c.len()))
        .collect::<ratgk::Result<_>>()?;
    println!("solvable subgroup classes of GL(1,5), GL(2,5): {counts:?}");

    let products = SearchSpace::DirectProducts {
        factors: vec!["C2".into(), "S3".into(), "S4".into(), "Q8".into()],
        max_factors: 2,
    };
    for (text, space) in [
        ("2,5:", SearchSpace::default_semidirect()),
        ("2,3,5:2-3,2-5", SearchSpace::default_semidirect()),
        ("2,3:2-3", products),
    ] {
        let target: PrimeGraph = text.parse().expect("valid graph text");
        let outcome = search_witness(&target, &space)?;
        match outcome.hit {
            Some(hit) => println!(
                "{target}: {} (order {}) after {} of {}",
                hit.description,
                hit.group.order(),
                outcome.examined,
                outcome.space_size
            ),
            None => println!("{target}: none among {} candidates", outcome.space_size),
        }
    }
    Ok(())
}
