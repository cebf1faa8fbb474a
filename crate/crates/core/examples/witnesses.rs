//! One solvable rational group for each of the six prime graphs, plus the order 6, 10, 15 check.
//!
//! cargo run --release --example witnesses

use ratgk::facts::find_witnesses;
use ratgk::rationality::check_orders_6_10_15;

fn main() -> ratgk::Result<()> {
    for w in find_witnesses()? {
        let c = check_orders_6_10_15(&w.group);
        println!(
            "{:<16} {:<40} order {:>5}  graph {:<14} matches {}  orders 6/10/15 {:?}",
            w.figure.to_string(),
            w.description,
            w.group.order(),
            w.classification.graph.to_string(),
            w.classification.matches_classification,
            c.witness_display
        );
    }
    Ok(())
}
