//! Rational and cut predicates with the per-cyclic-subgroup evidence.
//!
//! cargo run --example rationality

use ratgk::named_group;
use ratgk::rationality::rationality_report;

fn main() -> ratgk::Result<()> {
    for name in ["S4", "C3:C4", "A5", "D10"] {
        let g = named_group(name)?;
        let r = rationality_report(&g);
        println!(
            "{name}: order {} rational {} cut {} (normalizer criterion {})",
            r.group_order, r.rational, r.cut, r.normalizer_criterion
        );
        for c in &r.records {
            println!(
                "  <{}> order {:>2} phi {} generator classes {} [N:C] {}",
                c.generator_display, c.order, c.phi, c.generator_classes, c.normalizer_index
            );
        }
    }
    Ok(())
}
