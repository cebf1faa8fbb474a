//! Prime graphs and the solvable-rational classification, with DOT output.
//!
//! cargo run --example prime_graph

use ratgk::rationality::{classify_rational_solvable, gk_graph};
use ratgk::{direct_product, named_group, PrimeGraph};

fn main() -> ratgk::Result<()> {
    let s3 = named_group("S3")?;
    let s4 = named_group("S4")?;
    let groups = [
        ("S4", s4.clone_group()),
        ("S3 x S3", direct_product(&s3, &s3)?),
        ("S4 x C2", direct_product(&s4, &named_group("C2")?)?),
        ("A5", named_group("A5")?),
    ];
    for (name, g) in &groups {
        let c = classify_rational_solvable(g);
        match (c.figure, &c.reason) {
            (Some(f), None) => println!("{name}: graph {} matches {f}", c.graph),
            (_, reason) => println!("{name}: graph {} does not match ({})", c.graph, reason.as_deref().unwrap_or("")),
        }
    }

    let target: PrimeGraph = "2,3,5:2-3,2-5,3-5".parse().expect("valid graph text");
    println!("parsed {target}");
    print!("{}", gk_graph(&groups[1].1).to_dot());
    Ok(())
}
