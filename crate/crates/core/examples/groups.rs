//! Builds groups by name, from permutations and matrices, and as direct products.
//!
//! cargo run --example groups

use ratgk::construct::matrix_group;
use ratgk::element::{Convention, GroupElement, MulRule};
use ratgk::{direct_product, named_group, FiniteGroup, FpMatrix, Perm};

fn describe(name: &str, g: &FiniteGroup) {
    let census: Vec<String> = g.order_census().iter().map(|(o, n)| format!("{n}x{o}")).collect();
    println!(
        "{name:<14} order {:>4}  classes {:>3}  solvable {:<5}  abelian {:<5}  element orders [{}]",
        g.order(),
        g.conjugacy_classes().classes.len(),
        g.is_solvable(),
        g.is_abelian(),
        census.join(" ")
    );
}

fn main() -> ratgk::Result<()> {
    for name in ["S3", "Q8", "SL(2,3)", "GL(2,3)", "A5"] {
        describe(name, &named_group(name)?);
    }

    let cycle = Perm::new(vec![1, 2, 3, 0]).expect("valid permutation");
    let flip = Perm::new(vec![3, 2, 1, 0]).expect("valid permutation");
    let d8 = FiniteGroup::generate(
        vec![GroupElement::Perm(cycle), GroupElement::Perm(flip)],
        MulRule::Perm(Convention::RightAction),
    )?;
    describe("<(0123),(03)(12)>", &d8);

    let m = matrix_group(vec![
        FpMatrix::from_array(5, [[0, 1], [4, 0]]),
        FpMatrix::from_array(5, [[2, 0], [0, 3]]),
    ])?;
    describe("matrices mod 5", &m);

    let s3 = named_group("S3")?;
    let sq = direct_product(&s3, &s3)?;
    describe("S3 x S3", &sq);
    let z = sq.center();
    println!("centre of S3 x S3 has order {}", z.order());
    let series: Vec<usize> = sq.derived_series().iter().map(|h| h.order()).collect();
    println!("derived series orders {series:?}");
    Ok(())
}
