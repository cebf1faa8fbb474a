//! GF(p) modules: orbits, stabilizers, simplicity, Brauer rationality, induction and semidirect products.
//!
//! cargo run --example modules

use std::sync::Arc;

use ratgk::construct::general_linear;
use ratgk::module::induce_module;
use ratgk::{named_group, semidirect_product, FpMatrix, FpVector, ModuleAction};

fn main() -> ratgk::Result<()> {
    let q8 = Arc::new(named_group("Q8<GL(2,5)")?);
    let v = Arc::new(ModuleAction::natural(q8.clone())?);
    let sizes: Vec<usize> = v.orbits().iter().map(|o| o.len()).collect();
    println!("Q8 on GF(5)^2: orbit sizes {sizes:?}");
    println!("simple {}", v.is_simple());
    println!("Brauer character rational {}", v.brauer_character_is_rational()?);
    println!("every v has some g with v g = 2v: {}", v.eigenvector_property()?.holds);
    let g = semidirect_product(v.clone())?;
    println!("GF(5)^2 x| Q8 has order {}", g.order());

    let gl = Arc::new(general_linear(2, 5)?);
    let natural = ModuleAction::natural(gl.clone())?;
    let e1 = FpVector::new(5, vec![1, 0]);
    println!(
        "GL(2,5): orbit of (1,0) has {} vectors, stabilizer order {}",
        natural.orbit(&e1)?.len(),
        natural.stabilizer(&e1)?.order()
    );

    // induce the natural module of Q8 up to Q8 extended by the scalars
    let scalars = ratgk::construct::matrix_group(
        q8.generator_elements()
            .iter()
            .map(|e| e.as_matrix().expect("matrix").clone())
            .chain([FpMatrix::from_array(5, [[2, 0], [0, 2]])])
            .collect(),
    )?;
    let big = Arc::new(scalars);
    let h = big.subgroup(&big.ids_of(&q8.generator_elements())?);
    let hg = Arc::new(big.subgroup_as_group(&h)?);
    let inner = ModuleAction::natural(hg)?;
    let induced = induce_module(&inner, big.clone(), &h)?;
    println!(
        "induced from index {} subgroup: dimension {}, Brauer character rational {}",
        induced.transversal.len(),
        induced.action.dim(),
        induced.action.brauer_character_is_rational()?
    );
    Ok(())
}
