//! Loads every TOML group specification under examples/specs and classifies it.
//!
//! cargo run --example spec_files

use std::path::Path;

use ratgk::group::DEFAULT_ORDER_CAP;
use ratgk::rationality::classify_rational_solvable;
use ratgk::spec::load_group_spec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/specs");
    let mut paths: Vec<_> = std::fs::read_dir(dir)?.map(|e| e.map(|e| e.path())).collect::<Result<_, _>>()?;
    paths.sort();
    for path in paths {
        let g = load_group_spec(&path)?.build(DEFAULT_ORDER_CAP)?;
        let c = classify_rational_solvable(&g);
        println!(
            "{:<24} order {:>4}  graph {:<12} {}",
            path.file_name().unwrap_or_default().to_string_lossy(),
            g.order(),
            c.graph.to_string(),
            match (c.matches_classification, c.figure) {
                (true, Some(f)) => format!("matches {f}"),
                _ => format!("no match: {}", c.reason.unwrap_or_default()),
            }
        );
    }
    Ok(())
}
