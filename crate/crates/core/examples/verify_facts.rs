//! Re-checks every structural fact about the five GF(5) modules and prints the report.
//!
//! cargo run --release --example verify_facts

use ratgk::facts::verify_all;

fn main() -> ratgk::Result<()> {
    let report = verify_all()?;
    print!("{}", report.to_text());
    if !report.all_pass() {
        std::process::exit(1);
    }
    Ok(())
}
