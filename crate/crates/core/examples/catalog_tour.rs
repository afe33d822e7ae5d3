//! Builds every catalog family and prints its parameters next to the closed forms.
//!
//! Run with `cargo run --release --example catalog_tour`.

use boolcodes::report::{catalog_instances, distance_of};
use boolcodes::Result;

fn main() -> Result<()> {
    println!("{:<22} {:>16} {:>16}", "code", "computed", "expected");
    for spec in catalog_instances() {
        let code = spec.build()?;
        let d = distance_of(&code, 24).map_or("?".to_string(), |d| d.to_string());
        let expected = spec
            .expected_parameters()
            .map_or("-".to_string(), |(n, k, d)| format!("[{n}, {k}, {d}]"));
        println!("{:<22} {:>16} {:>16}", spec.to_string(), format!("[{}, {}, {d}]", code.len(), code.dimension()), expected);
    }
    Ok(())
}
