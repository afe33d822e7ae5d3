//! A defining set in GF(2^m) read as pairs over GF(2^(m/2)); the pair code equals
//! the original trace code.
//!
//! Run with `cargo run --example bivariate_view`.

use boolcodes::defining_set::{bivariate_view, code_from_defining_set};
use boolcodes::linear_code::codes_equal;
use boolcodes::{DefiningSet, Field, Result};

fn main() -> Result<()> {
    let field = Field::default_for(6)?;
    let set = DefiningSet::new(field, vec![0x01, 0x05, 0x17, 0x2a, 0x33, 0x3e])?;
    let view = bivariate_view(&set, 3)?;
    println!("basis over GF(2^3): {:x?}, relative-trace dual: {:x?}", view.basis, view.dual);
    for (d, (a, b)) in set.elements().iter().zip(&view.pairs) {
        println!("  {d:>2x} -> ({a:x}, {b:x})");
    }
    assert!(codes_equal(&view.code, &code_from_defining_set(&set))?);
    println!("pair code equals the trace code: [{}, {}]", view.code.len(), view.code.dimension());
    Ok(())
}
