//! Arithmetic, traces and dual bases in GF(2^m).
//!
//! Run with `cargo run --example field_arithmetic`.

use boolcodes::gf2::Subfield;
use boolcodes::{Basis, Field, Result};

fn main() -> Result<()> {
    let field = Field::default_for(8)?;
    println!("GF(2^8) modulo 0x{:x}", field.modulus());

    let a = field.generator();
    let b = field.element(0x53)?;
    println!("alpha * 0x53 = {}", a * b);
    println!("0x53^-1 = {}", b.inv()?);
    println!("order(alpha) = {}", a.order()?);
    println!("Tr(0x53) = {}", b.trace());

    // Relative trace down to GF(2^4) and the embedding of that subfield.
    let sub = Subfield::new(field, 4)?;
    let t = b.relative_trace(4)?;
    println!("Tr_(8/4)(0x53) = {} = embed({:x})", t, sub.project(t.value())?);

    // Coordinates in the polynomial basis are recovered through its trace dual.
    let basis = Basis::polynomial(field);
    let coords = basis.coordinates(&b)?;
    let bits: String = coords.iter().map(|&c| if c { '1' } else { '0' }).collect();
    println!("coordinates of 0x53: {bits}");
    assert_eq!(basis.recombine(&coords), b);
    Ok(())
}
