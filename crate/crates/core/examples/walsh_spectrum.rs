//! Walsh spectrum, algebraic normal form, nonlinearity and spectral class of a
//! few Boolean functions on GF(2^6).
//!
//! Run with `cargo run --example walsh_spectrum`.

use boolcodes::boolfun::{anf, classify, nonlinearity};
use boolcodes::{BooleanFunction, Field, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn describe(name: &str, f: &BooleanFunction) {
    let spectrum = f.walsh_transform();
    let class = classify(f);
    println!("{name}");
    println!("  weight {}  degree {}  nonlinearity {}", f.weight(), anf(f).degree(), nonlinearity(f));
    println!("  class {} (balanced: {})", class.class, class.balanced);
    println!("  spectrum {:?}", spectrum.histogram());
}

fn main() -> Result<()> {
    let field = Field::default_for(6)?;
    describe("Tr(x)", &BooleanFunction::trace_power(field, 1, 1));
    describe("Tr(x^3)", &BooleanFunction::trace_power(field, 1, 3));
    describe("Tr_(2^3/2)(x^9)", &BooleanFunction::subfield_trace_of_norm(field)?);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    describe("random", &BooleanFunction::random(field, &mut rng));
    Ok(())
}
