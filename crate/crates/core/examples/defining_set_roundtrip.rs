//! A generator matrix becomes a defining set in GF(2^k), and the trace code of
//! that set gives back the reduced generator matrix.
//!
//! Run with `cargo run --example defining_set_roundtrip`.

use boolcodes::defining_set::{code_from_defining_set, extract_defining_set};
use boolcodes::linear_code::codes_equal;
use boolcodes::{BinaryCode, Result};

fn main() -> Result<()> {
    let code = BinaryCode::parse_matrix(
        "1011100\n\
         0101110\n\
         0010111\n\
         1110010\n",
    )?;
    println!("input has rank {} and length {}", code.dimension(), code.len());

    let set = extract_defining_set(&code)?;
    println!("defining set: {}", serde_json::to_string(&set.to_json()).expect("json"));

    let back = code_from_defining_set(&set);
    println!("rebuilt generator:\n{}", back.to_matrix_string());
    assert_eq!(back.rows(), &code.rref_generator()[..]);
    assert!(codes_equal(&back, &code)?);
    Ok(())
}
