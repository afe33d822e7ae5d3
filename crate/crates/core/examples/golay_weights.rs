//! The binary Golay code through its Boolean function: the weight distribution
//! predicted by the Walsh spectrum of f_C matches enumeration of all 4096 codewords.
//!
//! Run with `cargo run --release --example golay_weights`.

use boolcodes::catalog::golay23;
use boolcodes::defining_set::{boolean_from_code, spectral_weight_distribution};
use boolcodes::linear_code::weight_distribution_bruteforce;
use boolcodes::Result;

fn main() -> Result<()> {
    let code = golay23();
    let f = boolean_from_code(&code)?;
    println!("f_C on GF(2^{}) has weight {}", f.num_vars(), f.weight());

    let spectral = spectral_weight_distribution(&f)?;
    let enumerated = weight_distribution_bruteforce(&code, 24)?;
    println!("{:>6} {:>10} {:>10}", "weight", "spectral", "enumerated");
    for (w, c) in enumerated.to_map() {
        println!("{w:>6} {:>10} {c:>10}", spectral.weights.get(&(w as u64)).copied().unwrap_or(0));
    }
    assert_eq!(spectral.to_distribution()?, enumerated);
    Ok(())
}
