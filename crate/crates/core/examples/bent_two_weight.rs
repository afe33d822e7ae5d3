//! The support of a bent function on GF(2^(2h)) defines a projective two-weight code.
//!
//! Run with `cargo run --example bent_two_weight`.

use boolcodes::boolfun::classify;
use boolcodes::defining_set::{code_from_defining_set, spectral_weight_distribution};
use boolcodes::linear_code::weight_distribution_bruteforce;
use boolcodes::{BooleanFunction, DefiningSet, Field, Result};

fn main() -> Result<()> {
    for m in [4, 6, 8] {
        let field = Field::default_for(m)?;
        let f = BooleanFunction::subfield_trace_of_norm(field)?;
        let class = classify(&f);
        let set = DefiningSet::from_support(&f)?;
        let code = code_from_defining_set(&set);
        let report = spectral_weight_distribution(&f)?;
        println!(
            "m={m}: {} with amplitude {:?}, [{}, {}] code, weights {:?}",
            class.class,
            class.amplitude,
            code.len(),
            code.dimension(),
            report.nonzero_weights()
        );
        assert_eq!(report.to_distribution()?, weight_distribution_bruteforce(&code, 24)?);
    }
    Ok(())
}
