//! Analyzes the classical code families through their Boolean functions and prints
//! the summary table (spectrum, degree, nonlinearity, class).
//!
//! Run with `cargo run --release --example family_study`.

use boolcodes::report::{study_reports, summary_csv, summary_rows};
use boolcodes::Result;

fn main() -> Result<()> {
    let reports = study_reports(24)?;
    print!("{}", summary_csv(&summary_rows(&reports)));
    Ok(())
}
