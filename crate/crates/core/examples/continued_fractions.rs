//! Continued fractions of √D and the fundamental solution of x² − Dy² = 1.

use num_bigint::BigInt;
use pellkit::pell::{cf_sqrt, pell_fundamental, pell_solutions};

fn main() -> pellkit::Result<()> {
    for d in [2u32, 13, 18, 61, 66] {
        let d = BigInt::from(d);
        let cf = cf_sqrt(&d)?;
        let unit = pell_fundamental(&d)?;
        println!("√{d} = {cf}, fundamental ({}, {})", unit.x, unit.y);
    }

    // D = 16k² + 2 always has period [4k; 4k, 8k]
    let d = BigInt::from(16 * 3 * 3 + 2);
    println!("\nfirst solutions for D = {d}:");
    for s in pell_solutions(&d, 4)? {
        println!("  {}² − {d}·{}² = 1", s.x, s.y);
    }
    Ok(())
}
