//! Values of k for which 24k² + 1 is a square.

use num_bigint::BigInt;
use pellkit::arith::is_perfect_square;
use pellkit::dtuple::admissible_k;

fn main() -> pellkit::Result<()> {
    for k in admissible_k(8)? {
        let m = is_perfect_square(&(&k * &k * 24u32 + 1u32)).expect("square by construction");
        println!(
            "k = {k}: 24k² + 1 = {m}², d = 32k² + 1 = {}",
            &k * &k * 32u32 + BigInt::from(1)
        );
    }
    Ok(())
}
