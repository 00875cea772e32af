//! Exact arithmetic in Q(√D).

use num_bigint::BigInt;
use pellkit::arith::QuadraticSurd;

fn main() -> pellkit::Result<()> {
    let d = BigInt::from(18);
    let alpha = QuadraticSurd::from_integers(17.into(), 4.into(), d.clone())?;
    println!("α = {alpha}, N(α) = {}", alpha.norm());
    println!("α⁻¹ = {}", alpha.inverse()?);
    for n in [-1, 2, 3] {
        println!("α^{n} = {}", alpha.pow(n)?);
    }
    // c₁ = (64k³ + 8k + (16k²+1)√D) / 2D at k = 1
    let c1 = QuadraticSurd::from_fraction(72.into(), 17.into(), 36.into(), d)?;
    println!("c₁ = {c1}, c₁·α = {}", c1.checked_mul(&alpha)?);
    Ok(())
}
