//! The sequences (yₙ, zₙ) for z² − (16k²+2)y² = 1, their identities and
//! the factorizations showing Xₙ = 2yₙ² − 8k² + 1 is not a square for n ≥ 1.

use pellkit::sequences::{
    factor_even, factor_odd, identity_even, identity_odd, z_congruences, PairSequence,
};

fn main() -> pellkit::Result<()> {
    let k = 2;
    let seq = PairSequence::build(k, 4)?;
    println!("k = {k}");
    for e in seq.entries() {
        println!(
            "  n = {:>2}: y = {}, z = {}, X = {}",
            e.index,
            e.y,
            e.z,
            seq.x_value(e.index)?
        );
    }

    for n in 0..3 {
        let odd = identity_odd(k, n)?;
        println!(
            "y_{} = 2·y_{n}·z_{n} = {}: {}",
            2 * n + 1,
            odd.rhs,
            odd.holds
        );
        if n >= 1 {
            let even = identity_even(k, n)?;
            println!("z_{} − 1 = ({})²: {}", 2 * n, even.root, even.holds);
        }
        let fo = factor_odd(k, n)?;
        println!(
            "X_{} = {} · {} (coprime {})",
            2 * n + 1,
            fo.f1,
            fo.f2,
            fo.coprime
        );
        let fe = factor_even(k, n)?;
        println!(
            "X_{} = {} · {} (coprime {})",
            2 * n,
            fe.f1,
            fe.f2,
            fe.coprime
        );
    }

    let z = z_congruences(k, 10)?;
    println!(
        "z mod k: {:?}",
        z.mod_k.iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    println!(
        "z mod 8k²+1: {:?}",
        z.mod_8k2_plus_1
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    Ok(())
}
