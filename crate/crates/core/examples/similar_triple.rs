//! The triple {1, 2k², 2k²+2k+1} with n = −k²: prime sieve, bounded search
//! and the single class of z² − (4k²+4k+2)y² = 4k+2.

use pellkit::dtuple::{similar_conjecture, similar_fundamental, similar_sieve};

fn main() -> pellkit::Result<()> {
    for k in 1..=12 {
        let sieve = similar_sieve(k)?;
        let conj = similar_conjecture(k, 200_000)?;
        let found: Vec<String> = conj.extensions.iter().map(|e| e.d.to_string()).collect();
        println!(
            "k = {k:>2}: sieve {}, extensions {found:?}",
            sieve.obstruction.as_deref().unwrap_or("passes")
        );
    }
    let f = similar_fundamental(4)?;
    let reps: Vec<String> = f
        .classes
        .iter()
        .map(|c| format!("({}, {})", c.x0(), c.y0()))
        .collect();
    println!("\nz² − {}y² = {}: classes {}", f.d, f.n, reps.join(" "));
    Ok(())
}
