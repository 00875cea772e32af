//! Extensions of {1, 8k², 8k²+1}: only X₀ = 24k²+1 can be a square.

use pellkit::dtuple::triple_extension_theorem;

fn main() -> pellkit::Result<()> {
    for k in 1..=12 {
        let r = triple_extension_theorem(k, 12)?;
        match (&r.d, &r.quadruple) {
            (Some(d), Some(q)) => println!(
                "k = {k:>2}: 24k²+1 = {}², d = {d}, quadruple valid: {}",
                r.x0_root.as_ref().unwrap(),
                q.is_valid()
            ),
            _ => println!("k = {k:>2}: no square among X₀..X₁₂"),
        }
        assert!(r.consistent);
    }
    Ok(())
}
