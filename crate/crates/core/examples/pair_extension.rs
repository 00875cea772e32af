//! Quadruples {8k², 8k²+1, c, d}: grid search plus the congruence and
//! descent analysis of each candidate c.

use pellkit::dtuple::pair_extension_theorem;

fn main() -> pellkit::Result<()> {
    for k in [1, 2, 10] {
        let r = pair_extension_theorem(k, 2, 10)?;
        println!(
            "k = {k}: only c = 1 occurs: {}",
            r.no_quadruple_with_c_above_1
        );
        for q in &r.quadruples {
            println!("  found {{8k², 8k²+1, {}, {}}}", q.c, q.d);
        }
        for c in &r.classes {
            println!(
                "  c = {}: x₀ = {} (mod s = {}), obstructed {}, descends to d₀ = {}",
                c.c,
                c.class.y0(),
                c.s,
                c.obstructed,
                c.descent.d0
            );
        }
    }
    Ok(())
}
