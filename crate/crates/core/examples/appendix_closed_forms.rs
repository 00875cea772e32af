//! Closed forms yₙ = c₁αⁿ + c₂ᾱⁿ, zₙ = c₃αⁿ + c₄ᾱⁿ evaluated exactly.

use pellkit::sequences::{ClosedForm, PairSequence};

fn main() -> pellkit::Result<()> {
    for k in 1..=3 {
        let cf = ClosedForm::new(k)?;
        let seq = PairSequence::build(k, 5)?;
        println!("k = {k}: α = {}", cf.alpha);
        println!("  c₁ = {}  c₂ = {}", cf.c1, cf.c2);
        println!("  c₃ = {}  c₄ = {}", cf.c3, cf.c4);
        for e in seq.entries() {
            assert_eq!(cf.entry(e.index)?, (e.y.clone(), e.z.clone()));
        }
        let checks = cf.coefficient_checks()?;
        println!(
            "  matches recurrences for n ≤ 5; c₁c₄ + c₂c₃ = 0: {}",
            checks.cross_terms_vanish
        );
    }
    Ok(())
}
