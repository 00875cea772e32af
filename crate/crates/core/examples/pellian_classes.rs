//! Classes of x² − Dy² = N via Nagell's bounds, checked against a brute-force scan.

use num_bigint::BigInt;
use pellkit::pellian::{
    brute_force_solutions, fundamental_classes, nagell_bounds, solutions_up_to,
};

fn main() -> pellkit::Result<()> {
    for (d, n) in [(2, -7), (66, 25), (5, 4), (13, -3), (18, 1)] {
        let (d, n) = (BigInt::from(d), BigInt::from(n));
        let b = nagell_bounds(&d, &n)?;
        let classes = fundamental_classes(&d, &n)?;
        let reps: Vec<String> = classes
            .iter()
            .map(|c| format!("({}, {})", c.x0(), c.y0()))
            .collect();
        println!(
            "x² − {d}y² = {n}: y ∈ [{}, {}], classes {}",
            b.y_lo,
            b.y_hi,
            reps.join(" ")
        );

        let sols = solutions_up_to(&d, &n, &BigInt::from(500))?;
        assert_eq!(sols, brute_force_solutions(&d, &n, 500)?);
        println!(
            "  {} solutions with y ≤ 500, matching brute force",
            sols.len()
        );
    }
    Ok(())
}
