//! D(n)-tuple verification and bounded extension search.

use pellkit::dtuple::{brown_filter, extend_search, extend_search_naive, verify, DTuple};

fn main() -> pellkit::Result<()> {
    for (n, e) in [
        (-8, vec![1, 8, 9, 33]),
        (-800, vec![1, 800, 801, 3201]),
        (-8, vec![1, 8, 9, 34]),
    ] {
        let r = verify(&DTuple::from_i64(n, &e)?);
        println!("{e:?} with n = {n}: {:?}", r.status);
        for p in &r.pairs {
            match &p.root {
                Some(r) => println!("  {}·{} + ({n}) = {} = {r}²", p.a, p.b, p.value),
                None => println!("  {}·{} + ({n}) = {} is not a square", p.a, p.b, p.value),
            }
        }
    }

    let t = DTuple::from_i64(-25, &[1, 50, 61])?;
    let found = extend_search(&t, 1_000_000)?;
    assert_eq!(found, extend_search_naive(&t, 1_000_000)?);
    println!("\n{{1, 50, 61}} with n = -25 extends by {found:?}");

    for n in [-18, -8, 6] {
        println!("n = {n}: {:?}", brown_filter(&n.into()));
    }
    Ok(())
}
