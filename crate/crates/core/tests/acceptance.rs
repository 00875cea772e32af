//! Acceptance criteria. Each criterion runs under its time limit and prints
//! one PASS/FAIL line; the process exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;

use pellkit::arith::is_perfect_square;
use pellkit::dtuple::{
    admissible_k, pair_extension_theorem, similar_conjecture, similar_fundamental, similar_sieve,
    triple_extension_theorem, verify, DTuple,
};
use pellkit::pell::{cf_sqrt, pell_fundamental, pell_solutions};
use pellkit::pellian::{brute_force_solutions, solutions_up_to};
use pellkit::sequences::{
    factor_even, factor_odd, identity_even, identity_odd, z_congruences, ClosedForm, PairSequence,
};

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, &'static str, u64, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn lib<T>(r: pellkit::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Xₙ for n = 0..=n_max from the plain second-order recurrence
/// yₙ₊₁ = 2(16k²+1)yₙ − yₙ₋₁ with y₋₁ = 0, y₀ = 4k.
fn x_values_reference(k: u64, n_max: usize) -> Vec<BigInt> {
    let t = big(2 * (16 * k * k + 1));
    let (mut prev, mut cur) = (BigInt::zero(), big(4 * k));
    let mut out = Vec::new();
    for _ in 0..=n_max {
        out.push(&cur * &cur * 2u32 - 8 * k * k + 1u32);
        let next = &t * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    out
}

fn ac1() -> Check {
    for k in 1..=30u64 {
        let r = lib(triple_extension_theorem(k, 12))?;
        let reference: Vec<usize> = x_values_reference(k, 12)
            .iter()
            .enumerate()
            .filter(|(_, x)| is_perfect_square(x).is_some())
            .map(|(n, _)| n)
            .collect();
        let squares: Vec<usize> = r
            .square_indices
            .iter()
            .filter(|&&n| n >= 0)
            .map(|&n| n as usize)
            .collect();
        ensure!(
            squares == reference,
            "k = {k}: library {squares:?} vs reference {reference:?}"
        );
        let expect_square = k == 1 || k == 10;
        ensure!(
            squares == if expect_square { vec![0] } else { vec![] },
            "k = {k}: squares at {squares:?}"
        );
        if expect_square {
            let root = r.x0_root.clone().ok_or(format!("k = {k}: no root"))?;
            ensure!(
                &root * &root == big(24 * k * k + 1),
                "k = {k}: 24k²+1 ≠ {root}²"
            );
            ensure!(r.d == Some(big(32 * k * k + 1)), "k = {k}: d = {:?}", r.d);
        }
        ensure!(r.consistent, "k = {k}: report inconsistent");
    }
    Ok(())
}

fn ac2() -> Check {
    for k in 1..=12u64 {
        let r = lib(pair_extension_theorem(k, 2, 10))?;
        ensure!(
            r.no_quadruple_with_c_above_1,
            "k = {k}: quadruple with c > 1"
        );
        let found: Vec<(BigInt, BigInt)> = r
            .quadruples
            .iter()
            .map(|q| (q.c.clone(), q.d.clone()))
            .collect();
        let expected = if k == 1 || k == 10 {
            vec![(big(1), big(32 * k * k + 1))]
        } else {
            vec![]
        };
        ensure!(found == expected, "k = {k}: found {found:?}");
        if k == 1 || k == 10 {
            let e = (8 * k * k) as i64;
            let t = lib(DTuple::from_i64(
                -e,
                &[1, e, e + 1, 32 * (k * k) as i64 + 1],
            ))?;
            ensure!(verify(&t).is_valid(), "k = {k}: quadruple does not verify");
        }
    }
    Ok(())
}

fn ac3() -> Check {
    let ks = lib(admissible_k(6))?;
    let expected: Vec<BigInt> = [1u64, 10, 99, 980, 9701, 96030].map(big).to_vec();
    ensure!(ks == expected, "got {ks:?}");
    ensure!(big(24 * 99 * 99 + 1) == big(485 * 485), "24·99²+1 ≠ 485²");
    let unit = lib(pell_fundamental(&big(24)))?;
    ensure!(
        (unit.x.clone(), unit.y.clone()) == (big(5), big(1)),
        "fundamental ({}, {})",
        unit.x,
        unit.y
    );
    let sols = lib(pell_solutions(&big(24), 6))?;
    for (k, s) in ks.iter().zip(&sols) {
        ensure!(*k == s.y, "k = {k} vs Pell y = {}", s.y);
        ensure!(
            is_perfect_square(&(k * k * 24u32 + 1u32)) == Some(s.x.clone()),
            "k = {k}"
        );
    }
    Ok(())
}

fn ac4() -> Check {
    let mut cases = 0;
    for d in 2..=50u64 {
        if is_perfect_square(&big(d)).is_some() {
            continue;
        }
        for n in (-50i64..=50).filter(|&n| n != 0) {
            let (db, nb) = (big(d), BigInt::from(n));
            let fast = lib(solutions_up_to(&db, &nb, &big(2000)))?;
            let slow = lib(brute_force_solutions(&db, &nb, 2000))?;
            ensure!(
                fast == slow,
                "D = {d}, N = {n}: {} vs {} solutions",
                fast.len(),
                slow.len()
            );
            cases += 1;
        }
    }
    ensure!(cases == 43 * 100, "{cases} cases");
    Ok(())
}

fn ac5() -> Check {
    for k in 1..=20u64 {
        let cf = lib(ClosedForm::new(k))?;
        ensure!(
            lib(cf.coefficient_checks())?.cross_terms_vanish,
            "k = {k}: c₁c₄ + c₂c₃ ≠ 0"
        );
        let seq = lib(PairSequence::build(k, 15))?;
        for e in seq.entries() {
            ensure!(
                lib(cf.entry(e.index))? == (e.y.clone(), e.z.clone()),
                "k = {k}, n = {}",
                e.index
            );
        }
        for n in 0..=7 {
            ensure!(
                lib(identity_odd(k, n))?.holds,
                "k = {k}, n = {n}: y₂ₙ₊₁ ≠ 2yₙzₙ"
            );
            if n >= 1 {
                ensure!(
                    lib(identity_even(k, n))?.holds,
                    "k = {k}, n = {n}: z₂ₙ − 1 ≠ (yₙ+yₙ₋₁)²"
                );
            }
            let fo = lib(factor_odd(k, n))?;
            ensure!(
                fo.product_matches && fo.coprime,
                "k = {k}, n = {n}: odd factorization"
            );
            let fe = lib(factor_even(k, n))?;
            ensure!(
                fe.product_matches && fe.coprime,
                "k = {k}, n = {n}: even factorization"
            );
        }
    }
    Ok(())
}

fn ac6() -> Check {
    for k in 1..=20u64 {
        let z = lib(z_congruences(k, 30))?;
        ensure!(z.mod_k_holds, "k = {k}: zₙ ≢ 1 (mod k)");
        ensure!(
            z.alternation_holds,
            "k = {k}: alternation fails at {:?}",
            z.counterexample
        );
    }
    Ok(())
}

fn ac7() -> Check {
    for k in (1..=300u64).filter(|k| matches!(k % 6, 2 | 3)) {
        ensure!(!lib(similar_sieve(k))?.passes(), "k = {k}: sieve passes");
    }
    let mut witnessed = false;
    for k in 1..=60u64 {
        let r = lib(similar_conjecture(k, 1_000_000))?;
        for ext in &r.extensions {
            ensure!(
                r.sieve_passes,
                "k = {k}: extension {} although sieve obstructs",
                ext.d
            );
            ensure!(
                ext.d == r.predicted_d,
                "k = {k}: extension {} ≠ 8k²+4k+1",
                ext.d
            );
            ensure!(
                r.square_root_7k2.is_some(),
                "k = {k}: 7k²+4k+1 not a square"
            );
        }
        if k == 5 {
            let ds: Vec<BigInt> = r.extensions.iter().map(|e| e.d.clone()).collect();
            ensure!(ds == vec![big(221)], "k = 5: extensions {ds:?}");
            ensure!(r.square_root_7k2 == Some(big(14)), "k = 5: 196 ≠ 14²");
            witnessed = true;
        }
    }
    ensure!(witnessed, "k = 5 witness missing");
    for k in 1..=20u64 {
        let r = lib(similar_fundamental(k))?;
        ensure!(
            r.single_pair,
            "k = {k}: classes are not exactly (±(2k+2), 1)"
        );
        ensure!(r.congruences_hold, "k = {k}: y ≢ ±1 (mod 4k+2)");
    }
    Ok(())
}

fn ac8() -> Check {
    for k in 1..=50u64 {
        let d = big(16 * k * k + 2);
        let cf = lib(cf_sqrt(&d))?;
        ensure!(
            cf.a0 == big(4 * k) && cf.period == vec![big(4 * k), big(8 * k)],
            "k = {k}: √{d} = {cf}"
        );
        let u = lib(pell_fundamental(&d))?;
        ensure!(
            u.x == big(16 * k * k + 1) && u.y == big(4 * k),
            "k = {k}: ({}, {})",
            u.x,
            u.y
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("AC1", "squares among Xₙ, k ≤ 30, n ≤ 12", 5, ac1),
        (
            "AC2",
            "no {8k², 8k²+1, c, d} with 1 < c < d, k ≤ 12",
            10,
            ac2,
        ),
        ("AC3", "admissible k sequence", 1, ac3),
        (
            "AC4",
            "pellian oracle equivalence, D ≤ 50, |N| ≤ 50",
            60,
            ac4,
        ),
        ("AC5", "identity suite, k ≤ 20, n ≤ 7", 10, ac5),
        ("AC6", "congruence suite, k ≤ 20, n ≤ 30", 2, ac6),
        (
            "AC7",
            "{1, 2k², 2k²+2k+1} sieve, search and classes",
            120,
            ac7,
        ),
        ("AC8", "continued fractions of √(16k²+2), k ≤ 50", 1, ac8),
    ];
    let mut failed = 0;
    for (id, name, limit, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(()) if elapsed <= Duration::from_secs(limit) => Ok(()),
            Ok(()) => Err("exceeded time limit".to_string()),
            Err(e) => Err(e),
        };
        let timing = format!("{:.3} s, limit {limit} s", elapsed.as_secs_f64());
        match verdict {
            Ok(()) => println!("PASS {id} {name} ({timing})"),
            Err(e) => {
                failed += 1;
                println!("FAIL {id} {name} ({timing}): {e}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
