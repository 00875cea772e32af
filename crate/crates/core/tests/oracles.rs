//! Deterministic sweeps against independently computed reference values.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use pellkit::arith::is_perfect_square;
use pellkit::dtuple::{d0_descent_step, extend_search, pair_extension_theorem, DTuple};
use pellkit::pell::{pell_fundamental, pell_solutions};
use pellkit::pellian::{brute_force_solutions, fundamental_classes, nagell_bounds};
use pellkit::sequences::{
    factor_even, factor_odd, s_sequence, v_sequence, w_sequence, PairSequence,
};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn u64_sqrt_exact(v: u64) -> Option<u64> {
    let r = (v as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).find(|x| x * x == v)
}

/// Smallest y ≤ cap with 1 + Dy² square, by direct scan.
fn brute_pell(d: u64, cap: u64) -> Option<(u64, u64)> {
    (1..=cap).find_map(|y| u64_sqrt_exact(1 + d * y * y).map(|x| (x, y)))
}

#[test]
fn pell_fundamental_against_scan() {
    let mut scanned = 0;
    for d in 2..=200u64 {
        if u64_sqrt_exact(d).is_some() {
            continue;
        }
        let u = pell_fundamental(&BigInt::from(d)).unwrap();
        assert!(u.satisfies(), "D = {d}");
        match brute_pell(d, 1_000_000) {
            Some((x, y)) => {
                assert_eq!((u.x.to_u64(), u.y.to_u64()), (Some(x), Some(y)), "D = {d}");
                scanned += 1;
            }
            // the scan cap is below the fundamental y; only the identity is checked
            None => assert!(u.y > big(1_000_000), "D = {d}"),
        }
    }
    assert!(scanned > 150);
}

#[test]
fn mixed_recurrences_match_pell_powers() {
    // (zₙ, yₙ) is the (n+1)-th power of the fundamental unit (16k²+1, 4k)
    for k in 1..=30u64 {
        let seq = PairSequence::build(k, 8).unwrap();
        let powers = pell_solutions(&BigInt::from(16 * k * k + 2), 9).unwrap();
        for (n, p) in (0..=8).zip(&powers) {
            assert_eq!(seq.z(n).unwrap(), &p.x, "k = {k}, n = {n}");
            assert_eq!(seq.y(n).unwrap(), &p.y, "k = {k}, n = {n}");
        }
    }
}

#[test]
fn sequences_against_reference_values() {
    let expect = |k, ys: &[i64], zs: &[i64]| {
        let seq = PairSequence::build(k, ys.len() as i64 - 2).unwrap();
        for (i, (y, z)) in ys.iter().zip(zs).enumerate() {
            let n = i as i64 - 1;
            assert_eq!((seq.y(n).unwrap(), seq.z(n).unwrap()), (&big(*y), &big(*z)));
        }
    };
    expect(1, &[0, 4, 136, 4620, 156944], &[1, 17, 577, 19601, 665857]);
    expect(2, &[0, 8, 1040], &[1, 65, 8449]);
}

#[test]
fn factorizations_against_reference_values() {
    let fo = factor_odd(1, 0).unwrap();
    assert_eq!((fo.f1, fo.f2), (big(65), big(569)));
    let fo = factor_odd(2, 0).unwrap();
    assert_eq!((fo.f1.clone(), fo.f2.clone()), (big(257), big(8417)));
    assert_eq!(fo.x_value, big(2_163_169));
    let fe = factor_even(1, 1).unwrap();
    assert_eq!((fe.f1, fe.f2), (big(2177), big(19609)));
    let fe = factor_even(2, 1).unwrap();
    assert_eq!((fe.f1, fe.f2), (big(33281), big(1_098_337)));
    for k in 1..=25 {
        for n in 0..=5 {
            assert!(factor_odd(k, n).unwrap().all_hold(), "k = {k}, n = {n}");
            assert!(factor_even(k, n).unwrap().all_hold(), "k = {k}, n = {n}");
        }
    }
}

#[test]
fn w_sequence_reference() {
    let w = w_sequence(&big(33), &big(4), &big(2), &big(17), 3).unwrap();
    assert_eq!(w, vec![big(2), big(266), big(34578)]);
}

#[test]
fn s_and_v_sequences_solve_their_equations() {
    for k in 1..=10u64 {
        let e = 8 * k * k;
        for s in s_sequence(k, 5).unwrap() {
            // (8k²+1)(2s²+1) − 8k² is a square
            let v = (BigInt::from(e + 1)) * (&s * &s * 2u32 + 1u32) - e;
            assert!(is_perfect_square(&v).is_some(), "k = {k}, s = {s}");
        }
        for v in v_sequence(k, 5).unwrap() {
            let d = &v * &v * 2u32 + 1u32;
            let t = BigInt::from(e) * &d - e;
            assert!(is_perfect_square(&t).is_some(), "k = {k}, v = {v}");
            let t = BigInt::from(e + 1) * &d - e;
            assert!(is_perfect_square(&t).is_some(), "k = {k}, v = {v}");
        }
    }
}

#[test]
fn pellian_reference_values() {
    let sols = |d: i64, n: i64| brute_force_solutions(&big(d), &big(n), 10).unwrap();
    let pairs = |v: &[(i64, i64)]| v.iter().map(|&(x, y)| (big(x), big(y))).collect::<Vec<_>>();
    assert_eq!(sols(2, -7), pairs(&[(1, 2), (5, 4), (11, 8)]));
    assert_eq!(sols(66, 25), pairs(&[(5, 0), (17, 2), (49, 6)]));
    assert_eq!(sols(18, 1), pairs(&[(1, 0), (17, 4)]));

    let b = nagell_bounds(&big(66), &big(25)).unwrap();
    assert_eq!((b.y_lo, b.y_hi), (big(0), big(3)));
}

#[test]
fn descent_certificates_for_every_class() {
    // every class of z² − 2cx² = c − 8k² yields {8k², 8k²+1, d₀, c} with
    // the two certificates involving 8k² and c both square
    for k in 1..=6u64 {
        let s = s_sequence(k, 3).unwrap();
        let e = 8 * k * k;
        for sv in &s[1..] {
            let c = sv * sv * 2u32 + 1u32;
            let classes = fundamental_classes(&(&c * 2u32), &(&c - e)).unwrap();
            assert!(!classes.is_empty(), "k = {k}, c = {c}");
            for cl in &classes {
                let cert = d0_descent_step(k, &c, cl).unwrap();
                assert!(cert.with_8k2.is_square() && cert.with_c.is_square());
                assert!(cert.d0_below_c);
            }
        }
    }
}

#[test]
fn pair_grid_finds_only_c_equal_one() {
    for k in 1..=8 {
        let r = pair_extension_theorem(k, 2, 10).unwrap();
        assert!(r.no_quadruple_with_c_above_1 && r.consistent, "k = {k}");
    }
}

#[test]
fn extension_search_references() {
    let t = DTuple::from_i64(-8, &[1, 8, 9]).unwrap();
    assert_eq!(extend_search(&t, 1_000_000).unwrap(), vec![big(33)]);
    let t = DTuple::from_i64(-32, &[1, 32, 33]).unwrap();
    assert!(extend_search(&t, 1_000_000).unwrap().is_empty());
    let t = DTuple::from_i64(-25, &[1, 50, 61]).unwrap();
    assert_eq!(extend_search(&t, 1_000_000).unwrap(), vec![big(221)]);
}
