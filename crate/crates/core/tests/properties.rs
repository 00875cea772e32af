use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

use pellkit::arith::{factorize, gcd, is_perfect_square, isqrt, jacobi, QuadraticSurd};
use pellkit::dtuple::{extend_search, extend_search_naive, similar_sieve, verify, DTuple};
use pellkit::pell::{cf_sqrt, pell_fundamental};
use pellkit::pellian::{brute_force_solutions, fundamental_classes, solutions_up_to};
use pellkit::sequences::{closed_form_entry, PairSequence};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|p| p * p <= n)
            .all(|p| !n.is_multiple_of(p))
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn nonsquare(d: u64) -> bool {
    let r = (d as f64).sqrt() as u64;
    !(r.saturating_sub(1)..=r + 1).any(|x| x * x == d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn isqrt_brackets(hi in any::<u64>(), lo in any::<u64>()) {
        let n = (BigInt::from(hi) << 64u32) + BigInt::from(lo);
        let r = isqrt(&n).unwrap();
        prop_assert!(&r * &r <= n);
        let r1 = &r + 1u32;
        prop_assert!(&r1 * &r1 > n);
    }

    #[test]
    fn squares_detected(m in any::<u64>(), off in 1u64..1000) {
        let m = BigInt::from(m);
        let sq = &m * &m;
        prop_assert_eq!(is_perfect_square(&sq), Some(m.clone()));
        // strictly between m² and (m+1)² when off ≤ 2m
        if m > BigInt::from(off) {
            prop_assert_eq!(is_perfect_square(&(&sq + off)), None);
        }
    }

    #[test]
    fn jacobi_matches_euler(a in -2000i64..2000, i in 0usize..94) {
        let p = (3u64..500).filter(|&p| is_prime(p)).nth(i).unwrap();
        let e = pow_mod(a.rem_euclid(p as i64) as u64, (p - 1) / 2, p);
        let expected = match e { 0 => 0, 1 => 1, _ => -1 };
        prop_assert_eq!(jacobi(&big(a), &BigInt::from(p)).unwrap(), expected);
    }

    #[test]
    fn jacobi_multiplicative_in_modulus(a in -500i64..500, m1 in 0u64..200, m2 in 0u64..200) {
        let (m1, m2) = (2 * m1 + 1, 2 * m2 + 1);
        let j = |m: u64| jacobi(&big(a), &BigInt::from(m)).unwrap();
        prop_assert_eq!(j(m1 * m2), j(m1) * j(m2));
    }

    #[test]
    fn factorize_roundtrip(n in 1u64..100_000) {
        let f = factorize(&BigInt::from(n)).unwrap();
        let mut prod = BigInt::one();
        for w in f.windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
        for (p, e) in &f {
            prop_assert!(is_prime(p.to_u64().unwrap()));
            prop_assert!(*e >= 1);
            prod *= p.pow(*e);
        }
        prop_assert_eq!(prod, BigInt::from(n));
    }

    #[test]
    fn gcd_divides(a in -10_000i64..10_000, b in -10_000i64..10_000) {
        let g = gcd(&big(a), &big(b));
        if a != 0 || b != 0 {
            prop_assert!(g > BigInt::from(0));
            prop_assert_eq!(big(a) % &g, big(0));
            prop_assert_eq!(big(b) % &g, big(0));
        }
    }

    #[test]
    fn surd_norm_multiplicative(
        a1 in -50i64..50, b1 in -50i64..50, q1 in 1i64..20,
        a2 in -50i64..50, b2 in -50i64..50, q2 in 1i64..20,
        d in 2u64..300,
    ) {
        prop_assume!(nonsquare(d));
        let d = BigInt::from(d);
        let u = QuadraticSurd::from_fraction(big(a1), big(b1), big(q1), d.clone()).unwrap();
        let v = QuadraticSurd::from_fraction(big(a2), big(b2), big(q2), d).unwrap();
        let uv = u.checked_mul(&v).unwrap();
        prop_assert_eq!(uv.norm(), u.norm() * v.norm());
        prop_assert_eq!(u.conjugate().conjugate(), u.clone());
        prop_assert_eq!(uv.conjugate(), u.conjugate().checked_mul(&v.conjugate()).unwrap());
        let n = u.norm();
        prop_assert_eq!(u.checked_mul(&u.conjugate()).unwrap().a().clone(), n);
        if !u.is_zero() {
            let one = u.checked_mul(&u.inverse().unwrap()).unwrap();
            prop_assert_eq!(one.a().clone(), BigRational::one());
            prop_assert!(one.b() == &BigRational::from_integer(big(0)));
        }
    }

    #[test]
    fn pell_fundamental_is_minimal(d in 2u64..3000) {
        prop_assume!(nonsquare(d));
        let u = pell_fundamental(&BigInt::from(d)).unwrap();
        prop_assert!(u.satisfies());
        // no smaller positive y solves it, checked up to a cap
        let y_cap = u.y.to_u64().unwrap_or(u64::MAX).min(100_000);
        for y in 1..y_cap {
            let v = 1 + (d as u128) * (y as u128) * (y as u128);
            let r = (v as f64).sqrt() as u128;
            prop_assert!(!(r.saturating_sub(1)..=r + 1).any(|x| x * x == v), "y = {} smaller", y);
        }
        // period is palindromic up to the final 2a₀ term
        let cf = cf_sqrt(&BigInt::from(d)).unwrap();
        let (last, body) = cf.period.split_last().unwrap();
        prop_assert_eq!(last, &(&cf.a0 * 2u32));
        prop_assert!(body.iter().eq(body.iter().rev()));
    }

    #[test]
    fn pellian_matches_brute_force(d in 2i64..80, n in -80i64..80) {
        prop_assume!(n != 0 && nonsquare(d as u64));
        let (d, n) = (big(d), big(n));
        let fast = solutions_up_to(&d, &n, &big(400)).unwrap();
        prop_assert_eq!(fast, brute_force_solutions(&d, &n, 400).unwrap());
        let classes = fundamental_classes(&d, &n).unwrap();
        for (i, c) in classes.iter().enumerate() {
            for other in &classes[i + 1..] {
                prop_assert!(!c.is_associate(other));
            }
        }
    }

    #[test]
    fn closed_forms_match_sequences(k in 1u64..300, n in -1i64..8) {
        let seq = PairSequence::build(k, n.max(0)).unwrap();
        let e = seq.entry(n).unwrap();
        prop_assert_eq!(closed_form_entry(k, n).unwrap(), (e.y.clone(), e.z.clone()));
        let d = BigInt::from(16 * k * k + 2);
        prop_assert_eq!(&e.z * &e.z - &d * &e.y * &e.y, big(1));
        let k2 = BigInt::from(k * k);
        prop_assert_eq!(seq.x_value(n).unwrap(), &e.y * &e.y * 2u32 - k2 * 8u32 + 1u32);
    }

    #[test]
    fn filtered_search_matches_naive(
        n in -60i64..60,
        elems in proptest::collection::btree_set(1i64..60, 1..4),
    ) {
        prop_assume!(n != 0);
        let elems: Vec<i64> = elems.into_iter().collect();
        let t = DTuple::from_i64(n, &elems).unwrap();
        let fast = extend_search(&t, 5_000).unwrap();
        prop_assert_eq!(&fast, &extend_search_naive(&t, 5_000).unwrap());
        for d in fast {
            prop_assert!(verify(&t.with(d.clone()).unwrap()).pairs.iter()
                .filter(|p| p.a == d || p.b == d)
                .all(|p| p.is_square()));
        }
    }

    #[test]
    fn verify_is_order_independent(elems in proptest::collection::vec(1i64..10_000, 2..6), n in -100i64..100) {
        prop_assume!(n != 0);
        let mut sorted = elems.clone();
        sorted.sort();
        sorted.dedup();
        prop_assume!(sorted.len() == elems.len());
        let mut rev = elems.clone();
        rev.reverse();
        prop_assert_eq!(
            verify(&DTuple::from_i64(n, &elems).unwrap()),
            verify(&DTuple::from_i64(n, &rev).unwrap())
        );
    }

    #[test]
    fn similar_sieve_matches_residue_scan(k in 1u64..3000) {
        let m = 2 * k + 1;
        let solvable = (0..m).any(|x| (4 * x * x) % m == 3 % m);
        prop_assert_eq!(similar_sieve(k).unwrap().passes(), solvable);
    }
}
