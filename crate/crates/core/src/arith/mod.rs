//! Exact integer primitives: square roots and square detection, gcd, the
//! Jacobi symbol, trial-division factorization, plus exact arithmetic in
//! `Q(√D)` (see [`QuadraticSurd`]).

mod surd;

pub use surd::{surd_mul, QuadraticSurd};

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `⌊√n⌋` for `n ≥ 0`.
pub fn isqrt(n: &BigInt) -> Result<BigInt> {
    if n.is_negative() {
        return Err(Error::domain(format!("isqrt of negative value {n}")));
    }
    Ok(n.sqrt())
}

/// Returns the nonnegative root when `n` is a perfect square.
pub fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let sieve = SquareSieve::global();
    if !sieve.admits_big(n.magnitude()) {
        return None;
    }
    let root = n.sqrt();
    if &(&root * &root) == n {
        Some(root)
    } else {
        None
    }
}

/// Greatest common divisor, always nonnegative; `gcd(0, 0) = 0`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Jacobi symbol `(a/m)` for odd `m ≥ 1`.
pub fn jacobi(a: &BigInt, m: &BigInt) -> Result<i8> {
    if !m.is_positive() || m.is_even() {
        return Err(Error::domain(format!(
            "Jacobi symbol needs an odd positive modulus, got {m}"
        )));
    }
    let mut a = a.mod_floor(m);
    let mut m = m.clone();
    let mut sign = 1i8;
    while !a.is_zero() {
        let twos = a.trailing_zeros().unwrap_or(0);
        a >>= twos;
        // (2/m) = -1 exactly when m ≡ 3, 5 (mod 8)
        let m8 = low_bits(&m, 8);
        if twos % 2 == 1 && (m8 == 3 || m8 == 5) {
            sign = -sign;
        }
        // reciprocity: flip when both are 3 mod 4
        if low_bits(&a, 4) == 3 && low_bits(&m, 4) == 3 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut m);
        a = a.mod_floor(&m);
    }
    Ok(if m.is_one() { sign } else { 0 })
}

fn low_bits(n: &BigInt, modulus: u64) -> u64 {
    debug_assert!(modulus.is_power_of_two());
    n.magnitude().iter_u64_digits().next().unwrap_or(0) & (modulus - 1)
}

/// Complete factorization into `(prime, exponent)` pairs, primes ascending.
///
/// Plain trial division up to `⌊√n⌋`; `factorize(1)` is empty.
pub fn factorize(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    if !n.is_positive() {
        return Err(Error::domain(format!("cannot factorize {n}")));
    }
    if let Some(small) = n.to_u64() {
        return Ok(factorize_u64(small)
            .into_iter()
            .map(|(p, e)| (BigInt::from(p), e))
            .collect());
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut p = BigInt::from(2u32);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if !rest.is_one() {
        out.push((rest, 1));
    }
    Ok(out)
}

fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Quadratic-residue tables for the moduli 64, 63, 65 and 11.
///
/// A value whose residue modulo any of these is a non-square cannot be a
/// perfect square. Roughly 99.4% of non-squares are rejected by the tables.
#[derive(Debug)]
pub struct SquareSieve {
    tables: [(u64, Vec<bool>); 4],
}

impl SquareSieve {
    pub const MODULI: [u64; 4] = [64, 63, 65, 11];
    /// Product of [`Self::MODULI`]; reducing modulo this keeps all residues.
    pub const COMBINED: u64 = 64 * 63 * 65 * 11;

    fn new() -> Self {
        let table = |m: u64| {
            let mut t = vec![false; m as usize];
            for x in 0..m {
                t[((x * x) % m) as usize] = true;
            }
            (m, t)
        };
        SquareSieve {
            tables: Self::MODULI.map(table),
        }
    }

    pub fn global() -> &'static SquareSieve {
        static SIEVE: OnceLock<SquareSieve> = OnceLock::new();
        SIEVE.get_or_init(SquareSieve::new)
    }

    /// `r` is any nonnegative representative of the value modulo a multiple
    /// of [`Self::COMBINED`].
    #[inline]
    pub fn admits(&self, r: u64) -> bool {
        self.tables.iter().all(|(m, t)| t[(r % m) as usize])
    }

    pub fn admits_big(&self, n: &BigUint) -> bool {
        let r = (n % Self::COMBINED).to_u64().unwrap_or(0);
        self.admits(r)
    }

    /// Residue of a signed value modulo [`Self::COMBINED`], in `[0, COMBINED)`.
    pub fn reduce(n: &BigInt) -> u64 {
        let r = (n.magnitude() % Self::COMBINED).to_u64().unwrap_or(0);
        if n.sign() == Sign::Minus && r != 0 {
            Self::COMBINED - r
        } else {
            r
        }
    }
}
