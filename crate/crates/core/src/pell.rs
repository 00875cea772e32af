//! Continued fractions of `√D` and the classical Pell equation
//! `x² − Dy² = 1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{is_perfect_square, isqrt, QuadraticSurd};
use crate::error::{Error, Result};

/// `√D = [a0; period, period, ...]` with the minimal repeating block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContinuedFraction {
    #[serde(with = "crate::serde_int")]
    pub a0: BigInt,
    #[serde(with = "crate::serde_int::vec")]
    pub period: Vec<BigInt>,
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};", self.a0)?;
        for (i, q) in self.period.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {q}")?;
        }
        write!(f, " (repeating)]")
    }
}

/// A solution of `x² − Dy² = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PellSolution {
    #[serde(with = "crate::serde_int")]
    pub x: BigInt,
    #[serde(with = "crate::serde_int")]
    pub y: BigInt,
    #[serde(with = "crate::serde_int")]
    pub d: BigInt,
}

impl PellSolution {
    pub fn as_surd(&self) -> QuadraticSurd {
        QuadraticSurd::from_integers(self.x.clone(), self.y.clone(), self.d.clone())
            .expect("radicand validated on construction")
    }

    pub fn satisfies(&self) -> bool {
        &self.x * &self.x - &self.d * &self.y * &self.y == BigInt::one()
    }
}

fn check_radicand(d: &BigInt) -> Result<()> {
    if !d.is_positive() {
        return Err(Error::domain(format!("D must be positive, got {d}")));
    }
    if is_perfect_square(d).is_some() {
        return Err(Error::domain(format!("D = {d} is a perfect square")));
    }
    Ok(())
}

/// Periodic expansion of `√D` via the standard `(m, q, a)` recurrence; the
/// period ends at the first partial quotient equal to `2·a0`.
pub fn cf_sqrt(d: &BigInt) -> Result<ContinuedFraction> {
    check_radicand(d)?;
    let a0 = isqrt(d)?;
    let two_a0 = &a0 << 1u32;
    let (mut m, mut q, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
    let mut period = Vec::new();
    loop {
        m = &q * &a - &m;
        q = (d - &m * &m) / &q;
        a = (&a0 + &m) / &q;
        period.push(a.clone());
        if a == two_a0 {
            break;
        }
    }
    Ok(ContinuedFraction { a0, period })
}

/// Convergent `p/q` after consuming `a0` and the first `len` period terms
/// (cycling through the period as needed).
fn convergent(cf: &ContinuedFraction, len: usize) -> (BigInt, BigInt) {
    let (mut p_prev, mut p) = (BigInt::one(), cf.a0.clone());
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    for a in cf.period.iter().cycle().take(len) {
        let p_next = a * &p + &p_prev;
        let q_next = a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
    (p, q)
}

/// Minimal solution with `y ≥ 1`: the convergent just before the end of the
/// period, or of the doubled period when the period length is odd.
pub fn pell_fundamental(d: &BigInt) -> Result<PellSolution> {
    let cf = cf_sqrt(d)?;
    let len = cf.period.len();
    let take = if len % 2 == 0 { len - 1 } else { 2 * len - 1 };
    let (x, y) = convergent(&cf, take);
    let sol = PellSolution { x, y, d: d.clone() };
    if !sol.satisfies() {
        return Err(Error::internal(format!(
            "convergent ({}, {}) does not solve x² − {}y² = 1",
            sol.x, sol.y, d
        )));
    }
    Ok(sol)
}

/// The first `count` solutions with `y > 0`, in increasing order, as powers
/// of the fundamental solution computed in `Q(√D)`.
pub fn pell_solutions(d: &BigInt, count: usize) -> Result<Vec<PellSolution>> {
    if count == 0 {
        return Err(Error::domain("count must be at least 1"));
    }
    let fundamental = pell_fundamental(d)?;
    let unit = fundamental.as_surd();
    let mut power = unit.clone();
    let mut out = Vec::with_capacity(count);
    out.push(fundamental);
    while out.len() < count {
        power = power.checked_mul(&unit)?;
        let (x, y) = power
            .to_integers()
            .ok_or_else(|| Error::internal("unit power left the integers"))?;
        out.push(PellSolution { x, y, d: d.clone() });
    }
    Ok(out)
}

/// `(x1 + y1√D)(x2 + y2√D)` on integer pairs.
pub(crate) fn compose(
    a: (&BigInt, &BigInt),
    b: (&BigInt, &BigInt),
    d: &BigInt,
) -> (BigInt, BigInt) {
    (a.0 * b.0 + d * a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}
