use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::is_perfect_square;
use crate::error::{Error, Result};

/// Exact value `a + b·√D` with rational `a`, `b` and nonsquare `D > 0`.
///
/// Components are kept in lowest terms with positive denominators, so the
/// derived equality is numeric equality for a common `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: BigRational,
    b: BigRational,
    d: BigInt,
}

impl QuadraticSurd {
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Result<Self> {
        if !d.is_positive() {
            return Err(Error::domain(format!(
                "surd radicand must be positive, got {d}"
            )));
        }
        if is_perfect_square(&d).is_some() {
            return Err(Error::domain(format!(
                "surd radicand {d} is a perfect square"
            )));
        }
        Ok(QuadraticSurd { a, b, d })
    }

    pub fn from_integers(a: BigInt, b: BigInt, d: BigInt) -> Result<Self> {
        Self::new(
            BigRational::from_integer(a),
            BigRational::from_integer(b),
            d,
        )
    }

    /// `(a_num + b_num·√D) / den`.
    pub fn from_fraction(a_num: BigInt, b_num: BigInt, den: BigInt, d: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        Self::new(
            BigRational::new(a_num, den.clone()),
            BigRational::new(b_num, den),
            d,
        )
    }

    pub fn one(d: &BigInt) -> Result<Self> {
        Self::from_integers(BigInt::one(), BigInt::zero(), d.clone())
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QuadraticSurd {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    /// `a² − D·b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(self.d.clone()) * &self.b * &self.b
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::domain(format!(
                "mismatched radicands √{} and √{}",
                self.d, other.d
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(QuadraticSurd {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.d.clone(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(QuadraticSurd {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.d.clone(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let d = BigRational::from_integer(self.d.clone());
        QuadraticSurd {
            a: &self.a * &other.a + d * &self.b * &other.b,
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.d.clone(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        QuadraticSurd {
            a: &self.a * factor,
            b: &self.b * factor,
            d: self.d.clone(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::domain("zero has no inverse"));
        }
        Ok(self.conjugate().scale(&norm.recip()))
    }

    /// Integer power by repeated squaring; negative exponents go through the
    /// inverse.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = QuadraticSurd {
            a: BigRational::one(),
            b: BigRational::zero(),
            d: self.d.clone(),
        };
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        Ok(acc)
    }

    /// `Some((a, b))` when both components are integers.
    pub fn to_integers(&self) -> Option<(BigInt, BigInt)> {
        if self.a.is_integer() && self.b.is_integer() {
            Some((self.a.to_integer(), self.b.to_integer()))
        } else {
            None
        }
    }
}

impl Neg for QuadraticSurd {
    type Output = QuadraticSurd;

    fn neg(self) -> Self::Output {
        QuadraticSurd {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}√{}", self.a, -&self.b, self.d)
        } else {
            write!(f, "{} + {}√{}", self.a, self.b, self.d)
        }
    }
}

/// Exact product of two surds over the same radicand.
pub fn surd_mul(u: &QuadraticSurd, v: &QuadraticSurd) -> Result<QuadraticSurd> {
    u.checked_mul(v)
}
