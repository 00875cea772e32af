//! Solution sequences of `z² − (16k²+2)y² = 1` and the quantities derived
//! from them.
//!
//! Indexing follows the shifted convention `(z₋₁, y₋₁) = (1, 0)`,
//! `(z₀, y₀) = (16k²+1, 4k)`, so index `n` corresponds to the unit power
//! `n + 1`. Every function taking an index `n` uses this convention unless
//! noted otherwise. [`s_sequence`], [`v_sequence`] and [`w_sequence`] are
//! instead indexed from the trivial solution (`s₀ = 0`).
//!
//! `Xₙ = 2yₙ² − 8k² + 1` is a square exactly when `d = 2yₙ² + 1` extends
//! `{1, 8k², 8k²+1}` to a D(−8k²)-quadruple; the factorizations below show
//! `Xₙ` is a non-square for every `n ≥ 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{gcd, is_perfect_square, QuadraticSurd};
use crate::error::{Error, Result};
use crate::Guards;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairEntry {
    pub index: i64,
    #[serde(with = "crate::serde_int")]
    pub y: BigInt,
    #[serde(with = "crate::serde_int")]
    pub z: BigInt,
}

/// `(yₙ, zₙ)` for `n = −1..=n_max`, checked on construction against the
/// Pell identity and the second-order recurrences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairSequence {
    #[serde(with = "crate::serde_int")]
    k: BigInt,
    entries: Vec<PairEntry>,
}

fn check_k(k: u64, guards: &Guards) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::domain("k must be positive"));
    }
    if k > guards.k_max {
        return Err(Error::resource(format!(
            "k = {k} exceeds guard {}",
            guards.k_max
        )));
    }
    Ok(BigInt::from(k))
}

/// `16k² + 2`, the radicand of the Pell equation.
pub fn radicand(k: &BigInt) -> BigInt {
    BigInt::from(16u32) * k * k + 2u32
}

impl PairSequence {
    pub fn build(k: u64, n_max: i64) -> Result<Self> {
        Self::build_with(k, n_max, &Guards::default())
    }

    pub fn build_with(k: u64, n_max: i64, guards: &Guards) -> Result<Self> {
        let kb = check_k(k, guards)?;
        if n_max < 0 {
            return Err(Error::domain("n_max must be nonnegative"));
        }
        if n_max > guards.n_max {
            return Err(Error::resource(format!(
                "n_max = {n_max} exceeds guard {}",
                guards.n_max
            )));
        }
        let d = radicand(&kb);
        let base = &d - 1u32; // 16k² + 1
        let four_k = &kb * 4u32;

        let mut entries = Vec::with_capacity(n_max as usize + 2);
        entries.push(PairEntry {
            index: -1,
            y: BigInt::zero(),
            z: BigInt::one(),
        });
        for index in 0..=n_max {
            let prev = entries.last().expect("seeded");
            let z = &base * &prev.z + &four_k * &d * &prev.y;
            let y = &base * &prev.y + &four_k * &prev.z;
            entries.push(PairEntry { index, y, z });
        }

        let seq = PairSequence { k: kb, entries };
        seq.check_invariants(&d, &base)?;
        Ok(seq)
    }

    fn check_invariants(&self, d: &BigInt, base: &BigInt) -> Result<()> {
        for e in &self.entries {
            if &e.z * &e.z - d * &e.y * &e.y != BigInt::one() {
                return Err(Error::internal(format!(
                    "entry {} violates z² − {d}y² = 1",
                    e.index
                )));
            }
        }
        let twice = base * 2u32;
        for w in self.entries.windows(3) {
            let z_ok = w[2].z == &twice * &w[1].z - &w[0].z;
            let y_ok = w[2].y == &twice * &w[1].y - &w[0].y;
            if !(z_ok && y_ok) {
                return Err(Error::internal(format!(
                    "second-order recurrence fails at index {}",
                    w[2].index
                )));
            }
        }
        Ok(())
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn n_max(&self) -> i64 {
        self.entries.last().map_or(-1, |e| e.index)
    }

    pub fn entries(&self) -> &[PairEntry] {
        &self.entries
    }

    pub fn entry(&self, n: i64) -> Result<&PairEntry> {
        usize::try_from(n + 1)
            .ok()
            .and_then(|i| self.entries.get(i))
            .ok_or_else(|| {
                Error::domain(format!(
                    "index {n} outside built range -1..={}",
                    self.n_max()
                ))
            })
    }

    pub fn y(&self, n: i64) -> Result<&BigInt> {
        Ok(&self.entry(n)?.y)
    }

    pub fn z(&self, n: i64) -> Result<&BigInt> {
        Ok(&self.entry(n)?.z)
    }

    /// `Xₙ = 2yₙ² − 8k² + 1`.
    pub fn x_value(&self, n: i64) -> Result<BigInt> {
        let y = self.y(n)?;
        Ok(x_from_y(&self.k, y))
    }

    /// `(n, Xₙ)` for `n = 0..=n_max`.
    pub fn x_sequence(&self) -> Vec<(i64, BigInt)> {
        self.entries
            .iter()
            .filter(|e| e.index >= 0)
            .map(|e| (e.index, x_from_y(&self.k, &e.y)))
            .collect()
    }
}

fn eight_k2(k: &BigInt) -> BigInt {
    BigInt::from(8u32) * k * k
}

fn x_from_y(k: &BigInt, y: &BigInt) -> BigInt {
    BigInt::from(2u32) * y * y - eight_k2(k) + 1u32
}

pub fn build_pair_sequence(k: u64, n_max: i64) -> Result<PairSequence> {
    PairSequence::build(k, n_max)
}

pub fn x_value(k: u64, n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::domain("X is indexed from 0"));
    }
    PairSequence::build(k, n)?.x_value(n)
}

/// Closed forms `yₙ = c₁αⁿ + c₂ᾱⁿ`, `zₙ = c₃αⁿ + c₄ᾱⁿ` with
/// `α = 16k²+1 + 4k√(16k²+2)`, held in exact surd arithmetic.
#[derive(Clone, Debug)]
pub struct ClosedForm {
    pub alpha: QuadraticSurd,
    pub c1: QuadraticSurd,
    pub c2: QuadraticSurd,
    pub c3: QuadraticSurd,
    pub c4: QuadraticSurd,
}

impl ClosedForm {
    pub fn new(k: u64) -> Result<Self> {
        let kb = check_k(k, &Guards::default())?;
        let d = radicand(&kb);
        let k2 = &kb * &kb;
        let k3 = &k2 * &kb;
        let k4 = &k2 * &k2;
        let alpha = QuadraticSurd::from_integers(&d - 1u32, &kb * 4u32, d.clone())?;
        // c₁,₂ = (64k³ + 8k ± (16k²+1)√D) / 2D
        let c12_a = &k3 * 64u32 + &kb * 8u32;
        let c12_b = &d - 1u32;
        let c1 = QuadraticSurd::from_fraction(c12_a.clone(), c12_b.clone(), &d * 2u32, d.clone())?;
        let c2 = QuadraticSurd::from_fraction(c12_a, -c12_b, &d * 2u32, d.clone())?;
        // c₃,₄ = (128k⁴ + 24k² + 1 ± (32k³ + 4k)√D) / D
        let c34_a = &k4 * 128u32 + &k2 * 24u32 + 1u32;
        let c34_b = &k3 * 32u32 + &kb * 4u32;
        let c3 = QuadraticSurd::from_fraction(c34_a.clone(), c34_b.clone(), d.clone(), d.clone())?;
        let c4 = QuadraticSurd::from_fraction(c34_a, -c34_b, d.clone(), d.clone())?;
        Ok(ClosedForm {
            alpha,
            c1,
            c2,
            c3,
            c4,
        })
    }

    /// `(yₙ, zₙ)` for `n ≥ −1`; errors if either value is not an integer.
    pub fn entry(&self, n: i64) -> Result<(BigInt, BigInt)> {
        if n < -1 {
            return Err(Error::domain("closed form defined for n ≥ -1"));
        }
        let up = self.alpha.pow(n)?;
        let down = self.alpha.conjugate().pow(n)?;
        let y = self
            .c1
            .checked_mul(&up)?
            .checked_add(&self.c2.checked_mul(&down)?)?;
        let z = self
            .c3
            .checked_mul(&up)?
            .checked_add(&self.c4.checked_mul(&down)?)?;
        let integral = |v: &QuadraticSurd, name: &str| match v.to_integers() {
            Some((a, b)) if b.is_zero() => Ok(a),
            _ => Err(Error::internal(format!(
                "closed form for {name}_{n} is {v}"
            ))),
        };
        Ok((integral(&y, "y")?, integral(&z, "z")?))
    }

    /// Coefficient identities behind `y₂ₙ₊₁ = 2yₙzₙ`.
    pub fn coefficient_checks(&self) -> Result<CoefficientChecks> {
        let two = BigRational::from_integer(2.into());
        let c1c3 = self.c1.checked_mul(&self.c3)?.scale(&two);
        let c2c4 = self.c2.checked_mul(&self.c4)?.scale(&two);
        let cross = self
            .c1
            .checked_mul(&self.c4)?
            .checked_add(&self.c2.checked_mul(&self.c3)?)?;
        Ok(CoefficientChecks {
            leading_matches: c1c3 == self.c1.checked_mul(&self.alpha)?,
            conjugate_matches: c2c4 == self.c2.checked_mul(&self.alpha.conjugate())?,
            cross_terms_vanish: cross.is_zero(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientChecks {
    /// `2c₁c₃ = c₁α`
    pub leading_matches: bool,
    /// `2c₂c₄ = c₂ᾱ`
    pub conjugate_matches: bool,
    /// `c₁c₄ + c₂c₃ = 0`
    pub cross_terms_vanish: bool,
}

impl CoefficientChecks {
    pub fn all(&self) -> bool {
        self.leading_matches && self.conjugate_matches && self.cross_terms_vanish
    }
}

pub fn closed_form_entry(k: u64, n: i64) -> Result<(BigInt, BigInt)> {
    ClosedForm::new(k)?.entry(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddIdentity {
    pub n: i64,
    /// `y₂ₙ₊₁`
    #[serde(with = "crate::serde_int")]
    pub lhs: BigInt,
    /// `2·yₙ·zₙ`
    #[serde(with = "crate::serde_int")]
    pub rhs: BigInt,
    pub holds: bool,
    pub coefficients: CoefficientChecks,
}

/// Checks `y₂ₙ₊₁ = 2yₙzₙ` and the closed-form coefficient identities for `k`.
pub fn identity_odd(k: u64, n: i64) -> Result<OddIdentity> {
    if n < 0 {
        return Err(Error::domain("identity indexed from n = 0"));
    }
    let seq = PairSequence::build(k, 2 * n + 1)?;
    let coefficients = ClosedForm::new(k)?.coefficient_checks()?;
    odd_identity_on(&seq, n, coefficients)
}

pub(crate) fn odd_identity_on(
    seq: &PairSequence,
    n: i64,
    coefficients: CoefficientChecks,
) -> Result<OddIdentity> {
    let lhs = seq.y(2 * n + 1)?.clone();
    let rhs = BigInt::from(2u32) * seq.y(n)? * seq.z(n)?;
    Ok(OddIdentity {
        n,
        holds: lhs == rhs,
        lhs,
        rhs,
        coefficients,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenIdentity {
    pub n: i64,
    /// `z₂ₙ − 1`
    #[serde(with = "crate::serde_int")]
    pub lhs: BigInt,
    /// `yₙ + yₙ₋₁`
    #[serde(with = "crate::serde_int")]
    pub root: BigInt,
    /// `z₂ₙ − 1 = (yₙ + yₙ₋₁)²`
    pub holds: bool,
    /// Whether `z₂ₙ − 1 = ((yₙ + yₙ₋₁)/4k)²` also holds. It only would under
    /// the unscaled variable `4k·y`, so this is expected to be `false`.
    pub divided_form_holds: bool,
}

pub fn identity_even(k: u64, n: i64) -> Result<EvenIdentity> {
    if n < 0 {
        return Err(Error::domain("identity indexed from n = 0"));
    }
    even_identity_on(&PairSequence::build(k, 2 * n)?, n)
}

pub(crate) fn even_identity_on(seq: &PairSequence, n: i64) -> Result<EvenIdentity> {
    let lhs = seq.z(2 * n)? - 1u32;
    let root = seq.y(n)? + seq.y(n - 1)?;
    let four_k = seq.k() * 4u32;
    let divided_form_holds = root.is_multiple_of(&four_k) && {
        let q = &root / &four_k;
        q.clone() * q == lhs
    };
    Ok(EvenIdentity {
        n,
        holds: &root * &root == lhs,
        lhs,
        root,
        divided_form_holds,
    })
}

/// `X₂ₙ₊₁ = (4yₙ² + 1)(32yₙ²k² + 4yₙ² − 8k² + 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddFactorization {
    pub n: i64,
    #[serde(with = "crate::serde_int")]
    pub f1: BigInt,
    #[serde(with = "crate::serde_int")]
    pub f2: BigInt,
    /// `X₂ₙ₊₁`
    #[serde(with = "crate::serde_int")]
    pub x_value: BigInt,
    pub product_matches: bool,
    pub coprime: bool,
    /// `(2yₙ)² < f1 < (2yₙ + 1)²`, so `f1` is not a square.
    pub f1_squeezed: bool,
}

impl OddFactorization {
    pub fn all_hold(&self) -> bool {
        self.product_matches && self.coprime && self.f1_squeezed
    }
}

pub fn factor_odd(k: u64, n: i64) -> Result<OddFactorization> {
    if n < 0 {
        return Err(Error::domain("factorization indexed from n = 0"));
    }
    factor_odd_on(&PairSequence::build(k, 2 * n + 1)?, n)
}

pub(crate) fn factor_odd_on(seq: &PairSequence, n: i64) -> Result<OddFactorization> {
    let k = seq.k();
    let y = seq.y(n)?;
    let y2 = y * y;
    let f1 = &y2 * 4u32 + 1u32;
    let f2 = &y2 * k * k * 32u32 + &y2 * 4u32 - eight_k2(k) + 1u32;
    let x_value = seq.x_value(2 * n + 1)?;
    let two_y = y * 2u32;
    let below = &two_y * &two_y;
    let above = (&two_y + 1u32) * (&two_y + 1u32);
    Ok(OddFactorization {
        n,
        product_matches: &f1 * &f2 == x_value,
        coprime: gcd(&f1, &f2).is_one(),
        f1_squeezed: below < f1 && f1 < above,
        f1,
        f2,
        x_value,
    })
}

/// `X₂ₙ = ((z₂ₙ − 8k²)/(8k²+1))·(z₂ₙ + 8k²)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenFactorization {
    pub n: i64,
    #[serde(with = "crate::serde_int")]
    pub f1: BigInt,
    #[serde(with = "crate::serde_int")]
    pub f2: BigInt,
    /// `X₂ₙ`
    #[serde(with = "crate::serde_int")]
    pub x_value: BigInt,
    pub product_matches: bool,
    pub coprime: bool,
    /// For `n ≥ 1`: `(yₙ+yₙ₋₁)² < f2 < (yₙ+yₙ₋₁+1)²`. `None` at `n = 0`,
    /// where `X₀ = 24k²+1` may be a square.
    pub f2_squeezed: Option<bool>,
    /// `8k² < 2(yₙ + yₙ₋₁)`, the condition the squeeze needs.
    pub threshold_holds: bool,
    /// `16k³ < yₙ + yₙ₋₁`, the same condition stated for the variable
    /// `4k·y`; reported for comparison only.
    pub scaled_threshold_holds: bool,
}

impl EvenFactorization {
    pub fn all_hold(&self) -> bool {
        self.product_matches && self.coprime && self.f2_squeezed.unwrap_or(true)
    }
}

pub fn factor_even(k: u64, n: i64) -> Result<EvenFactorization> {
    if n < 0 {
        return Err(Error::domain("factorization indexed from n = 0"));
    }
    factor_even_on(&PairSequence::build(k, 2 * n)?, n)
}

pub(crate) fn factor_even_on(seq: &PairSequence, n: i64) -> Result<EvenFactorization> {
    let k = seq.k();
    let e8 = eight_k2(k);
    let z = seq.z(2 * n)?;
    let (f1, rem) = (z - &e8).div_rem(&(&e8 + 1u32));
    if !rem.is_zero() {
        return Err(Error::internal(format!(
            "z_{} − 8k² is not divisible by 8k² + 1 (k = {k})",
            2 * n
        )));
    }
    let f2 = z + &e8;
    let x_value = seq.x_value(2 * n)?;
    let root = seq.y(n)? + seq.y(n - 1)?;
    let f2_squeezed = (n >= 1).then(|| {
        let next = &root + 1u32;
        &root * &root < f2 && f2 < &next * &next
    });
    let k3 = k * k * k;
    Ok(EvenFactorization {
        n,
        product_matches: &f1 * &f2 == x_value,
        coprime: gcd(&f1, &f2).is_one(),
        f2_squeezed,
        threshold_holds: e8 < &root * 2u32,
        scaled_threshold_holds: k3 * 16u32 < root,
        f1,
        f2,
        x_value,
    })
}

/// Residues of `zₙ` modulo `k` and `8k²+1` for `n = −1..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZCongruences {
    #[serde(with = "crate::serde_int")]
    pub k: BigInt,
    #[serde(with = "crate::serde_int::vec")]
    pub mod_k: Vec<BigInt>,
    #[serde(with = "crate::serde_int::vec")]
    pub mod_8k2_plus_1: Vec<BigInt>,
    /// `zₙ ≡ 1 (mod k)` throughout.
    pub mod_k_holds: bool,
    /// Residues alternate `1, 8k², 1, 8k², …` from `n = −1`.
    pub alternation_holds: bool,
    /// First index breaking either pattern.
    pub counterexample: Option<i64>,
}

pub fn z_congruences(k: u64, n_max: i64) -> Result<ZCongruences> {
    z_congruences_on(&PairSequence::build(k, n_max)?)
}

pub(crate) fn z_congruences_on(seq: &PairSequence) -> Result<ZCongruences> {
    let k = seq.k().clone();
    let e8 = eight_k2(&k);
    let m = &e8 + 1u32;
    let unit_mod_k = BigInt::one().mod_floor(&k);
    let mut mod_k = Vec::new();
    let mut mod_m = Vec::new();
    let (mut mod_k_holds, mut alternation_holds) = (true, true);
    let mut counterexample = None;
    for e in seq.entries() {
        let rk = e.z.mod_floor(&k);
        let rm = e.z.mod_floor(&m);
        let expected = if (e.index + 1) % 2 == 0 {
            BigInt::one()
        } else {
            e8.clone()
        };
        let ok_k = rk == unit_mod_k;
        let ok_m = rm == expected;
        mod_k_holds &= ok_k;
        alternation_holds &= ok_m;
        if counterexample.is_none() && !(ok_k && ok_m) {
            counterexample = Some(e.index);
        }
        mod_k.push(rk);
        mod_m.push(rm);
    }
    Ok(ZCongruences {
        k,
        mod_k,
        mod_8k2_plus_1: mod_m,
        mod_k_holds,
        alternation_holds,
        counterexample,
    })
}

/// `s₀ = 0, s₁ = 4k, sᵥ₊₂ = 2(16k²+1)sᵥ₊₁ − sᵥ`: the `y`-coordinates of the
/// unit powers, indexed from the trivial solution.
pub fn s_sequence(k: u64, count: usize) -> Result<Vec<BigInt>> {
    let kb = check_k(k, &Guards::default())?;
    if count == 0 {
        return Err(Error::domain("count must be at least 1"));
    }
    let twice = (radicand(&kb) - 1u32) * 2u32;
    let mut out = vec![BigInt::zero(), &kb * 4u32];
    while out.len() < count {
        let l = out.len();
        let next = &twice * &out[l - 1] - &out[l - 2];
        out.push(next);
    }
    out.truncate(count);
    Ok(out)
}

/// The same sequence as [`s_sequence`], used for the candidate fourth element.
pub fn v_sequence(k: u64, count: usize) -> Result<Vec<BigInt>> {
    s_sequence(k, count)
}

/// Reduces into the symmetric range `(−s/2, s/2]`.
fn symmetric_mod(v: &BigInt, s: &BigInt) -> BigInt {
    let r = v.mod_floor(s);
    if &r * 2u32 > *s {
        r - s
    } else {
        r
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VModPattern {
    pub nu: usize,
    /// `s_ν`, the modulus.
    #[serde(with = "crate::serde_int")]
    pub modulus: BigInt,
    #[serde(with = "crate::serde_int::vec")]
    pub residues: Vec<BigInt>,
    #[serde(with = "crate::serde_int::vec")]
    pub expected: Vec<BigInt>,
    pub holds: bool,
}

/// Checks `vₘ mod s_ν` against the period-`2ν` pattern
/// `0, s₁, …, s_{ν−1}, 0, −s_{ν−1}, …, −s₁` for `m = 0..=m_max`.
pub fn v_mod_pattern(k: u64, nu: usize, m_max: usize) -> Result<VModPattern> {
    if nu == 0 {
        return Err(Error::domain("nu must be at least 1"));
    }
    let v = v_sequence(k, (m_max + 1).max(nu + 1))?;
    let s = v[nu].clone();
    let period = 2 * nu;
    let mut residues = Vec::with_capacity(m_max + 1);
    let mut expected = Vec::with_capacity(m_max + 1);
    for (m, vm) in v.iter().enumerate().take(m_max + 1) {
        residues.push(symmetric_mod(vm, &s));
        let r = m % period;
        let e = if r <= nu {
            v[r].clone()
        } else {
            -&v[period - r]
        };
        expected.push(symmetric_mod(&e, &s));
    }
    Ok(VModPattern {
        nu,
        holds: residues == expected,
        modulus: s,
        residues,
        expected,
    })
}

/// `w₀ = x₀, w₁ = (2c−1)x₀ + 2s·z₀, wₙ₊₂ = 2(2c−1)wₙ₊₁ − wₙ`: the `x`-values
/// of the class of `(z₀, x₀)` in `z² − 2cx² = c − 8k²`.
///
/// Inputs must satisfy `c = 2s² + 1` and `c − (z₀² − 2c·x₀²) = 8k²` for some
/// `k ≥ 1`. Every returned term is `≡ x₀ (mod s)`.
pub fn w_sequence(
    c: &BigInt,
    s: &BigInt,
    x0: &BigInt,
    z0: &BigInt,
    count: usize,
) -> Result<Vec<BigInt>> {
    if count == 0 {
        return Err(Error::domain("count must be at least 1"));
    }
    if !s.is_positive() || *c != s * s * 2u32 + 1u32 {
        return Err(Error::domain(format!("c = {c} is not 2s² + 1 for s = {s}")));
    }
    let lhs = z0 * z0 - c * x0 * x0 * 2u32;
    let gap = c - &lhs;
    let consistent = gap.is_positive()
        && gap.is_multiple_of(&BigInt::from(8u32))
        && is_perfect_square(&(&gap / 8u32)).is_some_and(|r| r.is_positive());
    if !consistent {
        return Err(Error::domain(format!(
            "(z0, x0) = ({z0}, {x0}) does not solve z² − 2cx² = c − 8k² for any k ≥ 1"
        )));
    }
    let unit_x = c * 2u32 - 1u32;
    let mut out = vec![x0.clone(), &unit_x * x0 + s * z0 * 2u32];
    let twice = &unit_x * 2u32;
    while out.len() < count {
        let l = out.len();
        let next = &twice * &out[l - 1] - &out[l - 2];
        out.push(next);
    }
    out.truncate(count);
    let x0_mod = x0.mod_floor(s);
    if let Some(bad) = out.iter().position(|w| w.mod_floor(s) != x0_mod) {
        return Err(Error::internal(format!(
            "w_{bad} is not congruent to x0 mod s"
        )));
    }
    Ok(out)
}
