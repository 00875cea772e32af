//! D(n)-tuples: verification with square-root certificates, bounded
//! extension search, and the harnesses that check the extension results for
//! `{8k², 8k²+1}` and the `{1, 2k², 2k²+2k+1}` conjecture over finite ranges.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{factorize, is_perfect_square, jacobi, SquareSieve};
use crate::error::{Error, Result};
use crate::pell::{compose, pell_fundamental, pell_solutions};
use crate::pellian::{fundamental_classes, PellianClass};
use crate::sequences::{radicand, s_sequence, v_sequence, PairSequence};
use crate::Guards;

/// A candidate D(n)-tuple: distinct positive elements, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DTuple {
    #[serde(with = "crate::serde_int")]
    n: BigInt,
    #[serde(with = "crate::serde_int::vec")]
    elements: Vec<BigInt>,
}

impl DTuple {
    pub fn new(n: BigInt, elements: impl IntoIterator<Item = BigInt>) -> Result<Self> {
        if n.is_zero() {
            return Err(Error::domain("the shift n must be nonzero"));
        }
        let mut elements: Vec<BigInt> = elements.into_iter().collect();
        if let Some(bad) = elements.iter().find(|e| !e.is_positive()) {
            return Err(Error::domain(format!("element {bad} is not positive")));
        }
        elements.sort();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain("tuple elements must be distinct"));
        }
        Ok(DTuple { n, elements })
    }

    pub fn from_i64(n: i64, elements: &[i64]) -> Result<Self> {
        Self::new(n.into(), elements.iter().map(|&e| BigInt::from(e)))
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn elements(&self) -> &[BigInt] {
        &self.elements
    }

    pub fn contains(&self, v: &BigInt) -> bool {
        self.elements.binary_search(v).is_ok()
    }

    pub fn with(&self, extra: BigInt) -> Result<DTuple> {
        DTuple::new(
            self.n.clone(),
            self.elements.iter().cloned().chain(std::iter::once(extra)),
        )
    }
}

/// `a·b + n`, with its square root when it has one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCertificate {
    #[serde(with = "crate::serde_int")]
    pub a: BigInt,
    #[serde(with = "crate::serde_int")]
    pub b: BigInt,
    #[serde(with = "crate::serde_int")]
    pub value: BigInt,
    #[serde(with = "crate::serde_int::opt")]
    pub root: Option<BigInt>,
}

impl PairCertificate {
    pub fn new(a: &BigInt, b: &BigInt, n: &BigInt) -> Self {
        let value = a * b + n;
        PairCertificate {
            a: a.clone(),
            b: b.clone(),
            root: is_perfect_square(&value),
            value,
        }
    }

    pub fn is_square(&self) -> bool {
        self.root.is_some()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TupleStatus {
    Valid,
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TupleReport {
    pub tuple: DTuple,
    pub pairs: Vec<PairCertificate>,
    pub status: TupleStatus,
}

impl TupleReport {
    pub fn is_valid(&self) -> bool {
        self.status == TupleStatus::Valid
    }
}

pub fn verify(tuple: &DTuple) -> TupleReport {
    let e = &tuple.elements;
    let mut pairs = Vec::with_capacity(e.len() * e.len().saturating_sub(1) / 2);
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            pairs.push(PairCertificate::new(&e[i], &e[j], &tuple.n));
        }
    }
    let status = if pairs.iter().all(PairCertificate::is_square) {
        TupleStatus::Valid
    } else {
        TupleStatus::Invalid
    };
    TupleReport {
        tuple: tuple.clone(),
        pairs,
        status,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BrownVerdict {
    /// `n ≡ 2 (mod 4)`: no D(n)-quadruple exists.
    Obstructed,
    Unobstructed,
}

/// Squares are 0 or 1 mod 4, which rules out D(n)-quadruples for
/// `n ≡ 2 (mod 4)`.
pub fn brown_filter(n: &BigInt) -> BrownVerdict {
    if n.mod_floor(&BigInt::from(4u32)) == BigInt::from(2u32) {
        BrownVerdict::Obstructed
    } else {
        BrownVerdict::Unobstructed
    }
}

/// Every `d ≤ d_max` outside the tuple making `tuple ∪ {d}` a D(n)-tuple.
pub fn extend_search(tuple: &DTuple, d_max: u64) -> Result<Vec<BigInt>> {
    extend_search_with(tuple, d_max, &Guards::default())
}

pub fn extend_search_with(tuple: &DTuple, d_max: u64, guards: &Guards) -> Result<Vec<BigInt>> {
    if d_max > guards.d_max {
        return Err(Error::resource(format!(
            "d_max {d_max} exceeds search guard {}",
            guards.d_max
        )));
    }
    // per modulus, which residues of d keep every a·d + n a square residue
    let admissible: Vec<(u64, Vec<bool>)> = SquareSieve::MODULI
        .iter()
        .map(|&m| {
            let mut squares = vec![false; m as usize];
            for x in 0..m {
                squares[(x * x % m) as usize] = true;
            }
            let nm = SquareSieve::reduce(&tuple.n) % m;
            let am: Vec<u64> = tuple
                .elements
                .iter()
                .map(|a| SquareSieve::reduce(a) % m)
                .collect();
            let table = (0..m)
                .map(|r| am.iter().all(|a| squares[((a * r + nm) % m) as usize]))
                .collect();
            (m, table)
        })
        .collect();

    let mut counters = [0u64; 4];
    let mut out = Vec::new();
    for d in 1..=d_max {
        for (c, (m, _)) in counters.iter_mut().zip(&admissible) {
            *c += 1;
            if *c == *m {
                *c = 0;
            }
        }
        if !admissible
            .iter()
            .zip(&counters)
            .all(|((_, t), &c)| t[c as usize])
        {
            continue;
        }
        let db = BigInt::from(d);
        if !tuple.contains(&db) && extends(tuple, &db) {
            out.push(db);
        }
    }
    Ok(out)
}

fn extends(tuple: &DTuple, d: &BigInt) -> bool {
    tuple
        .elements
        .iter()
        .all(|a| is_perfect_square(&(a * d + &tuple.n)).is_some())
}

/// Unfiltered scan of `d = 1..=d_max`; the reference for [`extend_search`].
pub fn extend_search_naive(tuple: &DTuple, d_max: u64) -> Result<Vec<BigInt>> {
    let guard = Guards::default().raw_scan_max;
    if d_max > guard {
        return Err(Error::resource(format!("raw scan limited to d ≤ {guard}")));
    }
    let mut out = Vec::new();
    for d in 1..=d_max {
        let d = BigInt::from(d);
        if tuple.contains(&d) {
            continue;
        }
        let all_square = tuple.elements.iter().all(|a| {
            let v = a * &d + &tuple.n;
            !v.is_negative() && {
                let r = v.sqrt();
                &r * &r == v
            }
        });
        if all_square {
            out.push(d);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extension {
    #[serde(with = "crate::serde_int")]
    pub d: BigInt,
    /// One certificate per existing element.
    pub certificates: Vec<PairCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub tuple: DTuple,
    pub d_max: u64,
    pub extensions: Vec<Extension>,
}

/// [`extend_search`] with a certificate for each found `d`.
pub fn extension_report(tuple: &DTuple, d_max: u64, guards: &Guards) -> Result<ExtensionReport> {
    let found = extend_search_with(tuple, d_max, guards)?;
    let extensions = found
        .into_iter()
        .map(|d| Extension {
            certificates: tuple
                .elements
                .iter()
                .map(|a| PairCertificate::new(a, &d, &tuple.n))
                .collect(),
            d,
        })
        .collect();
    Ok(ExtensionReport {
        tuple: tuple.clone(),
        d_max,
        extensions,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexedValue {
    pub n: i64,
    #[serde(with = "crate::serde_int")]
    pub value: BigInt,
}

/// Which `Xₙ = 2yₙ² − 8k² + 1` are squares, i.e. which `d = 2yₙ² + 1`
/// extend `{1, 8k², 8k²+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    pub k: u64,
    pub n_max: i64,
    pub x_values: Vec<IndexedValue>,
    pub square_indices: Vec<i64>,
    /// Root of `X₀ = 24k² + 1` when it is a square.
    #[serde(with = "crate::serde_int::opt")]
    pub x0_root: Option<BigInt>,
    /// `2y₀² + 1 = 32k² + 1` when `X₀` is a square.
    #[serde(with = "crate::serde_int::opt")]
    pub d: Option<BigInt>,
    pub quadruple: Option<TupleReport>,
    /// `2y₋₁² + 1 = 1`, formally produced by index −1 but already a member.
    #[serde(with = "crate::serde_int")]
    pub d_at_index_minus_one: BigInt,
    /// Squares only at `n = 0`, exactly when `24k²+1` is square, with
    /// `d = 32k²+1` and a valid quadruple.
    pub consistent: bool,
}

pub fn triple_extension_theorem(k: u64, n_max: i64) -> Result<TripleReport> {
    let seq = PairSequence::build(k, n_max)?;
    let kb = BigInt::from(k);
    let k2 = &kb * &kb;
    let x_values: Vec<IndexedValue> = seq
        .x_sequence()
        .into_iter()
        .map(|(n, value)| IndexedValue { n, value })
        .collect();
    let square_indices: Vec<i64> = x_values
        .iter()
        .filter(|x| is_perfect_square(&x.value).is_some())
        .map(|x| x.n)
        .collect();
    let x0_root = is_perfect_square(&(&k2 * 24u32 + 1u32));
    let (d, quadruple) = if square_indices.contains(&0) {
        let y0 = seq.y(0)?;
        let d = y0 * y0 * 2u32 + 1u32;
        let base = DTuple::new(
            -(&k2 * 8u32),
            [BigInt::one(), &k2 * 8u32, &k2 * 8u32 + 1u32],
        )?;
        let quad = verify(&base.with(d.clone())?);
        (Some(d), Some(quad))
    } else {
        (None, None)
    };
    let consistent = square_indices.iter().all(|&n| n == 0)
        && square_indices.contains(&0) == x0_root.is_some()
        && d.as_ref().is_none_or(|d| *d == &k2 * 32u32 + 1u32)
        && quadruple.as_ref().is_none_or(TupleReport::is_valid);
    let minus_one = seq.y(-1)?;
    Ok(TripleReport {
        k,
        n_max,
        x_values,
        square_indices,
        x0_root,
        d,
        quadruple,
        d_at_index_minus_one: minus_one * minus_one * 2u32 + 1u32,
        consistent,
    })
}

/// `{8k², 8k²+1, d₀, c}` built from a class `(z₀, x₀)` of
/// `z² − 2cx² = c − 8k²` with `d₀ = 2x₀² + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentCertificate {
    #[serde(with = "crate::serde_int")]
    pub d0: BigInt,
    #[serde(with = "crate::serde_int")]
    pub x0: BigInt,
    #[serde(with = "crate::serde_int")]
    pub z0: BigInt,
    /// `8k²·d₀ − 8k² = (4k·x₀)²`
    pub with_8k2: PairCertificate,
    /// `(8k²+1)·d₀ − 8k² = (16k²+2)·x₀² + 1`; square only when `x₀` is an
    /// s-sequence term.
    pub with_8k2_plus_1: PairCertificate,
    /// `c·d₀ − 8k² = z₀²`
    pub with_c: PairCertificate,
    pub d0_below_c: bool,
}

pub fn d0_descent_step(k: u64, c: &BigInt, class: &PellianClass) -> Result<DescentCertificate> {
    let kb = BigInt::from(k);
    if kb.is_zero() {
        return Err(Error::domain("k must be positive"));
    }
    let e8 = &kb * &kb * 8u32;
    let (half, rem) = (c - 1u32).div_rem(&BigInt::from(2u32));
    let s = is_perfect_square(&half)
        .filter(|s| rem.is_zero() && s.is_positive())
        .ok_or_else(|| Error::domain(format!("c = {c} is not 2s² + 1")))?;
    if !s_sequence_contains(k, &s)? {
        return Err(Error::domain(format!(
            "s = {s} is not in the s-sequence for k = {k}"
        )));
    }
    if *class.d() != c * 2u32 || *class.n() != c - &e8 {
        return Err(Error::domain(format!(
            "class solves x² − {}y² = {}, expected z² − 2cx² = c − 8k²",
            class.d(),
            class.n()
        )));
    }
    let x0 = class.y0().clone();
    let z0 = class.x0().abs();
    let d0 = &x0 * &x0 * 2u32 + 1u32;
    let neg = -&e8;
    let with_8k2 = PairCertificate::new(&e8, &d0, &neg);
    let with_8k2_plus_1 = PairCertificate::new(&(&e8 + 1u32), &d0, &neg);
    let with_c = PairCertificate::new(c, &d0, &neg);

    let four_k_x0 = &kb * 4u32 * &x0;
    if with_8k2.root.as_ref() != Some(&four_k_x0) {
        return Err(Error::internal("8k²·d₀ − 8k² is not (4k·x₀)²"));
    }
    if with_8k2_plus_1.value != radicand(&kb) * &x0 * &x0 + 1u32 {
        return Err(Error::internal("(8k²+1)·d₀ − 8k² ≠ (16k²+2)x₀² + 1"));
    }
    if with_c.root.as_ref() != Some(&z0) {
        return Err(Error::internal("c·d₀ − 8k² is not z₀²"));
    }
    Ok(DescentCertificate {
        d0_below_c: d0 < *c,
        d0,
        x0,
        z0,
        with_8k2,
        with_8k2_plus_1,
        with_c,
    })
}

fn s_sequence_contains(k: u64, s: &BigInt) -> Result<bool> {
    let mut count = 2;
    loop {
        let seq = s_sequence(k, count)?;
        let last = seq.last().expect("nonempty");
        if last == s {
            return Ok(true);
        }
        if last > s {
            return Ok(false);
        }
        count += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoundQuadruple {
    pub nu: usize,
    pub m: usize,
    #[serde(with = "crate::serde_int")]
    pub c: BigInt,
    #[serde(with = "crate::serde_int")]
    pub d: BigInt,
    pub report: TupleReport,
}

/// One class of `z² − 2cx² = c − 8k²` and whether its `x`-values can ever
/// coincide with a `vₘ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassObstruction {
    pub nu: usize,
    #[serde(with = "crate::serde_int")]
    pub c: BigInt,
    #[serde(with = "crate::serde_int")]
    pub s: BigInt,
    pub class: PellianClass,
    #[serde(with = "crate::serde_int")]
    pub x0_mod_s: BigInt,
    pub x0_below_s: bool,
    /// `x₀ mod s` is not among the residues `±sᵢ mod s` taken by `(vₘ)`.
    pub obstructed: bool,
    pub descent: DescentCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub k: u64,
    pub nu_max: usize,
    pub m_max: usize,
    #[serde(with = "crate::serde_int::vec")]
    pub c_candidates: Vec<BigInt>,
    pub quadruples: Vec<FoundQuadruple>,
    pub no_quadruple_with_c_above_1: bool,
    pub classes: Vec<ClassObstruction>,
    pub consistent: bool,
}

/// Grid search over `c = 2sᵥ² + 1` (`ν ≤ nu_max`) and `d = 2vₘ² + 1`
/// (`m ≤ m_max`) for quadruples `{8k², 8k²+1, c, d}` with `c < d`, plus the
/// congruence analysis of each `c`'s pellian classes.
pub fn pair_extension_theorem(k: u64, nu_max: usize, m_max: usize) -> Result<PairReport> {
    let kb = BigInt::from(k);
    let e8 = &kb * &kb * 8u32;
    let neg = -&e8;
    let s = s_sequence(k, nu_max + 1)?;
    let v = v_sequence(k, m_max + 1)?;
    let c_candidates: Vec<BigInt> = s.iter().map(|x| x * x * 2u32 + 1u32).collect();
    let d_candidates: Vec<BigInt> = v.iter().map(|x| x * x * 2u32 + 1u32).collect();

    let mut quadruples = Vec::new();
    for (nu, c) in c_candidates.iter().enumerate() {
        for (m, d) in d_candidates.iter().enumerate() {
            if d <= c || is_perfect_square(&(c * d + &neg)).is_none() {
                continue;
            }
            let tuple = DTuple::new(neg.clone(), [e8.clone(), &e8 + 1u32, c.clone(), d.clone()])?;
            quadruples.push(FoundQuadruple {
                nu,
                m,
                c: c.clone(),
                d: d.clone(),
                report: verify(&tuple),
            });
        }
    }
    let no_quadruple_with_c_above_1 = quadruples.iter().all(|q| q.c.is_one());

    let mut classes = Vec::new();
    for nu in 1..=nu_max {
        let c = &c_candidates[nu];
        let modulus = &s[nu];
        let residues: BTreeSet<BigInt> = s[..=nu]
            .iter()
            .flat_map(|si| [si.mod_floor(modulus), (-si).mod_floor(modulus)])
            .collect();
        for class in fundamental_classes(&(c * 2u32), &(c - &e8))? {
            let x0_mod_s = class.y0().mod_floor(modulus);
            classes.push(ClassObstruction {
                nu,
                c: c.clone(),
                s: modulus.clone(),
                x0_below_s: class.y0() < modulus,
                obstructed: !residues.contains(&x0_mod_s),
                descent: d0_descent_step(k, c, &class)?,
                x0_mod_s,
                class,
            });
        }
    }
    let consistent = no_quadruple_with_c_above_1
        && quadruples.iter().all(|q| q.report.is_valid())
        && classes.iter().all(|c| c.x0_below_s && c.descent.d0_below_c);
    Ok(PairReport {
        k,
        nu_max,
        m_max,
        c_candidates,
        quadruples,
        no_quadruple_with_c_above_1,
        classes,
        consistent,
    })
}

/// First `count` values of `k` with `24k² + 1` a square, from the
/// recurrence `k₁ = 1, k₂ = 10, kₙ₊₂ = 10kₙ₊₁ − kₙ`, cross-checked against
/// the solutions of `m² − 24k² = 1`.
pub fn admissible_k(count: usize) -> Result<Vec<BigInt>> {
    if count == 0 {
        return Err(Error::domain("count must be at least 1"));
    }
    let mut ks = vec![BigInt::one(), BigInt::from(10u32)];
    while ks.len() < count {
        let l = ks.len();
        let next = &ks[l - 1] * 10u32 - &ks[l - 2];
        ks.push(next);
    }
    ks.truncate(count);
    let from_pell = pell_solutions(&BigInt::from(24u32), count)?;
    for (k, sol) in ks.iter().zip(&from_pell) {
        if *k != sol.y {
            return Err(Error::internal(format!(
                "recurrence gives k = {k}, Pell solution gives {}",
                sol.y
            )));
        }
        if is_perfect_square(&(k * k * 24u32 + 1u32)).as_ref() != Some(&sol.x) {
            return Err(Error::internal(format!("24·{k}² + 1 is not {}²", sol.x)));
        }
    }
    Ok(ks)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimePower {
    #[serde(with = "crate::serde_int")]
    pub prime: BigInt,
    pub exponent: u32,
    /// Legendre symbol `(3/p)`; 0 for `p = 3`.
    pub legendre_3: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SieveReport {
    pub k: u64,
    /// `2k + 1`
    #[serde(with = "crate::serde_int")]
    pub modulus: BigInt,
    pub factors: Vec<PrimePower>,
    /// Why no extension of `{1, 2k², 2k²+2k+1}` can exist, if one applies.
    pub obstruction: Option<String>,
}

impl SieveReport {
    pub fn passes(&self) -> bool {
        self.obstruction.is_none()
    }
}

/// An extension needs `4x² ≡ 3 (mod 2k+1)`, so every prime factor of
/// `2k+1` is `3` (to the first power only) or `≡ ±1 (mod 12)`.
pub fn similar_sieve(k: u64) -> Result<SieveReport> {
    if k == 0 {
        return Err(Error::domain("k must be positive"));
    }
    let modulus = BigInt::from(k) * 2u32 + 1u32;
    let three = BigInt::from(3u32);
    let mut factors = Vec::new();
    let mut obstruction = None;
    for (prime, exponent) in factorize(&modulus)? {
        let r12 = prime.mod_floor(&BigInt::from(12u32)).to_u32().unwrap_or(0);
        let legendre_3 = jacobi(&three, &prime)?;
        if obstruction.is_none() {
            if prime == three && exponent > 1 {
                obstruction = Some(format!("9 divides {modulus}"));
            } else if prime != three && r12 != 1 && r12 != 11 {
                obstruction = Some(format!(
                    "prime {prime} ≡ {r12} (mod 12), so 3 is not a square mod {prime}"
                ));
            }
        }
        factors.push(PrimePower {
            prime,
            exponent,
            legendre_3,
        });
    }
    Ok(SieveReport {
        k,
        modulus,
        factors,
        obstruction,
    })
}

/// `{1, 2k², 2k²+2k+1}` with shift `−k²`.
pub fn similar_triple(k: u64) -> Result<DTuple> {
    let kb = BigInt::from(k);
    let k2 = &kb * &kb;
    DTuple::new(
        -k2.clone(),
        [BigInt::one(), &k2 * 2u32, &k2 * 2u32 + &kb * 2u32 + 1u32],
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub k: u64,
    pub d_max: u64,
    pub tuple: DTuple,
    pub extensions: Vec<Extension>,
    /// `8k² + 4k + 1`
    #[serde(with = "crate::serde_int")]
    pub predicted_d: BigInt,
    /// Root of `7k² + 4k + 1`, if square.
    #[serde(with = "crate::serde_int::opt")]
    pub square_root_7k2: Option<BigInt>,
    pub sieve_passes: bool,
    pub violations: Vec<String>,
}

impl ConjectureReport {
    pub fn consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Searches extensions of `{1, 2k², 2k²+2k+1}` up to `d_max` and records
/// any `d` other than `8k²+4k+1`, or any extension when `7k²+4k+1` is not a
/// square or the sieve obstructs.
pub fn similar_conjecture(k: u64, d_max: u64) -> Result<ConjectureReport> {
    similar_conjecture_with(k, d_max, &Guards::default())
}

pub fn similar_conjecture_with(k: u64, d_max: u64, guards: &Guards) -> Result<ConjectureReport> {
    let tuple = similar_triple(k)?;
    let kb = BigInt::from(k);
    let k2 = &kb * &kb;
    let predicted_d = &k2 * 8u32 + &kb * 4u32 + 1u32;
    let square_root_7k2 = is_perfect_square(&(&k2 * 7u32 + &kb * 4u32 + 1u32));
    let sieve_passes = similar_sieve(k)?.passes();
    let report = extension_report(&tuple, d_max, guards)?;
    let mut violations = Vec::new();
    for ext in &report.extensions {
        if ext.d != predicted_d {
            violations.push(format!(
                "extension d = {} differs from 8k²+4k+1 = {predicted_d}",
                ext.d
            ));
        }
        if square_root_7k2.is_none() {
            violations.push(format!(
                "extension d = {} found but 7k²+4k+1 is not a square",
                ext.d
            ));
        }
        if !sieve_passes {
            violations.push(format!(
                "extension d = {} found although the sieve obstructs",
                ext.d
            ));
        }
    }
    Ok(ConjectureReport {
        k,
        d_max,
        tuple,
        extensions: report.extensions,
        predicted_d,
        square_root_7k2,
        sieve_passes,
        violations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimilarFundamentalReport {
    pub k: u64,
    #[serde(with = "crate::serde_int")]
    pub d: BigInt,
    #[serde(with = "crate::serde_int")]
    pub n: BigInt,
    pub classes: Vec<PellianClass>,
    /// Classes are exactly `(±(2k+2), 1)`.
    pub single_pair: bool,
    /// `y mod (4k+2)` along the orbit of `(2k+2, 1)`.
    #[serde(with = "crate::serde_int::vec")]
    pub plus_residues: Vec<BigInt>,
    /// `y mod (4k+2)` along the orbit of `(2k+2, −1)`.
    #[serde(with = "crate::serde_int::vec")]
    pub minus_residues: Vec<BigInt>,
    pub congruences_hold: bool,
}

/// Orbit length used for the congruence check.
const SIMILAR_ORBIT_STEPS: usize = 6;

/// Classes of `z² − (4k²+4k+2)y² = 4k+2` and the congruences `y ≡ ±1
/// (mod 4k+2)` along the orbits of `(2k+2, ±1)`.
pub fn similar_fundamental(k: u64) -> Result<SimilarFundamentalReport> {
    if k == 0 {
        return Err(Error::domain("k must be positive"));
    }
    let kb = BigInt::from(k);
    let d = &kb * &kb * 4u32 + &kb * 4u32 + 2u32;
    let n = &kb * 4u32 + 2u32;
    let classes = fundamental_classes(&d, &n)?;
    let z_star = &kb * 2u32 + 2u32;
    let single_pair = classes.len() == 2
        && classes
            .iter()
            .all(|c| c.y0().is_one() && c.x0().abs() == z_star);

    let unit = pell_fundamental(&d)?;
    let orbit = |y_start: BigInt| {
        let (mut z, mut y) = (z_star.clone(), y_start);
        let mut residues = Vec::with_capacity(SIMILAR_ORBIT_STEPS);
        for _ in 0..SIMILAR_ORBIT_STEPS {
            residues.push(y.mod_floor(&n));
            (z, y) = compose((&z, &y), (&unit.x, &unit.y), &d);
        }
        residues
    };
    let plus_residues = orbit(BigInt::one());
    let minus_residues = orbit(-BigInt::one());
    let minus_one = &n - 1u32;
    let congruences_hold =
        plus_residues.iter().all(|r| r.is_one()) && minus_residues.iter().all(|r| *r == minus_one);
    Ok(SimilarFundamentalReport {
        k,
        d,
        n,
        classes,
        single_pair,
        plus_residues,
        minus_residues,
        congruences_hold,
    })
}
