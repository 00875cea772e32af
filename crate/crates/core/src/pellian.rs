//! Solution classes of the generalized Pell equation `x² − Dy² = N`.
//!
//! Every solution is `±(x0 + y0√D)·εⁿ` for a class representative
//! `(x0, y0)` and the fundamental unit `ε` of `x² − Dy² = 1`. Nagell's
//! bounds confine the representatives to a finite `y`-window, so scanning
//! that window and discarding associates lists every class.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{is_perfect_square, isqrt, SquareSieve};
use crate::error::{Error, Result};
use crate::pell::{compose, pell_fundamental, PellSolution};
use crate::Guards;

/// Class representative of `x² − Dy² = N`. `y0 ≥ 0`; the sign of `x0`
/// distinguishes the two conjugate classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PellianClass {
    #[serde(with = "crate::serde_int")]
    x0: BigInt,
    #[serde(with = "crate::serde_int")]
    y0: BigInt,
    #[serde(with = "crate::serde_int")]
    d: BigInt,
    #[serde(with = "crate::serde_int")]
    n: BigInt,
}

impl PellianClass {
    /// Validates `y0 ≥ 0` and `x0² − D·y0² = N`.
    pub fn new(x0: BigInt, y0: BigInt, d: BigInt, n: BigInt) -> Result<Self> {
        check_equation(&d, &n)?;
        if y0.is_negative() {
            return Err(Error::domain("class representative needs y0 ≥ 0"));
        }
        if &x0 * &x0 - &d * &y0 * &y0 != n {
            return Err(Error::domain(format!(
                "({x0}, {y0}) does not solve x² − {d}y² = {n}"
            )));
        }
        Ok(PellianClass { x0, y0, d, n })
    }

    pub fn x0(&self) -> &BigInt {
        &self.x0
    }

    pub fn y0(&self) -> &BigInt {
        &self.y0
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    /// Same class iff `(x·x' − D·y·y')` and `(x·y' − x'·y)` are both
    /// divisible by `N` (equations must match).
    pub fn is_associate(&self, other: &PellianClass) -> bool {
        if self.d != other.d || self.n != other.n {
            return false;
        }
        associates(
            (&self.x0, &self.y0),
            (&other.x0, &other.y0),
            &self.d,
            &self.n,
        )
    }

    /// Nonnegative solutions `(|x|, |y|)` of this class with `|y| ≤ y_max`.
    pub fn solutions_up_to(&self, unit: &PellSolution, y_max: &BigInt) -> Vec<(BigInt, BigInt)> {
        let mut out = Vec::new();
        let conj_y = -&unit.y;
        for uy in [&unit.y, &conj_y] {
            let (mut x, mut y) = (self.x0.clone(), self.y0.clone());
            let mut prev: Option<BigInt> = None;
            loop {
                let ay = y.abs();
                if &ay <= y_max {
                    out.push((x.abs(), ay.clone()));
                } else if prev.as_ref().is_some_and(|p| &ay > p) {
                    // |y| along an orbit falls then rises; past the window
                    // and rising means done
                    break;
                }
                prev = Some(ay);
                (x, y) = compose((&x, &y), (&unit.x, uy), &self.d);
            }
        }
        out
    }
}

fn associates(a: (&BigInt, &BigInt), b: (&BigInt, &BigInt), d: &BigInt, n: &BigInt) -> bool {
    let s = a.0 * b.0 - d * a.1 * b.1;
    let t = a.0 * b.1 - b.0 * a.1;
    s.is_multiple_of(n) && t.is_multiple_of(n)
}

fn check_equation(d: &BigInt, n: &BigInt) -> Result<()> {
    if n.is_zero() {
        return Err(Error::domain("N must be nonzero"));
    }
    if !d.is_positive() || is_perfect_square(d).is_some() {
        return Err(Error::domain(format!(
            "D = {d} must be a positive nonsquare"
        )));
    }
    Ok(())
}

/// Inclusive integer window `[y_lo, y_hi]` holding the `y` of every class
/// representative, together with the unit `(x₁, y₁)` it was computed from.
///
/// - `N > 0`: `0 ≤ y ≤ y₁·√N / √(2(x₁+1))`
/// - `N < 0`: `0 < y ≤ y₁·√(−N) / √(2(x₁−1))`
///
/// The upper endpoint is the floor of the real bound, computed exactly as
/// `⌊√(y₁²·|N| / (2(x₁ ± 1)))⌋`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NagellBounds {
    #[serde(with = "crate::serde_int")]
    pub y_lo: BigInt,
    #[serde(with = "crate::serde_int")]
    pub y_hi: BigInt,
    pub unit: PellSolution,
}

impl NagellBounds {
    pub fn is_empty(&self) -> bool {
        self.y_lo > self.y_hi
    }
}

pub fn nagell_bounds(d: &BigInt, n: &BigInt) -> Result<NagellBounds> {
    check_equation(d, n)?;
    let unit = pell_fundamental(d)?;
    let (num, den, y_lo) = if n.is_positive() {
        (
            &unit.y * &unit.y * n,
            (&unit.x + 1u32) << 1u32,
            BigInt::zero(),
        )
    } else {
        (
            &unit.y * &unit.y * -n,
            (&unit.x - 1u32) << 1u32,
            BigInt::one(),
        )
    };
    // ⌊√(num/den)⌋ = ⌊√⌊num/den⌋⌋
    let y_hi = isqrt(&num.div_floor(&den))?;
    Ok(NagellBounds { y_lo, y_hi, unit })
}

/// All class representatives, one per class, sorted by `(y, x)`.
pub fn fundamental_classes(d: &BigInt, n: &BigInt) -> Result<Vec<PellianClass>> {
    fundamental_classes_with(d, n, &Guards::default())
}

pub fn fundamental_classes_with(
    d: &BigInt,
    n: &BigInt,
    guards: &Guards,
) -> Result<Vec<PellianClass>> {
    let bounds = nagell_bounds(d, n)?;
    Ok(classes_in_window(d, n, &bounds, guards)?.0)
}

fn classes_in_window(
    d: &BigInt,
    n: &BigInt,
    bounds: &NagellBounds,
    guards: &Guards,
) -> Result<(Vec<PellianClass>, PellSolution)> {
    let mut found: Vec<(BigInt, BigInt)> = Vec::new();
    if !bounds.is_empty() {
        let lo = bounds.y_lo.to_u64();
        let hi = bounds.y_hi.to_u64();
        let (lo, hi) = match (lo, hi) {
            (Some(lo), Some(hi)) if hi - lo < guards.class_scan_max => (lo, hi),
            _ => {
                return Err(Error::resource(format!(
                    "class scan over y ∈ [{}, {}] exceeds {} steps",
                    bounds.y_lo, bounds.y_hi, guards.class_scan_max
                )))
            }
        };
        let m = SquareSieve::COMBINED;
        let sieve = SquareSieve::global();
        let (nm, dm) = (SquareSieve::reduce(n), SquareSieve::reduce(d));
        for y in lo..=hi {
            let ym = y % m;
            let r = (nm + dm * ym % m * ym) % m;
            if !sieve.admits(r) {
                continue;
            }
            let yb = BigInt::from(y);
            let v = n + d * &yb * &yb;
            if let Some(x) = is_perfect_square(&v) {
                if !x.is_zero() {
                    found.push((x.clone(), yb.clone()));
                    found.push((-x, yb));
                } else {
                    found.push((x, yb));
                }
            }
        }
    }

    // candidates arrive as (y asc, +x before -x); keeping the first of each
    // associate group stores ambiguous classes with x0 ≥ 0
    let mut reps: Vec<(BigInt, BigInt)> = Vec::new();
    for cand in found {
        if !reps
            .iter()
            .any(|r| associates((&r.0, &r.1), (&cand.0, &cand.1), d, n))
        {
            reps.push(cand);
        }
    }
    reps.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    let classes = reps
        .into_iter()
        .map(|(x0, y0)| PellianClass {
            x0,
            y0,
            d: d.clone(),
            n: n.clone(),
        })
        .collect();
    Ok((classes, bounds.unit.clone()))
}

/// Every nonnegative solution with `y ≤ y_max`, sorted by `y`, built by
/// expanding each class with the fundamental unit.
pub fn solutions_up_to(d: &BigInt, n: &BigInt, y_max: &BigInt) -> Result<Vec<(BigInt, BigInt)>> {
    let bounds = nagell_bounds(d, n)?;
    let (classes, unit) = classes_in_window(d, n, &bounds, &Guards::default())?;
    let mut all = BTreeSet::new();
    for class in &classes {
        for (x, y) in class.solutions_up_to(&unit, y_max) {
            all.insert((y, x));
        }
    }
    Ok(all.into_iter().map(|(y, x)| (x, y)).collect())
}

/// Direct scan of `y = 0..=y_max` testing `N + Dy²` for squareness.
///
/// Kept deliberately naive as an independent check on [`solutions_up_to`];
/// it does not need `D` to be nonsquare.
pub fn brute_force_solutions(d: &BigInt, n: &BigInt, y_max: u64) -> Result<Vec<(BigInt, BigInt)>> {
    let guard = Guards::default().y_scan_max;
    if y_max > guard {
        return Err(Error::resource(format!(
            "y_max {y_max} exceeds scan guard {guard}"
        )));
    }
    if n.is_zero() {
        return Err(Error::domain("N must be nonzero"));
    }
    if !d.is_positive() {
        return Err(Error::domain("D must be positive"));
    }
    let mut out = Vec::new();
    for y in 0..=y_max {
        let y = BigInt::from(y);
        let v = n + d * &y * &y;
        if v.is_negative() {
            continue;
        }
        let r = isqrt(&v)?;
        if &r * &r == v {
            out.push((r, y));
        }
    }
    Ok(out)
}
