//! Pell and pellian equation solving, recurrence-sequence identities and
//! D(n)-tuple verification and extension search.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: exact integer primitives and quadratic-surd arithmetic;
//! - [`pell`]: continued fractions of `√D` and the equation `x² − Dy² = 1`;
//! - [`pellian`]: solution classes of `x² − Dy² = N` with Nagell's bounds;
//! - [`sequences`]: the `(yₙ, zₙ)` solution sequences of
//!   `z² − (16k²+2)y² = 1`, the derived `Xₙ = 2yₙ² − 8k² + 1`, their
//!   factorizations, identities and congruences;
//! - [`dtuple`]: D(n)-tuples, extension search, and the harnesses checking
//!   the `{8k², 8k²+1}` extension results and the `{1, 2k², 2k²+2k+1}`
//!   conjecture over bounded ranges;
//! - [`cli`]: the `pellkit` command-line front end.
//!
//! Runnable walkthroughs for each capability live in the crate's
//! `examples/` directory (`cargo run -p pellkit --example <name>`).

pub mod arith;
pub mod cli;
pub mod dtuple;
pub mod error;
pub mod pell;
pub mod pellian;
pub mod sequences;
mod serde_int;

pub use error::{Error, Result};

/// Resource limits applied by the searches and sequence builders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest `d` accepted by the filtered extension search.
    pub d_max: u64,
    /// Largest `d` accepted by the unfiltered oracle scan.
    pub raw_scan_max: u64,
    /// Largest sequence index built.
    pub n_max: i64,
    /// Largest parameter `k` accepted by sequence builders.
    pub k_max: u64,
    /// Largest `y` scanned by the brute-force pellian oracle.
    pub y_scan_max: u64,
    /// Longest `y`-window scanned when enumerating pellian classes.
    pub class_scan_max: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            d_max: 100_000_000,
            raw_scan_max: 1_000_000,
            n_max: 64,
            k_max: 1_000_000,
            y_scan_max: 1_000_000,
            class_scan_max: 50_000_000,
        }
    }
}
