//! The `pellkit` command line.
//!
//! [`run`] parses an argument vector, executes the command and returns the
//! exit code with the rendered report, so it can be driven in-process.
//!
//! Exit codes: 0 success, 1 a finding contradicts the claim being checked
//! (or an internal consistency check failed), 2 usage or domain error,
//! 3 resource guard exceeded.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::dtuple::{self, DTuple, PairCertificate};
use crate::error::{Error, Result};
use crate::pell::{cf_sqrt, pell_fundamental, pell_solutions};
use crate::pellian::{
    brute_force_solutions, fundamental_classes_with, nagell_bounds, solutions_up_to,
};
use crate::sequences::{
    even_identity_on, factor_even_on, factor_odd_on, odd_identity_on, radicand, z_congruences_on,
    ClosedForm, PairSequence,
};
use crate::Guards;

/// Environment variable overriding [`Guards::d_max`].
pub const GUARD_DMAX_ENV: &str = "PELLKIT_GUARD_DMAX";

#[derive(Parser, Debug)]
#[command(
    name = "pellkit",
    version,
    about = "Pell equations, pellian classes and D(n)-tuples"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for batch runs over k.
    #[arg(long, default_value_t = 1, global = true, value_parser = clap::value_parser!(u32).range(1..=256))]
    pub workers: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Continued fraction of √D.
    Cf(RadicandArgs),
    /// Solutions of x² − Dy² = 1.
    Pell(PellArgs),
    /// Classes and solutions of x² − Dy² = N.
    #[command(allow_negative_numbers = true)]
    Pellian(PellianArgs),
    /// The sequences (yₙ, zₙ) and Xₙ = 2yₙ² − 8k² + 1.
    Seq(KnArgs),
    /// Identities, factorizations and congruences of the sequences.
    Identities(KnArgs),
    /// D(n)-tuple verification and extension.
    #[command(subcommand)]
    Tuple(TupleCommand),
    /// Extension results for {1, 8k², 8k²+1} and {8k², 8k²+1}.
    #[command(subcommand)]
    Thm(ThmCommand),
    /// Values of k with 24k² + 1 a square.
    Kseq(KseqArgs),
    /// The triple {1, 2k², 2k²+2k+1} with n = −k².
    #[command(subcommand)]
    Similar(SimilarCommand),
    /// Closed forms of the sequences.
    #[command(subcommand)]
    Appendix(AppendixCommand),
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("radicand").required(true))]
pub struct RadicandArgs {
    /// Radicand D.
    #[arg(long, group = "radicand", value_parser = parse_big)]
    pub d: Option<BigInt>,
    /// Use D = 16k² + 2 for each k, e.g. `1..50`.
    #[arg(long, group = "radicand", value_parser = parse_k_range)]
    pub k: Option<KRange>,
}

#[derive(Args, Debug)]
pub struct PellArgs {
    #[command(flatten)]
    pub radicand: RadicandArgs,
    /// Number of solutions.
    #[arg(long, default_value_t = 1)]
    pub count: usize,
}

#[derive(Args, Debug)]
pub struct PellianArgs {
    #[arg(long, value_parser = parse_big)]
    pub d: BigInt,
    #[arg(long, value_parser = parse_big)]
    pub n: BigInt,
    /// Also list every solution with |y| up to this bound.
    #[arg(long)]
    pub y_max: Option<u64>,
    /// Compare the listed solutions with a brute-force scan (needs --y-max).
    #[arg(long, requires = "y_max")]
    pub check: bool,
}

#[derive(Args, Debug)]
pub struct KnArgs {
    /// k values: `5`, `1..30` (inclusive) or `1,10,99`.
    #[arg(long, value_parser = parse_k_range)]
    pub k: KRange,
    #[arg(long, default_value_t = 12)]
    pub n_max: i64,
}

#[derive(Subcommand, Debug)]
pub enum TupleCommand {
    /// Check every a·b + n for squareness.
    #[command(allow_negative_numbers = true)]
    Verify(TupleArgs),
    /// Search d ≤ d_max extending the tuple.
    #[command(allow_negative_numbers = true)]
    Extend(ExtendArgs),
}

#[derive(Args, Debug)]
pub struct TupleArgs {
    #[arg(long, value_parser = parse_big)]
    pub n: BigInt,
    #[arg(required = true, value_parser = parse_big)]
    pub elements: Vec<BigInt>,
}

#[derive(Args, Debug)]
pub struct ExtendArgs {
    #[command(flatten)]
    pub tuple: TupleArgs,
    #[arg(long, default_value_t = 1_000_000)]
    pub d_max: u64,
}

#[derive(Subcommand, Debug)]
pub enum ThmCommand {
    /// Squares among Xₙ, i.e. extensions of {1, 8k², 8k²+1}.
    Triple(KnArgs),
    /// Grid search and class analysis for {8k², 8k²+1, c, d}.
    Pair(PairArgs),
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long, value_parser = parse_k_range)]
    pub k: KRange,
    #[arg(long, default_value_t = 2)]
    pub nu_max: usize,
    #[arg(long, default_value_t = 10)]
    pub m_max: usize,
}

#[derive(Args, Debug)]
pub struct KseqArgs {
    #[arg(long, default_value_t = 6)]
    pub count: usize,
}

#[derive(Subcommand, Debug)]
pub enum SimilarCommand {
    /// Prime obstruction from 2k + 1.
    Sieve(KArgs),
    /// Bounded extension search.
    Conjecture(ConjectureArgs),
    /// Classes of z² − (4k²+4k+2)y² = 4k+2.
    Fundamental(KArgs),
}

#[derive(Args, Debug)]
pub struct KArgs {
    #[arg(long, value_parser = parse_k_range)]
    pub k: KRange,
}

#[derive(Args, Debug)]
pub struct ConjectureArgs {
    #[arg(long, value_parser = parse_k_range)]
    pub k: KRange,
    #[arg(long, default_value_t = 1_000_000)]
    pub d_max: u64,
}

#[derive(Subcommand, Debug)]
pub enum AppendixCommand {
    /// Closed forms against the recurrences, plus coefficient identities.
    Verify(KnArgs),
}

/// Ascending, deduplicated list of positive k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KRange(pub Vec<u64>);

impl FromStr for KRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .ok()
                .filter(|&k| k > 0)
                .ok_or_else(|| format!("invalid k `{t}`"))
        };
        let mut ks = Vec::new();
        for part in s.split(',') {
            if let Some((lo, hi)) = part.split_once("..") {
                let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
                if lo > hi {
                    return Err(format!("empty range `{part}`"));
                }
                ks.extend(lo..=hi);
            } else {
                ks.push(num(part)?);
            }
        }
        ks.sort_unstable();
        ks.dedup();
        Ok(KRange(ks))
    }
}

fn parse_k_range(s: &str) -> std::result::Result<KRange, String> {
    s.parse()
}

fn parse_big(s: &str) -> std::result::Result<BigInt, String> {
    s.parse().map_err(|_| format!("`{s}` is not an integer"))
}

/// Exit code and rendered output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// One result in a report: its data, certificates, text lines, and whether
/// the checked claim held.
struct Entry {
    data: Value,
    certificates: Vec<PairCertificate>,
    text: Vec<String>,
    ok: bool,
}

impl Entry {
    fn new(data: Value, text: Vec<String>) -> Self {
        Entry {
            data,
            certificates: Vec::new(),
            text,
            ok: true,
        }
    }

    fn ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    fn certs(mut self, certs: impl IntoIterator<Item = PairCertificate>) -> Self {
        self.certificates.extend(certs);
        self
    }
}

struct Report {
    command: &'static str,
    section: &'static str,
    parameters: Value,
    results: Vec<Entry>,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let guards = match guards_from_env() {
        Ok(g) => g,
        Err(msg) => return failure(2, msg),
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers as usize)
        .build()
    {
        Ok(p) => p,
        Err(e) => return failure(3, format!("cannot start worker pool: {e}")),
    };
    match pool.install(|| execute(&cli.command, &guards)) {
        Ok(report) => {
            let failed = report.results.iter().filter(|e| !e.ok).count();
            let stdout = match render(&report, cli.format) {
                Ok(s) => s,
                Err(e) => return failure(1, format!("cannot render report: {e}")),
            };
            let stderr = if failed > 0 {
                format!("{failed} result(s) contradict the checked claim\n")
            } else {
                String::new()
            };
            Outcome {
                code: if failed > 0 { 1 } else { 0 },
                stdout,
                stderr,
            }
        }
        Err(e) => {
            let code = match e {
                Error::Domain(_) => 2,
                Error::Resource(_) => 3,
                Error::Internal(_) => 1,
            };
            failure(code, format!("error: {e}"))
        }
    }
}

fn failure(code: i32, msg: String) -> Outcome {
    Outcome {
        code,
        stdout: String::new(),
        stderr: msg + "\n",
    }
}

fn guards_from_env() -> std::result::Result<Guards, String> {
    let mut guards = Guards::default();
    if let Ok(v) = std::env::var(GUARD_DMAX_ENV) {
        guards.d_max = v
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&d| d > 0)
            .ok_or_else(|| format!("{GUARD_DMAX_ENV} must be a positive integer, got `{v}`"))?;
    }
    Ok(guards)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn strs(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Runs `f` for every k on the current pool and concatenates the entries
/// in ascending k order.
fn per_k<F>(ks: &KRange, f: F) -> Result<Vec<Entry>>
where
    F: Fn(u64) -> Result<Vec<Entry>> + Sync,
{
    let chunks: Vec<Result<Vec<Entry>>> = ks.0.par_iter().map(|&k| f(k)).collect();
    let mut out = Vec::new();
    for chunk in chunks {
        out.extend(chunk?);
    }
    Ok(out)
}

fn execute(command: &Command, guards: &Guards) -> Result<Report> {
    match command {
        Command::Cf(a) => cf(a),
        Command::Pell(a) => pell(a),
        Command::Pellian(a) => pellian(a, guards),
        Command::Seq(a) => seq(a, guards),
        Command::Identities(a) => identities(a, guards),
        Command::Tuple(TupleCommand::Verify(a)) => tuple_verify(a),
        Command::Tuple(TupleCommand::Extend(a)) => tuple_extend(a, guards),
        Command::Thm(ThmCommand::Triple(a)) => thm_triple(a),
        Command::Thm(ThmCommand::Pair(a)) => thm_pair(a),
        Command::Kseq(a) => kseq(a),
        Command::Similar(SimilarCommand::Sieve(a)) => similar_sieve(a),
        Command::Similar(SimilarCommand::Conjecture(a)) => similar_conjecture(a, guards),
        Command::Similar(SimilarCommand::Fundamental(a)) => similar_fundamental(a),
        Command::Appendix(AppendixCommand::Verify(a)) => appendix(a, guards),
    }
}

/// Radicands requested either directly or as `16k² + 2`, with the k they
/// came from.
fn radicands(a: &RadicandArgs) -> (Value, Vec<(Option<u64>, BigInt)>) {
    match (&a.d, &a.k) {
        (Some(d), _) => (json!({ "d": d.to_string() }), vec![(None, d.clone())]),
        (None, Some(ks)) => (
            json!({ "k": ks.0 }),
            ks.0.iter()
                .map(|&k| (Some(k), radicand(&k.into())))
                .collect(),
        ),
        (None, None) => unreachable!("clap requires one of --d, --k"),
    }
}

fn cf(a: &RadicandArgs) -> Result<Report> {
    let (parameters, ds) = radicands(a);
    let mut results = Vec::new();
    for (k, d) in ds {
        let cf = cf_sqrt(&d)?;
        let mut data =
            json!({ "d": d.to_string(), "a0": cf.a0.to_string(), "period": strs(&cf.period) });
        let mut ok = true;
        if let Some(k) = k {
            let kb = BigInt::from(k);
            ok = cf.a0 == &kb * 4u32 && cf.period == [&kb * 4u32, &kb * 8u32];
            data["k"] = json!(k);
            data["matches_expected"] = json!(ok);
        }
        results.push(Entry::new(data, vec![format!("√{d} = {cf}")]).ok(ok));
    }
    Ok(Report {
        command: "cf",
        section: "continued-fractions",
        parameters,
        results,
    })
}

fn pell(a: &PellArgs) -> Result<Report> {
    let (mut parameters, ds) = radicands(&a.radicand);
    parameters["count"] = json!(a.count);
    let mut results = Vec::new();
    for (k, d) in ds {
        let sols = pell_solutions(&d, a.count)?;
        let text = sols
            .iter()
            .map(|s| format!("{}² − {d}·{}² = 1", s.x, s.y))
            .collect();
        let mut data = json!({ "d": d.to_string(), "solutions": to_value(&sols) });
        let mut ok = sols.iter().all(|s| s.satisfies());
        if let Some(k) = k {
            let kb = BigInt::from(k);
            let expected = sols[0].x == &kb * &kb * 16u32 + 1u32 && sols[0].y == &kb * 4u32;
            data["k"] = json!(k);
            data["matches_expected"] = json!(expected);
            ok &= expected;
        }
        results.push(Entry::new(data, text).ok(ok));
    }
    Ok(Report {
        command: "pell",
        section: "pell-equation",
        parameters,
        results,
    })
}

fn pellian(a: &PellianArgs, guards: &Guards) -> Result<Report> {
    let bounds = nagell_bounds(&a.d, &a.n)?;
    let classes = fundamental_classes_with(&a.d, &a.n, guards)?;
    let mut text = vec![
        format!(
            "x² − {}y² = {}: unit ({}, {}), y-window {}..={}",
            a.d, a.n, bounds.unit.x, bounds.unit.y, bounds.y_lo, bounds.y_hi
        ),
        format!("{} class(es)", classes.len()),
    ];
    text.extend(
        classes
            .iter()
            .map(|c| format!("  ({}, {})", c.x0(), c.y0())),
    );
    let mut data = json!({ "bounds": to_value(&bounds), "classes": to_value(&classes) });
    let mut ok = true;
    if let Some(y_max) = a.y_max {
        let sols = solutions_up_to(&a.d, &a.n, &y_max.into())?;
        let pairs: Vec<_> = sols
            .iter()
            .map(|(x, y)| [x.to_string(), y.to_string()])
            .collect();
        text.push(format!("{} solution(s) with y ≤ {y_max}", sols.len()));
        text.extend(sols.iter().map(|(x, y)| format!("  ({x}, {y})")));
        data["solutions"] = json!(pairs);
        if a.check {
            ok = brute_force_solutions(&a.d, &a.n, y_max)? == sols;
            text.push(format!("brute-force scan agrees: {ok}"));
            data["brute_force_agrees"] = json!(ok);
        }
    }
    let parameters = json!({
        "d": a.d.to_string(), "n": a.n.to_string(), "y_max": a.y_max, "check": a.check,
    });
    Ok(Report {
        command: "pellian",
        section: "pellian-classes",
        parameters,
        results: vec![Entry::new(data, text).ok(ok)],
    })
}

fn kn_parameters(a: &KnArgs) -> Value {
    json!({ "k": a.k.0, "n_max": a.n_max })
}

fn check_n_max(n_max: i64, guards: &Guards) -> Result<()> {
    if n_max < 0 {
        return Err(Error::domain("--n-max must be nonnegative"));
    }
    if n_max > guards.n_max {
        return Err(Error::resource(format!(
            "n_max {n_max} exceeds guard {}",
            guards.n_max
        )));
    }
    Ok(())
}

fn seq(a: &KnArgs, guards: &Guards) -> Result<Report> {
    check_n_max(a.n_max, guards)?;
    let results = per_k(&a.k, |k| {
        let s = PairSequence::build_with(k, a.n_max, guards)?;
        let rows: Vec<Value> = s
            .entries()
            .iter()
            .map(|e| {
                let x = s.x_value(e.index).expect("index in range");
                json!({ "n": e.index, "y": e.y.to_string(), "z": e.z.to_string(), "x": x.to_string() })
            })
            .collect();
        let mut text = vec![format!("k = {k}")];
        text.extend(s.entries().iter().map(|e| {
            format!(
                "  n = {:>3}  y = {}  z = {}  X = {}",
                e.index,
                e.y,
                e.z,
                s.x_value(e.index).expect("index in range")
            )
        }));
        Ok(vec![Entry::new(json!({ "k": k, "entries": rows }), text)])
    })?;
    Ok(Report {
        command: "seq",
        section: "pair-sequences",
        parameters: kn_parameters(a),
        results,
    })
}

fn identities(a: &KnArgs, guards: &Guards) -> Result<Report> {
    check_n_max(a.n_max, guards)?;
    let results = per_k(&a.k, |k| {
        let s = PairSequence::build_with(k, 2 * a.n_max + 1, guards)?;
        let coefficients = ClosedForm::new(k)?.coefficient_checks()?;
        let mut odd = Vec::new();
        let mut even = Vec::new();
        let mut f_odd = Vec::new();
        let mut f_even = Vec::new();
        for n in 0..=a.n_max {
            odd.push(odd_identity_on(&s, n, coefficients)?);
            if n >= 1 {
                even.push(even_identity_on(&s, n)?);
            }
            f_odd.push(factor_odd_on(&s, n)?);
            f_even.push(factor_even_on(&s, n)?);
        }
        let z = z_congruences_on(&s)?;
        let checks = [
            ("y₂ₙ₊₁ = 2yₙzₙ", odd.iter().all(|i| i.holds)),
            ("c₁c₄ + c₂c₃ = 0 and leading terms", coefficients.all()),
            ("z₂ₙ − 1 = (yₙ + yₙ₋₁)²", even.iter().all(|i| i.holds)),
            ("X₂ₙ₊₁ factorization", f_odd.iter().all(|f| f.all_hold())),
            ("X₂ₙ factorization", f_even.iter().all(|f| f.all_hold())),
            ("zₙ ≡ 1 (mod k)", z.mod_k_holds),
            ("zₙ mod 8k²+1 alternates", z.alternation_holds),
        ];
        let ok = checks.iter().all(|(_, h)| *h);
        let mut text = vec![format!("k = {k}")];
        text.extend(
            checks
                .iter()
                .map(|(name, h)| format!("  {name}: {}", if *h { "holds" } else { "FAILS" })),
        );
        let data = json!({
            "k": k,
            "odd": to_value(&odd),
            "even": to_value(&even),
            "factor_odd": to_value(&f_odd),
            "factor_even": to_value(&f_even),
            "z_congruences": to_value(&z),
            "all_hold": ok,
        });
        Ok(vec![Entry::new(data, text).ok(ok)])
    })?;
    Ok(Report {
        command: "identities",
        section: "sequence-identities",
        parameters: kn_parameters(a),
        results,
    })
}

fn appendix(a: &KnArgs, guards: &Guards) -> Result<Report> {
    check_n_max(a.n_max, guards)?;
    let results = per_k(&a.k, |k| {
        let s = PairSequence::build_with(k, a.n_max, guards)?;
        let cf = ClosedForm::new(k)?;
        let coefficients = cf.coefficient_checks()?;
        let mut mismatches = Vec::new();
        for e in s.entries() {
            if cf.entry(e.index)? != (e.y.clone(), e.z.clone()) {
                mismatches.push(e.index);
            }
        }
        let ok = mismatches.is_empty() && coefficients.all();
        let text = vec![
            format!("k = {k}: α = {}", cf.alpha),
            format!("  c₁ = {}, c₂ = {}", cf.c1, cf.c2),
            format!("  c₃ = {}, c₄ = {}", cf.c3, cf.c4),
            format!(
                "  closed forms match recurrences for n = -1..={}: {}",
                a.n_max,
                mismatches.is_empty()
            ),
            format!("  coefficient identities: {}", coefficients.all()),
        ];
        let data = json!({
            "k": k,
            "alpha": cf.alpha.to_string(),
            "c1": cf.c1.to_string(),
            "c2": cf.c2.to_string(),
            "c3": cf.c3.to_string(),
            "c4": cf.c4.to_string(),
            "mismatched_indices": mismatches,
            "coefficients": to_value(&coefficients),
        });
        Ok(vec![Entry::new(data, text).ok(ok)])
    })?;
    Ok(Report {
        command: "appendix verify",
        section: "closed-forms",
        parameters: kn_parameters(a),
        results,
    })
}

fn tuple_of(a: &TupleArgs) -> Result<DTuple> {
    DTuple::new(a.n.clone(), a.elements.iter().cloned())
}

fn tuple_parameters(a: &TupleArgs) -> Value {
    json!({ "n": a.n.to_string(), "elements": strs(&a.elements) })
}

fn cert_line(c: &PairCertificate) -> String {
    match &c.root {
        Some(r) => format!("  {}·{} + n = {} = {r}²", c.a, c.b, c.value),
        None => format!("  {}·{} + n = {} (not a square)", c.a, c.b, c.value),
    }
}

fn tuple_verify(a: &TupleArgs) -> Result<Report> {
    let t = tuple_of(a)?;
    let r = dtuple::verify(&t);
    let brown = dtuple::brown_filter(t.n());
    let status = if r.is_valid() { "valid" } else { "invalid" };
    let mut text = vec![format!("{status}, {} certificates", r.pairs.len())];
    text.extend(r.pairs.iter().map(cert_line));
    let data = json!({
        "tuple": to_value(&t),
        "status": status,
        "brown": to_value(&brown),
    });
    Ok(Report {
        command: "tuple verify",
        section: "dn-tuples",
        parameters: tuple_parameters(a),
        results: vec![Entry::new(data, text).certs(r.pairs)],
    })
}

fn tuple_extend(a: &ExtendArgs, guards: &Guards) -> Result<Report> {
    let t = tuple_of(&a.tuple)?;
    let r = dtuple::extension_report(&t, a.d_max, guards)?;
    let found: Vec<BigInt> = r.extensions.iter().map(|e| e.d.clone()).collect();
    let mut text = vec![format!("{} extension(s) with d ≤ {}", found.len(), a.d_max)];
    for e in &r.extensions {
        text.push(format!("d = {}", e.d));
        text.extend(e.certificates.iter().map(cert_line));
    }
    let mut parameters = tuple_parameters(&a.tuple);
    parameters["d_max"] = json!(a.d_max);
    let data = json!({ "tuple": to_value(&t), "extensions": strs(&found) });
    let certs = r.extensions.into_iter().flat_map(|e| e.certificates);
    Ok(Report {
        command: "tuple extend",
        section: "dn-tuples",
        parameters,
        results: vec![Entry::new(data, text).certs(certs)],
    })
}

fn thm_triple(a: &KnArgs) -> Result<Report> {
    let results = per_k(&a.k, |k| {
        let r = dtuple::triple_extension_theorem(k, a.n_max)?;
        let mut data = to_value(&r);
        if let Some(m) = data.as_object_mut() {
            m.remove("quadruple");
        }
        let certs = r
            .quadruple
            .as_ref()
            .map(|q| q.pairs.clone())
            .unwrap_or_default();
        if let Some(q) = &r.quadruple {
            data["quadruple_status"] = to_value(&q.status);
        }
        let text = vec![match &r.d {
            Some(d) => format!(
                "k = {k}: X₀ = {}², d = {d}, quadruple {}",
                r.x0_root.as_ref().expect("square at index 0"),
                if r.quadruple.as_ref().is_some_and(|q| q.is_valid()) {
                    "valid"
                } else {
                    "INVALID"
                }
            ),
            None => format!("k = {k}: no square among X₀..X{}", a.n_max),
        }];
        Ok(vec![Entry::new(data, text).certs(certs).ok(r.consistent)])
    })?;
    Ok(Report {
        command: "thm triple",
        section: "triple-extension",
        parameters: kn_parameters(a),
        results,
    })
}

fn thm_pair(a: &PairArgs) -> Result<Report> {
    let results = per_k(&a.k, |k| {
        let r = dtuple::pair_extension_theorem(k, a.nu_max, a.m_max)?;
        let mut certs = Vec::new();
        let quads: Vec<Value> = r
            .quadruples
            .iter()
            .map(|q| {
                certs.extend(q.report.pairs.iter().cloned());
                json!({
                    "nu": q.nu, "m": q.m, "c": q.c.to_string(), "d": q.d.to_string(),
                    "status": to_value(&q.report.status),
                })
            })
            .collect();
        let classes: Vec<Value> = r
            .classes
            .iter()
            .map(|c| {
                certs.push(c.descent.with_8k2.clone());
                certs.push(c.descent.with_8k2_plus_1.clone());
                certs.push(c.descent.with_c.clone());
                json!({
                    "nu": c.nu, "c": c.c.to_string(), "s": c.s.to_string(),
                    "x0": c.class.y0().to_string(), "z0": c.class.x0().to_string(),
                    "x0_mod_s": c.x0_mod_s.to_string(), "x0_below_s": c.x0_below_s,
                    "obstructed": c.obstructed, "d0": c.descent.d0.to_string(),
                    "d0_below_c": c.descent.d0_below_c,
                })
            })
            .collect();
        let mut text = vec![format!(
            "k = {k}: c ∈ {{{}}}; quadruples found: {}",
            strs(&r.c_candidates).join(", "),
            r.quadruples
                .iter()
                .map(|q| format!("(c = {}, d = {})", q.c, q.d))
                .collect::<Vec<_>>()
                .join(", ")
        )];
        text.extend(r.classes.iter().map(|c| {
            format!(
                "  c = {}: class (z₀, x₀) = ({}, {}), x₀ mod s = {}{}, d₀ = {}",
                c.c,
                c.class.x0(),
                c.class.y0(),
                c.x0_mod_s,
                if c.obstructed { " (obstructed)" } else { "" },
                c.descent.d0
            )
        }));
        let data = json!({
            "k": k,
            "c_candidates": strs(&r.c_candidates),
            "quadruples": quads,
            "no_quadruple_with_c_above_1": r.no_quadruple_with_c_above_1,
            "classes": classes,
            "consistent": r.consistent,
        });
        Ok(vec![Entry::new(data, text).certs(certs).ok(r.consistent)])
    })?;
    let parameters = json!({ "k": a.k.0, "nu_max": a.nu_max, "m_max": a.m_max });
    Ok(Report {
        command: "thm pair",
        section: "pair-extension",
        parameters,
        results,
    })
}

fn kseq(a: &KseqArgs) -> Result<Report> {
    let ks = dtuple::admissible_k(a.count)?;
    let unit = pell_fundamental(&BigInt::from(24u32))?;
    let data = json!({
        "k": strs(&ks),
        "unit": [unit.x.to_string(), unit.y.to_string()],
    });
    let text = vec![strs(&ks).join(" ")];
    Ok(Report {
        command: "kseq",
        section: "admissible-k",
        parameters: json!({ "count": a.count }),
        results: vec![Entry::new(data, text)],
    })
}

fn similar_sieve(a: &KArgs) -> Result<Report> {
    let results = per_k(&a.k, |k| {
        let r = dtuple::similar_sieve(k)?;
        // 2k+1 ≡ 5 or 7 (mod 12) carries a prime ≢ ±1 (mod 12)
        let ok = !matches!(k % 6, 2 | 3) || !r.passes();
        let text = vec![format!(
            "k = {k}: 2k+1 = {} {}",
            r.modulus,
            r.obstruction
                .as_deref()
                .map_or("passes".to_string(), |o| format!("obstructed: {o}"))
        )];
        Ok(vec![Entry::new(to_value(&r), text).ok(ok)])
    })?;
    Ok(Report {
        command: "similar sieve",
        section: "similar-triple",
        parameters: json!({ "k": a.k.0 }),
        results,
    })
}

fn similar_conjecture(a: &ConjectureArgs, guards: &Guards) -> Result<Report> {
    let results = per_k(&a.k, |k| {
        let r = dtuple::similar_conjecture_with(k, a.d_max, guards)?;
        let found: Vec<BigInt> = r.extensions.iter().map(|e| e.d.clone()).collect();
        let mut text = vec![format!(
            "k = {k}: extensions {{{}}}, 8k²+4k+1 = {}, 7k²+4k+1 square: {}, sieve passes: {}",
            strs(&found).join(", "),
            r.predicted_d,
            r.square_root_7k2.is_some(),
            r.sieve_passes
        )];
        text.extend(r.violations.iter().map(|v| format!("  VIOLATION: {v}")));
        let data = json!({
            "k": k,
            "tuple": to_value(&r.tuple),
            "extensions": strs(&found),
            "predicted_d": r.predicted_d.to_string(),
            "square_root_7k2": r.square_root_7k2.as_ref().map(ToString::to_string),
            "sieve_passes": r.sieve_passes,
            "violations": r.violations,
        });
        let ok = r.consistent();
        let certs = r.extensions.into_iter().flat_map(|e| e.certificates);
        Ok(vec![Entry::new(data, text).certs(certs).ok(ok)])
    })?;
    let parameters = json!({ "k": a.k.0, "d_max": a.d_max });
    Ok(Report {
        command: "similar conjecture",
        section: "similar-triple",
        parameters,
        results,
    })
}

fn similar_fundamental(a: &KArgs) -> Result<Report> {
    let results = per_k(&a.k, |k| {
        let r = dtuple::similar_fundamental(k)?;
        let reps: Vec<String> = r
            .classes
            .iter()
            .map(|c| format!("({}, {})", c.x0(), c.y0()))
            .collect();
        let text = vec![format!(
            "k = {k}: z² − {}y² = {}: classes {}; y ≡ ±1 (mod {}) along orbits: {}",
            r.d,
            r.n,
            reps.join(", "),
            r.n,
            r.congruences_hold
        )];
        let ok = r.single_pair && r.congruences_hold;
        Ok(vec![Entry::new(to_value(&r), text).ok(ok)])
    })?;
    Ok(Report {
        command: "similar fundamental",
        section: "similar-triple",
        parameters: json!({ "k": a.k.0 }),
        results,
    })
}

fn render(
    report: &Report,
    format: Format,
) -> std::result::Result<String, Box<dyn std::error::Error>> {
    match format {
        Format::Text => {
            let mut out = String::new();
            for e in &report.results {
                for line in &e.text {
                    writeln!(out, "{line}")?;
                }
            }
            Ok(out)
        }
        Format::Json => {
            let results: Vec<Value> = report
                .results
                .iter()
                .map(|e| {
                    let mut m = Map::new();
                    m.insert("data".into(), e.data.clone());
                    m.insert("certificates".into(), to_value(&e.certificates));
                    m.insert("consistent".into(), Value::Bool(e.ok));
                    Value::Object(m)
                })
                .collect();
            let doc = json!({
                "command": report.command,
                "section": report.section,
                "parameters": report.parameters,
                "results": results,
            });
            Ok(serde_json::to_string_pretty(&doc)? + "\n")
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["a", "b", "value", "root"])?;
            for c in report.results.iter().flat_map(|e| &e.certificates) {
                let root = c.root.as_ref().map(ToString::to_string).unwrap_or_default();
                w.write_record([c.a.to_string(), c.b.to_string(), c.value.to_string(), root])?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
    }
}
