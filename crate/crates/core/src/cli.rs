//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when `--strict` is set and a check finds
//! violations (or an audit finds mismatches), 2 on any input or validation
//! error, with a single `error: <code>: <message>` line on standard error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bundle::{LineBundleSum, MultiDegree, Shape};
use crate::cohomology::cohomology_table;
use crate::criteria::{
    desk_scale_audit, lemma14_check, lemma14_conclusion_match, two_factor_violations, thm12_conclusion_match,
    thm12_violations, thm13_conclusion_match, thm13_violations, Criterion, FormMatch, ViolationReport,
    ViolationRow,
};
use crate::emit::{emit_table, Format};
use crate::error::{Error, Result};
use crate::koszul::{euler_exactness_check, koszul_factor_complex, proposition_iso_dims, IsoDims};
use crate::regularity::{
    acm_closed_form, is_acm, is_globally_generated, is_m_regular, is_zero_regular, regularity_index,
    AcmWitness, RegularityWitness,
};

/// Largest number of twists `cohomology --range` will tabulate.
const MAX_TABLE_TWISTS: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "multiproj", version, about = "Cohomology and splitting checks for line-bundle sums on products of projective spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate dim H^t(E(twist)).
    Cohomology(CohomologyArgs),
    /// 0-regularity, (m)-regularity, Reg and global generation.
    Regularity(RegularityArgs),
    /// Arithmetically Cohen-Macaulay test.
    Acm(BundleArgs),
    /// Factor Koszul complex with its exactness certificates.
    Koszul(KoszulArgs),
    /// Evaluate a splitting criterion on a bundle.
    Check(CheckArgs),
    /// Exhaustive hypothesis-vs-conclusion audit over small bundles.
    Audit(AuditArgs),
}

#[derive(Debug, Args)]
struct BundleArgs {
    /// Bundle JSON, inline or a file path.
    #[arg(long)]
    bundle: String,
}

#[derive(Debug, Args)]
struct CohomologyArgs {
    #[arg(long)]
    bundle: String,
    /// Only this cohomological degree (default: all).
    #[arg(long)]
    t: Option<u32>,
    /// A single twist, comma separated (default: zero).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "range")]
    twist: Option<String>,
    /// Every twist in the box [lo, hi]^s, written lo:hi.
    #[arg(long, allow_hyphen_values = true)]
    range: Option<String>,
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Debug, Args)]
struct RegularityArgs {
    #[arg(long)]
    bundle: String,
    /// Also test (m_1,...,m_s)-regularity.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
}

#[derive(Debug, Args)]
struct KoszulArgs {
    /// Factor dimensions, comma separated.
    #[arg(long)]
    shape: String,
    /// Factor index, 1-based.
    #[arg(long)]
    factor: usize,
    /// Twist d of the complex (default: zero).
    #[arg(long, allow_hyphen_values = true)]
    degree: Option<String>,
    /// Extra twist for the Euler-characteristic certificate (default: zero).
    #[arg(long, allow_hyphen_values = true)]
    extra_twist: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CriterionName {
    Thm12,
    Thm13,
    Lemma14,
    Miyazaki,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(value_enum)]
    criterion: CriterionName,
    #[arg(long)]
    bundle: String,
    /// r vector for thm13 (and the parametrised two-factor form).
    #[arg(long)]
    r: Option<String>,
    #[arg(long, default_value = "json")]
    format: String,
    /// Exit 1 when violations are found.
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Args)]
struct AuditArgs {
    #[arg(value_enum)]
    criterion: CriterionName,
    #[arg(long)]
    shape: String,
    #[arg(long)]
    bound: u32,
    #[arg(long)]
    max_rank: u32,
    #[arg(long)]
    r: Option<String>,
    /// Exit 1 when any mismatch is found.
    #[arg(long)]
    strict: bool,
}

/// Parses `argv` (program name first), writes the report and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            let _ = writeln!(err, "error: usage: {first}");
            return 2;
        }
    };
    match dispatch(cli.command) {
        Ok((text, status)) => {
            let _ = out.write_all(text.as_bytes());
            status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}: {}", e.code(), e.to_string().replace('\n', " "));
            2
        }
    }
}

fn dispatch(command: Command) -> Result<(String, i32)> {
    match command {
        Command::Cohomology(a) => cohomology(a).map(|s| (s, 0)),
        Command::Regularity(a) => regularity(a).map(|s| (s, 0)),
        Command::Acm(a) => acm(a).map(|s| (s, 0)),
        Command::Koszul(a) => koszul(a).map(|s| (s, 0)),
        Command::Check(a) => check(a),
        Command::Audit(a) => audit(a),
    }
}

fn load_bundle(arg: &str) -> Result<LineBundleSum> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::InvalidInput(format!("cannot read {arg}: {e}")))?
    };
    LineBundleSum::from_json(&text)
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>> {
    text.split(',')
        .map(|p| p.trim().parse::<T>().map_err(|_| Error::InvalidInput(format!("bad {what} entry {p:?}"))))
        .collect()
}

fn parse_degree(text: Option<&str>, s: usize) -> Result<MultiDegree> {
    match text {
        None => Ok(MultiDegree::zero(s)),
        Some(t) => {
            let v: Vec<i64> = parse_list(t, "degree")?;
            if v.len() != s {
                return Err(Error::LengthMismatch { expected: s, found: v.len() });
            }
            Ok(MultiDegree::new(v))
        }
    }
}

fn parse_r(text: Option<&str>) -> Result<Option<Vec<u32>>> {
    text.map(|t| parse_list::<u32>(t, "r").map_err(|_| Error::ROutOfRange(format!("cannot parse {t:?}"))))
        .transpose()
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report serializes");
    s.push('\n');
    s
}

fn cohomology(a: CohomologyArgs) -> Result<String> {
    let e = load_bundle(&a.bundle)?;
    let format: Format = a.format.parse()?;
    let s = e.shape().factors();
    let twists: Vec<MultiDegree> = match &a.range {
        Some(range) => {
            let (lo, hi) = range
                .split_once(':')
                .and_then(|(l, h)| Some((l.trim().parse::<i64>().ok()?, h.trim().parse::<i64>().ok()?)))
                .ok_or_else(|| Error::InvalidInput(format!("range must be lo:hi, got {range:?}")))?;
            if lo > hi {
                return Err(Error::InvalidInput(format!("empty range {lo}:{hi}")));
            }
            let side = (hi - lo + 1) as u64;
            if side.checked_pow(s as u32).is_none_or(|n| n > MAX_TABLE_TWISTS) {
                return Err(Error::InvalidInput(format!("range box exceeds {MAX_TABLE_TWISTS} twists")));
            }
            let mut all = vec![Vec::new()];
            for _ in 0..s {
                all = all
                    .into_iter()
                    .flat_map(|p: Vec<i64>| {
                        (lo..=hi).map(move |x| {
                            let mut v = p.clone();
                            v.push(x);
                            v
                        })
                    })
                    .collect();
            }
            all.into_iter().map(MultiDegree::new).collect()
        }
        None => vec![parse_degree(a.twist.as_deref(), s)?],
    };
    let degrees: Vec<u32> = match a.t {
        Some(t) => vec![t],
        None => (0..=e.shape().total_dim()).collect(),
    };
    let table = cohomology_table(&e, &twists, &degrees)?;
    Ok(emit_table(&table, format))
}

#[derive(Serialize)]
struct RegularityOutput {
    zero_regular: bool,
    reg_index: i64,
    globally_generated: bool,
    witnesses: Vec<RegularityWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<MultiDegree>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m_regular: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m_witnesses: Option<Vec<RegularityWitness>>,
}

fn regularity(a: RegularityArgs) -> Result<String> {
    let e = load_bundle(&a.bundle)?;
    let zero = is_zero_regular(&e);
    let (m, m_regular, m_witnesses) = match a.m.as_deref() {
        Some(text) => {
            let m = parse_degree(Some(text), e.shape().factors())?;
            let v = is_m_regular(&e, &m)?;
            (Some(m), Some(v.regular), Some(v.witnesses))
        }
        None => (None, None, None),
    };
    Ok(json_line(&RegularityOutput {
        zero_regular: zero.regular,
        reg_index: regularity_index(&e)?,
        globally_generated: is_globally_generated(&e),
        witnesses: zero.witnesses,
        m,
        m_regular,
        m_witnesses,
    }))
}

#[derive(Serialize)]
struct AcmOutput {
    acm: bool,
    witnesses: Vec<AcmWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form: Option<bool>,
}

fn acm(a: BundleArgs) -> Result<String> {
    let e = load_bundle(&a.bundle)?;
    let verdict = is_acm(&e);
    let closed_form = match e.summands() {
        [(degree, _)] => Some(acm_closed_form(degree, e.shape())?),
        _ => None,
    };
    Ok(json_line(&AcmOutput { acm: verdict.acm, witnesses: verdict.witnesses, closed_form }))
}

#[derive(Serialize)]
struct KoszulTerm {
    r: usize,
    degree: MultiDegree,
    mult: u64,
}

#[derive(Serialize)]
struct KoszulOutput {
    shape: Shape,
    factor: usize,
    terms: Vec<KoszulTerm>,
    euler_exact: bool,
    iso_dims: Vec<IsoDims>,
}

fn koszul(a: KoszulArgs) -> Result<String> {
    let shape = Shape::new(parse_list(&a.shape, "shape")?)?;
    let s = shape.factors();
    if a.factor == 0 {
        return Err(Error::InvalidFactor { index: 0, factors: s });
    }
    let d = parse_degree(a.degree.as_deref(), s)?;
    let extra = parse_degree(a.extra_twist.as_deref(), s)?;
    let complex = koszul_factor_complex(&shape, a.factor - 1, &d)?;
    let euler_exact = euler_exactness_check(&complex, &extra)?;
    let terms = complex
        .terms
        .iter()
        .enumerate()
        .map(|(r, t)| {
            let (degree, mult) = t.summands()[0].clone();
            KoszulTerm { r, degree, mult }
        })
        .collect();
    Ok(json_line(&KoszulOutput {
        shape: shape.clone(),
        factor: a.factor,
        terms,
        euler_exact,
        iso_dims: proposition_iso_dims(&shape)
            .into_iter()
            .map(|d| IsoDims { factor: d.factor + 1, ..d })
            .collect(),
    }))
}

#[derive(Serialize)]
struct CheckOutput<'a> {
    criterion: &'static str,
    hypothesis_holds: bool,
    conclusion_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    conclusion: Option<&'a FormMatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vacuous_degree: Option<u32>,
    violations: &'a [ViolationRow],
}

fn check(a: CheckArgs) -> Result<(String, i32)> {
    let e = load_bundle(&a.bundle)?;
    let format: Format = a.format.parse()?;
    let r = parse_r(a.r.as_deref())?;
    let require_r = |r: &Option<Vec<u32>>| {
        r.clone().ok_or_else(|| Error::ROutOfRange("thm13 needs --r".into()))
    };
    let (name, report, conclusion, conclusion_holds, vacuous): (_, ViolationReport, Option<FormMatch>, bool, _) =
        match a.criterion {
            CriterionName::Thm12 => {
                let m = thm12_conclusion_match(&e);
                ("thm12", thm12_violations(&e)?, Some(m.clone()), m.is_match(), None)
            }
            CriterionName::Thm13 => {
                let r = require_r(&r)?;
                let m = thm13_conclusion_match(&e, &r)?;
                ("thm13", thm13_violations(&e, &r)?, Some(m.clone()), m.is_match(), None)
            }
            CriterionName::Lemma14 => {
                let rep = lemma14_check(&e)?;
                let holds = lemma14_conclusion_match(&e)?;
                ("lemma14", rep.violations, None, holds, Some(rep.vacuous_degree))
            }
            CriterionName::Miyazaki => {
                let report = two_factor_violations(&e, r.as_deref())?;
                let m = match &r {
                    None => thm12_conclusion_match(&e),
                    Some(r) => thm13_conclusion_match(&e, r)?,
                };
                ("miyazaki", report, Some(m.clone()), m.is_match(), None)
            }
        };
    let text = match format {
        Format::Json => json_line(&CheckOutput {
            criterion: name,
            hypothesis_holds: report.is_empty(),
            conclusion_holds,
            conclusion: conclusion.as_ref(),
            vacuous_degree: vacuous,
            violations: &report.rows,
        }),
        other => emit_table(&report, other),
    };
    let status = if a.strict && !report.is_empty() { 1 } else { 0 };
    Ok((text, status))
}

fn audit(a: AuditArgs) -> Result<(String, i32)> {
    let shape = Shape::new(parse_list(&a.shape, "shape")?)?;
    let r = parse_r(a.r.as_deref())?;
    let criterion = match a.criterion {
        CriterionName::Thm12 => Criterion::Thm12,
        CriterionName::Thm13 => {
            Criterion::Thm13(r.ok_or_else(|| Error::ROutOfRange("thm13 needs --r".into()))?)
        }
        CriterionName::Lemma14 => Criterion::Lemma14,
        CriterionName::Miyazaki => Criterion::TwoFactor(r),
    };
    let report = desk_scale_audit(&shape, a.bound, a.max_rank, &criterion)?;
    let status = if a.strict && !report.is_clean() { 1 } else { 0 };
    let mut text = report.to_json();
    text.push('\n');
    Ok((text, status))
}
