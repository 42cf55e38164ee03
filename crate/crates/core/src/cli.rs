//! Command-line front end: argument parsing, output records and rendering.
//!
//! Exit codes: 0 success, 1 an assert-mode property was violated, 2 a domain
//! error (bad input value, unknown property), 64 malformed command line.

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::arith::{exp_divisors, factor, tau_e};
use crate::entropy::{divergence, divergence_with_pairing, entropy, LogBase};
use crate::error::{Error, Result};
use crate::ideals::{
    factor_prime_ideal, factor_principal, ideal_divergence, ideal_entropy, ideal_radical,
    make_field, IdealFactorization,
};
use crate::verifier::{list_properties, run_property, Mode, ScanConfig, ScanReport, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "entropia",
    version,
    about = "Entropy and divergence of integers and of ideals in quadratic fields"
)]
struct Cli {
    /// Logarithm base for displayed entropies and divergences
    #[arg(long, global = true, value_enum, default_value_t = Base::E)]
    base: Base,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Base {
    #[value(name = "e")]
    E,
    #[value(name = "2")]
    Two,
    #[value(name = "10")]
    Ten,
}

impl From<Base> for LogBase {
    fn from(b: Base) -> Self {
        match b {
            Base::E => LogBase::Nats,
            Base::Two => LogBase::Bits,
            Base::Ten => LogBase::Hartleys,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Assert,
    Survey,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Target {
    Radical,
    Principal(u64),
}

fn parse_target(s: &str) -> std::result::Result<Target, String> {
    if s == "radical" {
        return Ok(Target::Radical);
    }
    s.parse()
        .map(Target::Principal)
        .map_err(|_| format!("expected `radical` or a positive integer, got {s:?}"))
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Entropy H(n) of the exponent distribution of n
    Entropy { n: u64 },
    /// Divergence D(n||m); requires omega(n) = omega(m)
    Divergence {
        n: u64,
        m: u64,
        /// Pair the i-th prime of n with prime pairing[i] of m (0-based)
        #[arg(long, value_delimiter = ',')]
        pairing: Option<Vec<usize>>,
    },
    /// Prime factorization with Omega, omega and the radical
    Factor { n: u64 },
    /// Exponential divisors of n
    Expdivisors { n: u64 },
    /// Factorization of mO_K in Q(sqrt(d)) with its entropy
    #[command(allow_negative_numbers = true)]
    Ideal {
        d: i64,
        m: u64,
        /// `radical`, or an integer m2 for D(mO_K || m2 O_K)
        #[arg(long, value_parser = parse_target)]
        divergence_to: Option<Target>,
    },
    /// Reproduce the worked examples, flagging misprinted values
    Examples,
    /// List the verifiable properties
    List,
    /// Scan properties over finite ranges
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct VerifyArgs {
    /// Property id, or `all`
    #[arg(long)]
    prop: String,
    /// Upper bound for single-index scans
    #[arg(long)]
    max: Option<u64>,
    /// Upper bound for pair scans
    #[arg(long)]
    pair_max: Option<u64>,
    /// Upper bound for prime scans
    #[arg(long)]
    prime_max: Option<u64>,
    #[arg(long)]
    k_max: Option<u64>,
    #[arg(long)]
    alpha_max: Option<u64>,
    /// Number of prime factors in survey scans
    #[arg(long)]
    omega_max: Option<u64>,
    /// Field parameters d, comma separated
    #[arg(long, value_delimiter = ',')]
    fields: Option<Vec<i64>>,
    /// Prime pool for survey scans, comma separated
    #[arg(long, value_delimiter = ',')]
    pool: Option<Vec<u64>>,
    #[arg(long, default_value_t = 1e-12)]
    tolerance: f64,
    /// Violations listed per property
    #[arg(long, default_value_t = 100)]
    cap: usize,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Worker threads (0 = all cores)
    #[arg(long, env = "ENTROPIA_JOBS", default_value_t = 0)]
    jobs: usize,
    /// Write the report here instead of standard output
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

impl VerifyArgs {
    fn config(&self) -> ScanConfig {
        ScanConfig {
            max: self.max,
            pair_max: self.pair_max,
            prime_max: self.prime_max,
            prime_pool: self.pool.clone(),
            k_max: self.k_max,
            alpha_max: self.alpha_max,
            omega_max: self.omega_max,
            fields: self.fields.clone(),
            tolerance: self.tolerance,
            mode: self.mode.map(|m| match m {
                ModeArg::Assert => Mode::Assert,
                ModeArg::Survey => Mode::Survey,
            }),
            jobs: self.jobs,
            cap: self.cap,
        }
    }

    /// Canonical echo of the scan parameters; worker count and output
    /// options are left out.
    fn echo(&self) -> String {
        let mut parts = vec![format!("verify --prop {}", self.prop)];
        let join = |v: &[String]| v.join(",");
        let opts: [(&str, Option<String>); 8] = [
            ("max", self.max.map(|v| v.to_string())),
            ("pair-max", self.pair_max.map(|v| v.to_string())),
            ("prime-max", self.prime_max.map(|v| v.to_string())),
            ("k-max", self.k_max.map(|v| v.to_string())),
            ("alpha-max", self.alpha_max.map(|v| v.to_string())),
            ("omega-max", self.omega_max.map(|v| v.to_string())),
            (
                "fields",
                self.fields
                    .as_ref()
                    .map(|f| join(&f.iter().map(i64::to_string).collect::<Vec<_>>())),
            ),
            (
                "pool",
                self.pool
                    .as_ref()
                    .map(|f| join(&f.iter().map(u64::to_string).collect::<Vec<_>>())),
            ),
        ];
        for (name, value) in opts {
            if let Some(value) = value {
                parts.push(format!("--{name} {value}"));
            }
        }
        parts.push(format!("--tolerance {:e}", self.tolerance));
        parts.push(format!("--cap {}", self.cap));
        if let Some(mode) = self.mode {
            parts.push(format!(
                "--mode {}",
                if mode == ModeArg::Assert {
                    "assert"
                } else {
                    "survey"
                }
            ));
        }
        parts.join(" ")
    }
}

/// One named quantity of a command's output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedResult {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
}

impl NamedResult {
    /// Numeric result, stored rounded to 12 significant digits.
    pub fn number(name: impl Into<String>, value: f64, unit: Option<&str>) -> Self {
        Self {
            name: name.into(),
            value: Some(round_sig(value)),
            unit: unit.map(str::to_string),
            text: None,
        }
    }

    pub fn text(name: impl Into<String>, text: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            value: None,
            unit: None,
            text: Some(text.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Vec<String>,
    pub results: Vec<NamedResult>,
    pub notes: Vec<String>,
}

impl OutputRecord {
    fn new(command: &str, inputs: &[String]) -> Self {
        let echo = std::iter::once(command.to_string())
            .chain(inputs.iter().cloned())
            .collect::<Vec<_>>();
        Self {
            command: echo.join(" "),
            inputs: inputs.to_vec(),
            results: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            match (&r.value, &r.text) {
                (Some(v), _) => {
                    out.push_str(&format!("{} = {}", r.name, format_sig(*v)));
                    if let Some(unit) = &r.unit {
                        out.push(' ');
                        out.push_str(unit);
                    }
                    if let Some(text) = &r.text {
                        out.push_str(&format!("  [{text}]"));
                    }
                }
                (None, Some(text)) => out.push_str(&format!("{}: {}", r.name, text)),
                (None, None) => out.push_str(&r.name),
            }
            out.push('\n');
        }
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }

    fn render_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |_| Error::InvalidConfig("csv output failed");
        w.write_record(["command", "name", "value", "unit", "text"])
            .map_err(io)?;
        for r in &self.results {
            let value = r.value.map(|v| v.to_string()).unwrap_or_default();
            w.write_record([
                self.command.as_str(),
                r.name.as_str(),
                value.as_str(),
                r.unit.as_deref().unwrap_or(""),
                r.text.as_deref().unwrap_or(""),
            ])
            .map_err(io)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|_| Error::InvalidConfig("csv output failed"))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// `x` with 12 significant digits, positional unless very large or small.
pub fn format_sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent");
    if !(-5..12).contains(&exp) {
        return sci;
    }
    let sign = if mantissa.starts_with('-') { "-" } else { "" };
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    if exp >= 0 {
        let (int, frac) = digits.split_at(exp as usize + 1);
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    } else {
        format!("{sign}0.{}{digits}", "0".repeat((-exp - 1) as usize))
    }
}

pub fn round_sig(x: f64) -> f64 {
    format_sig(x).parse().unwrap_or(x)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub tool_version: String,
    pub command: String,
    pub reports: Vec<ScanReport>,
}

impl VerifyOutput {
    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn render_csv(&self) -> Result<String> {
        let io = |_| Error::InvalidConfig("csv output failed");
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["property", "inputs", "lhs", "rhs", "margin"])
            .map_err(io)?;
        for report in &self.reports {
            for v in &report.violations {
                let inputs = v
                    .inputs
                    .iter()
                    .map(i64::to_string)
                    .collect::<Vec<_>>()
                    .join(";");
                w.write_record([
                    report.property.clone(),
                    inputs,
                    v.lhs.to_string(),
                    v.rhs.to_string(),
                    v.margin.to_string(),
                ])
                .map_err(io)?;
            }
        }
        let bytes = w
            .into_inner()
            .map_err(|_| Error::InvalidConfig("csv output failed"))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&format!(
                "{}  {}  tested {}  violations {}  ({} ms)\n",
                r.property,
                r.verdict.as_str(),
                r.tested,
                r.violation_count,
                r.elapsed_ms
            ));
            for v in &r.violations {
                let inputs = v
                    .inputs
                    .iter()
                    .map(i64::to_string)
                    .collect::<Vec<_>>()
                    .join(", ");
                out.push_str(&format!(
                    "  [{}]  lhs {}  rhs {}  margin {}\n",
                    inputs,
                    format_sig(v.lhs),
                    format_sig(v.rhs),
                    format_sig(v.margin)
                ));
            }
            if r.violation_count > r.violations.len() as u64 {
                out.push_str(&format!(
                    "  ... {} more\n",
                    r.violation_count - r.violations.len() as u64
                ));
            }
        }
        out
    }
}

struct Display {
    base: LogBase,
}

impl Display {
    fn info(&self, name: &str, nats: f64) -> NamedResult {
        NamedResult::number(name, self.base.convert(nats), Some(self.base.unit()))
    }
}

fn cmd_entropy(n: u64, show: &Display) -> Result<OutputRecord> {
    let f = factor(n)?;
    let mut rec = OutputRecord::new("entropy", &[n.to_string()]);
    rec.results
        .push(NamedResult::text("factorization", f.to_string()));
    rec.results.push(show.info("H", entropy(&f)));
    rec.notes
        .push("H(n) = log Omega(n) - (1/Omega(n)) sum a_i log a_i".into());
    Ok(rec)
}

fn cmd_divergence(
    n: u64,
    m: u64,
    pairing: Option<&[usize]>,
    show: &Display,
) -> Result<OutputRecord> {
    let (fn_, fm) = (factor(n)?, factor(m)?);
    let d = match pairing {
        Some(p) => divergence_with_pairing(&fn_, &fm, p)?,
        None => divergence(&fn_, &fm)?,
    };
    let mut rec = OutputRecord::new("divergence", &[n.to_string(), m.to_string()]);
    rec.results.push(NamedResult::text("n", fn_.to_string()));
    rec.results.push(NamedResult::text("m", fm.to_string()));
    rec.results.push(show.info("D", d));
    rec.notes.push(match pairing {
        Some(p) => format!("primes paired as {p:?}"),
        None => "primes paired in increasing order".into(),
    });
    Ok(rec)
}

fn cmd_factor(n: u64) -> Result<OutputRecord> {
    let f = factor(n)?;
    let mut rec = OutputRecord::new("factor", &[n.to_string()]);
    rec.results
        .push(NamedResult::text("factorization", f.to_string()));
    rec.results
        .push(NamedResult::text("Omega", f.big_omega().to_string()));
    rec.results
        .push(NamedResult::text("omega", f.omega().to_string()));
    let rad = f
        .radical()
        .value()
        .map_or_else(|| f.radical().to_string(), |v| v.to_string());
    rec.results.push(NamedResult::text("radical", rad));
    Ok(rec)
}

fn cmd_expdivisors(n: u64) -> Result<OutputRecord> {
    let f = factor(n)?;
    let divisors = exp_divisors(&f)?;
    let listed: Vec<String> = divisors
        .iter()
        .map(|d| d.value().map_or_else(|| d.to_string(), |v| v.to_string()))
        .collect();
    let mut rec = OutputRecord::new("expdivisors", &[n.to_string()]);
    rec.results
        .push(NamedResult::text("tau_e", tau_e(&f).to_string()));
    rec.results
        .push(NamedResult::text("divisors", listed.join(", ")));
    Ok(rec)
}

fn shape(ideal: &IdealFactorization) -> String {
    ideal
        .factors()
        .iter()
        .map(|fac| format!("{}^{} (f={})", fac.label, fac.e, fac.f))
        .collect::<Vec<_>>()
        .join(" * ")
}

fn cmd_ideal(d: i64, m: u64, target: Option<Target>, show: &Display) -> Result<OutputRecord> {
    let field = make_field(d)?;
    let ideal = factor_principal(&field, m)?;
    let h = ideal_entropy(&ideal)?;
    let mut inputs = vec![d.to_string(), m.to_string()];
    if let Some(t) = target {
        inputs.push(match t {
            Target::Radical => "--divergence-to radical".into(),
            Target::Principal(m2) => format!("--divergence-to {m2}"),
        });
    }
    let mut rec = OutputRecord::new("ideal", &inputs);
    rec.results.push(NamedResult::text(
        "field",
        format!("{field}, discriminant {}", field.discriminant()),
    ));
    rec.results
        .push(NamedResult::text("factorization", shape(&ideal)));
    rec.results.push(NamedResult::text(
        "exponents",
        format!(
            "({})",
            ideal
                .exponents()
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        ),
    ));
    rec.results
        .push(NamedResult::text("Omega", ideal.big_omega().to_string()));
    rec.results
        .push(NamedResult::text("omega", ideal.omega().to_string()));
    rec.results.push(show.info("H", h));
    match target {
        Some(Target::Radical) => {
            let div = ideal_divergence(&ideal, &ideal_radical(&ideal))?;
            rec.results.push(show.info("D(I||gamma(I))", div));
            rec.results.push(show.info("D + H", div + h));
            rec.results
                .push(show.info("log omega(I)", (ideal.omega() as f64).ln()));
        }
        Some(Target::Principal(m2)) => {
            let other = factor_principal(&field, m2)?;
            rec.results.push(NamedResult::text("J", shape(&other)));
            rec.results
                .push(show.info("D(I||J)", ideal_divergence(&ideal, &other)?));
        }
        None => {}
    }
    Ok(rec)
}

struct Example {
    name: &'static str,
    closed_form: &'static str,
    computed: f64,
    expected: f64,
    printed: Option<f64>,
}

// printed values are the truncated decimals as they appear in print
#[allow(clippy::approx_constant)]
fn worked_examples() -> Result<Vec<Example>> {
    let ln = f64::ln;
    let h = |n: u64| -> Result<f64> { Ok(entropy(&factor(n)?)) };
    let d = |n: u64, m: u64| -> Result<f64> { divergence(&factor(n)?, &factor(m)?) };
    let k19 = make_field(-19)?;
    let gauss = make_field(-1)?;
    let i90 = factor_principal(&gauss, 90)?;
    let h90 = ideal_entropy(&i90)?;
    let d90 = ideal_divergence(&i90, &ideal_radical(&i90))?;
    let ex = |label: &'static str, computed, expected, printed| {
        let (name, closed_form) = label.split_once(" = ").expect("label has a closed form");
        Example {
            name,
            closed_form,
            computed,
            expected,
            printed,
        }
    };
    Ok(vec![
        ex("H(10) = log 2", h(10)?, ln(2.0), Some(0.6931)),
        ex("H(100) = log 2", h(100)?, ln(2.0), Some(0.6931)),
        ex("H(8) = 0", h(8)?, 0.0, None),
        ex(
            "H(40) = (1/4) log(4^4/3^3)",
            h(40)?,
            0.25 * ln(256.0 / 27.0),
            Some(2.2493),
        ),
        ex(
            "D(100||200) = (1/2) log(25/24)",
            d(100, 200)?,
            0.5 * ln(25.0 / 24.0),
            Some(0.0088),
        ),
        ex(
            "H(12) = log 3 - (2/3) log 2",
            h(12)?,
            ln(3.0) - 2.0 / 3.0 * ln(2.0),
            None,
        ),
        ex("H(6) = log 2", h(6)?, ln(2.0), None),
        ex(
            "H(180) = log 5 - (4/5) log 2",
            h(180)?,
            ln(5.0) - 0.8 * ln(2.0),
            None,
        ),
        ex(
            "H(60) = log 4 - (1/2) log 2",
            h(60)?,
            ln(4.0) - 0.5 * ln(2.0),
            None,
        ),
        ex(
            "H(35 O_K) in Q(sqrt(-19)) = log 4",
            ideal_entropy(&factor_principal(&k19, 35)?)?,
            ln(4.0),
            None,
        ),
        ex(
            "D(5 O_K||7 O_K) in Q(sqrt(-19)) = 0",
            ideal_divergence(&factor_prime_ideal(&k19, 5)?, &factor_prime_ideal(&k19, 7)?)?,
            0.0,
            None,
        ),
        ex(
            "H(90 Z[i]) = log 6 - (2/3) log 2",
            h90,
            ln(6.0) - 2.0 / 3.0 * ln(2.0),
            None,
        ),
        ex(
            "D(90 Z[i]||gamma) = log(2/3) + (2/3) log 2",
            d90,
            ln(2.0 / 3.0) + 2.0 / 3.0 * ln(2.0),
            None,
        ),
        ex("D + H, 90 Z[i] = log 4", d90 + h90, ln(4.0), None),
    ])
}

/// Whether `printed`, a truncated decimal, is consistent with `value`.
fn truncation_of(printed: f64, value: f64) -> bool {
    (value - printed).abs() < 1e-4
}

fn cmd_examples() -> Result<(OutputRecord, bool)> {
    let mut rec = OutputRecord::new("examples", &[]);
    let mut all_ok = true;
    for e in worked_examples()? {
        let matches = (e.computed - e.expected).abs() <= 1e-9;
        all_ok &= matches;
        let status = match e.printed {
            _ if !matches => "MISMATCH".to_string(),
            Some(p) if !truncation_of(p, e.computed) => format!("misprint: printed {p}"),
            Some(p) => format!("ok, printed {p}"),
            None => "ok".to_string(),
        };
        let status = format!("{}; {status}", e.closed_form);
        let mut result = NamedResult::number(e.name, e.computed, Some("nats"));
        result.text = Some(status);
        rec.results.push(result);
        if let Some(p) = e.printed.filter(|&p| !truncation_of(p, e.computed)) {
            let ratio = p / e.computed;
            let base10 = e.computed / std::f64::consts::LN_10;
            if truncation_of(p, base10) {
                rec.notes.push(format!(
                    "{}: printed {p} is the base-10 value {}; the natural-log value is {}",
                    e.name,
                    format_sig(base10),
                    format_sig(e.computed)
                ));
            } else {
                rec.notes.push(format!(
                    "{}: printed {p} is {:.2} times the formula value {}",
                    e.name,
                    ratio,
                    format_sig(e.computed)
                ));
            }
        }
    }
    Ok((rec, all_ok))
}

fn cmd_list() -> OutputRecord {
    let mut rec = OutputRecord::new("list", &[]);
    for p in list_properties() {
        let mode = match p.mode_default {
            Mode::Assert => "assert",
            Mode::Survey => "survey",
        };
        rec.results
            .push(NamedResult::text(p.id, format!("[{mode}] {}", p.claim)));
    }
    rec
}

fn cmd_verify(args: &VerifyArgs, format: Format) -> Result<(String, i32)> {
    let ids: Vec<&str> = if args.prop == "all" {
        list_properties().iter().map(|p| p.id).collect()
    } else {
        vec![args.prop.as_str()]
    };
    let cfg = args.config();
    let reports = ids
        .iter()
        .map(|id| run_property(id, &cfg))
        .collect::<Result<Vec<_>>>()?;
    let violated = reports.iter().any(|r| r.verdict == Verdict::Violated);
    let output = VerifyOutput {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        command: args.echo(),
        reports,
    };
    let rendered = match format {
        Format::Text => output.render_text(),
        Format::Json => output.render_json(),
        Format::Csv => output.render_csv()?,
    };
    Ok((rendered, if violated { EXIT_VIOLATED } else { EXIT_OK }))
}

fn render(rec: &OutputRecord, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => rec.render_text(),
        Format::Json => serde_json::to_string_pretty(rec).expect("record serializes") + "\n",
        Format::Csv => rec.render_csv()?,
    })
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let show = Display {
        base: cli.base.into(),
    };
    let rec = match &cli.command {
        Command::Entropy { n } => cmd_entropy(*n, &show)?,
        Command::Divergence { n, m, pairing } => cmd_divergence(*n, *m, pairing.as_deref(), &show)?,
        Command::Factor { n } => cmd_factor(*n)?,
        Command::Expdivisors { n } => cmd_expdivisors(*n)?,
        Command::Ideal {
            d,
            m,
            divergence_to,
        } => cmd_ideal(*d, *m, *divergence_to, &show)?,
        Command::List => cmd_list(),
        Command::Examples => {
            let (rec, ok) = cmd_examples()?;
            let _ = out.write_all(render(&rec, cli.format)?.as_bytes());
            return Ok(if ok { EXIT_OK } else { EXIT_VIOLATED });
        }
        Command::Verify(args) => {
            let (text, code) = cmd_verify(args, cli.format)?;
            match &args.out {
                Some(path) => {
                    if fs::write(path, text).is_err() {
                        let _ = writeln!(err, "error: cannot write {}", path.display());
                        return Ok(EXIT_DOMAIN);
                    }
                }
                None => {
                    let _ = out.write_all(text.as_bytes());
                }
            }
            return Ok(code);
        }
    };
    let _ = out.write_all(render(&rec, cli.format)?.as_bytes());
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => EXIT_USAGE,
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("entropia").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(std::f64::consts::LN_2), "0.693147180560");
        assert_eq!(format_sig(0.020410997260127586), "0.0204109972601");
        assert_eq!(format_sig(-0.010164014435498081), "-0.0101640144355");
        assert_eq!(format_sig(123.0), "123.000000000");
        assert_eq!(format_sig(0.0), "0");
        assert_eq!(format_sig(1e-9), "1.00000000000e-9");
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333);
    }

    #[test]
    fn entropy_and_divergence() {
        let (code, out, _) = call(&["entropy", "10"]);
        assert_eq!(code, 0);
        assert!(out.contains("H = 0.693147180560 nats"), "{out}");
        let (_, out, _) = call(&["divergence", "100", "200"]);
        assert!(out.contains("D = 0.020410997260"), "{out}");
        let (_, out, _) = call(&["--base", "10", "divergence", "100", "200"]);
        assert!(out.contains("D = 0.00886"), "{out}");
        let (_, out, _) = call(&["--base", "2", "entropy", "10"]);
        assert!(out.contains("H = 1.00000000000 bits"), "{out}");
    }

    #[test]
    fn exit_codes() {
        let (code, _, err) = call(&["divergence", "100", "30"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.contains("omega mismatch"), "{err}");
        assert_eq!(call(&["entropy", "0"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["entropy", "ten"]).0, EXIT_USAGE);
        assert_eq!(call(&["ideal", "12", "5"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["verify", "--prop", "P-nope"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn ideal_command() {
        let (code, out, _) = call(&["ideal", "-1", "90", "--divergence-to", "radical"]);
        assert_eq!(code, 0);
        assert!(out.contains("exponents: (2,2,1,1)"), "{out}");
        assert!(out.contains("H = 1.32966134885"), "{out}");
        assert!(out.contains("D(I||gamma(I)) = 0.0566330122651"), "{out}");
        assert!(out.contains("D + H = 1.38629436112"), "{out}");
        let (_, out, _) = call(&["ideal", "-19", "35", "--divergence-to", "35"]);
        assert!(out.contains("H = 1.38629436112"), "{out}");
        assert!(out.contains("D(I||J) = 0"), "{out}");
    }

    #[test]
    fn record_round_trips() {
        let (_, out, _) = call(&["--format", "json", "ideal", "-1", "90"]);
        let rec: OutputRecord = serde_json::from_str(&out).unwrap();
        let again: OutputRecord =
            serde_json::from_str(&serde_json::to_string(&rec).unwrap()).unwrap();
        assert_eq!(rec, again);
        assert_eq!(rec.command, "ideal -1 90");
    }

    #[test]
    fn examples_flag_misprints() {
        let (code, out, _) = call(&["examples"]);
        assert_eq!(code, 0);
        assert!(out.contains("misprint: printed 2.2493"), "{out}");
        assert!(out.contains("misprint: printed 0.0088"), "{out}");
        assert!(
            out.contains("is 4.00 times the formula value 0.562335144619"),
            "{out}"
        );
        assert!(out.contains("base-10 value 0.00886438"), "{out}");
        assert!(!out.contains("MISMATCH"));
    }

    #[test]
    fn verify_formats() {
        let (code, out, _) = call(&[
            "--format",
            "csv",
            "verify",
            "--prop",
            "P-COR-4.2",
            "--cap",
            "2",
        ]);
        assert_eq!(code, 0);
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines[0], "property,inputs,lhs,rhs,margin");
        assert!(lines[1].starts_with("P-COR-4.2,60;30;0,"), "{out}");
        assert_eq!(lines.len(), 3);
        let (code, out, _) = call(&[
            "verify",
            "--prop",
            "P-THM-2.6",
            "--pair-max",
            "2000",
            "--cap",
            "1",
        ]);
        assert_eq!(code, EXIT_VIOLATED);
        assert!(out.contains("[6, 1925]"), "{out}");
    }
}
