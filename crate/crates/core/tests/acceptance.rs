//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Claims listed in `KNOWN_FALSE` have verified counterexamples on the
//! required range. Their lines print FAIL with the smallest witness and do
//! not fail the run; if one of them ever passes, the run fails so the list
//! gets revisited.

use std::collections::BTreeSet;
use std::process::Command;

use entropia::arith::factor;
use entropia::entropy::{divergence, divergence_to_radical, entropy};
use entropia::ideals::{
    factor_principal, ideal_divergence, ideal_entropy, ideal_radical, make_field,
};
use entropia::verifier::{run_property, Mode, ScanConfig, ScanReport, Verdict};

const KNOWN_FALSE: &[&str] = &["P-THM-2.6"];

#[derive(Default)]
struct Tally {
    failed: Vec<String>,
    expected_failures: Vec<String>,
    unexpected_passes: Vec<String>,
}

impl Tally {
    fn line(&mut self, label: &str, ok: bool, detail: &str) {
        let known = KNOWN_FALSE.contains(&label);
        let status = match (ok, known) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "FAIL (known false claim)",
            (true, true) => "PASS (unexpected)",
        };
        println!("{status:<26} {label}: {detail}");
        match (ok, known) {
            (false, false) => self.failed.push(label.to_string()),
            (false, true) => self.expected_failures.push(label.to_string()),
            (true, true) => self.unexpected_passes.push(label.to_string()),
            (true, false) => {}
        }
    }
}

fn cfg() -> ScanConfig {
    ScanConfig {
        cap: 5,
        ..ScanConfig::default()
    }
}

fn scan(tally: &mut Tally, id: &str, cfg: ScanConfig) -> bool {
    let r: ScanReport = match run_property(id, &cfg) {
        Ok(r) => r,
        Err(e) => {
            tally.line(id, false, &format!("scan error: {e}"));
            return false;
        }
    };
    let ok = r.verdict == Verdict::HoldsOnRange && r.tested > 0;
    let mut detail = format!("{} tested, {} violations", r.tested, r.violation_count);
    if let Some(v) = r.violations.first() {
        detail.push_str(&format!(
            "; smallest {:?}: lhs {:.6} rhs {:.6} margin {:.6}",
            v.inputs, v.lhs, v.rhs, v.margin
        ));
    }
    tally.line(id, ok, &detail);
    ok
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9
}

fn criterion_1(t: &mut Tally) {
    let ln = f64::ln;
    let h = |n| entropy(&factor(n).unwrap());
    let k19 = make_field(-19).unwrap();
    let gauss = make_field(-1).unwrap();
    let i90 = factor_principal(&gauss, 90).unwrap();
    let h90 = ideal_entropy(&i90).unwrap();
    let d90 = ideal_divergence(&i90, &ideal_radical(&i90)).unwrap();
    let checks = [
        ("H(10)", h(10), ln(2.0)),
        ("H(100)", h(100), ln(2.0)),
        ("H(8)", h(8), 0.0),
        ("H(12)", h(12), ln(3.0) - 2.0 / 3.0 * ln(2.0)),
        ("H(180)", h(180), ln(5.0) - 0.8 * ln(2.0)),
        ("H(60)", h(60), ln(4.0) - 0.5 * ln(2.0)),
        (
            "H(35 O_K)",
            ideal_entropy(&factor_principal(&k19, 35).unwrap()).unwrap(),
            ln(4.0),
        ),
        ("H(90 Z[i])", h90, ln(6.0) - 2.0 / 3.0 * ln(2.0)),
        (
            "D(90 Z[i]||gamma)",
            d90,
            ln(2.0 / 3.0) + 2.0 / 3.0 * ln(2.0),
        ),
        ("D + H", d90 + h90, ln(4.0)),
    ];
    let bad: Vec<_> = checks
        .iter()
        .filter(|(_, got, want)| !close(*got, *want))
        .map(|c| c.0)
        .collect();
    t.line(
        "criterion 1 worked examples",
        bad.is_empty(),
        &format!("{} values within 1e-9, mismatches {:?}", checks.len(), bad),
    );
}

fn criterion_2(t: &mut Tally) {
    let h40 = entropy(&factor(40).unwrap());
    let d = divergence(&factor(100).unwrap(), &factor(200).unwrap()).unwrap();
    let values_ok = format!("{h40:.6}") == "0.562335" && format!("{d:.6}") == "0.020411";
    let out = Command::new(env!("CARGO_BIN_EXE_entropia"))
        .arg("examples")
        .output()
        .expect("binary runs");
    let text = String::from_utf8_lossy(&out.stdout);
    let flagged = text.contains("misprint: printed 2.2493")
        && text.contains("misprint: printed 0.0088")
        && text.contains("0.562335144619")
        && text.contains("0.0204109972601");
    t.line(
        "criterion 2 documented misprints",
        values_ok && flagged && out.status.success(),
        &format!("H(40) = {h40:.6}, D(100||200) = {d:.6}, examples flags both: {flagged}"),
    );
}

fn criterion_3(t: &mut Tally) {
    let c = cfg;
    let items: Vec<(&str, ScanConfig)> = vec![
        (
            "P-1.1-entropy-bound",
            ScanConfig {
                max: Some(100_000),
                ..c()
            },
        ),
        (
            "P-power-invariance",
            ScanConfig {
                max: Some(10_000),
                alpha_max: Some(4),
                ..c()
            },
        ),
        (
            "P-entropy-forms",
            ScanConfig {
                max: Some(100_000),
                ..c()
            },
        ),
        (
            "P-append-prime-power",
            ScanConfig {
                max: Some(2000),
                alpha_max: Some(6),
                ..c()
            },
        ),
        (
            "P-coprime-gap",
            ScanConfig {
                pair_max: Some(2000),
                ..c()
            },
        ),
        (
            "P-radical-divergence",
            ScanConfig {
                max: Some(10_000),
                ..c()
            },
        ),
        (
            "P-ediv-divergence-bound",
            ScanConfig {
                max: Some(5000),
                ..c()
            },
        ),
        (
            "P-2.2-robin",
            ScanConfig {
                max: Some(1_000_000),
                ..c()
            },
        ),
        (
            "P-2.4-pkq",
            ScanConfig {
                prime_max: Some(50),
                k_max: Some(6),
                ..c()
            },
        ),
        (
            "P-2.5-coprime-k",
            ScanConfig {
                prime_max: Some(30),
                k_max: Some(6),
                ..c()
            },
        ),
        (
            "P-THM-2.6",
            ScanConfig {
                pair_max: Some(5000),
                ..c()
            },
        ),
        (
            "P-KFREE",
            ScanConfig {
                max: Some(10_000),
                k_max: Some(4),
                ..c()
            },
        ),
        (
            "P-4.1-monotone",
            ScanConfig {
                max: Some(2000),
                alpha_max: Some(8),
                ..c()
            },
        ),
    ];
    let mut failing = Vec::new();
    for (id, cfg) in items {
        if !scan(t, id, cfg) {
            failing.push(id);
        }
    }
    // k = 1 of the coprime-k proposition: all three divergences vanish exactly
    let mut zero_margin = true;
    for (a, b) in [(6u64, 35u64), (10, 21), (15, 154), (22, 39)] {
        let (m, n) = (factor(a).unwrap(), factor(b).unwrap());
        let sum = divergence_to_radical(&m).unwrap() + divergence_to_radical(&n).unwrap();
        zero_margin &= sum - divergence_to_radical(&m.mul(&n)).unwrap() == 0.0;
    }
    t.line(
        "P-2.5-coprime-k k=1",
        zero_margin,
        "margin exactly 0 at k = 1",
    );
    let only_known = failing.iter().all(|id| KNOWN_FALSE.contains(id));
    println!(
        "{:<26} criterion 3 property scans: failing {:?}{}",
        if failing.is_empty() { "PASS" } else { "FAIL" },
        failing,
        if only_known && !failing.is_empty() {
            " (known false claims only)"
        } else {
            ""
        }
    );
}

fn criterion_4(t: &mut Tally) {
    let c = cfg;
    let galois = || Some(vec![-1, -19, 5]);
    let items: Vec<(&str, ScanConfig)> = vec![
        (
            "P-IDEAL-efg",
            ScanConfig {
                prime_max: Some(9999),
                ..c()
            },
        ),
        (
            "P-IDEAL-ramification-oracle",
            ScanConfig {
                prime_max: Some(499),
                ..c()
            },
        ),
        (
            "P-IDEAL-galois-entropy",
            ScanConfig {
                prime_max: Some(999),
                fields: galois(),
                ..c()
            },
        ),
        (
            "P-IDEAL-galois-div",
            ScanConfig {
                prime_max: Some(999),
                fields: galois(),
                ..c()
            },
        ),
        (
            "P-IDEAL-radical-identity",
            ScanConfig {
                max: Some(5000),
                ..c()
            },
        ),
        (
            "P-IDEAL-tau-e",
            ScanConfig {
                max: Some(5000),
                ..c()
            },
        ),
        (
            "P-TAU-E",
            ScanConfig {
                max: Some(10_000),
                ..c()
            },
        ),
    ];
    let mut all = true;
    for (id, cfg) in items {
        all &= scan(t, id, cfg);
    }
    println!(
        "{:<26} criterion 4 ideal scans",
        if all { "PASS" } else { "FAIL" }
    );
}

/// Exponents of `n` by trial division, kept apart from the library.
fn oracle_exponents(mut n: u64) -> Vec<u64> {
    let mut exps = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            exps.push(e);
        }
        p += 1;
    }
    if n > 1 {
        exps.push(1);
    }
    exps
}

fn oracle_entropy(exps: &[u64]) -> f64 {
    let total: u64 = exps.iter().sum();
    exps.iter()
        .map(|&a| {
            let w = a as f64 / total as f64;
            -w * w.ln()
        })
        .sum()
}

fn criterion_5(t: &mut Tally) {
    let survey = ScanConfig {
        prime_pool: Some(vec![2, 3, 5, 7]),
        omega_max: Some(3),
        alpha_max: Some(2),
        mode: Some(Mode::Survey),
        cap: 100_000,
        ..ScanConfig::default()
    };
    let int = run_property("P-COR-4.2", &survey).unwrap();
    let stated = int.violations.iter().filter(|v| v.inputs[2] == 0).count();
    let reverse = int.violations.iter().filter(|v| v.inputs[2] == 1).count();
    let reverified = int.violations.iter().all(|v| {
        let h_n = oracle_entropy(&oracle_exponents(v.inputs[0] as u64));
        let h_d = oracle_entropy(&oracle_exponents(v.inputs[1] as u64));
        let n_divides = v.inputs[0] % v.inputs[1] == 0;
        let violated = if v.inputs[2] == 0 {
            h_d > h_n + 1e-12
        } else {
            h_d < h_n - 1e-12
        };
        n_divides && violated && (h_d - v.lhs).abs() < 1e-12 && (h_n - v.rhs).abs() < 1e-12
    });
    let complete = int.violations.len() as u64 == int.violation_count;
    t.line(
        "criterion 5 P-COR-4.2 survey",
        stated > 0 && reverse > 0 && reverified && complete,
        &format!(
            "{} pairs tested, {stated} violate H(d) <= H(n), {reverse} violate H(n) <= H(d), all re-verified: {reverified}",
            int.tested
        ),
    );

    let shapes = |v: &entropia::verifier::Violation| -> (Vec<u64>, Vec<u64>, i64) {
        (
            oracle_exponents(v.inputs[0] as u64),
            oracle_exponents(v.inputs[1] as u64),
            v.inputs[2],
        )
    };
    let int_shapes: BTreeSet<_> = int.violations.iter().map(shapes).collect();
    let ideal = run_property("P-IDEAL-cor-4.3", &survey).unwrap();
    let ideal_shapes: BTreeSet<_> = ideal
        .violations
        .iter()
        .map(|v| {
            let g = (v.inputs.len() - 1) / 2;
            let e = v.inputs[..g].iter().map(|&x| x as u64).collect();
            let b = v.inputs[g..2 * g].iter().map(|&x| x as u64).collect();
            (e, b, v.inputs[2 * g])
        })
        .collect();
    t.line(
        "criterion 5 P-IDEAL-cor-4.3 survey",
        int_shapes == ideal_shapes && !ideal_shapes.is_empty(),
        &format!(
            "{} violating exponent shapes on the ideal side, identical to the integer side: {}",
            ideal_shapes.len(),
            int_shapes == ideal_shapes
        ),
    );
}

fn criterion_6(t: &mut Tally) {
    let n = factor(12).unwrap();
    let p = 10007;
    let top = ((n.omega() + 1) as f64).ln();
    let q: Vec<f64> = [10u64, 100, 1000, 10_000]
        .iter()
        .map(|&a| {
            let np = n.with_prime_power(p, a).unwrap();
            let rad = n.radical().with_prime_power(p, 1).unwrap();
            top - divergence(&np, &rad).unwrap()
        })
        .collect();
    let decreasing = q.windows(2).all(|w| w[1].abs() < w[0].abs());
    let last = q[3].abs();
    let report = run_property("P-decay", &cfg()).unwrap();
    t.line(
        "criterion 6 decay",
        decreasing && last < 0.01 && report.verdict == Verdict::HoldsOnRange,
        &format!(
            "Q = {:.5}, {:.5}, {:.5}, {:.7}; decreasing {decreasing}, |Q(10^4)| < 0.01: {}",
            q[0],
            q[1],
            q[2],
            q[3],
            last < 0.01
        ),
    );
}

fn strip_elapsed(json: &[u8]) -> String {
    String::from_utf8_lossy(json)
        .lines()
        .filter(|l| !l.trim_start().starts_with("\"elapsed_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

fn criterion_7(t: &mut Tally) {
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_entropia"))
            .args([
                "--format", "json", "verify", "--prop", "all", "--jobs", jobs,
            ])
            .output()
            .expect("binary runs")
    };
    let (one, eight) = (run("1"), run("8"));
    let same = strip_elapsed(&one.stdout) == strip_elapsed(&eight.stdout);
    let parsed = serde_json::from_slice::<serde_json::Value>(&one.stdout).is_ok();
    t.line(
        "criterion 7 determinism",
        same && parsed && !one.stdout.is_empty() && one.status.code() == eight.status.code(),
        &format!(
            "{} bytes of JSON, identical apart from elapsed_ms: {same}",
            one.stdout.len()
        ),
    );
}

fn main() {
    let mut t = Tally::default();
    criterion_1(&mut t);
    criterion_2(&mut t);
    criterion_3(&mut t);
    criterion_4(&mut t);
    criterion_5(&mut t);
    criterion_6(&mut t);
    criterion_7(&mut t);
    println!(
        "\nacceptance: {} failed, {} known false claims {:?}, {} unexpected passes",
        t.failed.len(),
        t.expected_failures.len(),
        t.expected_failures,
        t.unexpected_passes.len()
    );
    if !t.failed.is_empty() || !t.unexpected_passes.is_empty() {
        eprintln!(
            "failing: {:?} unexpected passes: {:?}",
            t.failed, t.unexpected_passes
        );
        std::process::exit(1);
    }
}
