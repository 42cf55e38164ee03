//! Exhaustive verification of the entropy and divergence identities and
//! inequalities over finite ranges.
//!
//! Each catalog entry is a named property with a default range. A scan
//! evaluates every instance in the range, in parallel, and reports the
//! violations sorted lexicographically by their input tuple, so reports are
//! identical for any worker count.
//!
//! Margins: for `lhs ≤ rhs` the margin is `rhs − lhs` (negative means
//! violated), for `lhs ≥ rhs` it is `lhs − rhs`, and for identities it is the
//! signed difference `rhs − lhs`. Non-strict inequalities and identities
//! accept `|error| ≤ tolerance`; strict inequalities need a positive margin;
//! exact checks need a zero margin.

mod catalog;
mod ideal_props;
mod integer_props;
mod scan;

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use catalog::list_properties;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Assert,
    Survey,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    HoldsOnRange,
    Violated,
    Surveyed,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::HoldsOnRange => "holds-on-range",
            Self::Violated => "violated",
            Self::Surveyed => "surveyed",
        }
    }
}

/// A catalog entry.
#[derive(Clone, Copy)]
pub struct PropertyId {
    pub id: &'static str,
    pub claim: &'static str,
    pub mode_default: Mode,
    pub(crate) check: fn(&scan::Scan) -> scan::Sink,
}

impl std::fmt::Debug for PropertyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PropertyId")
            .field("id", &self.id)
            .field("claim", &self.claim)
            .field("mode_default", &self.mode_default)
            .finish()
    }
}

/// Range and execution settings. Every `None` falls back to the property's
/// own default.
///
/// `max` replaces the upper bound of single-index scans. Pair scans are
/// quadratic, so they take their bound from `pair_max` and are only capped
/// (never raised) by `max`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub max: Option<u64>,
    pub pair_max: Option<u64>,
    pub prime_max: Option<u64>,
    pub prime_pool: Option<Vec<u64>>,
    pub k_max: Option<u64>,
    pub alpha_max: Option<u64>,
    pub omega_max: Option<u64>,
    pub fields: Option<Vec<i64>>,
    pub tolerance: f64,
    pub mode: Option<Mode>,
    /// Worker threads; 0 uses every available core.
    pub jobs: usize,
    /// Maximum number of violation records kept per report.
    pub cap: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            max: None,
            pair_max: None,
            prime_max: None,
            prime_pool: None,
            k_max: None,
            alpha_max: None,
            omega_max: None,
            fields: None,
            tolerance: 1e-12,
            mode: None,
            jobs: 0,
            cap: 100,
        }
    }
}

impl ScanConfig {
    fn validate(&self) -> Result<()> {
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::InvalidConfig("tolerance must be positive"));
        }
        if self.cap == 0 {
            return Err(Error::InvalidConfig("violation cap must be positive"));
        }
        let bounds = [self.max, self.pair_max, self.prime_max];
        if bounds.iter().flatten().any(|&b| b < 2) {
            return Err(Error::InvalidConfig("range bounds must be at least 2"));
        }
        if [self.k_max, self.alpha_max, self.omega_max]
            .iter()
            .flatten()
            .any(|&b| b == 0)
        {
            return Err(Error::InvalidConfig("exponent bounds must be positive"));
        }
        if self
            .prime_pool
            .as_ref()
            .is_some_and(|p| p.iter().any(|&q| !crate::arith::is_prime(q)))
        {
            return Err(Error::InvalidConfig("prime pool must contain only primes"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub inputs: Vec<i64>,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub property: String,
    pub verdict: Verdict,
    pub tested: u64,
    /// Total violations found; `violations` holds at most `cap` of them.
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    pub elapsed_ms: u64,
}

pub fn find_property(id: &str) -> Result<PropertyId> {
    list_properties()
        .iter()
        .find(|p| p.id == id)
        .copied()
        .ok_or_else(|| Error::UnknownProperty(id.to_string()))
}

/// Runs one property over the configured range.
pub fn run_property(id: &str, cfg: &ScanConfig) -> Result<ScanReport> {
    let property = find_property(id)?;
    cfg.validate()?;
    let mode = cfg.mode.unwrap_or(property.mode_default);
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|_| Error::InvalidConfig("could not start worker pool"))?;
    let scan = scan::Scan::new(cfg);
    let sink = pool.install(|| (property.check)(&scan));
    let (tested, violation_count, violations) = sink.finish();
    let verdict = match mode {
        Mode::Survey => Verdict::Surveyed,
        Mode::Assert if violation_count == 0 => Verdict::HoldsOnRange,
        Mode::Assert => Verdict::Violated,
    };
    Ok(ScanReport {
        property: property.id.to_string(),
        verdict,
        tested,
        violation_count,
        violations,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Survey-mode scan returning up to `cap` violations in input order.
pub fn search_counterexamples(id: &str, cfg: &ScanConfig, cap: usize) -> Result<Vec<Violation>> {
    let cfg = ScanConfig {
        mode: Some(Mode::Survey),
        cap,
        ..cfg.clone()
    };
    Ok(run_property(id, &cfg)?.violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> ScanConfig {
        ScanConfig {
            max: Some(300),
            pair_max: Some(200),
            ..ScanConfig::default()
        }
    }

    #[test]
    fn catalog_ids_are_unique() {
        let mut ids: Vec<_> = list_properties().iter().map(|p| p.id).collect();
        let total = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), total);
        assert!(total >= 15);
    }

    #[test]
    fn unknown_property() {
        assert_eq!(
            run_property("P-nope", &small()).unwrap_err(),
            Error::UnknownProperty("P-nope".into())
        );
    }

    #[test]
    fn invalid_configs() {
        let bad = [
            ScanConfig {
                tolerance: 0.0,
                ..small()
            },
            ScanConfig {
                max: Some(1),
                ..small()
            },
            ScanConfig { cap: 0, ..small() },
            ScanConfig {
                alpha_max: Some(0),
                ..small()
            },
            ScanConfig {
                prime_pool: Some(vec![2, 4]),
                ..small()
            },
        ];
        for cfg in bad {
            assert!(matches!(
                run_property("P-gibbs", &cfg),
                Err(Error::InvalidConfig(_))
            ));
        }
    }

    #[test]
    fn report_independent_of_workers() {
        let run = |jobs| {
            let cfg = ScanConfig {
                jobs,
                cap: 5,
                max: None,
                ..small()
            };
            let mut r = run_property(
                "P-THM-2.6",
                &ScanConfig {
                    pair_max: Some(2000),
                    ..cfg
                },
            )
            .unwrap();
            r.elapsed_ms = 0;
            r
        };
        let one = run(1);
        assert_eq!(one, run(3));
        assert_eq!(one.violations.len(), 5);
        assert_eq!(one.violations[0].inputs, vec![6, 1925]);
        assert_eq!(one.verdict, Verdict::Violated);
    }

    #[test]
    fn pair_bound_is_capped_by_max() {
        let capped = run_property(
            "P-gibbs",
            &ScanConfig {
                max: Some(50),
                ..small()
            },
        )
        .unwrap();
        let direct = run_property(
            "P-gibbs",
            &ScanConfig {
                pair_max: Some(50),
                ..small()
            },
        )
        .unwrap();
        assert_eq!(capped.tested, direct.tested);
    }

    #[test]
    fn mode_override() {
        let cfg = ScanConfig {
            mode: Some(Mode::Assert),
            ..small()
        };
        assert_eq!(
            run_property("P-COR-4.2", &cfg).unwrap().verdict,
            Verdict::Violated
        );
        let cfg = ScanConfig {
            mode: Some(Mode::Survey),
            ..small()
        };
        assert_eq!(
            run_property("P-gibbs", &cfg).unwrap().verdict,
            Verdict::Surveyed
        );
    }

    #[test]
    fn counterexample_search() {
        let found = search_counterexamples("P-COR-4.2", &small(), 3).unwrap();
        assert_eq!(found.len(), 3);
        assert!(found.windows(2).all(|w| w[0].inputs <= w[1].inputs));
        assert!(found.iter().all(|v| v.margin < 0.0));
        assert!(search_counterexamples("P-2.4-pkq", &small(), 3)
            .unwrap()
            .is_empty());
    }
}
