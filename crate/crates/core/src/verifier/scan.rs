use std::cmp::Ordering;

use rayon::prelude::*;

use super::{ScanConfig, Violation};
use crate::arith::{factor, small_primes, Factorization};
use crate::error::Result;

/// Resolved view of a [`ScanConfig`] handed to each property check.
pub(crate) struct Scan<'a> {
    pub cfg: &'a ScanConfig,
}

impl<'a> Scan<'a> {
    pub fn new(cfg: &'a ScanConfig) -> Self {
        Self { cfg }
    }

    pub fn tol(&self) -> f64 {
        self.cfg.tolerance
    }

    pub fn single(&self, default: u64) -> u64 {
        self.cfg.max.unwrap_or(default)
    }

    pub fn pair(&self, default: u64) -> u64 {
        let bound = self.cfg.pair_max.unwrap_or(default);
        self.cfg.max.map_or(bound, |m| bound.min(m))
    }

    pub fn prime_bound(&self, default: u64) -> u64 {
        self.cfg.prime_max.unwrap_or(default)
    }

    pub fn k(&self, default: u64) -> u64 {
        self.cfg.k_max.unwrap_or(default)
    }

    pub fn alpha(&self, default: u64) -> u64 {
        self.cfg.alpha_max.unwrap_or(default)
    }

    pub fn omega(&self, default: u64) -> u64 {
        self.cfg.omega_max.unwrap_or(default)
    }

    pub fn fields(&self, default: &[i64]) -> Vec<i64> {
        self.cfg.fields.clone().unwrap_or_else(|| default.to_vec())
    }

    pub fn pool(&self, default: &[u64]) -> Vec<u64> {
        self.cfg
            .prime_pool
            .clone()
            .unwrap_or_else(|| default.to_vec())
    }

    /// Folds `f` over `items` in parallel.
    pub fn par<I, T, F>(&self, items: I, f: F) -> Sink
    where
        I: IntoParallelIterator<Item = T>,
        F: Fn(T, &mut Sink) + Sync + Send,
    {
        let cap = self.cfg.cap;
        items
            .into_par_iter()
            .fold(
                || Sink::new(cap),
                |mut sink, item| {
                    f(item, &mut sink);
                    sink
                },
            )
            .reduce(|| Sink::new(cap), Sink::merge)
    }
}

fn cmp_violation(a: &Violation, b: &Violation) -> Ordering {
    a.inputs
        .cmp(&b.inputs)
        .then(a.lhs.total_cmp(&b.lhs))
        .then(a.rhs.total_cmp(&b.rhs))
}

/// Accumulates test counts and the smallest `cap` violations by input tuple.
pub(crate) struct Sink {
    tested: u64,
    count: u64,
    kept: Vec<Violation>,
    cap: usize,
}

impl Sink {
    pub fn new(cap: usize) -> Self {
        Self {
            tested: 0,
            count: 0,
            kept: Vec::new(),
            cap,
        }
    }

    /// One tested instance, violated if any of `checks` is.
    pub fn record<const N: usize>(&mut self, checks: [Option<Violation>; N]) {
        self.tested += 1;
        if let Some(v) = checks.into_iter().flatten().next() {
            self.count += 1;
            self.kept.push(v);
            if self.kept.len() >= 2 * self.cap + 64 {
                self.compact();
            }
        }
    }

    /// Like [`Sink::record`], counting an evaluation error as a violation.
    pub fn try_record<const N: usize>(
        &mut self,
        inputs: &[i64],
        checks: impl FnOnce() -> Result<[Option<Violation>; N]>,
    ) {
        match checks() {
            Ok(checks) => self.record(checks),
            Err(_) => self.record([failed(inputs)]),
        }
    }

    fn compact(&mut self) {
        self.kept.sort_by(cmp_violation);
        self.kept.truncate(self.cap);
    }

    pub fn merge(mut self, other: Sink) -> Sink {
        self.tested += other.tested;
        self.count += other.count;
        self.kept.extend(other.kept);
        self.compact();
        self
    }

    pub fn finish(mut self) -> (u64, u64, Vec<Violation>) {
        self.compact();
        (self.tested, self.count, self.kept)
    }
}

fn violation(inputs: &[i64], lhs: f64, rhs: f64, margin: f64) -> Violation {
    Violation {
        inputs: inputs.to_vec(),
        lhs,
        rhs,
        margin,
    }
}

/// `lhs = rhs` within `tol`.
pub(crate) fn identity(inputs: &[i64], lhs: f64, rhs: f64, tol: f64) -> Option<Violation> {
    let margin = rhs - lhs;
    if margin.abs() <= tol {
        None
    } else {
        Some(violation(inputs, lhs, rhs, margin))
    }
}

/// `lhs = rhs` bit for bit.
pub(crate) fn exact(inputs: &[i64], lhs: f64, rhs: f64) -> Option<Violation> {
    (lhs != rhs).then(|| violation(inputs, lhs, rhs, rhs - lhs))
}

/// `lhs ≤ rhs` within `tol`.
pub(crate) fn at_most(inputs: &[i64], lhs: f64, rhs: f64, tol: f64) -> Option<Violation> {
    let margin = rhs - lhs;
    if margin >= -tol {
        None
    } else {
        Some(violation(inputs, lhs, rhs, margin))
    }
}

/// `lhs ≥ rhs` within `tol`.
pub(crate) fn at_least(inputs: &[i64], lhs: f64, rhs: f64, tol: f64) -> Option<Violation> {
    let margin = lhs - rhs;
    if margin >= -tol {
        None
    } else {
        Some(violation(inputs, lhs, rhs, margin))
    }
}

/// `lhs < rhs`.
pub(crate) fn less(inputs: &[i64], lhs: f64, rhs: f64) -> Option<Violation> {
    let margin = rhs - lhs;
    if margin > 0.0 {
        None
    } else {
        Some(violation(inputs, lhs, rhs, margin))
    }
}

/// `lhs > rhs`.
pub(crate) fn greater(inputs: &[i64], lhs: f64, rhs: f64) -> Option<Violation> {
    let margin = lhs - rhs;
    if margin > 0.0 {
        None
    } else {
        Some(violation(inputs, lhs, rhs, margin))
    }
}

/// A failed evaluation: the claimed quantity could not be computed.
pub(crate) fn failed(inputs: &[i64]) -> Option<Violation> {
    Some(violation(inputs, f64::NAN, f64::NAN, f64::NAN))
}

/// Factorizations of `0..=max`; index 0 holds the empty product.
pub(crate) fn factor_table(max: u64) -> Vec<Factorization> {
    (0..=max)
        .into_par_iter()
        .map(|n| {
            if n == 0 {
                Factorization::one()
            } else {
                factor(n).expect("n >= 1")
            }
        })
        .collect()
}

/// Primes `≤ bound`.
pub(crate) fn primes_up_to(bound: u64) -> Vec<u64> {
    let table = small_primes();
    if table.last().is_some_and(|&p| bound <= p) {
        return table.iter().copied().take_while(|&p| p <= bound).collect();
    }
    (2..=bound).filter(|&p| crate::arith::is_prime(p)).collect()
}

/// Every vector in `lo..=hi` of the given length, in lexicographic order.
pub(crate) fn exponent_vectors(len: usize, lo: u64, hi: u64) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    out
}

/// Size-`r` subsets of `pool`, in lexicographic order of positions.
pub(crate) fn subsets<T: Copy>(pool: &[T], r: usize) -> Vec<Vec<T>> {
    fn go<T: Copy>(pool: &[T], r: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            go(pool, r, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, r, 0, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn int(x: u64) -> i64 {
    x as i64
}
