//! Batch verification over a prime range.
//!
//! Primes are independent work units. Results are collected in prime order and
//! every reduction is integer addition, so a report does not depend on the
//! number of workers.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::class_number::{h_star_dirichlet, h_star_forms};
use crate::error::{Error, Result};
use crate::fp::{is_prime, FieldElement, Prime};
use crate::registry::{surface_methods, SurfaceSumMethod};
use crate::report::{PrimeRecord, SweepReport};
use crate::surface::{Surface, SurfaceMethod};

/// Largest `p` swept with an O(p²) method unless `allow_large` is set.
pub const QUADRATIC_CAP: u64 = 20_000;

/// Above this every `x` is checked against the row-sum and count identities;
/// beyond it a fixed sample is used.
const FULL_ROW_CHECK_UP_TO: u64 = 199;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
    Table,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "table" => Ok(ReportFormat::Table),
            other => Err(Error::InvalidConfig(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub from: u64,
    pub to: u64,
    /// Method names from [`surface_methods`], or `all`.
    pub methods: Vec<String>,
    pub workers: usize,
    pub fail_fast: bool,
    pub allow_large: bool,
    pub record_timings: bool,
    pub format: ReportFormat,
    pub out: Option<std::path::PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            from: 7,
            to: 100,
            methods: vec!["all".into()],
            workers: 1,
            fail_fast: false,
            allow_large: false,
            record_timings: false,
            format: ReportFormat::Json,
            out: None,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.from < 5 {
            return Err(Error::InvalidConfig(format!("from = {} must be at least 5", self.from)));
        }
        if self.to < self.from {
            return Err(Error::InvalidConfig(format!("to = {} is below from = {}", self.to, self.from)));
        }
        if self.to >= Prime::MAX {
            return Err(Error::InvalidConfig("to must stay below 2^63".into()));
        }
        if self.workers == 0 {
            return Err(Error::InvalidConfig("workers must be at least 1".into()));
        }
        let methods = self.resolve_methods()?;
        if methods.is_empty() {
            return Err(Error::InvalidConfig("no methods selected".into()));
        }
        if !self.allow_large && self.to > QUADRATIC_CAP && methods.iter().any(|m| m.quadratic_cost()) {
            return Err(Error::InvalidConfig(format!(
                "naive/direct methods are capped at p ≤ {QUADRATIC_CAP}; pass allow_large to override"
            )));
        }
        Ok(())
    }

    /// Distinct methods in canonical order: fiberwise, direct, fast.
    pub fn resolve_methods(&self) -> Result<Vec<&'static dyn SurfaceSumMethod>> {
        let mut out: Vec<&'static dyn SurfaceSumMethod> = Vec::new();
        for name in &self.methods {
            for m in surface_methods().select(name)? {
                if !out.iter().any(|seen| seen.kind() == m.kind()) {
                    out.push(m);
                }
            }
        }
        out.sort_by_key(|m| m.kind() as u8);
        Ok(out)
    }

    /// Primes `p ≡ 1 (mod 3)` in `[from, to]`.
    pub fn admissible_primes(&self) -> Vec<Prime> {
        (self.from..=self.to)
            .filter(|&p| p % 3 == 1 && is_prime(p))
            .map(|p| Prime::new(p).expect("checked prime"))
            .collect()
    }
}

/// Runs the sweep on a dedicated pool of `config.workers` threads.
///
/// With `fail_fast`, primes above the first failing prime are skipped; primes
/// below it still run, so the truncated report is deterministic. Setting
/// `interrupt` stops scheduling new primes and yields an incomplete report.
pub fn run_sweep(config: &SweepConfig, interrupt: Option<&AtomicBool>) -> Result<SweepReport> {
    config.validate()?;
    let methods = config.resolve_methods()?;
    let primes = config.admissible_primes();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;

    let first_failure = AtomicU64::new(u64::MAX);
    let never = AtomicBool::new(false);
    let interrupt = interrupt.unwrap_or(&never);

    let outcomes: Vec<Option<(PrimeRecord, Vec<String>)>> = pool.install(|| {
        primes
            .par_iter()
            .map(|&p| {
                if interrupt.load(Ordering::Relaxed) {
                    return None;
                }
                if config.fail_fast && p.get() > first_failure.load(Ordering::Acquire) {
                    return None;
                }
                let out = verify_prime(p, &methods, config.record_timings);
                if !out.0.passed() {
                    first_failure.fetch_min(p.get(), Ordering::AcqRel);
                }
                Some(out)
            })
            .collect()
    });

    let cutoff = first_failure.load(Ordering::Acquire);
    let mut records = Vec::new();
    let mut failures = Vec::new();
    let mut complete = true;
    for (p, outcome) in primes.iter().zip(outcomes) {
        if config.fail_fast && p.get() > cutoff {
            break;
        }
        match outcome {
            Some((record, msgs)) => {
                records.push(record);
                failures.extend(msgs);
            }
            None => complete = false,
        }
    }
    Ok(SweepReport {
        schema_version: crate::report::SCHEMA_VERSION,
        from: config.from,
        to: config.to,
        methods: methods.iter().map(|m| m.kind()).collect(),
        complete,
        records,
        failures,
    })
}

/// All checks for one prime. Failures are recorded, never propagated.
pub fn verify_prime(
    p: Prime,
    methods: &[&'static dyn SurfaceSumMethod],
    record_timings: bool,
) -> (PrimeRecord, Vec<String>) {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut fail = |msg: String| failures.push(format!("p = {p}: {msg}"));

    let h_dirichlet = h_star_dirichlet(p).map(|h| h.h_star);
    let h_forms = h_star_forms(p).map(|h| h.h_star);
    if let Err(e) = &h_dirichlet {
        fail(e.to_string());
    }
    let mut record = PrimeRecord {
        p: p.get(),
        s_tau_naive: None,
        s_tau_direct: None,
        s_tau_fast: None,
        quotient: None,
        h_star_dirichlet: h_dirichlet.as_ref().ok().copied(),
        h_star_forms: h_forms.as_ref().ok().copied(),
        main_theorem_pass: false,
        fiber_divisibility_pass: None,
        elapsed_ms: None,
    };

    let surface = match Surface::new(p) {
        Ok(s) => s,
        Err(e) => {
            fail(e.to_string());
            return (record, failures);
        }
    };

    let mut ok = true;
    for method in methods {
        let value = match method.kind() {
            // The fiberwise route also yields the per-fiber divisibility verdict.
            SurfaceMethod::Fiberwise => {
                let sums = surface.fiber_sums();
                let mut fibers_ok = true;
                let mut good = Vec::with_capacity(sums.len());
                for s in sums {
                    match s {
                        Ok(s) => good.push(s),
                        Err(e) => {
                            fibers_ok = false;
                            fail(e.to_string());
                        }
                    }
                }
                record.fiber_divisibility_pass = Some(fibers_ok);
                if fibers_ok {
                    Surface::assemble_fiberwise(p, &good)
                } else {
                    Err(Error::Internal("fiberwise sum unavailable".into()))
                }
            }
            _ => method.compute(&surface),
        };
        let value = match value {
            Ok(v) => Some(v.integer_value),
            Err(e) => {
                fail(format!("{}: {e}", method.name()));
                ok = false;
                None
            }
        };
        match method.kind() {
            SurfaceMethod::Fiberwise => record.s_tau_naive = value,
            SurfaceMethod::Direct => record.s_tau_direct = value,
            SurfaceMethod::Fast => record.s_tau_fast = value,
        }
    }

    let values: Vec<i128> = [record.s_tau_naive, record.s_tau_direct, record.s_tau_fast]
        .into_iter()
        .flatten()
        .collect();
    if values.windows(2).any(|w| w[0] != w[1]) {
        fail(format!("methods disagree: {values:?}"));
        ok = false;
    }
    let q = p.get() as i128;
    record.quotient = values.first().map(|v| v / q);

    match (h_dirichlet, h_forms) {
        (Ok(hd), Ok(hf)) => {
            if hd != hf {
                fail(format!("class-number oracles disagree: dirichlet {hd}, forms {hf}"));
                ok = false;
            }
            let expected = q * (hf as i128 - (q - 1) / 2);
            if let Some(&v) = values.first() {
                if v != expected {
                    fail(format!("global sum {v} != p (h* - (p-1)/2) = {expected}"));
                    ok = false;
                }
            }
        }
        _ => ok = false,
    }

    if let Err(e) = row_identity_check(&surface) {
        fail(e.to_string());
        ok = false;
    }

    record.main_theorem_pass = ok && !values.is_empty();
    if record_timings {
        record.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    (record, failures)
}

/// Sample of nonzero `x` for the row-sum identities: all of them for small
/// `p`, otherwise a fixed deterministic spread that hits both quadratic classes.
pub fn row_sample(p: Prime) -> Vec<FieldElement> {
    let n = p.get();
    if n <= FULL_ROW_CHECK_UP_TO {
        return p.elements().skip(1).collect();
    }
    let mut xs: Vec<u64> = vec![1, 2, 3, n - 1, n - 2, n / 2, n / 3];
    xs.extend((1..=8).map(|k| k * (n / 9)));
    if let Some(ns) = (2..n).find(|&x| p.elem(x).legendre() == -1) {
        xs.push(ns);
    }
    xs.sort_unstable();
    xs.dedup();
    xs.into_iter().filter(|&x| x != 0).map(|x| p.elem(x)).collect()
}

/// Checks `Σ_y s(x, y) = -1 - (x/p)` and the count of `y` with `y² - x³` a nonzero square.
pub fn row_identity_check(surface: &Surface) -> Result<()> {
    let p = surface.prime();
    for x in row_sample(p) {
        surface.row_sum(x)?;
        let count = surface.count_y_quadratic(x)?;
        let expected = if x.legendre() == 1 { (p.get() - 3) / 2 } else { (p.get() - 1) / 2 };
        if count != expected {
            return Err(Error::IdentityViolation {
                what: "count of y with y² - x³ a nonzero square",
                p: p.get(),
                expected: expected as i128,
                actual: count as i128,
            });
        }
    }
    Ok(())
}
