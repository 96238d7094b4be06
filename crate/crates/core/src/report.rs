//! Sweep reports and their JSON, CSV and table renderings.
//!
//! JSON carries every integer as a decimal string so consumers never lose
//! precision. CSV holds only the per-prime records.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sweep::ReportFormat;
use crate::surface::SurfaceMethod;

pub const SCHEMA_VERSION: u32 = 1;

pub const CSV_COLUMNS: [&str; 10] = [
    "p",
    "S_tau_naive",
    "S_tau_direct",
    "S_tau_fast",
    "quotient",
    "h_star_dirichlet",
    "h_star_forms",
    "main_theorem_pass",
    "fiber_divisibility_pass",
    "elapsed_ms",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRecord {
    #[serde(with = "dec")]
    pub p: u64,
    #[serde(with = "opt_dec")]
    pub s_tau_naive: Option<i128>,
    #[serde(with = "opt_dec")]
    pub s_tau_direct: Option<i128>,
    #[serde(with = "opt_dec")]
    pub s_tau_fast: Option<i128>,
    #[serde(with = "opt_dec")]
    pub quotient: Option<i128>,
    #[serde(with = "opt_dec")]
    pub h_star_dirichlet: Option<u64>,
    #[serde(with = "opt_dec")]
    pub h_star_forms: Option<u64>,
    pub main_theorem_pass: bool,
    pub fiber_divisibility_pass: Option<bool>,
    #[serde(with = "opt_dec")]
    pub elapsed_ms: Option<u64>,
}

impl PrimeRecord {
    /// Every verdict that was computed is a pass.
    pub fn passed(&self) -> bool {
        self.main_theorem_pass && self.fiber_divisibility_pass != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: u32,
    #[serde(with = "dec")]
    pub from: u64,
    #[serde(with = "dec")]
    pub to: u64,
    pub methods: Vec<SurfaceMethod>,
    pub complete: bool,
    pub records: Vec<PrimeRecord>,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn all_pass(&self) -> bool {
        self.complete && self.failures.is_empty() && self.records.iter().all(PrimeRecord::passed)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Report(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let report: SweepReport = serde_json::from_str(s).map_err(|e| Error::Report(e.to_string()))?;
        if report.schema_version != SCHEMA_VERSION {
            return Err(Error::Report(format!(
                "unsupported schema_version {}",
                report.schema_version
            )));
        }
        Ok(report)
    }

    pub fn to_csv(&self) -> Result<String> {
        records_to_csv(&self.records)
    }

    pub fn to_table(&self) -> String {
        let cell = |v: &Option<i128>| v.map_or("-".to_string(), |v| v.to_string());
        let flag = |v: Option<bool>| match v {
            Some(true) => "pass",
            Some(false) => "FAIL",
            None => "-",
        };
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>8} {:>14} {:>14} {:>14} {:>10} {:>5} {:>5} {:>6} {:>6}",
            "p", "naive", "direct", "fast", "quotient", "h*D", "h*F", "main", "fiber"
        );
        for r in &self.records {
            let _ = writeln!(
                out,
                "{:>8} {:>14} {:>14} {:>14} {:>10} {:>5} {:>5} {:>6} {:>6}",
                r.p,
                cell(&r.s_tau_naive),
                cell(&r.s_tau_direct),
                cell(&r.s_tau_fast),
                cell(&r.quotient),
                r.h_star_dirichlet.map_or("-".into(), |h| h.to_string()),
                r.h_star_forms.map_or("-".into(), |h| h.to_string()),
                flag(Some(r.main_theorem_pass)),
                flag(r.fiber_divisibility_pass),
            );
        }
        let passed = self.records.iter().filter(|r| r.passed()).count();
        let _ = writeln!(
            out,
            "{passed}/{} primes passed{}",
            self.records.len(),
            if self.complete { "" } else { " (incomplete)" }
        );
        for f in &self.failures {
            let _ = writeln!(out, "failure: {f}");
        }
        out
    }

    pub fn render(&self, format: ReportFormat) -> Result<String> {
        match format {
            ReportFormat::Json => self.to_json().map(|s| s + "\n"),
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Table => Ok(self.to_table()),
        }
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(String::new, T::to_string)
}

pub fn records_to_csv(records: &[PrimeRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Error::Report(e.to_string());
    w.write_record(CSV_COLUMNS).map_err(err)?;
    for r in records {
        w.write_record([
            r.p.to_string(),
            opt(&r.s_tau_naive),
            opt(&r.s_tau_direct),
            opt(&r.s_tau_fast),
            opt(&r.quotient),
            opt(&r.h_star_dirichlet),
            opt(&r.h_star_forms),
            r.main_theorem_pass.to_string(),
            opt(&r.fiber_divisibility_pass),
            opt(&r.elapsed_ms),
        ])
        .map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Report(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Report(e.to_string()))
}

pub fn records_from_csv(s: &str) -> Result<Vec<PrimeRecord>> {
    let mut rd = csv::Reader::from_reader(s.as_bytes());
    let err = |e: String| Error::Report(e);
    let headers = rd.headers().map_err(|e| err(e.to_string()))?;
    if headers.iter().ne(CSV_COLUMNS) {
        return Err(err(format!("unexpected CSV header {headers:?}")));
    }
    fn field<T: std::str::FromStr>(s: &str) -> Result<Option<T>> {
        if s.is_empty() {
            return Ok(None);
        }
        s.parse()
            .map(Some)
            .map_err(|_| Error::Report(format!("bad CSV field `{s}`")))
    }
    let mut out = Vec::new();
    for row in rd.records() {
        let row = row.map_err(|e| err(e.to_string()))?;
        let req = |i: usize| row.get(i).ok_or_else(|| err(format!("missing column {i}")));
        out.push(PrimeRecord {
            p: field(req(0)?)?.ok_or_else(|| err("empty p".into()))?,
            s_tau_naive: field(req(1)?)?,
            s_tau_direct: field(req(2)?)?,
            s_tau_fast: field(req(3)?)?,
            quotient: field(req(4)?)?,
            h_star_dirichlet: field(req(5)?)?,
            h_star_forms: field(req(6)?)?,
            main_theorem_pass: field(req(7)?)?.ok_or_else(|| err("empty pass flag".into()))?,
            fiber_divisibility_pass: field(req(8)?)?,
            elapsed_ms: field(req(9)?)?,
        });
    }
    Ok(out)
}

mod dec {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};
    use std::fmt::Display;
    use std::str::FromStr;

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T: FromStr, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| D::Error::custom(format!("bad decimal `{s}`")))
    }
}

mod opt_dec {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};
    use std::fmt::Display;
    use std::str::FromStr;

    pub fn serialize<T: Display, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.collect_str(v),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, T: FromStr, D: Deserializer<'de>>(d: D) -> Result<Option<T>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(|_| D::Error::custom(format!("bad decimal `{s}`"))))
            .transpose()
    }
}
