//! Verification reports in text, JSON and CSV form.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::prime_powers_in;
use crate::error::{Error, Result};
use crate::verdict::{Status, Verdict};
use crate::verify::KRange;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
    Both,
}

impl Parity {
    pub fn admits(self, q: u64) -> bool {
        match self {
            Parity::Odd => q % 2 == 1,
            Parity::Even => q.is_multiple_of(2),
            Parity::Both => true,
        }
    }
}

impl FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "odd" => Ok(Parity::Odd),
            "even" => Ok(Parity::Even),
            "both" => Ok(Parity::Both),
            _ => Err(Error::InvalidArgument(format!("unknown parity {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Text => "txt",
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::InvalidArgument(format!("unknown format {s:?}"))),
        }
    }
}

/// Everything that determines the content of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub q_min: u64,
    pub q_max: u64,
    pub parity: Parity,
    pub k_range: KRange,
    /// Empty means every check.
    pub checks: Vec<String>,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.q_min > self.q_max {
            return Err(Error::InvalidArgument(format!(
                "q-min {} exceeds q-max {}",
                self.q_min, self.q_max
            )));
        }
        Ok(())
    }

    /// Prime powers in range with the requested parity, ascending.
    pub fn q_list(&self) -> Vec<u64> {
        prime_powers_in(self.q_min.max(2), self.q_max)
            .into_iter()
            .filter(|&q| self.parity.admits(q))
            .collect()
    }

    pub fn check_filter(&self) -> Option<&[String]> {
        (!self.checks.is_empty()).then_some(self.checks.as_slice())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub run: RunConfig,
    pub verdicts: Vec<Verdict>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub vacuous: usize,
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} pass, {} fail, {} skipped, {} vacuous",
            self.pass, self.fail, self.skipped, self.vacuous
        )
    }
}

impl Report {
    /// Runs the configured sweep.
    pub fn run(config: RunConfig) -> Result<Report> {
        config.validate()?;
        let verdicts = crate::verify::verify_all(&config.q_list(), config.k_range, config.check_filter())?;
        Ok(Report { run: config, verdicts })
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for v in &self.verdicts {
            match v.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
                Status::Vacuous => s.vacuous += 1,
            }
        }
        s
    }

    pub fn has_failures(&self) -> bool {
        self.verdicts.iter().any(Verdict::is_fail)
    }

    /// Drops timings so that equal configurations give equal bytes.
    pub fn strip_timings(&mut self) {
        for v in &mut self.verdicts {
            v.millis = None;
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Text => Ok(self.to_text()),
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)
            .map_err(|e| Error::InvalidArgument(format!("json encoding failed: {e}")))?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Report> {
        serde_json::from_str(s).map_err(|e| Error::InvalidArgument(format!("malformed report: {e}")))
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::InvalidArgument(format!("csv encoding failed: {e}"));
        w.write_record([
            "check", "q", "status", "instances", "clause", "inputs", "expected", "actual", "note",
            "millis",
        ])
        .map_err(io)?;
        for v in &self.verdicts {
            let cx = v.counterexample.as_ref();
            let inputs = cx
                .map(|c| {
                    c.inputs
                        .iter()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect::<Vec<_>>()
                        .join(";")
                })
                .unwrap_or_default();
            w.write_record([
                v.check_name.clone(),
                v.q.to_string(),
                v.status.to_string(),
                v.instances_checked.to_string(),
                cx.map(|c| c.clause.clone()).unwrap_or_default(),
                inputs,
                cx.map(|c| c.expected.clone()).unwrap_or_default(),
                cx.map(|c| c.actual.clone()).unwrap_or_default(),
                v.note.clone(),
                v.millis.map(|m| m.to_string()).unwrap_or_default(),
            ])
            .map_err(io)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::InvalidArgument(format!("csv encoding failed: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::InvalidArgument(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let width = self
            .verdicts
            .iter()
            .map(|v| v.check_name.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let timed = self.verdicts.iter().any(|v| v.millis.is_some());
        let mut out = String::new();
        let _ = write!(out, "{:>6}  {:<width$}  {:<8}  {:>10}", "q", "check", "status", "instances");
        if timed {
            let _ = write!(out, "  {:>8}", "ms");
        }
        out.push('\n');
        for v in &self.verdicts {
            let _ = write!(
                out,
                "{:>6}  {:<width$}  {:<8}  {:>10}",
                v.q, v.check_name, v.status, v.instances_checked
            );
            if timed {
                let _ = write!(out, "  {:>8}", v.millis.unwrap_or(0));
            }
            out.push('\n');
            if let Some(c) = &v.counterexample {
                let inputs: Vec<String> = c.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(out, "        clause: {}", c.clause);
                let _ = writeln!(out, "        inputs: {}", inputs.join(", "));
                let _ = writeln!(out, "        expected {} got {}", c.expected, c.actual);
            }
            if !v.note.is_empty() && v.status != Status::Pass {
                let _ = writeln!(out, "        note: {}", v.note);
            }
        }
        let _ = writeln!(out, "{}", self.summary());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(q_min: u64, q_max: u64, parity: Parity) -> RunConfig {
        RunConfig {
            q_min,
            q_max,
            parity,
            k_range: KRange::default(),
            checks: vec![],
        }
    }

    #[test]
    fn q_list_respects_parity() {
        assert_eq!(config(2, 16, Parity::Both).q_list(), vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16]);
        assert_eq!(config(2, 16, Parity::Even).q_list(), vec![2, 4, 8, 16]);
        assert_eq!(config(0, 9, Parity::Odd).q_list(), vec![3, 5, 7, 9]);
        assert!(config(10, 10, Parity::Both).q_list().is_empty());
    }

    #[test]
    fn inverted_range_is_rejected() {
        assert!(config(9, 3, Parity::Both).validate().is_err());
    }

    #[test]
    fn json_round_trip_and_csv_rows() {
        let mut cfg = config(5, 7, Parity::Odd);
        cfg.checks = vec!["wilson_like".into(), "fq_decomposition".into()];
        let mut r = Report::run(cfg).unwrap();
        r.strip_timings();
        assert_eq!(r.verdicts.len(), 4);
        let back = Report::from_json(&r.to_json().unwrap()).unwrap();
        assert_eq!(back, r);
        let csv = r.to_csv().unwrap();
        assert_eq!(csv.lines().count(), 5);
        assert!(csv.starts_with("check,q,status,instances,"));
        assert!(r.to_text().ends_with("4 pass, 0 fail, 0 skipped, 0 vacuous\n"));
    }
}
