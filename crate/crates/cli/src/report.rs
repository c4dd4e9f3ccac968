use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::time::Instant;

use gjms_models::Comparison;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// One line of `verify` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, holds: bool) -> CheckReport {
        CheckReport {
            name: name.into(),
            params: BTreeMap::new(),
            status: if holds { Status::Pass } else { Status::Fail },
            lhs: None,
            rhs: None,
            residual: None,
            error: None,
            elapsed_ms: 0,
            seed: None,
        }
    }

    pub fn error(name: impl Into<String>, message: impl ToString) -> CheckReport {
        let mut report = CheckReport::new(name, false);
        report.status = Status::Error;
        report.error = Some(message.to_string());
        report
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> CheckReport {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn sides(mut self, lhs: impl ToString, rhs: impl ToString, residual: impl ToString) -> CheckReport {
        self.lhs = Some(lhs.to_string());
        self.rhs = Some(rhs.to_string());
        self.residual = Some(residual.to_string());
        self
    }

    pub fn seed(mut self, seed: u64) -> CheckReport {
        self.seed = Some(seed);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Ordering by name, then parameters with numeric values compared as numbers.
    pub fn key_cmp(&self, other: &CheckReport) -> Ordering {
        self.name.cmp(&other.name).then_with(|| {
            let mut left = self.params.iter();
            let mut right = other.params.iter();
            loop {
                match (left.next(), right.next()) {
                    (None, None) => return Ordering::Equal,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some((ka, va)), Some((kb, vb))) => {
                        let by_value = match (va.parse::<i64>(), vb.parse::<i64>()) {
                            (Ok(a), Ok(b)) => a.cmp(&b),
                            _ => va.cmp(vb),
                        };
                        let step = ka.cmp(kb).then(by_value);
                        if step != Ordering::Equal {
                            return step;
                        }
                    }
                }
            }
        })
    }
}

impl From<Comparison> for CheckReport {
    fn from(c: Comparison) -> CheckReport {
        let mut report = CheckReport::new(c.name, c.holds).sides(c.lhs, c.rhs, c.residual);
        if let Some(order) = c.order {
            report = report.param("order", order);
        }
        report
    }
}

/// A unit of work for the pool; every report it yields carries its runtime.
pub struct Job {
    run: Box<dyn Fn() -> Vec<CheckReport> + Send + Sync>,
}

impl Job {
    pub fn new(run: impl Fn() -> Vec<CheckReport> + Send + Sync + 'static) -> Job {
        Job { run: Box::new(run) }
    }

    pub fn execute(&self, timed: bool) -> Vec<CheckReport> {
        let start = Instant::now();
        let mut reports = (self.run)();
        let elapsed = if timed { start.elapsed().as_millis() as u64 } else { 0 };
        for r in &mut reports {
            r.elapsed_ms = elapsed;
        }
        reports
    }
}
