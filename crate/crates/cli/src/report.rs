//! JSON reports and value rendering.

use serde::Serialize;
use sp4kl_core::exact::PhaseSum;

use crate::config::RunConfig;

pub const SCHEMA: &str = "sp4kl-report/1";
const DIGITS: u32 = 30;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report<R: Serialize> {
    pub schema: &'static str,
    pub config: RunConfig,
    pub result: R,
    pub checks: Vec<Check>,
}

impl<R: Serialize> Report<R> {
    pub fn new(config: RunConfig, result: R, checks: Vec<Check>) -> Self {
        Report {
            schema: SCHEMA,
            config,
            result,
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhaseTerm {
    pub coeff: i64,
    pub num: u64,
    pub den: u64,
}

/// An exact value: an integer when it is one, else `Σ coeff·e(num/den)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ExactValue {
    Integer(i64),
    Phases(Vec<PhaseTerm>),
}

impl ExactValue {
    pub fn of(v: &PhaseSum) -> Self {
        match v.as_integer() {
            Some(n) => ExactValue::Integer(n),
            None => ExactValue::Phases(
                v.terms()
                    .map(|(p, coeff)| PhaseTerm {
                        coeff,
                        num: p.numer(),
                        den: p.denom(),
                    })
                    .collect(),
            ),
        }
    }

    /// Compact single-field form for CSV: `9` or `1*e(0/1)+2*e(1/3)`.
    pub fn compact(&self) -> String {
        match self {
            ExactValue::Integer(n) => n.to_string(),
            ExactValue::Phases(ts) => ts
                .iter()
                .map(|t| format!("{}*e({}/{})", t.coeff, t.num, t.den))
                .collect::<Vec<_>>()
                .join("+"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Numeric {
    pub re: String,
    pub im: String,
}

impl Numeric {
    pub fn of(v: &PhaseSum) -> Self {
        let n = v.numeric();
        Numeric {
            re: n.re_decimal(DIGITS),
            im: n.im_decimal(DIGITS),
        }
    }
}
