//! Threaded driver, reports and verification suites for `sp4kl-core`.

pub mod commands;
pub mod config;
pub mod driver;
pub mod report;
pub mod suites;

use serde::Serialize;
use sp4kl_core::kloosterman::KlError;

use crate::commands::Output;
use crate::config::{CommandConfig, RunConfig, Suite};
use crate::report::{Check, Report};
use crate::suites::{run_suite, SuiteParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Kl(#[from] KlError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Kl(KlError::BudgetExceeded { .. }) => EXIT_BUDGET,
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_VERIFY,
        }
    }
}

#[derive(Serialize)]
struct VerifyResult {
    suite: Suite,
    passed: bool,
    failed: Vec<String>,
}

/// The JSON report of one verification suite.
pub fn verify_report(
    cfg: &RunConfig,
    suite: Suite,
    params: &SuiteParams,
) -> Result<(String, Vec<Check>), CliError> {
    let checks = run_suite(suite, params)?;
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.clone())
        .collect();
    let result = VerifyResult {
        suite,
        passed: failed.is_empty(),
        failed,
    };
    Ok((
        Report::new(cfg.clone(), result, checks.clone()).to_json(),
        checks,
    ))
}

fn cmd_verify(cfg: &RunConfig) -> Result<Output, CliError> {
    let CommandConfig::Verify { suite, qmax, cmax } = cfg.command.clone() else {
        unreachable!()
    };
    let params = SuiteParams {
        qmax,
        cmax,
        budget: cfg.budget,
    };
    let (text, checks) = verify_report(cfg, suite, &params)?;
    for c in checks.iter().filter(|c| !c.passed) {
        eprintln!("FAIL {}: {}", c.name, c.detail);
    }
    Ok(Output {
        text,
        passed: checks.iter().all(|c| c.passed),
    })
}

/// Run a command on a pool of `cfg.threads` workers.
pub fn run(cfg: &RunConfig) -> Result<Output, CliError> {
    driver::thread_pool(cfg.threads).install(|| match cfg.command {
        CommandConfig::Kl { .. } => commands::cmd_kl(cfg),
        CommandConfig::Enumerate { .. } => commands::cmd_enumerate(cfg),
        CommandConfig::Scan { .. } => commands::cmd_scan(cfg),
        CommandConfig::Geo { .. } => commands::cmd_geo(cfg),
        CommandConfig::Atlas { .. } => commands::cmd_atlas(cfg),
        CommandConfig::Verify { .. } => cmd_verify(cfg),
    })
}

/// Exit status for a finished command: verification failures are fatal only
/// for `verify`.
pub fn exit_code(cfg: &RunConfig, out: &Output) -> i32 {
    match cfg.command {
        CommandConfig::Verify { .. } if !out.passed => EXIT_VERIFY,
        _ => EXIT_OK,
    }
}
