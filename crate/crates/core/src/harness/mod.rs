//! Disk cache, verification suites and the reports printed by the `binv`
//! binary.

mod cache;
mod suites;

use std::fmt;
use std::path::PathBuf;

use sha2::{Digest, Sha256};

pub use cache::{Cache, CacheKey, Target, CACHE_ENV};
pub use suites::{cmd_compute, compute_target, run_suite, ComputeOutput, Inputs};

use crate::budget::Budget;
use crate::error::{Error, Result};

/// Default memory budget for the CLI: 8 GiB.
pub const DEFAULT_BUDGET_BYTES: u64 = 8 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Construct,
    Ansatz,
    Grushevsky,
    Morozov,
    Theta,
    Stretch,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Construct,
        Suite::Ansatz,
        Suite::Grushevsky,
        Suite::Morozov,
        Suite::Theta,
        Suite::Stretch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Construct => "construct",
            Suite::Ansatz => "ansatz",
            Suite::Grushevsky => "grushevsky",
            Suite::Morozov => "morozov",
            Suite::Theta => "theta",
            Suite::Stretch => "stretch",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub genus: usize,
    pub threads: usize,
    pub budget_bytes: u64,
    pub cache_dir: PathBuf,
    pub suites: Vec<Suite>,
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.genus == 0 {
            return Err(Error::PreconditionViolated("genus must be at least 1".into()));
        }
        if self.threads == 0 {
            return Err(Error::PreconditionViolated("thread count must be positive".into()));
        }
        if self.suites.contains(&Suite::Stretch) && self.genus < 3 {
            return Err(Error::PreconditionViolated("the stretch suite needs genus at least 3".into()));
        }
        Ok(())
    }

    pub fn budget(&self) -> Budget {
        Budget::from_bytes(self.budget_bytes)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The term budget ran out before the check could finish.
    Budget,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Budget => "BUDGET",
            Status::Error => "ERROR",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckRecord {
    pub name: String,
    pub genus: usize,
    pub status: Status,
    pub seconds: f64,
    /// Content hash of the check's principal artifact.
    pub hash: String,
    pub detail: Option<String>,
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} g={} t={:.3} hash={}",
            self.status, self.name, self.genus, self.seconds, self.hash
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerificationReport {
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status == Status::Pass)
    }

    /// 0 when every check passes, 2 when the only problems are exhausted
    /// budgets, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else if self.records.iter().all(|r| matches!(r.status, Status::Pass | Status::Budget)) {
            2
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        self.records.iter().map(|r| format!("{r}\n")).collect()
    }
}

/// Lowercase hex SHA-256 of `text`.
pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// `MemAvailable` from `/proc/meminfo`, in bytes, where the platform has it.
pub fn available_memory() -> Option<u64> {
    let info = std::fs::read_to_string("/proc/meminfo").ok()?;
    let line = info.lines().find(|l| l.starts_with("MemAvailable:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}
