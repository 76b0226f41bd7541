use crate::error::{Error, Result};
use crate::polyring::Polynomial;

/// Approximate resident cost of one stored term, with headroom for the
/// input and output maps that coexist during a multiplication.
pub const BYTES_PER_TERM: usize = 160;

/// Term-count watermark. Large constructions check every intermediate
/// against it and abort with `ResourceBudgetExceeded`, so failures are
/// deterministic rather than dependent on wall-clock time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    max_terms: usize,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_terms: usize::MAX,
        }
    }

    pub fn terms(max_terms: usize) -> Self {
        Budget { max_terms }
    }

    pub fn from_bytes(bytes: u64) -> Self {
        let terms = bytes / BYTES_PER_TERM as u64;
        Budget {
            max_terms: usize::try_from(terms).unwrap_or(usize::MAX),
        }
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn check(&self, p: &Polynomial, what: &str) -> Result<()> {
        self.check_count(p.len(), what)
    }

    pub fn check_count(&self, terms: usize, what: &str) -> Result<()> {
        if terms > self.max_terms {
            return Err(Error::ResourceBudgetExceeded {
                what: what.to_string(),
                terms,
                limit: self.max_terms,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}
