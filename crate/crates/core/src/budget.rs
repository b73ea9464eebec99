use crate::error::{Error, Result};

/// Counts search-node expansions. Running out yields [`Error::WorkLimit`],
/// which callers must keep distinct from a negative answer.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { limit: None, used: 0 }
    }

    pub fn new(limit: u64) -> Self {
        Budget { limit: Some(limit), used: 0 }
    }

    pub fn with_limit(limit: Option<u64>) -> Self {
        Budget { limit, used: 0 }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        match self.limit {
            Some(l) if self.used > l => Err(Error::WorkLimit),
            _ => Ok(()),
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }
}
