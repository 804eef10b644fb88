//! Capacity bounds for exhaustive enumeration.

use crate::error::{Error, Result};

/// Default largest universe for exhaustive relation enumeration.
pub const DEFAULT_MAX_N: usize = 4;

/// Absolute ceiling: the n² bit relation encoding must fit a `u64`, and
/// anything past 7 elements is out of reach for exhaustive search anyway.
pub const HARD_MAX_N: usize = 7;

/// Environment variable that overrides [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "RSK_MAX_N";

/// Bound on enumeration size, read from `RSK_MAX_N` when set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Capacity {
    pub max_n: usize,
}

impl Default for Capacity {
    fn default() -> Self {
        Capacity { max_n: DEFAULT_MAX_N }
    }
}

impl Capacity {
    pub fn new(max_n: usize) -> Result<Self> {
        if max_n > HARD_MAX_N {
            return Err(Error::Capacity { requested: max_n, bound: HARD_MAX_N });
        }
        Ok(Capacity { max_n })
    }

    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_N_ENV) {
            Ok(raw) => {
                let n = raw
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Input(format!("{MAX_N_ENV} must be a nonnegative integer, got {raw:?}")))?;
                Capacity::new(n)
            }
            Err(_) => Ok(Capacity::default()),
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::Capacity { requested: n, bound: self.max_n })
        } else {
            Ok(())
        }
    }
}
