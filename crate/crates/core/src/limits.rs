use crate::error::{Error, Result};
use crate::lr::DEFAULT_MAX_TYPE_CELLS;
use crate::partition::DEFAULT_MAX_N;
use crate::sylow::DEFAULT_MAX_PRIME_POWER;

/// Environment variable that overrides [`Limits::max_n`].
pub const MAX_N_ENV: &str = "SYLOWCHAR_MAX_N";

/// Size guards for the exhaustive scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` scanned over `P(n)`.
    pub max_n: u32,
    /// Largest skew shape whose type set is enumerated.
    pub max_type_cells: u64,
    /// Largest `p^k` handled by the wreath recursion.
    pub max_prime_power: u64,
    /// Largest number of witness tuples tried for one partition.
    pub max_search_tuples: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_MAX_N,
            max_type_cells: DEFAULT_MAX_TYPE_CELLS,
            max_prime_power: DEFAULT_MAX_PRIME_POWER,
            max_search_tuples: 5_000_000,
        }
    }
}

impl Limits {
    /// Defaults, with `max_n` taken from `SYLOWCHAR_MAX_N` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Self::default();
        if let Ok(raw) = std::env::var(MAX_N_ENV) {
            limits.max_n = raw.trim().parse().map_err(|_| {
                Error::InvalidParameter(format!("{MAX_N_ENV}={raw:?} is not a non-negative integer"))
            })?;
        }
        Ok(limits)
    }

    pub(crate) fn check_n(&self, n: u64) -> Result<()> {
        if n > u64::from(self.max_n) {
            return Err(Error::BoundExceeded {
                what: "n",
                value: n,
                limit: self.max_n.into(),
            });
        }
        Ok(())
    }
}
