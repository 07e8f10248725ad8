use crate::error::{Error, Result};

/// Environment variable overriding [`Limits::max_dim`].
pub const CAP_DIM_ENV: &str = "RMLAB_CAP_DIM";

/// Size caps on exhaustive enumeration. All values are base-2 logarithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest code dimension that may be enumerated word by word.
    pub max_dim: u32,
    /// Largest number of cosets of a code in the full space.
    pub max_full_space_cosets: u32,
    /// Largest number of cosets of `RM(k, m)` inside `RM(k + 1, m)`.
    pub max_next_order_cosets: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_dim: 26,
            max_full_space_cosets: 20,
            max_next_order_cosets: 16,
        }
    }
}

impl Limits {
    /// Defaults, with `max_dim` taken from `RMLAB_CAP_DIM` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Self::default();
        if let Ok(raw) = std::env::var(CAP_DIM_ENV) {
            limits.max_dim = raw.trim().parse().map_err(|_| {
                Error::InvalidParams(format!("{CAP_DIM_ENV}={raw:?} is not an integer"))
            })?;
        }
        Ok(limits)
    }

    pub fn with_max_dim(mut self, max_dim: u32) -> Self {
        self.max_dim = max_dim;
        self
    }

    pub(crate) fn check_dim(&self, what: &'static str, dim: u64) -> Result<()> {
        check(what, dim, self.max_dim)
    }
}

pub(crate) fn check(what: &'static str, needed: u64, cap: u32) -> Result<()> {
    if needed > u64::from(cap) {
        return Err(Error::CapExceeded { what, needed, cap });
    }
    Ok(())
}
