use crate::error::{Error, Result};

/// Resource limits for exhaustive scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest configuration space (`q^n`) that may be materialized.
    pub max_states: usize,
    /// Largest number of observations enumerated by super-expansivity checks.
    pub max_observations: usize,
}

impl Caps {
    pub const DEFAULT_MAX_STATES: usize = 1 << 20;
    pub const DEFAULT_MAX_OBSERVATIONS: usize = 1_000_000;

    pub fn unlimited() -> Self {
        Caps { max_states: usize::MAX, max_observations: usize::MAX }
    }

    pub(crate) fn check_states(&self, needed: u128) -> Result<usize> {
        if needed > self.max_states as u128 {
            return Err(Error::CapExceeded { needed, cap: self.max_states as u128 });
        }
        Ok(needed as usize)
    }

    pub(crate) fn check_observations(&self, needed: u128) -> Result<()> {
        if needed > self.max_observations as u128 {
            return Err(Error::CapExceeded { needed, cap: self.max_observations as u128 });
        }
        Ok(())
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_states: Self::DEFAULT_MAX_STATES,
            max_observations: Self::DEFAULT_MAX_OBSERVATIONS,
        }
    }
}
