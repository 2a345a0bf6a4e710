use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The rule assigning the inner node count `n_k` to the outer node `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeSchedule {
    /// `n_k = m` for every `k`.
    Constant(u32),
    /// `n_k = n - k`.
    NMinusK,
    /// `n_k = k`.
    K,
}

impl NodeSchedule {
    pub(crate) fn validate(&self) -> Result<()> {
        match self {
            NodeSchedule::Constant(0) => Err(Error::Parameter {
                name: "m",
                value: 0,
                reason: "a constant schedule needs at least one inner node interval",
            }),
            _ => Ok(()),
        }
    }

    /// `n_k` as the rule defines it; may be zero.
    pub fn raw(&self, n: u32, k: u32) -> u32 {
        match *self {
            NodeSchedule::Constant(m) => m,
            NodeSchedule::NMinusK => n - k,
            NodeSchedule::K => k,
        }
    }

    /// `n_k` with a zero count replaced by 1. The flag reports the
    /// substitution.
    pub fn effective(&self, n: u32, k: u32) -> (u32, bool) {
        match self.raw(n, k) {
            0 => (1, true),
            m => (m, false),
        }
    }
}

impl fmt::Display for NodeSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeSchedule::Constant(m) => write!(f, "const:{m}"),
            NodeSchedule::NMinusK => f.write_str("n-k"),
            NodeSchedule::K => f.write_str("k"),
        }
    }
}

impl FromStr for NodeSchedule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "n-k" => Ok(NodeSchedule::NMinusK),
            "k" => Ok(NodeSchedule::K),
            _ => s
                .strip_prefix("const:")
                .and_then(|m| m.parse().ok())
                .map(NodeSchedule::Constant)
                .ok_or_else(|| Error::Contract(format!("unknown node schedule `{s}`"))),
        }
    }
}
