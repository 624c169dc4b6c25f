//! Outcome of checking one identity on one window.

use serde::Serialize;

use crate::hochschild::Truncation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NeedsLargerWindow,
}

/// First input where the two sides differ, with both values as chain dumps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    /// Which equation of the identity failed.
    pub equation: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub algebra: String,
    pub window: Truncation,
    pub status: Status,
    /// Number of inputs evaluated.
    pub inputs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
