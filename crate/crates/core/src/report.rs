//! Structured results for individual identity checks.

use serde::{Deserialize, Serialize};

use crate::qfunc::Colour;

/// Parameter tuple a check ran at: deformation, representation labels,
/// and the colour assignment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckParams {
    /// Deformation parameter.
    pub q: f64,
    /// Representation dimension labels N (possibly several, one per leg).
    #[serde(rename = "n")]
    pub ns: Vec<u32>,
    /// Colour signs, one per colour index of the identity, in the order
    /// the identity names them.
    pub colours: Vec<i8>,
}

impl CheckParams {
    pub fn new(q: f64) -> Self {
        CheckParams {
            q,
            ns: Vec::new(),
            colours: Vec::new(),
        }
    }

    pub fn with_ns(mut self, ns: &[u32]) -> Self {
        self.ns = ns.to_vec();
        self
    }

    pub fn with_colours(mut self, colours: &[Colour]) -> Self {
        self.colours = colours.iter().map(Colour::as_i8).collect();
        self
    }
}

/// Outcome of one identity check: the largest residual observed and whether
/// it beat the threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    /// Stable dotted identifier, e.g. `rmatrix.cybe`.
    pub name: String,
    /// Parameters the check ran at.
    pub params: CheckParams,
    /// Max absolute residual over the identity's matrix entries or samples.
    pub residual: f64,
    /// Pass threshold the residual was compared against.
    pub threshold: f64,
    /// `residual < threshold`.
    pub pass: bool,
    /// Wall-clock duration; excluded from determinism comparisons.
    #[serde(rename = "elapsedMicros")]
    pub elapsed_micros: u64,
}

impl CheckReport {
    /// Build a report from a residual; `pass` is derived, never stored
    /// independently.
    pub fn from_residual(
        name: impl Into<String>,
        params: CheckParams,
        residual: f64,
        threshold: f64,
    ) -> Self {
        CheckReport {
            name: name.into(),
            params,
            residual,
            threshold,
            pass: residual < threshold,
            elapsed_micros: 0,
        }
    }

    /// Rename a report in place (suites prefix module paths).
    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}
