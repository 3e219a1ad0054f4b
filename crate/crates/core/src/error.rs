//! Error types shared by all verification modules.

use crate::qfunc::Colour;
use thiserror::Error;

/// Errors raised by constructors, scalar functions, and identity checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Deformation parameter outside the open interval (0, 1).
    #[error("deformation parameter q = {0} must lie in the open interval (0, 1)")]
    DeformationOutOfRange(f64),

    /// Tolerance must be strictly positive.
    #[error("tolerance {0} must be strictly positive")]
    InvalidTolerance(f64),

    /// Evaluation hit the zero of the structure function, z = (q-1)^-1,
    /// where the inverse deforming functional is undefined.
    #[error("singular point: G(z) vanishes within tolerance at z = {z}")]
    SingularPoint { z: f64 },

    /// A functional-equation check was called with no sample points.
    #[error("empty sample set")]
    EmptySampleSet,

    /// An expression tree violated a structural invariant (e.g. empty product).
    #[error("malformed expression: {0}")]
    MalformedExpr(&'static str),

    /// A representation's colour metadata disagrees with the colour a
    /// coproduct leg or axiom check expects.
    #[error("colour mismatch on {leg} leg: expected {expected}, representation carries {found}")]
    ColourMismatch {
        expected: Colour,
        found: Colour,
        leg: &'static str,
    },

    /// A representation with no colour metadata was passed where a
    /// colour-indexed check requires one.
    #[error("representation carries no colour metadata ({0})")]
    MissingColour(&'static str),

    /// The R-matrix exponent log_q(c G(m)) is undefined because c G(m) <= 0
    /// on some eigenvalue: the leg colour does not match the representation.
    #[error("log domain: colour-weighted structure function is {value} <= 0 on an eigenvalue")]
    LogDomain { value: f64 },

    /// Repeated eigenvalues where a simple spectrum is required
    /// (Lagrange projector decomposition of the R-matrix prefactor).
    #[error("degenerate spectrum: repeated J0 eigenvalues")]
    DegenerateSpectrum,

    /// Highest-weight extraction found a kernel of dimension != 1.
    #[error("degenerate kernel in weight space {weight} (dimension {found} != 1)")]
    DegenerateKernel { weight: usize, found: usize },

    /// A matrix that is invertible in exact arithmetic failed to invert.
    #[error("matrix inversion failed ({0})")]
    NonInvertible(&'static str),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
