//! Scalar q-arithmetic and the structure functions of the deformed algebra.
//!
//! Everything downstream is built from a handful of real functions of one
//! variable, parameterized by the deformation q in (0, 1):
//!
//! ```text
//!   [x]_q     = (q^x - q^-x) / (q - q^-1)          q-number
//!   G(z)      = 1 + (1-q) z                        structure function
//!   p_d(z)    = (1 - d q^-z) / (q - 1),  d = +-1   deforming functional
//!   g(z)      = ln(G(z)^2) / ln(q^-2)              inverse of p_d (both branches)
//!   F(z)      = -(G^2 - G^-2) / (q - q^-1)
//!   H(z)      = (q^-1 G^2 + q G^-2 - q - q^-1) / (q - q^-1)^2
//!   sigma(z)  = 2/(q-1) - z                        colour-flip involution
//! ```
//!
//! The point z = (q-1)^-1 is the zero of G and separates the two colour
//! domains; `g_inverse`, `f_fn`, and `h_fn` reject arguments that land on it.

use crate::error::{Error, Result};
use crate::report::{CheckParams, CheckReport};
use serde::{Deserialize, Serialize};

/// Deformation parameter q in (0, 1) together with the numeric tolerance
/// threaded through every check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QParams {
    q: f64,
    tol: f64,
}

/// Default tolerance used when none is supplied.
pub const DEFAULT_TOL: f64 = 1e-10;

impl QParams {
    /// Create parameters with the default tolerance. Rejects q outside (0, 1);
    /// q = 1 (undeformed) and q > 1 (related by an automorphism) are out of scope.
    pub fn new(q: f64) -> Result<Self> {
        Self::with_tol(q, DEFAULT_TOL)
    }

    /// Create parameters with an explicit tolerance.
    pub fn with_tol(q: f64, tol: f64) -> Result<Self> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::DeformationOutOfRange(q));
        }
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::InvalidTolerance(tol));
        }
        Ok(QParams { q, tol })
    }

    /// The deformation parameter.
    pub fn q(&self) -> f64 {
        self.q
    }

    /// The numeric tolerance.
    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// The singular point (q-1)^-1 where G vanishes.
    pub fn singular_point(&self) -> f64 {
        1.0 / (self.q - 1.0)
    }
}

/// Colour label: selects one of the two series of unirreps and the
/// corresponding branch of the deforming functional.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Colour {
    /// Eigenvalues above the singular point; branch p_+.
    Plus,
    /// Eigenvalues below the singular point; branch p_-.
    Minus,
}

impl Colour {
    /// Both colours, in canonical (+, -) order.
    pub const BOTH: [Colour; 2] = [Colour::Plus, Colour::Minus];

    /// The sign as a float, +1.0 or -1.0.
    pub fn sign(&self) -> f64 {
        match self {
            Colour::Plus => 1.0,
            Colour::Minus => -1.0,
        }
    }

    /// The opposite colour.
    pub fn flip(&self) -> Colour {
        match self {
            Colour::Plus => Colour::Minus,
            Colour::Minus => Colour::Plus,
        }
    }

    /// Construct from a sign; anything >= 0 is Plus.
    pub fn from_sign(s: f64) -> Colour {
        if s >= 0.0 {
            Colour::Plus
        } else {
            Colour::Minus
        }
    }

    /// Signed integer representation, +1 or -1.
    pub fn as_i8(&self) -> i8 {
        match self {
            Colour::Plus => 1,
            Colour::Minus => -1,
        }
    }
}

impl std::ops::Mul for Colour {
    type Output = Colour;

    /// Product of colour signs; `a * b` is Plus iff a == b. Used for the
    /// two-index substitutions sigma_{ab}.
    fn mul(self, rhs: Colour) -> Colour {
        if self == rhs {
            Colour::Plus
        } else {
            Colour::Minus
        }
    }
}

impl std::fmt::Display for Colour {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Colour::Plus => write!(f, "+"),
            Colour::Minus => write!(f, "-"),
        }
    }
}

/// The q-number [x]_q = (q^x - q^-x)/(q - q^-1). Odd in x; [0] = 0, [1] = 1.
pub fn q_number(x: f64, p: &QParams) -> f64 {
    let q = p.q;
    (q.powf(x) - q.powf(-x)) / (q - 1.0 / q)
}

/// The q-factorial [n]_q! = [1][2]...[n], with the empty product [0]! = 1.
pub fn q_factorial(n: u32, p: &QParams) -> f64 {
    (1..=n).map(|k| q_number(k as f64, p)).product()
}

/// Structure function G(z) = 1 + (1-q) z; vanishes exactly at z = (q-1)^-1.
pub fn g_fn(z: f64, p: &QParams) -> f64 {
    1.0 + (1.0 - p.q) * z
}

/// True when z is too close to the zero of G for the inverse functional to
/// be meaningful. Relative gate: |G(z)| < tol * (1 + |z|).
pub fn is_singular(z: f64, p: &QParams) -> bool {
    g_fn(z, p).abs() < p.tol * (1.0 + z.abs())
}

fn guard_singular(z: f64, p: &QParams) -> Result<f64> {
    if is_singular(z, p) {
        Err(Error::SingularPoint { z })
    } else {
        Ok(g_fn(z, p))
    }
}

/// Deforming functional p_d(z) = (1 - d q^-z)/(q - 1). Entire; maps the real
/// line onto the colour-d side of the singular point.
pub fn p_delta(z: f64, delta: Colour, p: &QParams) -> f64 {
    (1.0 - delta.sign() * p.q.powf(-z)) / (p.q - 1.0)
}

/// Inverse of the deforming functional, g(z) = ln(G(z)^2)/ln(q^-2).
/// Both branches share the same inverse: g(p_d(z)) = z for d = +-1.
pub fn g_inverse(z: f64, p: &QParams) -> Result<f64> {
    let g = guard_singular(z, p)?;
    Ok((g * g).ln() / (1.0 / (p.q * p.q)).ln())
}

/// Commutator function F(z) = -(G(z)^2 - G(z)^-2)/(q - q^-1).
pub fn f_fn(z: f64, p: &QParams) -> Result<f64> {
    let g = guard_singular(z, p)?;
    let g2 = g * g;
    Ok(-(g2 - 1.0 / g2) / (p.q - 1.0 / p.q))
}

/// Casimir structure function
/// H(z) = (q^-1 G^2 + q G^-2 - q - q^-1)/(q - q^-1)^2.
pub fn h_fn(z: f64, p: &QParams) -> Result<f64> {
    let q = p.q;
    let g = guard_singular(z, p)?;
    let g2 = g * g;
    let denom = q - 1.0 / q;
    Ok((g2 / q + q / g2 - q - 1.0 / q) / (denom * denom))
}

/// The involution sigma(z) = 2/(q-1) - z. Reflects about the singular point
/// and satisfies G(sigma(z)) = -G(z).
pub fn sigma_scalar(z: f64, p: &QParams) -> f64 {
    2.0 / (p.q - 1.0) - z
}

/// Scalar image of J0 under the antipode with colour product c = zeta*delta:
/// z -> (1 - c / G(z)) / (q - 1).
pub fn antipode_scalar(z: f64, c: f64, p: &QParams) -> Result<f64> {
    let g = guard_singular(z, p)?;
    Ok((1.0 - c / g) / (p.q - 1.0))
}

/// J0 spectrum of the colour-d unirrep of dimension N+1:
/// m_n = (1 - d q^-(N-2n)/2)/(q-1) for n = 0..N, in n-ascending order.
pub fn spectrum(n_label: u32, delta: Colour, p: &QParams) -> Vec<f64> {
    (0..=n_label)
        .map(|n| p_delta((n_label as f64 - 2.0 * n as f64) / 2.0, delta, p))
        .collect()
}

/// Maximum and minimum J0 eigenvalues of the colour-d unirrep:
/// (J^d, -j^d) = ((1 - d q^(-dN/2))/(q-1), (1 - d q^(dN/2))/(q-1)).
pub fn extrema(n_label: u32, delta: Colour, p: &QParams) -> (f64, f64) {
    let d = delta.sign();
    let jmax = p_delta(d * n_label as f64 / 2.0, delta, p);
    let jmin = p_delta(-d * n_label as f64 / 2.0, delta, p);
    (jmax, jmin)
}

/// Casimir eigenvalue of the (N+1)-dimensional unirrep: H(gamma^d) with
/// gamma^d = p_d(N/2). Colour-independent and equal to [N/2]_q [N/2+1]_q.
pub fn casimir_value(n_label: u32, delta: Colour, p: &QParams) -> f64 {
    let gamma = p_delta(n_label as f64 / 2.0, delta, p);
    h_fn(gamma, p).expect("gamma^d never hits the singular point for q in (0,1)")
}

/// Default deterministic sample grid: 41 equally spaced points in [-5, 5]
/// with any point inside the singular gate removed.
pub fn default_grid(p: &QParams) -> Vec<f64> {
    (0..41)
        .map(|i| -5.0 + 0.25 * i as f64)
        .filter(|&z| !is_singular(z, p))
        .collect()
}

/// Check the defining functional equation p(z) - p(z-1) = G(p(z)) on the
/// given samples. Residual is the max absolute defect.
pub fn check_p_equation(delta: Colour, p: &QParams, samples: &[f64]) -> Result<CheckReport> {
    if samples.is_empty() {
        return Err(Error::EmptySampleSet);
    }
    let residual = samples
        .iter()
        .map(|&z| {
            let lhs = p_delta(z, delta, p) - p_delta(z - 1.0, delta, p);
            (lhs - g_fn(p_delta(z, delta, p), p)).abs()
        })
        .fold(0.0, f64::max);
    Ok(CheckReport::from_residual(
        "scalar.p_equation",
        CheckParams::new(p.q).with_colours(&[delta]),
        residual,
        p.tol,
    ))
}

/// Check the consistency condition H(z) - H(z - G(z)) = F(z) on the given
/// samples. Errors with `SingularPoint` if a sample hits the zero of G.
pub fn check_consistency_fgh(p: &QParams, samples: &[f64]) -> Result<CheckReport> {
    if samples.is_empty() {
        return Err(Error::EmptySampleSet);
    }
    let mut residual = 0.0f64;
    for &z in samples {
        let shifted = z - g_fn(z, p);
        let defect = (h_fn(z, p)? - h_fn(shifted, p)? - f_fn(z, p)?).abs();
        residual = residual.max(defect);
    }
    Ok(CheckReport::from_residual(
        "scalar.fgh_consistency",
        CheckParams::new(p.q),
        residual,
        p.tol,
    ))
}
