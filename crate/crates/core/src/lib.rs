//! Numerical verification of the two-colour Hopf structure carried by a
//! nonlinear deformation of su(2).
//!
//! The crate constructs the finite-dimensional unitary irreducible
//! representations of the q-deformed algebra su_q(2) and of its nonlinear
//! deformation with linear structure function G(J0) = 1 + (1-q) J0, realizes
//! the colour-indexed coproducts, counits, antipodes, and R-matrices on those
//! representations, and machine-checks every identity the structure asserts:
//! defining relations and Casimirs, generalized Hopf axioms, transmutation
//! and substitution laws, R-matrix properties including the coloured
//! Yang-Baxter equation, and the equality of the deformed Wigner coefficients
//! with their su_q(2) counterparts.
//!
//! Modules:
//! - [`qfunc`]: scalar q-arithmetic and structure functions
//! - [`repr`]: unirreps, transmutation, defining-relation checks
//! - [`hopf`]: expression trees, coproducts, counit and antipode axioms
//! - [`rmatrix`]: R-matrices and the coloured Yang-Baxter equation
//! - [`cg`]: tensor-product decomposition and Wigner coefficients
//! - [`report`]: structured check results
//! - [`oracles`]: independent reference computations used by the test suites

pub mod cg;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod oracles;
pub mod qfunc;
pub mod report;
pub mod repr;
pub mod rmatrix;

pub use error::{Error, Result};
pub use qfunc::{Colour, QParams};
pub use report::{CheckParams, CheckReport};
pub use repr::{Algebra, GeneratorRep, RepLabel};
