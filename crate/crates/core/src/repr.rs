//! Finite-dimensional unirreps of the two algebras and their transmutation.
//!
//! Both algebras act on an (N+1)-dimensional space with basis indexed by
//! n = 0..N, n = 0 being the highest-weight state. The root algebra has
//! J0-spectrum N/2 - n; the deformed algebra replaces it entrywise by the
//! colour-d branch of the deforming functional, keeping the same ladder
//! amplitudes sqrt([n+1]_q [N-n]_q). Tensor-product images produced by the
//! coproduct share the same `GeneratorRep` shape and can be nested.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{diag, max_abs, max_abs_diff};
use crate::qfunc::{self, Colour, QParams};
use crate::report::{CheckParams, CheckReport};

/// Which set of defining relations a representation is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Algebra {
    /// Root algebra: [j0, j+-] = +-j+-, [j+, j-] = [2 j0]_q.
    Suq2,
    /// Deformed algebra: [J0, J+] = G(J0) J+, [J0, J-] = -J- G(J0),
    /// [J+, J-] = F(J0).
    Dqa,
}

/// Identifies a unirrep: algebra, dimension label N, and (deformed only)
/// the colour of the series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RepLabel {
    pub algebra: Algebra,
    pub n: u32,
    pub colour: Option<Colour>,
}

impl RepLabel {
    pub fn suq2(n: u32) -> Self {
        RepLabel {
            algebra: Algebra::Suq2,
            n,
            colour: None,
        }
    }

    pub fn dqa(n: u32, colour: Colour) -> Self {
        RepLabel {
            algebra: Algebra::Dqa,
            n,
            colour: Some(colour),
        }
    }

    /// Representation dimension N + 1.
    pub fn dim(&self) -> usize {
        self.n as usize + 1
    }
}

/// Provenance of a representation: how it was built and which colour series
/// it belongs to (tensor products built by a colour-d coproduct are again
/// colour-d representations).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RepMeta {
    pub algebra: Algebra,
    /// Colour of the series the representation belongs to (None for the
    /// root algebra).
    pub colour: Option<Colour>,
    /// Dimension label for irreps; None for coupled representations.
    pub n: Option<u32>,
    /// Human-readable construction path.
    pub path: String,
}

/// Matrix triple of generator images on a concrete basis. The J0-image is
/// diagonal in the canonical basis for every representation this crate
/// constructs (irreps by definition, coproduct images because their J0 legs
/// are functions of J0).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorRep {
    pub dim: usize,
    /// Eigenvalues of the J0-image, basis order.
    pub j0diag: Vec<f64>,
    #[serde(serialize_with = "crate::linalg::serde_rows::serialize")]
    pub jplus: DMatrix<f64>,
    #[serde(serialize_with = "crate::linalg::serde_rows::serialize")]
    pub jminus: DMatrix<f64>,
    pub meta: RepMeta,
}

impl GeneratorRep {
    /// The J0-image as a dense diagonal matrix.
    pub fn j0_matrix(&self) -> DMatrix<f64> {
        diag(&self.j0diag)
    }

    /// Entrywise application of a scalar function to the J0 eigenvalues,
    /// returned as a diagonal matrix.
    pub fn apply_to_j0<F>(&self, f: F) -> Result<DMatrix<f64>>
    where
        F: Fn(f64) -> Result<f64>,
    {
        let vals = self
            .j0diag
            .iter()
            .map(|&m| f(m))
            .collect::<Result<Vec<f64>>>()?;
        Ok(diag(&vals))
    }

    /// Colour of the series, or an error naming the context that needed it.
    pub fn colour(&self, context: &'static str) -> Result<Colour> {
        self.meta.colour.ok_or(Error::MissingColour(context))
    }
}

/// Ladder amplitude sqrt([k]_q [N-k+1]_q) of the raising generator acting on
/// the state with index k (target index k-1); equivalently the lowering
/// amplitude out of index k-1.
fn ladder_amplitude(k: u32, n_label: u32, p: &QParams) -> f64 {
    (qfunc::q_number(k as f64, p) * qfunc::q_number((n_label - k + 1) as f64, p)).sqrt()
}

fn ladder_matrices(n_label: u32, p: &QParams) -> (DMatrix<f64>, DMatrix<f64>) {
    let dim = n_label as usize + 1;
    let mut jplus = DMatrix::zeros(dim, dim);
    for k in 1..=n_label {
        jplus[(k as usize - 1, k as usize)] = ladder_amplitude(k, n_label, p);
    }
    let jminus = jplus.transpose();
    (jplus, jminus)
}

/// The (N+1)-dimensional unirrep of the root algebra: j0 eigenvalues N/2 - n,
/// lowering amplitude sqrt([n+1]_q [N-n]_q) from index n to n+1, and
/// jminus = transpose(jplus).
pub fn suq2_rep(n_label: u32, p: &QParams) -> GeneratorRep {
    let dim = n_label as usize + 1;
    let j0diag: Vec<f64> = (0..dim)
        .map(|n| n_label as f64 / 2.0 - n as f64)
        .collect();
    let (jplus, jminus) = ladder_matrices(n_label, p);
    GeneratorRep {
        dim,
        j0diag,
        jplus,
        jminus,
        meta: RepMeta {
            algebra: Algebra::Suq2,
            colour: None,
            n: Some(n_label),
            path: format!("suq2({n_label})"),
        },
    }
}

/// The colour-d (N+1)-dimensional unirrep of the deformed algebra:
/// exponential J0 spectrum, same ladder amplitudes as the root algebra.
pub fn dqa_rep(n_label: u32, delta: Colour, p: &QParams) -> GeneratorRep {
    let j0diag = qfunc::spectrum(n_label, delta, p);
    let (jplus, jminus) = ladder_matrices(n_label, p);
    GeneratorRep {
        dim: n_label as usize + 1,
        j0diag,
        jplus,
        jminus,
        meta: RepMeta {
            algebra: Algebra::Dqa,
            colour: Some(delta),
            n: Some(n_label),
            path: format!("dqa({n_label},{delta})"),
        },
    }
}

/// The same unirrep obtained through the generator mapping: take the root
/// algebra rep and substitute the J0 eigenvalues through the colour-d
/// deforming functional, leaving the ladder operators untouched.
pub fn dqa_rep_via_map(n_label: u32, delta: Colour, p: &QParams) -> GeneratorRep {
    let root = suq2_rep(n_label, p);
    let j0diag: Vec<f64> = root
        .j0diag
        .iter()
        .map(|&z| qfunc::p_delta(z, delta, p))
        .collect();
    GeneratorRep {
        dim: root.dim,
        j0diag,
        jplus: root.jplus,
        jminus: root.jminus,
        meta: RepMeta {
            algebra: Algebra::Dqa,
            colour: Some(delta),
            n: Some(n_label),
            path: format!("p_{delta}(suq2({n_label}))"),
        },
    }
}

/// Composition with the colour-flip involution: J0 eigenvalues reflected
/// through the singular point, ladder operators unchanged. For an irrep this
/// is exactly its companion of the opposite colour; for a coupled
/// representation it realizes the substitution at the matrix level.
pub fn sigma_twist(rep: &GeneratorRep, p: &QParams) -> GeneratorRep {
    let j0diag: Vec<f64> = rep
        .j0diag
        .iter()
        .map(|&m| qfunc::sigma_scalar(m, p))
        .collect();
    GeneratorRep {
        dim: rep.dim,
        j0diag,
        jplus: rep.jplus.clone(),
        jminus: rep.jminus.clone(),
        meta: RepMeta {
            algebra: rep.meta.algebra,
            colour: rep.meta.colour.map(|c| c.flip()),
            n: rep.meta.n,
            path: format!("sigma({})", rep.meta.path),
        },
    }
}

/// The representation re-expressed in the given colour: unchanged if it
/// already carries `target`, otherwise the sigma twist. Errors if the
/// representation carries no colour metadata.
pub fn companion(rep: &GeneratorRep, target: Colour, p: &QParams) -> Result<GeneratorRep> {
    let current = rep.colour("companion")?;
    if current == target {
        Ok(rep.clone())
    } else {
        Ok(sigma_twist(rep, p))
    }
}

/// Transmutation operator exchanging the colour-d unirrep basis with its
/// companion of the same dimension. The basis map pairs equal indices n, so
/// in this basis the operator is the identity matrix; the colour argument
/// only fixes which carrier space is the domain.
pub fn transmutation(n_label: u32, _from: Colour) -> DMatrix<f64> {
    let dim = n_label as usize + 1;
    DMatrix::identity(dim, dim)
}

/// Residual of the three defining relations of the given algebra on a
/// representation; passes below tol * dim.
pub fn check_commutators(rep: &GeneratorRep, algebra: Algebra, p: &QParams) -> CheckReport {
    let j0 = rep.j0_matrix();
    let jp = &rep.jplus;
    let jm = &rep.jminus;
    let comm_0p = &j0 * jp - jp * &j0;
    let comm_0m = &j0 * jm - jm * &j0;
    let comm_pm = jp * jm - jm * jp;
    let residual = match algebra {
        Algebra::Suq2 => {
            let rhs_pm = rep
                .apply_to_j0(|z| Ok(qfunc::q_number(2.0 * z, p)))
                .expect("q-number is total");
            max_abs(&(comm_0p - jp))
                .max(max_abs(&(comm_0m + jm)))
                .max(max_abs_diff(&comm_pm, &rhs_pm))
        }
        Algebra::Dqa => {
            let g = rep
                .apply_to_j0(|z| Ok(qfunc::g_fn(z, p)))
                .expect("G is total");
            let f = rep
                .apply_to_j0(|z| qfunc::f_fn(z, p))
                .expect("valid spectra avoid the singular point");
            max_abs(&(comm_0p - &g * jp))
                .max(max_abs(&(comm_0m + jm * &g)))
                .max(max_abs_diff(&comm_pm, &f))
        }
    };
    let name = match algebra {
        Algebra::Suq2 => "algebra.commutators.suq2",
        Algebra::Dqa => "algebra.commutators.dqa",
    };
    let mut params = CheckParams::new(p.q());
    if let Some(n) = rep.meta.n {
        params = params.with_ns(&[n]);
    }
    if let Some(c) = rep.meta.colour {
        params = params.with_colours(&[c]);
    }
    CheckReport::from_residual(name, params, residual, p.tol() * rep.dim as f64)
}

/// Casimir matrix of the representation: J-J+ + H(J0) for the deformed
/// algebra, j-j+ + [j0]_q [j0+1]_q for the root one. Scalar on irreps.
pub fn casimir_matrix(rep: &GeneratorRep, algebra: Algebra, p: &QParams) -> Result<DMatrix<f64>> {
    let h = match algebra {
        Algebra::Suq2 => rep.apply_to_j0(|z| {
            Ok(qfunc::q_number(z, p) * qfunc::q_number(z + 1.0, p))
        })?,
        Algebra::Dqa => rep.apply_to_j0(|z| qfunc::h_fn(z, p))?,
    };
    Ok(&rep.jminus * &rep.jplus + h)
}

/// Second form of the Casimir, J+J- + H(J0) - F(J0); must agree with
/// `casimir_matrix` entrywise.
pub fn casimir_matrix_second_form(
    rep: &GeneratorRep,
    algebra: Algebra,
    p: &QParams,
) -> Result<DMatrix<f64>> {
    let tail = match algebra {
        Algebra::Suq2 => rep.apply_to_j0(|z| {
            Ok(qfunc::q_number(z, p) * qfunc::q_number(z + 1.0, p) - qfunc::q_number(2.0 * z, p))
        })?,
        Algebra::Dqa => rep.apply_to_j0(|z| Ok(qfunc::h_fn(z, p)? - qfunc::f_fn(z, p)?))?,
    };
    Ok(&rep.jplus * &rep.jminus + tail)
}

/// Scalarness of the Casimir: off-diagonal entries vanish, the diagonal sits
/// at the closed-form eigenvalue, and both Casimir forms agree.
pub fn check_casimir_scalar(
    rep: &GeneratorRep,
    algebra: Algebra,
    p: &QParams,
) -> Result<CheckReport> {
    let first = casimir_matrix(rep, algebra, p)?;
    let second = casimir_matrix_second_form(rep, algebra, p)?;
    let expected = match (algebra, rep.meta.n) {
        (Algebra::Dqa, Some(n)) => {
            qfunc::casimir_value(n, rep.colour("casimir eigenvalue")?, p)
        }
        (Algebra::Suq2, Some(n)) => {
            qfunc::q_number(n as f64 / 2.0, p) * qfunc::q_number(n as f64 / 2.0 + 1.0, p)
        }
        _ => first[(0, 0)], // coupled input: only scalarness and form agreement
    };
    let mut residual = max_abs_diff(&first, &second);
    for i in 0..rep.dim {
        for j in 0..rep.dim {
            let target = if i == j { expected } else { 0.0 };
            residual = residual.max((first[(i, j)] - target).abs());
        }
    }
    let name = match algebra {
        Algebra::Suq2 => "algebra.casimir.suq2",
        Algebra::Dqa => "algebra.casimir.dqa",
    };
    let mut params = CheckParams::new(p.q());
    if let Some(n) = rep.meta.n {
        params = params.with_ns(&[n]);
    }
    if let Some(c) = rep.meta.colour {
        params = params.with_colours(&[c]);
    }
    Ok(CheckReport::from_residual(
        name,
        params,
        residual,
        p.tol() * rep.dim as f64,
    ))
}

/// Route equivalence of the two unirrep constructions: the direct spectrum
/// and the deforming-functional image must agree entrywise to construction
/// precision (1e-12 regardless of the configured tolerance).
pub fn check_map_equivalence(n_label: u32, delta: Colour, p: &QParams) -> CheckReport {
    let direct = dqa_rep(n_label, delta, p);
    let mapped = dqa_rep_via_map(n_label, delta, p);
    let residual = direct
        .j0diag
        .iter()
        .zip(&mapped.j0diag)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
        .max(max_abs_diff(&direct.jplus, &mapped.jplus))
        .max(max_abs_diff(&direct.jminus, &mapped.jminus));
    CheckReport::from_residual(
        "algebra.map_equivalence",
        CheckParams::new(p.q())
            .with_ns(&[n_label])
            .with_colours(&[delta]),
        residual,
        1e-12,
    )
}

/// Transmutation: the operator squares to the identity exactly, and
/// conjugating a unirrep by it realizes the colour-flip involution, i.e. the
/// companion representation evaluated on the substituted generators.
pub fn check_transmutation(n_label: u32, delta: Colour, p: &QParams) -> CheckReport {
    let dim = n_label as usize + 1;
    let t_fwd = transmutation(n_label, delta);
    let t_back = transmutation(n_label, delta.flip());
    let mut residual = max_abs_diff(&(&t_back * &t_fwd), &DMatrix::identity(dim, dim));

    // T Phi^d(A) T^-1 = Phi^(-d)(sigma(A)) for A in {J0, J+, J-}; with T the
    // identity this compares the representation with the sigma twist of its
    // companion
    let rep = dqa_rep(n_label, delta, p);
    let flipped = dqa_rep(n_label, delta.flip(), p);
    let conj = |m: &DMatrix<f64>| &t_fwd * m * &t_back;
    let sigma_j0 = flipped
        .apply_to_j0(|z| Ok(qfunc::sigma_scalar(z, p)))
        .expect("sigma is total");
    residual = residual.max(max_abs_diff(&conj(&rep.j0_matrix()), &sigma_j0));
    residual = residual.max(max_abs_diff(&conj(&rep.jplus), &flipped.jplus));
    residual = residual.max(max_abs_diff(&conj(&rep.jminus), &flipped.jminus));

    CheckReport::from_residual(
        "algebra.transmutation",
        CheckParams::new(p.q())
            .with_ns(&[n_label])
            .with_colours(&[delta]),
        residual,
        p.tol() * dim as f64,
    )
}
