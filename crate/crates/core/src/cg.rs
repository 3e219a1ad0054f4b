//! Tensor-product decomposition and Wigner (Clebsch-Gordan) coefficients.
//!
//! A coupled pair of (N1+1)- and (N2+1)-dimensional representations splits
//! into one unirrep for each N in |N1-N2|, |N1-N2|+2, ..., N1+N2. For each
//! block the highest-weight vector is extracted as the one-dimensional
//! kernel of the coupled raising operator restricted to the corresponding
//! weight space, and the lower rows follow by applying the coupled lowering
//! operator with the analytic ladder norms sqrt([n+1]_q [N-n]_q). The phase
//! convention fixes the coefficient on the product state with minimal n1
//! (maximal first-leg weight) strictly positive.
//!
//! The deformed-algebra tables must coincide with the su_q(2) tables row for
//! row, and are independent of every colour choice: the coupled ladder
//! matrices are literally the same.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{coproduct_rep, suq2_coproduct_rep};
use crate::linalg::max_abs_diff;
use crate::qfunc::{self, Colour, QParams};
use crate::report::{CheckParams, CheckReport};
use crate::repr::{dqa_rep, suq2_rep, GeneratorRep};

/// Coefficient block of one coupled unirrep: row n holds the expansion of
/// the coupled state (N, n) over the product basis (n1-major order).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CGBlock {
    /// Dimension label of the coupled unirrep.
    pub n: u32,
    /// (N+1) x (N1+1)(N2+1) coefficient rows.
    #[serde(serialize_with = "crate::linalg::serde_rows::serialize")]
    pub coeffs: DMatrix<f64>,
}

/// Full decomposition table of a tensor product, blocks in descending N.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CGTable {
    pub n1: u32,
    pub n2: u32,
    pub q: f64,
    pub blocks: Vec<CGBlock>,
}

impl CGTable {
    /// Dimension of the product space.
    pub fn product_dim(&self) -> usize {
        (self.n1 as usize + 1) * (self.n2 as usize + 1)
    }

    /// All rows stacked into one square orthonormal matrix, blocks in
    /// descending N.
    pub fn stacked(&self) -> DMatrix<f64> {
        let dim = self.product_dim();
        let mut out = DMatrix::zeros(dim, dim);
        let mut row = 0;
        for block in &self.blocks {
            for r in 0..block.coeffs.nrows() {
                out.row_mut(row).copy_from(&block.coeffs.row(r));
                row += 1;
            }
        }
        debug_assert_eq!(row, dim);
        out
    }

    /// Largest absolute coefficient difference against another table of the
    /// same shape.
    pub fn max_diff(&self, other: &CGTable) -> f64 {
        assert_eq!(self.blocks.len(), other.blocks.len(), "table shapes differ");
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| max_abs_diff(&a.coeffs, &b.coeffs))
            .fold(0.0, f64::max)
    }

    /// Flat CSV export with columns N,n,n1,n2,coefficient.
    pub fn to_csv(&self) -> String {
        let d2 = self.n2 as usize + 1;
        let mut out = String::from("N,n,n1,n2,coefficient\n");
        for block in &self.blocks {
            for n in 0..block.coeffs.nrows() {
                for idx in 0..block.coeffs.ncols() {
                    let (i1, i2) = (idx / d2, idx % d2);
                    out.push_str(&format!(
                        "{},{},{},{},{:.17e}\n",
                        block.n,
                        n,
                        i1,
                        i2,
                        block.coeffs[(n, idx)]
                    ));
                }
            }
        }
        out
    }
}

/// Indices of the weight-s subspace (total lowering depth i1 + i2 = s) in
/// the product basis, ordered by ascending i1.
fn weight_space(n1: u32, n2: u32, s: u32) -> Vec<usize> {
    let d2 = n2 as usize + 1;
    (0..=n1)
        .filter_map(|i1| {
            let i2 = s.checked_sub(i1)?;
            (i2 <= n2).then_some(i1 as usize * d2 + i2 as usize)
        })
        .collect()
}

/// Kernel vector of the raising operator restricted to one weight space,
/// by singular value decomposition of the (zero-padded square) restriction.
fn weight_space_kernel(
    jplus: &DMatrix<f64>,
    rows: &[usize],
    cols: &[usize],
    s: u32,
    p: &QParams,
) -> Result<Vec<f64>> {
    let d = cols.len();
    if rows.is_empty() {
        // raising out of the top weight space hits nothing
        debug_assert_eq!(d, 1);
        return Ok(vec![1.0]);
    }
    let mut restricted = DMatrix::<f64>::zeros(d, d);
    for (r, &row) in rows.iter().enumerate() {
        for (c, &col) in cols.iter().enumerate() {
            restricted[(r, c)] = jplus[(row, col)];
        }
    }
    let svd = restricted.svd(true, true);
    let threshold = p.tol() * d as f64;
    let kernel_count = svd.singular_values.iter().filter(|&&s| s < threshold).count();
    if kernel_count != 1 {
        return Err(Error::DegenerateKernel {
            weight: s as usize,
            found: kernel_count,
        });
    }
    let (min_idx, _) = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("nonempty singular values");
    let v_t = svd.v_t.expect("requested");
    Ok(v_t.row(min_idx).iter().copied().collect())
}

/// Shared decomposition driver: extract each block's highest-weight vector
/// and generate the lower rows with the analytic ladder norms.
fn decompose(coupled: &GeneratorRep, n1: u32, n2: u32, p: &QParams) -> Result<Vec<CGBlock>> {
    let dim = coupled.dim;
    let mut blocks = Vec::new();
    let mut n_label = n1 + n2;
    loop {
        let s = (n1 + n2 - n_label) / 2;
        let cols = weight_space(n1, n2, s);
        let rows = if s == 0 {
            Vec::new()
        } else {
            weight_space(n1, n2, s - 1)
        };
        let kernel = weight_space_kernel(&coupled.jplus, &rows, &cols, s, p)?;

        // phase convention: strictly positive coefficient on the minimal-n1
        // product state of the highest-weight vector
        let lead = kernel[0];
        if lead.abs() < 1e-12 {
            return Err(Error::DegenerateKernel {
                weight: s as usize,
                found: 0,
            });
        }
        let sign = if lead < 0.0 { -1.0 } else { 1.0 };

        let mut top = DMatrix::<f64>::zeros(1, dim);
        for (c, &col) in cols.iter().enumerate() {
            top[(0, col)] = sign * kernel[c];
        }

        let mut coeffs = DMatrix::<f64>::zeros(n_label as usize + 1, dim);
        coeffs.row_mut(0).copy_from(&top.row(0));
        for k in 0..n_label as usize {
            let norm = (qfunc::q_number(k as f64 + 1.0, p)
                * qfunc::q_number((n_label as usize - k) as f64, p))
            .sqrt();
            let lowered = (&coupled.jminus * coeffs.row(k).transpose()) / norm;
            coeffs.row_mut(k + 1).copy_from(&lowered.transpose());
        }
        blocks.push(CGBlock {
            n: n_label,
            coeffs,
        });

        if n_label < 2 || n_label - 2 < n1.abs_diff(n2) {
            break;
        }
        n_label -= 2;
    }
    Ok(blocks)
}

/// su_q(2) Wigner coefficients for the product of the N1- and N2-labelled
/// representations.
pub fn cg_suq2(n1: u32, n2: u32, p: &QParams) -> Result<CGTable> {
    let coupled = suq2_coproduct_rep(&suq2_rep(n1, p), &suq2_rep(n2, p), p)?;
    Ok(CGTable {
        n1,
        n2,
        q: p.q(),
        blocks: decompose(&coupled, n1, n2, p)?,
    })
}

/// Deformed-algebra Wigner coefficients from the (zeta, eta, delta)
/// coproduct of the colour-matched unirreps. Must equal the su_q(2) table.
pub fn cg_dqa(
    n1: u32,
    n2: u32,
    zeta: Colour,
    eta: Colour,
    delta: Colour,
    p: &QParams,
) -> Result<CGTable> {
    let coupled = coproduct_rep(
        zeta,
        eta,
        delta,
        &dqa_rep(n1, zeta, p),
        &dqa_rep(n2, eta, p),
        p,
    )?;
    Ok(CGTable {
        n1,
        n2,
        q: p.q(),
        blocks: decompose(&coupled, n1, n2, p)?,
    })
}

/// Selection rule: a coefficient may be nonzero only where the coupled
/// J0 eigenvalue (1 - delta (zeta G(m1)) (eta G(m2)))/(q-1) matches the
/// block eigenvalue. Residual is the worst of min(|coefficient|,
/// |eigenvalue defect|) over all entries, so both a large coefficient at a
/// mismatched position and an eigenvalue defect at a supported position
/// fail.
pub fn check_selection_rule(
    table: &CGTable,
    zeta: Colour,
    eta: Colour,
    delta: Colour,
    p: &QParams,
) -> CheckReport {
    let m1 = qfunc::spectrum(table.n1, zeta, p);
    let m2 = qfunc::spectrum(table.n2, eta, p);
    let d2 = table.n2 as usize + 1;
    let q1 = p.q() - 1.0;
    let mut residual = 0.0f64;
    for block in &table.blocks {
        let targets = qfunc::spectrum(block.n, delta, p);
        for (n, &target) in targets.iter().enumerate() {
            for idx in 0..block.coeffs.ncols() {
                let (i1, i2) = (idx / d2, idx % d2);
                let coupled_m = (1.0
                    - delta.sign()
                        * (zeta.sign() * qfunc::g_fn(m1[i1], p))
                        * (eta.sign() * qfunc::g_fn(m2[i2], p)))
                    / q1;
                let defect = (coupled_m - target).abs();
                residual = residual.max(block.coeffs[(n, idx)].abs().min(defect));
            }
        }
    }
    CheckReport::from_residual(
        "cg.selection_rule",
        CheckParams::new(p.q())
            .with_ns(&[table.n1, table.n2])
            .with_colours(&[zeta, eta, delta]),
        residual,
        p.tol(),
    )
}

/// Conjugating the coupled representation by the stacked coefficient matrix
/// must produce the direct sum of the component unirreps, with no off-block
/// leakage.
pub fn check_block_diagonalization(
    n1: u32,
    n2: u32,
    zeta: Colour,
    eta: Colour,
    delta: Colour,
    p: &QParams,
) -> Result<CheckReport> {
    let coupled = coproduct_rep(
        zeta,
        eta,
        delta,
        &dqa_rep(n1, zeta, p),
        &dqa_rep(n2, eta, p),
        p,
    )?;
    let table = cg_dqa(n1, n2, zeta, eta, delta, p)?;
    let u = table.stacked();
    let dim = coupled.dim;

    let mut expected_j0 = DMatrix::<f64>::zeros(dim, dim);
    let mut expected_jp = DMatrix::<f64>::zeros(dim, dim);
    let mut expected_jm = DMatrix::<f64>::zeros(dim, dim);
    let mut offset = 0;
    for block in &table.blocks {
        let rep = dqa_rep(block.n, delta, p);
        let d = rep.dim;
        expected_j0
            .view_mut((offset, offset), (d, d))
            .copy_from(&rep.j0_matrix());
        expected_jp
            .view_mut((offset, offset), (d, d))
            .copy_from(&rep.jplus);
        expected_jm
            .view_mut((offset, offset), (d, d))
            .copy_from(&rep.jminus);
        offset += d;
    }

    let residual = [
        (coupled.j0_matrix(), expected_j0),
        (coupled.jplus.clone(), expected_jp),
        (coupled.jminus.clone(), expected_jm),
    ]
    .iter()
    .map(|(m, expected)| max_abs_diff(&(&u * m * u.transpose()), expected))
    .fold(0.0, f64::max);

    Ok(CheckReport::from_residual(
        "cg.block_diagonalization",
        CheckParams::new(p.q())
            .with_ns(&[n1, n2])
            .with_colours(&[zeta, eta, delta]),
        residual,
        p.tol() * dim as f64,
    ))
}

/// Orthonormality of the stacked coefficient rows.
pub fn check_orthonormality(table: &CGTable, p: &QParams) -> CheckReport {
    let u = table.stacked();
    let dim = u.nrows();
    let residual = max_abs_diff(&(&u * u.transpose()), &DMatrix::identity(dim, dim));
    CheckReport::from_residual(
        "cg.orthonormality",
        CheckParams::new(p.q()).with_ns(&[table.n1, table.n2]),
        residual,
        p.tol(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn qp(q: f64) -> QParams {
        QParams::new(q).unwrap()
    }

    #[test]
    fn block_labels_follow_the_admissible_range() {
        let p = qp(0.5);
        let table = cg_suq2(2, 1, &p).unwrap();
        let labels: Vec<u32> = table.blocks.iter().map(|b| b.n).collect();
        assert_eq!(labels, vec![3, 1]);
        let table = cg_suq2(3, 3, &p).unwrap();
        let labels: Vec<u32> = table.blocks.iter().map(|b| b.n).collect();
        assert_eq!(labels, vec![6, 4, 2, 0]);
    }

    #[test]
    fn trivial_second_leg_is_identity_coupling() {
        let p = qp(0.5);
        let table = cg_suq2(3, 0, &p).unwrap();
        assert_eq!(table.blocks.len(), 1);
        let id = DMatrix::<f64>::identity(4, 4);
        assert!(max_abs_diff(&table.blocks[0].coeffs, &id) < 1e-12);
    }

    #[test]
    fn singlet_of_two_doublets_matches_kernel_oracle() {
        // the N=0 block of 1 (x) 1 is (0, a, -b, 0) with a/b = q: computed
        // here against the independent dense raising matrix
        let p = qp(0.5);
        let table = cg_suq2(1, 1, &p).unwrap();
        let singlet = &table.blocks[1];
        assert_eq!(singlet.n, 0);
        let v = singlet.coeffs.row(0);
        assert_abs_diff_eq!(v[0], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(v[3], 0.0, epsilon = 1e-14);
        assert!(v[1] > 0.0, "phase convention: minimal n1 entry positive");
        assert_abs_diff_eq!(v[1] / v[2], -p.q(), epsilon = 1e-12);
        assert_abs_diff_eq!(v[1] * v[1] + v[2] * v[2], 1.0, epsilon = 1e-12);

        // independent oracle: null space of the explicitly assembled
        // coupled raising matrix
        let raising = crate::oracles::coupled_raising_dense(1, 1, p.q());
        let prod = &raising * singlet.coeffs.row(0).transpose();
        assert!(prod.iter().all(|&x| x.abs() < 1e-12));
    }

    #[test]
    fn dqa_tables_equal_su_tables() {
        for q in [0.5, 0.8] {
            let p = qp(q);
            for n1 in 0..=3u32 {
                for n2 in 0..=3u32 {
                    let su = cg_suq2(n1, n2, &p).unwrap();
                    for zeta in Colour::BOTH {
                        for eta in Colour::BOTH {
                            for delta in Colour::BOTH {
                                let dq = cg_dqa(n1, n2, zeta, eta, delta, &p).unwrap();
                                let diff = su.max_diff(&dq);
                                assert!(
                                    diff < 1e-9,
                                    "n1={n1} n2={n2} {zeta}{eta}{delta} q={q}: {diff}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tables_are_colour_independent() {
        let p = qp(0.5);
        for n1 in 0..=3u32 {
            for n2 in 0..=3u32 {
                let plus = cg_dqa(n1, n2, Colour::Plus, Colour::Plus, Colour::Plus, &p).unwrap();
                let minus = cg_dqa(n1, n2, Colour::Plus, Colour::Plus, Colour::Minus, &p).unwrap();
                assert!(plus.max_diff(&minus) < 1e-10);
            }
        }
    }

    #[test]
    fn top_block_top_row_is_product_of_highest_states() {
        let p = qp(0.5);
        let table = cg_dqa(1, 1, Colour::Plus, Colour::Plus, Colour::Plus, &p).unwrap();
        let top = &table.blocks[0];
        assert_eq!(top.n, 2);
        assert_abs_diff_eq!(top.coeffs[(0, 0)], 1.0, epsilon = 1e-12);
        for idx in 1..4 {
            assert_abs_diff_eq!(top.coeffs[(0, idx)], 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn orthonormality_small_grid() {
        let p = qp(0.5);
        for n1 in 0..=3u32 {
            for n2 in 0..=3u32 {
                let table = cg_suq2(n1, n2, &p).unwrap();
                let report = check_orthonormality(&table, &p);
                assert!(report.residual < 1e-10, "n1={n1} n2={n2}: {}", report.residual);
            }
        }
    }

    #[test]
    fn selection_rule_holds_and_detects_shuffles() {
        let p = qp(0.5);
        for zeta in Colour::BOTH {
            for eta in Colour::BOTH {
                for delta in Colour::BOTH {
                    let table = cg_dqa(2, 1, zeta, eta, delta, &p).unwrap();
                    let report = check_selection_rule(&table, zeta, eta, delta, &p);
                    assert!(report.pass, "{zeta}{eta}{delta}: {}", report.residual);
                }
            }
        }
        // negative control: swap two rows of a block
        let mut table = cg_dqa(2, 1, Colour::Plus, Colour::Plus, Colour::Plus, &p).unwrap();
        let row0 = table.blocks[0].coeffs.row(0).clone_owned();
        let row1 = table.blocks[0].coeffs.row(1).clone_owned();
        table.blocks[0].coeffs.row_mut(0).copy_from(&row1);
        table.blocks[0].coeffs.row_mut(1).copy_from(&row0);
        let report = check_selection_rule(&table, Colour::Plus, Colour::Plus, Colour::Plus, &p);
        assert!(!report.pass);
    }

    #[test]
    fn block_diagonalization_reconstructs_components() {
        let p = qp(0.5);
        for (n1, n2) in [(1, 1), (2, 1), (3, 2)] {
            for delta in Colour::BOTH {
                let report = check_block_diagonalization(
                    n1,
                    n2,
                    Colour::Plus,
                    Colour::Minus,
                    delta,
                    &p,
                )
                .unwrap();
                assert!(report.pass, "n1={n1} n2={n2} {delta}: {}", report.residual);
                assert!(report.residual < 1e-9);
            }
        }
    }

    #[test]
    fn casimir_values_of_two_doublets() {
        // 1 (x) 1 decomposes into blocks with Casimir 2.5 and 0 at q = 1/2
        let p = qp(0.5);
        assert_abs_diff_eq!(
            qfunc::casimir_value(2, Colour::Plus, &p),
            2.5,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            qfunc::casimir_value(0, Colour::Plus, &p),
            0.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn near_classical_limit_matches_classical_cg() {
        let p = qp(0.999);
        for n1 in 0..=2u32 {
            for n2 in 0..=2u32 {
                let table = cg_suq2(n1, n2, &p).unwrap();
                let d2 = n2 as usize + 1;
                for block in &table.blocks {
                    for n in 0..block.coeffs.nrows() {
                        for idx in 0..block.coeffs.ncols() {
                            let (i1, i2) = (idx / d2, idx % d2);
                            let classical = crate::oracles::classical_cg(
                                n1 as i64,
                                n1 as i64 - 2 * i1 as i64,
                                n2 as i64,
                                n2 as i64 - 2 * i2 as i64,
                                block.n as i64,
                                block.n as i64 - 2 * n as i64,
                            );
                            let got = block.coeffs[(n, idx)];
                            assert!(
                                (got - classical).abs() < 5e-3,
                                "n1={n1} n2={n2} N={} n={n} ({i1},{i2}): {got} vs {classical}",
                                block.n
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn csv_export_has_full_product_support() {
        let p = qp(0.5);
        let table = cg_suq2(1, 1, &p).unwrap();
        let csv = table.to_csv();
        let lines: Vec<&str> = csv.trim().lines().collect();
        // header + (3 + 1) rows x 4 product states
        assert_eq!(lines.len(), 1 + 16);
        assert_eq!(lines[0], "N,n,n1,n2,coefficient");
    }
}
