//! Dense-matrix helpers shared by the representation and R-matrix modules.
//!
//! Index convention throughout the crate: tensor-product bases are ordered
//! left-major, i.e. the product state (i1, i2) sits at row i1*dim2 + i2, and
//! (i1, i2, i3) at i1*dim2*dim3 + i2*dim3 + i3.

use nalgebra::DMatrix;

/// Max absolute entry (Chebyshev norm); the residual measure for all checks.
pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |acc, &x| acc.max(x.abs()))
}

/// Max absolute entry of the difference a - b.
pub fn max_abs_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    debug_assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .fold(0.0, |acc, (&x, &y)| acc.max((x - y).abs()))
}

/// Kronecker product, left factor major.
pub fn kron(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a.kronecker(b)
}

/// Diagonal matrix from eigenvalue list.
pub fn diag(values: &[f64]) -> DMatrix<f64> {
    DMatrix::from_diagonal(&nalgebra::DVector::from_row_slice(values))
}

/// Embed a two-leg operator on V1 (x) V2 into V1 (x) V2 (x) V3.
pub fn embed_12(r12: &DMatrix<f64>, dim3: usize) -> DMatrix<f64> {
    kron(r12, &DMatrix::identity(dim3, dim3))
}

/// Embed a two-leg operator on V2 (x) V3 into V1 (x) V2 (x) V3.
pub fn embed_23(r23: &DMatrix<f64>, dim1: usize) -> DMatrix<f64> {
    kron(&DMatrix::identity(dim1, dim1), r23)
}

/// Embed a two-leg operator on V1 (x) V3 into V1 (x) V2 (x) V3, acting as
/// the identity on the middle leg.
pub fn embed_13(r13: &DMatrix<f64>, dim1: usize, dim2: usize, dim3: usize) -> DMatrix<f64> {
    debug_assert_eq!(r13.nrows(), dim1 * dim3);
    let total = dim1 * dim2 * dim3;
    let mut out = DMatrix::zeros(total, total);
    for i1 in 0..dim1 {
        for j1 in 0..dim1 {
            for i3 in 0..dim3 {
                for j3 in 0..dim3 {
                    let v = r13[(i1 * dim3 + i3, j1 * dim3 + j3)];
                    if v != 0.0 {
                        for i2 in 0..dim2 {
                            out[(
                                (i1 * dim2 + i2) * dim3 + i3,
                                (j1 * dim2 + i2) * dim3 + j3,
                            )] = v;
                        }
                    }
                }
            }
        }
    }
    out
}

/// Row-major nested-array view, the JSON wire format for dense matrices.
pub fn matrix_rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect())
        .collect()
}

/// serde adapter serializing a matrix as row-major nested arrays.
pub mod serde_rows {
    use nalgebra::DMatrix;
    use serde::{Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &DMatrix<f64>, s: S) -> Result<S::Ok, S::Error> {
        super::matrix_rows(m).serialize(s)
    }
}

/// Permutation matrix of the twist V2 (x) V1 -> V1 (x) V2: maps the basis
/// vector (i2, i1) of the swapped order to (i1, i2) of the reference order.
/// Conjugating an operator on V2 (x) V1 by this matrix re-expresses it on
/// V1 (x) V2.
pub fn twist_permutation(dim1: usize, dim2: usize) -> DMatrix<f64> {
    let total = dim1 * dim2;
    let mut p = DMatrix::zeros(total, total);
    for i1 in 0..dim1 {
        for i2 in 0..dim2 {
            p[(i1 * dim2 + i2, i2 * dim1 + i1)] = 1.0;
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_left_major() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        let b = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        let k = kron(&a, &b);
        assert_eq!(k[(0, 1)], 1.0); // a[0,0] * b[0,1]
        assert_eq!(k[(0, 3)], 2.0); // a[0,1] * b[0,1]
        assert_eq!(k[(2, 0)], 0.0); // a[1,0] * b[0,0]
        assert_eq!(k[(2, 1)], 3.0); // a[1,0] * b[0,1]
    }

    #[test]
    fn embeddings_commute_with_kron_of_identities() {
        let r = DMatrix::from_row_slice(4, 4, &(0..16).map(|x| x as f64).collect::<Vec<_>>());
        // embed_13 with a trivial middle leg is the operator itself
        let e = embed_13(&r, 2, 1, 2);
        assert_eq!(e, r);
        // embed_12/embed_23 against direct kron
        let id2 = DMatrix::identity(2, 2);
        assert_eq!(embed_12(&r, 2), kron(&r, &id2));
        assert_eq!(embed_23(&r, 2), kron(&id2, &r));
    }

    #[test]
    fn embed_13_matches_explicit_tensor_contraction() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 0.0, 1.0]);
        let c = DMatrix::from_row_slice(2, 2, &[3.0, 0.0, 1.0, 1.0]);
        let r13 = kron(&a, &c);
        let e = embed_13(&r13, 2, 3, 2);
        // must equal a (x) id (x) c
        let id3 = DMatrix::identity(3, 3);
        let expected = kron(&kron(&a, &id3), &c);
        assert_eq!(e, expected);
    }

    #[test]
    fn twist_is_orthogonal_involution_on_tensor_square() {
        let p = twist_permutation(3, 3);
        let id = DMatrix::identity(9, 9);
        assert_eq!(&p * p.transpose(), id);
        // for dim1 = dim2 the twist is its own inverse
        assert_eq!(&p * &p, DMatrix::identity(9, 9));
    }

    #[test]
    fn twist_swaps_kron_factors() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        let b = DMatrix::from_row_slice(3, 3, &(0..9).map(|x| x as f64 + 1.0).collect::<Vec<_>>());
        let p = twist_permutation(2, 3);
        let swapped = &p * kron(&b, &a) * p.transpose();
        assert_eq!(swapped, kron(&a, &b));
    }
}
