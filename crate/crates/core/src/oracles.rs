//! Independent reference computations for the test suites.
//!
//! Nothing here reuses the crate's representation or coproduct machinery:
//! each oracle assembles its result from first principles so the two routes
//! can disagree when one of them is wrong.

use nalgebra::DMatrix;

fn factorial(n: i64) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Classical su(2) Clebsch-Gordan coefficient in the Condon-Shortley
/// convention, by the Racah sum formula. Arguments are doubled integers
/// (two_j1 = 2 j1, ...) so half-integer spins stay exact.
pub fn classical_cg(
    two_j1: i64,
    two_m1: i64,
    two_j2: i64,
    two_m2: i64,
    two_j: i64,
    two_m: i64,
) -> f64 {
    if two_m1 + two_m2 != two_m {
        return 0.0;
    }
    if two_j < (two_j1 - two_j2).abs() || two_j > two_j1 + two_j2 {
        return 0.0;
    }
    if (two_j1 + two_j2 + two_j) % 2 != 0 {
        return 0.0;
    }
    if two_m1.abs() > two_j1 || two_m2.abs() > two_j2 || two_m.abs() > two_j {
        return 0.0;
    }

    let half = |x: i64| -> i64 {
        debug_assert_eq!(x % 2, 0);
        x / 2
    };

    let delta = ((factorial(half(two_j1 + two_j2 - two_j))
        * factorial(half(two_j1 - two_j2 + two_j))
        * factorial(half(-two_j1 + two_j2 + two_j)))
        / factorial(half(two_j1 + two_j2 + two_j) + 1))
    .sqrt();

    let norm = ((two_j as f64 + 1.0)
        * factorial(half(two_j + two_m))
        * factorial(half(two_j - two_m))
        * factorial(half(two_j1 - two_m1))
        * factorial(half(two_j1 + two_m1))
        * factorial(half(two_j2 - two_m2))
        * factorial(half(two_j2 + two_m2)))
    .sqrt();

    let k_min = 0
        .max(-half(two_j - two_j2 + two_m1))
        .max(-half(two_j - two_j1 - two_m2));
    let k_max = half(two_j1 + two_j2 - two_j)
        .min(half(two_j1 - two_m1))
        .min(half(two_j2 + two_m2));

    let mut sum = 0.0;
    for k in k_min..=k_max {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign
            / (factorial(k)
                * factorial(half(two_j1 + two_j2 - two_j) - k)
                * factorial(half(two_j1 - two_m1) - k)
                * factorial(half(two_j2 + two_m2) - k)
                * factorial(half(two_j - two_j2 + two_m1) + k)
                * factorial(half(two_j - two_j1 - two_m2) + k));
    }

    delta * norm * sum
}

/// q-number (q^x - q^-x)/(q - q^-1), written out locally so the oracle does
/// not share code with the main scalar module.
fn qnum(x: f64, q: f64) -> f64 {
    (q.powf(x) - q.powf(-x)) / (q - 1.0 / q)
}

/// The coupled raising operator of two root-algebra unirreps, assembled
/// entry by entry on the product basis (i1-major order):
///
/// ```text
///   D(j+) |i1 i2> = sqrt([i1][N1-i1+1]) q^{(N2-2 i2)/2} |i1-1, i2>
///                 + q^{-(N1-2 i1)/2} sqrt([i2][N2-i2+1]) |i1, i2-1>
/// ```
pub fn coupled_raising_dense(n1: u32, n2: u32, q: f64) -> DMatrix<f64> {
    let d1 = n1 as usize + 1;
    let d2 = n2 as usize + 1;
    let dim = d1 * d2;
    let mut out = DMatrix::zeros(dim, dim);
    for i1 in 0..d1 {
        for i2 in 0..d2 {
            let col = i1 * d2 + i2;
            if i1 > 0 {
                let amp = (qnum(i1 as f64, q) * qnum((n1 as usize - i1 + 1) as f64, q)).sqrt()
                    * q.powf((n2 as f64 - 2.0 * i2 as f64) / 2.0);
                out[((i1 - 1) * d2 + i2, col)] += amp;
            }
            if i2 > 0 {
                let amp = q.powf(-(n1 as f64 - 2.0 * i1 as f64) / 2.0)
                    * (qnum(i2 as f64, q) * qnum((n2 as usize - i2 + 1) as f64, q)).sqrt();
                out[(i1 * d2 + (i2 - 1), col)] += amp;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn classical_cg_known_values() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        // two spin-1/2: singlet and triplet
        assert_abs_diff_eq!(classical_cg(1, 1, 1, -1, 0, 0), s, epsilon = 1e-12);
        assert_abs_diff_eq!(classical_cg(1, -1, 1, 1, 0, 0), -s, epsilon = 1e-12);
        assert_abs_diff_eq!(classical_cg(1, 1, 1, -1, 2, 0), s, epsilon = 1e-12);
        assert_abs_diff_eq!(classical_cg(1, 1, 1, 1, 2, 2), 1.0, epsilon = 1e-12);
        // two spin-1
        let t = 1.0 / 3f64.sqrt();
        assert_abs_diff_eq!(classical_cg(2, 2, 2, -2, 0, 0), t, epsilon = 1e-12);
        assert_abs_diff_eq!(classical_cg(2, 0, 2, 0, 0, 0), -t, epsilon = 1e-12);
        assert_abs_diff_eq!(
            classical_cg(2, 0, 2, 0, 4, 0),
            (2.0f64 / 3.0).sqrt(),
            epsilon = 1e-12
        );
        // selection rule and triangle violations
        assert_eq!(classical_cg(1, 1, 1, 1, 0, 2), 0.0);
        assert_eq!(classical_cg(1, 1, 1, -1, 4, 0), 0.0);
    }

    #[test]
    fn classical_cg_orthogonality() {
        // sum over (m1, m2) of <j1 m1 j2 m2|J M><j1 m1 j2 m2|J' M'> = dJJ' dMM'
        let (tj1, tj2) = (2i64, 1i64);
        for tj in [1i64, 3] {
            for tjp in [1i64, 3] {
                for tm in (-tj..=tj).step_by(2) {
                    for tmp in (-tjp..=tjp).step_by(2) {
                        let mut acc = 0.0;
                        for tm1 in (-tj1..=tj1).step_by(2) {
                            for tm2 in (-tj2..=tj2).step_by(2) {
                                acc += classical_cg(tj1, tm1, tj2, tm2, tj, tm)
                                    * classical_cg(tj1, tm1, tj2, tm2, tjp, tmp);
                            }
                        }
                        let expected = if tj == tjp && tm == tmp { 1.0 } else { 0.0 };
                        assert_abs_diff_eq!(acc, expected, epsilon = 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn dense_raising_annihilates_top_state() {
        let r = coupled_raising_dense(2, 1, 0.5);
        // the (0,0) product state is the global highest weight
        let top = nalgebra::DVector::from_fn(6, |i, _| if i == 0 { 1.0 } else { 0.0 });
        assert!((&r * top).iter().all(|&x| x.abs() < 1e-14));
    }
}
