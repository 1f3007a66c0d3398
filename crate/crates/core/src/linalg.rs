//! Dense complex linear algebra helpers: Hermitian eigenvalues via cyclic
//! Jacobi rotations and singular values for small matrices.
//!
//! The Hilbert spaces here are tiny (dimension 5 or 6) and the temporal-mode
//! kernels are a few hundred square, so a plain Jacobi sweep is accurate and
//! fast enough without pulling in a LAPACK backend.

use ndarray::Array2;
use num_complex::Complex64 as C64;

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// The input is symmetrized as `(A + A†)/2` first, so mildly non-Hermitian
/// round-off in the caller does not disturb convergence.
pub fn hermitian_eigenvalues(a: &Array2<C64>) -> Vec<f64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "hermitian_eigenvalues: matrix must be square");
    if n == 0 {
        return Vec::new();
    }
    let mut m = Array2::<C64>::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = 0.5 * (a[(i, j)] + a[(j, i)].conj());
        }
    }

    let scale: f64 = m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if scale == 0.0 {
        return vec![0.0; n];
    }
    let tol = 1e-30 * scale * scale;

    const MAX_SWEEPS: usize = 60;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = off_diagonal_sq(&m);
        if off <= tol {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = m[(p, q)];
                let abs_pq = apq.norm();
                if abs_pq == 0.0 {
                    continue;
                }
                // Phase rotation makes the (p,q) block real symmetric, then a
                // standard Jacobi rotation annihilates it.
                let phase = apq / abs_pq;
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                let tau = (aqq - app) / (2.0 * abs_pq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // Column update: col_p' = c col_p + s e^{-iφ} col_q,
                //                col_q' = -s col_p + c e^{-iφ} col_q.
                for i in 0..n {
                    let aip = m[(i, p)];
                    let aiq = m[(i, q)] * phase.conj();
                    m[(i, p)] = c * aip + s * aiq;
                    m[(i, q)] = -s * aip + c * aiq;
                }
                // Row update with the conjugate factors.
                for j in 0..n {
                    let apj = m[(p, j)];
                    let aqj = m[(q, j)] * phase;
                    m[(p, j)] = c * apj + s * aqj;
                    m[(q, j)] = -s * apj + c * aqj;
                }
                m[(p, q)] = C64::new(0.0, 0.0);
                m[(q, p)] = C64::new(0.0, 0.0);
                m[(p, p)] = C64::new(m[(p, p)].re, 0.0);
                m[(q, q)] = C64::new(m[(q, q)].re, 0.0);
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
    eig.sort_by(|a, b| a.partial_cmp(b).unwrap());
    eig
}

fn off_diagonal_sq(m: &Array2<C64>) -> f64 {
    let n = m.nrows();
    let mut off = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                off += m[(i, j)].norm_sqr();
            }
        }
    }
    off
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(a: &Array2<C64>) -> f64 {
    hermitian_eigenvalues(a)[0]
}

/// Singular values (ascending), via the eigenvalues of `A† A`.
pub fn singular_values(a: &Array2<C64>) -> Vec<f64> {
    let n = a.nrows();
    let mut ata = Array2::<C64>::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..n {
                acc += a[(k, i)].conj() * a[(k, j)];
            }
            ata[(i, j)] = acc;
        }
    }
    hermitian_eigenvalues(&ata)
        .into_iter()
        .map(|v| v.max(0.0).sqrt())
        .collect()
}

/// 2-norm condition number estimate `σ_max / σ_min`; infinite when singular.
pub fn condition_number(a: &Array2<C64>) -> f64 {
    let sv = singular_values(a);
    let smin = sv[0];
    let smax = sv[sv.len() - 1];
    if smin == 0.0 {
        f64::INFINITY
    } else {
        smax / smin
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(rng: &mut impl Rng, n: usize) -> Array2<C64> {
        let mut a = Array2::<C64>::zeros((n, n));
        for i in 0..n {
            a[(i, i)] = C64::new(rng.random_range(-2.0..2.0), 0.0);
            for j in i + 1..n {
                let z = C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
                a[(i, j)] = z;
                a[(j, i)] = z.conj();
            }
        }
        a
    }

    #[test]
    fn diagonal_matrix_eigenvalues() {
        let mut a = Array2::<C64>::zeros((3, 3));
        a[(0, 0)] = C64::new(3.0, 0.0);
        a[(1, 1)] = C64::new(-1.0, 0.0);
        a[(2, 2)] = C64::new(0.5, 0.0);
        let eig = hermitian_eigenvalues(&a);
        assert_eq!(eig, vec![-1.0, 0.5, 3.0]);
    }

    #[test]
    fn pauli_x_eigenvalues() {
        let mut a = Array2::<C64>::zeros((2, 2));
        a[(0, 1)] = C64::new(1.0, 0.0);
        a[(1, 0)] = C64::new(1.0, 0.0);
        let eig = hermitian_eigenvalues(&a);
        assert!((eig[0] + 1.0).abs() < 1e-14);
        assert!((eig[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn complex_offdiagonal_eigenvalues() {
        // [[1, i],[-i, 1]] has eigenvalues 0 and 2.
        let mut a = Array2::<C64>::zeros((2, 2));
        a[(0, 0)] = C64::new(1.0, 0.0);
        a[(1, 1)] = C64::new(1.0, 0.0);
        a[(0, 1)] = C64::new(0.0, 1.0);
        a[(1, 0)] = C64::new(0.0, -1.0);
        let eig = hermitian_eigenvalues(&a);
        assert!(eig[0].abs() < 1e-14);
        assert!((eig[1] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn trace_and_frobenius_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.random_range(2..8);
            let a = random_hermitian(&mut rng, n);
            let eig = hermitian_eigenvalues(&a);
            let tr: f64 = (0..n).map(|i| a[(i, i)].re).sum();
            let fr: f64 = a.iter().map(|z| z.norm_sqr()).sum();
            let sum: f64 = eig.iter().sum();
            let sq: f64 = eig.iter().map(|v| v * v).sum();
            assert!((sum - tr).abs() < 1e-10 * (1.0 + tr.abs()));
            assert!((sq - fr).abs() < 1e-10 * (1.0 + fr));
        }
    }

    #[test]
    fn gram_matrices_are_positive() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..20 {
            let n = rng.random_range(2..6);
            let a = random_hermitian(&mut rng, n);
            let mut g = Array2::<C64>::zeros((n, n));
            for i in 0..n {
                for j in 0..n {
                    let mut acc = C64::new(0.0, 0.0);
                    for k in 0..n {
                        acc += a[(k, i)].conj() * a[(k, j)];
                    }
                    g[(i, j)] = acc;
                }
            }
            assert!(min_eigenvalue(&g) > -1e-10);
        }
    }

    #[test]
    fn condition_number_of_identity() {
        let mut a = Array2::<C64>::zeros((4, 4));
        for i in 0..4 {
            a[(i, i)] = C64::new(1.0, 0.0);
        }
        assert!((condition_number(&a) - 1.0).abs() < 1e-12);
    }
}
