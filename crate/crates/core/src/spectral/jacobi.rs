use super::{SpectralError, SymmetricMatrix};

/// Sweep cap for [`symmetric_eigen`].
pub const MAX_SWEEPS: usize = 100;

/// Default stopping threshold on the off-diagonal Frobenius norm.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Full eigendecomposition of a symmetric matrix, eigenvalues ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigen {
    pub values: Vec<f64>,
    /// `vectors[k]` is the unit eigenvector paired with `values[k]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += 2.0 * a[p * n + q] * a[p * n + q];
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi: sweeps the strict upper triangle in row-major order,
/// annihilating each `a[p][q]` with a plane rotation, until the off-diagonal
/// Frobenius norm drops to `tol`.
pub fn symmetric_eigen(matrix: &SymmetricMatrix, tol: f64) -> Result<Eigen, SpectralError> {
    let n = matrix.n();
    let mut a = matrix.data().to_vec();
    for p in 0..n {
        for q in p + 1..n {
            if (a[p * n + q] - a[q * n + p]).abs() > 1e-12 {
                return Err(SpectralError::NotSymmetric { row: p, col: q });
            }
        }
    }
    let mut v = vec![0.0; n * n];
    for p in 0..n {
        v[p * n + p] = 1.0;
    }

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off <= tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(SpectralError::NoConvergence { sweeps, residual: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                // Elements below rounding level of both diagonal entries are dropped.
                if sweeps > 4 && app.abs() + 100.0 * apq.abs() == app.abs() && aqq.abs() + 100.0 * apq.abs() == aqq.abs() {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[x * n + x].total_cmp(&a[y * n + y]));
    let values = order.iter().map(|&k| a[k * n + k]).collect();
    let vectors = order.iter().map(|&k| (0..n).map(|r| v[r * n + k]).collect()).collect();
    Ok(Eigen { values, vectors, sweeps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eig(rows: &[&[f64]]) -> Eigen {
        symmetric_eigen(&SymmetricMatrix::from_rows(rows).unwrap(), DEFAULT_TOLERANCE).unwrap()
    }

    fn assert_close(got: &[f64], want: &[f64]) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-12, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn small_spectra() {
        // Characteristic polynomials: P2 -> x(x-2); P3 -> x(x-1)(x-3).
        assert_close(&eig(&[&[1.0, -1.0], &[-1.0, 1.0]]).values, &[0.0, 2.0]);
        assert_close(
            &eig(&[&[2.0, -1.0, -1.0], &[-1.0, 2.0, -1.0], &[-1.0, -1.0, 2.0]]).values,
            &[0.0, 3.0, 3.0],
        );
        assert_close(
            &eig(&[&[1.0, -1.0, 0.0], &[-1.0, 2.0, -1.0], &[0.0, -1.0, 1.0]]).values,
            &[0.0, 1.0, 3.0],
        );
    }

    #[test]
    fn diagonal_input_needs_no_sweep() {
        let e = eig(&[&[3.0, 0.0], &[0.0, -1.0]]);
        assert_eq!(e.sweeps, 0);
        assert_eq!(e.values, vec![-1.0, 3.0]);
        assert_eq!(e.vectors[0], vec![0.0, 1.0]);
    }

    #[test]
    fn rejects_asymmetric() {
        let m = SymmetricMatrix::from_rows(&[&[1.0, 2.0], &[0.0, 1.0]]).unwrap();
        assert!(matches!(symmetric_eigen(&m, DEFAULT_TOLERANCE), Err(SpectralError::NotSymmetric { row: 0, col: 1 })));
    }

    #[test]
    fn deterministic() {
        let rows: Vec<Vec<f64>> = (0..9)
            .map(|i| (0..9).map(|j| ((i * 7 + j * 7) % 11) as f64 - 5.0 + if i == j { 3.0 } else { 0.0 }).collect())
            .collect();
        let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
        assert_eq!(eig(&refs), eig(&refs));
    }

    #[test]
    fn reconstructs_dense_matrix() {
        let rows: Vec<Vec<f64>> = (0..12)
            .map(|i| (0..12).map(|j| 1.0 / (1.0 + i as f64 + j as f64)).collect())
            .collect();
        let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
        let e = eig(&refs);
        let mut err = 0.0f64;
        for (r, row) in rows.iter().enumerate() {
            for (c, &a) in row.iter().enumerate() {
                let s: f64 = (0..12).map(|k| e.values[k] * e.vectors[k][r] * e.vectors[k][c]).sum();
                err += (s - a).powi(2);
            }
        }
        assert!(err.sqrt() < 1e-12);
    }
}
