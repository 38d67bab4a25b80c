//! Laplacian spectra and Fiedler vectors.

mod jacobi;

pub use jacobi::{symmetric_eigen, Eigen, DEFAULT_TOLERANCE, MAX_SWEEPS};

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{EdgeInsertion, GraphError, SimpleGraph};

/// Eigenvalues closer than this to the algebraic connectivity belong to its eigenspace.
pub const DEFAULT_MULTIPLICITY_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix rows have inconsistent lengths or exceed 64")]
    Shape,
    #[error("Jacobi failed to converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Dense row-major square matrix, at most 64 x 64.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn from_rows(rows: &[&[f64]]) -> Result<Self, SpectralError> {
        let n = rows.len();
        if n == 0 || n > 64 || rows.iter().any(|r| r.len() != n) {
            return Err(SpectralError::Shape);
        }
        Ok(SymmetricMatrix { n, data: rows.concat() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.n + c]
    }
}

pub fn laplacian(g: &SimpleGraph) -> SymmetricMatrix {
    let n = g.n();
    let mut data = vec![0.0; n * n];
    for v in 0..n {
        data[v * n + v] = g.degree(v) as f64;
    }
    for (a, b) in g.edges() {
        data[a * n + b] = -1.0;
        data[b * n + a] = -1.0;
    }
    SymmetricMatrix { n, data }
}

pub fn laplacian_eigen(g: &SimpleGraph) -> Result<Eigen, SpectralError> {
    symmetric_eigen(&laplacian(g), DEFAULT_TOLERANCE)
}

/// Second-smallest Laplacian eigenvalue.
pub fn algebraic_connectivity(g: &SimpleGraph) -> Result<f64, SpectralError> {
    if g.n() < 2 {
        return Err(GraphError::TooSmall(2).into());
    }
    Ok(laplacian_eigen(g)?.values[1])
}

/// Eigendecomposition of `L(G)` plus the eigenspace of its algebraic connectivity.
#[derive(Debug, Clone)]
pub struct SpectralData {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<f64>>,
    pub alpha: f64,
    /// Orthonormal basis of the eigenspace of `alpha`.
    pub fiedler_basis: Vec<Vec<f64>>,
}

impl SpectralData {
    pub fn new(g: &SimpleGraph, mult_tol: f64) -> Result<Self, SpectralError> {
        if g.n() < 2 {
            return Err(GraphError::TooSmall(2).into());
        }
        if !g.is_connected() {
            return Err(GraphError::Disconnected.into());
        }
        let Eigen { values, vectors, .. } = laplacian_eigen(g)?;
        let alpha = values[1];
        let basis = values
            .iter()
            .zip(&vectors)
            .skip(1)
            .filter(|(&lambda, _)| (lambda - alpha).abs() <= mult_tol)
            .map(|(_, v)| v.clone())
            .collect();
        Ok(SpectralData {
            eigenvalues: values,
            eigenvectors: vectors,
            alpha,
            fiedler_basis: orthonormalize(basis),
        })
    }

    pub fn multiplicity(&self) -> usize {
        self.fiedler_basis.len()
    }

    /// Largest `|x_i - x_j|` over all unit vectors `x` of the Fiedler eigenspace.
    ///
    /// That maximum is the norm of the projection of `e_i - e_j` onto the
    /// eigenspace, so it does not depend on which orthonormal basis the
    /// solver returned. For a simple eigenvalue it is `|v_i - v_j|`.
    pub fn fiedler_distance(&self, i: usize, j: usize) -> f64 {
        if self.fiedler_basis.len() == 1 {
            let v = &self.fiedler_basis[0];
            return (v[i] - v[j]).abs();
        }
        self.fiedler_basis.iter().map(|v| (v[i] - v[j]).powi(2)).sum::<f64>().sqrt()
    }

    /// Largest `|v_i - v_j|` over the computed basis vectors only.
    pub fn basis_max_distance(&self, i: usize, j: usize) -> f64 {
        self.fiedler_basis.iter().map(|v| (v[i] - v[j]).abs()).fold(0.0, f64::max)
    }
}

/// Modified Gram-Schmidt; drops vectors that are numerically dependent.
fn orthonormalize(vectors: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(vectors.len());
    for mut v in vectors {
        for u in &out {
            let dot: f64 = v.iter().zip(u).map(|(a, b)| a * b).sum();
            v.iter_mut().zip(u).for_each(|(a, b)| *a -= dot * b);
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-6 {
            v.iter_mut().for_each(|x| *x /= norm);
            out.push(v);
        }
    }
    out
}

pub fn fiedler_basis(g: &SimpleGraph, mult_tol: f64) -> Result<Vec<Vec<f64>>, SpectralError> {
    Ok(SpectralData::new(g, mult_tol)?.fiedler_basis)
}

pub fn fiedler_distance(g: &SimpleGraph, i: usize, j: usize) -> Result<f64, SpectralError> {
    for index in [i, j] {
        if index >= g.n() {
            return Err(GraphError::IndexOutOfRange { index, n: g.n() }.into());
        }
    }
    Ok(SpectralData::new(g, DEFAULT_MULTIPLICITY_TOLERANCE)?.fiedler_distance(i, j))
}

/// Algebraic connectivity of `g + e`.
pub fn insertion_alpha(g: &SimpleGraph, e: EdgeInsertion) -> Result<f64, SpectralError> {
    algebraic_connectivity(&g.insert_edge(e)?)
}

/// One eigenvalue per line, for debugging dumps.
pub fn spectrum_csv(values: &[f64]) -> String {
    let mut s = String::from("eigenvalue\n");
    for v in values {
        let _ = writeln!(s, "{v:.17e}");
    }
    s
}
