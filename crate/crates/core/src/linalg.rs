//! Dense symmetric eigendecompositions and the unitary propagators built
//! from them. Hamiltonians on the Dicke manifold are real symmetric (and
//! mostly tridiagonal), so exp(-iHt) is assembled from one `eigh` call and
//! reused across arbitrary time grids.

use ndarray::{Array1, Array2};
use ndarray_linalg::{Eigh, UPLO};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Eigendecomposition of a real symmetric matrix, H = V diag(w) V^T.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub eigenvalues: Array1<f64>,
    pub eigenvectors: Array2<f64>,
}

pub fn eigh_real(matrix: &Array2<f64>) -> Result<SymmetricEigen> {
    let (w, v) = matrix
        .eigh(UPLO::Lower)
        .map_err(|e| Error::Eigen(e.to_string()))?;
    Ok(SymmetricEigen {
        eigenvalues: w,
        eigenvectors: v,
    })
}

/// Unitary evolution exp(-iHt) for a real symmetric H.
#[derive(Debug, Clone)]
pub struct Propagator {
    eig: SymmetricEigen,
}

impl Propagator {
    pub fn new(hamiltonian: &Array2<f64>) -> Result<Self> {
        Ok(Self {
            eig: eigh_real(hamiltonian)?,
        })
    }

    pub fn from_eigen(eig: SymmetricEigen) -> Self {
        Self { eig }
    }

    pub fn eigenvalues(&self) -> &Array1<f64> {
        &self.eig.eigenvalues
    }

    pub fn eigenvectors(&self) -> &Array2<f64> {
        &self.eig.eigenvectors
    }

    /// Project a state onto the eigenbasis: c = V^T psi.
    pub fn to_eigenbasis(&self, state: &Array1<C64>) -> Array1<C64> {
        let v = &self.eig.eigenvectors;
        let n = v.nrows();
        let mut out = Array1::zeros(n);
        for k in 0..n {
            let mut acc = C64::new(0.0, 0.0);
            for i in 0..n {
                acc += state[i] * v[[i, k]];
            }
            out[k] = acc;
        }
        out
    }

    /// Reassemble psi(t) = V e^{-i w t} c from eigenbasis coefficients.
    pub fn from_eigenbasis_at(&self, coeffs: &Array1<C64>, t: f64) -> Array1<C64> {
        let v = &self.eig.eigenvectors;
        let w = &self.eig.eigenvalues;
        let n = v.nrows();
        let phased: Vec<C64> = (0..n)
            .map(|k| coeffs[k] * C64::from_polar(1.0, -w[k] * t))
            .collect();
        let mut out = Array1::zeros(n);
        for i in 0..n {
            let row = v.row(i);
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..n {
                acc += phased[k] * row[k];
            }
            out[i] = acc;
        }
        out
    }

    /// One-shot application of exp(-iHt).
    pub fn apply(&self, state: &Array1<C64>, t: f64) -> Array1<C64> {
        let c = self.to_eigenbasis(state);
        self.from_eigenbasis_at(&c, t)
    }
}

/// Expectation value <psi|A|psi> for a real symmetric dense A.
pub fn expectation_real(matrix: &Array2<f64>, state: &Array1<C64>) -> f64 {
    let n = matrix.nrows();
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..n {
        let mut row_acc = C64::new(0.0, 0.0);
        for j in 0..n {
            let a = matrix[[i, j]];
            if a != 0.0 {
                row_acc += state[j] * a;
            }
        }
        acc += state[i].conj() * row_acc;
    }
    acc.re
}
