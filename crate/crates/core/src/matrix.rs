//! Finite sections of operators on `H²` and the dense singular-value kernels
//! used as a numerical oracle for the symbol-level spectral theory.
//!
//! Every operator is compressed onto `span{e_0, …, e_{n−1}}` (top-left
//! corner of its matrix). Entry `(i, j)` is `⟨T e_j, e_i⟩`.

use faer::Mat;
use num_complex::Complex64;
use thiserror::Error;

use crate::symbol::{FourierSymbol, RationalRotation};

/// Largest truncation dimension accepted by the builders.
pub const MAX_DIMENSION: usize = 8192;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MatrixError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("dimension {n} exceeds the cap of {max}")]
    DimensionTooLarge { n: usize, max: usize },
    #[error("|λ| = {0} exceeds 1")]
    LambdaOutsideDisc(f64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("singular value decomposition did not converge")]
    SvdFailed,
}

fn check_dimension(n: usize) -> Result<(), MatrixError> {
    match n {
        0 => Err(MatrixError::ZeroDimension),
        n if n > MAX_DIMENSION => Err(MatrixError::DimensionTooLarge { n, max: MAX_DIMENSION }),
        _ => Ok(()),
    }
}

/// An `n×n` complex matrix, stored row-major.
#[derive(Clone, PartialEq)]
pub struct DenseOperator {
    n: usize,
    data: Vec<Complex64>,
}

impl std::fmt::Debug for DenseOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DenseOperator({}×{})", self.n, self.n)
    }
}

impl DenseOperator {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Result<Self, MatrixError> {
        check_dimension(n)?;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Ok(Self { n, data })
    }

    pub fn identity(n: usize) -> Result<Self, MatrixError> {
        Self::from_fn(n, |i, j| if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) })
    }

    pub fn diagonal(values: &[Complex64]) -> Result<Self, MatrixError> {
        Self::from_fn(values.len(), |i, j| if i == j { values[i] } else { Complex64::new(0.0, 0.0) })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[Complex64] {
        &self.data[row * self.n..(row + 1) * self.n]
    }

    pub fn adjoint(&self) -> Self {
        let n = self.n;
        Self::from_fn(n, |i, j| self.get(j, i).conj()).expect("same dimension")
    }

    /// Matrix product. Zero entries of `self` are skipped, so banded and
    /// triangular factors multiply in `O(n²·bandwidth)`.
    pub fn matmul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.n != rhs.n {
            return Err(MatrixError::DimensionMismatch(self.n, rhs.n));
        }
        let n = self.n;
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            let out = &mut data[i * n..(i + 1) * n];
            for (k, &a) in self.row(i).iter().enumerate() {
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for (o, &b) in out.iter_mut().zip(rhs.row(k)) {
                    *o += a * b;
                }
            }
        }
        Ok(Self { n, data })
    }

    pub fn pow(&self, k: u32) -> Result<Self, MatrixError> {
        let mut acc = Self::identity(self.n)?;
        for _ in 0..k {
            acc = self.matmul(&acc)?;
        }
        Ok(acc)
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64, MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::DimensionMismatch(self.n, other.n));
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// `A − μI`.
    pub fn shifted(&self, mu: Complex64) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out.data[i * self.n + i] -= mu;
        }
        out
    }

    /// Rows and columns `start..start+len`.
    pub fn submatrix(&self, start: usize, len: usize) -> Result<Self, MatrixError> {
        Self::from_fn(len, |i, j| self.get(start + i, start + j))
    }

    fn to_faer(&self) -> Mat<Complex64> {
        Mat::from_fn(self.n, self.n, |i, j| self.get(i, j))
    }

    /// All singular values, largest first.
    pub fn singular_values(&self) -> Result<Vec<f64>, MatrixError> {
        let mut s = self.to_faer().singular_values().map_err(|_| MatrixError::SvdFailed)?;
        s.sort_by(|a, b| b.total_cmp(a));
        Ok(s)
    }

    /// Operator norm, i.e. the largest singular value.
    pub fn op_norm(&self) -> Result<f64, MatrixError> {
        Ok(self.singular_values()?[0])
    }

    /// `σ_min(A − μI)`, the finite-section proxy for the resolvent norm.
    pub fn smallest_singular(&self, mu: Complex64) -> Result<f64, MatrixError> {
        let s = self.shifted(mu).singular_values()?;
        Ok(*s.last().expect("dimension ≥ 1"))
    }
}

/// `T_{λ,φ}` truncated to `n×n`: entry `(i, j)` is `λ^{min(i,j)} a_{i−j}`.
pub fn build_lambda_toeplitz(s: &FourierSymbol, r: &RationalRotation, n: usize) -> Result<DenseOperator, MatrixError> {
    DenseOperator::from_fn(n, |i, j| {
        let a = s.coeff(i as i64 - j as i64);
        if a.re == 0.0 && a.im == 0.0 {
            a
        } else {
            r.power(i.min(j) as i64) * a
        }
    })
}

/// Same as [`build_lambda_toeplitz`] for an arbitrary `|λ| ≤ 1`.
pub fn build_lambda_toeplitz_with(s: &FourierSymbol, lambda: Complex64, n: usize) -> Result<DenseOperator, MatrixError> {
    if lambda.norm() > 1.0 + 1e-12 {
        return Err(MatrixError::LambdaOutsideDisc(lambda.norm()));
    }
    check_dimension(n)?;
    let mut powers = Vec::with_capacity(n);
    let mut acc = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        powers.push(acc);
        acc *= lambda;
    }
    DenseOperator::from_fn(n, |i, j| powers[i.min(j)] * s.coeff(i as i64 - j as i64))
}

/// Classical Toeplitz matrix `a_{i−j}`.
pub fn build_toeplitz(s: &FourierSymbol, n: usize) -> Result<DenseOperator, MatrixError> {
    DenseOperator::from_fn(n, |i, j| s.coeff(i as i64 - j as i64))
}

/// `U_λ = diag(1, λ, λ², …)`.
pub fn build_rotation_unitary(r: &RationalRotation, n: usize) -> Result<DenseOperator, MatrixError> {
    check_dimension(n)?;
    let diag: Vec<_> = (0..n).map(|k| r.power(k as i64)).collect();
    DenseOperator::diagonal(&diag)
}

/// Unilateral shift `S e_k = e_{k+1}`.
pub fn build_shift(n: usize) -> Result<DenseOperator, MatrixError> {
    DenseOperator::from_fn(n, |i, j| {
        if i == j + 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}
