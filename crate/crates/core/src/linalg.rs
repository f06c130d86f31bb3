//! Dense complex matrices and a Hermitian eigensolver.
//!
//! Storage is a row-major `Vec<Complex64>`; everything is sized for the 3x3
//! operators and 9x9 two-qutrit density matrices used by the rest of the
//! crate. Matrices are immutable values: every operation returns a fresh
//! matrix, which keeps multi-stage pipelines free of aliasing surprises.

use crate::tol;
use crate::{Error, Result};

pub use num_complex::Complex64;

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Build from row-major entries; the entry count must match `rows * cols`
    /// and both dimensions must be positive.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::BadShape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Build by evaluating `f(row, col)` at every position.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Complex64::new(0.0, 0.0))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0)
        })
    }

    pub fn from_diag(diag: &[Complex64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                diag[i]
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let as_complex: Vec<Complex64> = diag.iter().map(|&d| Complex64::new(d, 0.0)).collect();
        Self::from_diag(&as_complex)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.cols + j]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Standard matrix product; the inner dimensions must agree.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: format!("{} rows on the right factor", self.cols),
                found: format!("{}x{}", other.rows, other.cols),
            });
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.entries[i * self.cols + k];
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[i * other.cols + j] += aik * other.entries[k * other.cols + j];
                }
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            entries: out,
        })
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    /// Kronecker product: block (i, j) of the result is `self[i, j] * other`.
    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self.get(i / other.rows, j / other.cols) * other.get(i % other.rows, j % other.cols)
        })
    }

    /// Entrywise sum. Panics on shape mismatch (programmer error).
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in add"
        );
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Entrywise difference. Panics on shape mismatch (programmer error).
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in sub"
        );
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * factor).collect(),
        }
    }

    /// Sum of the diagonal; the matrix must be square.
    pub fn trace(&self) -> Result<Complex64> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    /// Max-norm: the largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn fro_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `max |A[i,j] - conj(A[j,i])|` over all entries; zero for an exactly
    /// Hermitian matrix. Returns infinity for non-square input.
    pub fn hermiticity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    /// The Hermitian part (A + A^dagger) / 2. For square input only.
    pub fn hermitian_part(&self) -> Self {
        assert!(self.is_square(), "hermitian_part requires a square matrix");
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self.get(i, j) + self.get(j, i).conj()) * 0.5
        })
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.cols + j]
    }
}

/// Transpose on the second qutrit of a 9x9 two-qutrit matrix: with composite
/// indices (j, k) = 3j + k, output[(j,k),(j',k')] = input[(j,k'),(j',k)].
pub fn partial_transpose_b(rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    if rho.rows() != 9 || rho.cols() != 9 {
        return Err(Error::DimensionMismatch {
            expected: "9x9".to_string(),
            found: format!("{}x{}", rho.rows(), rho.cols()),
        });
    }
    Ok(ComplexMatrix::from_fn(9, 9, |r, c| {
        let (j, k) = (r / 3, r % 3);
        let (jp, kp) = (c / 3, c % 3);
        rho.get(3 * j + kp, 3 * jp + k)
    }))
}

/// Full spectrum of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigenResult {
    /// Eigenvalues in ascending order.
    pub eigenvalues: Vec<f64>,
    /// Unit-norm eigenvectors as columns, ordered like `eigenvalues`.
    pub eigenvectors: ComplexMatrix,
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// The input must be square and Hermitian within [`tol::HERMITICITY`]
/// (max-norm, absolute); the iteration runs on the Hermitian part and stops
/// when the off-diagonal Frobenius norm drops below
/// [`tol::JACOBI_REL`] * ||A||_F, with a cap of [`tol::JACOBI_MAX_SWEEPS`]
/// sweeps.
pub fn hermitian_eigen(a: &ComplexMatrix) -> Result<HermitianEigenResult> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let deviation = a.hermiticity_deviation();
    if deviation > tol::HERMITICITY {
        return Err(Error::NotHermitian { deviation });
    }

    let n = a.rows();
    let sym = a.hermitian_part();
    let mut m: Vec<Complex64> = sym.entries.clone();
    let mut v: Vec<Complex64> = ComplexMatrix::identity(n).entries;

    let norm = sym.fro_norm();
    let target = tol::JACOBI_REL * norm;
    let mut sweeps = 0;
    while off_diagonal_norm(&m, n) > target {
        if sweeps == tol::JACOBI_MAX_SWEEPS {
            return Err(Error::EigenNoConvergence {
                sweeps,
                off_norm: off_diagonal_norm(&m, n),
            });
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                jacobi_rotate(&mut m, &mut v, n, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| m[i * n + i].re).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |r, c| v[r * n + order[c]]);
    Ok(HermitianEigenResult {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm(m: &[Complex64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += m[i * n + j].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// One complex Jacobi rotation annihilating the (p, q) entry.
///
/// The unitary is diag-phase times a real Givens rotation: with
/// a[p][q] = r e^{i phi}, the plane transform has entries
/// T[p][p] = c, T[p][q] = s, T[q][p] = -s e^{-i phi}, T[q][q] = c e^{-i phi},
/// and the update is A <- T^dagger A T, V <- V T.
fn jacobi_rotate(m: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = m[p * n + q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r; // e^{i phi}
    let w = phase.conj(); // e^{-i phi}

    let app = m[p * n + p].re;
    let aqq = m[q * n + q].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta >= 0.0 {
        1.0 / (theta + (theta * theta + 1.0).sqrt())
    } else {
        -1.0 / (-theta + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // columns: B = A T
    for j in 0..n {
        let ajp = m[j * n + p];
        let ajq = m[j * n + q];
        m[j * n + p] = c * ajp - s * w * ajq;
        m[j * n + q] = s * ajp + c * w * ajq;
    }
    // rows: A' = T^dagger B
    for j in 0..n {
        let bpj = m[p * n + j];
        let bqj = m[q * n + j];
        m[p * n + j] = c * bpj - s * phase * bqj;
        m[q * n + j] = s * bpj + c * phase * bqj;
    }
    // eigenvector accumulation: V <- V T
    for j in 0..n {
        let vjp = v[j * n + p];
        let vjq = v[j * n + q];
        v[j * n + p] = c * vjp - s * w * vjq;
        v[j * n + q] = s * vjp + c * w * vjq;
    }

    // the rotation zeroes (p, q) analytically; pin it and keep the diagonal real
    m[p * n + q] = Complex64::new(0.0, 0.0);
    m[q * n + p] = Complex64::new(0.0, 0.0);
    m[p * n + p] = Complex64::new(m[p * n + p].re, 0.0);
    m[q * n + q] = Complex64::new(m[q * n + q].re, 0.0);
}
