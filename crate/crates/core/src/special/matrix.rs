//! Small dense complex matrices: eigendecomposition and matrix functions.
//!
//! Only diagonalizable matrices are supported. Eigenvalues come from the
//! complex Schur form; eigenvectors from back-substitution on its triangular
//! factor.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::mittag_leffler::{mittag_leffler, MlParams};
use crate::error::{invalid, Error, Result};

/// Complex square matrix. Row-major construction helpers are provided below.
pub type SquareMatrix = DMatrix<Complex64>;
/// Complex column vector.
pub type CVector = DVector<Complex64>;

/// Eigenbases with a condition number above this are rejected.
pub const EIGEN_CONDITION_CAP: f64 = 1e8;

/// Build a complex matrix from real rows.
pub fn real_matrix(rows: &[&[f64]]) -> SquareMatrix {
    let n = rows.len();
    DMatrix::from_fn(n, rows.first().map_or(0, |r| r.len()), |i, j| Complex64::new(rows[i][j], 0.0))
}

/// Diagonal matrix from complex entries.
pub fn diag_matrix(d: &[Complex64]) -> SquareMatrix {
    DMatrix::from_diagonal(&DVector::from_column_slice(d))
}

/// Checks that `a` is square, non-empty and finite.
pub fn check_square(a: &SquareMatrix) -> Result<()> {
    if a.nrows() == 0 || a.nrows() != a.ncols() {
        return Err(Error::DimensionMismatch(format!("expected a non-empty square matrix, got {}x{}", a.nrows(), a.ncols())));
    }
    if a.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(invalid("matrix has non-finite entries"));
    }
    Ok(())
}

/// Largest singular value.
pub fn spectral_norm(a: &SquareMatrix) -> f64 {
    if a.nrows() == 1 && a.ncols() == 1 {
        return a[(0, 0)].norm();
    }
    a.singular_values().iter().copied().fold(0.0, f64::max)
}

/// Complex Schur factors (Q, T) with A = Q T Q*. Structured inputs such as
/// circulants can stall the shifted QR iteration; those are retried after a
/// fixed orthogonal similarity that breaks the structure.
fn schur(a: &SquareMatrix) -> Result<(SquareMatrix, SquareMatrix)> {
    if let Some(s) = a.clone().try_schur(f64::EPSILON, 10_000) {
        return Ok(s.unpack());
    }
    let n = a.nrows();
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    let g = DMatrix::from_fn(n, n, |_, _| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        Complex64::new((state >> 11) as f64 / (1u64 << 53) as f64 - 0.5, 0.0)
    });
    let p = g.qr().q();
    let b = p.adjoint() * a * &p;
    let (z, t) = b.try_schur(f64::EPSILON, 10_000).ok_or(Error::EigenNonConvergence)?.unpack();
    Ok((p * z, t))
}

/// Eigenvalues via the complex Schur form.
pub fn eigenvalues(a: &SquareMatrix) -> Result<Vec<Complex64>> {
    check_square(a)?;
    if a.nrows() == 1 {
        return Ok(vec![a[(0, 0)]]);
    }
    let (_, t) = schur(a)?;
    Ok((0..a.nrows()).map(|i| t[(i, i)]).collect())
}

/// A = V diag(values) V⁻¹.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<Complex64>,
    pub vectors: SquareMatrix,
    pub inverse: SquareMatrix,
    /// ‖V‖₂ ‖V⁻¹‖₂.
    pub condition: f64,
}

impl Eigen {
    /// V diag(g(λ)) V⁻¹.
    pub fn apply<F>(&self, mut g: F) -> Result<SquareMatrix>
    where
        F: FnMut(Complex64) -> Result<Complex64>,
    {
        let mut scaled = self.vectors.clone();
        for (j, &lam) in self.values.iter().enumerate() {
            let gj = g(lam)?;
            let mut col = scaled.column_mut(j);
            col *= gj;
        }
        Ok(scaled * &self.inverse)
    }
}

/// Eigendecomposition of a diagonalizable matrix.
pub fn eigen_decomposition(a: &SquareMatrix) -> Result<Eigen> {
    check_square(a)?;
    let n = a.nrows();
    if n == 1 {
        let one = DMatrix::from_element(1, 1, Complex64::new(1.0, 0.0));
        return Ok(Eigen { values: vec![a[(0, 0)]], vectors: one.clone(), inverse: one, condition: 1.0 });
    }
    let (q, t) = schur(a)?;
    let scale = t.iter().map(|z| z.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    let tiny = 1e-13 * scale;

    let mut x = DMatrix::<Complex64>::zeros(n, n);
    for k in 0..n {
        let lam = t[(k, k)];
        x[(k, k)] = Complex64::new(1.0, 0.0);
        for i in (0..k).rev() {
            let mut num = Complex64::new(0.0, 0.0);
            for j in (i + 1)..=k {
                num += t[(i, j)] * x[(j, k)];
            }
            let den = t[(i, i)] - lam;
            if den.norm() <= tiny {
                if num.norm() <= 1e-10 * scale {
                    x[(i, k)] = Complex64::new(0.0, 0.0);
                } else {
                    return Err(Error::NotDiagonalizable(format!("defective eigenvalue {lam}")));
                }
            } else {
                x[(i, k)] = -num / den;
            }
        }
    }
    let mut vectors = q * x;
    for mut col in vectors.column_iter_mut() {
        let nrm = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in col.iter_mut() {
            *z /= nrm;
        }
    }
    let inverse = vectors
        .clone()
        .lu()
        .try_inverse()
        .ok_or_else(|| Error::NotDiagonalizable("singular eigenvector matrix".into()))?;
    let condition = spectral_norm(&vectors) * spectral_norm(&inverse);
    if !(condition.is_finite() && condition <= EIGEN_CONDITION_CAP) {
        return Err(Error::NotDiagonalizable(format!("eigenbasis condition number {condition:e} exceeds {EIGEN_CONDITION_CAP:e}")));
    }
    let values = (0..n).map(|i| t[(i, i)]).collect();
    Ok(Eigen { values, vectors, inverse, condition })
}

/// Continuous resolvent R_{α,β}(t) = t^{β−1} E_{α,β}(t^α A).
pub fn resolvent_matrix(alpha: f64, beta: f64, t: f64, a: &SquareMatrix) -> Result<SquareMatrix> {
    let p = MlParams::new(alpha, beta)?;
    if !(t.is_finite() && t > 0.0) {
        return Err(invalid(format!("t must be positive, got {t}")));
    }
    let eig = eigen_decomposition(a)?;
    let ta = t.powf(alpha);
    let tb = t.powf(beta - 1.0);
    eig.apply(|lam| Ok(mittag_leffler(&p, lam * ta)? * tb))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_matrix_gives_identity() {
        let a = SquareMatrix::zeros(3, 3);
        let r = resolvent_matrix(0.6, 1.0, 2.5, &a).unwrap();
        assert!((r - SquareMatrix::identity(3, 3)).norm() < 1e-15);
    }

    #[test]
    fn exponential_case() {
        let a = diag_matrix(&[c(-1.0, 0.0), c(-2.0, 0.0)]);
        let r = resolvent_matrix(1.0, 1.0, 1.0, &a).unwrap();
        assert!((r[(0, 0)].re - (-1.0f64).exp()).abs() < 1e-14);
        assert!((r[(1, 1)].re - (-2.0f64).exp()).abs() < 1e-14);
        assert!(r[(0, 1)].norm() < 1e-15);
    }

    #[test]
    fn jordan_block_rejected() {
        let a = real_matrix(&[&[1.0, 1.0], &[0.0, 1.0]]);
        assert!(matches!(eigen_decomposition(&a), Err(Error::NotDiagonalizable(_))));
    }

    #[test]
    fn reconstruction() {
        let a = real_matrix(&[&[-10.0, 10.0, 0.0], &[28.0, -1.0, 0.0], &[0.0, 0.0, -8.0 / 3.0]]);
        let e = eigen_decomposition(&a).unwrap();
        let back = e.apply(Ok).unwrap();
        assert!((back - &a).norm() < 1e-12 * a.norm());
    }

    #[test]
    fn non_square_rejected() {
        let a = DMatrix::<Complex64>::zeros(2, 3);
        assert!(matches!(check_square(&a), Err(Error::DimensionMismatch(_))));
    }
}
