use std::fmt;
use std::ops::{Add, Mul, Sub};

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense square complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<Complex64>);

const HERMITIAN_TOL: f64 = 1e-10;

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix(DMatrix::zeros(dim, dim))
    }

    pub fn identity(dim: usize) -> Self {
        ComplexMatrix(DMatrix::identity(dim, dim))
    }

    /// Row-major entries; panics unless `entries.len() == dim²`.
    pub fn from_row_major(dim: usize, entries: &[Complex64]) -> Self {
        assert_eq!(entries.len(), dim * dim, "expected {dim}x{dim} entries");
        ComplexMatrix(DMatrix::from_row_slice(dim, dim, entries))
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> Complex64) -> Self {
        ComplexMatrix(DMatrix::from_fn(dim, dim, f))
    }

    pub fn from_inner(inner: DMatrix<Complex64>) -> Self {
        assert!(inner.is_square(), "matrix must be square");
        ComplexMatrix(inner)
    }

    pub fn inner(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0[(row, col)]
    }

    pub fn scale(&self, by: Complex64) -> Self {
        ComplexMatrix(&self.0 * by)
    }

    pub fn adjoint(&self) -> Self {
        ComplexMatrix(self.0.adjoint())
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn kron(&self, other: &Self) -> Self {
        ComplexMatrix(self.0.kronecker(&other.0))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self * other - other * self
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self * other + other * self
    }

    pub fn pow(&self, exponent: u64) -> Self {
        let mut result = ComplexMatrix::identity(self.dim());
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn hermitian_defect(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn unitarity_defect(&self) -> f64 {
        (&self.adjoint() * self).max_abs_diff(&ComplexMatrix::identity(self.dim()))
    }

    pub fn check_hermitian(&self) -> Result<()> {
        let defect = self.hermitian_defect();
        if defect <= HERMITIAN_TOL {
            Ok(())
        } else {
            Err(Error::NotHermitian(defect))
        }
    }

    /// Largest singular value.
    pub fn operator_norm(&self) -> f64 {
        self.0.clone().singular_values().iter().copied().fold(0.0, f64::max)
    }

    /// Operator-norm distance `‖self − other‖`.
    pub fn distance(&self, other: &Self) -> f64 {
        (self - other).operator_norm()
    }

    /// `min_φ ‖self − e^{iφ} other‖`.
    ///
    /// Starts from the phase aligning the traces, then refines by golden
    /// section over a quarter turn either side.
    pub fn phase_invariant_distance(&self, other: &Self) -> f64 {
        let overlap = (&other.adjoint() * self).trace();
        let start = if overlap.norm() > 0.0 { overlap.arg() } else { 0.0 };
        let at = |phi: f64| self.distance(&other.scale(Complex64::from_polar(1.0, phi)));
        let ratio = (5f64.sqrt() - 1.0) / 2.0;
        let (mut lo, mut hi) = (start - std::f64::consts::FRAC_PI_4, start + std::f64::consts::FRAC_PI_4);
        let mut best = at(start);
        for _ in 0..40 {
            let a = hi - ratio * (hi - lo);
            let b = lo + ratio * (hi - lo);
            let (fa, fb) = (at(a), at(b));
            best = best.min(fa).min(fb);
            if fa < fb {
                hi = b;
            } else {
                lo = a;
            }
        }
        best
    }

    /// `exp(iτH)` for Hermitian `H` via eigendecomposition.
    pub fn expm_hermitian(&self, tau: f64) -> Result<Self> {
        self.check_hermitian()?;
        // Symmetrize so the solver sees an exactly Hermitian input.
        let h = (&self.0 + self.0.adjoint()) * Complex64::new(0.5, 0.0);
        let eig = SymmetricEigen::new(h);
        let phases = DMatrix::from_diagonal(&eig.eigenvalues.map(|lambda| Complex64::from_polar(1.0, tau * lambda)));
        let v = &eig.eigenvectors;
        Ok(ComplexMatrix(v * phases * v.adjoint()))
    }

    /// Writes one row per line, entries `re,im` separated by spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in 0..self.dim() {
            let row: Vec<String> = (0..self.dim())
                .map(|c| {
                    let z = self.get(r, c);
                    format!("{:?},{:?}", z.re, z.im)
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Inverse of [`Self::to_text`]; blank lines and `#` comments are skipped.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut rows = 0;
        let mut width = None;
        for (line_no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut count = 0;
            for (i, token) in line.split_whitespace().enumerate() {
                let bad = |message: &str| Error::Parse {
                    column: i + 1,
                    message: format!("line {}: {message} in `{token}`", line_no + 1),
                };
                let (re, im) = token.split_once(',').ok_or_else(|| bad("expected re,im"))?;
                let re: f64 = re.parse().map_err(|_| bad("bad real part"))?;
                let im: f64 = im.parse().map_err(|_| bad("bad imaginary part"))?;
                entries.push(Complex64::new(re, im));
                count += 1;
            }
            match width {
                None => width = Some(count),
                Some(w) if w != count => {
                    return Err(Error::DimensionMismatch {
                        expected: w,
                        actual: count,
                    })
                }
                _ => {}
            }
            rows += 1;
        }
        let width = width.unwrap_or(0);
        if rows != width {
            return Err(Error::DimensionMismatch {
                expected: width,
                actual: rows,
            });
        }
        Ok(ComplexMatrix::from_row_major(rows, &entries))
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 + &rhs.0)
    }
}

impl Add for ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(self.0 + rhs.0)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 - &rhs.0)
    }
}

impl Sub for ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(self.0 - rhs.0)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 * &rhs.0)
    }
}

impl Mul for ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(self.0 * rhs.0)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexMatrix {}x{}\n{}", self.dim(), self.dim(), self.to_text())
    }
}
