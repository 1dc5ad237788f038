use std::collections::BTreeSet;
use std::fmt;

use num_complex::Complex64;

use super::dense::ComplexMatrix;
use crate::clifford::{BasisLabel, Phase};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    /// `self · other = i^m · result`.
    pub fn product(self, other: Pauli) -> (Phase, Pauli) {
        use Pauli::*;
        let phase = match (self, other) {
            (X, Y) | (Y, Z) | (Z, X) => Phase::I,
            (Y, X) | (Z, Y) | (X, Z) => Phase::MINUS_I,
            _ => Phase::ONE,
        };
        let (x1, z1) = self.bits();
        let (x2, z2) = other.bits();
        (phase, Pauli::from_bits(x1 ^ x2, z1 ^ z2))
    }

    pub fn matrix(self) -> ComplexMatrix {
        let o = Complex64::new(0.0, 0.0);
        let l = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let entries = match self {
            Pauli::I => [l, o, o, l],
            Pauli::X => [o, l, l, o],
            Pauli::Y => [o, -i, i, o],
            Pauli::Z => [l, o, o, -l],
        };
        ComplexMatrix::from_row_major(2, &entries)
    }

    pub fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// `phase · P_{n−1} ⊗ … ⊗ P_0`; `factors[q]` acts on qubit `q`, which is
/// bit `q` of the matrix row index (qubit 0 is the rightmost factor).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliFactorization {
    pub phase: Phase,
    pub factors: Vec<Pauli>,
}

impl PauliFactorization {
    pub fn identity(qubits: usize) -> Self {
        PauliFactorization {
            phase: Phase::ONE,
            factors: vec![Pauli::I; qubits],
        }
    }

    pub fn qubits(&self) -> usize {
        self.factors.len()
    }

    fn masks(&self) -> (usize, usize) {
        let mut x = 0;
        let mut z = 0;
        for (q, p) in self.factors.iter().enumerate() {
            let (xb, zb) = p.bits();
            x |= usize::from(xb) << q;
            z |= usize::from(zb) << q;
        }
        (x, z)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.qubits(), other.qubits(), "qubit count mismatch");
        let mut phase = self.phase * other.phase;
        let factors = self
            .factors
            .iter()
            .zip(&other.factors)
            .map(|(a, b)| {
                let (p, f) = a.product(*b);
                phase = phase * p;
                f
            })
            .collect();
        PauliFactorization { phase, factors }
    }

    /// Qubits carrying a non-identity factor.
    pub fn support(&self) -> BTreeSet<usize> {
        self.factors
            .iter()
            .enumerate()
            .filter(|(_, p)| **p != Pauli::I)
            .map(|(q, _)| q)
            .collect()
    }

    /// The nonzero entry in row `r` sits at column `r ^ x`; this is its value.
    pub(crate) fn row_entry(&self, row: usize) -> (usize, Complex64) {
        let (x, z) = self.masks();
        let ys = (x & z).count_ones() as u8;
        // Y contributes −i on |0⟩ and +i on |1⟩: (−i)·(−1)^bit, the sign
        // folded into the z parity below.
        let mut phase = self.phase * Phase::new(3 * ys);
        if (row & z).count_ones() % 2 == 1 {
            phase = phase.negate();
        }
        let (re, im) = phase.to_complex();
        (row ^ x, Complex64::new(re, im))
    }

    /// Dense matrix by Kronecker products of the per-qubit factors.
    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::identity(1);
        for p in self.factors.iter().rev() {
            m = m.kron(&p.matrix());
        }
        let (re, im) = self.phase.to_complex();
        m.scale(Complex64::new(re, im))
    }

    /// Recognizes `phase · ⊗P` in a dense `2^n × 2^n` matrix, to `tol`.
    pub fn from_matrix(m: &ComplexMatrix, tol: f64) -> Option<Self> {
        let dim = m.dim();
        if !dim.is_power_of_two() || dim == 0 {
            return None;
        }
        let qubits = dim.trailing_zeros() as usize;
        let x = (0..dim).find(|&c| m.get(0, c).norm() > tol)?;
        let base = m.get(0, x);
        let mut factors = Vec::with_capacity(qubits);
        for q in 0..qubits {
            let r = 1 << q;
            let ratio = m.get(r, r ^ x) / base;
            let z = if (ratio - 1.0).norm() < tol {
                false
            } else if (ratio + 1.0).norm() < tol {
                true
            } else {
                return None;
            };
            factors.push(Pauli::from_bits(x >> q & 1 == 1, z));
        }
        let ys = factors.iter().filter(|p| **p == Pauli::Y).count() as u8;
        // base = phase · (−i)^{#Y}
        let phase = [Phase::ONE, Phase::I, Phase::MINUS_ONE, Phase::MINUS_I]
            .into_iter()
            .find(|p| {
                let (re, im) = (*p * Phase::new(3 * ys)).to_complex();
                (base - Complex64::new(re, im)).norm() < tol
            })?;
        let candidate = PauliFactorization { phase, factors };
        (candidate.to_matrix().max_abs_diff(m) < tol).then_some(candidate)
    }

    /// Symbolic image of `Γ_label` under the gamma construction:
    /// `Γ_{2k} = X_k Z_{k−1} … Z_0`, `Γ_{2k+1} = Y_k Z_{k−1} … Z_0`.
    pub fn jordan_wigner(label: BasisLabel, qubits: usize) -> Self {
        let mut acc = PauliFactorization::identity(qubits);
        for k in label.indices() {
            acc = acc.mul(&gamma_factors(k, qubits));
        }
        acc
    }
}

pub(crate) fn gamma_factors(k: usize, qubits: usize) -> PauliFactorization {
    assert!(k < 2 * qubits, "generator {k} out of range for {qubits} qubits");
    let site = k / 2;
    let mut factors = vec![Pauli::I; qubits];
    for f in factors.iter_mut().take(site) {
        *f = Pauli::Z;
    }
    factors[site] = if k.is_multiple_of(2) { Pauli::X } else { Pauli::Y };
    PauliFactorization {
        phase: Phase::ONE,
        factors,
    }
}

impl fmt::Display for PauliFactorization {
    /// Highest qubit first, matching the Kronecker order: `-iXZI`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.phase.exponent() {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        })?;
        for p in self.factors.iter().rev() {
            write!(f, "{}", p.symbol())?;
        }
        Ok(())
    }
}
