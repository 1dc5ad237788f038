//! Gate-level constructions on top of the hermitized basis `ẽ_I`.
//!
//! Every basis gate has the closed form `exp(iτẽ_I) = cos τ + i sin τ ẽ_I`
//! because `ẽ_I² = 𝟙`. The angle convention is `+i` throughout.

mod gate;
mod power;

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;

pub use gate::{ErrorMetric, Gate, GateSequence};
pub use power::{brute_force_power, irrational_power, reduced_angle, PowerResult, DEFAULT_CAP};

use crate::clifford::{labels_commute, BasisLabel, ScaledElement};
use crate::closure::{close, GeneratorSet};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matrix::{
    decompose, expm_hermitian, pauli_factorization, reconstruct, represent_hermitized, ComplexMatrix, Pauli,
    PauliFactorization,
};

/// `Σ α_I ẽ_I` on `qubits` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientVector {
    pub qubits: usize,
    pub coeffs: BTreeMap<BasisLabel, f64>,
}

impl CoefficientVector {
    pub fn new(qubits: usize, coeffs: BTreeMap<BasisLabel, f64>) -> Result<Self> {
        for label in coeffs.keys() {
            label.check_range(2 * qubits)?;
        }
        Ok(CoefficientVector { qubits, coeffs })
    }

    pub fn hamiltonian(&self) -> ComplexMatrix {
        reconstruct(&self.coeffs, self.qubits).expect("labels range checked")
    }

    pub fn squared_norm(&self) -> f64 {
        self.coeffs.values().map(|a| a * a).sum()
    }
}

/// `exp(iτẽ_I)` in closed form.
pub fn basis_gate(label: BasisLabel, angle: f64, qubits: usize) -> Result<Gate> {
    Gate::new(label, angle, qubits)
}

/// Three gates whose product is exactly `exp(−τ ẽ_I ẽ_J)`.
///
/// For anticommuting `ẽ_I`, `ẽ_J`, conjugating by a quarter-angle rotation
/// turns `ẽ_J` into `i ẽ_I ẽ_J`:
/// `exp(iπ/4 ẽ_I) exp(iτ ẽ_J) exp(−iπ/4 ẽ_I) = exp(iτ · iẽ_Iẽ_J)`.
pub fn commutator_gate(i: BasisLabel, j: BasisLabel, tau: f64, qubits: usize) -> Result<GateSequence> {
    if labels_commute(i, j) {
        return Err(Error::TrivialCommutator);
    }
    let seq = GateSequence::new(
        qubits,
        vec![
            Gate::new(i, FRAC_PI_4, qubits)?,
            Gate::new(j, tau, qubits)?,
            Gate::new(i, -FRAC_PI_4, qubits)?,
        ],
    );
    let target = commutator_target(i, j, tau, qubits)?;
    Ok(seq.measure(&target, ErrorMetric::PhaseSensitive))
}

/// `exp(−τ ẽ_I ẽ_J)` via eigendecomposition of the Hermitian `iẽ_Iẽ_J`.
pub fn commutator_target(i: BasisLabel, j: BasisLabel, tau: f64, qubits: usize) -> Result<ComplexMatrix> {
    let hi = represent_hermitized(i, qubits)?;
    let hj = represent_hermitized(j, qubits)?;
    (&hi * &hj).scale(Complex64::new(0.0, 1.0)).expm_hermitian(tau)
}

/// First-order product formula `(Π_I exp(iα_I/N ẽ_I))^N`, terms in canonical
/// label order, measured against `exp(i Σ α_I ẽ_I)`.
pub fn trotter(coeffs: &CoefficientVector, steps: usize, metric: ErrorMetric) -> Result<GateSequence> {
    if steps == 0 {
        return Err(Error::Precondition("the number of steps must be at least 1".into()));
    }
    let block: Vec<Gate> = coeffs
        .coeffs
        .iter()
        .filter(|(_, a)| **a != 0.0)
        .map(|(&label, &alpha)| Gate::new(label, alpha / steps as f64, coeffs.qubits))
        .collect::<Result<_>>()?;
    let gates = block.iter().copied().cycle().take(block.len() * steps).collect();
    let target = expm_hermitian(&coeffs.hamiltonian(), 1.0)?;
    Ok(GateSequence::new(coeffs.qubits, gates).measure(&target, metric))
}

/// Product-formula synthesis of `exp(iH)` for Hermitian `H`.
pub fn synthesize(h: &ComplexMatrix, steps: usize, qubits: usize, metric: ErrorMetric) -> Result<GateSequence> {
    let coeffs = CoefficientVector::new(qubits, decompose(h, qubits)?)?;
    if steps == 0 {
        return Err(Error::Precondition("the number of steps must be at least 1".into()));
    }
    let seq = trotter(&coeffs, steps, metric)?;
    let target = expm_hermitian(h, 1.0)?;
    Ok(seq.measure(&target, metric))
}

/// One element of the nearest-neighbour gate set.
#[derive(Clone, Debug, PartialEq)]
pub struct GateSetEntry {
    pub element: ScaledElement,
    pub factorization: PauliFactorization,
    pub support: BTreeSet<usize>,
}

impl GateSetEntry {
    /// At most two qubits, and adjacent when two.
    pub fn is_local(&self) -> bool {
        match self.support.iter().collect::<Vec<_>>()[..] {
            [] | [_] => true,
            [a, b] => b - a == 1,
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GateSetReport {
    pub qubits: usize,
    pub generators: GeneratorSet,
    pub entries: Vec<GateSetEntry>,
    pub closure_dimension: usize,
    pub universal: bool,
}

impl GateSetReport {
    pub fn all_local(&self) -> bool {
        self.entries.iter().all(GateSetEntry::is_local)
    }
}

/// The `2n+1` one- and two-qubit generators `{Γ_0, ẽ_{l−1,l}, ẽ_{012}}`
/// with their Pauli forms, locality and closure.
pub fn twoqubit_gateset(qubits: usize, exec: Exec) -> Result<GateSetReport> {
    if qubits < 2 {
        return Err(Error::Precondition(format!("need at least 2 qubits, got {qubits}")));
    }
    let generators = GeneratorSet::local_set(2 * qubits)?;
    let entries = generators
        .elements()
        .iter()
        .map(|&element| {
            let factorization = pauli_factorization(&element, qubits)?.expect("nonzero generator");
            Ok(GateSetEntry {
                element,
                support: factorization.support(),
                factorization,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let closure = close(&generators, exec);
    Ok(GateSetReport {
        qubits,
        closure_dimension: closure.dimension(),
        universal: closure.is_universal()?,
        generators,
        entries,
    })
}

/// Evaluations of `exp(iπ A)` for the three two-qubit exponents
/// `σ_α⊗𝟙`, `σ_α⊗𝟙 + 𝟙⊗σ_β` and `σ_α⊗σ_β`, next to `iσ_α⊗σ_β`.
#[derive(Clone, Debug)]
pub struct NonUniquenessReport {
    pub names: [&'static str; 4],
    pub matrices: [ComplexMatrix; 4],
    /// `distances[a][b]` in operator norm.
    pub distances: [[f64; 4]; 4],
}

impl NonUniquenessReport {
    /// Index pairs whose matrices agree to `tol`.
    pub fn coinciding(&self, tol: f64) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                if self.distances[a][b] < tol {
                    pairs.push((a, b));
                }
            }
        }
        pairs
    }
}

pub fn exponent_nonuniqueness(alpha: Pauli, beta: Pauli) -> Result<NonUniquenessReport> {
    let id = Pauli::I.matrix();
    let a1 = alpha.matrix().kron(&id);
    let b1 = id.kron(&beta.matrix());
    let ab = alpha.matrix().kron(&beta.matrix());
    let matrices = [
        expm_hermitian(&a1, PI)?,
        expm_hermitian(&(&a1 + &b1), PI)?,
        expm_hermitian(&ab, PI)?,
        ab.scale(Complex64::new(0.0, 1.0)),
    ];
    let mut distances = [[0.0; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            distances[a][b] = matrices[a].distance(&matrices[b]);
        }
    }
    Ok(NonUniquenessReport {
        names: [
            "exp(i*pi*(Sa x 1))",
            "exp(i*pi*(Sa x 1 + 1 x Sb))",
            "exp(i*pi*(Sa x Sb))",
            "i*(Sa x Sb)",
        ],
        matrices,
        distances,
    })
}
