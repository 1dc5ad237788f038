//! Dense matrix representation of `Cl(2n, C)` on `n` qubits.
//!
//! Generators follow the Jordan–Wigner pattern
//! `Γ_{2k} = 𝟙^{⊗(n−k−1)} ⊗ σ_x ⊗ σ_z^{⊗k}` and
//! `Γ_{2k+1} = 𝟙^{⊗(n−k−1)} ⊗ σ_y ⊗ σ_z^{⊗k}`, read left to right with the
//! leftmost factor on the highest qubit. Qubit `q` is bit `q` of a row index.

mod dense;
pub mod oracle;
mod pauli;

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;

pub use dense::ComplexMatrix;
pub use pauli::{Pauli, PauliFactorization};

use crate::clifford::{hermitian_phase, BasisLabel, ScaledElement};
use crate::error::{Error, Result};

/// Coefficients below this magnitude are dropped by [`decompose`].
pub const DECOMPOSE_DROP_TOL: f64 = 1e-13;

fn check_ambient(ambient: usize, qubits: usize) -> Result<()> {
    if ambient == 2 * qubits {
        Ok(())
    } else {
        Err(Error::AmbientMismatch {
            left: ambient,
            right: 2 * qubits,
        })
    }
}

/// `Γ_k` on `qubits` qubits as an explicit Kronecker product.
pub fn gamma(k: usize, qubits: usize) -> Result<ComplexMatrix> {
    if k >= 2 * qubits {
        return Err(Error::IndexOutOfRange {
            index: k,
            ambient: 2 * qubits,
        });
    }
    let site = k / 2;
    let head = if k.is_multiple_of(2) { Pauli::X } else { Pauli::Y };
    let mut m = ComplexMatrix::identity(1);
    for _ in 0..qubits - site - 1 {
        m = m.kron(&Pauli::I.matrix());
    }
    m = m.kron(&head.matrix());
    for _ in 0..site {
        m = m.kron(&Pauli::Z.matrix());
    }
    Ok(m)
}

/// Coefficient times the ordered product of generator matrices.
pub fn represent(elem: &ScaledElement, qubits: usize) -> Result<ComplexMatrix> {
    check_ambient(elem.ambient(), qubits)?;
    let dim = 1 << qubits;
    let Some(coeff) = elem.coefficient() else {
        return Ok(ComplexMatrix::zeros(dim));
    };
    let mut m = ComplexMatrix::identity(dim);
    for k in elem.label().indices() {
        m = &m * &gamma(k, qubits)?;
    }
    let (re, im) = coeff.to_complex();
    Ok(m.scale(Complex64::new(re, im)))
}

/// Matrix of the hermitized element `ẽ_label`.
pub fn represent_hermitized(label: BasisLabel, qubits: usize) -> Result<ComplexMatrix> {
    represent(&ScaledElement::hermitized(2 * qubits, label)?, qubits)
}

/// Generators built by the tensor recursion `Cl(2m+2) ≅ Cl(2m) ⊗ Cl(2)`:
/// `𝟙 ⊗ σ_x`, `𝟙 ⊗ σ_y`, then `e_k ⊗ ẽ_{01}` for the previous level.
pub fn recursive_construct(qubits: usize) -> Result<Vec<ComplexMatrix>> {
    if qubits == 0 {
        return Err(Error::Precondition("at least one qubit is needed".into()));
    }
    let sx = Pauli::X.matrix();
    let sy = Pauli::Y.matrix();
    // ẽ_{01} = i σ_x σ_y
    let e01 = (&sx * &sy).scale(Complex64::new(0.0, 1.0));
    let mut gens = vec![sx.clone(), sy.clone()];
    for _ in 1..qubits {
        let id = ComplexMatrix::identity(gens[0].dim());
        let mut next = vec![id.kron(&sx), id.kron(&sy)];
        next.extend(gens.iter().map(|g| g.kron(&e01)));
        gens = next;
    }
    Ok(gens)
}

/// `α_I = tr(H ẽ_I) / 2^n` for every label, dropping near-zero entries.
pub fn decompose(h: &ComplexMatrix, qubits: usize) -> Result<BTreeMap<BasisLabel, f64>> {
    let dim = 1usize << qubits;
    if h.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: h.dim(),
        });
    }
    h.check_hermitian()?;
    let mut coeffs = BTreeMap::new();
    for label in BasisLabel::all(2 * qubits) {
        let alpha = hermitized_overlap(h, label, qubits) / dim as f64;
        debug_assert!(alpha.im.abs() < 1e-9, "Hermitian input gave complex {alpha}");
        if alpha.re.abs() > DECOMPOSE_DROP_TOL {
            coeffs.insert(label, alpha.re);
        }
    }
    Ok(coeffs)
}

pub(crate) fn hermitized_factorization(label: BasisLabel, qubits: usize) -> PauliFactorization {
    let mut f = PauliFactorization::jordan_wigner(label, qubits);
    f.phase = f.phase * hermitian_phase(label.order());
    f
}

/// `tr(H ẽ_I)` in `O(2^n)` using the monomial structure of `ẽ_I`.
fn hermitized_overlap(h: &ComplexMatrix, label: BasisLabel, qubits: usize) -> Complex64 {
    let f = hermitized_factorization(label, qubits);
    (0..1usize << qubits)
        .map(|row| {
            let (col, value) = f.row_entry(row);
            value * h.get(col, row)
        })
        .sum()
}

/// `Σ α_I ẽ_I`.
pub fn reconstruct(coeffs: &BTreeMap<BasisLabel, f64>, qubits: usize) -> Result<ComplexMatrix> {
    let dim = 1usize << qubits;
    let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
    for (&label, &alpha) in coeffs {
        label.check_range(2 * qubits)?;
        let f = hermitized_factorization(label, qubits);
        for row in 0..dim {
            let (col, value) = f.row_entry(row);
            entries[row * dim + col] += value * alpha;
        }
    }
    Ok(ComplexMatrix::from_row_major(dim, &entries))
}

/// Qubits acted on nontrivially by `represent(elem)`.
pub fn pauli_support(elem: &ScaledElement, qubits: usize) -> Result<BTreeSet<usize>> {
    Ok(pauli_factorization(elem, qubits)?
        .map(|f| f.support())
        .unwrap_or_default())
}

/// Factorization read off the dense matrix; `None` for the zero element.
pub fn pauli_factorization(elem: &ScaledElement, qubits: usize) -> Result<Option<PauliFactorization>> {
    if elem.is_zero() {
        check_ambient(elem.ambient(), qubits)?;
        return Ok(None);
    }
    let m = represent(elem, qubits)?;
    let scale = elem.coefficient().map_or(1.0, |c| 2f64.powi(c.pow2));
    let f = PauliFactorization::from_matrix(&m.scale(Complex64::new(1.0 / scale, 0.0)), 1e-12)
        .expect("basis elements are Pauli strings");
    Ok(Some(f))
}

/// `exp(iτH)`; see [`ComplexMatrix::expm_hermitian`].
pub fn expm_hermitian(h: &ComplexMatrix, tau: f64) -> Result<ComplexMatrix> {
    h.expm_hermitian(tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{Coefficient, Phase};

    fn label(ix: &[usize]) -> BasisLabel {
        BasisLabel::from_indices(ix.iter().copied()).unwrap()
    }

    #[test]
    fn gamma_small_cases() {
        assert_eq!(gamma(0, 1).unwrap(), Pauli::X.matrix());
        assert_eq!(gamma(1, 1).unwrap(), Pauli::Y.matrix());
        assert_eq!(gamma(2, 2).unwrap(), Pauli::X.matrix().kron(&Pauli::Z.matrix()));
        assert_eq!(gamma(1, 2).unwrap(), Pauli::I.matrix().kron(&Pauli::Y.matrix()));
        assert!(gamma(4, 2).is_err());
    }

    #[test]
    fn gamma_matches_symbolic_factors() {
        for n in 1..=4 {
            for k in 0..2 * n {
                assert_eq!(pauli::gamma_factors(k, n).to_matrix(), gamma(k, n).unwrap());
            }
        }
    }

    #[test]
    fn hermitized_01_is_minus_sigma_z() {
        // i σ_x σ_y = i (i σ_z) = −σ_z under this convention.
        let m = represent_hermitized(label(&[0, 1]), 1).unwrap();
        assert_eq!(m, Pauli::Z.matrix().scale(Complex64::new(-1.0, 0.0)));
    }

    #[test]
    fn unit_label_is_identity() {
        let m = represent(&ScaledElement::unit(6), 3).unwrap();
        assert_eq!(m, ComplexMatrix::identity(8));
        assert!(represent(&ScaledElement::unit(6), 2).is_err());
    }

    #[test]
    fn coefficient_is_applied() {
        let e = ScaledElement::new(4, Coefficient::new(Phase::MINUS_I, 2), label(&[1, 3])).unwrap();
        let expected = (&gamma(1, 2).unwrap() * &gamma(3, 2).unwrap()).scale(Complex64::new(0.0, -4.0));
        assert_eq!(represent(&e, 2).unwrap(), expected);
    }

    #[test]
    fn decompose_single_element() {
        let h = represent_hermitized(label(&[0, 1, 2]), 2).unwrap();
        let coeffs = decompose(&h, 2).unwrap();
        assert_eq!(coeffs.len(), 1);
        assert!((coeffs[&label(&[0, 1, 2])] - 1.0).abs() < 1e-14);
        assert!(decompose(&ComplexMatrix::zeros(4), 2).unwrap().is_empty());
        assert!(decompose(&ComplexMatrix::zeros(8), 2).is_err());
    }

    #[test]
    fn jordan_wigner_matches_dense_products() {
        for l in BasisLabel::all(6) {
            let f = PauliFactorization::jordan_wigner(l, 3);
            assert_eq!(
                f.to_matrix(),
                represent(&ScaledElement::basis(6, l).unwrap(), 3).unwrap()
            );
        }
    }

    #[test]
    fn support_examples() {
        for n in 2..=4 {
            for k in 0..n {
                let e = ScaledElement::hermitized(2 * n, label(&[2 * k, 2 * k + 1])).unwrap();
                assert_eq!(pauli_support(&e, n).unwrap(), BTreeSet::from([k]));
                let f = pauli_factorization(&e, n).unwrap().unwrap();
                assert_eq!(f.factors[k], Pauli::Z);
            }
            for k in 0..n - 1 {
                let e = ScaledElement::hermitized(2 * n, label(&[2 * k + 1, 2 * k + 2])).unwrap();
                assert_eq!(pauli_support(&e, n).unwrap(), BTreeSet::from([k, k + 1]));
                let f = pauli_factorization(&e, n).unwrap().unwrap();
                assert_eq!((f.factors[k], f.factors[k + 1]), (Pauli::X, Pauli::X));
            }
            let e = ScaledElement::hermitized(2 * n, label(&[0, 1, 2])).unwrap();
            let f = pauli_factorization(&e, n).unwrap().unwrap();
            assert_eq!(f.support(), BTreeSet::from([1]));
            assert_eq!(f.factors[1], Pauli::X);
        }
    }

    #[test]
    fn recursive_base_case_is_pauli_pair() {
        let gens = recursive_construct(1).unwrap();
        assert_eq!(gens, vec![Pauli::X.matrix(), Pauli::Y.matrix()]);
        assert!(recursive_construct(0).is_err());
    }
}
