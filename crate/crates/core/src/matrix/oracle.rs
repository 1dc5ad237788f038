//! Brute-force checks of the symbolic algebra against dense matrices.

use std::collections::HashMap;

use num_complex::Complex64;

use super::{gamma, represent, represent_hermitized, ComplexMatrix};
use crate::clifford::{labels_commute, BasisLabel, ScaledElement};
use crate::closure::Certificate;
use crate::error::{Error, Result};
use crate::exec::Exec;

/// `max_{k,l} ‖{Γ_k, Γ_l} − 2δ_{kl}𝟙‖_max`.
pub fn clifford_relation_defect(qubits: usize) -> Result<f64> {
    let gammas = (0..2 * qubits).map(|k| gamma(k, qubits)).collect::<Result<Vec<_>>>()?;
    Ok(anticommutation_defect(&gammas))
}

/// Clifford-relation defect of an arbitrary list of matrices.
pub fn anticommutation_defect(gens: &[ComplexMatrix]) -> f64 {
    let dim = gens.first().map_or(1, ComplexMatrix::dim);
    let two = ComplexMatrix::identity(dim).scale(Complex64::new(2.0, 0.0));
    let zero = ComplexMatrix::zeros(dim);
    let mut worst = 0.0f64;
    for (k, a) in gens.iter().enumerate() {
        for (l, b) in gens.iter().enumerate() {
            let target = if k == l { &two } else { &zero };
            worst = worst.max(a.anticommutator(b).max_abs_diff(target));
        }
    }
    worst
}

fn hermitized_matrices(qubits: usize) -> Result<Vec<(BasisLabel, ComplexMatrix)>> {
    BasisLabel::all(2 * qubits)
        .into_iter()
        .map(|l| Ok((l, represent_hermitized(l, qubits)?)))
        .collect()
}

/// `max_{I,J} |tr(ẽ_I ẽ_J) − 2^n δ_{IJ}|`.
pub fn trace_orthogonality_defect(qubits: usize, exec: Exec) -> Result<f64> {
    let mats = hermitized_matrices(qubits)?;
    let dim = (1usize << qubits) as f64;
    let rows = exec.map(&mats, |(li, a)| {
        mats.iter()
            .map(|(lj, b)| {
                let expected = if li == lj { dim } else { 0.0 };
                ((a * b).trace() - expected).norm()
            })
            .fold(0.0, f64::max)
    });
    Ok(rows.into_iter().fold(0.0, f64::max))
}

/// Worst Hermiticity defect and worst `‖ẽ_I² − 𝟙‖` over all labels.
pub fn hermitized_defects(qubits: usize) -> Result<(f64, f64)> {
    let id = ComplexMatrix::identity(1 << qubits);
    let mut herm = 0.0f64;
    let mut square = 0.0f64;
    for (_, m) in hermitized_matrices(qubits)? {
        herm = herm.max(m.hermitian_defect());
        square = square.max((&m * &m).max_abs_diff(&id));
    }
    Ok((herm, square))
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct HomomorphismReport {
    pub pairs: usize,
    pub product_defect: f64,
    pub commutator_defect: f64,
    /// Pairs where the commute predicate disagrees with the matrices.
    pub commute_mismatches: usize,
    /// Pairs where neither the commutator nor the anticommutator vanishes.
    pub dichotomy_failures: usize,
}

/// Exhaustive symbolic-vs-dense comparison over all label pairs.
pub fn homomorphism(qubits: usize, exec: Exec) -> Result<HomomorphismReport> {
    let ambient = 2 * qubits;
    let labels = BasisLabel::all(ambient);
    let basis: Vec<ScaledElement> = labels
        .iter()
        .map(|&l| ScaledElement::basis(ambient, l))
        .collect::<Result<_>>()?;
    let mats: Vec<ComplexMatrix> = basis.iter().map(|e| represent(e, qubits)).collect::<Result<_>>()?;
    let index: Vec<usize> = (0..basis.len()).collect();
    let rows = exec.map(&index, |&i| -> Result<HomomorphismReport> {
        let mut r = HomomorphismReport::default();
        for j in 0..basis.len() {
            let (a, b) = (&basis[i], &basis[j]);
            let (ma, mb) = (&mats[i], &mats[j]);
            let dense_product = ma * mb;
            let sym_product = represent(&a.product(b)?, qubits)?;
            r.product_defect = r.product_defect.max(sym_product.max_abs_diff(&dense_product));
            let dense_comm = ma.commutator(mb);
            let sym_comm = represent(&a.commutator(b)?, qubits)?;
            r.commutator_defect = r.commutator_defect.max(sym_comm.max_abs_diff(&dense_comm));
            let comm_zero = dense_comm.max_abs_diff(&ComplexMatrix::zeros(ma.dim())) < 1e-12;
            let anti_zero = ma.anticommutator(mb).max_abs_diff(&ComplexMatrix::zeros(ma.dim())) < 1e-12;
            if comm_zero != labels_commute(a.label(), b.label()) {
                r.commute_mismatches += 1;
            }
            if comm_zero == anti_zero {
                r.dichotomy_failures += 1;
            }
            r.pairs += 1;
        }
        Ok(r)
    });
    rows.into_iter().try_fold(HomomorphismReport::default(), |acc, r| {
        let r = r?;
        Ok(HomomorphismReport {
            pairs: acc.pairs + r.pairs,
            product_defect: acc.product_defect.max(r.product_defect),
            commutator_defect: acc.commutator_defect.max(r.commutator_defect),
            commute_mismatches: acc.commute_mismatches + r.commute_mismatches,
            dichotomy_failures: acc.dichotomy_failures + r.dichotomy_failures,
        })
    })
}

/// Replays a certificate with dense matrices.
///
/// Returns the largest deviation seen across every step check and the final
/// `v(target) = t · ẽ_target` check.
pub fn replay_certificate(cert: &Certificate) -> Result<f64> {
    if cert.ambient % 2 == 1 {
        return Err(Error::OddAmbient(cert.ambient));
    }
    let qubits = cert.ambient / 2;
    let mut values: HashMap<BasisLabel, ComplexMatrix> = HashMap::new();
    for g in &cert.generators {
        values.insert(g.label(), represent(g, qubits)?);
    }
    let mut worst = 0.0f64;
    for step in &cert.steps {
        let get = |l: BasisLabel| {
            values
                .get(&l)
                .ok_or_else(|| Error::InvalidGenerators(format!("{l} used before it is derived")))
        };
        let m = get(step.left)?.commutator(get(step.right)?);
        let recorded = represent(
            &ScaledElement::new(cert.ambient, step.coefficient, step.result)?,
            qubits,
        )?;
        worst = worst.max(m.max_abs_diff(&recorded));
        values.insert(step.result, m);
    }
    let value = values
        .get(&cert.target)
        .ok_or_else(|| Error::InvalidGenerators(format!("target {} never derived", cert.target)))?;
    let (re, im) = cert.terminal.to_complex();
    let expected = represent_hermitized(cert.target, qubits)?.scale(Complex64::new(re, im));
    Ok(worst.max(value.max_abs_diff(&expected)))
}

/// Summary of the full oracle suite for `qubits`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleSummary {
    pub clifford_relations: f64,
    pub trace_orthogonality: f64,
    pub hermiticity: f64,
    pub hermitized_square: f64,
    pub homomorphism: HomomorphismReport,
}

pub fn run_suite(qubits: usize, exec: Exec) -> Result<OracleSummary> {
    let (hermiticity, hermitized_square) = hermitized_defects(qubits)?;
    Ok(OracleSummary {
        clifford_relations: clifford_relation_defect(qubits)?,
        trace_orthogonality: trace_orthogonality_defect(qubits, exec)?,
        hermiticity,
        hermitized_square,
        homomorphism: homomorphism(qubits, exec)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{close, GeneratorSet};

    #[test]
    fn small_suite_is_exact() {
        for n in 1..=2 {
            let s = run_suite(n, Exec::Parallel).unwrap();
            assert_eq!(s.clifford_relations, 0.0);
            assert!(s.trace_orthogonality < 1e-12);
            assert_eq!(s.hermiticity, 0.0);
            assert_eq!(s.hermitized_square, 0.0);
            assert_eq!(s.homomorphism.pairs, 16usize.pow(n as u32));
            assert_eq!(s.homomorphism.product_defect, 0.0);
            assert_eq!(s.homomorphism.commutator_defect, 0.0);
            assert_eq!(s.homomorphism.commute_mismatches, 0);
            assert_eq!(s.homomorphism.dichotomy_failures, 0);
        }
    }

    #[test]
    fn replay_detects_a_wrong_terminal() {
        let closure = close(&GeneratorSet::with_triple(4).unwrap(), Exec::Parallel);
        let mut cert = closure
            .certificate(BasisLabel::from_indices([0, 1, 2, 3]).unwrap())
            .unwrap();
        assert!(replay_certificate(&cert).unwrap() < 1e-12);
        cert.terminal = cert.terminal.inverse();
        assert!(replay_certificate(&cert).unwrap() > 0.5);
    }
}
