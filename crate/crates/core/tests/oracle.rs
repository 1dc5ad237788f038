use cliffgate::clifford::{labels_commute, BasisLabel, ScaledElement};
use cliffgate::exec::Exec;
use cliffgate::matrix::oracle::{
    anticommutation_defect, clifford_relation_defect, hermitized_defects, homomorphism, trace_orthogonality_defect,
};
use cliffgate::matrix::{decompose, gamma, reconstruct, recursive_construct, represent, ComplexMatrix};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn label(ix: &[usize]) -> BasisLabel {
    BasisLabel::from_indices(ix.iter().copied()).unwrap()
}

fn random_hermitian(dim: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let a = ComplexMatrix::from_fn(dim, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    (&a + &a.adjoint()).scale(Complex64::new(0.5, 0.0))
}

#[test]
fn commuting_disjoint_pairs_via_matrices() {
    // Γ_01 and Γ_23 at 2n = 4: check with the 4×4 representation directly.
    let a = &gamma(0, 2).unwrap() * &gamma(1, 2).unwrap();
    let b = &gamma(2, 2).unwrap() * &gamma(3, 2).unwrap();
    assert!(a.commutator(&b).max_abs_diff(&ComplexMatrix::zeros(4)) < 1e-15);
    assert!(labels_commute(label(&[0, 1]), label(&[2, 3])));
}

#[test]
fn clifford_relations_up_to_five_qubits() {
    for n in 1..=5 {
        assert!(clifford_relation_defect(n).unwrap() <= 1e-14, "n = {n}");
    }
}

#[test]
fn symbolic_algebra_matches_matrices_exhaustively() {
    for n in 1..=3 {
        let r = homomorphism(n, Exec::Parallel).unwrap();
        assert_eq!(r.pairs, 16usize.pow(n as u32));
        assert!(r.product_defect <= 1e-12, "n = {n}: {r:?}");
        assert!(r.commutator_defect <= 1e-12, "n = {n}: {r:?}");
        assert_eq!(r.commute_mismatches, 0);
        assert_eq!(r.dichotomy_failures, 0);
    }
}

#[test]
fn trace_orthogonality_and_hermiticity() {
    for n in 1..=3 {
        assert!(trace_orthogonality_defect(n, Exec::Parallel).unwrap() < 1e-12);
        let (herm, square) = hermitized_defects(n).unwrap();
        assert!(herm < 1e-14 && square < 1e-14);
    }
}

#[test]
fn spot_checks_at_four_and_five_qubits() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [4usize, 5] {
        let ambient = 2 * n;
        for _ in 0..20 {
            let a = BasisLabel::from_bits(rng.gen_range(0..1u128 << ambient));
            let b = BasisLabel::from_bits(rng.gen_range(0..1u128 << ambient));
            let ea = ScaledElement::basis(ambient, a).unwrap();
            let eb = ScaledElement::basis(ambient, b).unwrap();
            let (ma, mb) = (represent(&ea, n).unwrap(), represent(&eb, n).unwrap());
            let prod = represent(&ea.product(&eb).unwrap(), n).unwrap();
            assert!(prod.max_abs_diff(&(&ma * &mb)) < 1e-12);
            let comm = represent(&ea.commutator(&eb).unwrap(), n).unwrap();
            assert!(comm.max_abs_diff(&ma.commutator(&mb)) < 1e-12);
        }
    }
}

/// `S = Σ_I Γ_I X R_I^†` intertwines two irreducible Clifford
/// representations: `Γ_k S = S R_k` for every generator.
fn intertwiner(gammas: &[ComplexMatrix], others: &[ComplexMatrix], seed: &ComplexMatrix) -> ComplexMatrix {
    let dim = seed.dim();
    let mut s = ComplexMatrix::zeros(dim);
    for bits in 0u32..1 << gammas.len() {
        let mut g = ComplexMatrix::identity(dim);
        let mut r = ComplexMatrix::identity(dim);
        for k in 0..gammas.len() {
            if bits >> k & 1 == 1 {
                g = &g * &gammas[k];
                r = &r * &others[k];
            }
        }
        s = s + &(&g * seed) * &r.adjoint();
    }
    s
}

#[test]
fn recursive_generators_are_equivalent_to_gammas() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=3 {
        let rec = recursive_construct(n).unwrap();
        assert_eq!(rec.len(), 2 * n);
        assert!(anticommutation_defect(&rec) < 1e-14);
        let gammas: Vec<_> = (0..2 * n).map(|k| gamma(k, n).unwrap()).collect();

        // Pairwise-product traces agree.
        for k in 0..2 * n {
            for l in 0..2 * n {
                let t1 = (&rec[k] * &rec[l]).trace();
                let t2 = (&gammas[k] * &gammas[l]).trace();
                assert!((t1 - t2).norm() < 1e-12);
            }
        }

        // An explicit change of basis exists.
        let seed = ComplexMatrix::from_fn(1 << n, |_, _| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        let s = intertwiner(&gammas, &rec, &seed);
        assert!(s.operator_norm() > 1e-6, "intertwiner vanished");
        for k in 0..2 * n {
            assert!((&gammas[k] * &s).max_abs_diff(&(&s * &rec[k])) < 1e-10);
        }
    }
}

#[test]
fn decompose_round_trip_on_random_hermitian() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=4 {
        for _ in 0..5 {
            let h = random_hermitian(1 << n, &mut rng);
            let coeffs = decompose(&h, n).unwrap();
            assert!(reconstruct(&coeffs, n).unwrap().max_abs_diff(&h) < 1e-10);
        }
    }
}

#[test]
fn decompose_agrees_with_dense_traces() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let h = random_hermitian(8, &mut rng);
    let coeffs = decompose(&h, 3).unwrap();
    for l in BasisLabel::all(6) {
        let e = represent(&ScaledElement::hermitized(6, l).unwrap(), 3).unwrap();
        let alpha = (&h * &e).trace() / 8.0;
        assert!(alpha.im.abs() < 1e-12);
        assert!((coeffs.get(&l).copied().unwrap_or(0.0) - alpha.re).abs() < 1e-12);
    }
}

fn arb_label(ambient: usize) -> impl Strategy<Value = BasisLabel> {
    (0u128..1u128 << ambient).prop_map(BasisLabel::from_bits)
}

#[test]
fn associativity_exhaustive_small() {
    for ambient in 1..=4 {
        let labels = BasisLabel::all(ambient);
        let el = |l| ScaledElement::basis(ambient, l).unwrap();
        for &a in &labels {
            for &b in &labels {
                for &c in &labels {
                    let left = el(a).product(&el(b)).unwrap().product(&el(c)).unwrap();
                    let right = el(a).product(&el(b).product(&el(c)).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn associativity_random(a in arb_label(16), b in arb_label(16), c in arb_label(16)) {
        let el = |l| ScaledElement::basis(16, l).unwrap();
        let left = el(a).product(&el(b)).unwrap().product(&el(c)).unwrap();
        let right = el(a).product(&el(b).product(&el(c)).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn commute_or_anticommute(a in arb_label(16), b in arb_label(16)) {
        let (ea, eb) = (ScaledElement::basis(16, a).unwrap(), ScaledElement::basis(16, b).unwrap());
        let ab = ea.product(&eb).unwrap();
        let ba = eb.product(&ea).unwrap();
        prop_assert_eq!(ab.label(), ba.label());
        let same = ab == ba;
        prop_assert_eq!(same, labels_commute(a, b));
        if !same {
            prop_assert_eq!(ab.coefficient().unwrap().phase, ba.coefficient().unwrap().phase.negate());
        }
    }

    #[test]
    fn text_round_trip(m in 0u8..4, p in -5i32..6, l in arb_label(12)) {
        let e = ScaledElement::new(12, cliffgate::clifford::Coefficient::new(cliffgate::clifford::Phase::new(m), p), l).unwrap();
        let text = e.to_string();
        prop_assert_eq!(cliffgate::clifford::parse_element(&text, 12).unwrap(), e);
    }
}
