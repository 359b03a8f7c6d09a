//! Cross-module property tests: random angles, random states, random words.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use qsw::channels::{phase, rot12, rot23_with_reset, QuantumAlphabet, QuantumWord};
use qsw::linalg::{
    hermitian_eigenvalues, random_density, random_pure, ComplexMat3, DensityMatrix, PureState,
};
use qsw::prep::{prep_state, PrepFamily, PrepIndex};
use qsw::qsync::{sync_fidelity, worst_case_fidelity};

fn word_strategy(max_len: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(prop_oneof![Just('A'), Just('B'), Just('C')], 0..=max_len)
        .prop_map(|v| v.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn channels_preserve_trace_and_validity(
        theta in -PI..PI,
        phi in -PI..PI,
        alpha in -PI..PI,
        beta in -PI..PI,
        seed in 0u64..1024,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho = random_density(&mut rng);
        for ch in [rot23_with_reset(theta), rot12(phi), phase(alpha, beta)] {
            // apply() validates Hermiticity and positivity internally
            let out = ch.apply(&rho);
            prop_assert!((out.matrix().trace().re - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn rotation_letters_are_unitary(phi in -PI..PI, alpha in -PI..PI, beta in -PI..PI) {
        prop_assert!(rot12(phi).is_unitary());
        prop_assert!(phase(alpha, beta).is_unitary());
    }

    #[test]
    fn schrodinger_and_heisenberg_pictures_agree(
        theta in -PI..PI,
        phi in -PI..PI,
        word in word_strategy(6),
        seed in 0u64..1024,
    ) {
        let alphabet = QuantumAlphabet::abc(theta, phi, 0.9, 0.31);
        let w = QuantumWord::new(&alphabet, &word).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho = random_density(&mut rng);
        let x = random_density(&mut rng).matrix().hermitize();
        let lhs = (*w.apply(&rho).matrix() * x).trace().re;
        let rhs = (*rho.matrix() * w.adjoint_apply(&x).unwrap()).trace().re;
        prop_assert!((lhs - rhs).abs() <= 1e-10);
    }

    #[test]
    fn concatenation_composes(
        w1 in word_strategy(4),
        w2 in word_strategy(4),
        seed in 0u64..1024,
    ) {
        let alphabet = QuantumAlphabet::abc(1.1, 0.6, 0.9, 0.31);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho = random_density(&mut rng);
        let first = QuantumWord::new(&alphabet, &w1).unwrap();
        let second = QuantumWord::new(&alphabet, &w2).unwrap();
        let joined = QuantumWord::new(&alphabet, &format!("{w1}{w2}")).unwrap();
        let split = second.apply(&first.apply(&rho));
        let whole = joined.apply(&rho);
        prop_assert!((*split.matrix() - *whole.matrix()).max_abs_entry() <= 1e-12);
    }

    #[test]
    fn eigenvalues_invariant_under_unitary_conjugation(
        phi in -PI..PI,
        alpha in -PI..PI,
        beta in -PI..PI,
        seed in 0u64..1024,
    ) {
        // conjugation by products of the unitary letters B and C
        let u = rot12(phi).kraus_ops()[0] * phase(alpha, beta).kraus_ops()[0];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_density(&mut rng).matrix().hermitize();
        let conjugated = (u * h * u.adjoint()).hermitize();
        let before = hermitian_eigenvalues(&h).unwrap();
        let after = hermitian_eigenvalues(&conjugated).unwrap();
        for (a, b) in before.iter().zip(after.iter()) {
            prop_assert!((a - b).abs() <= 1e-10);
        }
    }

    #[test]
    fn worst_case_is_a_lower_bound(
        theta in -PI..PI,
        phi in -PI..PI,
        word in word_strategy(5),
        seed in 0u64..1024,
    ) {
        let alphabet = QuantumAlphabet::abc(theta, phi, 0.9, 0.31);
        let w = QuantumWord::new(&alphabet, &word).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let target = random_pure(&mut rng);
        let worst = worst_case_fidelity(&w, &target);
        for _ in 0..10 {
            let rho = random_density(&mut rng);
            prop_assert!(worst <= sync_fidelity(&w, &target, &rho) + 1e-10);
        }
        prop_assert!((0.0..=1.0).contains(&worst));
    }

    #[test]
    fn prepared_states_are_normalized(
        theta in -PI..PI,
        phi in -PI..PI,
        k in 0usize..40,
        j in 0usize..40,
        l in 0usize..40,
    ) {
        let family = PrepFamily::complex(theta, phi, 1.0, 2.0_f64.sqrt(), 40).unwrap();
        let state = prep_state(&family, &PrepIndex::new(l, k, j)).unwrap();
        prop_assert!((state.amplitudes().norm() - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn projector_expectation_never_exceeds_one() {
    // spot check that the validated types keep fidelities inside [0, 1]
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..200 {
        let rho = random_density(&mut rng);
        let psi = random_pure(&mut rng);
        let f = rho.fidelity_with_pure(&psi);
        assert!((0.0..=1.0).contains(&f));
    }
}

#[test]
fn heisenberg_image_of_identity_is_identity() {
    // unital direction: every channel here maps I to I under the adjoint
    // because Σ K†K = I
    let alphabet = QuantumAlphabet::abc(0.83, 1.91, 0.9, 0.31);
    let word = QuantumWord::new(&alphabet, "ABCABC").unwrap();
    let out = word.adjoint_apply(&ComplexMat3::identity()).unwrap();
    assert!((out - ComplexMat3::identity()).max_abs_entry() <= 1e-12);
}

#[test]
fn mixed_state_fidelity_is_the_average_of_basis_fidelities() {
    // linearity: I/3 = (|1⟩⟨1| + |2⟩⟨2| + |3⟩⟨3|)/3
    let alphabet = QuantumAlphabet::ab(1.37, 1.61);
    let word = QuantumWord::new(&alphabet, "ABAB").unwrap();
    let target = PureState::basis_ket(2).unwrap();
    let mixed = sync_fidelity(&word, &target, &DensityMatrix::maximally_mixed());
    let mut avg = 0.0;
    for label in 1..=3 {
        let rho = DensityMatrix::from_pure(&PureState::basis_ket(label).unwrap());
        avg += sync_fidelity(&word, &target, &rho) / 3.0;
    }
    assert!((mixed - avg).abs() <= 1e-12);
}
