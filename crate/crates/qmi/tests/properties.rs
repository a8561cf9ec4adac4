//! Property tests over randomized instances: algebraic identities of the
//! matrix kernel and the structural invariants of the measures.

use num_complex::Complex64;
use proptest::prelude::*;

use qmi::channel::random_channel;
use qmi::measures::{
    basis_dephase, fidelity_uhlmann, measured_information, mutual_information,
    von_neumann_entropy, ChannelInput,
};
use qmi::numerics::CMatrix;
use qmi::state::{
    measured_distribution, pointer_entangle_mixed, random_basis, random_density, random_pure,
    SeedRng,
};

fn random_square(n: usize, rng: &mut SeedRng) -> CMatrix {
    rng.ginibre(n, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_dagger_reverses(seed in 0u64..u64::MAX, n in 2usize..5) {
        let mut rng = SeedRng::new(seed);
        let a = random_square(n, &mut rng);
        let b = random_square(n, &mut rng);
        let lhs = a.matmul(&b).unwrap().dagger();
        let rhs = b.dagger().matmul(&a.dagger()).unwrap();
        prop_assert!(lhs.max_diff(&rhs) < 1e-12 * (1.0 + lhs.max_norm()));
    }

    #[test]
    fn tensor_trace_factorizes(seed in 0u64..u64::MAX, n in 2usize..4, m in 2usize..4) {
        let mut rng = SeedRng::new(seed);
        let a = random_square(n, &mut rng);
        let b = random_square(m, &mut rng);
        let lhs = a.tensor(&b).trace();
        let rhs = a.trace() * b.trace();
        prop_assert!((lhs - rhs).norm() < 1e-10);
    }

    #[test]
    fn partial_trace_any_order_gives_full_trace(seed in 0u64..u64::MAX) {
        let mut rng = SeedRng::new(seed);
        let rho = random_density(8, 8, &mut rng).unwrap();
        let tr = rho.mat().trace();
        let a = rho.mat().partial_trace(&[2, 2, 2], &[0]).unwrap()
            .partial_trace(&[2], &[]).unwrap();
        let b = rho.mat().partial_trace(&[2, 2, 2], &[1, 2]).unwrap()
            .partial_trace(&[2, 2], &[]).unwrap();
        prop_assert!((a[(0, 0)] - tr).norm() < 1e-12);
        prop_assert!((b[(0, 0)] - tr).norm() < 1e-12);
    }

    #[test]
    fn eigenvalue_sum_equals_trace(seed in 0u64..u64::MAX, n in 2usize..7) {
        let mut rng = SeedRng::new(seed);
        let g = random_square(n, &mut rng);
        let h = g.add(&g.dagger()).unwrap().scale(Complex64::new(0.5, 0.0));
        let sys = qmi::numerics::herm_eig(&h).unwrap();
        let sum: f64 = sys.values.iter().sum();
        prop_assert!((sum - h.trace().re).abs() < 1e-10 * n as f64 * (1.0 + h.max_norm()));
    }

    #[test]
    fn basis_diagonal_matches_distribution(seed in 0u64..u64::MAX, d in 2usize..5) {
        let mut rng = SeedRng::new(seed);
        let rho = random_density(d, d, &mut rng).unwrap();
        let basis = random_basis(d, &mut rng).unwrap();
        let q = measured_distribution(&rho, &basis).unwrap();
        let rotated = basis.columns().dagger()
            .matmul(rho.mat()).unwrap()
            .matmul(basis.columns()).unwrap();
        for (i, &p) in q.iter().enumerate() {
            prop_assert!((rotated[(i, i)].re - p).abs() < 1e-10);
        }
    }

    #[test]
    fn mixed_pointer_marginals_share_entropy(seed in 0u64..u64::MAX, d in 2usize..5) {
        let mut rng = SeedRng::new(seed);
        let rho = random_density(d, d, &mut rng).unwrap();
        let basis = random_basis(d, &mut rng).unwrap();
        let joint = pointer_entangle_mixed(&rho, &basis).unwrap();
        let s1 = von_neumann_entropy(&joint.marginal(&[0]).unwrap()).unwrap();
        let s2 = von_neumann_entropy(&joint.marginal(&[1]).unwrap()).unwrap();
        prop_assert!((s1 - s2).abs() < 1e-8);
    }

    #[test]
    fn measured_information_equals_dephased_entropy(seed in 0u64..u64::MAX, d in 2usize..5) {
        let mut rng = SeedRng::new(seed);
        let rho = random_density(d, d, &mut rng).unwrap();
        let basis = random_basis(d, &mut rng).unwrap();
        let mi = measured_information(&rho, &basis).unwrap();
        let s = von_neumann_entropy(&basis_dephase(&rho, &basis).unwrap()).unwrap();
        prop_assert!((mi - s).abs() < 1e-10);
    }

    #[test]
    fn araki_lieb_holds_on_random_instances(seed in 0u64..u64::MAX) {
        let mut rng = SeedRng::new(seed);
        let psi = random_pure(3, &mut rng).unwrap();
        let basis = random_basis(3, &mut rng).unwrap();
        let ch = random_channel(3, 3, &mut rng).unwrap();
        let r = mutual_information(&ChannelInput::Pure(psi), &basis, &ch).unwrap();
        prop_assert!(r.mutual_information <= r.measured_entropy_in + 1e-7);
    }

    #[test]
    fn uhlmann_fidelity_symmetric(seed in 0u64..u64::MAX, d in 2usize..4) {
        let mut rng = SeedRng::new(seed);
        let a = random_density(d, d, &mut rng).unwrap();
        let b = random_density(d, d, &mut rng).unwrap();
        let f_ab = fidelity_uhlmann(&a, &b).unwrap();
        let f_ba = fidelity_uhlmann(&b, &a).unwrap();
        prop_assert!((f_ab - f_ba).abs() < 1e-9);
        prop_assert!((0.0..=1.0 + 1e-9).contains(&f_ab));
    }

    #[test]
    fn measures_invariant_under_eigenvector_rephasing(seed in 0u64..u64::MAX) {
        // rotating each basis column by a phase leaves every measure alone
        let mut rng = SeedRng::new(seed);
        let rho = random_density(2, 2, &mut rng).unwrap();
        let basis = random_basis(2, &mut rng).unwrap();
        let ch = random_channel(2, 2, &mut rng).unwrap();
        let mut rephased = basis.columns().clone();
        for j in 0..2 {
            let theta = rng.uniform(0.0, std::f64::consts::TAU);
            let phase = Complex64::new(theta.cos(), theta.sin());
            for i in 0..2 {
                rephased[(i, j)] *= phase;
            }
        }
        let basis2 = qmi::state::MeasurementBasis::new(rephased).unwrap();
        let a = mutual_information(&ChannelInput::Mixed(rho.clone()), &basis, &ch).unwrap();
        let b = mutual_information(&ChannelInput::Mixed(rho), &basis2, &ch).unwrap();
        prop_assert!((a.mutual_information - b.mutual_information).abs() < 1e-9);
    }
}
