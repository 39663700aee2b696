use cychains::cartan::*;
use cychains::ring::{parity_sign, Linear};
use cychains::sample::Sampler;
use proptest::prelude::*;

fn sampler(dim: usize) -> Sampler {
    Sampler::new(dim, -2, 2, 3, 0)
}

/// `[A, B] = AB − (−1)^{ab} BA` for operators of parities `a`, `b`.
fn graded_comm(ab: DiffForm, ba: DiffForm, a: i64, b: i64) -> DiffForm {
    ab.minus(&ba.signed(parity_sign(a * b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn contraction_is_multiplicative(seed in any::<u64>(), dim in 1usize..=3) {
        let s = sampler(dim);
        let mut rng = Sampler::rng(seed);
        let g = s.multivector(&mut rng);
        let n = s.multivector(&mut rng);
        let a = s.form(&mut rng);
        let lhs = contract(&wedge(&g, &n).unwrap(), &a).unwrap();
        let rhs = contract(&g, &contract(&n, &a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn schouten_matches_cartan_commutators(seed in any::<u64>(), dim in 1usize..=3) {
        let s = sampler(dim);
        let mut rng = Sampler::rng(seed);
        let g = s.homogeneous_multivector(&mut rng);
        let n = s.homogeneous_multivector(&mut rng);
        let a = s.form(&mut rng);
        let kg = g.ranks().first().copied().unwrap_or(0) as i64;
        let kn = n.ranks().first().copied().unwrap_or(0) as i64;
        let (dg, dn) = (kg - 1, kn - 1);
        let lhs = contract(&schouten(&g, &n).unwrap(), &a).unwrap();
        // [ι_γ, L_ν], parities k_γ and |ν|
        let c1 = graded_comm(
            contract(&g, &lie_derivative(&n, &a).unwrap()).unwrap(),
            lie_derivative(&n, &contract(&g, &a).unwrap()).unwrap(),
            kg,
            dn,
        );
        prop_assert_eq!(&lhs, &c1);
        // (−1)^{|γ|} [L_γ, ι_ν]
        let c2 = graded_comm(
            lie_derivative(&g, &contract(&n, &a).unwrap()).unwrap(),
            contract(&n, &lie_derivative(&g, &a).unwrap()).unwrap(),
            dg,
            kn,
        )
        .signed(parity_sign(dg));
        prop_assert_eq!(&lhs, &c2);
    }
}
