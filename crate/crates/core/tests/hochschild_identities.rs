use cychains::cartan::de_rham;
use cychains::hochschild::*;
use cychains::ring::Linear;
use cychains::sample::Sampler;
use proptest::prelude::*;

fn sampler(dim: usize) -> Sampler {
    Sampler::new(dim, -2, 2, 3, 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn boundary_squares_to_zero(seed in any::<u64>(), dim in 1usize..=2, n in 0usize..=3) {
        let mut rng = Sampler::rng(seed);
        let c = sampler(dim).chain(&mut rng, n);
        prop_assert!(chain_boundary(&chain_boundary(&c)).is_zero());
    }

    #[test]
    fn mixed_complex_on_chains(seed in any::<u64>(), dim in 1usize..=2, n in 0usize..=2) {
        let mut rng = Sampler::rng(seed);
        let c = sampler(dim).chain(&mut rng, n);
        prop_assert!(connes_b(&connes_b(&c)).is_zero());
        let anti = chain_boundary(&connes_b(&c)).plus(&connes_b(&chain_boundary(&c)));
        prop_assert!(anti.is_zero());
        prop_assert!(connes_b(&c).is_normalized());
        prop_assert!(chain_boundary(&c).is_normalized());
    }

    #[test]
    fn hkr_is_a_map_of_mixed_complexes(seed in any::<u64>(), dim in 1usize..=3, n in 0usize..=2) {
        let mut rng = Sampler::rng(seed);
        let c = sampler(dim).chain(&mut rng, n + 1);
        prop_assert!(hkr_chains(&chain_boundary(&c)).is_zero());
        let c = sampler(dim).chain(&mut rng, n);
        prop_assert_eq!(hkr_chains(&connes_b(&c)), de_rham(&hkr_chains(&c)));
    }

    #[test]
    fn multiplication_acts_as_the_boundary(seed in any::<u64>(), dim in 1usize..=2, n in 0usize..=3) {
        let mut rng = Sampler::rng(seed);
        let c = sampler(dim).chain(&mut rng, n);
        prop_assert_eq!(cochain_action(&MultiDiffOp::m0(dim), &c).unwrap(), chain_boundary(&c));
    }

    #[test]
    fn cochain_differential_squares_to_zero(seed in any::<u64>(), dim in 1usize..=2, arity in 0usize..=2) {
        let mut rng = Sampler::rng(seed);
        let phi = sampler(dim).multidiffop(&mut rng, arity, ValueTag::Scalar);
        let dd = cochain_differential(&cochain_differential(&phi).unwrap()).unwrap();
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn action_intertwines_differentials(seed in any::<u64>(), dim in 1usize..=2, arity in 1usize..=2, n in 0usize..=2) {
        let s = sampler(dim);
        let mut rng = Sampler::rng(seed);
        let phi = s.multidiffop(&mut rng, arity, ValueTag::Scalar);
        let c = s.chain(&mut rng, n + arity);
        // L_{δφ} = [b, L_φ] with the sign of the degree arity − 1
        let lhs = cochain_action(&cochain_differential(&phi).unwrap(), &c).unwrap();
        let bl = chain_boundary(&cochain_action(&phi, &c).unwrap());
        let lb = cochain_action(&phi, &chain_boundary(&c)).unwrap();
        let sign = if (arity - 1) % 2 == 0 { -1 } else { 1 };
        let rhs = if sign < 0 { bl.minus(&lb) } else { bl.plus(&lb) };
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn connes_b_of_a_two_tensor() {
    let t = |e: Vec<i32>| cychains::ring::LaurentPoly::monomial(cychains::ring::q(1), e);
    let c = HochChain::tensor(&[t(vec![1, 0]), t(vec![0, 1])]).unwrap();
    let mut expect = HochChain::zero(2);
    expect.add_tensor(&cychains::ring::q(1), &[t(vec![0, 0]), t(vec![1, 0]), t(vec![0, 1])]);
    expect.add_tensor(&cychains::ring::q(-1), &[t(vec![0, 0]), t(vec![0, 1]), t(vec![1, 0])]);
    assert_eq!(connes_b(&c), expect);
}
