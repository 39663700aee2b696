use cychains::extended::*;
use cychains::hochschild::{valued_differential, ValueTag};
use cychains::ring::Linear;
use cychains::sample::{cyclic_symmetrize, Sampler};
use proptest::prelude::*;

fn sampler(dim: usize) -> Sampler {
    Sampler::new(dim, -2, 2, 3, 0)
}

fn element(seed: u64, dim: usize, n: usize, normalized: bool) -> EElement {
    let mut rng = Sampler::rng(seed);
    let p = (seed % (dim as u64 + 1)) as usize;
    sampler(dim).eelement(&mut rng, n, &[p], normalized)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn differentials_square_to_zero_and_anticommute(seed in any::<u64>(), dim in 1usize..=2, n in 0usize..=2) {
        let e = element(seed, dim, n, false);
        prop_assert!(extended_b(&extended_b(&e)).is_zero());
        prop_assert!(extended_nabla(&extended_nabla(&e)).is_zero());
        let anti = extended_b(&extended_nabla(&e)).plus(&extended_nabla(&extended_b(&e)));
        prop_assert!(anti.is_zero());
    }

    #[test]
    fn sigma_has_order_slot_count(seed in any::<u64>(), dim in 1usize..=2, n in 0usize..=3) {
        let e = element(seed, dim, n, false);
        let mut x = e.clone();
        for _ in 0..=n {
            x = cyclic_sigma(&x);
        }
        prop_assert_eq!(x, e);
    }

    #[test]
    fn cyclic_invariants_are_preserved(seed in any::<u64>(), dim in 1usize..=2, n in 0usize..=2) {
        let e = cyclic_symmetrize(&element(seed, dim, n, false));
        prop_assert_eq!(cyclic_sigma(&e), e.clone());
        let be = extended_b(&e);
        prop_assert_eq!(cyclic_sigma(&be), be);
        let ne = extended_nabla(&e);
        prop_assert_eq!(cyclic_sigma(&ne), ne);
    }

    #[test]
    fn connes_operator_makes_a_mixed_complex(seed in any::<u64>(), dim in 1usize..=2, n in 1usize..=3) {
        let e = element(seed, dim, n, true);
        let be = connes_b_extended(&e).unwrap();
        prop_assert!(connes_b_extended(&be).unwrap().is_zero());
        let anti = extended_b(&be).plus(&connes_b_extended(&extended_b(&e)).unwrap());
        prop_assert!(anti.is_zero());
    }

    #[test]
    fn embedding_is_a_chain_map(seed in any::<u64>(), dim in 1usize..=2, arity in 0usize..=2) {
        let mut rng = Sampler::rng(seed);
        let phi = sampler(dim).multidiffop(&mut rng, arity, ValueTag::TopForm);
        let lhs = extended_b(&embed_cochain(&phi).unwrap());
        let rhs = embed_cochain(&valued_differential(&phi)).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(extended_nabla(&embed_cochain(&phi).unwrap()).is_zero());
    }
}

#[test]
fn wrap_sign_matters() {
    let e = element(7, 2, 1, false);
    let flipped = extended_b_with_wrap_sign(&extended_b_with_wrap_sign(&e, true), true);
    assert!(extended_b(&extended_b(&e)).is_zero());
    assert!(!flipped.is_zero());
}

#[test]
fn koszul_cohomology_sits_in_one_corner() {
    for d in 1..=3usize {
        for c in -(d as i64)..=2 {
            for entry in koszul_line_cohomology(d, c, 8) {
                let expect = usize::from(entry.p == d && entry.q == 0);
                assert_eq!(entry.dim_cohomology, expect, "d={d} c={c} p={}", entry.p);
            }
        }
    }
}
