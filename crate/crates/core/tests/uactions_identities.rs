use cychains::cartan::{de_rham, divergence, pair_vt_form_u, schouten, DiffForm, MultiVector, UVTop, VolumeForm};
use cychains::ring::{parity_sign, q, qf, Linear, Rational, TPoly, USeries};
use cychains::sample::Sampler;
use cychains::uactions::*;
use proptest::prelude::*;

fn sampler() -> Sampler {
    Sampler::new(2, -2, 2, 2, 3)
}

fn ud(a: &UDiffForm) -> UDiffForm {
    a.map(de_rham).mul_u()
}

fn u_div(vol: &VolumeForm, g: &UMultiVector) -> UMultiVector {
    g.map(|c| divergence(vol, c).unwrap()).mul_u()
}

fn bracket(g: &UMultiVector, n: &UMultiVector) -> UMultiVector {
    g.bilinear(n, |a, b| schouten(a, b).unwrap())
}

fn deg(g: &UMultiVector) -> i64 {
    if degree_parity(g).unwrap() { 1 } else { 0 }
}

/// Identities involving one division by `u` hold modulo `u^cap`.
fn lose_one(p: TPoly<UDiffForm>) -> TPoly<UDiffForm> {
    p.map(|c| c.with_ucap(c.ucap() - 1))
}

fn ts() -> Vec<Rational> {
    vec![q(0), q(1), q(-1), qf(1, 2), q(2)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn two_formulas_for_lt_agree(seed in any::<u64>()) {
        let s = sampler();
        let mut rng = Sampler::rng(seed);
        let vol = s.volume(&mut rng);
        let g = s.umultivector(&mut rng);
        let a = s.uform(&mut rng);
        for t in ts() {
            prop_assert_eq!(action_lt(&t, &vol, &g, &a).unwrap(), action_lt_via_div_u(&t, &vol, &g, &a).unwrap());
        }
    }

    #[test]
    fn lt_is_compatible_with_differentials(seed in any::<u64>()) {
        let s = sampler();
        let mut rng = Sampler::rng(seed);
        let vol = s.volume(&mut rng);
        let g = s.umultivector(&mut rng);
        let a = s.uform(&mut rng);
        let dg = deg(&g);
        for t in ts() {
            let lhs = ud(&action_lt(&t, &vol, &g, &a).unwrap())
                .minus(&action_lt(&t, &vol, &g, &ud(&a)).unwrap().signed(parity_sign(dg)));
            let rhs = action_lt(&t, &vol, &u_div(&vol, &g), &a).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn lt_is_a_lie_action(seed in any::<u64>()) {
        let s = sampler();
        let mut rng = Sampler::rng(seed);
        let vol = s.volume(&mut rng);
        let g = s.umultivector(&mut rng);
        let n = s.umultivector(&mut rng);
        let a = s.uform(&mut rng);
        let (dg, dn) = (deg(&g), deg(&n));
        for t in ts() {
            let l = |x: &UMultiVector, y: &UDiffForm| action_lt(&t, &vol, x, y).unwrap();
            let lhs = l(&g, &l(&n, &a)).minus(&l(&n, &l(&g, &a)).signed(parity_sign(dg * dn)));
            prop_assert_eq!(lhs, l(&bracket(&g, &n), &a));
        }
    }

    #[test]
    fn h_t_satisfies_first_equation(seed in any::<u64>()) {
        let s = sampler();
        let mut rng = Sampler::rng(seed);
        let vol = s.volume(&mut rng);
        let g = s.umultivector(&mut rng);
        let a = s.uform(&mut rng);
        let hpar = deg(&g) + 1;
        let lhs = action_lt_poly(&vol, &g, &a).unwrap().derivative().scaled(&q(-1));
        let first = h_t_poly(&g, &a).unwrap().map(ud);
        let second = h_t_poly(&g, &ud(&a)).unwrap().scaled(&q(parity_sign(hpar)));
        let third = h_t_poly(&u_div(&vol, &g), &a).unwrap();
        prop_assert_eq!(lose_one(lhs), lose_one(first.minus(&second).plus(&third)));
    }

    #[test]
    fn h_t_satisfies_second_equation(seed in any::<u64>()) {
        let s = sampler();
        let mut rng = Sampler::rng(seed);
        let vol = s.volume(&mut rng);
        let g = s.umultivector(&mut rng);
        let n = s.umultivector(&mut rng);
        let a = s.uform(&mut rng);
        let (dg, dn) = (deg(&g), deg(&n));
        let l = |x: &UMultiVector, y: &UDiffForm| action_lt_poly(&vol, x, y).unwrap();
        let h = |x: &UMultiVector, y: &UDiffForm| h_t_poly(x, y).unwrap();
        let comp = |outer: &dyn Fn(&UDiffForm) -> TPoly<UDiffForm>, inner: TPoly<UDiffForm>| inner.then(|y| outer(y));
        // [h_γ, L_ν] with parities |γ|+1 and |ν|
        let hl = comp(&|y| h(&g, y), l(&n, &a))
            .minus(&comp(&|y| l(&n, y), h(&g, &a)).scaled(&q(parity_sign((dg + 1) * dn))));
        // [L_γ, h_ν]
        let lh = comp(&|y| l(&g, y), h(&n, &a))
            .minus(&comp(&|y| h(&n, y), l(&g, &a)).scaled(&q(parity_sign(dg * (dn + 1)))));
        let rhs = hl.plus(&lh.scaled(&q(parity_sign(dg))));
        prop_assert_eq!(lose_one(h(&bracket(&g, &n), &a)), lose_one(rhs));
    }

    #[test]
    fn dual_action_is_adjoint(seed in any::<u64>()) {
        let s = sampler();
        let mut rng = Sampler::rng(seed);
        let vol = s.volume(&mut rng);
        let g = s.umultivector(&mut rng);
        let x = s.uvtop(&mut rng, &vol);
        let a = s.uform(&mut rng);
        let (dg, dn) = (deg(&g), deg(&x.mv));
        for t in ts() {
            let lhs = pair_vt_form_u(&action_lt_dual(&t, &vol, &g, &x).unwrap(), &a).unwrap();
            let rhs = pair_vt_form_u(&x, &action_lt(&t, &vol, &g, &a).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs.scaled(&q(-parity_sign(dg * dn))));
        }
    }

    #[test]
    fn dual_differential_sign(seed in any::<u64>()) {
        let s = sampler();
        let mut rng = Sampler::rng(seed);
        let vol = s.volume(&mut rng);
        let x = s.uvtop(&mut rng, &vol);
        let a = s.uform(&mut rng);
        let dn = deg(&x.mv);
        let dx = dual_differential(&x).unwrap();
        prop_assert!(dual_differential(&dx).unwrap().is_zero());
        let lhs = pair_vt_form_u(&dx, &a).unwrap();
        let rhs = pair_vt_form_u(&x, &ud(&a)).unwrap();
        prop_assert_eq!(lhs, rhs.scaled(&q(-parity_sign(dn))));
    }
}

#[test]
fn unused_imports_guard() {
    let _ = (DiffForm::zero(1), MultiVector::zero(1), UVTop::new(USeries::constant(MultiVector::zero(1), 0), VolumeForm::standard(1)));
}
