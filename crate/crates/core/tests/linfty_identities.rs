use cychains::cartan::VolumeForm;
use cychains::hochschild::ValueTag;
use cychains::linfty::*;
use cychains::ring::{q, qf, Linear};
use cychains::sample::{Sampler, SeedableRng};
use cychains::uactions::{UDiffForm, UMultiVector};
use rand_chacha::ChaCha8Rng;

fn sampler() -> Sampler {
    Sampler::new(2, -2, 2, 2, 2)
}

fn gammas(s: &Sampler, rng: &mut ChaCha8Rng, n: usize) -> Vec<UMultiVector> {
    (0..n).map(|i| s.umultivector_of_parity(rng, i % 2 == 0)).collect()
}

fn truncated(r: Option<UDiffForm>, cap: usize) -> bool {
    r.map(|x| x.with_ucap(cap).is_zero()).unwrap_or(true)
}

#[test]
fn polyvector_dgla_squares_to_zero() {
    let s = sampler();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let vol = s.volume(&mut rng);
    let fam = polyvector_dgla(&vol);
    for n in 1..=3 {
        let xs = gammas(&s, &mut rng, n);
        assert!(vanishes(&coderivation_square_residual(&fam, &xs).unwrap()), "arity {n}");
    }
}

#[test]
fn missing_parity_factor_is_detected() {
    let s = sampler();
    let vol = VolumeForm::standard(2);
    let fam = polyvector_dgla_without_parity(&vol);
    let mut hit = false;
    for seed in 0..10 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let xs = gammas(&s, &mut rng, 2);
        hit |= !vanishes(&coderivation_square_residual(&fam, &xs).unwrap());
        hit |= !vanishes(&symmetry_defect(&fam, &xs, 0).unwrap());
    }
    assert!(hit);
}

#[test]
fn polyvector_bracket_is_graded_symmetric() {
    let s = sampler();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let fam = polyvector_dgla(&VolumeForm::standard(2));
    for _ in 0..5 {
        let xs = gammas(&s, &mut rng, 2);
        assert!(vanishes(&symmetry_defect(&fam, &xs, 0).unwrap()));
    }
}

#[test]
fn cochain_dgla_squares_to_zero() {
    let s = Sampler::new(1, -1, 1, 2, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let fam = cochain_dgla();
    for n in 1..=3 {
        let xs: Vec<_> = (0..n).map(|i| s.multidiffop(&mut rng, 1 + i % 2, ValueTag::Scalar)).collect();
        assert!(vanishes(&coderivation_square_residual(&fam, &xs).unwrap()), "arity {n}");
    }
}

#[test]
fn forms_modules_satisfy_module_axioms() {
    let s = sampler();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let vol = s.volume(&mut rng);
    let alg = polyvector_dgla(&vol);
    for t in [q(0), q(1), qf(1, 2)] {
        let module = forms_module(t.clone(), &vol);
        for n in 0..=2 {
            let xs = gammas(&s, &mut rng, n);
            let a = s.uform(&mut rng);
            assert!(vanishes(&module_axiom_residual(&alg, &module, &xs, &a).unwrap()), "t={t} arity {n}");
        }
    }
}

#[test]
fn dropping_divergence_breaks_module_axiom() {
    let s = sampler();
    let vol = VolumeForm::standard(2);
    let alg = polyvector_dgla(&vol);
    let module = forms_module_without_div(&vol);
    let mut hit = false;
    for seed in 0..10 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let xs = gammas(&s, &mut rng, 1);
        let a = s.uform(&mut rng);
        hit |= !vanishes(&module_axiom_residual(&alg, &module, &xs, &a).unwrap());
    }
    assert!(hit);
}

#[test]
fn dual_and_adjoint_modules_satisfy_module_axioms() {
    let s = sampler();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let vol = s.volume(&mut rng);
    let alg = polyvector_dgla(&vol);
    for t in [q(0), q(1)] {
        let module = dual_vtop_module(t, &vol);
        for n in 0..=2 {
            let xs = gammas(&s, &mut rng, n);
            let x = s.uvtop(&mut rng, &vol);
            assert!(vanishes(&module_axiom_residual(&alg, &module, &xs, &x).unwrap()));
        }
    }
    let adj = adjoint_action_module(&alg);
    for n in 0..=2 {
        let xs = gammas(&s, &mut rng, n);
        let m = s.umultivector(&mut rng);
        assert!(vanishes(&module_axiom_residual(&alg, &adj, &xs, &m).unwrap()));
    }
}

#[test]
fn chains_form_a_module_over_cochains() {
    let s = Sampler::new(1, -1, 1, 2, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let alg = cochain_dgla();
    let module = chains_module_cochain();
    for n in 0..=2 {
        let xs: Vec<_> = (0..n).map(|i| s.multidiffop(&mut rng, 1 + i % 2, ValueTag::Scalar)).collect();
        let c = cychains::ring::USeries::from_coeffs(vec![s.chain(&mut rng, 2), s.chain(&mut rng, 1)]);
        assert!(vanishes(&module_axiom_residual(&alg, &module, &xs, &c).unwrap()), "arity {n}");
    }
}

#[test]
fn pullback_along_u_zero_is_l0() {
    let s = sampler();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let vol = s.volume(&mut rng);
    let pulled = pullback_module(u_zero_projection(), &forms_module_flat());
    let l0 = forms_module(q(0), &vol);
    for n in 0..=2 {
        let xs = gammas(&s, &mut rng, n);
        let a = s.uform(&mut rng);
        assert_eq!(pulled.eval(&xs, &a).unwrap(), l0.eval(&xs, &a).unwrap());
    }
}

#[test]
fn exp_morphism_needs_negative_sign_and_plain_coefficients() {
    let s = Sampler::new(2, -2, 2, 2, 3);
    let vol = VolumeForm::standard(2);
    let alg = polyvector_dgla(&vol);
    let src = forms_module(q(0), &vol);
    let dst = forms_module(q(1), &vol);
    for sg in [1, -1] {
        for norm in [ExpNormalization::Plain, ExpNormalization::Factorial] {
            let phi = h1_morphism(sg, norm, 3);
            let mut ok = [true; 3];
            for seed in 0..4 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for n in 0..=2 {
                    let xs = gammas(&s, &mut rng, n);
                    let a = s.uform(&mut rng);
                    let r = morphism_residual(&alg, &src, &dst, &phi, &xs, &a).unwrap();
                    ok[n] &= truncated(r, 3 - n.max(1));
                }
            }
            let expected = sg == -1 && norm == ExpNormalization::Plain;
            assert_eq!(ok.iter().all(|&b| b), expected, "s={sg} {norm:?}: {ok:?}");
            assert!(ok[0]);
        }
    }
}

mod adjoints {
    use super::*;
    use cychains::cartan::{MultiVector, VTop};
    use cychains::extended::{hkr_vt, Window};
    use cychains::ring::{LaurentPoly, USeries};


    #[test]
    fn adjoint_of_forms_module_is_dual_module() {
        let vol = VolumeForm::standard(2);
        let s = Sampler::new(2, 0, 1, 1, 1);
        let window = AdjointWindow {
            candidates: uvtop_basis(&vol, &Window::new(-2, 2).unwrap(), 1),
            tests: uform_basis(2, &Window::new(-2, 2).unwrap(), 1),
        };
        for t in [q(0), q(1)] {
            let forms = forms_module(t.clone(), &vol);
            let adj = adjoint_module(&forms, vt_form_pairing(), window.clone()).unwrap();
            let dual = dual_vtop_module(t.clone(), &vol);
            let back = adjoint_module(&adj, transpose_pairing(vt_form_pairing()), window.swapped()).unwrap();
            for seed in 0..3 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let odd = seed % 2 == 0;
                let x = cychains::cartan::UVTop::new(s.umultivector_of_parity(&mut rng, odd), vol.clone());
                let a = s.uform_of_parity(&mut rng, odd);
                for n in 0..=1 {
                    let xs: Vec<_> = (0..n).map(|i| s.umultivector_of_parity(&mut rng, i == 0)).collect();
                    assert_eq!(adj.eval(&xs, &x).unwrap(), dual.eval(&xs, &x).unwrap(), "t={t} n={n}");
                    assert_eq!(back.eval(&xs, &a).unwrap(), forms.eval(&xs, &a).unwrap(), "t={t} n={n}");
                }
            }
        }
    }

    #[test]
    fn adjoint_of_hkr_is_scaled_hkr_vt() {
        let vol = VolumeForm::standard(2);
        for (k, w) in [(1usize, 2), (2, 1)] {
            let window = AdjointWindow {
                candidates: topform_cochain_basis(2, k, &Window::new(-w, w).unwrap(), 1),
                tests: chain_basis(2, k, &Window::new(-2, 2).unwrap(), 0),
            };
            let adj = adjoint_morphism(&hkr_morphism(), vt_form_pairing(), cochain_chain_pairing(), window).unwrap();
            let idx: Vec<usize> = (0..k).collect();
            let nu = MultiVector::term(LaurentPoly::monomial(q(3), vec![1, 1]), &idx).unwrap();
            let x = cychains::cartan::UVTop::new(USeries::constant(nu.clone(), 0), vol.clone());
            let got = adj.eval(&[], &x).unwrap().unwrap();
            let fact = if k == 2 { qf(1, 2) } else { q(1) };
            let want = hkr_vt(&VTop::new(nu, vol.clone()).unwrap()).unwrap().scaled(&fact);
            assert_eq!(got, want, "k={k}");
        }
    }
}

mod dual_reading {
    use super::*;
    use cychains::cartan::{MultiVector, UVTop, VTop};
    use cychains::extended::{embed_cochain, hkr_vt, project_top_mod_exact, Window};
    use cychains::hochschild::UHochChain;
    use cychains::ring::{LaurentPoly, USeries};
    use std::sync::Arc;

    fn probes(ucap: usize) -> Arc<Vec<UHochChain>> {
        let w = Window::new(-1, 1).unwrap();
        let mut v = chain_basis(2, 0, &w, ucap);
        v.extend(chain_basis(2, 1, &w, ucap));
        let s = Sampler::new(2, -1, 1, 2, ucap);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..6 {
            v.push(USeries::constant(s.chain(&mut rng, 2), ucap));
        }
        Arc::new(v)
    }

    #[test]
    fn toy_dual_reading_is_hkr_vt() {
        let vol = VolumeForm::new(q(2), vec![1, 0]).unwrap();
        let vstar = reinterpret_psm(&toy_psm(), probes(2));
        for k in 1..=2usize {
            let idx: Vec<usize> = (0..k).collect();
            let nu = MultiVector::term(LaurentPoly::monomial(q(3), vec![1, -1]), &idx).unwrap();
            let x = UVTop::new(USeries::constant(nu.clone(), 2), vol.clone());
            let lam = vstar.eval(&[], &x).unwrap().unwrap();
            let got = symbolize(functional_component(&lam, &vol, 0, 2), 2, k + 1, 1).unwrap();
            let want = embed_cochain(&hkr_vt(&VTop::new(nu, vol.clone()).unwrap()).unwrap()).unwrap();
            assert_eq!(got, want, "k={k}");
            let w = Window::new(-3, 3).unwrap();
            assert_eq!(project_top_mod_exact(&got, &w).unwrap(), project_top_mod_exact(&want, &w).unwrap());
        }
    }

    #[test]
    fn functional_differential_squares_to_zero() {
        let vol = VolumeForm::standard(2);
        let alg = polyvector_dgla(&vol);
        let target = functional_module(&chains_module_hkr(), &vol);
        let vstar = reinterpret_psm(&toy_psm(), probes(2));
        let s = Sampler::new(2, -1, 1, 1, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let x = UVTop::new(s.umultivector_of_parity(&mut rng, true), vol.clone());
        let lam = vstar.eval(&[], &x).unwrap().unwrap();
        assert!(vanishes(&module_axiom_residual(&alg, &target, &[], &lam).unwrap()));
    }

    #[test]
    fn zero_morphism_transports() {
        let vol = VolumeForm::standard(2);
        let alg = polyvector_dgla(&vol);
        let zero = toy_psm();
        let zero = scale_family(&zero, 0);
        let vstar = reinterpret_psm(&zero, probes(1));
        let source = vtop_adjoint_module(&alg, &vol);
        let target = functional_module(&chains_module_hkr(), &vol);
        let s = Sampler::new(2, -1, 1, 1, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let x = UVTop::new(s.umultivector_of_parity(&mut rng, false), vol.clone());
        let xs = vec![s.umultivector_of_parity(&mut rng, true)];
        for n in 0..=1 {
            let r = morphism_residual(&alg, &source, &target, &vstar, &xs[..n], &x).unwrap();
            assert!(vanishes(&r));
        }
    }
}
