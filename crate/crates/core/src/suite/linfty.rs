use super::{Ctx, Identity, Outcome, SuiteConfig, SuiteName, Value};
use crate::cartan::{contract, de_rham, divergence, MultiVector, UVTop, VTop, VolumeForm};
use crate::error::Result;
use crate::extended::{embed_cochain, hkr_vt, project_top_mod_exact, Window};
use crate::hochschild::{UHochChain, ValueTag};
use crate::linfty::*;
use crate::ring::{q, qf, LaurentPoly, Linear, USeries};
use crate::sample::{Sampler, TrialRng};
use crate::uactions::{UDiffForm, UMultiVector};
use rand::Rng;
use std::sync::Arc;

const S: SuiteName = SuiteName::Linfty;

fn fields(c: &Ctx, r: &mut TrialRng, n: usize) -> Vec<Value> {
    let s = c.small_sampler(2, c.cfg.ucap.min(2));
    (0..n)
        .map(|_| {
            let odd = r.gen_bool(0.5);
            Value::UVector(s.umultivector_of_parity(r, odd))
        })
        .collect()
}

fn uvectors(v: &[Value]) -> Result<Vec<UMultiVector>> {
    v.iter().map(|x| x.uvector().cloned()).collect()
}

fn ops(v: &[Value]) -> Result<Vec<crate::hochschild::MultiDiffOp>> {
    v.iter().map(|x| x.op().cloned()).collect()
}

/// Volume, then `1..=max` fields.
fn volume_and_fields(c: &Ctx, r: &mut TrialRng, t: usize, max: usize) -> Vec<Value> {
    let n = r.gen_range(1..=max);
    let mut v = vec![Value::Volume(c.volume(t))];
    v.extend(fields(c, r, n));
    v
}

/// Volume, `0..=max` fields, then one form.
fn module_inputs(c: &Ctx, r: &mut TrialRng, t: usize, max: usize) -> Vec<Value> {
    let n = r.gen_range(0..=max);
    let mut v = vec![Value::Volume(c.volume(t))];
    v.extend(fields(c, r, n));
    v.push(Value::UForm(c.small_sampler(2, c.cfg.ucap.min(2)).uform(r)));
    v
}

fn split_module(v: &[Value]) -> Result<(VolumeForm, Vec<UMultiVector>, &Value)> {
    let last = v.len() - 1;
    Ok((v[0].volume()?.clone(), uvectors(&v[1..last])?, &v[last]))
}

fn cochain_inputs(c: &Ctx, r: &mut TrialRng, n: usize) -> Vec<Value> {
    let s = Sampler::new(c.cfg.dim.min(2), -1, 1, 2, 0);
    (0..n)
        .map(|_| {
            let arity = r.gen_range(1..=2);
            Value::Op(s.multidiffop(r, arity, ValueTag::Scalar))
        })
        .collect()
}

/// Probe chains on which functionals are compared.
fn probes(dim: usize, ucap: usize) -> Arc<Vec<UHochChain>> {
    let w = Window::new(-1, 1).expect("valid window");
    let mut v = chain_basis(dim, 0, &w, ucap);
    v.extend(chain_basis(dim, 1, &w, ucap));
    let s = Sampler::new(dim, -1, 1, 2, ucap);
    let mut rng = Sampler::rng(9);
    for _ in 0..6 {
        v.push(USeries::constant(s.chain(&mut rng, 2), ucap));
    }
    Arc::new(v)
}

/// Whether the `H^(1)` candidate is a morphism at arities `0..=2` on a few samples.
pub(super) fn exp_candidate_passes(sg: i64, norm: ExpNormalization, seeds: u64) -> Result<[bool; 3]> {
    let s = Sampler::new(2, -2, 2, 2, 4);
    let vol = VolumeForm::standard(2);
    let alg = polyvector_dgla(&vol);
    let src = forms_module(q(0), &vol);
    let dst = forms_module(q(1), &vol);
    let phi = h1_morphism(sg, norm, 2);
    let mut ok = [true; 3];
    for seed in 0..seeds {
        let mut rng = Sampler::rng(seed);
        for (n, slot) in ok.iter_mut().enumerate() {
            let xs: Vec<_> = (0..n).map(|i| s.umultivector_of_parity(&mut rng, i % 2 == 0)).collect();
            let a = s.uform(&mut rng);
            let r = morphism_residual(&alg, &src, &dst, &phi, &xs, &a)?;
            // each input costs one division by u; compare modulo u³
            *slot &= r.map(|x: UDiffForm| x.with_ucap(2).is_zero()).unwrap_or(true);
        }
    }
    Ok(ok)
}

pub fn identities(_cfg: &SuiteConfig) -> Vec<Identity> {
    vec![
        Identity::trials(
            "linfty.polyvector_symmetry",
            S,
            "graded symmetry of the Taylor coefficients of ud + [,]",
            "exact; neighbour swaps at arity 2",
            |c, r, t| {
                let mut v = vec![Value::Volume(c.volume(t))];
                v.extend(fields(c, r, 2));
                v
            },
            |_, v| {
                let fam = polyvector_dgla(v[0].volume()?);
                Ok(vanishes(&symmetry_defect(&fam, &uvectors(&v[1..])?, 0)?))
            },
        ),
        Identity::trials(
            "linfty.polyvector_square_zero",
            S,
            "Q² = 0 for the polyvector dgla with u div",
            "exact; arities 1 to arity cap + 1",
            |c, r, t| volume_and_fields(c, r, t, c.cfg.arity_cap + 1),
            |_, v| {
                let fam = polyvector_dgla(v[0].volume()?);
                Ok(vanishes(&coderivation_square_residual(&fam, &uvectors(&v[1..])?)?))
            },
        ),
        Identity::trials(
            "linfty.cochain_square_zero",
            S,
            "Q² = 0 for the Hochschild cochain dgla",
            "exact; arities 1 to arity cap + 1, dimension ≤ 2",
            |c, r, _| {
                let n = r.gen_range(1..=c.cfg.arity_cap + 1);
                cochain_inputs(c, r, n)
            },
            |_, v| Ok(vanishes(&coderivation_square_residual(&cochain_dgla(), &ops(v)?)?)),
        ),
        Identity::trials(
            "linfty.forms_module",
            S,
            "forms with L^(t) form an L∞ module",
            "exact; t ∈ {0, 1, 1/2}; arities 0 to arity cap",
            |c, r, t| module_inputs(c, r, t, c.cfg.arity_cap),
            |_, v| {
                let (vol, xs, a) = split_module(v)?;
                let alg = polyvector_dgla(&vol);
                for t in [q(0), q(1), qf(1, 2)] {
                    if !vanishes(&module_axiom_residual(&alg, &forms_module(t, &vol), &xs, a.uform()?)?) {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        ),
        Identity::trials(
            "linfty.dual_module",
            S,
            "multivector-valued top forms with the dual action form an L∞ module",
            "exact; t ∈ {0, 1}; arities 0 to arity cap",
            |c, r, t| {
                let mut v = module_inputs(c, r, t, c.cfg.arity_cap);
                let vol = c.volume(t);
                *v.last_mut().expect("nonempty") = Value::UVTop(c.small_sampler(2, 1).uvtop(r, &vol));
                v
            },
            |_, v| {
                let (vol, xs, x) = split_module(v)?;
                let alg = polyvector_dgla(&vol);
                for t in [q(0), q(1)] {
                    if !vanishes(&module_axiom_residual(&alg, &dual_vtop_module(t, &vol), &xs, x.uvtop()?)?) {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        ),
        Identity::trials(
            "linfty.adjoint_action_module",
            S,
            "the algebra acting on itself",
            "exact; arities 0 to arity cap",
            |c, r, t| {
                let mut v = module_inputs(c, r, t, c.cfg.arity_cap);
                *v.last_mut().expect("nonempty") = fields(c, r, 1).remove(0);
                v
            },
            |_, v| {
                let (vol, xs, m) = split_module(v)?;
                let alg = polyvector_dgla(&vol);
                Ok(vanishes(&module_axiom_residual(&alg, &adjoint_action_module(&alg), &xs, m.uvector()?)?))
            },
        ),
        Identity::trials(
            "linfty.chains_over_cochains",
            S,
            "Hochschild chains with b + uB as a module over cochains",
            "exact; arities 0 to arity cap, dimension ≤ 2",
            |c, r, _| {
                let n = r.gen_range(0..=c.cfg.arity_cap);
                let mut v = cochain_inputs(c, r, n);
                let s = Sampler::new(c.cfg.dim.min(2), -1, 1, 2, 1);
                v.push(Value::UChain(USeries::from_coeffs(vec![s.chain(r, 2), s.chain(r, 1)])));
                v
            },
            |_, v| {
                let last = v.len() - 1;
                let xs = ops(&v[..last])?;
                let r = module_axiom_residual(&cochain_dgla(), &chains_module_cochain(), &xs, v[last].uchain()?)?;
                Ok(vanishes(&r))
            },
        ),
        Identity::trials(
            "linfty.pullback_u_zero",
            S,
            "pullback of the flat forms module along u = 0 is L^(0)",
            "exact; arities 0 to arity cap",
            |c, r, t| module_inputs(c, r, t, c.cfg.arity_cap),
            |_, v| {
                let (vol, xs, a) = split_module(v)?;
                let pulled = pullback_module(u_zero_projection(), &forms_module_flat());
                Ok(pulled.eval(&xs, a.uform()?)? == forms_module(q(0), &vol).eval(&xs, a.uform()?)?)
            },
        ),
        Identity::trials(
            "linfty.hkr_morphism_arity_zero",
            S,
            "HKR map intertwines b + uB with ud",
            "exact; arity 0 only",
            |c, r, t| {
                let s = Sampler::new(c.cfg.dim, -2, 2, 2, 1);
                let n = r.gen_range(0..=c.cfg.dim.min(2));
                vec![Value::Volume(c.volume(t)), Value::UChain(USeries::constant(s.chain(r, n), 1))]
            },
            |_, v| {
                let vol = v[0].volume()?;
                let r = morphism_residual(
                    &polyvector_dgla(vol),
                    &chains_module_trivial(),
                    &forms_module(q(0), vol),
                    &hkr_morphism(),
                    &[],
                    v[1].uchain()?,
                )?;
                Ok(vanishes(&r))
            },
        ),
        Identity::exact(
            "linfty.exp_morphism",
            S,
            "H^(1) = exp(−ι⁺/u) is a morphism from L^(0) to L^(1)",
            "arities 0 to 2 modulo u³; multilinear coefficients without 1/n!",
            |_| {
                let ok = exp_candidate_passes(-1, ExpNormalization::Plain, 4)?;
                Ok(Outcome { pass: ok.iter().all(|&b| b), detail: Some(format!("{ok:?}")), table: None })
            },
        ),
        Identity::exact(
            "linfty.exp_morphism_factorial",
            S,
            "exponential with 1/n! on the multilinear coefficients",
            "arities 0 to 2; expected to fail at arity 2",
            |_| {
                let ok = exp_candidate_passes(-1, ExpNormalization::Factorial, 4)?;
                Ok(Outcome { pass: ok.iter().all(|&b| b), detail: Some(format!("{ok:?}")), table: None })
            },
        )
        .expect_failure(),
        Identity::exact(
            "linfty.adjoint_is_dual",
            S,
            "adjoint of L^(t) under the residue pairing is the dual action; adjoint twice is the identity",
            "solved on exponent window −2..2, u-degree ≤ 1; t ∈ {0, 1}; arities 0 to 1",
            |_| {
                let vol = VolumeForm::standard(2);
                let s = Sampler::new(2, 0, 1, 1, 1);
                let w = Window::new(-2, 2)?;
                let window = AdjointWindow { candidates: uvtop_basis(&vol, &w, 1), tests: uform_basis(2, &w, 1) };
                let mut pass = true;
                for t in [q(0), q(1)] {
                    let forms = forms_module(t.clone(), &vol);
                    let adj = adjoint_module(&forms, vt_form_pairing(), window.clone())?;
                    let dual = dual_vtop_module(t, &vol);
                    let back = adjoint_module(&adj, transpose_pairing(vt_form_pairing()), window.swapped())?;
                    for seed in 0..3 {
                        let mut rng = Sampler::rng(seed);
                        let odd = seed % 2 == 0;
                        let x = UVTop::new(s.umultivector_of_parity(&mut rng, odd), vol.clone());
                        let a = s.uform_of_parity(&mut rng, odd);
                        for n in 0..=1 {
                            let xs: Vec<_> = (0..n).map(|i| s.umultivector_of_parity(&mut rng, i == 0)).collect();
                            pass &= adj.eval(&xs, &x)? == dual.eval(&xs, &x)?;
                            pass &= back.eval(&xs, &a)? == forms.eval(&xs, &a)?;
                        }
                    }
                }
                Ok(Outcome { pass, detail: None, table: None })
            },
        ),
        Identity::exact(
            "linfty.adjoint_of_hkr",
            S,
            "adjoint of the HKR map is the HKR map on top forms",
            "k-vector fields for k = 1, 2; equality up to the factor 1/k!",
            |_| {
                let vol = VolumeForm::standard(2);
                let mut pass = true;
                for (k, w) in [(1usize, 2), (2, 1)] {
                    let window = AdjointWindow {
                        candidates: topform_cochain_basis(2, k, &Window::new(-w, w)?, 1),
                        tests: chain_basis(2, k, &Window::new(-2, 2)?, 0),
                    };
                    let adj = adjoint_morphism(&hkr_morphism(), vt_form_pairing(), cochain_chain_pairing(), window)?;
                    let idx: Vec<usize> = (0..k).collect();
                    let nu = MultiVector::term(LaurentPoly::monomial(q(3), vec![1, 1]), &idx)?;
                    let x = UVTop::new(USeries::constant(nu.clone(), 0), vol.clone());
                    let fact = if k == 2 { qf(1, 2) } else { q(1) };
                    let want = hkr_vt(&VTop::new(nu, vol.clone())?)?.scaled(&fact);
                    pass &= adj.eval(&[], &x)? == Some(want);
                }
                Ok(Outcome { pass, detail: None, table: None })
            },
        ),
        Identity::exact(
            "linfty.toy_dual_reading",
            S,
            "dual reading of the toy morphism recovers the HKR map on top forms",
            "k = 1, 2 with density 2 t_1; symbols and projections modulo ∇-exact terms",
            |_| {
                let vol = VolumeForm::new(q(2), vec![1, 0])?;
                let vstar = reinterpret_psm(&toy_psm(), probes(2, 2));
                let w = Window::new(-3, 3)?;
                let mut pass = true;
                for k in 1..=2usize {
                    let idx: Vec<usize> = (0..k).collect();
                    let nu = MultiVector::term(LaurentPoly::monomial(q(3), vec![1, -1]), &idx)?;
                    let x = UVTop::new(USeries::constant(nu.clone(), 2), vol.clone());
                    let Some(lam) = vstar.eval(&[], &x)? else {
                        pass = false;
                        continue;
                    };
                    let got = symbolize(functional_component(&lam, &vol, 0, 2), 2, k + 1, 1)?;
                    let want = embed_cochain(&hkr_vt(&VTop::new(nu, vol.clone())?)?)?;
                    pass &= got == want;
                    pass &= project_top_mod_exact(&got, &w)? == project_top_mod_exact(&want, &w)?;
                }
                Ok(Outcome { pass, detail: None, table: None })
            },
        ),
        Identity::exact(
            "linfty.transport_of_zero_morphism",
            S,
            "dual reading of the zero morphism is a morphism",
            "arities 0 to 1, functionals compared on probe chains",
            |_| {
                let vol = VolumeForm::standard(2);
                let alg = polyvector_dgla(&vol);
                let vstar = reinterpret_psm(&scale_family(&toy_psm(), 0), probes(2, 1));
                let source = vtop_adjoint_module(&alg, &vol);
                let target = functional_module(&chains_module_hkr(), &vol);
                let s = Sampler::new(2, -1, 1, 1, 1);
                let mut rng = Sampler::rng(11);
                let x = UVTop::new(s.umultivector_of_parity(&mut rng, false), vol.clone());
                let xs = vec![s.umultivector_of_parity(&mut rng, true)];
                let mut pass = true;
                for n in 0..=1 {
                    pass &= vanishes(&morphism_residual(&alg, &source, &target, &vstar, &xs[..n], &x)?);
                }
                Ok(Outcome { pass, detail: None, table: None })
            },
        ),
        Identity::exact(
            "linfty.functional_differential",
            S,
            "differential on functionals squares to zero on dual readings",
            "toy morphism image of one field, probe chains",
            |_| {
                let vol = VolumeForm::standard(2);
                let alg = polyvector_dgla(&vol);
                let target = functional_module(&chains_module_hkr(), &vol);
                let vstar = reinterpret_psm(&toy_psm(), probes(2, 2));
                let s = Sampler::new(2, -1, 1, 1, 2);
                let mut rng = Sampler::rng(10);
                let x = UVTop::new(s.umultivector_of_parity(&mut rng, true), vol.clone());
                let pass = match vstar.eval(&[], &x)? {
                    Some(lam) => vanishes(&module_axiom_residual(&alg, &target, &[], &lam)?),
                    None => true,
                };
                Ok(Outcome { pass, detail: None, table: None })
            },
        ),
        Identity::trials(
            "linfty.trivial_module",
            S,
            "multivector fields with the trivial action",
            "exact; arities 0 to arity cap",
            |c, r, t| {
                let mut v = module_inputs(c, r, t, c.cfg.arity_cap);
                *v.last_mut().expect("nonempty") = fields(c, r, 1).remove(0);
                v
            },
            |_, v| {
                let (vol, xs, m) = split_module(v)?;
                let alg = polyvector_dgla(&vol);
                Ok(vanishes(&module_axiom_residual(&alg, &trivial_module(&vol), &xs, m.uvector()?)?))
            },
        ),
        Identity::trials(
            "linfty.hkr_morphism_arity_one",
            S,
            "HKR map alone is not a module morphism at arity one",
            "exact; arity 1, recorded as an expected failure",
            |c, r, t| {
                let s = Sampler::new(c.cfg.dim, -2, 2, 2, 1);
                let n = r.gen_range(1..=c.cfg.dim.min(2));
                let mut v = vec![Value::Volume(c.volume(t))];
                v.extend(fields(c, r, 1));
                v.push(Value::UChain(USeries::constant(s.chain(r, n), 1)));
                v
            },
            |_, v| {
                let (vol, xs, ch) = split_module(v)?;
                let r = morphism_residual(
                    &polyvector_dgla(&vol),
                    &chains_module_trivial(),
                    &forms_module(q(0), &vol),
                    &hkr_morphism(),
                    &xs,
                    ch.uchain()?,
                )?;
                Ok(vanishes(&r))
            },
        )
        .expect_failure(),
        Identity::trials(
            "linfty.divergence_contraction",
            S,
            "ι_{div ν}Ω = d ι_ν Ω",
            "exact",
            |c, r, t| vec![Value::Volume(c.volume(t)), Value::Vector(c.sampler(2).multivector(r))],
            |_, v| {
                let (vol, nu) = (v[0].volume()?, v[1].vector()?);
                let om = vol.as_form();
                Ok(contract(&divergence(vol, nu)?, &om)? == de_rham(&contract(nu, &om)?))
            },
        ),
        Identity::exact(
            "linfty.transport_of_toy_morphism",
            S,
            "residual of the dual reading of the toy morphism equals the residual of the toy morphism",
            "arities 0 and 1 of V* against 1 and 2 of V; every probe chain; modulo the top u-order",
            |_| {
                let vol = VolumeForm::standard(2);
                let alg = polyvector_dgla(&vol);
                let ucap = 3;
                let pr = probes(2, ucap);
                let vstar = reinterpret_psm(&toy_psm(), pr.clone());
                let source = vtop_adjoint_module(&alg, &vol);
                let target = functional_module(&chains_module_hkr(), &vol);
                let (chains, triv) = (chains_module_hkr(), trivial_module(&vol));
                let s = Sampler::new(2, -1, 1, 1, ucap);
                let (mut pass, mut nonzero) = (true, 0);
                for seed in 0..4u64 {
                    let mut rng = Sampler::rng(20 + seed);
                    let x = UVTop::new(s.umultivector_of_parity(&mut rng, seed % 2 == 0), vol.clone());
                    let y = s.umultivector_of_parity(&mut rng, seed < 2);
                    for n in 0..=1 {
                        let xs = &[y.clone()][..n];
                        let r = morphism_residual(&alg, &source, &target, &vstar, xs, &x)?;
                        let mut args = xs.to_vec();
                        args.push(x.mv.mul_u());
                        for c in pr.iter() {
                            let zero = x.mv.zero_like();
                            let a = morphism_residual(&alg, &chains, &triv, &toy_psm(), &args, c)?.unwrap_or(zero.clone());
                            let rc = match &r {
                                Some(r) => r.apply(c)?,
                                None => zero,
                            };
                            let (a, rc) = (a.with_ucap(ucap - 1), rc.with_ucap(ucap - 1));
                            nonzero += usize::from(!a.is_zero());
                            pass &= a == rc;
                        }
                    }
                }
                Ok(Outcome {
                    pass,
                    detail: Some(format!("{nonzero} probe evaluations with a nonzero residual")),
                    table: None,
                })
            },
        ),
        Identity::trials(
            "linfty.control.bracket_without_parity",
            S,
            "planted error: Q2 without the parity factor",
            "symmetry and Q² at arity 2",
            |c, r, t| {
                let mut v = vec![Value::Volume(c.volume(t))];
                v.extend(fields(c, r, 2));
                v
            },
            |_, v| {
                let fam = polyvector_dgla_without_parity(v[0].volume()?);
                let xs = uvectors(&v[1..])?;
                Ok(vanishes(&coderivation_square_residual(&fam, &xs)?) && vanishes(&symmetry_defect(&fam, &xs, 0)?))
            },
        )
        .as_control(),
    ]
}
