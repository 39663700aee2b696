use super::{Identity, Outcome, SuiteConfig, SuiteName, Value};
use crate::cartan::{
    contract, divergence, formal_adjoint_diffop, lie_derivative, pair_vt_form, residue_integral, schouten, wedge,
    DiffForm, MultiVector, VTop, VolumeForm,
};
use crate::error::Result;
use crate::hochschild::ValueTag;
use crate::linalg::Reducer;
use crate::linfty::index_sets;
use crate::ring::{koszul_sign, parity_sign, q, GradedDegree, LaurentPoly, Linear};
use rand::seq::SliceRandom;
use rand::Rng;

const S: SuiteName = SuiteName::Cartan;

fn rank(x: &MultiVector) -> i64 {
    x.ranks().first().copied().unwrap_or(0) as i64
}

/// `[A, B] = AB − (−1)^{ab} BA`.
fn comm(ab: DiffForm, ba: DiffForm, a: i64, b: i64) -> DiffForm {
    ab.minus(&ba.signed(parity_sign(a * b)))
}

fn integrate(f: &LaurentPoly, vol: &VolumeForm) -> Result<crate::ring::Rational> {
    residue_integral(&wedge(&DiffForm::scalar(f.clone()), &vol.as_form())?)
}

fn function_part(a: &DiffForm) -> LaurentPoly {
    a.rank_part(0).comp(&[])
}

pub fn identities(_cfg: &SuiteConfig) -> Vec<Identity> {
    vec![
        Identity::trials(
            "cartan.contraction_multiplicative",
            S,
            "interior product of a wedge",
            "exact",
            |c, r, _| {
                let s = c.sampler(3);
                vec![Value::Vector(s.multivector(r)), Value::Vector(s.multivector(r)), Value::Form(s.form(r))]
            },
            |_, v| {
                let (g, n, a) = (v[0].vector()?, v[1].vector()?, v[2].form()?);
                Ok(contract(&wedge(g, n)?, a)? == contract(g, &contract(n, a)?)?)
            },
        ),
        Identity::trials(
            "cartan.schouten_contraction_commutator",
            S,
            "Schouten bracket via contraction and Lie derivative",
            "exact; both commutator forms",
            |c, r, _| {
                let s = c.sampler(3);
                vec![
                    Value::Vector(s.homogeneous_multivector(r)),
                    Value::Vector(s.homogeneous_multivector(r)),
                    Value::Form(s.form(r)),
                ]
            },
            |_, v| {
                let (g, n, a) = (v[0].vector()?, v[1].vector()?, v[2].form()?);
                let (kg, kn) = (rank(g), rank(n));
                let lhs = contract(&schouten(g, n)?, a)?;
                let c1 = comm(contract(g, &lie_derivative(n, a)?)?, lie_derivative(n, &contract(g, a)?)?, kg, kn - 1);
                let c2 = comm(lie_derivative(g, &contract(n, a)?)?, contract(n, &lie_derivative(g, a)?)?, kg - 1, kn)
                    .signed(parity_sign(kg - 1));
                Ok(lhs == c1 && lhs == c2)
            },
        ),
        Identity::trials(
            "cartan.schouten_antisymmetry",
            S,
            "graded antisymmetry of the Schouten bracket",
            "exact",
            |c, r, _| {
                let s = c.sampler(3);
                vec![Value::Vector(s.homogeneous_multivector(r)), Value::Vector(s.homogeneous_multivector(r))]
            },
            |_, v| {
                let (g, n) = (v[0].vector()?, v[1].vector()?);
                let e = (rank(g) - 1) * (rank(n) - 1);
                Ok(schouten(g, n)? == schouten(n, g)?.signed(-parity_sign(e)))
            },
        ),
        Identity::trials(
            "cartan.schouten_jacobi",
            S,
            "graded Jacobi identity of the Schouten bracket",
            "exact",
            |c, r, _| {
                let s = c.sampler(2);
                (0..3).map(|_| Value::Vector(s.homogeneous_multivector(r))).collect()
            },
            |_, v| {
                let (a, b, c) = (v[0].vector()?, v[1].vector()?, v[2].vector()?);
                let lhs = schouten(a, &schouten(b, c)?)?;
                let rhs = schouten(&schouten(a, b)?, c)?
                    .plus(&schouten(b, &schouten(a, c)?)?.signed(parity_sign((rank(a) - 1) * (rank(b) - 1))));
                Ok(lhs == rhs)
            },
        ),
        Identity::trials(
            "cartan.divergence_leibniz",
            S,
            "divergence is a derivation of the Schouten bracket",
            "exact; three volume densities",
            |c, r, t| {
                let s = c.sampler(3);
                vec![
                    Value::Volume(c.volume(t)),
                    Value::Vector(s.homogeneous_multivector(r)),
                    Value::Vector(s.homogeneous_multivector(r)),
                ]
            },
            |_, v| {
                let (vol, g, n) = (v[0].volume()?, v[1].vector()?, v[2].vector()?);
                let lhs = divergence(vol, &schouten(g, n)?)?;
                let rhs = schouten(&divergence(vol, g)?, n)?
                    .plus(&schouten(g, &divergence(vol, n)?)?.signed(parity_sign(rank(g) - 1)));
                Ok(lhs == rhs)
            },
        ),
        Identity::trials(
            "cartan.divergence_bv_generator",
            S,
            "divergence generates the Schouten bracket",
            "exact; [γ,ν] = (−1)^{|γ|}(div(γ∧ν) − divγ∧ν − (−1)^{k_γ} γ∧divν)",
            |c, r, t| {
                let s = c.sampler(3);
                vec![
                    Value::Volume(c.volume(t)),
                    Value::Vector(s.homogeneous_multivector(r)),
                    Value::Vector(s.homogeneous_multivector(r)),
                ]
            },
            |_, v| {
                let (vol, g, n) = (v[0].volume()?, v[1].vector()?, v[2].vector()?);
                let kg = rank(g);
                let defect = divergence(vol, &wedge(g, n)?)?
                    .minus(&wedge(&divergence(vol, g)?, n)?)
                    .minus(&wedge(g, &divergence(vol, n)?)?.signed(parity_sign(kg)));
                Ok(schouten(g, n)? == defect.signed(parity_sign(kg - 1)))
            },
        ),
        Identity::trials(
            "cartan.divergence_squared",
            S,
            "divergence squares to zero",
            "exact; three volume densities",
            |c, r, t| vec![Value::Volume(c.volume(t)), Value::Vector(c.sampler(4).multivector(r))],
            |_, v| {
                let (vol, g) = (v[0].volume()?, v[1].vector()?);
                Ok(divergence(vol, &divergence(vol, g)?)?.is_zero())
            },
        ),
        Identity::trials(
            "cartan.integral_contraction",
            S,
            "integral of a contraction against the volume form",
            "exact; ∫(ι_γα)Ω = ∫α∧ι_γΩ",
            |c, r, t| {
                let s = c.sampler(3);
                let k = r.gen_range(0..=c.cfg.dim);
                vec![
                    Value::Volume(c.volume(t)),
                    Value::Vector(s.multivector_of_ranks(r, &[k])),
                    Value::Form(s.form_of_ranks(r, &[k])),
                ]
            },
            |_, v| {
                let (vol, g, a) = (v[0].volume()?, v[1].vector()?, v[2].form()?);
                let lhs = integrate(&function_part(&contract(g, a)?), vol)?;
                let rhs = residue_integral(&wedge(a, &contract(g, &vol.as_form())?)?)?;
                Ok(lhs == rhs)
            },
        ),
        Identity::trials(
            "cartan.integral_lie_derivative",
            S,
            "integral of a Lie derivative against the volume form",
            "exact; ∫(L_γα)Ω = −∫(ι_{div γ}α)Ω",
            |c, r, t| {
                let s = c.sampler(3);
                let k = r.gen_range(1..=c.cfg.dim);
                vec![
                    Value::Volume(c.volume(t)),
                    Value::Vector(s.multivector_of_ranks(r, &[k])),
                    Value::Form(s.form_of_ranks(r, &[k - 1])),
                ]
            },
            |_, v| {
                let (vol, g, a) = (v[0].volume()?, v[1].vector()?, v[2].form()?);
                let lhs = integrate(&function_part(&lie_derivative(g, a)?), vol)?;
                let rhs = integrate(&function_part(&contract(&divergence(vol, g)?, a)?), vol)?;
                Ok(lhs == -rhs)
            },
        ),
        Identity::exact(
            "cartan.pairing_nondegenerate",
            S,
            "nondegeneracy of the top-form pairing",
            "every monomial VT element of the window is separated by test forms",
            |c| {
                let mut worst = None;
                for vol in c.volumes() {
                    let w = c.window();
                    let shift = vol.exponent().clone();
                    let mut red: Reducer<(Vec<usize>, Vec<i32>)> = Reducer::new();
                    let mut count = 0;
                    for idx in index_sets(c.cfg.dim) {
                        for e in w.exponents(c.cfg.dim) {
                            let nu = MultiVector::term(LaurentPoly::monomial(q(1), e.clone()), &idx)?;
                            let x = VTop::new(nu, vol.clone())?;
                            let mut row = std::collections::BTreeMap::new();
                            let te: Vec<i32> = e.iter().zip(&shift).map(|(a, k)| -a - k).collect();
                            let alpha = DiffForm::term(LaurentPoly::monomial(q(1), te.clone()), &idx)?;
                            let p = pair_vt_form(&x, &alpha)?;
                            if !Linear::is_zero(&p) {
                                row.insert((idx.clone(), te), p);
                            }
                            red.insert(row);
                            count += 1;
                        }
                    }
                    if red.rank() < count {
                        worst = Some(format!("rank {} of {} for density exponent {:?}", red.rank(), count, shift));
                    }
                }
                Ok(Outcome {
                    pass: worst.is_none(),
                    detail: worst,
                    table: None,
                })
            },
        ),
        Identity::trials(
            "cartan.formal_adjoint_pairing",
            S,
            "formal adjoint of a differential operator",
            "exact; ∫(Df)gΩ = ∫f(D†g)Ω, order ≤ 2",
            |c, r, t| {
                let s = c.sampler(2);
                vec![
                    Value::Volume(c.volume(t)),
                    Value::Op(s.multidiffop(r, 1, ValueTag::Scalar)),
                    Value::Vector(MultiVector::scalar(s.laurent(r))),
                    Value::Vector(MultiVector::scalar(s.laurent(r))),
                ]
            },
            |_, v| {
                let (vol, d) = (v[0].volume()?, v[1].op()?);
                let (f, g) = (v[2].vector()?.comp(&[]), v[3].vector()?.comp(&[]));
                let adj = formal_adjoint_diffop(d, vol)?;
                let lhs = integrate(&(&d.apply(&[f.clone()])? * &g), vol)?;
                let rhs = integrate(&(&f * &adj.apply(&[g])?), vol)?;
                Ok(lhs == rhs)
            },
        ),
        Identity::trials(
            "ring.laurent_ring_axioms",
            S,
            "Laurent polynomial ring",
            "associativity and distributivity",
            |c, r, _| {
                let s = c.sampler(4);
                (0..3).map(|_| Value::Vector(MultiVector::scalar(s.laurent(r)))).collect()
            },
            |_, v| {
                let (a, b, c) = (v[0].vector()?.comp(&[]), v[1].vector()?.comp(&[]), v[2].vector()?.comp(&[]));
                let assoc = &(&a * &b) * &c == &a * &(&b * &c);
                let dist = &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
                Ok(assoc && dist)
            },
        ),
        Identity::trials(
            "ring.partials_commute",
            S,
            "partial derivatives commute",
            "exact",
            |c, r, _| {
                let d = c.cfg.dim;
                vec![
                    Value::Vector(MultiVector::scalar(c.sampler(4).laurent(r))),
                    Value::Count(r.gen_range(0..d)),
                    Value::Count(r.gen_range(0..d)),
                ]
            },
            |_, v| {
                let (f, i, j) = (v[0].vector()?.comp(&[]), *v[1].count()?, *v[2].count()?);
                Ok(f.partial(i)?.partial(j)? == f.partial(j)?.partial(i)?)
            },
        ),
        Identity::trials(
            "ring.koszul_sign_homomorphism",
            S,
            "Koszul sign of a composite permutation",
            "ε(σ∘τ) = ε(τ)·ε(σ on τ-permuted degrees), up to 5 entries",
            |_, r, _| {
                let n = r.gen_range(1..=5);
                let mut p: Vec<usize> = (0..n).collect();
                let mut t: Vec<usize> = (0..n).collect();
                p.shuffle(r);
                t.shuffle(r);
                let degs: Vec<usize> = (0..n).map(|_| r.gen_range(0..4)).collect();
                vec![Value::Indices(p), Value::Indices(t), Value::Indices(degs)]
            },
            |_, v| {
                let (p, t, d) = (v[0].indices()?, v[1].indices()?, v[2].indices()?);
                if p.len() != t.len() || p.len() != d.len() {
                    return Ok(true);
                }
                let degs: Vec<GradedDegree> = d.iter().map(|&k| GradedDegree(k as i64)).collect();
                // apply t first, then p to the permuted list
                let composite: Vec<usize> = p.iter().map(|&i| t[i]).collect();
                let permuted: Vec<GradedDegree> = t.iter().map(|&i| degs[i]).collect();
                let lhs = koszul_sign(&composite, &degs)?;
                let rhs = koszul_sign(&t, &degs)? * koszul_sign(&p, &permuted)?;
                Ok(lhs == rhs)
            },
        ),
        Identity::trials(
            "ring.div_u_inverts_mul_u",
            S,
            "division by u",
            "div_u(u·s) equals s truncated one order lower",
            |c, r, _| vec![Value::UForm(c.sampler(3).uform(r))],
            |_, v| {
                let s = v[0].uform()?;
                if s.ucap() == 0 {
                    return Ok(true);
                }
                Ok(s.mul_u().div_u()? == s.with_ucap(s.ucap() - 1))
            },
        ),
    ]
}
