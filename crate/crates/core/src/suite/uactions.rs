use super::{Ctx, Identity, Outcome, SuiteConfig, SuiteName, Value};
use crate::cartan::{de_rham, divergence, pair_vt_form_u, schouten, VolumeForm};
use crate::error::{Error, Result};
use crate::linfty::ExpNormalization;
use crate::ring::{parity_sign, q, qf, Linear, Rational, TPoly};
use crate::sample::TrialRng;
use crate::uactions::{
    action_lt, action_lt_dual, action_lt_poly, action_lt_poly_without_div, action_lt_via_div_u, degree_parity,
    dual_differential, h_t_poly, UDiffForm, UMultiVector,
};
use rand::Rng;

const S: SuiteName = SuiteName::Uactions;

fn ts() -> Vec<Rational> {
    vec![q(0), q(1), q(-1), qf(1, 2), q(2)]
}

fn ud(a: &UDiffForm) -> UDiffForm {
    a.map(de_rham).mul_u()
}

fn u_div(vol: &VolumeForm, g: &UMultiVector) -> UMultiVector {
    g.map(|c| divergence(vol, c).expect("dimensions match")).mul_u()
}

fn bracket(g: &UMultiVector, n: &UMultiVector) -> UMultiVector {
    g.bilinear(n, |a, b| schouten(a, b).expect("dimensions match"))
}

fn deg(g: &UMultiVector) -> Result<i64> {
    let odd = degree_parity(g).ok_or(Error::Unsupported("mixed degree parity"))?;
    Ok(i64::from(odd))
}

/// Identities with one division by `u` hold modulo `u^cap`.
fn lose_one(p: TPoly<UDiffForm>) -> TPoly<UDiffForm> {
    p.map(|c| c.with_ucap(c.ucap().saturating_sub(1)))
}

fn field(c: &Ctx, r: &mut TrialRng) -> Value {
    let odd = r.gen_bool(0.5);
    Value::UVector(c.sampler(2).umultivector_of_parity(r, odd))
}

fn form(c: &Ctx, r: &mut TrialRng) -> Value {
    Value::UForm(c.sampler(2).uform(r))
}

/// Volume, `n` fields and one form.
fn inputs(c: &Ctx, r: &mut TrialRng, trial: usize, n: usize) -> Vec<Value> {
    let mut v = vec![Value::Volume(c.volume(trial))];
    v.extend((0..n).map(|_| field(c, r)));
    v.push(form(c, r));
    v
}

/// `h_{[γ,ν]}` against `[h_γ, L_ν] + (−1)^{|γ|}[L_γ, h_{ν'}]`, where `ν'` is
/// `ν` for the correct equation and `γ` for the literal misprint.
fn h_second(v: &[Value], use_nu: bool) -> Result<bool> {
    let vol = v[0].volume()?;
    let (g, n, a) = (v[1].uvector()?, v[2].uvector()?, v[3].uform()?);
    let (dg, dn) = (deg(g)?, deg(n)?);
    let l = |x: &UMultiVector, y: &UDiffForm| action_lt_poly(vol, x, y);
    let h = |x: &UMultiVector, y: &UDiffForm| h_t_poly(x, y);
    let after = |inner: TPoly<UDiffForm>, outer: &dyn Fn(&UDiffForm) -> Result<TPoly<UDiffForm>>| {
        inner.try_then(|y| outer(y))
    };
    let hl = after(l(n, a)?, &|y| h(g, y))?.minus(&after(h(g, a)?, &|y| l(n, y))?.scaled(&q(parity_sign((dg + 1) * dn))));
    let (m, dm) = if use_nu { (n, dn) } else { (g, dg) };
    let lh = after(h(m, a)?, &|y| l(g, y))?.minus(&after(l(g, a)?, &|y| h(m, y))?.scaled(&q(parity_sign(dg * (dm + 1)))));
    let rhs = hl.plus(&lh.scaled(&q(parity_sign(dg))));
    Ok(lose_one(h(&bracket(g, n), a)?) == lose_one(rhs))
}

pub fn identities(_cfg: &SuiteConfig) -> Vec<Identity> {
    vec![
        Identity::trials(
            "uactions.two_formulas_agree",
            S,
            "L^(t) directly and through the commutator with ud",
            "exact; t ∈ {0, 1, −1, 1/2, 2}",
            |c, r, t| inputs(c, r, t, 1),
            |_, v| {
                let (vol, g, a) = (v[0].volume()?, v[1].uvector()?, v[2].uform()?);
                for t in ts() {
                    if action_lt(&t, vol, g, a)? != action_lt_via_div_u(&t, vol, g, a)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        ),
        Identity::trials(
            "uactions.compatible_with_differentials",
            S,
            "ud ∘ L_γ − (−1)^{|γ|} L_γ ∘ ud = L_{u div γ}",
            "exact; t ∈ {0, 1, −1, 1/2, 2}",
            |c, r, t| inputs(c, r, t, 1),
            |_, v| {
                let (vol, g, a) = (v[0].volume()?, v[1].uvector()?, v[2].uform()?);
                let dg = deg(g)?;
                for t in ts() {
                    let lhs = ud(&action_lt(&t, vol, g, a)?).minus(&action_lt(&t, vol, g, &ud(a))?.signed(parity_sign(dg)));
                    if lhs != action_lt(&t, vol, &u_div(vol, g), a)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        ),
        Identity::trials(
            "uactions.lie_action",
            S,
            "[L_γ, L_ν] = L_{[γ,ν]}",
            "exact; t ∈ {0, 1, −1, 1/2, 2}",
            |c, r, t| inputs(c, r, t, 2),
            |_, v| {
                let (vol, g, n, a) = (v[0].volume()?, v[1].uvector()?, v[2].uvector()?, v[3].uform()?);
                let (dg, dn) = (deg(g)?, deg(n)?);
                for t in ts() {
                    let l = |x: &UMultiVector, y: &UDiffForm| action_lt(&t, vol, x, y);
                    let lhs = l(g, &l(n, a)?)?.minus(&l(n, &l(g, a)?)?.signed(parity_sign(dg * dn)));
                    if lhs != l(&bracket(g, n), a)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        ),
        Identity::trials(
            "uactions.h_first_equation",
            S,
            "−∂_t L^(t)_γ = [ud, h_γ] + h_{u div γ}",
            "polynomial in t; modulo u^cap",
            |c, r, t| inputs(c, r, t, 1),
            |_, v| {
                let (vol, g, a) = (v[0].volume()?, v[1].uvector()?, v[2].uform()?);
                let hpar = deg(g)? + 1;
                let lhs = action_lt_poly(vol, g, a)?.derivative().scaled(&q(-1));
                let first = h_t_poly(g, a)?.map(ud);
                let second = h_t_poly(g, &ud(a))?.scaled(&q(parity_sign(hpar)));
                let third = h_t_poly(&u_div(vol, g), a)?;
                Ok(lose_one(lhs) == lose_one(first.minus(&second).plus(&third)))
            },
        ),
        Identity::trials(
            "uactions.h_second_equation",
            S,
            "h_{[γ,ν]} = [h_γ, L_ν] + (−1)^{|γ|}[L_γ, h_ν]",
            "polynomial in t; modulo u^cap",
            |c, r, t| inputs(c, r, t, 2),
            |_, v| h_second(v, true),
        ),
        Identity::trials(
            "uactions.h_second_equation_literal",
            S,
            "second h equation as printed, with h_γ in the last commutator",
            "polynomial in t; modulo u^cap",
            |c, r, t| inputs(c, r, t, 2),
            |_, v| h_second(v, false),
        )
        .expect_failure(),
        Identity::trials(
            "uactions.dual_action_adjoint",
            S,
            "⟨L^(t)∨_γ x, α⟩ = −(−1)^{|γ||x|}⟨x, L^(t)_γ α⟩",
            "exact; t ∈ {0, 1, −1, 1/2, 2}",
            |c, r, t| {
                let vol = c.volume(t);
                let s = c.sampler(2);
                let x = s.uvtop(r, &vol);
                vec![Value::Volume(vol), field(c, r), Value::UVTop(x), form(c, r)]
            },
            |_, v| {
                let (vol, g, x, a) = (v[0].volume()?, v[1].uvector()?, v[2].uvtop()?, v[3].uform()?);
                let sign = -parity_sign(deg(g)? * deg(&x.mv)?);
                for t in ts() {
                    let lhs = pair_vt_form_u(&action_lt_dual(&t, vol, g, x)?, a)?;
                    let rhs = pair_vt_form_u(x, &action_lt(&t, vol, g, a)?)?;
                    if lhs != rhs.scaled(&q(sign)) {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        ),
        Identity::trials(
            "uactions.dual_differential",
            S,
            "δ² = 0 and ⟨δx, α⟩ = −(−1)^{|x|}⟨x, ud α⟩",
            "exact",
            |c, r, t| {
                let vol = c.volume(t);
                let x = c.sampler(2).uvtop(r, &vol);
                vec![Value::UVTop(x), form(c, r)]
            },
            |_, v| {
                let (x, a) = (v[0].uvtop()?, v[1].uform()?);
                let dx = dual_differential(x)?;
                let lhs = pair_vt_form_u(&dx, a)?;
                let rhs = pair_vt_form_u(x, &ud(a))?;
                Ok(dual_differential(&dx)?.is_zero() && lhs == rhs.scaled(&q(-parity_sign(deg(&x.mv)?))))
            },
        ),
        Identity::exact(
            "uactions.h1_sign_channel",
            S,
            "H^(1) = exp(s ι⁺/u) as a morphism from L^(0) to L^(1)",
            "s = ±1; morphism residual at arities 0 to 2 modulo u³; records the passing channel",
            |_| {
                let mut rows = Vec::new();
                let mut passing = Vec::new();
                for sg in [1i64, -1] {
                    let ok = super::linfty::exp_candidate_passes(sg, ExpNormalization::Plain, 4)?;
                    let all = ok.iter().all(|&b| b);
                    if all {
                        passing.push(sg);
                    }
                    rows.push(serde_json::json!({ "s": sg, "arities_passing": ok, "passes": all }));
                }
                Ok(Outcome {
                    pass: passing.len() == 1,
                    detail: Some(format!("passing channel: {passing:?}")),
                    table: Some(serde_json::Value::Array(rows)),
                })
            },
        ),
        Identity::trials(
            "uactions.control.lt_without_divergence",
            S,
            "planted error: L^(1) with the divergence term dropped",
            "compatibility with differentials at t = 1",
            |c, r, t| inputs(c, r, t, 1),
            |_, v| {
                let (vol, g, a) = (v[0].volume()?, v[1].uvector()?, v[2].uform()?);
                let dg = deg(g)?;
                let l = |x: &UMultiVector, y: &UDiffForm| action_lt_poly_without_div(vol, x, y).map(|p| p.eval(&q(1)));
                let lhs = ud(&l(g, a)?).minus(&l(g, &ud(a))?.signed(parity_sign(dg)));
                Ok(lhs == l(&u_div(vol, g), a)?)
            },
        )
        .as_control(),
    ]
}
