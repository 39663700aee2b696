use super::{Ctx, Identity, SuiteConfig, SuiteName, Value};
use crate::cartan::full_index;
use crate::extended::{
    connes_b_extended, cyclic_sigma, embed_cochain, extended_b, extended_b_with_wrap_sign, extended_nabla,
    hkr_vt, project_top_mod_exact, EElement, Window,
};
use crate::hochschild::{valued_differential, ValueTag};
use crate::ring::Linear;
use crate::sample::{cyclic_symmetrize, TrialRng};
use rand::Rng;

const S: SuiteName = SuiteName::Extended;

fn element(c: &Ctx, r: &mut TrialRng, normalized: bool) -> Value {
    let n = r.gen_range(0..=c.cfg.arity_cap);
    let p = r.gen_range(0..=c.cfg.dim);
    let mut s = c.sampler(3);
    s.max_order = 1;
    Value::Extended(s.eelement(r, n, &[p], normalized))
}

fn sigma_power(e: &EElement, k: usize) -> EElement {
    (0..k).fold(e.clone(), |acc, _| cyclic_sigma(&acc))
}

fn is_sigma_invariant(e: &EElement) -> bool {
    cyclic_sigma(e) == *e
}

pub fn identities(_cfg: &SuiteConfig) -> Vec<Identity> {
    vec![
        Identity::trials(
            "extended.b_squared",
            S,
            "cyclic bar differential squares to zero",
            "exact; slots ≤ cap + 1",
            |c, r, _| vec![element(c, r, false)],
            |_, v| {
                let e = v[0].extended()?;
                Ok(extended_b(&extended_b(e)).is_zero())
            },
        ),
        Identity::trials(
            "extended.nabla_squared",
            S,
            "flat connection squares to zero",
            "exact",
            |c, r, _| vec![element(c, r, false)],
            |_, v| Ok(extended_nabla(&extended_nabla(v[0].extended()?)).is_zero()),
        ),
        Identity::trials(
            "extended.b_nabla_anticommute",
            S,
            "b and ∇ anticommute",
            "exact",
            |c, r, _| vec![element(c, r, false)],
            |_, v| {
                let e = v[0].extended()?;
                Ok(extended_b(&extended_nabla(e)).plus(&extended_nabla(&extended_b(e))).is_zero())
            },
        ),
        Identity::trials(
            "extended.sigma_order",
            S,
            "σ^{n+1} is the identity on n+1 slots",
            "exact",
            |c, r, _| vec![element(c, r, false)],
            |_, v| {
                let e = v[0].extended()?;
                let mut ok = true;
                for (_, n) in e.bidegrees() {
                    let part = e.slot_part(n + 1);
                    ok &= sigma_power(&part, n + 1) == part;
                }
                Ok(ok)
            },
        ),
        Identity::trials(
            "extended.sigma_commutes_with_b",
            S,
            "σ commutes with b (literal operator identity)",
            "exact; σ∘b = b∘σ",
            |c, r, _| vec![element(c, r, false)],
            |_, v| {
                let e = v[0].extended()?;
                Ok(cyclic_sigma(&extended_b(e)) == extended_b(&cyclic_sigma(e)))
            },
        ),
        Identity::trials(
            "extended.b_preserves_cyclic_invariants",
            S,
            "b maps σ-invariant elements to σ-invariant elements",
            "exact; symmetrized random elements",
            |c, r, _| {
                let Value::Extended(e) = element(c, r, false) else { unreachable!() };
                vec![Value::Extended(cyclic_symmetrize(&e))]
            },
            |_, v| {
                let e = v[0].extended()?;
                if !is_sigma_invariant(e) {
                    return Ok(true);
                }
                Ok(is_sigma_invariant(&extended_b(e)))
            },
        ),
        Identity::trials(
            "extended.sigma_commutes_with_nabla",
            S,
            "σ commutes with ∇",
            "exact",
            |c, r, _| vec![element(c, r, false)],
            |_, v| {
                let e = v[0].extended()?;
                Ok(cyclic_sigma(&extended_nabla(e)) == extended_nabla(&cyclic_sigma(e)))
            },
        ),
        Identity::trials(
            "extended.nabla_preserves_cyclic_invariants",
            S,
            "∇ maps σ-invariant elements to σ-invariant elements",
            "exact; symmetrized random elements",
            |c, r, _| {
                let Value::Extended(e) = element(c, r, false) else { unreachable!() };
                vec![Value::Extended(cyclic_symmetrize(&e))]
            },
            |_, v| {
                let e = v[0].extended()?;
                if !is_sigma_invariant(e) {
                    return Ok(true);
                }
                Ok(is_sigma_invariant(&extended_nabla(e)))
            },
        ),
        Identity::trials(
            "extended.connes_b_squared",
            S,
            "Connes operator on normalized elements squares to zero",
            "exact",
            |c, r, _| vec![element(c, r, true)],
            |_, v| Ok(connes_b_extended(&connes_b_extended(v[0].extended()?)?)?.is_zero()),
        ),
        Identity::trials(
            "extended.mixed_complex",
            S,
            "(b + uB)² = 0 on normalized elements",
            "exact; b² = 0, B² = 0 and bB + Bb = 0",
            |c, r, _| vec![element(c, r, true)],
            |_, v| {
                let e = v[0].extended()?;
                let bb = extended_b(&extended_b(e));
                let big = connes_b_extended(e)?;
                let mixed = extended_b(&big).plus(&connes_b_extended(&extended_b(e))?);
                Ok(bb.is_zero() && connes_b_extended(&big)?.is_zero() && mixed.is_zero())
            },
        ),
        Identity::trials(
            "extended.embedding_chain_map",
            S,
            "embedding of top-form valued cochains",
            "exact; b∘ι = ι∘δ, ∇∘ι = 0, injective, image of slot-0 order 0 and top degree",
            |c, r, _| {
                let arity = r.gen_range(0..=c.cfg.arity_cap);
                let mut s = c.sampler(3);
                s.max_order = 1;
                vec![Value::Op(s.multidiffop(r, arity, ValueTag::TopForm))]
            },
            |c, v| {
                let phi = v[0].op()?;
                let e = embed_cochain(phi)?;
                let chain = extended_b(&e) == embed_cochain(&valued_differential(phi))?;
                let flat = extended_nabla(&e).is_zero();
                let injective = phi.is_zero() || !e.is_zero();
                let shape = e
                    .terms()
                    .all(|((form, slots), _)| *form == full_index(c.cfg.dim) && slots[0].iter().all(|&a| a == 0));
                Ok(chain && flat && injective && shape)
            },
        ),
        Identity::trials(
            "extended.hkr_vt_closed",
            S,
            "HKR image of VT elements is a cocycle",
            "exact; δ(hkr_vt(νΩ)) = 0",
            |c, r, t| {
                let s = c.sampler(3);
                let k = r.gen_range(0..=c.cfg.dim);
                vec![Value::Volume(c.volume(t)), Value::Vector(s.multivector_of_ranks(r, &[k]))]
            },
            |_, v| {
                let x = crate::cartan::VTop::new(v[1].vector()?.clone(), v[0].volume()?.clone())?;
                Ok(valued_differential(&hkr_vt(&x)?).is_zero())
            },
        ),
        Identity::trials(
            "extended.projection_kills_exact",
            S,
            "projection of top parts modulo ∇-exact terms",
            "exact; window sized to the input",
            |c, r, _| {
                let mut s = c.small_sampler(2, 0);
                s.max_order = 1;
                let n = r.gen_range(0..=1);
                vec![Value::Extended(s.eelement(r, n, &[c.cfg.dim.saturating_sub(1)], false))]
            },
            |_, v| {
                let e = v[0].extended()?;
                let w = Window::new(-4, 4)?;
                Ok(project_top_mod_exact(&extended_nabla(e), &w)?.is_zero())
            },
        ),
        Identity::trials(
            "extended.control.flipped_wrap_sign",
            S,
            "planted error: wrong sign on the wrap-around term of b",
            "b² with the flipped sign",
            |c, r, _| vec![element(c, r, false)],
            |_, v| {
                let e = v[0].extended()?;
                Ok(extended_b_with_wrap_sign(&extended_b_with_wrap_sign(e, true), true).is_zero())
            },
        )
        .as_control(),
    ]
}
