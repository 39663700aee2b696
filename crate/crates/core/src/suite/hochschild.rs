use super::{Ctx, Identity, SuiteConfig, SuiteName, Value};
use crate::cartan::de_rham;
use crate::hochschild::{
    chain_boundary, cochain_action, cochain_differential, connes_b, gerstenhaber, hkr_chains, HochChain, MultiDiffOp,
    ValueTag,
};
use crate::ring::{parity_sign, Linear};
use crate::sample::TrialRng;
use rand::Rng;

const S: SuiteName = SuiteName::Hochschild;

fn op(c: &Ctx, r: &mut TrialRng, terms: usize) -> Value {
    let arity = r.gen_range(1..=c.cfg.arity_cap);
    let mut s = c.sampler(terms);
    s.max_order = 1;
    Value::Op(s.multidiffop(r, arity, ValueTag::Scalar))
}

fn chain(c: &Ctx, r: &mut TrialRng, max_len: usize) -> Value {
    let n = r.gen_range(0..=max_len);
    Value::Chain(c.sampler(2).chain(r, n))
}

fn deg(d: &MultiDiffOp) -> i64 {
    d.degree()
}

pub fn identities(_cfg: &SuiteConfig) -> Vec<Identity> {
    vec![
        Identity::trials(
            "hochschild.cochain_differential_squared",
            S,
            "Hochschild differential on cochains squares to zero",
            "exact; arity ≤ cap",
            |c, r, _| vec![op(c, r, 3)],
            |_, v| Ok(cochain_differential(&cochain_differential(v[0].op()?)?)?.is_zero()),
        ),
        Identity::trials(
            "hochschild.gerstenhaber_antisymmetry",
            S,
            "graded antisymmetry of the Gerstenhaber bracket",
            "exact; arities ≤ cap",
            |c, r, _| vec![op(c, r, 2), op(c, r, 2)],
            |_, v| {
                let (a, b) = (v[0].op()?, v[1].op()?);
                Ok(gerstenhaber(a, b)? == gerstenhaber(b, a)?.signed(-parity_sign(deg(a) * deg(b))))
            },
        ),
        Identity::trials(
            "hochschild.gerstenhaber_jacobi",
            S,
            "graded Jacobi identity of the Gerstenhaber bracket",
            "exact; arities ≤ cap",
            |c, r, _| vec![op(c, r, 1), op(c, r, 1), op(c, r, 1)],
            |_, v| {
                let (a, b, c) = (v[0].op()?, v[1].op()?, v[2].op()?);
                let lhs = gerstenhaber(a, &gerstenhaber(b, c)?)?;
                let rhs = gerstenhaber(&gerstenhaber(a, b)?, c)?
                    .plus(&gerstenhaber(b, &gerstenhaber(a, c)?)?.signed(parity_sign(deg(a) * deg(b))));
                Ok(lhs == rhs)
            },
        ),
        Identity::trials(
            "hochschild.chain_boundary_squared",
            S,
            "Hochschild boundary squares to zero",
            "exact; chain length ≤ 4",
            |c, r, _| vec![chain(c, r, 4)],
            |_, v| Ok(chain_boundary(&chain_boundary(v[0].chain()?)).is_zero()),
        ),
        Identity::trials(
            "hochschild.connes_b_squared",
            S,
            "Connes operator squares to zero",
            "exact; chain length ≤ 4",
            |c, r, _| vec![chain(c, r, 4)],
            |_, v| Ok(connes_b(&connes_b(v[0].chain()?)).is_zero()),
        ),
        Identity::trials(
            "hochschild.mixed_complex",
            S,
            "b B + B b = 0, so (b + uB)² = 0",
            "exact; chain length ≤ 4",
            |c, r, _| vec![chain(c, r, 4)],
            |_, v| {
                let x = v[0].chain()?;
                Ok(chain_boundary(&connes_b(x)).plus(&connes_b(&chain_boundary(x))).is_zero())
            },
        ),
        Identity::trials(
            "hochschild.boundary_is_multiplication_action",
            S,
            "b_H equals the action of the multiplication cochain",
            "exact; chain length ≤ 3",
            |c, r, _| vec![chain(c, r, 3)],
            |_, v| {
                let x = v[0].chain()?;
                Ok(cochain_action(&MultiDiffOp::m0(x.dim()), x)? == chain_boundary(x))
            },
        ),
        Identity::trials(
            "hochschild.connes_b_commutes_with_action",
            S,
            "B graded-commutes with the cochain action",
            "exact; B L_D − (−1)^{|D|} L_D B, arity ≤ cap",
            |c, r, _| vec![op(c, r, 2), chain(c, r, 3)],
            |_, v| {
                let (d, x) = (v[0].op()?, v[1].chain()?);
                let lhs = connes_b(&cochain_action(d, x)?);
                let rhs = cochain_action(d, &connes_b(x))?.signed(parity_sign(deg(d)));
                Ok(lhs == rhs)
            },
        ),
        Identity::trials(
            "hochschild.action_respects_bracket",
            S,
            "the cochain action is a Lie action",
            "exact; L_[D1,D2] = [L_D1, L_D2]",
            |c, r, _| vec![op(c, r, 1), op(c, r, 1), chain(c, r, 3)],
            |_, v| {
                let (a, b, x) = (v[0].op()?, v[1].op()?, v[2].chain()?);
                let lhs = cochain_action(&gerstenhaber(a, b)?, x)?;
                let ab = cochain_action(a, &cochain_action(b, x)?)?;
                let ba = cochain_action(b, &cochain_action(a, x)?)?;
                Ok(lhs == ab.minus(&ba.signed(parity_sign(deg(a) * deg(b)))))
            },
        ),
        Identity::trials(
            "hochschild.action_respects_differential",
            S,
            "the cochain action intertwines the differentials",
            "exact; L_{b^H D} = [b_H, L_D]",
            |c, r, _| vec![op(c, r, 2), chain(c, r, 3)],
            |_, v| {
                let (d, x) = (v[0].op()?, v[1].chain()?);
                let lhs = cochain_action(&cochain_differential(d)?, x)?;
                let bl = chain_boundary(&cochain_action(d, x)?);
                let lb = cochain_action(d, &chain_boundary(x))?;
                Ok(lhs == bl.minus(&lb.signed(parity_sign(deg(d)))))
            },
        ),
        Identity::trials(
            "hochschild.hkr_kills_boundary",
            S,
            "HKR map vanishes on boundaries",
            "exact; chain length ≤ 4",
            |c, r, _| vec![chain(c, r, 4)],
            |_, v| Ok(hkr_chains(&chain_boundary(v[0].chain()?)).is_zero()),
        ),
        Identity::trials(
            "hochschild.hkr_intertwines_connes_b",
            S,
            "HKR map sends Connes B to the de Rham differential",
            "exact; chain length ≤ 3",
            |c, r, _| vec![chain(c, r, 3)],
            |_, v| {
                let x = v[0].chain()?;
                Ok(hkr_chains(&connes_b(x)) == de_rham(&hkr_chains(x)))
            },
        ),
        Identity::trials(
            "hochschild.normalization_preserved",
            S,
            "operations keep chains normalized",
            "b, B and L_D on normalized chains",
            |c, r, _| vec![op(c, r, 2), chain(c, r, 3)],
            |_, v| {
                let (d, x) = (v[0].op()?, v[1].chain()?);
                let outs: Vec<HochChain> = vec![chain_boundary(x), connes_b(x), cochain_action(d, x)?];
                Ok(outs.iter().all(|o| o.is_normalized()))
            },
        ),
    ]
}
