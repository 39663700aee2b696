//! Dual reading of morphisms `V` from chains into `(T[[u]], u div)`: the
//! family `V*` with values in maps `c ↦ ι_{λ(c)}Ω`, and recovery of
//! multidifferential symbols from such maps.

use super::family::{AlgebraFamily, FamilyKind, TaylorFamily};
use super::graded::{sign, Graded};
use super::residual::shifted_degree;
use crate::cartan::{contract, divergence, DiffForm, MultiVector, UVTop, VolumeForm};
use crate::error::{Error, Result};
use crate::extended::EElement;
use crate::hochschild::{hkr_chains, HochChain, MultiIndex, UHochChain};
use crate::linalg::{Reducer, SparseVec};
use crate::ring::{q, Exponent, LaurentPoly, Linear, Rational, USeries};
use crate::uactions::UMultiVector;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub type ChainMap = Arc<dyn Fn(&UHochChain) -> Result<UMultiVector> + Send + Sync>;

/// A linear map `λ` from chain series to multivector series, standing for the
/// form-valued functional `c ↦ ι_{λ(c)}Ω`.
///
/// Equality and vanishing are decided on a fixed list of probe chains.
#[derive(Clone)]
pub struct LambdaMap {
    degree: i64,
    probes: Arc<Vec<UHochChain>>,
    f: ChainMap,
}

impl LambdaMap {
    pub fn new(degree: i64, probes: Arc<Vec<UHochChain>>, f: ChainMap) -> Self {
        LambdaMap { degree, probes, f }
    }

    pub fn apply(&self, c: &UHochChain) -> Result<UMultiVector> {
        (self.f)(c)
    }

    pub fn probes(&self) -> &[UHochChain] {
        &self.probes
    }

    fn on_probes(&self) -> Vec<Option<UMultiVector>> {
        self.probes.iter().map(|c| self.apply(c).ok()).collect()
    }
}

impl fmt::Debug for LambdaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LambdaMap(degree {}, {} probes)", self.degree, self.probes.len())
    }
}

impl PartialEq for LambdaMap {
    fn eq(&self, other: &Self) -> bool {
        self.minus(other).is_zero()
    }
}

impl Linear for LambdaMap {
    fn zero_like(&self) -> Self {
        let f = self.f.clone();
        LambdaMap::new(self.degree, self.probes.clone(), Arc::new(move |c| Ok(f(c)?.zero_like())))
    }
    fn is_zero(&self) -> bool {
        self.on_probes().iter().all(|v| v.as_ref().map(|x| x.is_zero()).unwrap_or(false))
    }
    fn plus(&self, other: &Self) -> Self {
        let (f, g) = (self.f.clone(), other.f.clone());
        LambdaMap::new(self.degree, self.probes.clone(), Arc::new(move |c| Ok(f(c)?.plus(&g(c)?))))
    }
    fn scaled(&self, k: &Rational) -> Self {
        let (f, k) = (self.f.clone(), k.clone());
        LambdaMap::new(self.degree, self.probes.clone(), Arc::new(move |c| Ok(f(c)?.scaled(&k))))
    }
}

impl Graded for LambdaMap {
    fn degree(&self) -> i64 {
        self.degree
    }
}

/// The module structure on functionals induced by a chain module `P̃`:
/// `Õ_n(x; λ) = −(−1)^{|λ|(n+1+Σ|x_j|)} λ∘P̃_n(x; ·) + δ_{n0} div∘λ`.
pub fn functional_module(
    chains: &TaylorFamily<UMultiVector, UHochChain, UHochChain>,
    vol: &VolumeForm,
) -> TaylorFamily<UMultiVector, LambdaMap, LambdaMap> {
    let mut arities = chains.arities();
    if !arities.contains(&0) {
        arities.insert(0, 0);
    }
    let mut fam = TaylorFamily::new(FamilyKind::ModuleCoderivation);
    for n in arities {
        let p = chains.coefficient(n);
        let vol = vol.clone();
        fam = fam.with(
            n,
            Arc::new(move |xs: &[UMultiVector], lam: &LambdaMap| {
                let e = n as i64 + 1 + xs.iter().map(|x| x.degree()).sum::<i64>();
                let s = -sign(lam.degree * e);
                let (p, xs, vol, l) = (p.clone(), xs.to_vec(), vol.clone(), lam.f.clone());
                let deg = lam.degree + 1 + xs.iter().map(shifted_degree).sum::<i64>();
                let f: ChainMap = Arc::new(move |c: &UHochChain| {
                    let base = l(c)?;
                    let mut out = base.zero_like();
                    if let Some(p) = &p {
                        out = out.plus(&l(&p(&xs, c)?)?.signed(s));
                    }
                    if n == 0 {
                        let parts: Result<Vec<MultiVector>> =
                            base.coeffs().iter().map(|m| divergence(&vol, m)).collect();
                        out = out.plus(&USeries::from_coeffs(parts?));
                    }
                    Ok(out)
                });
                Ok(LambdaMap::new(deg, lam.probes.clone(), f))
            }),
        );
    }
    fam
}

/// Adjoint action of the polyvector algebra transported to `VT[[u]]`:
/// `Q̃_n(x; γΩ) = Q_{n+1}(x, γ)Ω`.
pub fn vtop_adjoint_module(q_fam: &AlgebraFamily<UMultiVector>, vol: &VolumeForm) -> TaylorFamily<UMultiVector, UVTop, UVTop> {
    let mut fam = TaylorFamily::new(FamilyKind::ModuleCoderivation);
    for n in q_fam.arities() {
        let (qf, vol) = (q_fam.clone(), vol.clone());
        fam = fam.with(
            n - 1,
            Arc::new(move |xs: &[UMultiVector], m: &UVTop| {
                let mut all = xs.to_vec();
                all.push(m.mv.clone());
                Ok(UVTop::new(qf.eval(&all)?.expect("arity present"), vol.clone()))
            }),
        );
    }
    fam
}

/// `V*_m(x_1,…,x_m)(γΩ) = (c ↦ V_{m+1}(x_1,…,x_m, uγ; c))`.
///
/// The functional carries its degree as a map of chains,
/// `|λ(c)| − |c| = |γ| + 1 + Σ (|x_j| + 1)`.
pub fn reinterpret_psm(
    v: &TaylorFamily<UMultiVector, UHochChain, UMultiVector>,
    probes: Arc<Vec<UHochChain>>,
) -> TaylorFamily<UMultiVector, UVTop, LambdaMap> {
    let mut fam = TaylorFamily::new(FamilyKind::ModuleMorphism);
    for n in v.arities().into_iter().filter(|&n| n >= 1) {
        let coeff = v.coefficient(n).expect("arity present");
        let probes = probes.clone();
        fam = fam.with(
            n - 1,
            Arc::new(move |xs: &[UMultiVector], m: &UVTop| {
                let mut all = xs.to_vec();
                all.push(m.mv.mul_u());
                let deg = Graded::degree(m) + 1 + xs.iter().map(shifted_degree).sum::<i64>();
                let coeff = coeff.clone();
                Ok(LambdaMap::new(deg, probes.clone(), Arc::new(move |c| coeff(&all, c))))
            }),
        );
    }
    fam
}

/// Scalar part of `ι_γ(a_0 da_1∧…∧da_k)` summed over tensor lengths.
fn contract_unnormalized(gamma: &MultiVector, c: &HochChain) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero(c.dim());
    let form = hkr_chains(c);
    for k in form.ranks() {
        let part = form.rank_part(k);
        let fact = (1..=k as i64).fold(q(1), |a, i| a * q(i));
        acc = acc.plus(&contract(gamma, &part)?.rank_part(0).comp(&[]).scaled(&fact));
    }
    Ok(acc)
}

/// A morphism from chains into `(T[[u]], u div)` with a single Taylor
/// coefficient, `V_1(x; c) = Σ_{j≥1} u^{j−1} ι_{x_j}(a_0 da_1∧…∧da_k)|_{rank 0}`,
/// extended `u`-bilinearly in `c`.
pub fn toy_psm() -> TaylorFamily<UMultiVector, UHochChain, UMultiVector> {
    TaylorFamily::new(FamilyKind::ModuleMorphism).with(
        1,
        Arc::new(|xs: &[UMultiVector], c: &UHochChain| {
            let x = &xs[0];
            let dim = x.coeff(0).dim();
            let cap = x.ucap().min(c.ucap());
            let mut out = vec![LaurentPoly::zero(dim); cap + 1];
            for (j, g) in x.coeffs().iter().enumerate().skip(1) {
                for (i, ci) in c.coeffs().iter().enumerate() {
                    if j - 1 + i <= cap {
                        out[j - 1 + i] = out[j - 1 + i].plus(&contract_unnormalized(g, ci)?);
                    }
                }
            }
            Ok(USeries::from_coeffs(out.into_iter().map(MultiVector::scalar).collect()))
        }),
    )
}

/// `(a_0,…,a_n) ↦ ι_{λ(a_0⊗…⊗a_n)_j}Ω`, the `u^j` part of the functional.
pub fn functional_component(
    lam: &LambdaMap,
    vol: &VolumeForm,
    j: usize,
    ucap: usize,
) -> impl Fn(&[LaurentPoly]) -> Result<DiffForm> {
    let (lam, omega) = (lam.clone(), vol.as_form());
    move |args: &[LaurentPoly]| {
        let c = USeries::constant(HochChain::tensor(args)?, ucap);
        let v = lam.apply(&c)?;
        if j > v.ucap() {
            return Ok(DiffForm::zero(omega.dim()));
        }
        contract(v.coeff(j), &omega)
    }
}

fn falling(e: i32, k: u32) -> Rational {
    (0..k as i32).fold(q(1), |acc, i| acc * q((e - i) as i64))
}

fn boxes(len: usize, k: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=k).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Recovers the extended element `Φ` with `Φ(t^{e_0},…,t^{e_n}) = f(t^{e_0},…,t^{e_n})`
/// for a multilinear `f` given by a multidifferential operator of order at most
/// `max_order` in each variable of each of the `slots` arguments.
///
/// `f(t^e) t^{−Σe}` is a polynomial in the exponents whose coefficients in the
/// falling-factorial basis are the coefficients of the operator; they are
/// solved for exactly from samples at negative exponents.
pub fn symbolize(
    f: impl Fn(&[LaurentPoly]) -> Result<DiffForm>,
    dim: usize,
    slots: usize,
    max_order: u32,
) -> Result<EElement> {
    if slots == 0 {
        return Err(Error::Unsupported("symbolize needs at least one slot"));
    }
    let width = dim * slots;
    let points: Vec<Vec<i32>> = boxes(width, max_order)
        .into_iter()
        .map(|v| v.into_iter().map(|x| -(x as i32) - 1).collect())
        .collect();
    let alphas = boxes(width, max_order);
    let mut reducer: Reducer<usize> = Reducer::new();
    for a in &alphas {
        let col: SparseVec<usize> = points
            .iter()
            .enumerate()
            .map(|(p, e)| (p, e.iter().zip(a).fold(q(1), |acc, (&x, &k)| acc * falling(x, k))))
            .filter(|(_, v)| !Linear::is_zero(v))
            .collect();
        reducer.insert(col);
    }
    // right-hand sides per (form index, monomial)
    let mut rhs: BTreeMap<(Vec<usize>, Exponent), SparseVec<usize>> = BTreeMap::new();
    for (p, e) in points.iter().enumerate() {
        let args: Vec<LaurentPoly> = e.chunks(dim).map(|c| LaurentPoly::monomial(q(1), c.to_vec())).collect();
        let total: Exponent = (0..dim).map(|i| e.iter().skip(i).step_by(dim).sum()).collect();
        for (idx, coeff) in f(&args)?.comps() {
            for (m, c) in coeff.terms() {
                let shifted: Exponent = m.iter().zip(&total).map(|(a, b)| a - b).collect();
                rhs.entry((idx.clone(), shifted)).or_default().insert(p, c.clone());
            }
        }
    }
    let mut out = EElement::zero(dim);
    for ((idx, m), b) in rhs {
        let x = reducer
            .solve(b)
            .ok_or_else(|| Error::WindowTooSmall("map is not a multidifferential operator of the given order".into()))?;
        for (a, c) in x {
            let alpha = &alphas[a];
            let slot_indices: Vec<MultiIndex> = alpha.chunks(dim).map(|s| s.to_vec()).collect();
            let order: Exponent = (0..dim)
                .map(|i| alpha.iter().skip(i).step_by(dim).map(|&x| x as i32).sum())
                .collect();
            let mono: Exponent = m.iter().zip(&order).map(|(a, b)| a + b).collect();
            out.add_term((idx.clone(), slot_indices), LaurentPoly::monomial(c, mono));
        }
    }
    Ok(out)
}
