use super::graded::{sign, Graded};
use crate::error::Result;
use crate::ring::q;
use std::collections::BTreeMap;
use std::sync::Arc;

pub type AlgFn<A> = Arc<dyn Fn(&[A]) -> Result<A> + Send + Sync>;
pub type ModFn<A, M, N> = Arc<dyn Fn(&[A], &M) -> Result<N> + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    AlgebraCoderivation,
    ModuleCoderivation,
    ModuleMorphism,
}

/// Taylor coefficients `Q_n`, `n ≥ 1`, of an L∞ algebra on `A`.
///
/// Missing arities are zero.
#[derive(Clone)]
pub struct AlgebraFamily<A> {
    coeffs: BTreeMap<usize, AlgFn<A>>,
}

impl<A: Graded + 'static> AlgebraFamily<A> {
    pub fn new() -> Self {
        AlgebraFamily {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn with(mut self, arity: usize, f: AlgFn<A>) -> Self {
        assert!(arity >= 1, "algebra coefficients start at arity 1");
        self.coeffs.insert(arity, f);
        self
    }

    pub fn kind(&self) -> FamilyKind {
        FamilyKind::AlgebraCoderivation
    }

    /// Coderivations have degree one.
    pub fn degree_shift(&self) -> i64 {
        1
    }

    pub fn arities(&self) -> Vec<usize> {
        self.coeffs.keys().copied().collect()
    }

    /// `Q_n(x)`, or `None` when the coefficient is zero.
    pub fn eval(&self, xs: &[A]) -> Result<Option<A>> {
        match self.coeffs.get(&xs.len()) {
            Some(f) => f(xs).map(Some),
            None => Ok(None),
        }
    }
}

impl<A: Graded + 'static> Default for AlgebraFamily<A> {
    fn default() -> Self {
        Self::new()
    }
}

/// Taylor coefficients `F_n(x_1,…,x_n; m)`, `n ≥ 0`, of a module coderivation
/// (`M = N`) or a module morphism `M → N`.
#[derive(Clone)]
pub struct TaylorFamily<A, M, N> {
    kind: FamilyKind,
    coeffs: BTreeMap<usize, ModFn<A, M, N>>,
}

impl<A: Graded + 'static, M: Graded + 'static, N: Graded + 'static> TaylorFamily<A, M, N> {
    pub fn new(kind: FamilyKind) -> Self {
        assert!(kind != FamilyKind::AlgebraCoderivation);
        TaylorFamily {
            kind,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn with(mut self, arity: usize, f: ModFn<A, M, N>) -> Self {
        self.coeffs.insert(arity, f);
        self
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    /// `+1` for coderivations, `0` for morphisms.
    pub fn degree_shift(&self) -> i64 {
        match self.kind {
            FamilyKind::ModuleMorphism => 0,
            _ => 1,
        }
    }

    pub fn arities(&self) -> Vec<usize> {
        self.coeffs.keys().copied().collect()
    }

    pub fn eval(&self, xs: &[A], m: &M) -> Result<Option<N>> {
        match self.coeffs.get(&xs.len()) {
            Some(f) => f(xs, m).map(Some),
            None => Ok(None),
        }
    }

    pub fn coefficient(&self, arity: usize) -> Option<ModFn<A, M, N>> {
        self.coeffs.get(&arity).cloned()
    }
}

/// L∞ structure of a dgla: `Q_1 = d`, `Q_2(x_1,x_2) = −(−1)^{|x_1|}[x_1,x_2]`.
pub fn dgla_to_linfty<A: Graded + 'static>(
    d: Option<Arc<dyn Fn(&A) -> Result<A> + Send + Sync>>,
    bracket: Option<Arc<dyn Fn(&A, &A) -> Result<A> + Send + Sync>>,
) -> AlgebraFamily<A> {
    let mut fam = AlgebraFamily::new();
    if let Some(d) = d {
        fam = fam.with(1, Arc::new(move |xs: &[A]| d(&xs[0])));
    }
    if let Some(br) = bracket {
        fam = fam.with(
            2,
            Arc::new(move |xs: &[A]| {
                let v = br(&xs[0], &xs[1])?;
                Ok(v.signed(-sign(xs[0].degree())))
            }),
        );
    }
    fam
}

/// L∞ module of a dgla module: `Q̃_0 = δ`, `Q̃_1(x; m) = −(−1)^{|x|} L_x m`.
pub fn module_to_linfty<A: Graded + 'static, M: Graded + 'static>(
    delta: Option<Arc<dyn Fn(&M) -> Result<M> + Send + Sync>>,
    action: Option<Arc<dyn Fn(&A, &M) -> Result<M> + Send + Sync>>,
) -> TaylorFamily<A, M, M> {
    let mut fam = TaylorFamily::new(FamilyKind::ModuleCoderivation);
    if let Some(delta) = delta {
        fam = fam.with(0, Arc::new(move |_: &[A], m: &M| delta(m)));
    }
    if let Some(l) = action {
        fam = fam.with(
            1,
            Arc::new(move |xs: &[A], m: &M| Ok(l(&xs[0], m)?.signed(-sign(xs[0].degree())))),
        );
    }
    fam
}

/// Adjoint module `Q̃_n(x_1,…,x_n; x) = Q_{n+1}(x_1,…,x_n,x)`.
pub fn adjoint_action_module<A: Graded + 'static>(q_fam: &AlgebraFamily<A>) -> TaylorFamily<A, A, A> {
    let mut fam = TaylorFamily::new(FamilyKind::ModuleCoderivation);
    for n in q_fam.arities() {
        let qf = q_fam.clone();
        fam = fam.with(
            n - 1,
            Arc::new(move |xs: &[A], m: &A| {
                let mut all = xs.to_vec();
                all.push(m.clone());
                Ok(qf.eval(&all)?.expect("arity present"))
            }),
        );
    }
    fam
}

/// Pullback of a module along a strict dgla morphism `ψ`.
pub fn pullback_module<B: Graded + 'static, A: Graded + 'static, M: Graded + 'static>(
    psi: Arc<dyn Fn(&B) -> Result<A> + Send + Sync>,
    module: &TaylorFamily<A, M, M>,
) -> TaylorFamily<B, M, M> {
    let mut fam = TaylorFamily::new(module.kind());
    for n in module.arities() {
        let f = module.coefficient(n).expect("arity present");
        let psi = psi.clone();
        fam = fam.with(
            n,
            Arc::new(move |ys: &[B], m: &M| {
                let xs: Result<Vec<A>> = ys.iter().map(|y| psi(y)).collect();
                f(&xs?, m)
            }),
        );
    }
    fam
}

/// Identity morphism of a module.
pub fn identity_morphism<A: Graded + 'static, M: Graded + 'static>() -> TaylorFamily<A, M, M> {
    TaylorFamily::new(FamilyKind::ModuleMorphism).with(0, Arc::new(|_: &[A], m: &M| Ok(m.clone())))
}

/// Rescales every coefficient (handy for controls).
pub fn scale_family<A: Graded + 'static, M: Graded + 'static, N: Graded + 'static>(
    fam: &TaylorFamily<A, M, N>,
    c: i64,
) -> TaylorFamily<A, M, N> {
    let mut out = TaylorFamily::new(fam.kind());
    for n in fam.arities() {
        let f = fam.coefficient(n).expect("arity present");
        out = out.with(n, Arc::new(move |xs: &[A], m: &M| Ok(f(xs, m)?.scaled(&q(c)))));
    }
    out
}
