use super::family::{FamilyKind, TaylorFamily};
use super::graded::{sign, Graded};
use super::residual::shifted_degree;
use crate::error::{Error, Result};
use crate::linalg::{Reducer, SparseVec};
use crate::ring::{Linear, Rational};
use std::sync::Arc;

/// A bilinear pairing returning the coefficients of its `u`-expansion
/// (a single entry for scalar pairings).
pub type PairingHandle<L, R> = Arc<dyn Fn(&L, &R) -> Result<Vec<Rational>> + Send + Sync>;

/// Finite bases for an exact adjoint solve: the adjoint is sought in the
/// span of `candidates` and determined by its pairings with `tests`.
#[derive(Clone, Debug)]
pub struct AdjointWindow<C, T> {
    pub candidates: Vec<C>,
    pub tests: Vec<T>,
}

impl<C: Clone, T: Clone> AdjointWindow<C, T> {
    /// The window with the roles of the two sides exchanged.
    pub fn swapped(&self) -> AdjointWindow<T, C> {
        AdjointWindow {
            candidates: self.tests.clone(),
            tests: self.candidates.clone(),
        }
    }
}

/// `⟨r, l⟩ := ⟨l, r⟩`.
pub fn transpose_pairing<L: 'static, R: 'static>(p: PairingHandle<L, R>) -> PairingHandle<R, L> {
    Arc::new(move |r: &R, l: &L| p(l, r))
}

type Key = (usize, usize);

fn pairing_row<C, T>(p: &PairingHandle<C, T>, c: &C, tests: &[T]) -> Result<SparseVec<Key>> {
    let mut row = SparseVec::new();
    for (l, t) in tests.iter().enumerate() {
        for (j, v) in p(c, t)?.into_iter().enumerate() {
            if !Linear::is_zero(&v) {
                row.insert((l, j), v);
            }
        }
    }
    Ok(row)
}

/// Solver for `⟨Y, t_l⟩ = rhs_l` with `Y` in the candidate span.
struct Solver<C, T> {
    window: AdjointWindow<C, T>,
    pairing: PairingHandle<C, T>,
    reducer: Reducer<Key>,
}

impl<C: Linear, T: Clone> Solver<C, T> {
    fn new(window: AdjointWindow<C, T>, pairing: PairingHandle<C, T>) -> Result<Self> {
        if window.candidates.is_empty() {
            return Err(Error::WindowTooSmall("no candidates".into()));
        }
        let mut reducer = Reducer::new();
        for c in &window.candidates {
            reducer.insert(pairing_row(&pairing, c, &window.tests)?);
        }
        if reducer.rank() < window.candidates.len() {
            return Err(Error::WindowTooSmall(format!(
                "pairing is degenerate on the candidates: rank {} of {}",
                reducer.rank(),
                window.candidates.len()
            )));
        }
        Ok(Solver {
            window,
            pairing,
            reducer,
        })
    }

    fn solve(&self, rhs: SparseVec<Key>) -> Result<C> {
        let x = self
            .reducer
            .solve(rhs)
            .ok_or_else(|| Error::WindowTooSmall("adjoint lies outside the candidate span".into()))?;
        let mut out = self.window.candidates[0].zero_like();
        for (i, c) in x {
            out = out.plus(&self.window.candidates[i].scaled(&c));
        }
        Ok(out)
    }
}

/// Right-hand side `s ⟨left, f(t_l)⟩` over all tests.
fn rhs<L, R, T>(
    p: &PairingHandle<L, R>,
    left: &L,
    tests: &[T],
    s: i64,
    f: impl Fn(&T) -> Result<Option<R>>,
) -> Result<SparseVec<Key>> {
    let mut row = SparseVec::new();
    for (l, t) in tests.iter().enumerate() {
        if let Some(r) = f(t)? {
            for (j, v) in p(left, &r)?.into_iter().enumerate() {
                if !Linear::is_zero(&v) {
                    row.insert((l, j), v * Rational::from_integer(s.into()));
                }
            }
        }
    }
    Ok(row)
}

/// Adjoint module structure on `M̂`:
/// `⟨Q̃*_n(x; m̂), m⟩ = −(−1)^{|m̂|(n+1+Σ|x_j|)} ⟨m̂, Q̃_n(x; m)⟩`.
pub fn adjoint_module<A: Graded + 'static, M: Graded + 'static, H: Graded + 'static>(
    module: &TaylorFamily<A, M, M>,
    pairing: PairingHandle<H, M>,
    window: AdjointWindow<H, M>,
) -> Result<TaylorFamily<A, H, H>> {
    let solver = Arc::new(Solver::new(window, pairing)?);
    let mut fam = TaylorFamily::new(FamilyKind::ModuleCoderivation);
    for n in module.arities() {
        let f = module.coefficient(n).expect("arity present");
        let solver = solver.clone();
        fam = fam.with(
            n,
            Arc::new(move |xs: &[A], h: &H| {
                let e = n as i64 + 1 + xs.iter().map(|x| x.degree()).sum::<i64>();
                let s = -sign(h.degree() * e);
                let b = rhs(&solver.pairing, h, &solver.window.tests, s, |m| f(xs, m).map(Some))?;
                solver.solve(b)
            }),
        );
    }
    Ok(fam)
}

/// Adjoint of a module morphism `φ: M → N`, a morphism `N̂ → M̂`:
/// `⟨φ*_n(x; n̂), m⟩ = (−1)^{|φ*_n(x;n̂)|(n+Σ|x_j|)} ⟨n̂, φ_n(x; m)⟩`, where the
/// output degree is `|n̂| + Σ(|x_j| − 1)`.
pub fn adjoint_morphism<A: Graded + 'static, M: Graded + 'static, N: Graded + 'static, MH, NH>(
    phi: &TaylorFamily<A, M, N>,
    pairing_n: PairingHandle<NH, N>,
    pairing_m: PairingHandle<MH, M>,
    window: AdjointWindow<MH, M>,
) -> Result<TaylorFamily<A, NH, MH>>
where
    MH: Graded + 'static,
    NH: Graded + 'static,
{
    let solver = Arc::new(Solver::new(window, pairing_m)?);
    let mut fam = TaylorFamily::new(FamilyKind::ModuleMorphism);
    for n in phi.arities() {
        let f = phi.coefficient(n).expect("arity present");
        let solver = solver.clone();
        let pairing_n = pairing_n.clone();
        fam = fam.with(
            n,
            Arc::new(move |xs: &[A], h: &NH| {
                let out_deg = h.degree() + xs.iter().map(shifted_degree).sum::<i64>();
                let e = n as i64 + xs.iter().map(|x| x.degree()).sum::<i64>();
                let s = sign(out_deg * e);
                let b = rhs(&pairing_n, h, &solver.window.tests, s, |m| f(xs, m).map(Some))?;
                solver.solve(b)
            }),
        );
    }
    Ok(fam)
}
