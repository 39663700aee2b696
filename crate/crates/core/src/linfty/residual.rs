use super::family::{AlgebraFamily, TaylorFamily};
use super::graded::{sign, Graded};
use crate::error::Result;
use crate::ring::Linear;

/// Shifted degree `|x| − 1` of an algebra element placed in `g[1]`.
pub fn shifted_degree<A: Graded>(x: &A) -> i64 {
    x.degree() - 1
}

/// The split of `xs` into `(x_S, x_{S^c})` selected by `mask`, and the
/// Koszul sign of the unshuffle for the shifted degrees.
pub fn unshuffle<A: Clone>(xs: &[A], shifted: &[i64], mask: usize) -> (Vec<A>, Vec<A>, i64) {
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut odd_right = 0i64;
    let mut swaps = 0i64;
    for (i, x) in xs.iter().enumerate() {
        let odd = shifted[i].rem_euclid(2) == 1;
        if mask & (1 << i) != 0 {
            left.push(x.clone());
            if odd {
                swaps += odd_right;
            }
        } else {
            right.push(x.clone());
            if odd {
                odd_right += 1;
            }
        }
    }
    (left, right, sign(swaps))
}

fn shifted_all<A: Graded>(xs: &[A]) -> Vec<i64> {
    xs.iter().map(shifted_degree).collect()
}

struct Acc<X>(Option<X>);

impl<X: Linear> Acc<X> {
    fn add(&mut self, s: i64, x: Option<X>) {
        if let Some(x) = x {
            let x = x.signed(s);
            self.0 = Some(match self.0.take() {
                Some(acc) => acc.plus(&x),
                None => x,
            });
        }
    }
}

/// Arity-`n` component of `Q ∘ Q` on `x_1…x_n`; `None` when no term occurs.
pub fn coderivation_square_residual<A: Graded + 'static>(
    q_fam: &AlgebraFamily<A>,
    xs: &[A],
) -> Result<Option<A>> {
    let n = xs.len();
    let sh = shifted_all(xs);
    let mut acc = Acc(None);
    for mask in 1..(1usize << n) {
        let (s, rest, eps) = unshuffle(xs, &sh, mask);
        let Some(inner) = q_fam.eval(&s)? else { continue };
        let mut args = vec![inner];
        args.extend(rest);
        acc.add(eps, q_fam.eval(&args)?);
    }
    Ok(acc.0)
}

/// Graded symmetry defect `Q_n(x) − ε Q_n(x_σ)` for a transposition of two
/// neighbouring inputs `i, i+1`.
pub fn symmetry_defect<A: Graded + 'static>(q_fam: &AlgebraFamily<A>, xs: &[A], i: usize) -> Result<Option<A>> {
    let mut swapped = xs.to_vec();
    swapped.swap(i, i + 1);
    let eps = sign(shifted_degree(&xs[i]) * shifted_degree(&xs[i + 1]));
    let mut acc = Acc(None);
    acc.add(1, q_fam.eval(xs)?);
    acc.add(-eps, q_fam.eval(&swapped)?);
    Ok(acc.0)
}

/// Arity-`n` component of `Q̃ ∘ Q̃` for an L∞ module structure.
pub fn module_axiom_residual<A: Graded + 'static, M: Graded + 'static>(
    q_fam: &AlgebraFamily<A>,
    module: &TaylorFamily<A, M, M>,
    xs: &[A],
    m: &M,
) -> Result<Option<M>> {
    let n = xs.len();
    let sh = shifted_all(xs);
    let mut acc = Acc(None);
    for mask in 0..(1usize << n) {
        let (s, rest, eps) = unshuffle(xs, &sh, mask);
        if mask != 0 {
            if let Some(inner) = q_fam.eval(&s)? {
                let mut args = vec![inner];
                args.extend(rest.iter().cloned());
                acc.add(eps, module.eval(&args, m)?);
            }
        }
        if let Some(inner) = module.eval(&rest, m)? {
            let pass: i64 = s.iter().map(shifted_degree).sum();
            acc.add(eps * sign(pass), module.eval(&s, &inner)?);
        }
    }
    Ok(acc.0)
}

/// Arity-`n` component of `Q̃_N ∘ φ − φ ∘ Q̃_M` for a module morphism.
pub fn morphism_residual<A: Graded + 'static, M: Graded + 'static, N: Graded + 'static>(
    q_fam: &AlgebraFamily<A>,
    source: &TaylorFamily<A, M, M>,
    target: &TaylorFamily<A, N, N>,
    phi: &TaylorFamily<A, M, N>,
    xs: &[A],
    m: &M,
) -> Result<Option<N>> {
    let n = xs.len();
    let sh = shifted_all(xs);
    let mut acc = Acc(None);
    for mask in 0..(1usize << n) {
        let (s, rest, eps) = unshuffle(xs, &sh, mask);
        if let Some(inner) = phi.eval(&rest, m)? {
            acc.add(eps, target.eval(&s, &inner)?);
        }
        if mask != 0 {
            if let Some(inner) = q_fam.eval(&s)? {
                let mut args = vec![inner];
                args.extend(rest.iter().cloned());
                acc.add(-eps, phi.eval(&args, m)?);
            }
        }
        if let Some(inner) = source.eval(&rest, m)? {
            let pass: i64 = s.iter().map(shifted_degree).sum();
            acc.add(-eps * sign(pass), phi.eval(&s, &inner)?);
        }
    }
    Ok(acc.0)
}

/// `true` if the residual is absent or zero.
pub fn vanishes<X: Linear>(r: &Option<X>) -> bool {
    r.as_ref().map(|x| x.is_zero()).unwrap_or(true)
}
