//! Wedge, contraction, de Rham differential, Lie derivative and the
//! Schouten bracket.

use super::skew::{merge_sign, DiffForm, IndexSet, MultiVector, Skew, SkewKind};
use crate::error::Result;
use crate::ring::{parity_sign, LaurentPoly, Linear};

/// Graded-commutative wedge product.
pub fn wedge<K: SkewKind>(a: &Skew<K>, b: &Skew<K>) -> Result<Skew<K>> {
    a.check_dim(b.dim())?;
    let mut out = Skew::zero(a.dim());
    for (i, f) in a.comps() {
        for (j, g) in b.comps() {
            if let Some((s, idx)) = merge_sign(i, j) {
                out.add_comp(idx, (f * g).signed(s));
            }
        }
    }
    Ok(out)
}

/// `ι_{∂_I} dt_J` on basis elements.
///
/// `ι_{∂_i}` removes `dt_i` with sign `(-1)^position`, and
/// `ι_{∂_{i1}∧…∧∂_{ik}} = ι_{∂_{i1}} ∘ … ∘ ι_{∂_{ik}}`.
pub fn iota_basis(vector_idx: &[usize], form_idx: &[usize]) -> Option<(i64, IndexSet)> {
    let mut sign = 1;
    let mut rest: IndexSet = form_idx.to_vec();
    for &i in vector_idx.iter().rev() {
        let pos = rest.iter().position(|&j| j == i)?;
        if pos % 2 == 1 {
            sign = -sign;
        }
        rest.remove(pos);
    }
    Some((sign, rest))
}

/// Interior product `ι_γ α`.
pub fn contract(gamma: &MultiVector, alpha: &DiffForm) -> Result<DiffForm> {
    gamma.check_dim(alpha.dim())?;
    let mut out = DiffForm::zero(alpha.dim());
    for (i, f) in gamma.comps() {
        for (j, g) in alpha.comps() {
            if let Some((s, idx)) = iota_basis(i, j) {
                out.add_comp(idx, (f * g).signed(s));
            }
        }
    }
    Ok(out)
}

/// de Rham differential.
pub fn de_rham(alpha: &DiffForm) -> DiffForm {
    let dim = alpha.dim();
    let mut out = DiffForm::zero(dim);
    for (j, f) in alpha.comps() {
        for i in 0..dim {
            if j.contains(&i) {
                continue;
            }
            let df = f.partial(i).expect("axis in range");
            if df.is_zero() {
                continue;
            }
            let (s, idx) = merge_sign(&[i], j).expect("disjoint");
            out.add_comp(idx, df.signed(s));
        }
    }
    out
}

/// Lie derivative `L_γ = [d, ι_γ] = d ι_γ - (-1)^k ι_γ d` on each rank-`k`
/// component of `γ`.
pub fn lie_derivative(gamma: &MultiVector, alpha: &DiffForm) -> Result<DiffForm> {
    gamma.check_dim(alpha.dim())?;
    let mut out = DiffForm::zero(alpha.dim());
    let d_alpha = de_rham(alpha);
    for (k, part) in gamma.homogeneous_parts() {
        let first = de_rham(&contract(&part, alpha)?);
        let second = contract(&part, &d_alpha)?;
        out = out.plus(&first).minus(&second.signed(parity_sign(k as i64)));
    }
    Ok(out)
}

/// Schouten bracket.
///
/// Written in odd coordinates `ξ_i = ∂_i`, for `P = f ξ_I`, `Q = g ξ_J` of
/// ranks `p`, `q`:
/// `[P,Q] = Σ_i (P ∂⃖_{ξ_i})(∂_i Q) − (−1)^{(p−1)(q−1)} (Q ∂⃖_{ξ_i})(∂_i P)`,
/// which on decomposable fields is the alternating double sum of Lie
/// brackets of the vector factors.
pub fn schouten(gamma: &MultiVector, nu: &MultiVector) -> Result<MultiVector> {
    gamma.check_dim(nu.dim())?;
    let mut out = MultiVector::zero(gamma.dim());
    for (i, f) in gamma.comps() {
        for (j, g) in nu.comps() {
            let p = i.len() as i64;
            let q = j.len() as i64;
            half_bracket(&mut out, i, f, j, g, 1);
            half_bracket(&mut out, j, g, i, f, -parity_sign((p - 1) * (q - 1)));
        }
    }
    Ok(out)
}

/// Adds `sign · Σ_i (f ξ_I ∂⃖_{ξ_i}) ∧ (∂_i g) ξ_J` to `out`.
fn half_bracket(
    out: &mut MultiVector,
    i_idx: &[usize],
    f: &LaurentPoly,
    j_idx: &[usize],
    g: &LaurentPoly,
    sign: i64,
) {
    let p = i_idx.len();
    for (pos, &axis) in i_idx.iter().enumerate() {
        let dg = g.partial(axis).expect("axis in range");
        if dg.is_zero() {
            continue;
        }
        let right_sign = parity_sign((p - 1 - pos) as i64);
        let rest: IndexSet = i_idx.iter().copied().filter(|&x| x != axis).collect();
        if let Some((s, idx)) = merge_sign(&rest, j_idx) {
            out.add_comp(idx, (f * &dg).signed(sign * right_sign * s));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    fn mono(c: i64, e: &[i32]) -> LaurentPoly {
        LaurentPoly::monomial(q(c), e.to_vec())
    }

    fn dform(c: i64, e: &[i32], idx: &[usize]) -> DiffForm {
        DiffForm::term(mono(c, e), idx).unwrap()
    }

    fn mv(c: i64, e: &[i32], idx: &[usize]) -> MultiVector {
        MultiVector::term(mono(c, e), idx).unwrap()
    }

    #[test]
    fn wedge_examples() {
        let d1 = MultiVector::basis(2, &[0]).unwrap();
        let d2 = MultiVector::basis(2, &[1]).unwrap();
        assert!(wedge(&d1, &d1).unwrap().is_zero());
        assert_eq!(wedge(&d1, &d2).unwrap(), MultiVector::basis(2, &[0, 1]).unwrap());
        let f = MultiVector::scalar(mono(3, &[1, -1]));
        assert_eq!(wedge(&f, &d2).unwrap(), mv(3, &[1, -1], &[1]));
    }

    #[test]
    fn contraction_examples() {
        let alpha = dform(1, &[0, 0], &[0, 1]);
        let f = mono(2, &[1, 0]);
        assert_eq!(
            contract(&MultiVector::scalar(f.clone()), &alpha).unwrap(),
            alpha.mul_function(&f)
        );
        let d1 = MultiVector::basis(2, &[0]).unwrap();
        assert_eq!(contract(&d1, &alpha).unwrap(), dform(1, &[0, 0], &[1]));
        let d12 = MultiVector::basis(2, &[0, 1]).unwrap();
        // ι_{∂1}ι_{∂2}(dt1∧dt2) = ι_{∂1}(-dt1) = -1
        assert_eq!(contract(&d12, &alpha).unwrap(), dform(-1, &[0, 0], &[]));
    }

    #[test]
    fn de_rham_examples() {
        assert_eq!(de_rham(&dform(1, &[1, 0], &[])), dform(1, &[0, 0], &[0]));
        assert!(de_rham(&dform(1, &[0, 0], &[0])).is_zero());
        assert_eq!(de_rham(&dform(1, &[1, 0], &[1])), dform(1, &[0, 0], &[0, 1]));
    }

    #[test]
    fn lie_derivative_examples() {
        let d1 = MultiVector::basis(2, &[0]).unwrap();
        assert_eq!(
            lie_derivative(&d1, &dform(1, &[1, 0], &[1])).unwrap(),
            dform(1, &[0, 0], &[1])
        );
        // L_f(1) = df
        let f = MultiVector::scalar(mono(1, &[2, 1]));
        let one = DiffForm::scalar(LaurentPoly::one(2));
        assert_eq!(
            lie_derivative(&f, &one).unwrap(),
            dform(2, &[1, 1], &[0]).plus(&dform(1, &[2, 0], &[1]))
        );
        // γ = ∂1∧∂2, α = t1 t2 dt1: ι_γ α = 0, ι_γ dα = ι_{∂1∧∂2}(-t1 dt1∧dt2) = t1
        let g = MultiVector::basis(2, &[0, 1]).unwrap();
        let a = dform(1, &[1, 1], &[0]);
        assert_eq!(lie_derivative(&g, &a).unwrap(), dform(-1, &[1, 0], &[]));
    }

    #[test]
    fn schouten_examples() {
        let f = MultiVector::scalar(mono(1, &[1, 2]));
        let g = MultiVector::scalar(mono(1, &[-1, 0]));
        assert!(schouten(&f, &g).unwrap().is_zero());
        let d1 = MultiVector::basis(2, &[0]).unwrap();
        let t1d1 = mv(1, &[1, 0], &[0]);
        assert_eq!(schouten(&d1, &t1d1).unwrap(), d1);
        let t1 = MultiVector::scalar(mono(1, &[1, 0]));
        assert_eq!(schouten(&d1, &t1).unwrap(), MultiVector::scalar(LaurentPoly::one(2)));
    }
}
