use super::element::EElement;
use crate::cartan::{full_index, merge_sign, VTop};
use crate::error::{Error, Result};
use crate::hochschild::multiindex::{add_indices, leibniz_splits, order, unit_index};
use crate::hochschild::{MultiDiffOp, MultiIndex, ValueTag};
use crate::ring::{LaurentPoly, Linear};

fn signed(c: &LaurentPoly, odd: bool) -> LaurentPoly {
    if odd {
        -c
    } else {
        c.clone()
    }
}

/// Cyclic bar differential; for `Φ` with `m` slots,
/// `(bΦ)(a_0,…,a_m) = Σ_{i<m} (−1)^i Φ(…,a_i a_{i+1},…) + (−1)^m Φ(a_m a_0, a_1,…,a_{m−1})`.
pub fn extended_b(e: &EElement) -> EElement {
    extended_b_with_wrap_sign(e, false)
}

/// `extended_b` with the wrap-around sign optionally flipped (negative control).
pub fn extended_b_with_wrap_sign(e: &EElement, flip_wrap: bool) -> EElement {
    e.map_terms(|(form, slots), c, out| {
        let m = slots.len();
        for i in 0..m {
            for (w, parts) in leibniz_splits(&slots[i], 2) {
                let mut s: Vec<MultiIndex> = Vec::with_capacity(m + 1);
                s.extend_from_slice(&slots[..i]);
                s.extend(parts);
                s.extend_from_slice(&slots[i + 1..]);
                out.add_term((form.clone(), s), signed(&c.scaled(&w), i % 2 == 1));
            }
        }
        for (w, mut parts) in leibniz_splits(&slots[0], 2) {
            let last = parts.pop().expect("two parts");
            let mut s: Vec<MultiIndex> = Vec::with_capacity(m + 1);
            s.push(parts.pop().expect("two parts"));
            s.extend_from_slice(&slots[1..]);
            s.push(last);
            let odd = (m % 2 == 1) != flip_wrap;
            out.add_term((form.clone(), s), signed(&c.scaled(&w), odd));
        }
    })
}

/// `(σΦ)(a_0,…,a_n) = (−1)^n Φ(a_1,…,a_n,a_0)`.
pub fn cyclic_sigma(e: &EElement) -> EElement {
    e.map_terms(|(form, slots), c, out| {
        let n = slots.len() - 1;
        let mut s = Vec::with_capacity(n + 1);
        s.push(slots[n].clone());
        s.extend_from_slice(&slots[..n]);
        out.add_term((form.clone(), s), signed(c, n % 2 == 1));
    })
}

/// Flat connection `(∇Φ)(a) = (−1)^n d(Φ(a))` for `Φ` with `n + 1` slots.
///
/// The derivative falls on the coefficient and on every slot by Leibniz.
pub fn extended_nabla(e: &EElement) -> EElement {
    let dim = e.dim();
    e.map_terms(|(form, slots), c, out| {
        let n = slots.len() - 1;
        for i in 0..dim {
            let Some((sign, new_form)) = merge_sign(&[i], form) else {
                continue;
            };
            let odd = (sign < 0) != (n % 2 == 1);
            let dc = c.partial(i).expect("axis in range");
            out.add_term((new_form.clone(), slots.clone()), signed(&dc, odd));
            let ei = unit_index(dim, i);
            for j in 0..=n {
                let mut s = slots.clone();
                s[j] = add_indices(&s[j], &ei);
                out.add_term((new_form.clone(), s), signed(c, odd));
            }
        }
    })
}

/// Connes' operator on normalized elements, lowering the slot count by one:
/// `(BΦ)(a_0,…,a_{n−1}) = Σ_j (−1)^{(n−1)j} Φ(1, a_j,…,a_{n−1}, a_0,…,a_{j−1})`.
pub fn connes_b_extended(e: &EElement) -> Result<EElement> {
    if !e.is_normalized() {
        return Err(Error::NotNormalized("Connes B needs a normalized element"));
    }
    Ok(e.map_terms(|(form, slots), c, out| {
        let n = slots.len() - 1;
        if n == 0 || order(&slots[0]) > 0 {
            return;
        }
        for j in 0..n {
            // new slot k feeds Φ's slot ((k − j) mod n) + 1
            let s: Vec<MultiIndex> = (0..n).map(|k| slots[(k + n - j) % n + 1].clone()).collect();
            out.add_term((form.clone(), s), signed(c, ((n - 1) * j) % 2 == 1));
        }
    }))
}

/// `φ ↦ ((a_0,…,a_n) ↦ a_0 φ(a_1,…,a_n))` for a top-form valued cochain.
pub fn embed_cochain(phi: &MultiDiffOp) -> Result<EElement> {
    if phi.value() != ValueTag::TopForm {
        return Err(Error::ValueTagMismatch("embedding needs a top-form valued cochain"));
    }
    let dim = phi.dim();
    let mut out = EElement::zero(dim);
    for (slots, c) in phi.terms() {
        let mut s = Vec::with_capacity(slots.len() + 1);
        s.push(vec![0; dim]);
        s.extend(slots.iter().cloned());
        out.add_term((full_index(dim), s), c.clone());
    }
    Ok(out)
}

/// Permutations of `0..k` with their signs.
pub(crate) fn signed_permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    if k == 0 {
        return vec![(vec![], false)];
    }
    let mut out = Vec::new();
    for (p, odd) in signed_permutations(k - 1) {
        // insert k−1 at every position; moving it left past t entries flips parity t times
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            let moves = p.len() - pos;
            out.push((q, odd != (moves % 2 == 1)));
        }
    }
    out
}

/// `ν ⊗ Ω ↦ ((a_1,…,a_k) ↦ ι_ν(da_1∧…∧da_k) Ω)` for homogeneous `ν` of rank `k`.
pub fn hkr_vt(x: &VTop) -> Result<MultiDiffOp> {
    let dim = x.vol.dim();
    let ranks = x.mv.ranks();
    if ranks.len() > 1 {
        return Err(Error::Unsupported("hkr_vt needs a multivector of a single rank"));
    }
    let k = ranks.first().copied().unwrap_or(0);
    let mut out = MultiDiffOp::zero(dim, k, ValueTag::TopForm);
    let rho = x.vol.density();
    // ι_{∂_I}(dt_I) = (−1)^{k(k−1)/2}
    let base_odd = (k * k.saturating_sub(1) / 2) % 2 == 1;
    for (idx, f) in x.mv.comps() {
        let coeff = f * &rho;
        for (perm, odd) in signed_permutations(k) {
            let slots: Vec<MultiIndex> = perm.iter().map(|&p| unit_index(dim, idx[p])).collect();
            let term = MultiDiffOp::single(signed(&coeff, odd != base_odd), slots, ValueTag::TopForm)?;
            out = out.plus(&term);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{MultiVector, VolumeForm};
    use crate::extended::{project_top_mod_exact, Window};
    use crate::hochschild::valued_differential;
    use crate::ring::q;

    fn t(e: &[i32]) -> LaurentPoly {
        LaurentPoly::monomial(q(1), e.to_vec())
    }

    fn sample(normalized: bool) -> EElement {
        let z = if normalized { 1 } else { 0 };
        let mut e = EElement::term(t(&[1, -1]), vec![0], vec![vec![0, 0], vec![z, 0], vec![0, 2]]).unwrap();
        e = e.plus(&EElement::term(t(&[2, 0]).scaled(&q(3)), vec![], vec![vec![1, 0], vec![z, 1], vec![1, 1]]).unwrap());
        e.plus(&EElement::term(t(&[0, 1]), vec![1], vec![vec![0, 1], vec![2, 0]]).unwrap())
    }

    #[test]
    fn differentials_square_to_zero() {
        let e = sample(false);
        assert!(extended_b(&extended_b(&e)).is_zero());
        assert!(extended_nabla(&extended_nabla(&e)).is_zero());
        let anti = extended_b(&extended_nabla(&e)).plus(&extended_nabla(&extended_b(&e)));
        assert!(anti.is_zero());
    }

    #[test]
    fn wrap_sign_control_breaks_b_squared() {
        let e = sample(false);
        let bad = extended_b_with_wrap_sign(&extended_b_with_wrap_sign(&e, true), true);
        assert!(!bad.is_zero());
    }

    #[test]
    fn b_on_first_order_operator_vanishes() {
        let phi = EElement::term(t(&[1, 1]), vec![], vec![vec![1, 0]]).unwrap();
        assert!(extended_b(&phi).is_zero());
    }

    #[test]
    fn sigma_has_finite_order() {
        let e = sample(false).slot_part(2);
        let mut s = e.clone();
        for _ in 0..3 {
            s = cyclic_sigma(&s);
        }
        assert_eq!(s, e);
        assert_eq!(cyclic_sigma(&extended_nabla(&e)), extended_nabla(&cyclic_sigma(&e)));
    }

    #[test]
    fn connes_operator_identities() {
        let e = sample(true);
        assert!(e.is_normalized());
        let b1 = connes_b_extended(&e).unwrap();
        assert!(connes_b_extended(&b1).unwrap().is_zero());
        let be = extended_b(&e);
        assert!(be.is_normalized());
        let anti = extended_b(&b1).plus(&connes_b_extended(&be).unwrap());
        assert!(anti.is_zero());
        assert!(connes_b_extended(&sample(false)).is_err());
    }

    #[test]
    fn embedding_is_a_chain_map() {
        let phi = MultiDiffOp::single(t(&[1, -1]), vec![vec![1, 0], vec![0, 2]], ValueTag::TopForm).unwrap();
        let lhs = extended_b(&embed_cochain(&phi).unwrap());
        let rhs = embed_cochain(&valued_differential(&phi)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hkr_vt_examples() {
        let vol = VolumeForm::standard(2);
        let x = VTop::new(MultiVector::term(LaurentPoly::one(2), &[0]).unwrap(), vol.clone()).unwrap();
        let expected = MultiDiffOp::single(t(&[-1, -1]), vec![vec![1, 0]], ValueTag::TopForm).unwrap();
        assert_eq!(hkr_vt(&x).unwrap(), expected);
        let x = VTop::new(MultiVector::term(t(&[2, 1]), &[0, 1]).unwrap(), vol).unwrap();
        let h = hkr_vt(&x).unwrap();
        assert_eq!(h.arity(), 2);
        assert!(valued_differential(&h).is_zero());
    }

    #[test]
    fn projection_kills_exact_elements() {
        let pre = EElement::term(t(&[1, 2]), vec![1], vec![vec![0, 0], vec![1, 0]]).unwrap();
        let exact = extended_nabla(&pre);
        let w = Window::new(-3, 3).unwrap();
        assert!(project_top_mod_exact(&exact, &w).unwrap().is_zero());
        let lower = EElement::term(t(&[1, 2]), vec![1], vec![vec![0, 0]]).unwrap();
        assert!(project_top_mod_exact(&lower, &w).unwrap().is_zero());
        let top = EElement::term(t(&[-1, -1]), vec![0, 1], vec![vec![0, 0]]).unwrap();
        assert!(!project_top_mod_exact(&top, &w).unwrap().is_zero());
    }
}
