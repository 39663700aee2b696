use super::element::EElement;
use super::ops::extended_nabla;
use crate::cartan::{complement, full_index};
use crate::error::{Error, Result};
use crate::hochschild::MultiIndex;
use crate::linalg::{Reducer, SparseVec};
use crate::ring::{q, Exponent, LaurentPoly};
use std::collections::BTreeMap;

/// Exponent box `[lo, hi]^d` for coefficients of candidate preimages.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: i32,
    pub hi: i32,
}

impl Window {
    pub fn new(lo: i32, hi: i32) -> Result<Self> {
        if lo > hi {
            return Err(Error::Config(format!("empty window {lo}..{hi}")));
        }
        Ok(Window { lo, hi })
    }

    pub fn contains(&self, e: &[i32]) -> bool {
        e.iter().all(|&x| self.lo <= x && x <= self.hi)
    }

    pub fn exponents(&self, dim: usize) -> Vec<Exponent> {
        let mut out: Vec<Exponent> = vec![vec![]];
        for _ in 0..dim {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (self.lo..=self.hi).map(move |x| {
                        let mut e = e.clone();
                        e.push(x);
                        e
                    })
                })
                .collect();
        }
        out
    }
}

/// Upper bound on the number of preimage candidates per slot count.
const MAX_CANDIDATES: usize = 400_000;

type TopKey = (Vec<MultiIndex>, Exponent);

fn top_vector(e: &EElement) -> SparseVec<TopKey> {
    let mut v = SparseVec::new();
    for ((_, slots), c) in e.terms() {
        for (exp, x) in c.terms() {
            v.insert((slots.clone(), exp.clone()), x.clone());
        }
    }
    v
}

fn boxed_indices(bound: &[u32]) -> Vec<MultiIndex> {
    let mut out: Vec<MultiIndex> = vec![vec![]];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|a| {
                (0..=b).map(move |x| {
                    let mut a = a.clone();
                    a.push(x);
                    a
                })
            })
            .collect();
    }
    out
}

/// Representative of the top form degree part of `e` modulo `∇` of elements
/// whose coefficients lie in the window.
///
/// The result is the remainder after reduction against the row echelon form
/// of the `∇`-images, so it is zero exactly when the top part is exact within
/// the window.
pub fn project_top_mod_exact(e: &EElement, window: &Window) -> Result<EElement> {
    let dim = e.dim();
    let top = e.form_degree_part(dim);
    let mut out = EElement::zero(dim);
    if dim == 0 {
        return Ok(top);
    }
    let mut by_slots: BTreeMap<usize, EElement> = BTreeMap::new();
    for ((form, slots), c) in top.terms() {
        if let Some(bad) = c.terms().map(|(x, _)| x).find(|x| !window.contains(x)) {
            return Err(Error::WindowTooSmall(format!(
                "coefficient exponent {bad:?} lies outside {}..{}",
                window.lo, window.hi
            )));
        }
        by_slots
            .entry(slots.len())
            .or_insert_with(|| EElement::zero(dim))
            .add_term((form.clone(), slots.clone()), c.clone());
    }
    let exps = window.exponents(dim);
    for (m, part) in by_slots {
        // componentwise bound on each slot's multi-index
        let mut bound = vec![vec![0u32; dim]; m];
        for ((_, slots), _) in part.terms() {
            for (j, a) in slots.iter().enumerate() {
                for i in 0..dim {
                    bound[j][i] = bound[j][i].max(a[i]);
                }
            }
        }
        let per_slot: Vec<Vec<MultiIndex>> = bound.iter().map(|b| boxed_indices(b)).collect();
        let tuples = per_slot.iter().map(|v| v.len()).product::<usize>();
        let count = tuples * exps.len() * dim;
        if count > MAX_CANDIDATES {
            return Err(Error::WindowTooSmall(format!(
                "{count} preimage candidates exceed the limit {MAX_CANDIDATES}"
            )));
        }
        let mut slot_tuples: Vec<Vec<MultiIndex>> = vec![vec![]];
        for choices in &per_slot {
            slot_tuples = slot_tuples
                .into_iter()
                .flat_map(|t| {
                    choices.iter().map(move |a| {
                        let mut t = t.clone();
                        t.push(a.clone());
                        t
                    })
                })
                .collect();
        }
        let mut reducer: Reducer<TopKey> = Reducer::new();
        for omit in 0..dim {
            let form = complement(dim, &[omit]);
            for slots in &slot_tuples {
                for x in &exps {
                    let pre = EElement::term(LaurentPoly::monomial(q(1), x.clone()), form.clone(), slots.clone())?;
                    let img = extended_nabla(&pre);
                    reducer.insert(top_vector(&img));
                }
            }
        }
        let rem = reducer.remainder(top_vector(&part));
        for ((slots, exp), c) in rem {
            out.add_term((full_index(dim), slots), LaurentPoly::monomial(c, exp));
        }
    }
    Ok(out)
}
