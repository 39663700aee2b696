use crate::cartan::{DiffForm, IndexSet};
use crate::error::{Error, Result};
use crate::hochschild::MultiIndex;
use crate::ring::laurent::{fmt_exponent, write_terms};
use crate::ring::{LaurentPoly, Linear, Rational};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

/// Key of one term: the form basis `dt_I` and one multi-index per slot.
pub type EKey = (IndexSet, Vec<MultiIndex>);

/// Element of the extended complex: form-valued multidifferential operators
/// `(a_0,…,a_n) ↦ Σ c · Π_j ∂^{α_j} a_j · dt_I`.
///
/// Terms of different form degree or slot count may be mixed.
#[derive(Clone, PartialEq, Eq)]
pub struct EElement {
    dim: usize,
    terms: BTreeMap<EKey, LaurentPoly>,
}

impl EElement {
    pub fn zero(dim: usize) -> Self {
        EElement {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// Single term `c · Π ∂^{α_j} a_j · dt_I`; `form` must be sorted and distinct.
    pub fn term(coeff: LaurentPoly, form: IndexSet, slots: Vec<MultiIndex>) -> Result<Self> {
        let dim = coeff.dim();
        if form.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Unsupported("form index set must be strictly increasing"));
        }
        if let Some(&i) = form.iter().find(|&&i| i >= dim) {
            return Err(Error::AxisOutOfRange { axis: i, dim });
        }
        if let Some(a) = slots.iter().find(|a| a.len() != dim) {
            return Err(Error::DimensionMismatch(dim, a.len()));
        }
        if slots.is_empty() {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut e = Self::zero(dim);
        e.add_term((form, slots), coeff);
        Ok(e)
    }

    pub fn add_term(&mut self, key: EKey, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &coeff;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&EKey, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Distinct `(form degree p, n)` with `n + 1` slots.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self
            .terms
            .keys()
            .map(|(f, s)| (f.len(), s.len() - 1))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn filter(&self, keep: impl Fn(&EKey) -> bool) -> Self {
        let mut out = Self::zero(self.dim);
        for (k, c) in &self.terms {
            if keep(k) {
                out.terms.insert(k.clone(), c.clone());
            }
        }
        out
    }

    /// Part of form degree `p`.
    pub fn form_degree_part(&self, p: usize) -> Self {
        self.filter(|(f, _)| f.len() == p)
    }

    /// Part with `n + 1` slots.
    pub fn slot_part(&self, n: usize) -> Self {
        self.filter(|(_, s)| s.len() == n + 1)
    }

    /// True when the element vanishes once any slot past the first is constant.
    pub fn is_normalized(&self) -> bool {
        self.terms
            .keys()
            .all(|(_, s)| s.iter().skip(1).all(|a| a.iter().any(|&x| x > 0)))
    }

    /// Evaluates on polynomial arguments; only terms whose slot count matches contribute.
    pub fn apply(&self, args: &[LaurentPoly]) -> Result<DiffForm> {
        if let Some(a) = args.iter().find(|a| a.dim() != self.dim) {
            return Err(Error::DimensionMismatch(self.dim, a.dim()));
        }
        let mut out = DiffForm::zero(self.dim);
        for ((form, slots), c) in &self.terms {
            if slots.len() != args.len() {
                continue;
            }
            let mut prod = c.clone();
            for (alpha, a) in slots.iter().zip(args) {
                if prod.is_zero() {
                    break;
                }
                prod = &prod * &a.diff(alpha);
            }
            out.add_comp(form.clone(), prod);
        }
        Ok(out)
    }

    pub fn map_terms(&self, f: impl Fn(&EKey, &LaurentPoly, &mut EElement)) -> Self {
        let mut out = Self::zero(self.dim);
        for (k, c) in &self.terms {
            f(k, c, &mut out);
        }
        out
    }
}

impl Linear for EElement {
    fn zero_like(&self) -> Self {
        Self::zero(self.dim)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    fn scaled(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.dim);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.scaled(c));
        }
        out
    }
}

impl fmt::Display for EElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rows = Vec::new();
        for ((form, slots), poly) in &self.terms {
            let slot_txt: Vec<String> = slots
                .iter()
                .map(|a| {
                    let inner: Vec<String> = a.iter().map(|x| x.to_string()).collect();
                    format!("D[{}]", inner.join(","))
                })
                .collect();
            for (e, c) in poly.terms() {
                let mut body = fmt_exponent(e);
                if !form.is_empty() {
                    let b: Vec<String> = form.iter().map(|i| format!("dt{}", i + 1)).collect();
                    body = format!("{body} * {}", b.join("^"));
                }
                rows.push((format!("{body} ({})", slot_txt.join(", ")), c));
            }
        }
        write_terms(f, rows.into_iter())
    }
}

impl fmt::Debug for EElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EElement({})", self)
    }
}
