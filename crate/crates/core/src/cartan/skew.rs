use crate::error::{Error, Result};
use crate::ring::laurent::{fmt_exponent, write_terms};
use crate::ring::{GradedDegree, LaurentPoly, Linear, Rational};
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

/// Strictly increasing set of 0-based coordinate indices.
pub type IndexSet = Vec<usize>;

/// Marker distinguishing multivector fields from differential forms.
pub trait SkewKind: Clone + Copy + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    /// Basis symbol prefix used in the text format (`d` or `dt`).
    const PREFIX: &'static str;
    fn degree(rank: usize) -> GradedDegree;
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Vectors;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Forms;

impl SkewKind for Vectors {
    const PREFIX: &'static str = "d";
    fn degree(rank: usize) -> GradedDegree {
        GradedDegree::multivector(rank)
    }
}

impl SkewKind for Forms {
    const PREFIX: &'static str = "dt";
    fn degree(rank: usize) -> GradedDegree {
        GradedDegree::form(rank)
    }
}

/// Antisymmetric object `Σ f_I e_I` with Laurent coefficients, where `e_I`
/// is `∂_I` for multivectors and `dt_I` for forms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Skew<K> {
    dim: usize,
    comps: BTreeMap<IndexSet, LaurentPoly>,
    _kind: PhantomData<K>,
}

/// Multivector field `Σ f_I ∂_I`.
pub type MultiVector = Skew<Vectors>;
/// Differential form `Σ f_I dt_I`.
pub type DiffForm = Skew<Forms>;

/// Sign and union of `e_a ∧ e_b` for sorted index sets, `None` on overlap.
pub fn merge_sign(a: &[usize], b: &[usize]) -> Option<(i64, IndexSet)> {
    let mut inversions = 0usize;
    for &x in a {
        if b.contains(&x) {
            return None;
        }
        inversions += b.iter().filter(|&&y| y < x).count();
    }
    let mut out: IndexSet = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    Some((if inversions % 2 == 0 { 1 } else { -1 }, out))
}

impl<K: SkewKind> Skew<K> {
    pub fn zero(dim: usize) -> Self {
        Skew {
            dim,
            comps: BTreeMap::new(),
            _kind: PhantomData,
        }
    }

    /// Rank-0 element.
    pub fn scalar(f: LaurentPoly) -> Self {
        let mut s = Self::zero(f.dim());
        s.add_comp(Vec::new(), f);
        s
    }

    /// `f·e_{i1}∧…∧e_{ik}` for indices in any order; repeated indices give 0.
    pub fn term(f: LaurentPoly, indices: &[usize]) -> Result<Self> {
        let dim = f.dim();
        let mut acc: (i64, IndexSet) = (1, Vec::new());
        for &i in indices {
            if i >= dim {
                return Err(Error::AxisOutOfRange { axis: i, dim });
            }
            match merge_sign(&acc.1, &[i]) {
                Some((s, idx)) => acc = (acc.0 * s, idx),
                None => return Ok(Self::zero(dim)),
            }
        }
        let mut s = Self::zero(dim);
        s.add_comp(acc.1, f.signed(acc.0));
        Ok(s)
    }

    /// The basis element `e_I` with coefficient 1.
    pub fn basis(dim: usize, indices: &[usize]) -> Result<Self> {
        Self::term(LaurentPoly::one(dim), indices)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comps(&self) -> impl Iterator<Item = (&IndexSet, &LaurentPoly)> {
        self.comps.iter()
    }

    pub fn comp(&self, idx: &[usize]) -> LaurentPoly {
        self.comps.get(idx).cloned().unwrap_or_else(|| LaurentPoly::zero(self.dim))
    }

    /// Adds `f·e_I`; `idx` must already be strictly increasing.
    pub fn add_comp(&mut self, idx: IndexSet, f: LaurentPoly) {
        debug_assert!(idx.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(f.dim(), self.dim);
        if f.is_zero() {
            return;
        }
        let next = match self.comps.remove(&idx) {
            Some(g) => g.plus(&f),
            None => f,
        };
        if !next.is_zero() {
            self.comps.insert(idx, next);
        }
    }

    pub fn rank_part(&self, rank: usize) -> Self {
        let mut s = Self::zero(self.dim);
        for (i, f) in &self.comps {
            if i.len() == rank {
                s.comps.insert(i.clone(), f.clone());
            }
        }
        s
    }

    /// Ranks present, ascending.
    pub fn ranks(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.comps.keys().map(|i| i.len()).collect();
        r.sort_unstable();
        r.dedup();
        r
    }

    /// Split into homogeneous rank components.
    pub fn homogeneous_parts(&self) -> Vec<(usize, Self)> {
        self.ranks().into_iter().map(|r| (r, self.rank_part(r))).collect()
    }

    /// Cohomological degree of the lowest rank present (0 for the zero element).
    pub fn degree(&self) -> GradedDegree {
        K::degree(self.ranks().first().copied().unwrap_or(0))
    }

    pub fn num_terms(&self) -> usize {
        self.comps.values().map(|f| f.num_terms()).sum()
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut s = Self::zero(self.dim);
        for (i, c) in &self.comps {
            s.add_comp(i.clone(), f(c));
        }
        s
    }

    /// Multiplication of every coefficient by a function.
    pub fn mul_function(&self, g: &LaurentPoly) -> Self {
        self.map_coeffs(|c| c * g)
    }

    /// One term per monomial: `(index set, single-monomial coefficient)`.
    pub fn monomial_terms(&self) -> Vec<(IndexSet, LaurentPoly)> {
        self.comps
            .iter()
            .flat_map(|(i, f)| f.monomials().map(move |m| (i.clone(), m)))
            .collect()
    }

    pub(crate) fn check_dim(&self, other_dim: usize) -> Result<()> {
        if self.dim != other_dim {
            Err(Error::DimensionMismatch(self.dim, other_dim))
        } else {
            Ok(())
        }
    }
}

impl<K: SkewKind> Linear for Skew<K> {
    fn zero_like(&self) -> Self {
        Self::zero(self.dim)
    }
    fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut s = self.clone();
        for (i, f) in &other.comps {
            s.add_comp(i.clone(), f.clone());
        }
        s
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.map_coeffs(|f| f.scaled(c))
    }
}

impl<K: SkewKind> fmt::Display for Skew<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rows = Vec::new();
        for (idx, poly) in &self.comps {
            for (e, c) in poly.terms() {
                let mut body = fmt_exponent(e);
                if !idx.is_empty() {
                    let b: Vec<String> = idx.iter().map(|i| format!("{}{}", K::PREFIX, i + 1)).collect();
                    body = format!("{body} * {}", b.join("^"));
                }
                rows.push((body, c));
            }
        }
        write_terms(f, rows.into_iter())
    }
}

impl<K: SkewKind> fmt::Debug for Skew<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
