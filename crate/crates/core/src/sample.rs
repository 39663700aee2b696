//! Seeded random generation of test inputs.
//!
//! Every generator draws from a caller-supplied RNG, so a trial is fully
//! determined by its seed.

use crate::cartan::{DiffForm, MultiVector, UVTop, VolumeForm};
use crate::extended::EElement;
use crate::hochschild::{HochChain, MultiDiffOp, MultiIndex, ValueTag};
use crate::ring::{q, qf, LaurentPoly, Linear, Rational, USeries};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TrialRng = ChaCha8Rng;

/// Size limits for generated elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sampler {
    pub dim: usize,
    pub lo: i32,
    pub hi: i32,
    pub max_terms: usize,
    pub ucap: usize,
    /// Highest total derivative order per slot of generated operators.
    pub max_order: u32,
}

impl Sampler {
    pub fn new(dim: usize, lo: i32, hi: i32, max_terms: usize, ucap: usize) -> Self {
        Sampler {
            dim,
            lo,
            hi,
            max_terms: max_terms.max(1),
            ucap,
            max_order: 2,
        }
    }

    pub fn rng(seed: u64) -> TrialRng {
        TrialRng::seed_from_u64(seed)
    }

    /// Small nonzero rational with numerator in `-3..=3` and denominator in `1..=2`.
    pub fn coefficient(&self, rng: &mut impl Rng) -> Rational {
        let mut n = 0;
        while n == 0 {
            n = rng.gen_range(-3..=3);
        }
        qf(n, rng.gen_range(1..=2))
    }

    pub fn exponent(&self, rng: &mut impl Rng) -> Vec<i32> {
        (0..self.dim).map(|_| rng.gen_range(self.lo..=self.hi)).collect()
    }

    /// Exponent whose entries are nonzero somewhere (a non-constant monomial).
    pub fn nonconstant_exponent(&self, rng: &mut impl Rng) -> Vec<i32> {
        loop {
            let e = self.exponent(rng);
            if e.iter().any(|&x| x != 0) {
                return e;
            }
            if self.lo == 0 && self.hi == 0 {
                return e;
            }
        }
    }

    pub fn laurent(&self, rng: &mut impl Rng) -> LaurentPoly {
        let n = rng.gen_range(1..=self.max_terms);
        let mut p = LaurentPoly::zero(self.dim);
        for _ in 0..n {
            p.add_term(self.exponent(rng), self.coefficient(rng));
        }
        p
    }

    pub fn monomial(&self, rng: &mut impl Rng) -> LaurentPoly {
        LaurentPoly::monomial(self.coefficient(rng), self.exponent(rng))
    }

    fn index_set(&self, rng: &mut impl Rng, rank: usize) -> Vec<usize> {
        let mut all: Vec<usize> = (0..self.dim).collect();
        all.shuffle(rng);
        let mut s: Vec<usize> = all.into_iter().take(rank).collect();
        s.sort_unstable();
        s
    }

    fn rank_from(&self, rng: &mut impl Rng, ranks: &[usize]) -> usize {
        *ranks.choose(rng).expect("nonempty rank list")
    }

    /// Multivector whose components have ranks drawn from `ranks`.
    pub fn multivector_of_ranks(&self, rng: &mut impl Rng, ranks: &[usize]) -> MultiVector {
        let n = rng.gen_range(1..=self.max_terms);
        let mut out = MultiVector::zero(self.dim);
        for _ in 0..n {
            let r = self.rank_from(rng, ranks);
            let idx = self.index_set(rng, r);
            out.add_comp(idx, self.monomial(rng));
        }
        out
    }

    pub fn multivector(&self, rng: &mut impl Rng) -> MultiVector {
        let ranks: Vec<usize> = (0..=self.dim).collect();
        self.multivector_of_ranks(rng, &ranks)
    }

    pub fn homogeneous_multivector(&self, rng: &mut impl Rng) -> MultiVector {
        let r = rng.gen_range(0..=self.dim);
        self.multivector_of_ranks(rng, &[r])
    }

    pub fn form_of_ranks(&self, rng: &mut impl Rng, ranks: &[usize]) -> DiffForm {
        let n = rng.gen_range(1..=self.max_terms);
        let mut out = DiffForm::zero(self.dim);
        for _ in 0..n {
            let r = self.rank_from(rng, ranks);
            let idx = self.index_set(rng, r);
            out.add_comp(idx, self.monomial(rng));
        }
        out
    }

    pub fn form(&self, rng: &mut impl Rng) -> DiffForm {
        let ranks: Vec<usize> = (0..=self.dim).collect();
        self.form_of_ranks(rng, &ranks)
    }

    pub fn homogeneous_form(&self, rng: &mut impl Rng) -> DiffForm {
        let r = rng.gen_range(0..=self.dim);
        self.form_of_ranks(rng, &[r])
    }

    /// Ranks of the given parity (`odd = true` selects odd ranks).
    pub fn ranks_of_parity(&self, odd: bool) -> Vec<usize> {
        (0..=self.dim).filter(|r| (r % 2 == 1) == odd).collect()
    }

    /// `u`-series of multivectors whose ranks all have one parity, so that
    /// the element has a well-defined degree parity.
    pub fn umultivector(&self, rng: &mut impl Rng) -> USeries<MultiVector> {
        let odd = rng.gen_bool(0.5) && self.dim > 0;
        self.umultivector_of_parity(rng, odd)
    }

    pub fn umultivector_of_parity(&self, rng: &mut impl Rng, odd_rank: bool) -> USeries<MultiVector> {
        let ranks = self.ranks_of_parity(odd_rank);
        let coeffs = (0..=self.ucap)
            .map(|_| {
                if rng.gen_bool(0.6) {
                    self.multivector_of_ranks(rng, &ranks)
                } else {
                    MultiVector::zero(self.dim)
                }
            })
            .collect();
        USeries::from_coeffs(coeffs)
    }

    pub fn uform(&self, rng: &mut impl Rng) -> USeries<DiffForm> {
        let coeffs = (0..=self.ucap)
            .map(|_| {
                if rng.gen_bool(0.6) {
                    self.form(rng)
                } else {
                    DiffForm::zero(self.dim)
                }
            })
            .collect();
        USeries::from_coeffs(coeffs)
    }

    /// Form series whose ranks share one parity.
    pub fn uform_of_parity(&self, rng: &mut impl Rng, odd_rank: bool) -> USeries<DiffForm> {
        let ranks = self.ranks_of_parity(odd_rank);
        let coeffs = (0..=self.ucap)
            .map(|_| {
                if rng.gen_bool(0.6) {
                    self.form_of_ranks(rng, &ranks)
                } else {
                    DiffForm::zero(self.dim)
                }
            })
            .collect();
        USeries::from_coeffs(coeffs)
    }

    pub fn uvtop(&self, rng: &mut impl Rng, vol: &VolumeForm) -> UVTop {
        let odd = rng.gen_bool(0.5) && self.dim > 0;
        UVTop::new(self.umultivector_of_parity(rng, odd), vol.clone())
    }

    pub fn volume(&self, rng: &mut impl Rng) -> VolumeForm {
        let e = (0..self.dim).map(|_| rng.gen_range(-1..=1)).collect();
        VolumeForm::new(self.coefficient(rng), e).expect("nonzero unit")
    }

    pub fn multi_index(&self, rng: &mut impl Rng, nonzero: bool) -> MultiIndex {
        loop {
            let total = rng.gen_range(0..=self.max_order);
            let mut a = vec![0u32; self.dim];
            for _ in 0..total {
                a[rng.gen_range(0..self.dim)] += 1;
            }
            if !nonzero || total > 0 || self.max_order == 0 {
                return a;
            }
        }
    }

    /// Normalized multidifferential operator of the given arity.
    pub fn multidiffop(&self, rng: &mut impl Rng, arity: usize, value: ValueTag) -> MultiDiffOp {
        let n = rng.gen_range(1..=self.max_terms);
        let mut op = MultiDiffOp::zero(self.dim, arity, value);
        for _ in 0..n {
            let slots: Vec<MultiIndex> = (0..arity).map(|_| self.multi_index(rng, true)).collect();
            op.add_term(slots, self.monomial(rng));
        }
        op
    }

    /// Chain of length `n` (that is, `n + 1` slots) built from monomial tensors.
    pub fn chain(&self, rng: &mut impl Rng, n: usize) -> HochChain {
        let terms = rng.gen_range(1..=self.max_terms);
        let mut c = HochChain::zero(self.dim);
        for _ in 0..terms {
            let mut key = vec![self.exponent(rng)];
            for _ in 0..n {
                key.push(self.nonconstant_exponent(rng));
            }
            c.add_monomial(key, self.coefficient(rng));
        }
        c
    }

    /// Element of the extended complex with `n + 1` slots; form degrees are
    /// drawn from `ranks`.
    pub fn eelement(&self, rng: &mut impl Rng, n: usize, ranks: &[usize], normalized: bool) -> EElement {
        let terms = rng.gen_range(1..=self.max_terms);
        let mut e = EElement::zero(self.dim);
        for _ in 0..terms {
            let r = self.rank_from(rng, ranks);
            let form = self.index_set(rng, r);
            let slots: Vec<MultiIndex> = (0..=n)
                .map(|j| self.multi_index(rng, normalized && j > 0))
                .collect();
            e.add_term((form, slots), self.monomial(rng));
        }
        e
    }

    pub fn rational(&self, rng: &mut impl Rng) -> Rational {
        if rng.gen_bool(0.2) {
            q(0)
        } else {
            self.coefficient(rng)
        }
    }
}

/// Sum of `σ^k(e)` over the cyclic group acting on the `n + 1`-slot part.
pub fn cyclic_symmetrize(e: &EElement) -> EElement {
    let mut out = e.zero_like();
    let mut lengths: Vec<usize> = e.bidegrees().into_iter().map(|(_, n)| n).collect();
    lengths.dedup();
    lengths.sort_unstable();
    lengths.dedup();
    for n in lengths {
        let part = e.slot_part(n);
        let mut s = part.clone();
        for _ in 0..=n {
            out = out.plus(&s);
            s = crate::extended::cyclic_sigma(&s);
        }
    }
    out
}
