//! Trial inputs as a closed set of element kinds, so failing inputs can be
//! shrunk term by term and printed uniformly.

use crate::cartan::{DiffForm, MultiVector, Skew, SkewKind, UVTop, VolumeForm};
use crate::error::{Error, Result};
use crate::extended::EElement;
use crate::hochschild::{HochChain, MultiDiffOp, UHochChain};
use crate::ring::{Linear, Rational, USeries};
use crate::uactions::{UDiffForm, UMultiVector};
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Volume(VolumeForm),
    Scalar(Rational),
    Count(usize),
    Indices(Vec<usize>),
    Vector(MultiVector),
    Form(DiffForm),
    UVector(UMultiVector),
    UForm(UDiffForm),
    UVTop(UVTop),
    Op(MultiDiffOp),
    Chain(HochChain),
    UChain(UHochChain),
    Extended(EElement),
}

fn skew_pieces<K: SkewKind>(x: &Skew<K>) -> Vec<Skew<K>> {
    x.monomial_terms()
        .into_iter()
        .map(|(idx, f)| Skew::term(f, &idx).expect("valid index set"))
        .collect()
}

fn series_pieces<X: Linear>(s: &USeries<X>, pieces: impl Fn(&X) -> Vec<X>) -> Vec<USeries<X>> {
    let cap = s.ucap();
    s.coeffs()
        .iter()
        .enumerate()
        .flat_map(|(j, c)| pieces(c).into_iter().map(move |p| (j, p)))
        .map(|(j, p)| USeries::monomial(p, j, cap))
        .collect()
}

fn op_pieces(x: &MultiDiffOp) -> Vec<MultiDiffOp> {
    let mut out = Vec::new();
    for (slots, f) in x.terms() {
        for m in f.monomials() {
            let mut p = MultiDiffOp::zero(x.dim(), x.arity(), x.value());
            p.add_term(slots.clone(), m);
            out.push(p);
        }
    }
    out
}

fn chain_pieces(x: &HochChain) -> Vec<HochChain> {
    x.terms()
        .map(|(k, c)| {
            let mut p = HochChain::zero(x.dim());
            p.add_monomial(k.clone(), c.clone());
            p
        })
        .collect()
}

fn extended_pieces(x: &EElement) -> Vec<EElement> {
    let mut out = Vec::new();
    for (k, f) in x.terms() {
        for m in f.monomials() {
            let mut p = EElement::zero(x.dim());
            p.add_term(k.clone(), m);
            out.push(p);
        }
    }
    out
}

fn sum_except<X: Linear>(pieces: &[X], skip: usize, zero: X) -> X {
    pieces
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != skip)
        .fold(zero, |acc, (_, p)| acc.plus(p))
}

impl Value {
    /// Number of single-term summands (0 for parameters that cannot shrink).
    pub fn num_pieces(&self) -> usize {
        match self {
            Value::Volume(_) | Value::Scalar(_) | Value::Count(_) | Value::Indices(_) => 0,
            Value::Vector(x) => skew_pieces(x).len(),
            Value::Form(x) => skew_pieces(x).len(),
            Value::UVector(x) => series_pieces(x, skew_pieces).len(),
            Value::UForm(x) => series_pieces(x, skew_pieces).len(),
            Value::UVTop(x) => series_pieces(&x.mv, skew_pieces).len(),
            Value::Op(x) => op_pieces(x).len(),
            Value::Chain(x) => chain_pieces(x).len(),
            Value::UChain(x) => series_pieces(x, chain_pieces).len(),
            Value::Extended(x) => extended_pieces(x).len(),
        }
    }

    /// The value with its `i`-th single-term summand removed.
    pub fn without_piece(&self, i: usize) -> Value {
        match self {
            Value::Volume(_) | Value::Scalar(_) | Value::Count(_) | Value::Indices(_) => self.clone(),
            Value::Vector(x) => Value::Vector(sum_except(&skew_pieces(x), i, x.zero_like())),
            Value::Form(x) => Value::Form(sum_except(&skew_pieces(x), i, x.zero_like())),
            Value::UVector(x) => Value::UVector(sum_except(&series_pieces(x, skew_pieces), i, x.zero_like())),
            Value::UForm(x) => Value::UForm(sum_except(&series_pieces(x, skew_pieces), i, x.zero_like())),
            Value::UVTop(x) => Value::UVTop(UVTop::new(
                sum_except(&series_pieces(&x.mv, skew_pieces), i, x.mv.zero_like()),
                x.vol.clone(),
            )),
            Value::Op(x) => Value::Op(sum_except(&op_pieces(x), i, x.zero_like())),
            Value::Chain(x) => Value::Chain(sum_except(&chain_pieces(x), i, x.zero_like())),
            Value::UChain(x) => Value::UChain(sum_except(&series_pieces(x, chain_pieces), i, x.zero_like())),
            Value::Extended(x) => Value::Extended(sum_except(&extended_pieces(x), i, x.zero_like())),
        }
    }
}

macro_rules! accessor {
    ($name:ident, $variant:ident, $ty:ty) => {
        pub fn $name(&self) -> Result<&$ty> {
            match self {
                Value::$variant(x) => Ok(x),
                _ => Err(Error::Unsupported(concat!("expected ", stringify!($variant)))),
            }
        }
    };
}

impl Value {
    accessor!(volume, Volume, VolumeForm);
    accessor!(scalar, Scalar, Rational);
    accessor!(count, Count, usize);
    accessor!(indices, Indices, Vec<usize>);
    accessor!(vector, Vector, MultiVector);
    accessor!(form, Form, DiffForm);
    accessor!(uvector, UVector, UMultiVector);
    accessor!(uform, UForm, UDiffForm);
    accessor!(uvtop, UVTop, UVTop);
    accessor!(op, Op, MultiDiffOp);
    accessor!(chain, Chain, HochChain);
    accessor!(uchain, UChain, UHochChain);
    accessor!(extended, Extended, EElement);
}

fn write_series<X: fmt::Display + Linear>(f: &mut fmt::Formatter<'_>, s: &USeries<X>) -> fmt::Result {
    let mut first = true;
    for (j, c) in s.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        match j {
            0 => write!(f, "({c})")?,
            _ => write!(f, "u^{j} ({c})")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Volume(v) => {
                let e: Vec<String> = v.density_exponent().iter().map(|x| x.to_string()).collect();
                write!(f, "volume {} * t^[{}]", v.unit(), e.join(","))
            }
            Value::Scalar(x) => write!(f, "{x}"),
            Value::Count(n) => write!(f, "{n}"),
            Value::Indices(v) => write!(f, "{v:?}"),
            Value::Vector(x) => write!(f, "{x}"),
            Value::Form(x) => write!(f, "{x}"),
            Value::UVector(x) => write_series(f, x),
            Value::UForm(x) => write_series(f, x),
            Value::UVTop(x) => {
                write_series(f, &x.mv)?;
                write!(f, " Ω")
            }
            Value::Op(x) => write!(f, "{x}"),
            Value::Chain(x) => write!(f, "{x}"),
            Value::UChain(x) => write_series(f, x),
            Value::Extended(x) => write!(f, "{x}"),
        }
    }
}
