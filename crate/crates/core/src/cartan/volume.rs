//! Volume forms, divergence, the residue functional and the pairing between
//! multivector-valued top forms and forms.

use super::calculus::{contract, de_rham, iota_basis};
use super::skew::{DiffForm, IndexSet, MultiVector};
use crate::error::{Error, Result};
use crate::ring::{q, Exponent, GradedDegree, LaurentPoly, Linear, Rational, USeries};

/// `Ω = c·t^k·ω_std` with `ω_std = dt1∧…∧dtd / (t1⋯td)`.
///
/// Only units of the Laurent ring are allowed as densities, so contraction
/// with `Ω` is invertible without truncation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VolumeForm {
    unit: Rational,
    exponent: Exponent,
}

impl VolumeForm {
    pub fn new(unit: Rational, exponent: Exponent) -> Result<Self> {
        if unit.is_zero() {
            return Err(Error::Config("volume density must be a unit".into()));
        }
        Ok(VolumeForm { unit, exponent })
    }

    /// The standard invariant form `ω_std`.
    pub fn standard(dim: usize) -> Self {
        VolumeForm {
            unit: q(1),
            exponent: vec![0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.exponent.len()
    }

    pub fn unit(&self) -> &Rational {
        &self.unit
    }

    pub fn exponent(&self) -> &Exponent {
        &self.exponent
    }

    /// Exponent of the density with respect to `dt1∧…∧dtd`.
    pub fn density_exponent(&self) -> Exponent {
        self.exponent.iter().map(|k| k - 1).collect()
    }

    /// Density `ρ` with `Ω = ρ dt1∧…∧dtd`.
    pub fn density(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.unit.clone(), self.density_exponent())
    }

    pub fn as_form(&self) -> DiffForm {
        let mut f = DiffForm::zero(self.dim());
        f.add_comp(full_index(self.dim()), self.density());
        f
    }

    /// Rescales a top-degree coefficient `g` into `g / ρ`.
    pub fn divide_by_density(&self, g: &LaurentPoly) -> LaurentPoly {
        g.div_monomial(&self.unit, &self.density_exponent())
    }
}

pub fn full_index(dim: usize) -> IndexSet {
    (0..dim).collect()
}

pub fn complement(dim: usize, idx: &[usize]) -> IndexSet {
    (0..dim).filter(|i| !idx.contains(i)).collect()
}

/// Solves `ι_X Ω = β` for `X`; `β` may be inhomogeneous.
pub fn dualize_form(vol: &VolumeForm, beta: &DiffForm) -> Result<MultiVector> {
    let dim = vol.dim();
    beta.check_dim(dim)?;
    let full = full_index(dim);
    let mut out = MultiVector::zero(dim);
    for (k_idx, g) in beta.comps() {
        let j_idx = complement(dim, k_idx);
        let (sign, rest) = iota_basis(&j_idx, &full).expect("J ⊂ full");
        debug_assert_eq!(&rest, k_idx);
        out.add_comp(j_idx, vol.divide_by_density(g).signed(sign));
    }
    Ok(out)
}

/// `div_Ω γ`, defined by `ι_{div_Ω γ} Ω = d ι_γ Ω`.
pub fn divergence(vol: &VolumeForm, gamma: &MultiVector) -> Result<MultiVector> {
    gamma.check_dim(vol.dim())?;
    let beta = de_rham(&contract(gamma, &vol.as_form())?);
    dualize_form(vol, &beta)
}

/// Coefficient of `t1⁻¹⋯td⁻¹` in the density of a top-degree form.
pub fn residue_integral(eta: &DiffForm) -> Result<Rational> {
    let dim = eta.dim();
    for (idx, _) in eta.comps() {
        if idx.len() != dim {
            return Err(Error::RankMismatch {
                expected: dim,
                found: idx.len(),
            });
        }
    }
    Ok(eta.comp(&full_index(dim)).coeff(&vec![-1; dim]))
}

/// Residue of the top-degree part; lower-degree parts integrate to zero.
pub fn integrate_top(eta: &DiffForm) -> Rational {
    residue_integral(&eta.rank_part(eta.dim())).expect("top part")
}

/// Element `ν ⊗ Ω` of the multivector-valued top forms.
#[derive(Clone, PartialEq, Debug)]
pub struct VTop {
    pub mv: MultiVector,
    pub vol: VolumeForm,
}

impl VTop {
    pub fn new(mv: MultiVector, vol: VolumeForm) -> Result<Self> {
        mv.check_dim(vol.dim())?;
        Ok(VTop { mv, vol })
    }

    /// Degree `p - 1` for a rank-`p` multivector.
    pub fn degree(&self) -> GradedDegree {
        self.mv.degree()
    }
}

impl Linear for VTop {
    fn zero_like(&self) -> Self {
        VTop {
            mv: self.mv.zero_like(),
            vol: self.vol.clone(),
        }
    }
    fn is_zero(&self) -> bool {
        self.mv.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.vol, other.vol, "volume mismatch");
        VTop {
            mv: self.mv.plus(&other.mv),
            vol: self.vol.clone(),
        }
    }
    fn scaled(&self, c: &Rational) -> Self {
        VTop {
            mv: self.mv.scaled(c),
            vol: self.vol.clone(),
        }
    }
}

/// `u`-series of multivector-valued top forms sharing one volume form.
#[derive(Clone, PartialEq, Debug)]
pub struct UVTop {
    pub mv: USeries<MultiVector>,
    pub vol: VolumeForm,
}

impl UVTop {
    pub fn new(mv: USeries<MultiVector>, vol: VolumeForm) -> Self {
        UVTop { mv, vol }
    }

    pub fn degree(&self) -> GradedDegree {
        self.mv
            .coeffs()
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(j, c)| c.degree().with_u_power(j))
            .unwrap_or(GradedDegree(0))
    }
}

impl Linear for UVTop {
    fn zero_like(&self) -> Self {
        UVTop {
            mv: self.mv.zero_like(),
            vol: self.vol.clone(),
        }
    }
    fn is_zero(&self) -> bool {
        self.mv.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.vol, other.vol, "volume mismatch");
        UVTop {
            mv: self.mv.plus(&other.mv),
            vol: self.vol.clone(),
        }
    }
    fn scaled(&self, c: &Rational) -> Self {
        UVTop {
            mv: self.mv.scaled(c),
            vol: self.vol.clone(),
        }
    }
}

/// `⟨νΩ, α⟩ = ∫ Ω (ι_ν α)`; rank mismatches pair to zero.
pub fn pair_vt_form(x: &VTop, alpha: &DiffForm) -> Result<Rational> {
    x.mv.check_dim(alpha.dim())?;
    let f = contract(&x.mv, alpha)?.rank_part(0).comp(&[]);
    // ∫ f ρ dt_full with ρ = c t^{k-1}: read the coefficient of t^{-k}.
    let target: Exponent = x.vol.exponent().iter().map(|k| -k).collect();
    Ok(f.coeff(&target) * x.vol.unit())
}

/// `u`-bilinear extension of [`pair_vt_form`]; coefficient `j` of the result
/// is the `u^j` part.
pub fn pair_vt_form_u(x: &UVTop, alpha: &USeries<DiffForm>) -> Result<USeries<Rational>> {
    let cap = x.mv.ucap().min(alpha.ucap());
    let mut out = vec![q(0); cap + 1];
    for (j, nu) in x.mv.coeffs().iter().enumerate().take(cap + 1) {
        for (k, a) in alpha.coeffs().iter().enumerate().take(cap + 1 - j) {
            out[j + k] += pair_vt_form(&VTop::new(nu.clone(), x.vol.clone())?, a)?;
        }
    }
    Ok(USeries::from_coeffs(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Forms;
    use crate::ring::qf;

    fn mono(c: i64, e: &[i32]) -> LaurentPoly {
        LaurentPoly::monomial(q(c), e.to_vec())
    }

    #[test]
    fn divergence_examples() {
        let w = VolumeForm::standard(2);
        let t1d1 = MultiVector::term(mono(1, &[1, 0]), &[0]).unwrap();
        assert!(divergence(&w, &t1d1).unwrap().is_zero());
        let d1 = MultiVector::basis(2, &[0]).unwrap();
        assert_eq!(
            divergence(&w, &d1).unwrap(),
            MultiVector::scalar(mono(-1, &[-1, 0]))
        );
        let f = MultiVector::scalar(mono(5, &[2, -3]));
        assert!(divergence(&w, &f).unwrap().is_zero());
    }

    #[test]
    fn residue_examples() {
        let w = VolumeForm::standard(2);
        assert_eq!(residue_integral(&w.as_form()).unwrap(), q(1));
        let t1w = w.as_form().mul_function(&mono(1, &[1, 0]));
        assert_eq!(residue_integral(&t1w).unwrap(), q(0));
        // β = t1³ t2 dt2, dβ = 3 t1² t2 dt1∧dt2 has no t^[-1,-1] term
        let beta = DiffForm::term(mono(1, &[3, 1]), &[1]).unwrap();
        assert_eq!(residue_integral(&de_rham(&beta)).unwrap(), q(0));
        let one_form = DiffForm::term(mono(1, &[0, 0]), &[0]).unwrap();
        assert!(matches!(
            residue_integral(&one_form),
            Err(Error::RankMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn pairing_examples() {
        let w = VolumeForm::standard(2);
        let d12 = MultiVector::basis(2, &[0, 1]).unwrap();
        let dt12 = crate::cartan::Skew::<Forms>::basis(2, &[0, 1]).unwrap();
        // ι_{∂1∧∂2}(dt1∧dt2) = -1, and ∫ -ω_std = -1
        let x = VTop::new(d12, w.clone()).unwrap();
        assert_eq!(pair_vt_form(&x, &dt12).unwrap(), q(-1));
        let f = VTop::new(MultiVector::scalar(mono(1, &[0, 0])), w.clone()).unwrap();
        let a1 = DiffForm::term(mono(1, &[0, 0]), &[0]).unwrap();
        assert_eq!(pair_vt_form(&f, &a1).unwrap(), q(0));
        assert_eq!(pair_vt_form(&x, &DiffForm::zero(2)).unwrap(), q(0));
        // ⟨f Ω, g⟩ with Ω = (1/2) t1 ω_std: ∫ f g (1/2) t1 ω_std
        let vol = VolumeForm::new(qf(1, 2), vec![1, 0]).unwrap();
        let fx = VTop::new(MultiVector::scalar(mono(4, &[-2, 0])), vol).unwrap();
        let g = DiffForm::scalar(mono(1, &[1, 0]));
        assert_eq!(pair_vt_form(&fx, &g).unwrap(), q(2));
    }
}
