use super::*;
use crate::ring::{qf, LaurentPoly};

fn t(e: &[i32]) -> LaurentPoly {
    LaurentPoly::monomial(q(1), e.to_vec())
}

fn vec_field(f: LaurentPoly, idx: &[usize]) -> MultiVector {
    MultiVector::term(f, idx).unwrap()
}

fn form(f: LaurentPoly, idx: &[usize]) -> DiffForm {
    DiffForm::term(f, idx).unwrap()
}

#[test]
fn scaling_examples() {
    let g = USeries::from_coeffs(vec![vec_field(t(&[1, 0]), &[0]), vec_field(t(&[0, 1]), &[1])]);
    let s0 = scale_u(&q(0), &g);
    assert!(s0.coeff(1).is_zero());
    assert_eq!(scale_u(&q(1), &g), g);
    assert_eq!(scale_u(&q(2), &g).coeff(1), &g.coeff(1).scaled(&q(2)));
}

#[test]
fn lt_on_coordinate_field() {
    let vol = VolumeForm::standard(2);
    let g = USeries::constant(vec_field(LaurentPoly::one(2), &[0]), 2);
    let a = USeries::constant(form(t(&[1, 0]), &[1]), 2);
    for tv in [q(0), q(1), qf(1, 2), q(2)] {
        let out = action_lt(&tv, &vol, &g, &a).unwrap();
        let expected = USeries::constant(form(LaurentPoly::one(2), &[1]).scaled(&(q(1) - &tv)), 2);
        assert_eq!(out, expected);
        assert_eq!(action_lt_via_div_u(&tv, &vol, &g, &a).unwrap(), expected);
    }
}

#[test]
fn h_t_examples() {
    let g1 = vec_field(t(&[1, 1]), &[0]);
    let a = USeries::constant(form(t(&[0, 2]), &[0, 1]), 3);
    let only0 = USeries::constant(g1.clone(), 3);
    assert!(h_t(&qf(1, 3), &only0, &a).unwrap().is_zero());
    let u1 = USeries::monomial(g1.clone(), 1, 3);
    let expected = USeries::constant(contract(&g1, a.coeff(0)).unwrap().scaled(&q(-1)), 3);
    assert_eq!(h_t(&q(5), &u1, &a).unwrap(), expected);
    let u2 = USeries::monomial(g1.clone(), 2, 3);
    let expected = USeries::monomial(contract(&g1, a.coeff(0)).unwrap().scaled(&q(-2)), 1, 3);
    assert_eq!(h_t(&q(1), &u2, &a).unwrap(), expected);
}

#[test]
fn taylor_examples() {
    let g1 = vec_field(t(&[1, 1]), &[0]);
    let a = USeries::constant(form(t(&[0, 2]), &[0, 1]), 3);
    assert_eq!(h1_taylor(&[], &a, -1).unwrap(), a);
    let u1 = USeries::monomial(g1.clone(), 1, 3);
    let single = USeries::constant(contract(&g1, a.coeff(0)).unwrap(), 3);
    assert_eq!(h1_taylor(&[u1.clone()], &a, 1).unwrap(), single);
    assert_eq!(h1_taylor(&[u1.clone()], &a, -1).unwrap(), single.scaled(&q(-1)));
    let double = contract(&g1, &contract(&g1, a.coeff(0)).unwrap()).unwrap();
    assert_eq!(
        h1_taylor(&[u1.clone(), u1], &a, -1).unwrap(),
        USeries::constant(double.scaled(&qf(1, 2)), 3)
    );
}

#[test]
fn dual_differential_examples() {
    let vol = VolumeForm::standard(2);
    let x = UVTop::new(USeries::constant(vec_field(t(&[1, 0]), &[0]), 2), vol.clone());
    assert!(dual_differential(&x).unwrap().is_zero());
    let x = UVTop::new(USeries::constant(vec_field(LaurentPoly::one(2), &[0]), 2), vol.clone());
    let expected = USeries::monomial(MultiVector::scalar(t(&[-1, 0]).scaled(&q(-1))), 1, 2);
    assert_eq!(dual_differential(&x).unwrap().mv, expected);
    let x = UVTop::new(USeries::constant(MultiVector::scalar(t(&[2, 3])), 2), vol);
    assert!(dual_differential(&x).unwrap().is_zero());
}

#[test]
fn dual_action_of_function_vanishes() {
    let vol = VolumeForm::standard(2);
    let f = USeries::constant(MultiVector::scalar(t(&[1, -1])), 2);
    let x = UVTop::new(USeries::constant(MultiVector::scalar(t(&[2, 0])), 2), vol.clone());
    assert!(action_lt_dual(&qf(1, 2), &vol, &f, &x).unwrap().is_zero());
}
