//! Worked examples through the public API.

use std::sync::Arc;

use awpa::awpa::Awpa;
use awpa::builtins::{clifford, cyclic_group, dual_numbers, trivial};
use awpa::cyclotomic::{Cyclo, CycloParams, Extension};
use awpa::frobenius::{AlgElem, FrobAlg};
use awpa::oracle::Oracle;
use awpa::scalar::CycScalar;
use awpa::structure::{evaluation_hom, from_wreath, intertwiner, is_central, jucys_murphy, leading_term, AutKind, Automorphism};
use awpa::tensor::TensorElem;

fn alg(f: FrobAlg, n: usize) -> Awpa {
    Awpa::new(Arc::new(f), n)
}

fn p(a: &Awpa, s: &str) -> awpa::awpa::AwpaElem {
    a.parse(s).unwrap_or_else(|e| panic!("{}: {}", s, e))
}

fn scalar_params(f: FrobAlg, ks: &[&[i64]]) -> Arc<CycloParams> {
    let e = ks.iter().map(|l| l.iter().map(|&v| f.unit().scale(&CycScalar::from_int(v))).collect()).collect();
    Arc::new(CycloParams::new(Arc::new(f), e).unwrap())
}

#[test]
fn hecke_relation_in_the_trivial_case() {
    let a = alg(trivial(), 2);
    assert_eq!(a.mul(&p(&a, "s1"), &p(&a, "x1")).unwrap(), p(&a, "x2*s1 - 1"));
    assert_eq!(
        a.mul(&p(&a, "x1"), &p(&a, "x2")).unwrap(),
        a.mono(awpa::awpa::Mono { alpha: vec![1, 1], word: vec![0, 0], perm: awpa::perm::Perm::identity(2) }).unwrap()
    );
}

#[test]
fn sergeev_relation() {
    let a = alg(clifford(), 2);
    assert_eq!(a.mul(&p(&a, "s1"), &p(&a, "x1")).unwrap(), p(&a, "x2*s1 - 1 - b(c,c)"));
}

#[test]
fn t_elements() {
    let a = alg(dual_numbers(), 2);
    assert_eq!(a.t_element(1, 2, 1).unwrap(), p(&a, "b(z,1) + b(1,z)"));
    let a = alg(cyclic_group(3).unwrap(), 2);
    // Σ_g g_1 g_2^{-1}
    assert_eq!(a.t_element(1, 2, 1).unwrap(), p(&a, "b(1,1) + b(g,g2) + b(g2,g)"));
    let a = alg(trivial(), 2);
    assert_eq!(a.t_element(1, 2, 3).unwrap(), p(&a, "x1^2 + x1*x2 + x2^2"));
}

#[test]
fn divided_differences() {
    let a = alg(trivial(), 2);
    assert_eq!(a.divided_difference(1, &p(&a, "x1")).unwrap(), a.one());
    assert!(!a.divided_difference(1, &p(&a, "x1*x2^2")).unwrap().is_zero());
    let twice = a.divided_difference(1, &a.divided_difference(1, &p(&a, "x1*x2^2")).unwrap()).unwrap();
    assert!(twice.is_zero());
    let c = alg(clifford(), 2);
    assert!(c.divided_difference(1, &p(&c, "b(c,1)")).unwrap().is_zero());
}

#[test]
fn module_action_on_generator() {
    let a = alg(trivial(), 2);
    let o = Oracle::new(&a);
    assert_eq!(o.image(&p(&a, "x1")).unwrap(), p(&a, "x1"));
    assert_eq!(o.product(&p(&a, "s1"), &p(&a, "x1")).unwrap(), p(&a, "x2*s1 - 1"));
}

#[test]
fn jucys_murphy_elements() {
    let a = alg(trivial(), 3);
    assert_eq!(from_wreath(&a, &jucys_murphy(&a, 1).unwrap()).unwrap(), a.zero());
    assert_eq!(from_wreath(&a, &jucys_murphy(&a, 3).unwrap()).unwrap(), p(&a, "s[3,2,1] + s[1,3,2]"));
    let c = alg(clifford(), 2);
    assert_eq!(from_wreath(&c, &jucys_murphy(&c, 2).unwrap()).unwrap(), p(&c, "s1 + b(c,c)*s1"));
    assert_eq!(from_wreath(&c, &evaluation_hom(&c, &p(&c, "x1")).unwrap()).unwrap(), c.zero());
}

#[test]
fn clifford_center_examples() {
    let a = alg(clifford(), 2);
    assert!(is_central(&a, &p(&a, "x1^2 + x2^2")).unwrap().0);
    assert!(!is_central(&a, &p(&a, "x1 + x2")).unwrap().0);
}

#[test]
fn intertwiner_examples() {
    let a = alg(clifford(), 2);
    let o = intertwiner(&a, 1).unwrap();
    let lhs = a.mul(&o, &p(&a, "x1")).unwrap();
    assert_eq!(lhs, a.mul(&p(&a, "x2"), &o).unwrap());
    let k = alg(trivial(), 4);
    let (o1, o3) = (intertwiner(&k, 1).unwrap(), intertwiner(&k, 3).unwrap());
    assert!(k.commutator(&o1, &o3).unwrap().is_zero());
}

#[test]
fn automorphism_examples() {
    let a = alg(clifford(), 3);
    let rev = Automorphism::new(&a, AutKind::Reverse).unwrap();
    assert_eq!(rev.apply(&p(&a, "x1")).unwrap(), p(&a, "x3"));
    let k = alg(trivial(), 2);
    let lam = CycScalar::from_ratio(3, 2);
    let shift = Automorphism::new(&k, AutKind::Shift(TensorElem::one(k.algebra(), 2).scale(&lam))).unwrap();
    assert_eq!(shift.apply(&p(&k, "x2")).unwrap(), p(&k, "x2 + 3/2"));
}

#[test]
fn only_the_hecke_relation_is_inhomogeneous() {
    let a = alg(trivial(), 2);
    let rhs = p(&a, "x2*s1 - 1");
    assert_eq!(leading_term(&rhs).unwrap(), p(&a, "x2*s1"));
}

#[test]
fn cyclotomic_examples() {
    let c = Cyclo::new(scalar_params(trivial(), &[&[0]]), 2).unwrap();
    assert_eq!(c.level(), 1);
    let a = c.awpa();
    for k in 1..=2 {
        let jk = from_wreath(a, &evaluation_hom(a, &a.x(k).unwrap()).unwrap()).unwrap();
        assert_eq!(c.reduce(&a.x(k).unwrap()).unwrap().lift(), &jk);
    }
    let c = Cyclo::new(scalar_params(clifford(), &[&[], &[5]]), 2).unwrap();
    assert!(c.reduce(c.chi(1).unwrap()).unwrap().is_zero());
    assert_eq!(c.reduce(&p(c.awpa(), "x1^2")).unwrap(), c.parse("5").unwrap());
    // trace: top exponents and identity permutation only
    assert_eq!(c.trace(&c.parse("x1*x2").unwrap()), CycScalar::one());
    assert!(c.trace(&c.parse("x1*x2*s1").unwrap()).is_zero());
    assert!(c.trace(&c.parse("x1").unwrap()).is_zero());
}

#[test]
fn partial_trace_examples() {
    let params = scalar_params(cyclic_group(3).unwrap(), &[&[0, 1]]);
    let ext = Extension::new(params, 1).unwrap();
    let (lo, hi) = (ext.lo(), ext.hi());
    // tr(2 + g) = 2
    let z = hi.parse("x2*b(1,1)*2 + x2*b(1,g)").unwrap();
    assert_eq!(ext.partial_trace(&z).unwrap(), lo.parse("2").unwrap());
    assert!(ext.partial_trace(&hi.one()).unwrap().is_zero());
    let z = hi.parse("x1*b(g,1)*s1*x1").unwrap();
    assert!(ext.partial_trace(&z).unwrap().is_zero());
}

#[test]
fn clifford_odd_level_nakayama() {
    let c = Cyclo::new(scalar_params(clifford(), &[&[0]]), 2).unwrap();
    let c1 = c.reduce(&c.awpa().slot(1, &AlgElem::basis(2, 1)).unwrap()).unwrap();
    assert_eq!(c.nakayama(&c1), c1.scale(&CycScalar::from_int(-1)));
}
