//! Property tests for the stated invariants. Random algebra elements come from the
//! seeded sampler, with proptest choosing the seed, algebra and rank.

use std::sync::Arc;

use proptest::prelude::*;

use awpa::awpa::{Awpa, AwpaElem};
use awpa::builtins::desk_set;
use awpa::oracle::Oracle;
use awpa::perm::Perm;
use awpa::scalar::{root_of_unity, CycScalar};
use awpa::structure::gr_mul;
use awpa::suite::Sampler;

fn scalar() -> impl Strategy<Value = CycScalar> {
    (-6i64..=6, 1i64..=4, prop::sample::select(vec![1u32, 3, 4, 5, 12]), 0i64..12)
        .prop_map(|(p, q, m, k)| &CycScalar::from_ratio(p, q) * &root_of_unity(m, k))
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u8).collect::<Vec<_>>()).prop_shuffle().prop_map(Perm::from_images0)
}

fn setting() -> impl Strategy<Value = (usize, usize, u64)> {
    (0..desk_set().len(), 1usize..=3, any::<u64>())
}

fn build(idx: usize, n: usize) -> Awpa {
    Awpa::new(Arc::new(desk_set().swap_remove(idx)), n)
}

fn sum_degree(a: &Awpa, e: &AwpaElem) -> Option<u32> {
    let mut degs = e.terms().keys().map(|m| a.mono_degree(m));
    let d = degs.next()?;
    degs.all(|x| x == d).then_some(d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalars_form_a_field(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), CycScalar::one());
        }
    }

    #[test]
    fn scalar_text_round_trips(a in scalar()) {
        let m = a.conductor();
        prop_assert_eq!(CycScalar::parse(&a.format_in(m), m).unwrap(), a);
    }

    #[test]
    fn perm_composition_is_a_group_action(p in perm(5), q in perm(5)) {
        let pq = p.compose(&q);
        for i in 0..5 {
            prop_assert_eq!(pq.at(i), p.at(q.at(i)));
        }
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert_eq!(Perm::from_word(5, &p.reduced_word()), p.clone());
        prop_assert_eq!(p.reduced_word().len(), p.length());
    }

    #[test]
    fn multiplication_is_associative_and_matches_module((idx, n, seed) in setting()) {
        let a = build(idx, n);
        let mut s = Sampler::new(&a, seed);
        let (u, v, w) = (s.elem(2, 2), s.elem(2, 2), s.elem(2, 2));
        let uv = a.mul(&u, &v).unwrap();
        prop_assert_eq!(a.mul(&uv, &w).unwrap(), a.mul(&u, &a.mul(&v, &w).unwrap()).unwrap());
        prop_assert_eq!(&uv, &Oracle::new(&a).product(&u, &v).unwrap());
        prop_assert_eq!(a.mul(&a.one(), &u).unwrap(), u.clone());
        prop_assert_eq!(a.mul(&u, &a.one()).unwrap(), u);
    }

    #[test]
    fn text_format_round_trips((idx, n, seed) in setting()) {
        let a = build(idx, n);
        let u = Sampler::new(&a, seed).elem(4, 3);
        prop_assert_eq!(a.parse(&a.format(&u)).unwrap(), u);
    }

    #[test]
    fn products_respect_the_grading((idx, n, seed) in setting()) {
        let a = build(idx, n);
        let mut s = Sampler::new(&a, seed);
        let u = s.elem(1, 2);
        let v = s.elem(1, 2);
        prop_assume!(!u.is_zero() && !v.is_zero());
        let (du, dv) = (sum_degree(&a, &u).unwrap(), sum_degree(&a, &v).unwrap());
        let uv = a.mul(&u, &v).unwrap();
        prop_assume!(!uv.is_zero());
        prop_assert_eq!(sum_degree(&a, &uv), Some(du + dv));
        prop_assert_eq!(a.homogeneous_type(&uv).map(|t| t.0), Some(du + dv));
    }

    #[test]
    fn leading_terms_multiply_in_the_associated_graded((idx, n, seed) in setting()) {
        let a = build(idx, n);
        let mut s = Sampler::new(&a, seed);
        let (u, v) = (s.elem(2, 2), s.elem(2, 2));
        prop_assume!(!u.is_zero() && !v.is_zero());
        let (du, dv) = (u.poly_degree().unwrap(), v.poly_degree().unwrap());
        let top = a.mul(&u, &v).unwrap().poly_component(du + dv);
        let gr = gr_mul(&a, &u.poly_component(du), &v.poly_component(dv)).unwrap();
        prop_assert_eq!(top, gr);
    }

    #[test]
    fn nakayama_twist_has_order_theta((idx, n, seed) in setting()) {
        let a = build(idx, n);
        let f = a.algebra();
        let t = Sampler::new(&a, seed).tensor();
        let full = vec![f.theta() as i64; n];
        prop_assert_eq!(t.psi(f, &full), t.clone());
        prop_assert_eq!(t.psi(f, &vec![1; n]).psi(f, &vec![-1; n]), t.clone());
        let shifted: Vec<i64> = full.iter().map(|k| k + 1).collect();
        prop_assert_eq!(t.psi(f, &shifted), t.psi(f, &vec![1; n]));
    }

    #[test]
    fn superpermutation_is_an_action((idx, _, seed) in setting(), p in perm(3), q in perm(3)) {
        let a = build(idx, 3);
        let f = a.algebra();
        let t = Sampler::new(&a, seed).tensor();
        let lhs = t.superpermute(f, &q).unwrap().superpermute(f, &p).unwrap();
        prop_assert_eq!(lhs, t.superpermute(f, &p.compose(&q)).unwrap());
        let u = Sampler::new(&a, seed ^ 1).tensor();
        let prod = t.mul(f, &u).unwrap().superpermute(f, &p).unwrap();
        let sep = t.superpermute(f, &p).unwrap().mul(f, &u.superpermute(f, &p).unwrap()).unwrap();
        prop_assert_eq!(prod, sep);
    }

    #[test]
    fn divided_difference_is_a_twisted_derivation((idx, n, seed) in setting()) {
        prop_assume!(n >= 2);
        let a = build(idx, n);
        let mut s = Sampler::new(&a, seed);
        let (p, q) = (s.poly(2, 2), s.poly(2, 2));
        let i = s.simple();
        // s_i a = ^{s_i}a s_i − Δ_i(a)
        let si = a.s(i).unwrap();
        let moved = a.poly(&a.psuperperm(&Perm::simple(n, i), &a.to_poly(&p).unwrap()));
        let lhs = a.mul(&si, &p).unwrap();
        let rhs = a.mul(&moved, &si).unwrap().sub(&a.divided_difference(i, &p).unwrap());
        prop_assert_eq!(lhs, rhs);
        let dd = a.divided_difference(i, &a.divided_difference(i, &a.mul(&p, &q).unwrap()).unwrap()).unwrap();
        prop_assert!(dd.is_zero());
    }
}
