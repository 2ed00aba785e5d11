//! Independent check of cyclotomic reduction: χ_𝐂 is rebuilt from its factors, and
//! a − reduce(a) must lie in the span of u·χ_𝐂·v with u, v monomials of bounded degree.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use awpa::awpa::{Awpa, AwpaElem, Mono};
use awpa::builtins::{clifford, cyclic_group, trivial};
use awpa::cyclotomic::{Cyclo, CycloParams};
use awpa::frobenius::FrobAlg;
use awpa::perm::Perm;
use awpa::scalar::CycScalar;
use awpa::structure::{all_words, exponent_vectors, in_span};
use awpa::suite::Sampler;

/// ∏_{k,j} (x_1^k − v_{kj}) for scalar entries.
fn chi_by_hand(a: &Awpa, ks: &[&[i64]]) -> AwpaElem {
    let mut out = a.one();
    for (k, l) in ks.iter().enumerate() {
        for &v in l.iter() {
            let factor = a.x_pow(1, k as u32 + 1).unwrap().sub(&a.from_int(v));
            out = a.mul(&out, &factor).unwrap();
        }
    }
    out
}

fn monomials(a: &Awpa, max_deg: u32) -> Vec<AwpaElem> {
    let n = a.n();
    let mut out = Vec::new();
    for alpha in exponent_vectors(n, max_deg) {
        for word in all_words(n, a.algebra().dim()) {
            for perm in Perm::all(n) {
                out.push(a.mono(Mono { alpha: alpha.clone(), word: word.clone(), perm }).unwrap());
            }
        }
    }
    out
}

fn check(f: FrobAlg, ks: &[&[i64]], n: usize, seed: u64) {
    let entries = ks.iter().map(|l| l.iter().map(|&v| f.unit().scale(&CycScalar::from_int(v))).collect()).collect();
    let params = Arc::new(CycloParams::new(Arc::new(f), entries).unwrap());
    let d = params.level();
    let c = Cyclo::new(params, n).unwrap();
    let a = c.awpa();
    let chi = chi_by_hand(a, ks);
    assert_eq!(chi.poly_degree(), Some(d));
    let max_deg = d + 1;
    let left = monomials(a, max_deg - d);
    let right = monomials(a, 0);
    let mut ideal = Vec::new();
    for u in &left {
        let uc = a.mul(u, &chi).unwrap();
        for v in &right {
            ideal.push(a.mul(&uc, v).unwrap());
        }
    }
    let mut s = Sampler::new(a, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..20 {
        let x = s.elem(3, max_deg);
        let r = c.reduce(&x).unwrap();
        assert!(r.lift().terms().keys().all(|m| m.alpha.iter().all(|&e| e < d)), "{}", a.format(r.lift()));
        assert!(in_span(&ideal, &x.sub(r.lift())), "{} reduces to {}", a.format(&x), a.format(r.lift()));
        assert_eq!(c.reduce(r.lift()).unwrap(), r);
        let y = c.random_elem(&mut rng, 3);
        assert_eq!(c.reduce(&a.mul(&x, y.lift()).unwrap()).unwrap(), c.mul(&r, &y).unwrap());
    }
}

#[test]
fn trivial_level_two() {
    check(trivial(), &[&[1, -2]], 2, 1);
}

#[test]
fn trivial_level_three() {
    check(trivial(), &[&[0, 1, 2]], 2, 2);
}

#[test]
fn clifford_even_level() {
    check(clifford(), &[&[], &[3]], 2, 3);
}

#[test]
fn clifford_odd_level() {
    check(clifford(), &[&[0]], 2, 4);
}

#[test]
fn cyclic_group_level_two() {
    check(cyclic_group(2).unwrap(), &[&[1, 1]], 2, 5);
}
