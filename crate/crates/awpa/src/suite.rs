//! Seeded randomized property suites for 𝒜ₙ(F).
//!
//! Each relation is a pair of sums of products. Both sides are evaluated twice: once
//! with the rewriting engine and once by acting on the generator of the module V, so a
//! pass certifies the relation independently of the normal-form multiplication.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::awpa::{Awpa, AwpaElem, Mono};
use crate::error::Result;
use crate::frobenius::{AlgElem, FrobAlg};
use crate::lincomb::LinComb;
use crate::oracle::Oracle;
use crate::perm::Perm;
use crate::scalar::{root_of_unity, CycScalar};
use crate::structure::{intertwiner, Evaluation};
use crate::tensor::TensorElem;

/// Outcome of one named property over many random instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub instances: usize,
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn line(&self) -> String {
        match &self.counterexample {
            None => format!("PASS {} ({} instances)", self.name, self.instances),
            Some(c) => format!("FAIL {} after {} instances: {}", self.name, self.instances, c),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub algebra: String,
    pub n: usize,
    pub seed: u64,
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed())
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.results.iter().find(|r| !r.passed())
    }
}

/// Σ c · (product of factors).
type Expr = Vec<(CycScalar, Vec<AwpaElem>)>;

fn prod(fs: Vec<AwpaElem>) -> Expr {
    vec![(CycScalar::one(), fs)]
}

fn minus(mut a: Expr, b: Expr) -> Expr {
    a.extend(b.into_iter().map(|(c, f)| (-c, f)));
    a
}

fn plus(mut a: Expr, b: Expr) -> Expr {
    a.extend(b);
    a
}

fn eval_engine(a: &Awpa, e: &Expr) -> Result<AwpaElem> {
    let mut out = a.zero();
    for (c, fs) in e {
        let p = a.mul_all(&fs.iter().collect::<Vec<_>>())?;
        out = out.add(&p.scale(&c.embed(a.algebra().conductor())));
    }
    Ok(out)
}

fn eval_oracle(a: &Awpa, o: &Oracle, e: &Expr) -> Result<AwpaElem> {
    let mut out = a.zero();
    for (c, fs) in e {
        let mut v = o.generator();
        for f in fs.iter().rev() {
            v = o.act(f, &v)?;
        }
        out = out.add(&a.elem(v.terms).scale(&c.embed(a.algebra().conductor())));
    }
    Ok(out)
}

/// Random generators for elements of F, F^{⊗n} and 𝒜ₙ(F).
pub struct Sampler<'a> {
    pub alg: &'a Awpa,
    pub rng: ChaCha8Rng,
}

impl<'a> Sampler<'a> {
    pub fn new(alg: &'a Awpa, seed: u64) -> Self {
        Sampler { alg, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn f(&self) -> &FrobAlg {
        self.alg.algebra()
    }

    pub fn coeff(&mut self) -> CycScalar {
        let m = self.f().conductor();
        let mut v = 0;
        while v == 0 {
            v = self.rng.gen_range(-3i64..=3);
        }
        let c = CycScalar::from_int(v).embed(m);
        if m > 1 && self.rng.gen_bool(0.3) {
            &c * &root_of_unity(m, self.rng.gen_range(0..m as i64))
        } else {
            c
        }
    }

    /// 1-based index in 1..=n.
    pub fn index(&mut self) -> usize {
        self.rng.gen_range(1..=self.alg.n())
    }

    pub fn perm(&mut self) -> Perm {
        let mut v: Vec<u8> = (0..self.alg.n() as u8).collect();
        v.shuffle(&mut self.rng);
        Perm::from_images0(v)
    }

    pub fn alg_elem(&mut self) -> AlgElem {
        let d = self.f().dim();
        let mut e = AlgElem::zero(d);
        for _ in 0..2 {
            let i = self.rng.gen_range(0..d);
            e.0[i] = self.coeff();
        }
        e
    }

    pub fn tensor(&mut self) -> TensorElem {
        let (n, d) = (self.alg.n(), self.f().dim());
        let mut lc = LinComb::new();
        for _ in 0..2 {
            let w = (0..n).map(|_| self.rng.gen_range(0..d) as u16).collect();
            lc.add_term(w, self.coeff());
        }
        TensorElem { n, lc }
    }

    /// Random element with up to `terms` monomials of polynomial degree ≤ `max_deg`.
    pub fn elem(&mut self, terms: usize, max_deg: u32) -> AwpaElem {
        let (n, d) = (self.alg.n(), self.f().dim());
        let mut lc = LinComb::new();
        for _ in 0..terms {
            let mut alpha = vec![0u32; n];
            if n > 0 {
                for _ in 0..self.rng.gen_range(0..=max_deg) {
                    let i = self.rng.gen_range(0..n);
                    alpha[i] += 1;
                }
            }
            let word = (0..n).map(|_| self.rng.gen_range(0..d) as u16).collect();
            let perm = self.perm();
            lc.add_term(Mono { alpha, word, perm }, self.coeff());
        }
        self.alg.elem(lc)
    }

    /// Random element of P_n(F).
    pub fn poly(&mut self, terms: usize, max_deg: u32) -> AwpaElem {
        let e = self.elem(terms, max_deg);
        let id = Perm::identity(self.alg.n());
        e.with_terms(e.terms().map_keys(|m| Mono { perm: id.clone(), ..m.clone() }))
    }

    /// Random polynomial in x_1^θ, …, x_n^θ.
    pub fn theta_poly(&mut self) -> AwpaElem {
        let theta = self.f().theta();
        let mut out = self.alg.zero();
        for _ in 0..2 {
            let mut acc = self.alg.scalar(self.coeff());
            for _ in 0..self.rng.gen_range(0..=2) {
                let i = self.index();
                acc = self.alg.mul(&acc, &self.alg.x_pow(i, theta).unwrap()).unwrap();
            }
            out = out.add(&acc);
        }
        out
    }

    /// Two distinct 1-based indices.
    pub fn pair(&mut self) -> (usize, usize) {
        let i = self.index();
        let mut j = self.index();
        while j == i {
            j = self.index();
        }
        (i, j)
    }

    pub fn simple(&mut self) -> usize {
        self.rng.gen_range(1..self.alg.n())
    }

    pub fn k(&mut self) -> u32 {
        self.rng.gen_range(1..=3)
    }
}

/// Name, minimal n, and instance builder returning (description, lhs, rhs).
type Relation = (&'static str, usize, fn(&mut Sampler) -> Result<(String, Expr, Expr)>);

fn relations() -> Vec<Relation> {
    vec![
        ("xF-commutation", 1, |s| {
            let a = s.alg;
            let t = s.tensor();
            let i = s.index();
            let mut exps = vec![0i64; a.n()];
            exps[i - 1] = 1;
            let ft = a.tensor(&t)?;
            let psi = a.tensor(&t.psi(a.algebra(), &exps))?;
            Ok((format!("f = {}, i = {}", a.format(&ft), i), prod(vec![ft, a.x(i)?]), prod(vec![a.x(i)?, psi])))
        }),
        ("sx-trivial-commutation", 3, |s| {
            let a = s.alg;
            let i = s.simple();
            let mut j = s.index();
            while j == i || j == i + 1 {
                j = s.index();
            }
            Ok((format!("i = {}, j = {}", i, j), prod(vec![a.s(i)?, a.x(j)?]), prod(vec![a.x(j)?, a.s(i)?])))
        }),
        ("sx-commutation", 2, |s| {
            let a = s.alg;
            let i = s.simple();
            let lhs = prod(vec![a.s(i)?, a.x(i)?]);
            let rhs = minus(prod(vec![a.x(i + 1)?, a.s(i)?]), prod(vec![a.t_element(i, i + 1, 1)?]));
            Ok((format!("i = {}", i), lhs, rhs))
        }),
        ("sx-commutation-conjugate", 2, |s| {
            let a = s.alg;
            let i = s.simple();
            let lhs = prod(vec![a.s(i)?, a.x(i + 1)?]);
            let rhs = plus(prod(vec![a.x(i)?, a.s(i)?]), prod(vec![a.t_element(i + 1, i, 1)?]));
            Ok((format!("i = {}", i), lhs, rhs))
        }),
        ("SF-commutation", 1, |s| {
            let a = s.alg;
            let t = s.tensor();
            let p = s.perm();
            let ft = a.tensor(&t)?;
            let moved = a.tensor(&t.superpermute(a.algebra(), &p)?)?;
            Ok((format!("pi = {}, f = {}", p, a.format(&ft)), prod(vec![a.perm(&p)?, ft]), prod(vec![moved, a.perm(&p)?])))
        }),
        ("sx-higher-commutation", 2, |s| {
            let a = s.alg;
            let i = s.simple();
            let k = s.k();
            let lhs = prod(vec![a.s(i)?, a.x_pow(i, k)?]);
            let rhs = minus(prod(vec![a.x_pow(i + 1, k)?, a.s(i)?]), prod(vec![a.t_element(i, i + 1, k)?]));
            Ok((format!("i = {}, k = {}", i, k), lhs, rhs))
        }),
        ("sx-higher-commutation-conjugate", 2, |s| {
            let a = s.alg;
            let i = s.simple();
            let k = s.k();
            let lhs = prod(vec![a.s(i)?, a.x_pow(i + 1, k)?]);
            let rhs = plus(prod(vec![a.x_pow(i, k)?, a.s(i)?]), prod(vec![a.t_element(i + 1, i, k)?]));
            Ok((format!("i = {}, k = {}", i, k), lhs, rhs))
        }),
        ("Ft-commutation", 2, |s| {
            let a = s.alg;
            let f = a.algebra();
            let t = s.tensor();
            let (i, j) = s.pair();
            let k = s.k();
            let sij = Perm::transposition(a.n(), i, j);
            let mut ei = vec![0i64; a.n()];
            ei[i - 1] = k as i64;
            let mut ej = vec![0i64; a.n()];
            ej[j - 1] = k as i64;
            let tk = a.t_element(i, j, k)?;
            let first = a.tensor(&t.superpermute(f, &sij)?.psi(f, &ei))?;
            let second = a.tensor(&t.psi(f, &ej).superpermute(f, &sij)?)?;
            let ft = a.tensor(&t)?;
            let lhs = plus(prod(vec![ft.clone(), tk.clone()]), prod(vec![ft, tk.clone()]));
            let rhs = plus(prod(vec![tk.clone(), first]), prod(vec![tk, second]));
            Ok((format!("i = {}, j = {}, k = {}", i, j, k), lhs, rhs))
        }),
        ("psi-tij-reverse", 2, |s| {
            let a = s.alg;
            let (i, j) = s.pair();
            let mut ej = vec![0i64; a.n()];
            ej[j - 1] = 1;
            let tij = crate::structure::t_tensor(a.algebra(), a.n(), i - 1, j - 1);
            let lhs = prod(vec![a.tensor(&tij.psi(a.algebra(), &ej))?]);
            let rhs = prod(vec![a.t_element(j, i, 1)?]);
            Ok((format!("i = {}, j = {}", i, j), lhs, rhs))
        }),
        ("xt-commutation-far", 3, |s| {
            let a = s.alg;
            let (i, j) = s.pair();
            let mut l = s.index();
            while l == i || l == j {
                l = s.index();
            }
            let k = s.k();
            let t = a.t_element(i, j, k)?;
            Ok((format!("i = {}, j = {}, l = {}, k = {}", i, j, l, k), prod(vec![a.x(l)?, t.clone()]), prod(vec![t, a.x(l)?])))
        }),
        ("xt-commutation-R", 2, |s| {
            let a = s.alg;
            let (i, j) = s.pair();
            let lhs = prod(vec![a.x(i)?, a.t_element(i, j, 1)?]);
            let rhs = prod(vec![a.t_element(j, i, 1)?, a.x(i)?]);
            Ok((format!("i = {}, j = {}", i, j), lhs, rhs))
        }),
        ("pf-commutation", 2, |s| {
            let a = s.alg;
            let (i, j) = s.pair();
            let p = s.theta_poly();
            let t = a.t_element(i, j, 1)?;
            Ok((format!("i = {}, j = {}, p = {}", i, j, a.format(&p)), prod(vec![p.clone(), t.clone()]), prod(vec![t, p])))
        }),
        ("tij-conjugation", 2, |s| {
            let a = s.alg;
            let (i, j) = s.pair();
            let p = s.perm();
            let lhs = prod(vec![a.perm(&p)?, a.t_element(i, j, 1)?]);
            let rhs = prod(vec![a.t_element(p.at(i - 1) + 1, p.at(j - 1) + 1, 1)?, a.perm(&p)?]);
            Ok((format!("pi = {}, i = {}, j = {}", p, i, j), lhs, rhs))
        }),
        ("tii+1-conjugation", 2, |s| {
            let a = s.alg;
            let i = s.simple();
            let k = s.k();
            let lhs = prod(vec![a.s(i)?, a.t_element(i, i + 1, k)?]);
            let rhs = prod(vec![a.t_element(i + 1, i, k)?, a.s(i)?]);
            Ok((format!("i = {}, k = {}", i, k), lhs, rhs))
        }),
        ("t-symmetry-when-symmetric", 2, |s| {
            let a = s.alg;
            let (i, j) = s.pair();
            let k = s.k();
            Ok((format!("i = {}, j = {}, k = {}", i, j, k), prod(vec![a.t_element(i, j, k)?]), prod(vec![a.t_element(j, i, k)?])))
        }),
    ]
}

/// Defining and derived relations, `instances` random instances each.
pub fn relation_suite(a: &Awpa, seed: u64, instances: usize) -> Result<Vec<CheckResult>> {
    let oracle = Oracle::new(a);
    let mut s = Sampler::new(a, seed);
    let mut out = Vec::new();
    for (name, min_n, build) in relations() {
        if a.n() < min_n || (name == "t-symmetry-when-symmetric" && a.algebra().theta() != 1) {
            continue;
        }
        let mut res = CheckResult { name: format!("relation {}", name), instances: 0, counterexample: None };
        for _ in 0..instances {
            let (desc, lhs, rhs) = build(&mut s)?;
            res.instances += 1;
            let (le, re) = (eval_engine(a, &lhs)?, eval_engine(a, &rhs)?);
            if le != re {
                res.counterexample = Some(format!("{}: engine gives {} vs {}", desc, a.format(&le), a.format(&re)));
                break;
            }
            let (lo, ro) = (eval_oracle(a, &oracle, &lhs)?, eval_oracle(a, &oracle, &rhs)?);
            if lo != ro || lo != le {
                res.counterexample = Some(format!("{}: module V gives {} vs {}", desc, a.format(&lo), a.format(&ro)));
                break;
            }
        }
        out.push(res);
    }
    Ok(out)
}

fn check<F>(name: &str, instances: usize, mut f: F) -> Result<CheckResult>
where
    F: FnMut() -> Result<Option<String>>,
{
    let mut res = CheckResult { name: name.into(), instances: 0, counterexample: None };
    for _ in 0..instances {
        res.instances += 1;
        if let Some(c) = f()? {
            res.counterexample = Some(c);
            break;
        }
    }
    Ok(res)
}

/// Engine product against the module V, and associativity.
pub fn oracle_suite(a: &Awpa, seed: u64, pairs: usize, triples: usize) -> Result<Vec<CheckResult>> {
    let oracle = Oracle::new(a);
    let mut s = Sampler::new(a, seed);
    let agree = check("normal-form product matches the module V", pairs, || {
        let u = s.elem(3, 3);
        let v = s.elem(3, 3);
        let (e, o) = (a.mul(&u, &v)?, oracle.product(&u, &v)?);
        Ok((e != o).then(|| format!("u = {}, v = {}", a.format(&u), a.format(&v))))
    })?;
    let assoc = check("associativity", triples, || {
        let (u, v, w) = (s.elem(2, 2), s.elem(2, 2), s.elem(2, 2));
        let l = a.mul(&a.mul(&u, &v)?, &w)?;
        let r = a.mul(&u, &a.mul(&v, &w)?)?;
        Ok((l != r).then(|| format!("u = {}, v = {}, w = {}", a.format(&u), a.format(&v), a.format(&w))))
    })?;
    Ok(vec![agree, assoc])
}

/// Δ_i² = 0 and Δ_i(a₁a₂) = Δ_i(a₁)a₂ + ^{s_i}a₁Δ_i(a₂) on P_n(F).
pub fn delta_suite(a: &Awpa, seed: u64, instances: usize) -> Result<Vec<CheckResult>> {
    if a.n() < 2 {
        return Ok(vec![]);
    }
    let mut s = Sampler::new(a, seed);
    let mut leibniz_s = Sampler::new(a, seed.wrapping_add(1));
    let square = check("divided difference squares to zero", instances, || {
        let p = s.poly(3, 3);
        let i = s.simple();
        let d2 = a.divided_difference(i, &a.divided_difference(i, &p)?)?;
        Ok((!d2.is_zero()).then(|| format!("i = {}, p = {}", i, a.format(&p))))
    })?;
    let leibniz = check("divided difference twisted Leibniz rule", instances, || {
        let (p, q) = (leibniz_s.poly(2, 2), leibniz_s.poly(2, 2));
        let i = leibniz_s.simple();
        let lhs = a.divided_difference(i, &a.mul(&p, &q)?)?;
        let sp = a.poly(&a.psuperperm(&Perm::simple(a.n(), i), &a.to_poly(&p)?));
        let rhs = a.mul(&a.divided_difference(i, &p)?, &q)?.add(&a.mul(&sp, &a.divided_difference(i, &q)?)?);
        Ok((lhs != rhs).then(|| format!("i = {}, p = {}, q = {}", i, a.format(&p), a.format(&q))))
    })?;
    Ok(vec![square, leibniz])
}

/// The evaluation map x_k ↦ J_k is multiplicative and fixes the wreath subalgebra.
pub fn jucys_murphy_suite(a: &Awpa, seed: u64, pairs: usize) -> Result<Vec<CheckResult>> {
    let f = a.algebra();
    let mut ev = Evaluation::new(a)?;
    let mut s = Sampler::new(a, seed);
    let mult = check("evaluation map is multiplicative", pairs, || {
        let (u, v) = (s.elem(2, 2), s.elem(2, 2));
        let l = ev.apply(&a.mul(&u, &v)?)?;
        let r = ev.apply(&u)?.mul(f, &ev.apply(&v)?)?;
        Ok((l != r).then(|| format!("u = {}, v = {}", a.format(&u), a.format(&v))))
    })?;
    let mut s = Sampler::new(a, seed.wrapping_add(1));
    let mut ev = Evaluation::new(a)?;
    let ident = check("evaluation map fixes the wreath subalgebra", pairs, || {
        let u = s.elem(3, 0);
        let w = ev.apply(&u)?;
        Ok((crate::structure::from_wreath(a, &w)? != u).then(|| format!("u = {}", a.format(&u))))
    })?;
    Ok(vec![mult, ident])
}

/// The four intertwiner identities, exhaustively over i, j and over the basis of F.
pub fn intertwiner_suite(a: &Awpa) -> Result<Vec<CheckResult>> {
    let n = a.n();
    if n < 2 {
        return Ok(vec![]);
    }
    let f = a.algebra();
    let theta = f.theta();
    let om: Vec<AwpaElem> = (1..n).map(|i| intertwiner(a, i)).collect::<Result<_>>()?;
    let mut squared = CheckResult { name: "intertwiner square".into(), instances: 0, counterexample: None };
    let mut fcomm = CheckResult { name: "intertwiner moves F slots".into(), instances: 0, counterexample: None };
    let mut xcomm = CheckResult { name: "intertwiner moves x".into(), instances: 0, counterexample: None };
    let mut distant = CheckResult { name: "distant intertwiners commute".into(), instances: 0, counterexample: None };
    for i in 1..n {
        let o = &om[i - 1];
        let t = a.t_element(i, i + 1, theta)?;
        let diff = a.x_pow(i, theta)?.sub(&a.x_pow(i + 1, theta)?);
        let rhs = a.mul(&t, &t)?.sub(&a.mul(&diff, &diff)?);
        squared.instances += 1;
        if a.mul(o, o)? != rhs && squared.counterexample.is_none() {
            squared.counterexample = Some(format!("i = {}", i));
        }
        let si = Perm::simple(n, i);
        for j in 1..=n {
            let sj = si.at(j - 1) + 1;
            for b in 0..f.dim() {
                fcomm.instances += 1;
                let l = a.mul(o, &a.basis_slot(j, b)?)?;
                let r = a.mul(&a.basis_slot(sj, b)?, o)?;
                if l != r && fcomm.counterexample.is_none() {
                    fcomm.counterexample = Some(format!("i = {}, j = {}, b = {}", i, j, f.label(b)));
                }
            }
            xcomm.instances += 1;
            if a.mul(o, &a.x(j)?)? != a.mul(&a.x(sj)?, o)? && xcomm.counterexample.is_none() {
                xcomm.counterexample = Some(format!("i = {}, j = {}", i, j));
            }
        }
        for j in i + 2..n {
            distant.instances += 1;
            if a.commutator(o, &om[j - 1])? != a.zero() && distant.counterexample.is_none() {
                distant.counterexample = Some(format!("i = {}, j = {}", i, j));
            }
        }
    }
    let mut out = vec![squared, fcomm, xcomm];
    if distant.instances > 0 {
        out.push(distant);
    }
    Ok(out)
}

fn fail_if(res: &mut CheckResult, bad: bool, msg: impl FnOnce() -> String) {
    res.instances += 1;
    if bad && res.counterexample.is_none() {
        res.counterexample = Some(msg());
    }
}

/// Invariants of a Frobenius superalgebra, checked exhaustively on its basis.
pub fn frobenius_checks(f: &FrobAlg) -> Vec<CheckResult> {
    let d = f.dim();
    let new = |name: &str| CheckResult { name: name.into(), instances: 0, counterexample: None };
    let (mut dual, mut naka, mut auto, mut order, mut ddual, mut trace) = (
        new("dual basis pairs to the identity"),
        new("Nakayama identity"),
        new("Nakayama map is a graded algebra automorphism"),
        new("Nakayama map has the reported order"),
        new("double dual is the signed inverse Nakayama map"),
        new("trace is even of degree delta"),
    );
    let b = |i: usize| AlgElem::basis(d, i);
    let psi = |i: usize| AlgElem::from_fvec(d, f.psi_basis(1, i));
    let duals = f.dual_basis();
    for i in 0..d {
        for j in 0..d {
            let want = if i == j { f.one_scalar() } else { f.zero_scalar() };
            fail_if(&mut dual, f.tr(&f.mul_elems(&duals[i], &b(j))) != want, || format!("{}, {}", f.label(i), f.label(j)));
            let lhs = f.tr(&f.mul_elems(&b(i), &b(j)));
            let mut rhs = f.tr(&f.mul_elems(&b(j), &psi(i)));
            if f.parity(i) * f.parity(j) == 1 {
                rhs = -rhs;
            }
            fail_if(&mut naka, lhs != rhs, || format!("f = {}, g = {}", f.label(i), f.label(j)));
            let prod = f.mul_elems(&b(i), &b(j));
            let moved = f.psi_pow(1, &prod);
            fail_if(&mut auto, moved != f.mul_elems(&psi(i), &psi(j)), || format!("{} * {}", f.label(i), f.label(j)));
        }
        fail_if(&mut auto, f.homogeneous_type(&psi(i)) != Some((f.degree(i), f.parity(i))), || {
            format!("psi({}) changes degree", f.label(i))
        });
        let nonzero = !f.tr(&b(i)).is_zero();
        fail_if(&mut trace, nonzero && (f.degree(i) != f.delta() || f.parity(i) == 1), || format!("tr({}) != 0", f.label(i)));
    }
    let theta = f.theta() as i64;
    for k in 1..=theta {
        let id = (0..d).all(|i| f.psi_basis(k, i) == &vec![(i, f.one_scalar())]);
        fail_if(&mut order, id != (k == theta), || format!("psi^{} is {}the identity", k, if id { "" } else { "not " }));
    }
    match f.left_dual_of(&duals) {
        None => fail_if(&mut ddual, true, || "dual basis is not a basis".into()),
        Some(dd) => {
            for i in 0..d {
                let mut want = f.psi_pow(-1, &b(i));
                if f.parity(i) == 1 {
                    want = want.scale(&-f.one_scalar());
                }
                fail_if(&mut ddual, dd[i] != want, || format!("b = {}", f.label(i)));
            }
        }
    }
    vec![dual, naka, auto, order, ddual, trace]
}

/// Everything above with deterministic sub-seeds.
pub fn run_suite(a: &Awpa, seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut results = relation_suite(a, seed, instances)?;
    results.extend(oracle_suite(a, seed ^ 0x9e37, instances, instances / 2)?);
    results.extend(delta_suite(a, seed ^ 0x79b9, instances)?);
    results.extend(jucys_murphy_suite(a, seed ^ 0x7f4a, instances / 2)?);
    results.extend(intertwiner_suite(a)?);
    Ok(SuiteReport { algebra: a.algebra().name.clone(), n: a.n(), seed, results })
}
