//! The module V = P_n(F) ⊗ kS_n, acted on generator by generator.
//!
//! This shares no rewriting code with the engine: Δ_i is built from its values on
//! single x's through the twisted Leibniz rule, tensor factors act one slot at a time,
//! and S_n acts through reduced words. The map a ↦ a·(1 ⊗ 1) sends x^α𝐛π to x^α𝐛 ⊗ π.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::awpa::{Awpa, AwpaElem, Exps, Mono};
use crate::error::{Error, Result};
use crate::frobenius::{AlgElem, FrobAlg};
use crate::lincomb::LinComb;
use crate::perm::Perm;
use crate::scalar::CycScalar;
use crate::tensor::Word;

/// Element of V: keys (α, 𝐛, w) stand for x^α𝐛 ⊗ w.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyModElem {
    pub n: usize,
    pub terms: LinComb<Mono>,
}

type Poly = LinComb<(Exps, Word)>;

pub struct Oracle<'a> {
    alg: &'a Awpa,
    delta_memo: Mutex<HashMap<(usize, Exps), Poly>>,
}

fn odd(f: &FrobAlg, b: u16) -> bool {
    f.parity(b as usize) == 1
}

impl<'a> Oracle<'a> {
    pub fn new(alg: &'a Awpa) -> Self {
        Oracle { alg, delta_memo: Mutex::new(HashMap::new()) }
    }

    fn f(&self) -> &FrobAlg {
        self.alg.algebra()
    }

    fn n(&self) -> usize {
        self.alg.n()
    }

    /// Words of 1 ∈ F^{⊗n}, expanded slot by slot.
    fn unit_poly(&self) -> Poly {
        let f = self.f();
        let mut acc: Vec<(Word, CycScalar)> = vec![(vec![], f.one_scalar())];
        let u = f.unit();
        for _ in 0..self.n() {
            let mut next = Vec::new();
            for (w, c) in &acc {
                for (b, x) in u.0.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let mut w2 = w.clone();
                    w2.push(b as u16);
                    next.push((w2, c * x));
                }
            }
            acc = next;
        }
        LinComb::from_terms(acc.into_iter().map(|(w, c)| ((vec![0; self.n()], w), c)))
    }

    /// 1 ⊗ 1 ∈ V.
    pub fn generator(&self) -> PolyModElem {
        let id = Perm::identity(self.n());
        PolyModElem {
            n: self.n(),
            terms: self.unit_poly().map_keys(|(a, w)| Mono { alpha: a.clone(), word: w.clone(), perm: id.clone() }),
        }
    }

    /// (g)_k · 𝐜 for a pure word 𝐜: slot k becomes g c_k, sign (−1)^{ḡ Σ_{l<k} c̄_l}.
    fn left_slot_word(&self, k: usize, g: usize, w: &Word) -> Vec<(Word, CycScalar)> {
        let f = self.f();
        let flips = f.parity(g) == 1 && w[..k].iter().filter(|&&b| odd(f, b)).count() % 2 == 1;
        f.mul_basis(g, w[k] as usize)
            .iter()
            .map(|(r, c)| {
                let mut w2 = w.clone();
                w2[k] = *r as u16;
                (w2, if flips { -c } else { c.clone() })
            })
            .collect()
    }

    /// 𝐞 · (h)_k for a pure word 𝐞: slot k becomes e_k h, sign (−1)^{h̄ Σ_{l>k} ē_l}.
    fn right_slot_word(&self, k: usize, h: usize, w: &Word) -> Vec<(Word, CycScalar)> {
        let f = self.f();
        let flips = f.parity(h) == 1 && w[k + 1..].iter().filter(|&&b| odd(f, b)).count() % 2 == 1;
        f.mul_basis(w[k] as usize, h)
            .iter()
            .map(|(r, c)| {
                let mut w2 = w.clone();
                w2[k] = *r as u16;
                (w2, if flips { -c } else { c.clone() })
            })
            .collect()
    }

    /// (g)_k · x^γ𝐜 = x^γ ψ^{γ_k}(g)_k 𝐜, for g a combination of basis elements.
    fn left_slot(&self, k: usize, g: &AlgElem, p: &Poly) -> Poly {
        let mut out = Poly::new();
        for ((gamma, w), c) in p.iter() {
            let tw = self.f().psi_pow(gamma[k] as i64, g);
            for (b, x) in tw.0.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (w2, y) in self.left_slot_word(k, b, w) {
                    out.add_term((gamma.clone(), w2), &(c * x) * &y);
                }
            }
        }
        out
    }

    /// p · 𝐛 for a pure word 𝐛 = (b_1)_1 ⋯ (b_n)_n.
    fn right_word(&self, p: &Poly, b: &Word) -> Poly {
        let mut cur = p.clone();
        for k in 0..self.n() {
            let mut next = Poly::new();
            for ((gamma, w), c) in cur.iter() {
                for (w2, y) in self.right_slot_word(k, b[k] as usize, w) {
                    next.add_term((gamma.clone(), w2), c * &y);
                }
            }
            cur = next;
        }
        cur
    }

    /// Product in P_n(F): x^α𝐞 · x^β𝐜 = x^{α+β} ψ^β(𝐞) 𝐜, with ψ^β(𝐞) built slot by slot.
    fn pmul(&self, a: &Poly, b: &Poly) -> Poly {
        let f = self.f();
        let mut out = Poly::new();
        for ((al, e), ca) in a.iter() {
            for ((be, cw), cb) in b.iter() {
                let mut twisted: Poly = LinComb::single((vec![0; self.n()], vec![]), ca * cb);
                for k in 0..self.n() {
                    let img = f.psi_basis(be[k] as i64, e[k] as usize);
                    let mut next = Poly::new();
                    for ((z, w), c) in twisted.iter() {
                        for (r, x) in img {
                            let mut w2 = w.clone();
                            w2.push(*r as u16);
                            next.add_term((z.clone(), w2), c * x);
                        }
                    }
                    twisted = next;
                }
                let sum: Exps = al.iter().zip(be).map(|(x, y)| x + y).collect();
                for ((_, w), c) in self.right_word(&twisted, cw).iter() {
                    out.add_term((sum.clone(), w.clone()), c.clone());
                }
            }
        }
        out
    }

    /// ^{s_i} on P_n(F), 0-based i: swap slots i, i+1 with a sign for two odd factors.
    fn swap(&self, i: usize, p: &Poly) -> Poly {
        let f = self.f();
        let mut out = Poly::new();
        for ((a, w), c) in p.iter() {
            let mut a2 = a.clone();
            a2.swap(i, i + 1);
            let mut w2 = w.clone();
            w2.swap(i, i + 1);
            let neg = odd(f, w[i]) && odd(f, w[i + 1]);
            out.add_term((a2, w2), if neg { -c } else { c.clone() });
        }
        out
    }

    /// t_{i,j} = Σ_b b_i b_j^∨ (0-based), no x's.
    fn t(&self, i: usize, j: usize) -> Poly {
        let f = self.f();
        let d = f.dim();
        let mut out = Poly::new();
        for b in 0..d {
            let left = self.left_slot(i, &AlgElem::basis(d, b), &self.unit_poly());
            let dual = AlgElem::from_fvec(d, f.dual_basis_elem(b));
            for (r, x) in dual.0.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for ((g, w), c) in left.iter() {
                    for (w2, y) in self.right_slot_word(j, r, w) {
                        out.add_term((g.clone(), w2), &(c * x) * &y);
                    }
                }
            }
        }
        out
    }

    fn x_poly(&self, alpha: &[u32]) -> Poly {
        self.unit_poly().map_keys(|(_, w)| (alpha.to_vec(), w.clone()))
    }

    /// Δ_i(x^α) by peeling the first x: Δ(x_j a') = Δ(x_j) a' + x_{s_i(j)} Δ(a').
    fn delta_x(&self, i: usize, alpha: &Exps) -> Poly {
        if let Some(v) = self.delta_memo.lock().unwrap().get(&(i, alpha.clone())) {
            return v.clone();
        }
        let out = match alpha.iter().position(|&e| e > 0) {
            None => Poly::new(),
            Some(j) => {
                let mut rest = alpha.clone();
                rest[j] -= 1;
                let dj = if j == i {
                    self.t(i, i + 1)
                } else if j == i + 1 {
                    self.t(i + 1, i).neg()
                } else {
                    Poly::new()
                };
                let mut out = self.pmul(&dj, &self.x_poly(&rest));
                let sj = if j == i {
                    i + 1
                } else if j == i + 1 {
                    i
                } else {
                    j
                };
                let d_rest = self.delta_x(i, &rest);
                for ((g, w), c) in d_rest.iter() {
                    let mut g2 = g.clone();
                    g2[sj] += 1;
                    out.add_term((g2, w.clone()), c.clone());
                }
                out
            }
        };
        self.delta_memo.lock().unwrap().insert((i, alpha.clone()), out.clone());
        out
    }

    /// Δ_i(x^α𝐛) = Δ_i(x^α) 𝐛.
    fn delta(&self, i: usize, p: &Poly) -> Poly {
        let mut out = Poly::new();
        for ((a, w), c) in p.iter() {
            out.add_scaled(&self.right_word(&self.delta_x(i, a), w), c);
        }
        out
    }

    fn group_by_perm(v: &PolyModElem) -> Vec<(Perm, Poly)> {
        let mut m: std::collections::BTreeMap<Perm, Poly> = Default::default();
        for (k, c) in v.terms.iter() {
            m.entry(k.perm.clone()).or_default().add_term((k.alpha.clone(), k.word.clone()), c.clone());
        }
        m.into_iter().collect()
    }

    fn assemble(&self, parts: Vec<(Perm, Poly)>) -> PolyModElem {
        let mut terms = LinComb::new();
        for (w, p) in parts {
            for ((a, b), c) in p.iter() {
                terms.add_term(Mono { alpha: a.clone(), word: b.clone(), perm: w.clone() }, c.clone());
            }
        }
        PolyModElem { n: self.n(), terms }
    }

    /// s_i · (a ⊗ w) = ^{s_i}a ⊗ s_i w − Δ_i(a) ⊗ w; 1-based i.
    pub fn act_s(&self, i: usize, v: &PolyModElem) -> PolyModElem {
        let si = Perm::simple(self.n(), i);
        let mut parts = Vec::new();
        for (w, p) in Self::group_by_perm(v) {
            parts.push((si.compose(&w), self.swap(i - 1, &p)));
            parts.push((w, self.delta(i - 1, &p).neg()));
        }
        self.assemble(parts)
    }

    pub fn act_x(&self, alpha: &[u32], v: &PolyModElem) -> PolyModElem {
        let mut terms = LinComb::new();
        for (k, c) in v.terms.iter() {
            let a: Exps = k.alpha.iter().zip(alpha).map(|(x, y)| x + y).collect();
            terms.add_term(Mono { alpha: a, word: k.word.clone(), perm: k.perm.clone() }, c.clone());
        }
        PolyModElem { n: self.n(), terms }
    }

    /// (g)_k · v, 0-based slot.
    pub fn act_slot(&self, k: usize, g: &AlgElem, v: &PolyModElem) -> PolyModElem {
        let parts = Self::group_by_perm(v).into_iter().map(|(w, p)| (w, self.left_slot(k, g, &p))).collect();
        self.assemble(parts)
    }

    pub fn act_mono(&self, m: &Mono, v: &PolyModElem) -> PolyModElem {
        let mut cur = v.clone();
        for &i in m.perm.reduced_word().iter().rev() {
            cur = self.act_s(i, &cur);
        }
        let d = self.f().dim();
        for k in (0..self.n()).rev() {
            cur = self.act_slot(k, &AlgElem::basis(d, m.word[k] as usize), &cur);
        }
        self.act_x(&m.alpha, &cur)
    }

    pub fn act(&self, a: &AwpaElem, v: &PolyModElem) -> Result<PolyModElem> {
        self.alg.check(a)?;
        if v.n != self.n() {
            return Err(Error::SizeMismatch(v.n, self.n()));
        }
        let mut terms = LinComb::new();
        for (m, c) in a.terms().iter() {
            terms.add_scaled(&self.act_mono(m, v).terms, c);
        }
        Ok(PolyModElem { n: self.n(), terms })
    }

    /// a · (1 ⊗ 1), read back as an element of 𝒜ₙ(F).
    pub fn image(&self, a: &AwpaElem) -> Result<AwpaElem> {
        let v = self.act(a, &self.generator())?;
        Ok(self.alg.elem(v.terms))
    }

    /// (ab)·(1⊗1) computed as a·(b·(1⊗1)).
    pub fn product(&self, a: &AwpaElem, b: &AwpaElem) -> Result<AwpaElem> {
        let v = self.act(b, &self.generator())?;
        Ok(self.alg.elem(self.act(a, &v)?.terms))
    }
}
