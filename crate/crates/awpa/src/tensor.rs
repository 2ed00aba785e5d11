//! Tensor powers F^{⊗n} with Koszul signs and the wreath product F^{⊗n} ⋊ S_n.
//!
//! A basis word `w` stands for `b_{w[0]} ⊗ … ⊗ b_{w[n-1]}`. The product is
//! `(a_1⊗…⊗a_n)(b_1⊗…⊗b_n) = (-1)^{Σ_{k>l} ā_k b̄_l} a_1b_1 ⊗ … ⊗ a_nb_n`.

use crate::error::{Error, Result};
use crate::frobenius::{AlgElem, FVec, FrobAlg};
use crate::lincomb::LinComb;
use crate::perm::Perm;
use crate::scalar::CycScalar;

pub type Word = Vec<u16>;

pub fn word_parity(f: &FrobAlg, w: &[u16]) -> u8 {
    w.iter().map(|&b| f.parity(b as usize)).sum::<u8>() % 2
}

pub fn word_degree(f: &FrobAlg, w: &[u16]) -> u32 {
    w.iter().map(|&b| f.degree(b as usize)).sum()
}

/// Expand a product of per-slot sparse vectors into words.
pub fn expand_slots(slots: &[&FVec], scale: CycScalar) -> Vec<(Word, CycScalar)> {
    if slots.iter().any(|s| s.is_empty()) {
        return vec![];
    }
    if slots.iter().all(|s| s.len() == 1) {
        let mut c = scale;
        let w: Word = slots
            .iter()
            .map(|s| {
                if !s[0].1.is_one() {
                    c = &c * &s[0].1;
                }
                s[0].0 as u16
            })
            .collect();
        return vec![(w, c)];
    }
    let mut acc: Vec<(Word, CycScalar)> = vec![(Vec::with_capacity(slots.len()), scale)];
    for s in slots {
        let mut next = Vec::with_capacity(acc.len() * s.len());
        for (w, c) in &acc {
            for (b, x) in s.iter() {
                let mut w2 = w.clone();
                w2.push(*b as u16);
                next.push((w2, c * x));
            }
        }
        acc = next;
    }
    acc
}

/// Koszul sign exponent for multiplying word `a` by word `b`.
pub fn koszul_mul_sign(f: &FrobAlg, a: &[u16], b: &[u16]) -> bool {
    let mut odd_b_before = 0u32;
    let mut sign = 0u32;
    for k in 0..a.len() {
        if f.parity(a[k] as usize) == 1 {
            sign += odd_b_before;
        }
        if f.parity(b[k] as usize) == 1 {
            odd_b_before += 1;
        }
    }
    sign % 2 == 1
}

/// Product of two basis words, expanded.
pub fn mul_words(f: &FrobAlg, a: &[u16], b: &[u16]) -> Vec<(Word, CycScalar)> {
    let neg = koszul_mul_sign(f, a, b);
    let slots: Vec<&FVec> = a.iter().zip(b).map(|(&x, &y)| f.mul_basis(x as usize, y as usize)).collect();
    let s = if neg { -f.one_scalar() } else { f.one_scalar() };
    expand_slots(&slots, s)
}

/// Apply ψ^{e_k} to slot k.
pub fn psi_word(f: &FrobAlg, exps: &[i64], w: &[u16]) -> Vec<(Word, CycScalar)> {
    if exps.iter().all(|&e| e.rem_euclid(f.theta() as i64) == 0) {
        return vec![(w.to_vec(), f.one_scalar())];
    }
    let slots: Vec<&FVec> = w.iter().zip(exps).map(|(&b, &e)| f.psi_basis(e, b as usize)).collect();
    expand_slots(&slots, f.one_scalar())
}

/// ^π𝐰: the factor in slot i moves to slot π(i). Returns (negated, word).
pub fn superpermute_word(f: &FrobAlg, pi: &Perm, w: &[u16]) -> (bool, Word) {
    let n = w.len();
    let mut out = vec![0u16; n];
    let mut neg = false;
    for i in 0..n {
        out[pi.at(i)] = w[i];
        if f.parity(w[i] as usize) == 1 {
            for j in i + 1..n {
                if pi.at(i) > pi.at(j) && f.parity(w[j] as usize) == 1 {
                    neg = !neg;
                }
            }
        }
    }
    (neg, out)
}

/// Element of F^{⊗n}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElem {
    pub n: usize,
    pub lc: LinComb<Word>,
}

impl TensorElem {
    pub fn zero(n: usize) -> Self {
        TensorElem { n, lc: LinComb::new() }
    }

    pub fn word(f: &FrobAlg, w: Word) -> Self {
        TensorElem { n: w.len(), lc: LinComb::single(w, f.one_scalar()) }
    }

    pub fn one(f: &FrobAlg, n: usize) -> Self {
        let u = f.unit().to_fvec();
        let slots: Vec<&FVec> = (0..n).map(|_| &u).collect();
        TensorElem { n, lc: LinComb::from_terms(expand_slots(&slots, f.one_scalar())) }
    }

    /// f_i = 1 ⊗ … ⊗ f ⊗ … ⊗ 1 with f in slot i (0-based).
    pub fn slot(f: &FrobAlg, n: usize, i: usize, e: &AlgElem) -> Self {
        let u = f.unit().to_fvec();
        let fe = e.to_fvec();
        let slots: Vec<&FVec> = (0..n).map(|k| if k == i { &fe } else { &u }).collect();
        TensorElem { n, lc: LinComb::from_terms(expand_slots(&slots, f.one_scalar())) }
    }

    /// Pure tensor of elements, one per slot.
    pub fn pure(f: &FrobAlg, parts: &[AlgElem]) -> Self {
        let fv: Vec<FVec> = parts.iter().map(|p| p.to_fvec()).collect();
        let slots: Vec<&FVec> = fv.iter().collect();
        TensorElem { n: parts.len(), lc: LinComb::from_terms(expand_slots(&slots, f.one_scalar())) }
    }

    pub fn mul(&self, f: &FrobAlg, o: &TensorElem) -> Result<TensorElem> {
        if self.n != o.n {
            return Err(Error::SizeMismatch(self.n, o.n));
        }
        let mut out = LinComb::new();
        for (a, ca) in self.lc.iter() {
            for (b, cb) in o.lc.iter() {
                let cab = ca * cb;
                for (w, c) in mul_words(f, a, b) {
                    out.add_term(w, &c * &cab);
                }
            }
        }
        Ok(TensorElem { n: self.n, lc: out })
    }

    pub fn superpermute(&self, f: &FrobAlg, pi: &Perm) -> Result<TensorElem> {
        if pi.n() != self.n {
            return Err(Error::SizeMismatch(pi.n(), self.n));
        }
        let mut out = LinComb::new();
        for (w, c) in self.lc.iter() {
            let (neg, w2) = superpermute_word(f, pi, w);
            out.add_term(w2, if neg { -c } else { c.clone() });
        }
        Ok(TensorElem { n: self.n, lc: out })
    }

    /// Apply ψ^{e_k} in slot k.
    pub fn psi(&self, f: &FrobAlg, exps: &[i64]) -> TensorElem {
        let mut out = LinComb::new();
        for (w, c) in self.lc.iter() {
            for (w2, x) in psi_word(f, exps, w) {
                out.add_term(w2, &x * c);
            }
        }
        TensorElem { n: self.n, lc: out }
    }

    /// Apply a linear map of F (row-vector matrix) in every slot.
    pub fn map_slots(&self, f: &FrobAlg, map: &[FVec]) -> TensorElem {
        let mut out = LinComb::new();
        for (w, c) in self.lc.iter() {
            let slots: Vec<&FVec> = w.iter().map(|&b| &map[b as usize]).collect();
            for (w2, x) in expand_slots(&slots, c.clone()) {
                out.add_term(w2, x);
            }
        }
        let _ = f;
        TensorElem { n: self.n, lc: out }
    }

    pub fn add(&self, o: &TensorElem) -> TensorElem {
        let mut lc = self.lc.clone();
        lc.add(&o.lc);
        TensorElem { n: self.n, lc }
    }

    pub fn sub(&self, o: &TensorElem) -> TensorElem {
        let mut lc = self.lc.clone();
        lc.sub(&o.lc);
        TensorElem { n: self.n, lc }
    }

    pub fn scale(&self, s: &CycScalar) -> TensorElem {
        TensorElem { n: self.n, lc: self.lc.scaled(s) }
    }
}

/// Element of F^{⊗n} ⋊ S_n as a combination of (word, π) meaning 𝐰π.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathElem {
    pub n: usize,
    pub lc: LinComb<(Word, Perm)>,
}

impl WreathElem {
    pub fn zero(n: usize) -> Self {
        WreathElem { n, lc: LinComb::new() }
    }

    pub fn from_tensor(t: &TensorElem, pi: &Perm) -> Self {
        WreathElem { n: t.n, lc: t.lc.map_keys(|w| (w.clone(), pi.clone())) }
    }

    pub fn perm(f: &FrobAlg, pi: &Perm) -> Self {
        Self::from_tensor(&TensorElem::one(f, pi.n()), pi)
    }

    /// (𝐟π)(𝐠σ) = 𝐟·(^π𝐠) πσ.
    pub fn mul(&self, f: &FrobAlg, o: &WreathElem) -> Result<WreathElem> {
        if self.n != o.n {
            return Err(Error::SizeMismatch(self.n, o.n));
        }
        let mut out = LinComb::new();
        for ((a, pi), ca) in self.lc.iter() {
            for ((b, sigma), cb) in o.lc.iter() {
                let (neg, pb) = superpermute_word(f, pi, b);
                let mut cab = ca * cb;
                if neg {
                    cab = -cab;
                }
                let ps = pi.compose(sigma);
                for (w, c) in mul_words(f, a, &pb) {
                    out.add_term((w, ps.clone()), &c * &cab);
                }
            }
        }
        Ok(WreathElem { n: self.n, lc: out })
    }

    pub fn add(&self, o: &WreathElem) -> WreathElem {
        let mut lc = self.lc.clone();
        lc.add(&o.lc);
        WreathElem { n: self.n, lc }
    }

    pub fn sub(&self, o: &WreathElem) -> WreathElem {
        let mut lc = self.lc.clone();
        lc.sub(&o.lc);
        WreathElem { n: self.n, lc }
    }

    pub fn scale(&self, s: &CycScalar) -> WreathElem {
        WreathElem { n: self.n, lc: self.lc.scaled(s) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{clifford, cyclic_group, taft};

    fn cl_word(w: &[u16]) -> Word {
        w.to_vec()
    }

    #[test]
    fn s1_moves_even_factor() {
        let f = cyclic_group(2).unwrap();
        let s1 = Perm::simple(2, 1);
        assert_eq!(superpermute_word(&f, &s1, &[0, 1]), (false, vec![1, 0]));
    }

    #[test]
    fn s1_on_cc_is_negative() {
        let cl = clifford();
        let s1 = Perm::simple(2, 1);
        assert_eq!(superpermute_word(&cl, &s1, &cl_word(&[1, 1])), (true, vec![1, 1]));
    }

    /// (s₁s₂)·(f⊗g⊗h) computed via the two-step word action and via one-line composition.
    #[test]
    fn s1s2_action_brute_force() {
        let f = taft(3, 1).unwrap();
        let (a, b, c) = (1u16, 3u16, 4u16);
        let s1 = Perm::simple(3, 1);
        let s2 = Perm::simple(3, 2);
        let (_, step) = superpermute_word(&f, &s2, &[a, b, c]);
        let (_, two_step) = superpermute_word(&f, &s1, &step);
        let (_, direct) = superpermute_word(&f, &s1.compose(&s2), &[a, b, c]);
        assert_eq!(two_step, vec![c, a, b]);
        assert_eq!(direct, two_step);
    }

    #[test]
    fn superpermutation_is_word_independent_action() {
        let cl = clifford();
        let words: Vec<Word> = (0..16u16).map(|m| (0..4).map(|k| (m >> k) & 1).collect()).collect();
        for p in Perm::all(4) {
            for q in Perm::all(4) {
                for w in &words {
                    let t = TensorElem::word(&cl, w.clone());
                    let lhs = t.superpermute(&cl, &p.compose(&q)).unwrap();
                    let rhs = t.superpermute(&cl, &q).unwrap().superpermute(&cl, &p).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn superpermutation_is_multiplicative() {
        let cl = clifford();
        let words: Vec<Word> = (0..8u16).map(|m| (0..3).map(|k| (m >> k) & 1).collect()).collect();
        for p in Perm::all(3) {
            for a in &words {
                for b in &words {
                    let ta = TensorElem::word(&cl, a.clone());
                    let tb = TensorElem::word(&cl, b.clone());
                    let lhs = ta.mul(&cl, &tb).unwrap().superpermute(&cl, &p).unwrap();
                    let rhs = ta.superpermute(&cl, &p).unwrap().mul(&cl, &tb.superpermute(&cl, &p).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn wreath_relation_instance() {
        let f = cyclic_group(2).unwrap();
        let s1 = WreathElem::perm(&f, &Perm::simple(2, 1));
        let g1 = WreathElem::from_tensor(&TensorElem::word(&f, vec![1, 0]), &Perm::identity(2));
        let expect = WreathElem::from_tensor(&TensorElem::word(&f, vec![0, 1]), &Perm::simple(2, 1));
        assert_eq!(s1.mul(&f, &g1).unwrap(), expect);
    }

    #[test]
    fn clifford_slot_products() {
        let cl = clifford();
        let id = Perm::identity(2);
        let c1 = WreathElem::from_tensor(&TensorElem::word(&cl, vec![1, 0]), &id);
        let c2 = WreathElem::from_tensor(&TensorElem::word(&cl, vec![0, 1]), &id);
        let cc = WreathElem::from_tensor(&TensorElem::word(&cl, vec![1, 1]), &id);
        assert_eq!(c1.mul(&cl, &c2).unwrap(), cc);
        assert_eq!(c2.mul(&cl, &c1).unwrap(), cc.scale(&CycScalar::from_int(-1)));
    }

    #[test]
    fn wreath_associativity_exhaustive_basis_cl2() {
        let cl = clifford();
        let mut basis = Vec::new();
        for p in Perm::all(2) {
            for m in 0..4u16 {
                basis.push(WreathElem::from_tensor(&TensorElem::word(&cl, vec![m & 1, m >> 1]), &p));
            }
        }
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    let l = a.mul(&cl, b).unwrap().mul(&cl, c).unwrap();
                    let r = a.mul(&cl, &b.mul(&cl, c).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }
}
