//! Normal-form arithmetic in 𝒜ₙ(F).
//!
//! Every element is a combination of monomials `x^α 𝐛 π`. Products are computed by
//! pushing π rightward through x^β with `s_i a = ^{s_i}a s_i − Δ_i(a)` and then moving
//! the basis word leftward past x-powers with `𝐟 x_i = x_i ψ_i(𝐟)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::frobenius::{AlgElem, FrobAlg};
use crate::lincomb::LinComb;
use crate::perm::Perm;
use crate::scalar::{root_of_unity, CycScalar};
use crate::tensor::{mul_words, psi_word, superpermute_word, word_degree, word_parity, TensorElem, Word};

pub type Exps = Vec<u32>;

/// Normal-form monomial x^α 𝐛 π.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub alpha: Exps,
    pub word: Word,
    pub perm: Perm,
}

/// Element of P_n(F): combination of x^α 𝐛.
pub type PElem = LinComb<(Exps, Word)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AwpaElem {
    n: usize,
    alg: usize,
    terms: LinComb<Mono>,
}

impl AwpaElem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &LinComb<Mono> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> Option<&CycScalar> {
        self.terms.get(m)
    }

    fn same_parent(&self, o: &AwpaElem) {
        assert!(self.n == o.n && self.alg == o.alg, "elements of different algebras");
    }

    /// Panics if the operands come from different algebras.
    pub fn add(&self, o: &AwpaElem) -> AwpaElem {
        self.same_parent(o);
        let mut t = self.terms.clone();
        t.add(&o.terms);
        AwpaElem { terms: t, ..self.shell() }
    }

    /// Panics if the operands come from different algebras.
    pub fn sub(&self, o: &AwpaElem) -> AwpaElem {
        self.same_parent(o);
        let mut t = self.terms.clone();
        t.sub(&o.terms);
        AwpaElem { terms: t, ..self.shell() }
    }

    pub fn neg(&self) -> AwpaElem {
        AwpaElem { terms: self.terms.neg(), ..self.shell() }
    }

    pub fn scale(&self, s: &CycScalar) -> AwpaElem {
        AwpaElem { terms: self.terms.scaled(s), ..self.shell() }
    }

    fn shell(&self) -> AwpaElem {
        AwpaElem { n: self.n, alg: self.alg, terms: LinComb::new() }
    }

    pub fn with_terms(&self, terms: LinComb<Mono>) -> AwpaElem {
        AwpaElem { terms, ..self.shell() }
    }

    /// Whether every monomial has π = id.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.perm.is_identity())
    }

    /// Maximal polynomial degree |α| over the support, or None for 0.
    pub fn poly_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.alpha.iter().sum()).max()
    }

    /// Component of polynomial degree exactly d.
    pub fn poly_component(&self, d: u32) -> AwpaElem {
        self.with_terms(LinComb::from_terms(
            self.terms.iter().filter(|(m, _)| m.alpha.iter().sum::<u32>() == d).map(|(m, c)| (m.clone(), c.clone())),
        ))
    }
}

/// The algebra 𝒜ₙ(F) for fixed F and n, with caches for the rewriting engine.
pub struct Awpa {
    f: Arc<FrobAlg>,
    n: usize,
    one_t: LinComb<Word>,
    t_cache: Mutex<HashMap<(usize, usize, u32), Arc<PElem>>>,
    d_cache: Mutex<HashMap<(usize, u32, u32), Arc<PElem>>>,
    act_cache: Mutex<HashMap<(Perm, Exps), Arc<LinComb<Mono>>>>,
}

impl fmt::Debug for Awpa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Awpa({}, n = {})", self.f.name, self.n)
    }
}

impl Awpa {
    pub fn new(f: Arc<FrobAlg>, n: usize) -> Awpa {
        let one_t = TensorElem::one(&f, n).lc;
        Awpa {
            f,
            n,
            one_t,
            t_cache: Mutex::new(HashMap::new()),
            d_cache: Mutex::new(HashMap::new()),
            act_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &FrobAlg {
        &self.f
    }

    pub fn algebra_arc(&self) -> Arc<FrobAlg> {
        self.f.clone()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn alg_id(&self) -> usize {
        Arc::as_ptr(&self.f) as usize
    }

    fn one_s(&self) -> CycScalar {
        self.f.one_scalar()
    }

    pub fn check(&self, a: &AwpaElem) -> Result<()> {
        if a.n != self.n {
            return Err(Error::SizeMismatch(a.n, self.n));
        }
        if a.alg != self.alg_id() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn elem(&self, terms: LinComb<Mono>) -> AwpaElem {
        AwpaElem { n: self.n, alg: self.alg_id(), terms }
    }

    pub fn zero(&self) -> AwpaElem {
        self.elem(LinComb::new())
    }

    pub fn scalar(&self, c: CycScalar) -> AwpaElem {
        let id = Perm::identity(self.n);
        let z = vec![0; self.n];
        self.elem(self.one_t.scaled(&c).map_keys(|w| Mono { alpha: z.clone(), word: w.clone(), perm: id.clone() }))
    }

    pub fn one(&self) -> AwpaElem {
        self.scalar(self.one_s())
    }

    pub fn from_int(&self, v: i64) -> AwpaElem {
        self.scalar(CycScalar::from_int(v).embed(self.f.conductor()))
    }

    /// Monomial with coefficient 1, taken verbatim as a normal-form key.
    pub fn mono(&self, m: Mono) -> Result<AwpaElem> {
        if m.alpha.len() != self.n || m.word.len() != self.n || m.perm.n() != self.n {
            return Err(Error::SizeMismatch(m.alpha.len(), self.n));
        }
        if m.word.iter().any(|&b| b as usize >= self.f.dim()) {
            return Err(Error::IndexError(format!("basis index in {:?}", m.word)));
        }
        Ok(self.elem(LinComb::single(m, self.one_s())))
    }

    fn idx(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::IndexError(format!("index {} outside 1..={}", i, self.n)));
        }
        Ok(())
    }

    /// x_i^k (1-based i).
    pub fn x_pow(&self, i: usize, k: u32) -> Result<AwpaElem> {
        self.idx(i)?;
        let mut alpha = vec![0; self.n];
        alpha[i - 1] = k;
        Ok(self.poly(&self.one_t.map_keys(|w| (alpha.clone(), w.clone()))))
    }

    pub fn x(&self, i: usize) -> Result<AwpaElem> {
        self.x_pow(i, 1)
    }

    /// Simple transposition s_i (1-based, 1 ≤ i < n).
    pub fn s(&self, i: usize) -> Result<AwpaElem> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexError(format!("s_{} needs 1 <= i < {}", i, self.n)));
        }
        self.perm(&Perm::simple(self.n, i))
    }

    pub fn perm(&self, p: &Perm) -> Result<AwpaElem> {
        if p.n() != self.n {
            return Err(Error::SizeMismatch(p.n(), self.n));
        }
        let z = vec![0; self.n];
        Ok(self.elem(self.one_t.map_keys(|w| Mono { alpha: z.clone(), word: w.clone(), perm: p.clone() })))
    }

    /// f_i (1-based slot).
    pub fn slot(&self, i: usize, e: &AlgElem) -> Result<AwpaElem> {
        self.idx(i)?;
        if e.0.len() != self.f.dim() {
            return Err(Error::AlgebraMismatch);
        }
        self.tensor(&TensorElem::slot(&self.f, self.n, i - 1, e))
    }

    /// (b_k)_i for the k-th basis element.
    pub fn basis_slot(&self, i: usize, k: usize) -> Result<AwpaElem> {
        self.slot(i, &AlgElem::basis(self.f.dim(), k))
    }

    pub fn tensor(&self, t: &TensorElem) -> Result<AwpaElem> {
        if t.n != self.n {
            return Err(Error::SizeMismatch(t.n, self.n));
        }
        let z = vec![0; self.n];
        Ok(self.poly(&t.lc.map_keys(|w| (z.clone(), w.clone()))))
    }

    pub fn word(&self, w: Word) -> Result<AwpaElem> {
        self.mono(Mono { alpha: vec![0; self.n], word: w, perm: Perm::identity(self.n) })
    }

    /// Embed an element of P_n(F).
    pub fn poly(&self, p: &PElem) -> AwpaElem {
        let id = Perm::identity(self.n);
        self.elem(p.map_keys(|(a, w)| Mono { alpha: a.clone(), word: w.clone(), perm: id.clone() }))
    }

    /// The P_n(F) part of an element whose monomials all have π = id.
    pub fn to_poly(&self, a: &AwpaElem) -> Result<PElem> {
        self.check(a)?;
        if !a.is_polynomial() {
            return Err(Error::NotPolynomial);
        }
        Ok(a.terms.map_keys(|m| (m.alpha.clone(), m.word.clone())))
    }

    fn is_one_word(&self, w: &[u16]) -> bool {
        match self.f.unit_index() {
            Some(u) => w.iter().all(|&b| b as usize == u),
            None => false,
        }
    }

    // ---- P_n(F) arithmetic ----

    /// (x^α 𝐛)(x^β 𝐜) = x^{α+β} ψ^β(𝐛) 𝐜.
    pub fn pmul(&self, a: &PElem, b: &PElem) -> PElem {
        let mut out = PElem::new();
        for ((al, bw), ca) in a.iter() {
            for ((be, cw), cb) in b.iter() {
                let exps: Vec<i64> = be.iter().map(|&e| e as i64).collect();
                let alpha: Exps = al.iter().zip(be).map(|(x, y)| x + y).collect();
                let cab = ca * cb;
                for (pw, pc) in psi_word(&self.f, &exps, bw) {
                    let pc = &pc * &cab;
                    for (w, c) in mul_words(&self.f, &pw, cw) {
                        out.add_term((alpha.clone(), w), &c * &pc);
                    }
                }
            }
        }
        out
    }

    /// ^π a for a ∈ P_n(F): x-exponents and tensor factors are superpermuted together.
    pub fn psuperperm(&self, p: &Perm, a: &PElem) -> PElem {
        let mut out = PElem::new();
        for ((al, w), c) in a.iter() {
            let mut al2 = vec![0; self.n];
            for (i, &e) in al.iter().enumerate() {
                al2[p.at(i)] = e;
            }
            let (neg, w2) = superpermute_word(&self.f, p, w);
            out.add_term((al2, w2), if neg { -c } else { c.clone() });
        }
        out
    }

    /// x^γ as an element of P_n(F).
    fn x_mono_p(&self, gamma: &[u32]) -> PElem {
        self.one_t.map_keys(|w| (gamma.to_vec(), w.clone()))
    }

    /// t^{(k)}_{i,j} = Σ_b Σ_ℓ b_i x_i^{k−1−ℓ} x_j^ℓ b_j^∨ in P_n(F); 0-based i, j.
    pub fn t_poly(&self, i: usize, j: usize, k: u32) -> Arc<PElem> {
        if let Some(v) = self.t_cache.lock().unwrap().get(&(i, j, k)) {
            return v.clone();
        }
        let f = &*self.f;
        let mut out = PElem::new();
        for b in 0..f.dim() {
            let bv = AlgElem::from_fvec(f.dim(), f.dual_basis_elem(b));
            let right = TensorElem::slot(f, self.n, j, &bv);
            for l in 0..k {
                // b_i x_i^p x_j^l = x_i^p x_j^l ψ^p(b)_i
                let p = k - 1 - l;
                let mut alpha = vec![0; self.n];
                alpha[i] += p;
                alpha[j] += l;
                let pb = AlgElem::from_fvec(f.dim(), f.psi_basis(p as i64, b));
                let left = TensorElem::slot(f, self.n, i, &pb);
                let prod = left.mul(f, &right).expect("same size");
                for (w, c) in prod.lc.iter() {
                    out.add_term((alpha.clone(), w.clone()), c.clone());
                }
            }
        }
        let out = Arc::new(out);
        self.t_cache.lock().unwrap().insert((i, j, k), out.clone());
        out
    }

    /// Δ_i(x_i^a x_{i+1}^b) = t^{(a)}_{i,i+1} x_{i+1}^b − x_{i+1}^a t^{(b)}_{i+1,i}; 0-based i.
    fn delta_pair(&self, i: usize, a: u32, b: u32) -> Arc<PElem> {
        if let Some(v) = self.d_cache.lock().unwrap().get(&(i, a, b)) {
            return v.clone();
        }
        let mut out = PElem::new();
        if a > 0 {
            let mut g = vec![0; self.n];
            g[i + 1] = b;
            out.add(&self.pmul(&self.t_poly(i, i + 1, a), &self.x_mono_p(&g)));
        }
        if b > 0 {
            let mut g = vec![0; self.n];
            g[i + 1] = a;
            out.sub(&self.pmul(&self.x_mono_p(&g), &self.t_poly(i + 1, i, b)));
        }
        let out = Arc::new(out);
        self.d_cache.lock().unwrap().insert((i, a, b), out.clone());
        out
    }

    /// Δ_i(x^γ) with 0-based i.
    fn delta_x(&self, i: usize, gamma: &[u32]) -> PElem {
        let d = self.delta_pair(i, gamma[i], gamma[i + 1]);
        let mut rest = gamma.to_vec();
        rest[i] = 0;
        rest[i + 1] = 0;
        if rest.iter().all(|&e| e == 0) {
            return (*d).clone();
        }
        // the remaining x's are Δ_i-constants, fixed by s_i, and commute with everything in Δ_i(x^γ)'s x-part
        d.map_keys(|(al, w)| (al.iter().zip(&rest).map(|(x, y)| x + y).collect(), w.clone()))
    }

    /// Deformed divided difference Δ_i (1-based i) on P_n(F).
    pub fn divided_difference(&self, i: usize, a: &AwpaElem) -> Result<AwpaElem> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexError(format!("Δ_{} needs 1 <= i < {}", i, self.n)));
        }
        let p = self.to_poly(a)?;
        Ok(self.poly(&self.pdelta(i - 1, &p)))
    }

    /// Δ_i on P_n(F), 0-based i: Δ_i(x^α 𝐛) = Δ_i(x^α) 𝐛.
    pub fn pdelta(&self, i: usize, p: &PElem) -> PElem {
        let mut out = PElem::new();
        for ((al, w), c) in p.iter() {
            let d = self.delta_x(i, al);
            let zero = vec![0; self.n];
            let wb = PElem::single((zero, w.clone()), c.clone());
            out.add(&self.pmul(&d, &wb));
        }
        out
    }

    /// π · x^β as a combination of monomials x^γ 𝐝 τ.
    fn perm_act(&self, p: &Perm, beta: &[u32]) -> Arc<LinComb<Mono>> {
        let key = (p.clone(), beta.to_vec());
        if let Some(v) = self.act_cache.lock().unwrap().get(&key) {
            return v.clone();
        }
        let out = if p.is_identity() {
            self.one_t.map_keys(|w| Mono { alpha: beta.to_vec(), word: w.clone(), perm: p.clone() })
        } else {
            let i = (1..self.n).find(|&i| p.has_left_descent(i)).expect("nonidentity has a descent");
            let si = Perm::simple(self.n, i);
            let rest = si.compose(p);
            let prev = self.perm_act(&rest, beta);
            let mut out = LinComb::new();
            for (m, c) in prev.iter() {
                // s_i x^γ 𝐝 τ = x^{s_iγ} ^{s_i}𝐝 s_iτ − Δ_i(x^γ) 𝐝 τ
                let mut g2 = m.alpha.clone();
                g2.swap(i - 1, i);
                let (neg, w2) = superpermute_word(&self.f, &si, &m.word);
                out.add_term(Mono { alpha: g2, word: w2, perm: si.compose(&m.perm) }, if neg { -c } else { c.clone() });
                let d = self.delta_x(i - 1, &m.alpha);
                for ((eps, e), ce) in d.iter() {
                    let cc = -(ce * c);
                    for (w, cw) in mul_words(&self.f, e, &m.word) {
                        out.add_term(Mono { alpha: eps.clone(), word: w, perm: m.perm.clone() }, &cw * &cc);
                    }
                }
            }
            out
        };
        let out = Arc::new(out);
        self.act_cache.lock().unwrap().insert(key, out.clone());
        out
    }

    fn mul_mono_into(&self, a: &Mono, b: &Mono, coeff: &CycScalar, out: &mut LinComb<Mono>) {
        let act = self.perm_act(&a.perm, &b.alpha);
        for (g, c) in act.iter() {
            let (neg, pc) = superpermute_word(&self.f, &g.perm, &b.word);
            let c0 = if neg { -(c * coeff) } else { c * coeff };
            let dc: Vec<(Word, CycScalar)> =
                if self.is_one_word(&g.word) { vec![(pc, self.one_s())] } else { mul_words(&self.f, &g.word, &pc) };
            let exps: Vec<i64> = g.alpha.iter().map(|&e| e as i64).collect();
            let pb = psi_word(&self.f, &exps, &a.word);
            let alpha: Exps = a.alpha.iter().zip(&g.alpha).map(|(x, y)| x + y).collect();
            let perm = g.perm.compose(&b.perm);
            for (w1, c1) in &pb {
                let c01 = &c0 * c1;
                for (w2, c2) in &dc {
                    let c012 = &c01 * c2;
                    if self.is_one_word(w1) {
                        out.add_term(Mono { alpha: alpha.clone(), word: w2.clone(), perm: perm.clone() }, c012);
                        continue;
                    }
                    for (w, c3) in mul_words(&self.f, w1, w2) {
                        out.add_term(Mono { alpha: alpha.clone(), word: w, perm: perm.clone() }, &c3 * &c012);
                    }
                }
            }
        }
    }

    /// Normal-form product.
    pub fn mul(&self, a: &AwpaElem, b: &AwpaElem) -> Result<AwpaElem> {
        self.check(a)?;
        self.check(b)?;
        let mut out = LinComb::new();
        for (ma, ca) in a.terms.iter() {
            for (mb, cb) in b.terms.iter() {
                self.mul_mono_into(ma, mb, &(ca * cb), &mut out);
            }
        }
        Ok(self.elem(out))
    }

    pub fn mul_all(&self, fs: &[&AwpaElem]) -> Result<AwpaElem> {
        let mut acc = self.one();
        for f in fs {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, a: &AwpaElem, k: u32) -> Result<AwpaElem> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// ab − ba.
    pub fn commutator(&self, a: &AwpaElem, b: &AwpaElem) -> Result<AwpaElem> {
        Ok(self.mul(a, b)?.sub(&self.mul(b, a)?))
    }

    /// Super-commutator ab − (−1)^{āb̄} ba, extended bilinearly over parity components.
    pub fn supercommutator(&self, a: &AwpaElem, b: &AwpaElem) -> Result<AwpaElem> {
        let mut out = self.zero();
        for (pa, ea) in self.parity_split(a) {
            for (pb, eb) in self.parity_split(b) {
                let ab = self.mul(&ea, &eb)?;
                let ba = self.mul(&eb, &ea)?;
                out = if pa * pb == 1 { out.add(&ab).add(&ba) } else { out.add(&ab).sub(&ba) };
            }
        }
        Ok(out)
    }

    /// t^{(k)}_{i,j} (1-based i ≠ j, k ≥ 1).
    pub fn t_element(&self, i: usize, j: usize, k: u32) -> Result<AwpaElem> {
        self.idx(i)?;
        self.idx(j)?;
        if i == j || k == 0 {
            return Err(Error::IndexError(format!("t^({})_{{{},{}}} needs i != j and k >= 1", k, i, j)));
        }
        Ok(self.poly(&self.t_poly(i - 1, j - 1, k)))
    }

    // ---- grading ----

    pub fn mono_degree(&self, m: &Mono) -> u32 {
        self.f.delta() * m.alpha.iter().sum::<u32>() + word_degree(&self.f, &m.word)
    }

    pub fn mono_parity(&self, m: &Mono) -> u8 {
        word_parity(&self.f, &m.word)
    }

    /// Components indexed by (degree, parity).
    pub fn homogeneous_components(&self, a: &AwpaElem) -> BTreeMap<(u32, u8), AwpaElem> {
        let mut out: BTreeMap<(u32, u8), LinComb<Mono>> = BTreeMap::new();
        for (m, c) in a.terms.iter() {
            out.entry((self.mono_degree(m), self.mono_parity(m))).or_default().add_term(m.clone(), c.clone());
        }
        out.into_iter().map(|(k, v)| (k, a.with_terms(v))).collect()
    }

    pub fn parity_split(&self, a: &AwpaElem) -> Vec<(u8, AwpaElem)> {
        let mut parts = [LinComb::new(), LinComb::new()];
        for (m, c) in a.terms.iter() {
            parts[self.mono_parity(m) as usize].add_term(m.clone(), c.clone());
        }
        let [e, o] = parts;
        let mut out = Vec::new();
        if !e.is_zero() {
            out.push((0, a.with_terms(e)));
        }
        if !o.is_zero() {
            out.push((1, a.with_terms(o)));
        }
        out
    }

    /// (degree, parity) if homogeneous and nonzero.
    pub fn homogeneous_type(&self, a: &AwpaElem) -> Option<(u32, u8)> {
        let comps = self.homogeneous_components(a);
        if comps.len() == 1 {
            comps.keys().next().copied()
        } else {
            None
        }
    }

    // ---- text format ----

    fn format_mono(&self, m: &Mono) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, &e) in m.alpha.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", i + 1)),
                _ => parts.push(format!("x{}^{}", i + 1, e)),
            }
        }
        if !self.is_one_word(&m.word) {
            let labels: Vec<&str> = m.word.iter().map(|&b| self.f.label(b as usize)).collect();
            parts.push(format!("b({})", labels.join(",")));
        }
        if !m.perm.is_identity() {
            parts.push(format!("s{}", m.perm));
        }
        parts.join("*")
    }

    /// Terms in decreasing monomial order, e.g. `x2*s[2,1] - 1`.
    pub fn format(&self, a: &AwpaElem) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let m = self.f.conductor();
        let mut out = String::new();
        for (k, (mono, c)) in a.terms.iter().rev().enumerate() {
            let cs = c.format_in(m);
            let (neg, mag) = if !cs.contains(' ') && cs.starts_with('-') { (true, cs[1..].to_string()) } else { (false, cs) };
            let mag = if mag.contains(' ') { format!("({})", mag) } else { mag };
            let body = self.format_mono(&mono.clone());
            let term = match (body.is_empty(), mag == "1") {
                (true, _) => mag,
                (false, true) => body,
                (false, false) => format!("{}*{}", mag, body),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }

    /// Parse the text format. Factors: rationals, `z`, `z^k`, `x3`, `x3^2`, `s2`,
    /// `s[2,1,3]`, `perm[2,1,3]`, `b(l1,…,ln)`, and parenthesized subexpressions.
    pub fn parse(&self, s: &str) -> Result<AwpaElem> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut out = self.zero();
        for (neg, term) in split_terms(t)? {
            let v = self.parse_term(&term)?;
            out = if neg { out.sub(&v) } else { out.add(&v) };
        }
        Ok(out)
    }

    fn parse_term(&self, t: &str) -> Result<AwpaElem> {
        let mut acc = self.one();
        for fac in split_top(t, '*') {
            let v = self.parse_factor(fac.trim())?;
            acc = self.mul(&acc, &v)?;
        }
        Ok(acc)
    }

    fn parse_factor(&self, f: &str) -> Result<AwpaElem> {
        let bad = || Error::Parse(format!("bad factor '{}'", f));
        let m = self.f.conductor();
        if let Some(inner) = f.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
            return self.parse(inner);
        }
        if f == "z" {
            return Ok(self.scalar(root_of_unity(m, 1)));
        }
        if let Some(e) = f.strip_prefix("z^") {
            let k: i64 = e.parse().map_err(|_| bad())?;
            return Ok(self.scalar(root_of_unity(m, k)));
        }
        if f.starts_with(|c: char| c.is_ascii_digit()) {
            return Ok(self.scalar(CycScalar::parse(f, m)?));
        }
        if let Some(r) = f.strip_prefix('x') {
            let (i, e) = match r.split_once('^') {
                Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad())?),
                None => (r, 1),
            };
            let i: usize = i.parse().map_err(|_| bad())?;
            return self.x_pow(i, e);
        }
        if let Some(r) = f.strip_prefix("perm") {
            return self.perm(&Perm::parse(r)?);
        }
        if let Some(r) = f.strip_prefix('s') {
            if r.starts_with('[') {
                return self.perm(&Perm::parse(r)?);
            }
            let i: usize = r.parse().map_err(|_| bad())?;
            return self.s(i);
        }
        if let Some(inner) = f.strip_prefix("b(").and_then(|x| x.strip_suffix(')')) {
            let labels: Vec<&str> = if inner.trim().is_empty() { vec![] } else { inner.split(',').map(|x| x.trim()).collect() };
            let w: Result<Word> = labels
                .iter()
                .map(|l| self.f.index_of(l).map(|x| x as u16).ok_or_else(|| Error::Parse(format!("unknown basis label '{}'", l))))
                .collect();
            let w = w?;
            if w.len() != self.n {
                return Err(Error::SizeMismatch(w.len(), self.n));
            }
            return self.word(w);
        }
        Err(bad())
    }
}

/// Split at top-level `sep` (outside brackets).
pub(crate) fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Split a sum into signed terms at top-level `+`/`-`.
pub(crate) fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    let mut prev_sig: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && prev_sig != Some('^') {
            if !cur.trim().is_empty() {
                out.push((neg, cur.trim().to_string()));
            } else if prev_sig.is_some() && prev_sig != Some('+') && prev_sig != Some('-') {
                return Err(Error::Parse(format!("bad sum '{}'", s)));
            }
            if cur.trim().is_empty() && matches!(prev_sig, Some('+') | Some('-')) {
                neg ^= ch == '-';
            } else {
                neg = ch == '-';
            }
            cur.clear();
            prev_sig = Some(ch);
            continue;
        }
        if !ch.is_whitespace() {
            prev_sig = Some(ch);
        }
        cur.push(ch);
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in '{}'", s)));
    }
    if cur.trim().is_empty() {
        return Err(Error::Parse(format!("dangling operator in '{}'", s)));
    }
    out.push((neg, cur.trim().to_string()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{clifford, cyclic_group, dual_numbers, trivial};

    fn alg(f: FrobAlg, n: usize) -> Awpa {
        Awpa::new(Arc::new(f), n)
    }

    #[test]
    fn s1_x1_in_degenerate_affine_hecke() {
        let a = alg(trivial(), 2);
        let p = a.mul(&a.s(1).unwrap(), &a.x(1).unwrap()).unwrap();
        let expect = a.mul(&a.x(2).unwrap(), &a.s(1).unwrap()).unwrap().sub(&a.one());
        assert_eq!(p, expect);
        assert_eq!(a.format(&p), "x2*s[2,1] - 1");
    }

    #[test]
    fn s1_x1_in_affine_sergeev() {
        let a = alg(clifford(), 2);
        let p = a.mul(&a.s(1).unwrap(), &a.x(1).unwrap()).unwrap();
        let c1c2 = a.word(vec![1, 1]).unwrap();
        let expect = a.mul(&a.x(2).unwrap(), &a.s(1).unwrap()).unwrap().sub(&a.one()).sub(&c1c2);
        assert_eq!(p, expect);
    }

    #[test]
    fn x1_x2_is_a_single_monomial() {
        let a = alg(cyclic_group(2).unwrap(), 2);
        let p = a.mul(&a.x(1).unwrap(), &a.x(2).unwrap()).unwrap();
        let m = Mono { alpha: vec![1, 1], word: vec![0, 0], perm: Perm::identity(2) };
        assert_eq!(p, a.mono(m).unwrap());
    }

    #[test]
    fn t_for_dual_numbers_is_z_i_plus_z_j() {
        let a = alg(dual_numbers(), 2);
        let t = a.t_element(1, 2, 1).unwrap();
        let expect = a.word(vec![1, 0]).unwrap().add(&a.word(vec![0, 1]).unwrap());
        assert_eq!(t, expect);
    }

    #[test]
    fn t_for_trivial_is_complete_homogeneous() {
        let a = alg(trivial(), 2);
        for k in 1..5u32 {
            let mut expect = a.zero();
            for l in 0..k {
                let m = a.mul(&a.x_pow(1, k - 1 - l).unwrap(), &a.x_pow(2, l).unwrap()).unwrap();
                expect = expect.add(&m);
            }
            assert_eq!(a.t_element(1, 2, k).unwrap(), expect);
        }
    }

    #[test]
    fn divided_difference_examples() {
        let a = alg(trivial(), 2);
        assert_eq!(a.divided_difference(1, &a.x(1).unwrap()).unwrap(), a.one());
        let c = alg(clifford(), 2);
        assert!(c.divided_difference(1, &c.word(vec![1, 1]).unwrap()).unwrap().is_zero());
        let p = c.mul(&c.x(1).unwrap(), &c.x_pow(2, 2).unwrap()).unwrap();
        let d = c.divided_difference(1, &p).unwrap();
        assert!(c.divided_difference(1, &d).unwrap().is_zero());
        assert_eq!(c.divided_difference(1, &c.s(1).unwrap()), Err(Error::NotPolynomial));
    }

    #[test]
    fn parse_round_trip() {
        let a = alg(clifford(), 2);
        for s in ["x2*s[2,1] - 1", "3/2*x1^2*b(c,1) - x2", "(1/2)*s1 + s[1,2]", "0"] {
            let e = if s == "0" { a.zero() } else { a.parse(s).unwrap() };
            assert_eq!(a.parse(&a.format(&e)).unwrap_or(a.zero()), e);
        }
        assert_eq!(a.parse("s1*x1").unwrap(), a.mul(&a.s(1).unwrap(), &a.x(1).unwrap()).unwrap());
        assert!(a.parse("x3").is_err());
        assert!(a.parse("x1 +").is_err());
    }

    #[test]
    fn n_zero_is_the_ground_field() {
        let a = alg(clifford(), 0);
        let two = a.from_int(2);
        assert_eq!(a.mul(&two, &two).unwrap(), a.from_int(4));
        assert_eq!(a.format(&two), "2");
    }
}
