//! Structure theory of 𝒜ₙ(F): Jucys–Murphy elements and the evaluation map, centers
//! and centralizers, intertwiners, automorphisms, graded dimensions, Mackey bookkeeping
//! and leading terms.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::awpa::{Awpa, AwpaElem, Exps, Mono, PElem};
use crate::error::{Error, Result};
use crate::frobenius::{check_frobenius_morphism, AlgElem, FVec, FrobAlg};
use crate::linalg::{self, Echelon, Matrix, SparseVec};
use crate::lincomb::LinComb;
use crate::perm::{factorial, min_double_cosets, young_order, Composition, Perm};
use crate::tensor::{mul_words, psi_word, superpermute_word, word_degree, word_parity, TensorElem, Word, WreathElem};

// ---- enumeration helpers ----

/// All α ∈ ℕⁿ with |α| ≤ max_total, in lexicographic order.
pub fn exponent_vectors(n: usize, max_total: u32) -> Vec<Exps> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Exps, out: &mut Vec<Exps>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, max_total, &mut cur, &mut out);
    out
}

/// All α with every entry < bound.
pub fn bounded_exponents(n: usize, bound: u32) -> Vec<Exps> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|a: Exps| (0..bound).map(move |e| [a.clone(), vec![e]].concat())).collect();
    }
    out
}

/// All basis words of length n.
pub fn all_words(n: usize, dim: usize) -> Vec<Word> {
    let mut out: Vec<Word> = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| (0..dim as u16).map(move |b| [w.clone(), vec![b]].concat())).collect();
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Coordinates of a family of elements on a shared monomial index.
pub fn coordinates(elems: &[AwpaElem]) -> Vec<SparseVec> {
    let mut index: BTreeMap<Mono, usize> = BTreeMap::new();
    for e in elems {
        for m in e.terms().keys() {
            let k = index.len();
            index.entry(m.clone()).or_insert(k);
        }
    }
    elems.iter().map(|e| e.terms().iter().map(|(m, c)| (index[m], c.clone())).collect()).collect()
}

/// Dimension of the span.
pub fn span_dim(elems: &[AwpaElem]) -> usize {
    let mut ech = Echelon::new();
    for v in coordinates(elems) {
        ech.insert(v);
    }
    ech.rank()
}

/// Whether two families span the same subspace.
pub fn same_subspace(a: &[AwpaElem], b: &[AwpaElem]) -> bool {
    let all: Vec<AwpaElem> = a.iter().chain(b).cloned().collect();
    let coords = coordinates(&all);
    linalg::same_span(&coords[..a.len()], &coords[a.len()..])
}

/// Whether `v` lies in the span of `family`.
pub fn in_span(family: &[AwpaElem], v: &AwpaElem) -> bool {
    let mut all = family.to_vec();
    all.push(v.clone());
    let coords = coordinates(&all);
    let mut ech = Echelon::new();
    for c in &coords[..family.len()] {
        ech.insert(c.clone());
    }
    ech.contains(&coords[family.len()])
}

// ---- Jucys–Murphy elements ----

/// t_{i,j} = Σ_b b_i b_j^∨ in F^{⊗n} (0-based slots).
pub fn t_tensor(f: &FrobAlg, n: usize, i: usize, j: usize) -> TensorElem {
    let mut out = TensorElem::zero(n);
    for b in 0..f.dim() {
        let bv = AlgElem::from_fvec(f.dim(), f.dual_basis_elem(b));
        let l = TensorElem::slot(f, n, i, &AlgElem::basis(f.dim(), b));
        let r = TensorElem::slot(f, n, j, &bv);
        out = out.add(&l.mul(f, &r).expect("same size"));
    }
    out
}

/// J_k = Σ_{i<k} t_{i,k} s_{i,k} in F^{⊗n} ⋊ S_n (1-based k).
pub fn jucys_murphy(a: &Awpa, k: usize) -> Result<WreathElem> {
    let n = a.n();
    if k == 0 || k > n {
        return Err(Error::IndexError(format!("J_{} needs 1 <= k <= {}", k, n)));
    }
    let f = a.algebra();
    let mut out = WreathElem::zero(n);
    for i in 1..k {
        let t = t_tensor(f, n, i - 1, k - 1);
        out = out.add(&WreathElem::from_tensor(&t, &Perm::transposition(n, i, k)));
    }
    Ok(out)
}

/// The surjection 𝒜ₙ(F) → F^{⊗n} ⋊ S_n with x_k ↦ J_k, identity on the wreath subalgebra.
pub struct Evaluation<'a> {
    alg: &'a Awpa,
    jm: Vec<WreathElem>,
    powers: HashMap<Exps, WreathElem>,
}

impl<'a> Evaluation<'a> {
    pub fn new(alg: &'a Awpa) -> Result<Self> {
        let jm = (1..=alg.n()).map(|k| jucys_murphy(alg, k)).collect::<Result<Vec<_>>>()?;
        Ok(Evaluation { alg, jm, powers: HashMap::new() })
    }

    pub fn jm(&self, k: usize) -> &WreathElem {
        &self.jm[k - 1]
    }

    fn j_power(&mut self, alpha: &[u32]) -> WreathElem {
        if let Some(v) = self.powers.get(alpha) {
            return v.clone();
        }
        let f = self.alg.algebra();
        let n = self.alg.n();
        let mut acc = WreathElem::perm(f, &Perm::identity(n));
        for (k, &e) in alpha.iter().enumerate() {
            for _ in 0..e {
                acc = acc.mul(f, &self.jm[k]).expect("same size");
            }
        }
        self.powers.insert(alpha.to_vec(), acc.clone());
        acc
    }

    pub fn apply(&mut self, e: &AwpaElem) -> Result<WreathElem> {
        self.alg.check(e)?;
        let f = self.alg.algebra();
        let n = self.alg.n();
        let mut out = WreathElem::zero(n);
        for (m, c) in e.terms().iter() {
            let j = self.j_power(&m.alpha);
            let bp = WreathElem { n, lc: LinComb::single((m.word.clone(), m.perm.clone()), c.clone()) };
            out = out.add(&j.mul(f, &bp)?);
        }
        Ok(out)
    }
}

/// One-shot evaluation.
pub fn evaluation_hom(a: &Awpa, e: &AwpaElem) -> Result<WreathElem> {
    Evaluation::new(a)?.apply(e)
}

/// Embed a wreath element into 𝒜ₙ(F).
pub fn from_wreath(a: &Awpa, w: &WreathElem) -> Result<AwpaElem> {
    if w.n != a.n() {
        return Err(Error::SizeMismatch(w.n, a.n()));
    }
    let z = vec![0; a.n()];
    Ok(a.elem(w.lc.map_keys(|(word, p)| Mono { alpha: z.clone(), word: word.clone(), perm: p.clone() })))
}

// ---- centers and centralizers ----

/// Named generators x_i, (b)_i, s_i.
pub fn generators(a: &Awpa) -> Result<Vec<(String, AwpaElem)>> {
    let mut out = pn_generators(a)?;
    for i in 1..a.n() {
        out.push((format!("s{}", i), a.s(i)?));
    }
    Ok(out)
}

/// Generators of P_n(F): x_i and (b)_i.
pub fn pn_generators(a: &Awpa) -> Result<Vec<(String, AwpaElem)>> {
    let f = a.algebra();
    let mut out = Vec::new();
    for i in 1..=a.n() {
        out.push((format!("x{}", i), a.x(i)?));
    }
    for i in 1..=a.n() {
        for b in 0..f.dim() {
            if f.unit_index() == Some(b) {
                continue;
            }
            out.push((format!("{}_{}", f.label(b), i), a.basis_slot(i, b)?));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralityCertificate {
    /// z super-commutes with every generator.
    pub commutes: bool,
    pub failing_generator: Option<String>,
    /// π = id, 𝐟_α ∈ 𝐅_ψ^{(−α)} and S_n-superinvariance.
    pub structural: bool,
    pub structural_failure: Option<String>,
}

/// Centrality in the super sense, with the structural cross-check.
pub fn is_central(a: &Awpa, z: &AwpaElem) -> Result<(bool, CentralityCertificate)> {
    a.check(z)?;
    let mut failing = None;
    for (name, g) in generators(a)? {
        if !a.supercommutator(&g, z)?.is_zero() {
            failing = Some(name);
            break;
        }
    }
    let structural = structural_center_check(a, z);
    let cert = CentralityCertificate {
        commutes: failing.is_none(),
        failing_generator: failing,
        structural: structural.is_ok(),
        structural_failure: structural.err(),
    };
    Ok((cert.commutes, cert))
}

/// Index of a word in the dense coordinate space of F^{⊗n}.
fn word_index(dim: usize, w: &[u16]) -> usize {
    w.iter().fold(0, |acc, &b| acc * dim + b as usize)
}

/// Basis of 𝐅_ψ^{(k_1,…,k_n)} = ⊗ F_ψ^{(k_i)}.
pub fn tensor_piece_basis(f: &FrobAlg, ks: &[i64]) -> Vec<TensorElem> {
    let pieces: Vec<Vec<AlgElem>> = ks.iter().map(|&k| f.graded_piece(k, true)).collect();
    let mut out: Vec<Vec<AlgElem>> = vec![vec![]];
    for p in &pieces {
        out = out.into_iter().flat_map(|acc| p.iter().map(move |e| [acc.clone(), vec![e.clone()]].concat())).collect();
    }
    out.iter().map(|parts| TensorElem::pure(f, parts)).filter(|t| !t.lc.is_zero()).collect()
}

/// Whether `t` lies in ⊗ F_ψ^{(k_i)}.
pub fn in_tensor_piece(f: &FrobAlg, ks: &[i64], t: &TensorElem) -> bool {
    let dim = f.dim();
    let to_vec = |t: &TensorElem| -> SparseVec { t.lc.iter().map(|(w, c)| (word_index(dim, w), c.clone())).collect() };
    let mut ech = Echelon::new();
    for b in tensor_piece_basis(f, ks) {
        ech.insert(to_vec(&b));
    }
    ech.contains(&to_vec(t))
}

fn structural_center_check(a: &Awpa, z: &AwpaElem) -> std::result::Result<(), String> {
    if !z.is_polynomial() {
        return Err("a monomial has nontrivial permutation".into());
    }
    let f = a.algebra();
    let n = a.n();
    let p = a.to_poly(z).map_err(|e| e.to_string())?;
    let mut by_alpha: BTreeMap<Exps, TensorElem> = BTreeMap::new();
    for ((al, w), c) in p.iter() {
        by_alpha.entry(al.clone()).or_insert_with(|| TensorElem::zero(n)).lc.add_term(w.clone(), c.clone());
    }
    for (al, t) in &by_alpha {
        let ks: Vec<i64> = al.iter().map(|&e| -(e as i64)).collect();
        if !in_tensor_piece(f, &ks, t) {
            return Err(format!("coefficient of x^{:?} is not in F_psi^(-alpha)", al));
        }
    }
    for i in 1..n {
        if a.psuperperm(&Perm::simple(n, i), &p) != p {
            return Err(format!("not invariant under s{}", i));
        }
    }
    Ok(())
}

/// Basis of all elements of polynomial degree ≤ D super-commuting with every generator.
pub fn centralizer_up_to_degree(a: &Awpa, gens: &[AwpaElem], d: u32) -> Result<Vec<AwpaElem>> {
    for g in gens {
        a.check(g)?;
    }
    let f = a.algebra();
    let n = a.n();
    let mut cands = Vec::new();
    for alpha in exponent_vectors(n, d) {
        for w in all_words(n, f.dim()) {
            for p in Perm::all(n) {
                cands.push(Mono { alpha: alpha.clone(), word: w.clone(), perm: p });
            }
        }
    }
    let mut index: HashMap<(usize, Mono), usize> = HashMap::new();
    let mut images = Vec::with_capacity(cands.len());
    for m in &cands {
        let e = a.mono(m.clone())?;
        let mut v = SparseVec::new();
        for (gi, g) in gens.iter().enumerate() {
            for (mm, c) in a.supercommutator(g, &e)?.terms().iter() {
                let k = index.len();
                let k = *index.entry((gi, mm.clone())).or_insert(k);
                v.insert(k, c.clone());
            }
        }
        images.push(v);
    }
    Ok(linalg::kernel_of_images(&images)
        .into_iter()
        .map(|v| a.elem(LinComb::from_terms(v.into_iter().map(|(j, c)| (cands[j].clone(), c)))))
        .collect())
}

/// Center truncated at polynomial degree D, by exhaustive solve.
pub fn center(a: &Awpa, d: u32) -> Result<Vec<AwpaElem>> {
    let gens: Vec<AwpaElem> = generators(a)?.into_iter().map(|(_, g)| g).collect();
    centralizer_up_to_degree(a, &gens, d)
}

/// Spanning set of ⊕_{|α|≤D} x^α 𝐅_ψ^{(−α)}.
pub fn expected_centralizer(a: &Awpa, d: u32) -> Vec<AwpaElem> {
    let f = a.algebra();
    let mut out = Vec::new();
    for alpha in exponent_vectors(a.n(), d) {
        let ks: Vec<i64> = alpha.iter().map(|&e| -(e as i64)).collect();
        for t in tensor_piece_basis(f, &ks) {
            out.push(a.poly(&t.lc.map_keys(|w| (alpha.clone(), w.clone()))));
        }
    }
    out
}

/// Spanning set of the S_n-superinvariants in ⊕_{|α|≤D} x^α 𝐅_ψ^{(−α)}.
pub fn expected_center(a: &Awpa, d: u32) -> Vec<AwpaElem> {
    let perms = Perm::all(a.n());
    expected_centralizer(a, d)
        .iter()
        .map(|e| {
            let p = a.to_poly(e).expect("polynomial");
            let mut sym = PElem::new();
            for pi in &perms {
                sym.add(&a.psuperperm(pi, &p));
            }
            a.poly(&sym)
        })
        .filter(|e| !e.is_zero())
        .collect()
}

/// k-th elementary symmetric polynomial in x_1^θ, …, x_n^θ.
pub fn elementary_in_theta_powers(a: &Awpa, k: usize) -> Result<AwpaElem> {
    let n = a.n();
    let th = a.algebra().theta();
    let mut out = a.zero();
    for subset in 0u32..(1 << n) {
        if subset.count_ones() as usize != k {
            continue;
        }
        let alpha: Exps = (0..n).map(|i| if subset >> i & 1 == 1 { th } else { 0 }).collect();
        let one = a.tensor(&TensorElem::one(a.algebra(), n))?;
        let p = a.to_poly(&one)?.map_keys(|(_, w)| (alpha.clone(), w.clone()));
        out = out.add(&a.poly(&p));
    }
    Ok(out)
}

// ---- intertwiners ----

/// Ω_i = x_{i+1}^θ s_i − s_i x_{i+1}^θ.
pub fn intertwiner(a: &Awpa, i: usize) -> Result<AwpaElem> {
    let s = a.s(i)?;
    let xp = a.x_pow(i + 1, a.algebra().theta())?;
    a.commutator(&xp, &s)
}

// ---- automorphisms ----

#[derive(Clone, Debug)]
pub enum AutKind {
    /// x_i ↦ x_{n+1−i}, f_i ↦ f_{n+1−i}, s_j ↦ −s_{n−j}.
    Reverse,
    /// Induced by a Frobenius automorphism ξ of F (rows: images of basis elements).
    FrobeniusInduced(Matrix),
    /// τ̂ into the opposite algebra, from a trace-preserving anti-automorphism τ.
    AntiTau(Matrix),
    /// x_i ↦ x_i u_i, landing in 𝒜ₙ(F′) where F′ has trace f ↦ tr(fu).
    TraceChange(AlgElem),
    /// x_i ↦ x_i + s_{i−1}⋯s_1 𝐜 s_1⋯s_{i−1} with 𝐜 ∈ 𝐅_1^{(1)}.
    Shift(TensorElem),
}

pub struct Automorphism<'a> {
    src: &'a Awpa,
    kind: AutKind,
    own_target: Option<Awpa>,
    x_img: Vec<AwpaElem>,
}

fn row_map(rows: &Matrix) -> Vec<FVec> {
    rows.iter().map(|r| linalg::dense_to_sparse(r).into_iter().collect()).collect()
}

impl<'a> Automorphism<'a> {
    pub fn new(src: &'a Awpa, kind: AutKind) -> Result<Self> {
        let f = src.algebra();
        let n = src.n();
        let bad = |s: String| Error::BadAutomorphismParams(s);
        let mut own_target = None;
        match &kind {
            AutKind::Reverse => {}
            AutKind::FrobeniusInduced(m) | AutKind::AntiTau(m) => {
                let anti = matches!(kind, AutKind::AntiTau(_));
                let v = check_frobenius_morphism(f, f, m, anti).map_err(|e| bad(e.to_string()))?;
                if !v.valid {
                    return Err(bad(v.failure.unwrap_or_else(|| "not a Frobenius morphism".into())));
                }
                if linalg::rank(m) != f.dim() {
                    return Err(bad("map is not bijective".into()));
                }
            }
            AutKind::TraceChange(u) => {
                if u.0.len() != f.dim() {
                    return Err(bad("u has wrong dimension".into()));
                }
                if u.0.iter().enumerate().any(|(i, c)| !c.is_zero() && f.parity(i) == 1) {
                    return Err(bad("u is not even".into()));
                }
                if left_inverse(f, u).is_none() {
                    return Err(bad("u is not invertible".into()));
                }
                let g = f.with_trace_twist(u).map_err(|e| bad(format!("twisted trace invalid: {}", e)))?;
                own_target = Some(Awpa::new(Arc::new(g), n));
            }
            AutKind::Shift(c) => validate_shift(f, n, c)?,
        }
        let mut me = Automorphism { src, kind, own_target, x_img: Vec::new() };
        me.x_img = (1..=n).map(|i| me.x_image(i)).collect::<Result<Vec<_>>>()?;
        Ok(me)
    }

    pub fn target(&self) -> &Awpa {
        self.own_target.as_ref().unwrap_or(self.src)
    }

    /// Whether the map reverses products (τ̂).
    pub fn is_anti(&self) -> bool {
        matches!(self.kind, AutKind::AntiTau(_))
    }

    fn x_image(&self, i: usize) -> Result<AwpaElem> {
        let t = self.target();
        let n = t.n();
        match &self.kind {
            AutKind::Reverse => t.x(n + 1 - i),
            AutKind::FrobeniusInduced(_) | AutKind::AntiTau(_) => t.x(i),
            AutKind::TraceChange(u) => t.mul(&t.x(i)?, &t.slot(i, u)?),
            AutKind::Shift(c) => {
                let w = Perm::from_word(n, &(1..i).rev().collect::<Vec<_>>());
                let ci = t.mul_all(&[&t.perm(&w)?, &t.tensor(c)?, &t.perm(&w.inverse())?])?;
                Ok(t.x(i)?.add(&ci))
            }
        }
    }

    fn word_image(&self, w: &Word) -> Result<AwpaElem> {
        let t = self.target();
        let f = self.src.algebra();
        let tw = TensorElem::word(f, w.clone());
        match &self.kind {
            AutKind::Reverse => t.tensor(&tw.superpermute(f, &Perm::longest(t.n()))?),
            AutKind::FrobeniusInduced(m) | AutKind::AntiTau(m) => t.tensor(&tw.map_slots(f, &row_map(m))),
            AutKind::TraceChange(_) | AutKind::Shift(_) => {
                t.mono(Mono { alpha: vec![0; t.n()], word: w.clone(), perm: Perm::identity(t.n()) })
            }
        }
    }

    fn perm_image(&self, p: &Perm) -> Result<AwpaElem> {
        let t = self.target();
        let n = t.n();
        match &self.kind {
            AutKind::Reverse => {
                let w0 = Perm::longest(n);
                let img = t.perm(&w0.compose(p).compose(&w0))?;
                Ok(if p.length() % 2 == 1 { img.neg() } else { img })
            }
            AutKind::AntiTau(_) => t.perm(&p.inverse()),
            _ => t.perm(p),
        }
    }

    pub fn apply(&self, a: &AwpaElem) -> Result<AwpaElem> {
        self.src.check(a)?;
        let t = self.target();
        let mut xcache: HashMap<Exps, AwpaElem> = HashMap::new();
        let mut out = t.zero();
        for (m, c) in a.terms().iter() {
            let xa = match xcache.get(&m.alpha) {
                Some(v) => v.clone(),
                None => {
                    let mut acc = t.one();
                    for (i, &e) in m.alpha.iter().enumerate() {
                        for _ in 0..e {
                            acc = t.mul(&acc, &self.x_img[i])?;
                        }
                    }
                    xcache.insert(m.alpha.clone(), acc.clone());
                    acc
                }
            };
            let w = self.word_image(&m.word)?;
            let p = self.perm_image(&m.perm)?;
            // τ̂(x^α𝐛π) = π⁻¹ τ^{⊗n}(𝐛) x^α
            let img = if self.is_anti() { t.mul_all(&[&p, &w, &xa])? } else { t.mul_all(&[&xa, &w, &p])? };
            out = out.add(&img.scale(c));
        }
        Ok(out)
    }
}

/// v with v u = 1, if any.
pub fn left_inverse(f: &FrobAlg, u: &AlgElem) -> Option<AlgElem> {
    let d = f.dim();
    // rows: b_i u
    let m: Matrix = (0..d).map(|i| f.mul_elems(&AlgElem::basis(d, i), u).0).collect();
    let inv = linalg::inverse(&m)?;
    let unit = f.unit();
    let mut v = AlgElem::zero(d);
    for (j, c) in unit.0.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for i in 0..d {
            v.0[i] += &(c * &inv[j][i]);
        }
    }
    (f.mul_elems(&v, u) == unit && f.mul_elems(u, &v) == unit).then_some(v)
}

fn validate_shift(f: &FrobAlg, n: usize, c: &TensorElem) -> Result<()> {
    let bad = |s: &str| Err(Error::BadAutomorphismParams(s.into()));
    if c.n != n {
        return bad("shift element has the wrong number of slots");
    }
    if n == 0 {
        return Ok(());
    }
    if c.lc.keys().any(|w| word_parity(f, w) == 1) {
        return bad("shift element is not even");
    }
    if c.lc.keys().any(|w| word_degree(f, w) != f.delta()) {
        return bad("shift element is not of degree delta");
    }
    let mut ks = vec![0i64; n];
    ks[0] = 1;
    if !in_tensor_piece(f, &ks, c) {
        return bad("shift element is not in F_psi^(1,0,...,0)");
    }
    for j in 2..n {
        if c.superpermute(f, &Perm::simple(n, j))? != *c {
            return bad("shift element is not invariant under the stabilizer of slot 1");
        }
    }
    Ok(())
}

// ---- graded dimension ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDimension {
    /// For δ = 0 the coefficients count monomials per polynomial-degree layer |α|.
    pub by_polynomial_layer: bool,
    pub coeffs: Vec<u128>,
}

/// Monomial counts by degree up to `cutoff`.
pub fn graded_dimension(a: &Awpa, cutoff: u32) -> GradedDimension {
    let f = a.algebra();
    let n = a.n();
    let delta = f.delta();
    let by_layer = delta == 0;
    let mut coeffs = vec![0u128; cutoff as usize + 1];
    let nfact = factorial(n);
    let max_layer = if by_layer { cutoff } else { cutoff / delta };
    let words = all_words(n, f.dim());
    for alpha in exponent_vectors(n, max_layer) {
        let layer: u32 = alpha.iter().sum();
        for w in &words {
            let deg = if by_layer { layer } else { delta * layer + word_degree(f, w) };
            if deg <= cutoff {
                coeffs[deg as usize] += nfact;
            }
        }
    }
    GradedDimension { by_polynomial_layer: by_layer, coeffs }
}

// ---- Mackey bookkeeping ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MackeyTerm {
    pub rep: Perm,
    pub mu_cap_pi_nu: Composition,
    pub pi_inv_mu_cap_nu: Composition,
    pub rank: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MackeyReport {
    pub lhs: u128,
    pub rhs: u128,
    pub terms: Vec<MackeyTerm>,
    /// Double-coset sizes recomputed from orders agree with enumeration.
    pub coset_sizes_ok: bool,
    pub phi_failures: Vec<String>,
    pub holds: bool,
}

/// Dimension identity for Res_μ Ind_ν of the regular module, truncated at
/// polynomial degree ≤ cutoff, plus the map φ_{π⁻¹} checked on generators.
pub fn mackey_dimension_report(a: &Awpa, mu: &[usize], nu: &[usize], cutoff: u32) -> Result<MackeyReport> {
    let n = a.n();
    if mu.iter().sum::<usize>() != n || nu.iter().sum::<usize>() != n {
        return Err(Error::BadComposition(format!("compositions must sum to {}", n)));
    }
    let cosets = min_double_cosets(mu, nu)?;
    let f = a.algebra();
    let p_dim = binomial(n as u64 + cutoff as u64, n as u64) * (f.dim() as u128).pow(n as u32);
    let lhs = factorial(n) * p_dim;
    let (smu, snu) = (young_order(mu), young_order(nu));
    let mut terms = Vec::new();
    let mut coset_sizes_ok = true;
    let mut phi_failures = Vec::new();
    for dc in &cosets {
        let cap = young_order(&dc.mu_cap_pi_nu);
        coset_sizes_ok &= smu * snu / cap == dc.size;
        terms.push(MackeyTerm {
            rep: dc.rep.clone(),
            mu_cap_pi_nu: dc.mu_cap_pi_nu.clone(),
            pi_inv_mu_cap_nu: dc.pi_inv_mu_cap_nu.clone(),
            rank: smu / cap * snu * p_dim,
        });
        phi_failures.extend(check_phi(a, &dc.rep, &dc.mu_cap_pi_nu)?);
    }
    let rhs = terms.iter().map(|t| t.rank).sum();
    let holds = lhs == rhs && coset_sizes_ok && phi_failures.is_empty();
    Ok(MackeyReport { lhs, rhs, terms, coset_sizes_ok, phi_failures, holds })
}

/// φ_{π⁻¹}: x_i ↦ x_{π⁻¹i}, f_i ↦ f_{π⁻¹i}, σ ↦ π⁻¹σπ on 𝒜_{μ∩πν}; returns failed relations.
fn check_phi(a: &Awpa, pi: &Perm, cap: &[usize]) -> Result<Vec<String>> {
    let n = a.n();
    let f = a.algebra();
    let pinv = pi.inverse();
    let j = |i: usize| pinv.at(i - 1) + 1;
    let mut fails = Vec::new();
    let mut start = 0;
    let mut simples = Vec::new();
    for &c in cap {
        simples.extend(start + 1..start + c);
        start += c;
    }
    for &i in &simples {
        let conj = pinv.compose(&Perm::simple(n, i)).compose(pi);
        if j(i) + 1 != j(i + 1) || conj != Perm::simple(n, j(i)) {
            fails.push(format!("pi^-1 s{} pi is not simple", i));
            continue;
        }
        let s = a.s(j(i))?;
        // s x_i = x_{i+1} s − t_{i,i+1}, with φ(t_{i,i+1}) = ^{π⁻¹}t_{i,i+1}
        let t = a.psuperperm(&pinv, &a.t_poly(i - 1, i, 1));
        let lhs = a.mul(&s, &a.x(j(i))?)?;
        let rhs = a.mul(&a.x(j(i + 1))?, &s)?.sub(&a.poly(&t));
        if lhs != rhs {
            fails.push(format!("phi breaks s{} x{} relation", i, i));
        }
        for k in 1..=n {
            if k == i || k == i + 1 {
                continue;
            }
            if !a.commutator(&s, &a.x(j(k))?)?.is_zero() {
                fails.push(format!("phi breaks s{} x{} commutation", i, k));
            }
        }
        for b in 0..f.dim() {
            let l = a.mul(&s, &a.basis_slot(j(i), b)?)?;
            let r = a.mul(&a.basis_slot(j(i + 1), b)?, &s)?;
            if l != r {
                fails.push(format!("phi breaks s{} f relation", i));
            }
        }
    }
    for k in 1..=n {
        for b in 0..f.dim() {
            let pb = AlgElem::from_fvec(f.dim(), f.psi_basis(1, b));
            let l = a.mul(&a.basis_slot(j(k), b)?, &a.x(j(k))?)?;
            let r = a.mul(&a.x(j(k))?, &a.slot(j(k), &pb)?)?;
            if l != r {
                fails.push(format!("phi breaks f x{} relation", k));
            }
        }
    }
    Ok(fails)
}

// ---- associated graded ----

/// Top polynomial-degree component, read in gr 𝒜ₙ(F) = (k[x] ⋉ F)^{⊗n} ⋊ S_n.
pub fn leading_term(a: &AwpaElem) -> Result<AwpaElem> {
    match a.poly_degree() {
        None => Err(Error::ZeroElement),
        Some(d) => Ok(a.poly_component(d)),
    }
}

/// Product in gr 𝒜ₙ(F): (x^α𝐛π)(x^β𝐜σ) = x^{α+π·β} ψ^{π·β}(𝐛) ^π𝐜 πσ.
pub fn gr_mul(a: &Awpa, u: &AwpaElem, v: &AwpaElem) -> Result<AwpaElem> {
    a.check(u)?;
    a.check(v)?;
    let f = a.algebra();
    let n = a.n();
    let mut out = LinComb::new();
    for (m1, c1) in u.terms().iter() {
        for (m2, c2) in v.terms().iter() {
            let mut pb = vec![0u32; n];
            for i in 0..n {
                pb[m1.perm.at(i)] = m2.alpha[i];
            }
            let exps: Vec<i64> = pb.iter().map(|&e| e as i64).collect();
            let alpha: Exps = m1.alpha.iter().zip(&pb).map(|(x, y)| x + y).collect();
            let (neg, pc) = superpermute_word(f, &m1.perm, &m2.word);
            let c = if neg { -(c1 * c2) } else { c1 * c2 };
            let perm = m1.perm.compose(&m2.perm);
            for (w1, x1) in psi_word(f, &exps, &m1.word) {
                for (w, x2) in mul_words(f, &w1, &pc) {
                    out.add_term(Mono { alpha: alpha.clone(), word: w, perm: perm.clone() }, &(&x1 * &x2) * &c);
                }
            }
        }
    }
    Ok(a.elem(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{clifford, desk_set, dual_numbers, trivial};
    use crate::scalar::CycScalar;

    fn alg(f: FrobAlg, n: usize) -> Awpa {
        Awpa::new(Arc::new(f), n)
    }

    #[test]
    fn jucys_murphy_examples() {
        let a = alg(trivial(), 3);
        assert_eq!(jucys_murphy(&a, 1).unwrap(), WreathElem::zero(3));
        let f = a.algebra();
        let expect = WreathElem::perm(f, &Perm::transposition(3, 1, 3)).add(&WreathElem::perm(f, &Perm::transposition(3, 2, 3)));
        assert_eq!(jucys_murphy(&a, 3).unwrap(), expect);

        let c = alg(clifford(), 2);
        let f = c.algebra();
        let s1 = Perm::simple(2, 1);
        let expect = WreathElem::perm(f, &s1).add(&WreathElem::from_tensor(&TensorElem::word(f, vec![1, 1]), &s1));
        assert_eq!(jucys_murphy(&c, 2).unwrap(), expect);
    }

    #[test]
    fn evaluation_respects_sx_relation() {
        let a = alg(clifford(), 2);
        let mut ev = Evaluation::new(&a).unwrap();
        assert_eq!(ev.apply(&a.x(1).unwrap()).unwrap(), WreathElem::zero(2));
        let lhs = a.mul(&a.s(1).unwrap(), &a.x(1).unwrap()).unwrap();
        let rhs = a.mul(&a.x(2).unwrap(), &a.s(1).unwrap()).unwrap().sub(&a.t_element(1, 2, 1).unwrap());
        assert_eq!(ev.apply(&lhs).unwrap(), ev.apply(&rhs).unwrap());
        let f = a.algebra();
        let l = ev.apply(&a.s(1).unwrap()).unwrap().mul(f, &ev.apply(&a.x(1).unwrap()).unwrap()).unwrap();
        assert_eq!(ev.apply(&lhs).unwrap(), l);
    }

    #[test]
    fn sergeev_center_examples() {
        let a = alg(clifford(), 2);
        let z = a.x_pow(1, 2).unwrap().add(&a.x_pow(2, 2).unwrap());
        let (ok, cert) = is_central(&a, &z).unwrap();
        assert!(ok && cert.structural);
        let y = a.x(1).unwrap().add(&a.x(2).unwrap());
        let (ok, cert) = is_central(&a, &y).unwrap();
        assert!(!ok && !cert.structural);
        let c = center(&a, 2).unwrap();
        let expect = vec![a.one(), z];
        assert!(same_subspace(&c, &expect));
        assert!(same_subspace(&c, &expected_center(&a, 2)));
    }

    #[test]
    fn theta_power_symmetric_polynomials_are_central() {
        for f in desk_set() {
            let a = alg(f, 2);
            for k in 1..=2 {
                let e = elementary_in_theta_powers(&a, k).unwrap();
                let (ok, cert) = is_central(&a, &e).unwrap();
                assert!(ok && cert.structural, "{:?} e{}", a, k);
            }
        }
    }

    #[test]
    fn centralizer_of_polynomials_in_degenerate_hecke() {
        let a = alg(trivial(), 2);
        let gens = vec![a.x(1).unwrap(), a.x(2).unwrap()];
        let c = centralizer_up_to_degree(&a, &gens, 2).unwrap();
        let expect: Vec<AwpaElem> = exponent_vectors(2, 2)
            .into_iter()
            .map(|al| a.mono(Mono { alpha: al, word: vec![0, 0], perm: Perm::identity(2) }).unwrap())
            .collect();
        assert_eq!(c.len(), 6);
        assert!(same_subspace(&c, &expect));
    }

    #[test]
    fn intertwiner_for_trivial() {
        let a = alg(trivial(), 2);
        let om = intertwiner(&a, 1).unwrap();
        let expect = a.parse("x2*s1 - x1*s1 - 1").unwrap();
        assert_eq!(om, expect);
    }

    #[test]
    fn reverse_and_shift() {
        let a = alg(clifford(), 3);
        let r = Automorphism::new(&a, AutKind::Reverse).unwrap();
        assert_eq!(r.apply(&a.x(1).unwrap()).unwrap(), a.x(3).unwrap());
        let e = a.parse("x1*b(c,1,c)*s1 + 2*x2^2*s2").unwrap();
        assert_eq!(r.apply(&r.apply(&e).unwrap()).unwrap(), e);

        let k = alg(trivial(), 2);
        let lam = CycScalar::from_ratio(3, 2);
        let c = TensorElem::one(k.algebra(), 2).scale(&lam);
        let sh = Automorphism::new(&k, AutKind::Shift(c)).unwrap();
        assert_eq!(sh.apply(&k.x(2).unwrap()).unwrap(), k.x(2).unwrap().add(&k.scalar(lam)));
    }

    #[test]
    fn shift_validation_rejects_odd_elements() {
        let a = alg(clifford(), 2);
        let c = TensorElem::word(a.algebra(), vec![1, 0]);
        assert!(matches!(Automorphism::new(&a, AutKind::Shift(c)), Err(Error::BadAutomorphismParams(_))));
    }

    #[test]
    fn graded_dimension_dual_numbers() {
        let a = alg(dual_numbers(), 1);
        let g = graded_dimension(&a, 8);
        assert_eq!(g.coeffs, vec![1, 0, 2, 0, 2, 0, 2, 0, 2]);
        let t = alg(trivial(), 2);
        let g = graded_dimension(&t, 3);
        assert!(g.by_polynomial_layer);
        assert_eq!(g.coeffs, vec![2, 4, 6, 8]);
    }

    #[test]
    fn mackey_two_point() {
        let a = alg(trivial(), 2);
        let r = mackey_dimension_report(&a, &[1, 1], &[1, 1], 0).unwrap();
        assert_eq!(r.lhs, 2);
        assert_eq!(r.terms.iter().map(|t| t.rank).collect::<Vec<_>>(), vec![1, 1]);
        assert!(r.holds);
    }

    #[test]
    fn leading_term_of_s1_x1() {
        let a = alg(trivial(), 2);
        let p = a.mul(&a.s(1).unwrap(), &a.x(1).unwrap()).unwrap();
        let lt = leading_term(&p).unwrap();
        assert_eq!(lt, a.mul(&a.x(2).unwrap(), &a.s(1).unwrap()).unwrap());
        assert_eq!(gr_mul(&a, &a.s(1).unwrap(), &a.x(1).unwrap()).unwrap(), lt);
        assert_eq!(leading_term(&a.zero()), Err(Error::ZeroElement));
    }
}
