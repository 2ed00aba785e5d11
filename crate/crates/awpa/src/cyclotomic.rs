//! Cyclotomic quotients 𝒜ₙ^𝐂(F) = 𝒜ₙ(F)/J_𝐂, their trace tr_𝐂 and the tower 𝒜ₙ^𝐂 ⊂ 𝒜ₙ₊₁^𝐂.
//!
//! Reduction rewrites x_i^d through Q_i = x_i^d − χ_i, where
//! Q_1 = x_1^d − χ_𝐂 and Q_i = s_{i−1}Q_{i−1}s_{i−1} + t^{(d)}_{i−1,i}s_{i−1}.
//! Q_i has polynomial degree < d, so every substitution lowers |α|.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};

use crate::awpa::{Awpa, AwpaElem, Exps, Mono};
use crate::error::{Error, Result};
use crate::frobenius::{AlgElem, FrobAlg};
use crate::linalg::{self, Echelon, Matrix, Solver, SparseVec};
use crate::lincomb::LinComb;
use crate::perm::{factorial, Perm};
use crate::scalar::{root_of_unity, CycScalar};
use crate::structure::{bounded_exponents, from_wreath, generators, Evaluation};
use crate::tensor::{psi_word, word_degree, word_parity, TensorElem, Word};

/// Default bound on the number of Gram-matrix entries.
pub const DEFAULT_MAX_ENTRIES: usize = 20_000;

/// The bound on Gram-matrix entries, overridable by `AWPA_MAX_DIM`.
pub fn max_entries() -> usize {
    std::env::var("AWPA_MAX_DIM").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_ENTRIES)
}

/// n!·(d·dim F)ⁿ.
pub fn expected_dim(n: usize, level: u32, dim_f: usize) -> u128 {
    factorial(n) * (level as u128 * dim_f as u128).pow(n as u32)
}

#[derive(Clone, Debug)]
enum Entries {
    /// c^{(k,j)} ∈ F_ψ^{(k)}, placed in slot 1 for every n.
    Slot1(Vec<Vec<AlgElem>>),
    /// c^{(k,j)} ∈ 𝐅_1^{(k)} ⊂ F^{⊗n} for one fixed n.
    General(usize, Vec<Vec<TensorElem>>),
}

/// Validated parameters 𝐂 and the level d = Σ k·e_k.
#[derive(Clone, Debug)]
pub struct CycloParams {
    f: Arc<FrobAlg>,
    entries: Entries,
    level: u32,
    rewrite: Option<Vec<AlgElem>>,
}

impl CycloParams {
    /// `entries[k-1]` lists c^{(k,1)}, …, c^{(k,e_k)}.
    pub fn new(f: Arc<FrobAlg>, entries: Vec<Vec<AlgElem>>) -> Result<CycloParams> {
        check_k_range(&f, entries.len())?;
        for (k0, list) in entries.iter().enumerate() {
            let k = k0 as i64 + 1;
            for c in list {
                if c.0.len() != f.dim() {
                    return Err(Error::AlgebraMismatch);
                }
                let name = f.format_elem(c);
                let support: Vec<usize> = (0..f.dim()).filter(|&i| !c.0[i].is_zero()).collect();
                if support.iter().any(|&i| f.parity(i) == 1) {
                    return Err(Error::OddParity(name));
                }
                if support.iter().any(|&i| f.degree(i) as i64 != k * f.delta() as i64) {
                    return Err(Error::WrongDegree(format!("{} should have degree {}", name, k * f.delta() as i64)));
                }
                if f.psi_pow(1, c) != *c {
                    return Err(Error::NotPsiFixed(name));
                }
                if !f.in_graded_piece(c, k, false) {
                    return Err(Error::BadParams(format!("{} does not lie in F^({})", name, k)));
                }
            }
        }
        let level = level_of(entries.iter().map(|l| l.len()))?;
        let mut p = CycloParams { f, entries: Entries::Slot1(entries), level, rewrite: None };
        let a1 = Awpa::new(p.f.clone(), 1);
        p.check_order_independence(&a1)?;
        // x_1^d ≡ Σ_{i<d} f_(i) x_1^i, read off from Q_1 in 𝒜_1(F)
        let q1 = a1.x_pow(1, level)?.sub(&p.chi_c(&a1)?);
        let mut rw = vec![AlgElem::zero(p.f.dim()); level as usize];
        for (m, c) in q1.terms().iter() {
            let e = m.alpha[0] as usize;
            if e >= level as usize || !m.perm.is_identity() {
                return Err(Error::BadParams("χ_C does not have leading term x_1^d".into()));
            }
            rw[e].0[m.word[0] as usize] += c;
        }
        p.rewrite = Some(rw);
        Ok(p)
    }

    /// Parameters in 𝐅_1^{(k)} = (F_ψ^{(k)} ⊗ F_ψ^{(0)} ⊗ ⋯)^{S_n^1} for a fixed n.
    /// Such parameters do not define a tower, so [`Extension`] refuses them.
    pub fn general(f: Arc<FrobAlg>, n: usize, entries: Vec<Vec<TensorElem>>) -> Result<CycloParams> {
        check_k_range(&f, entries.len())?;
        if n == 0 {
            return Err(Error::BadParams("general parameters need n >= 1".into()));
        }
        for (k0, list) in entries.iter().enumerate() {
            let k = k0 as i64 + 1;
            for c in list {
                if c.n != n {
                    return Err(Error::SizeMismatch(c.n, n));
                }
                let name = format!("{:?}", c.lc);
                if c.lc.keys().any(|w| word_parity(&f, w) == 1) {
                    return Err(Error::OddParity(name));
                }
                if c.lc.keys().any(|w| word_degree(&f, w) as i64 != k * f.delta() as i64) {
                    return Err(Error::WrongDegree(name));
                }
                if c.psi(&f, &vec![1; n]) != *c {
                    return Err(Error::NotPsiFixed(name));
                }
                let mut ks = vec![0i64; n];
                ks[0] = k;
                if !crate::structure::in_tensor_piece(&f, &ks, c) {
                    return Err(Error::BadParams(format!("{} is not in F_psi^({},0,...,0)", name, k)));
                }
                for j in 2..n {
                    if c.superpermute(&f, &Perm::simple(n, j))? != *c {
                        return Err(Error::BadParams(format!("{} is not invariant under s{}", name, j)));
                    }
                }
            }
        }
        let level = level_of(entries.iter().map(|l| l.len()))?;
        let p = CycloParams { f, entries: Entries::General(n, entries), level, rewrite: None };
        p.check_order_independence(&Awpa::new(p.f.clone(), n))?;
        Ok(p)
    }

    pub fn algebra(&self) -> &FrobAlg {
        &self.f
    }

    pub fn algebra_arc(&self) -> Arc<FrobAlg> {
        self.f.clone()
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// (e_1, …, e_θ') with trailing zeros dropped.
    pub fn e(&self) -> Vec<usize> {
        match &self.entries {
            Entries::Slot1(l) => l.iter().map(|x| x.len()).collect(),
            Entries::General(_, l) => l.iter().map(|x| x.len()).collect(),
        }
    }

    pub fn is_general(&self) -> bool {
        matches!(self.entries, Entries::General(..))
    }

    /// Slot-1 entries, if the parameters are of the standard form.
    pub fn slot1_entries(&self) -> Option<&[Vec<AlgElem>]> {
        match &self.entries {
            Entries::Slot1(l) => Some(l),
            Entries::General(..) => None,
        }
    }

    /// f_(0), …, f_(d−1) with x_1^d ≡ Σ f_(i) x_1^i.
    pub fn rewrite(&self) -> Option<&[AlgElem]> {
        self.rewrite.as_deref()
    }

    fn factors(&self, a: &Awpa) -> Result<Vec<AwpaElem>> {
        let mut out = Vec::new();
        match &self.entries {
            Entries::Slot1(l) => {
                for (k0, list) in l.iter().enumerate() {
                    for c in list {
                        out.push(a.x_pow(1, k0 as u32 + 1)?.sub(&a.slot(1, c)?));
                    }
                }
            }
            Entries::General(n, l) => {
                if *n != a.n() {
                    return Err(Error::ParamsMismatch);
                }
                for (k0, list) in l.iter().enumerate() {
                    for c in list {
                        out.push(a.x_pow(1, k0 as u32 + 1)?.sub(&a.tensor(c)?));
                    }
                }
            }
        }
        Ok(out)
    }

    /// χ_𝐂 = ∏_k ∏_j (x_1^k − c^{(k,j)}) in 𝒜ₙ(F), n ≥ 1.
    pub fn chi_c(&self, a: &Awpa) -> Result<AwpaElem> {
        let fs = self.factors(a)?;
        a.mul_all(&fs.iter().collect::<Vec<_>>())
    }

    fn check_order_independence(&self, a: &Awpa) -> Result<()> {
        let fs = self.factors(a)?;
        let forward = a.mul_all(&fs.iter().collect::<Vec<_>>())?;
        let backward = a.mul_all(&fs.iter().rev().collect::<Vec<_>>())?;
        let half = fs.len() / 2;
        let rotated = a.mul_all(&fs[half..].iter().chain(&fs[..half]).collect::<Vec<_>>())?;
        if forward != backward || forward != rotated {
            return Err(Error::BadParams("χ_C depends on the order of its factors".into()));
        }
        Ok(())
    }
}

fn check_k_range(f: &FrobAlg, len: usize) -> Result<()> {
    if len as u32 > f.theta() {
        return Err(Error::BadParams(format!("entries given for k = {} > theta = {}", len, f.theta())));
    }
    Ok(())
}

fn level_of(e: impl Iterator<Item = usize>) -> Result<u32> {
    let d: usize = e.enumerate().map(|(k0, ek)| (k0 + 1) * ek).sum();
    if d == 0 {
        return Err(Error::LevelZero);
    }
    Ok(d as u32)
}

/// Element of 𝒜ₙ^𝐂(F) in reduced normal form (every αᵢ < d).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloElem {
    tag: usize,
    elem: AwpaElem,
}

impl CycloElem {
    /// The canonical representative in 𝒜ₙ(F).
    pub fn lift(&self) -> &AwpaElem {
        &self.elem
    }

    pub fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }

    pub fn add(&self, o: &CycloElem) -> CycloElem {
        CycloElem { tag: self.tag, elem: self.elem.add(&o.elem) }
    }

    pub fn sub(&self, o: &CycloElem) -> CycloElem {
        CycloElem { tag: self.tag, elem: self.elem.sub(&o.elem) }
    }

    pub fn scale(&self, s: &CycScalar) -> CycloElem {
        CycloElem { tag: self.tag, elem: self.elem.scale(s) }
    }
}

/// Verdict on the trace form of 𝒜ₙ^𝐂(F).
#[derive(Clone, Debug)]
pub struct Gram {
    pub matrix: Matrix,
    pub rank: usize,
    pub invertible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NakayamaReport {
    pub pairs_checked: usize,
    pub holds: bool,
    pub counterexample: Option<(String, String)>,
    /// ν computed from the Gram matrix agrees with the displayed formula on generators.
    pub generators_match: Option<bool>,
    /// ψ^d = id on F.
    pub symmetric: bool,
    /// tr_𝐂(ab) = (−1)^{āb̄} tr_𝐂(ba) on the whole basis, when the Gram matrix was built.
    pub gram_super_symmetric: Option<bool>,
    pub theta_divides_level: bool,
}

/// The quotient 𝒜ₙ^𝐂(F) for fixed parameters and n.
pub struct Cyclo {
    params: Arc<CycloParams>,
    alg: Awpa,
    chi: Vec<AwpaElem>,
    q: Vec<AwpaElem>,
    memo: Mutex<HashMap<Mono, Arc<LinComb<Mono>>>>,
    basis: OnceLock<(Vec<Mono>, HashMap<Mono, usize>)>,
}

impl std::fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cyclo({}, n = {}, d = {})", self.params.f.name, self.n(), self.level())
    }
}

impl Cyclo {
    pub fn new(params: Arc<CycloParams>, n: usize) -> Result<Cyclo> {
        if let Entries::General(m, _) = params.entries {
            if m != n {
                return Err(Error::ParamsMismatch);
            }
        }
        let alg = Awpa::new(params.f.clone(), n);
        let d = params.level;
        let mut chi: Vec<AwpaElem> = Vec::new();
        let mut q = Vec::new();
        for i in 1..=n {
            let c = if i == 1 {
                params.chi_c(&alg)?
            } else {
                let s = alg.s(i - 1)?;
                alg.mul_all(&[&s, &chi[i - 2], &s])?
            };
            let qi = alg.x_pow(i, d)?.sub(&c);
            if qi.terms().keys().any(|m| m.alpha.iter().sum::<u32>() >= d) {
                return Err(Error::BadParams(format!("χ_{} does not have leading term x_{}^{}", i, i, d)));
            }
            chi.push(c);
            q.push(qi);
        }
        Ok(Cyclo { params, alg, chi, q, memo: Mutex::new(HashMap::new()), basis: OnceLock::new() })
    }

    pub fn params(&self) -> &Arc<CycloParams> {
        &self.params
    }

    pub fn awpa(&self) -> &Awpa {
        &self.alg
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    pub fn level(&self) -> u32 {
        self.params.level
    }

    fn tag(&self) -> usize {
        Arc::as_ptr(&self.params) as usize
    }

    fn check(&self, a: &CycloElem) -> Result<()> {
        if a.tag != self.tag() || a.elem.n() != self.n() {
            return Err(Error::ParamsMismatch);
        }
        Ok(())
    }

    /// χ_i in 𝒜ₙ(F), 1-based.
    pub fn chi(&self, i: usize) -> Result<&AwpaElem> {
        if i == 0 || i > self.n() {
            return Err(Error::IndexError(format!("chi_{} needs 1 <= i <= {}", i, self.n())));
        }
        Ok(&self.chi[i - 1])
    }

    /// x_i^d − χ_i.
    pub fn q(&self, i: usize) -> Result<&AwpaElem> {
        self.chi(i)?;
        Ok(&self.q[i - 1])
    }

    fn x_alpha(&self, alpha: Exps) -> AwpaElem {
        let one = TensorElem::one(&self.params.f, self.n()).lc;
        self.alg.poly(&one.map_keys(|w| (alpha.clone(), w.clone())))
    }

    fn reduce_mono(&self, m: &Mono) -> Result<Arc<LinComb<Mono>>> {
        if let Some(r) = self.memo.lock().unwrap().get(m) {
            return Ok(r.clone());
        }
        let d = self.level();
        let r = match m.alpha.iter().position(|&e| e >= d) {
            None => LinComb::single(m.clone(), self.params.f.one_scalar()),
            Some(i) => {
                let mut alpha = m.alpha.clone();
                alpha[i] -= d;
                let tail = self.alg.mono(Mono { alpha: vec![0; self.n()], word: m.word.clone(), perm: m.perm.clone() })?;
                let prod = self.alg.mul_all(&[&self.x_alpha(alpha), &self.q[i], &tail])?;
                let mut out = LinComb::new();
                for (m2, c) in prod.terms().iter() {
                    out.add_scaled(&*self.reduce_mono(m2)?, c);
                }
                out
            }
        };
        let r = Arc::new(r);
        self.memo.lock().unwrap().insert(m.clone(), r.clone());
        Ok(r)
    }

    /// Image of `a` in 𝒜ₙ^𝐂(F).
    pub fn reduce(&self, a: &AwpaElem) -> Result<CycloElem> {
        self.alg.check(a)?;
        let mut out = LinComb::new();
        for (m, c) in a.terms().iter() {
            out.add_scaled(&*self.reduce_mono(m)?, c);
        }
        Ok(CycloElem { tag: self.tag(), elem: self.alg.elem(out) })
    }

    pub fn parse(&self, s: &str) -> Result<CycloElem> {
        self.reduce(&self.alg.parse(s)?)
    }

    pub fn format(&self, a: &CycloElem) -> String {
        self.alg.format(&a.elem)
    }

    pub fn zero(&self) -> CycloElem {
        CycloElem { tag: self.tag(), elem: self.alg.zero() }
    }

    pub fn one(&self) -> CycloElem {
        CycloElem { tag: self.tag(), elem: self.alg.one() }
    }

    pub fn mul(&self, a: &CycloElem, b: &CycloElem) -> Result<CycloElem> {
        self.check(a)?;
        self.check(b)?;
        self.reduce(&self.alg.mul(&a.elem, &b.elem)?)
    }

    pub fn mul_all(&self, fs: &[&CycloElem]) -> Result<CycloElem> {
        let mut acc = self.one();
        for f in fs {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// Basis monomials x^α 𝐛 π with every αᵢ < d, sorted.
    pub fn basis(&self) -> &[Mono] {
        &self.basis_index().0
    }

    fn basis_index(&self) -> &(Vec<Mono>, HashMap<Mono, usize>) {
        self.basis.get_or_init(|| {
            let n = self.n();
            let words = crate::structure::all_words(n, self.params.f.dim());
            let mut out = Vec::new();
            for alpha in bounded_exponents(n, self.level()) {
                for w in &words {
                    for p in Perm::all(n) {
                        out.push(Mono { alpha: alpha.clone(), word: w.clone(), perm: p });
                    }
                }
            }
            out.sort();
            let idx = out.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            (out, idx)
        })
    }

    pub fn dim(&self) -> usize {
        self.basis().len()
    }

    pub fn basis_elem(&self, i: usize) -> CycloElem {
        let m = self.basis()[i].clone();
        CycloElem { tag: self.tag(), elem: self.alg.mono(m).expect("basis monomial") }
    }

    pub fn coords(&self, a: &CycloElem) -> SparseVec {
        let idx = &self.basis_index().1;
        a.elem.terms().iter().map(|(m, c)| (idx[m], c.clone())).collect()
    }

    pub fn from_coords(&self, v: &SparseVec) -> CycloElem {
        let b = self.basis();
        let terms = LinComb::from_terms(v.iter().map(|(&i, c)| (b[i].clone(), c.clone())));
        CycloElem { tag: self.tag(), elem: self.alg.elem(terms) }
    }

    /// tr_𝐂(x^α𝐟π) = δ_{α,(d−1,…,d−1)} δ_{π,1} ∏ tr(fᵢ).
    pub fn trace(&self, a: &CycloElem) -> CycScalar {
        let f = &self.params.f;
        let top = self.level() - 1;
        let mut out = f.zero_scalar();
        for (m, c) in a.elem.terms().iter() {
            if m.perm.is_identity() && m.alpha.iter().all(|&e| e == top) {
                let mut t = c.clone();
                for &b in &m.word {
                    t = &t * &f.trace_vec()[b as usize];
                }
                out += &t;
            }
        }
        out
    }

    /// ν(x^α𝐟π) = x^α (ψ^d)^{⊗n}(𝐟) π.
    pub fn nakayama(&self, a: &CycloElem) -> CycloElem {
        let exps = vec![self.level() as i64; self.n()];
        let mut out = LinComb::new();
        for (m, c) in a.elem.terms().iter() {
            for (w, c2) in psi_word(&self.params.f, &exps, &m.word) {
                out.add_term(Mono { alpha: m.alpha.clone(), word: w, perm: m.perm.clone() }, c * &c2);
            }
        }
        CycloElem { tag: self.tag(), elem: self.alg.elem(out) }
    }

    fn parity_of(&self, a: &CycloElem) -> Option<u8> {
        let mut ps = a.elem.terms().keys().map(|m| self.alg.mono_parity(m));
        let p = ps.next().unwrap_or(0);
        ps.all(|q| q == p).then_some(p)
    }

    fn gram_size_check(&self) -> Result<()> {
        let dim = self.dim();
        let bound = max_entries();
        if dim.saturating_mul(dim) > bound {
            return Err(Error::TooLarge(format!("{}x{} Gram matrix exceeds {} entries", dim, dim, bound)));
        }
        Ok(())
    }

    /// G[u][v] = tr_𝐂(u·v) over the basis.
    pub fn gram_matrix(&self) -> Result<Gram> {
        self.gram_size_check()?;
        let dim = self.dim();
        let elems: Vec<CycloElem> = (0..dim).map(|i| self.basis_elem(i)).collect();
        let mut matrix = vec![vec![self.params.f.zero_scalar(); dim]; dim];
        for (u, eu) in elems.iter().enumerate() {
            for (v, ev) in elems.iter().enumerate() {
                matrix[u][v] = self.trace(&self.mul(eu, ev)?);
            }
        }
        let rank = linalg::rank(&matrix);
        Ok(Gram { matrix, rank, invertible: rank == dim })
    }

    /// Random combination of up to `terms` basis monomials of one parity.
    pub fn random_homogeneous<R: Rng>(&self, rng: &mut R, terms: usize) -> CycloElem {
        let b = self.basis();
        let first = &b[rng.gen_range(0..b.len())];
        let p = self.alg.mono_parity(first);
        let m = self.params.f.conductor();
        let mut out = LinComb::new();
        out.add_term(first.clone(), random_coeff(rng, m));
        for _ in 1..terms {
            let cand = &b[rng.gen_range(0..b.len())];
            if self.alg.mono_parity(cand) == p {
                out.add_term(cand.clone(), random_coeff(rng, m));
            }
        }
        CycloElem { tag: self.tag(), elem: self.alg.elem(out) }
    }

    /// Random combination of up to `terms` basis monomials.
    pub fn random_elem<R: Rng>(&self, rng: &mut R, terms: usize) -> CycloElem {
        let b = self.basis();
        let m = self.params.f.conductor();
        let mut out = LinComb::new();
        for _ in 0..terms {
            out.add_term(b[rng.gen_range(0..b.len())].clone(), random_coeff(rng, m));
        }
        CycloElem { tag: self.tag(), elem: self.alg.elem(out) }
    }

    /// Checks tr_𝐂(ab) = (−1)^{āb̄} tr_𝐂(b ν(a)) on random homogeneous pairs, plus the
    /// Gram-derived checks when the Gram matrix fits the size bound.
    pub fn nakayama_check<R: Rng>(&self, rng: &mut R, pairs: usize) -> Result<NakayamaReport> {
        let f = &self.params.f;
        let d = self.level();
        let mut report = NakayamaReport {
            pairs_checked: 0,
            holds: true,
            counterexample: None,
            generators_match: None,
            symmetric: (0..f.dim()).all(|i| f.psi_basis(d as i64, i) == &vec![(i, f.one_scalar())]),
            gram_super_symmetric: None,
            theta_divides_level: d % f.theta() == 0,
        };
        if self.gram_size_check().is_ok() {
            let g = self.gram_matrix()?;
            if !g.invertible {
                return Err(Error::DegenerateGram);
            }
            report.gram_super_symmetric = Some(self.gram_super_symmetric(&g));
            report.generators_match = Some(self.nakayama_from_gram(&g)?);
        }
        for _ in 0..pairs {
            let a = self.random_homogeneous(rng, 3);
            let b = self.random_homogeneous(rng, 3);
            report.pairs_checked += 1;
            if !self.nakayama_pair_holds(&a, &b)? {
                report.holds = false;
                report.counterexample = Some((self.format(&a), self.format(&b)));
                break;
            }
        }
        Ok(report)
    }

    /// [`Cyclo::nakayama_check`] driven by a ChaCha generator seeded with `seed`.
    pub fn nakayama_check_seeded(&self, seed: u64, pairs: usize) -> Result<NakayamaReport> {
        self.nakayama_check(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), pairs)
    }

    /// tr_𝐂(ab) = (−1)^{āb̄} tr_𝐂(b ν(a)) for parity-homogeneous a, b.
    pub fn nakayama_pair_holds(&self, a: &CycloElem, b: &CycloElem) -> Result<bool> {
        let (Some(pa), Some(pb)) = (self.parity_of(a), self.parity_of(b)) else {
            return Err(Error::GradingViolation("Nakayama pair must be parity-homogeneous".into()));
        };
        let lhs = self.trace(&self.mul(a, b)?);
        let mut rhs = self.trace(&self.mul(b, &self.nakayama(a))?);
        if pa * pb == 1 {
            rhs = -rhs;
        }
        Ok(lhs == rhs)
    }

    fn gram_super_symmetric(&self, g: &Gram) -> bool {
        let b = self.basis();
        let dim = b.len();
        (0..dim).all(|u| {
            (0..dim).all(|v| {
                let odd = self.alg.mono_parity(&b[u]) * self.alg.mono_parity(&b[v]) == 1;
                let back = if odd { -&g.matrix[v][u] } else { g.matrix[v][u].clone() };
                g.matrix[u][v] == back
            })
        })
    }

    /// Solves tr_𝐂(b·y) = (−1)^{āb̄} tr_𝐂(a·b) for y on each generator a and compares y with ν(a).
    fn nakayama_from_gram(&self, g: &Gram) -> Result<bool> {
        let dim = self.dim();
        let cols: Vec<SparseVec> = (0..dim)
            .map(|v| (0..dim).filter(|&u| !g.matrix[u][v].is_zero()).map(|u| (u, g.matrix[u][v].clone())).collect())
            .collect();
        let solver = Solver::new(&cols);
        let basis: Vec<CycloElem> = (0..dim).map(|i| self.basis_elem(i)).collect();
        for (_, gen) in generators(&self.alg)? {
            let a = self.reduce(&gen)?;
            let pa = self.parity_of(&a).unwrap_or(0);
            let mut rhs = SparseVec::new();
            for (u, bu) in basis.iter().enumerate() {
                let mut t = self.trace(&self.mul(&a, bu)?);
                if pa * self.alg.mono_parity(&self.basis()[u]) == 1 {
                    t = -t;
                }
                if !t.is_zero() {
                    rhs.insert(u, t);
                }
            }
            let Some(y) = solver.solve(&rhs) else { return Ok(false) };
            if self.from_coords(&y) != self.nakayama(&a) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Rank of the span of all products of generators applied to 1.
    pub fn closure_dim(&self) -> Result<usize> {
        let gens: Vec<CycloElem> = generators(&self.alg)?.iter().map(|(_, g)| self.reduce(g)).collect::<Result<_>>()?;
        let mut ech = Echelon::new();
        let one = self.one();
        ech.insert(self.coords(&one));
        let mut queue = VecDeque::from([one]);
        while let Some(v) = queue.pop_front() {
            for g in &gens {
                let w = self.mul(g, &v)?;
                if ech.insert(self.coords(&w)) {
                    queue.push_back(w);
                }
            }
        }
        Ok(ech.rank())
    }

    /// Whether χ_𝐂 = x_1, the case where 𝒜ₙ^𝐂(F) ≅ F^{⊗n} ⋊ Sₙ.
    pub fn is_trivial_level_one(&self) -> bool {
        match self.params.slot1_entries() {
            Some(l) => self.params.level == 1 && l[0].len() == 1 && l[0][0].is_zero(),
            None => false,
        }
    }

    /// For χ_𝐂 = x_1: reduce(a) equals the evaluation image of a.
    pub fn level_one_agrees(&self, a: &AwpaElem) -> Result<bool> {
        if !self.is_trivial_level_one() {
            return Err(Error::BadParams("level-one comparison needs chi_C = x_1".into()));
        }
        let mut ev = Evaluation::new(&self.alg)?;
        let w = ev.apply(a)?;
        Ok(self.reduce(a)?.elem == from_wreath(&self.alg, &w)?)
    }

    /// For χ_𝐂 = x_1: structure constants of the quotient match those of F^{⊗n} ⋊ Sₙ.
    pub fn level_one_structure_matches(&self) -> Result<bool> {
        if !self.is_trivial_level_one() {
            return Err(Error::BadParams("level-one comparison needs chi_C = x_1".into()));
        }
        let f = &self.params.f;
        let n = self.n();
        if self.dim() as u128 != expected_dim(n, 1, f.dim()) {
            return Ok(false);
        }
        let wreath: Vec<crate::tensor::WreathElem> = self
            .basis()
            .iter()
            .map(|m| crate::tensor::WreathElem::from_tensor(&TensorElem::word(f, m.word.clone()), &m.perm))
            .collect();
        for (u, wu) in wreath.iter().enumerate() {
            for (v, wv) in wreath.iter().enumerate() {
                let quotient = self.mul(&self.basis_elem(u), &self.basis_elem(v))?;
                if quotient.elem != from_wreath(&self.alg, &wu.mul(f, wv)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn random_coeff<R: Rng>(rng: &mut R, conductor: u32) -> CycScalar {
    let mut v = 0;
    while v == 0 {
        v = rng.gen_range(-3i64..=3);
    }
    let c = CycScalar::from_int(v).embed(conductor);
    if conductor > 1 && rng.gen_bool(0.3) {
        &c * &root_of_unity(conductor, rng.gen_range(0..conductor as i64))
    } else {
        c
    }
}

/// Dimension bookkeeping for 𝒜ₙ^𝐂 ⊂ 𝒜ₙ₊₁^𝐂.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductionReport {
    pub basis_len: usize,
    pub lo_dim: usize,
    pub hi_dim: usize,
    /// Rank of {x_j^a b_j s_j⋯s_n · m}: equals hi_dim iff the listed elements form a free right basis.
    pub rank: usize,
    /// Rank of the j = n+1 part: d·dim F·dim 𝒜ₙ^𝐂.
    pub top_rank: usize,
    /// Rank of the j ≤ n part: n·d·dim F·dim 𝒜ₙ^𝐂.
    pub rest_rank: usize,
    pub free: bool,
    pub mackey_holds: bool,
}

/// The extension 𝒜ₙ^𝐂(F) ⊂ 𝒜ₙ₊₁^𝐂(F) with its right-module basis and partial trace.
pub struct Extension {
    lo: Cyclo,
    hi: Cyclo,
    blocks: Vec<(usize, u32, usize)>,
    block_elems: Vec<CycloElem>,
    solver: OnceLock<Solver>,
}

impl Extension {
    pub fn new(params: Arc<CycloParams>, n: usize) -> Result<Extension> {
        if params.is_general() {
            return Err(Error::BadParams("induction needs parameters in slot 1".into()));
        }
        let lo = Cyclo::new(params.clone(), n)?;
        let hi = Cyclo::new(params, n + 1)?;
        let hi_dim = expected_dim(n + 1, hi.level(), hi.params.f.dim());
        let bound = max_entries() as u128;
        if hi_dim * hi_dim > bound {
            return Err(Error::TooLarge(format!("dim A_{} = {} exceeds the bound {}", n + 1, hi_dim, bound)));
        }
        let mut blocks = Vec::new();
        let mut block_elems = Vec::new();
        let h = &hi.alg;
        for j in 1..=n + 1 {
            for a in 0..hi.level() {
                for b in 0..hi.params.f.dim() {
                    let mut e = h.mul(&h.x_pow(j, a)?, &h.basis_slot(j, b)?)?;
                    for k in j..=n {
                        e = h.mul(&e, &h.s(k)?)?;
                    }
                    blocks.push((j, a, b));
                    block_elems.push(hi.reduce(&e)?);
                }
            }
        }
        Ok(Extension { lo, hi, blocks, block_elems, solver: OnceLock::new() })
    }

    pub fn lo(&self) -> &Cyclo {
        &self.lo
    }

    pub fn hi(&self) -> &Cyclo {
        &self.hi
    }

    /// The elements x_j^a b_j s_j⋯s_n, labelled (j, a, b).
    pub fn induction_basis(&self) -> Vec<((usize, u32, usize), CycloElem)> {
        self.blocks.iter().cloned().zip(self.block_elems.iter().cloned()).collect()
    }

    /// 𝒜ₙ^𝐂 ↪ 𝒜ₙ₊₁^𝐂: x^α𝐛π ↦ x^{(α,0)}(𝐛 ⊗ 1)(π × id).
    pub fn embed(&self, a: &CycloElem) -> Result<CycloElem> {
        self.lo.check(a)?;
        let f = &self.lo.params.f;
        let n = self.lo.n();
        let unit = f.unit();
        let mut out = LinComb::new();
        for (m, c) in a.elem.terms().iter() {
            let mut alpha = m.alpha.clone();
            alpha.push(0);
            let mut img: Vec<u8> = m.perm.images0().to_vec();
            img.push(n as u8);
            let perm = Perm::from_images0(img);
            for (u, cu) in unit.0.iter().enumerate() {
                if cu.is_zero() {
                    continue;
                }
                let mut word: Word = m.word.clone();
                word.push(u as u16);
                out.add_term(Mono { alpha: alpha.clone(), word, perm: perm.clone() }, c * cu);
            }
        }
        Ok(CycloElem { tag: self.hi.tag(), elem: self.hi.alg.elem(out) })
    }

    fn columns(&self, which: impl Fn(usize) -> bool) -> Result<Vec<SparseVec>> {
        let lo_basis: Vec<CycloElem> = (0..self.lo.dim()).map(|i| self.embed(&self.lo.basis_elem(i))).collect::<Result<_>>()?;
        let mut cols = Vec::new();
        for (bi, e) in self.block_elems.iter().enumerate() {
            if !which(self.blocks[bi].0) {
                continue;
            }
            for m in &lo_basis {
                cols.push(self.hi.coords(&self.hi.mul(e, m)?));
            }
        }
        Ok(cols)
    }

    fn solver(&self) -> Result<&Solver> {
        if let Some(s) = self.solver.get() {
            return Ok(s);
        }
        let s = Solver::new(&self.columns(|_| true)?);
        Ok(self.solver.get_or_init(|| s))
    }

    /// Coefficients y_{j,a,b} ∈ 𝒜ₙ^𝐂 with z = Σ x_j^a b_j s_j⋯s_n · y_{j,a,b}.
    pub fn decompose(&self, z: &CycloElem) -> Result<Vec<CycloElem>> {
        self.hi.check(z)?;
        let y = self
            .solver()?
            .solve(&self.hi.coords(z))
            .ok_or_else(|| Error::DimensionMismatch("element outside the span of the induction basis".into()))?;
        let ld = self.lo.dim();
        let mut parts = vec![SparseVec::new(); self.blocks.len()];
        for (col, c) in y {
            parts[col / ld].insert(col % ld, c);
        }
        Ok(parts.iter().map(|p| self.lo.from_coords(p)).collect())
    }

    /// tr^𝐂_{n+1}: projection onto x_{n+1}^{d−1}F_{n+1}𝒜ₙ^𝐂 followed by x_{n+1}^{d−1}f_{n+1}y ↦ tr(f)y.
    pub fn partial_trace(&self, z: &CycloElem) -> Result<CycloElem> {
        let parts = self.decompose(z)?;
        let f = &self.lo.params.f;
        let (top_j, top_a) = (self.lo.n() + 1, self.lo.level() - 1);
        let mut out = self.lo.zero();
        for (bi, &(j, a, b)) in self.blocks.iter().enumerate() {
            if j == top_j && a == top_a && !f.trace_vec()[b].is_zero() {
                out = out.add(&parts[bi].scale(&f.trace_vec()[b]));
            }
        }
        Ok(out)
    }

    /// Rank checks for freeness and the cyclotomic Mackey decomposition.
    pub fn induction_report(&self) -> Result<InductionReport> {
        let n = self.lo.n();
        let rank = self.solver()?.rank();
        let top_rank = Solver::new(&self.columns(|j| j == n + 1)?).rank();
        let rest_rank = Solver::new(&self.columns(|j| j <= n)?).rank();
        let (lo_dim, hi_dim) = (self.lo.dim(), self.hi.dim());
        let piece = self.lo.level() as usize * self.lo.params.f.dim() * lo_dim;
        Ok(InductionReport {
            basis_len: self.blocks.len(),
            lo_dim,
            hi_dim,
            rank,
            top_rank,
            rest_rank,
            free: rank == hi_dim && self.blocks.len() * lo_dim == hi_dim,
            mackey_holds: top_rank == piece && rest_rank == n * piece && hi_dim == top_rank + rest_rank,
        })
    }

    /// Rank of the span of 𝒜ₙ^𝐂 sₙ 𝒜ₙ^𝐂 inside 𝒜ₙ₊₁^𝐂.
    pub fn bimodule_span_rank(&self) -> Result<usize> {
        let n = self.lo.n();
        if n == 0 {
            return Ok(0);
        }
        let sn = self.hi.reduce(&self.hi.alg.s(n)?)?;
        let lo: Vec<CycloElem> = (0..self.lo.dim()).map(|i| self.embed(&self.lo.basis_elem(i))).collect::<Result<_>>()?;
        let mut ech = Echelon::new();
        for u in &lo {
            let us = self.hi.mul(u, &sn)?;
            for v in &lo {
                ech.insert(self.hi.coords(&self.hi.mul(&us, v)?));
            }
        }
        Ok(ech.rank())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{clifford, dual_numbers, symmetric_group3, taft, trivial};
    use crate::structure::{evaluation_hom, leading_term};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn scalar_entries(f: &FrobAlg, ks: &[&[i64]]) -> Vec<Vec<AlgElem>> {
        ks.iter().map(|l| l.iter().map(|&v| f.unit().scale(&CycScalar::from_int(v))).collect()).collect()
    }

    fn params(f: FrobAlg, ks: &[&[i64]]) -> Arc<CycloParams> {
        let e = scalar_entries(&f, ks);
        Arc::new(CycloParams::new(Arc::new(f), e).unwrap())
    }

    #[test]
    fn params_validation() {
        let k = Arc::new(trivial());
        let p = CycloParams::new(k.clone(), vec![vec![AlgElem::zero(1)]]).unwrap();
        assert_eq!(p.level(), 1);
        assert_eq!(CycloParams::new(k.clone(), vec![vec![]]).unwrap_err(), Error::LevelZero);
        let cl = Arc::new(clifford());
        let lam = cl.unit().scale(&CycScalar::from_int(3));
        let p = CycloParams::new(cl.clone(), vec![vec![], vec![lam]]).unwrap();
        assert_eq!(p.level(), 2);
        assert!(matches!(CycloParams::new(cl.clone(), vec![vec![AlgElem::basis(2, 1)]]), Err(Error::OddParity(_))));
        assert!(matches!(CycloParams::new(cl.clone(), vec![vec![], vec![], vec![cl.unit()]]), Err(Error::BadParams(_))));
        let t = Arc::new(taft(2, 1).unwrap());
        // y has degree 1 = δ, so it is rejected for k = 2 on degree grounds
        let y = t.parse_elem("y").unwrap();
        assert!(matches!(CycloParams::new(t.clone(), vec![vec![], vec![y]]), Err(Error::WrongDegree(_))));
        let g = t.parse_elem("g").unwrap();
        assert!(matches!(CycloParams::new(t.clone(), vec![vec![g]]), Err(Error::WrongDegree(_))));
        let s3 = Arc::new(symmetric_group3());
        let non_central = AlgElem::basis(6, 1);
        assert!(CycloParams::new(s3, vec![vec![non_central]]).is_err());
    }

    #[test]
    fn clifford_rewrite_vector() {
        let p = params(clifford(), &[&[], &[5]]);
        let rw = p.rewrite().unwrap();
        assert_eq!(rw.len(), 2);
        assert_eq!(rw[0], p.algebra().unit().scale(&CycScalar::from_int(5)));
        assert!(rw[1].is_zero());
    }

    #[test]
    fn chi_examples() {
        let p = params(trivial(), &[&[0]]);
        let c = Cyclo::new(p, 2).unwrap();
        let a = c.awpa();
        assert_eq!(*c.chi(1).unwrap(), a.x(1).unwrap());
        assert_eq!(*c.chi(2).unwrap(), a.parse("x2 - s1").unwrap());
        assert!(c.chi(3).is_err());
        for f in [clifford(), dual_numbers(), taft(2, 1).unwrap()] {
            let theta = f.theta() as usize;
            let mut ks: Vec<&[i64]> = vec![&[]; theta];
            ks[theta - 1] = &[0];
            let p = params(f, &ks);
            let c = Cyclo::new(p.clone(), 3).unwrap();
            for i in 1..=3 {
                let lt = leading_term(c.chi(i).unwrap()).unwrap();
                assert_eq!(lt, c.awpa().x_pow(i, p.level()).unwrap());
            }
        }
    }

    #[test]
    fn q_recursion() {
        let p = params(clifford(), &[&[], &[2]]);
        let c = Cyclo::new(p, 3).unwrap();
        let a = c.awpa();
        for i in 2..=3 {
            let s = a.s(i - 1).unwrap();
            let rhs =
                a.mul_all(&[&s, c.q(i - 1).unwrap(), &s]).unwrap().add(&a.mul(&a.t_element(i - 1, i, 2).unwrap(), &s).unwrap());
            assert_eq!(*c.q(i).unwrap(), rhs);
        }
    }

    #[test]
    fn reduce_kills_ideal_and_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = params(clifford(), &[&[], &[1]]);
        let c = Cyclo::new(p, 2).unwrap();
        let a = c.awpa();
        assert!(c.reduce(c.chi(1).unwrap()).unwrap().is_zero());
        for _ in 0..20 {
            let u = c.random_elem(&mut rng, 3);
            let v = c.random_elem(&mut rng, 3);
            let z = a.mul_all(&[u.lift(), c.chi(1).unwrap(), v.lift()]).unwrap();
            assert!(c.reduce(&z).unwrap().is_zero());
            let uv = a.mul(u.lift(), v.lift()).unwrap();
            assert_eq!(c.reduce(&uv).unwrap(), c.mul(&u, &v).unwrap());
        }
    }

    #[test]
    fn cyclotomic_dimensions() {
        let c = Cyclo::new(params(clifford(), &[&[], &[1]]), 2).unwrap();
        assert_eq!(c.dim(), 32);
        assert_eq!(c.closure_dim().unwrap(), 32);
        let c = Cyclo::new(params(trivial(), &[&[1, 2]]), 3).unwrap();
        assert_eq!(c.closure_dim().unwrap() as u128, expected_dim(3, 2, 1));
    }

    #[test]
    fn trace_examples() {
        let c = Cyclo::new(params(clifford(), &[&[], &[1]]), 2).unwrap();
        let top = c.parse("x1*x2").unwrap();
        assert_eq!(c.trace(&top), CycScalar::one());
        assert!(c.trace(&c.parse("x1*x2*s1").unwrap()).is_zero());
        assert!(c.trace(&c.parse("x2").unwrap()).is_zero());
        assert!(c.trace(&c.parse("x1*x2*b(c,1)").unwrap()).is_zero());
    }

    #[test]
    fn gram_examples() {
        let c = Cyclo::new(params(trivial(), &[&[0]]), 1).unwrap();
        let g = c.gram_matrix().unwrap();
        assert_eq!(g.matrix, vec![vec![CycScalar::one()]]);
        // {1, s1} in kS_2: tr(1) = 1, tr(s1) = 0, tr(s1 s1) = 1
        let c = Cyclo::new(params(trivial(), &[&[0]]), 2).unwrap();
        let g = c.gram_matrix().unwrap();
        let one = CycScalar::one();
        let zero = CycScalar::zero();
        assert_eq!(g.matrix, vec![vec![one.clone(), zero.clone()], vec![zero, one]]);
        let c = Cyclo::new(params(clifford(), &[&[], &[1]]), 1).unwrap();
        let g = c.gram_matrix().unwrap();
        assert_eq!((g.matrix.len(), g.invertible), (4, true));
    }

    #[test]
    fn nakayama_symmetry_follows_level() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let odd = Cyclo::new(params(clifford(), &[&[0]]), 2).unwrap();
        let r = odd.nakayama_check(&mut rng, 50).unwrap();
        assert!(r.holds && r.generators_match == Some(true));
        assert!(!r.symmetric && r.gram_super_symmetric == Some(false) && !r.theta_divides_level);
        let c1 = odd.reduce(&odd.awpa().basis_slot(1, 1).unwrap()).unwrap();
        assert_eq!(odd.nakayama(&c1), c1.scale(&CycScalar::from_int(-1)));
        let even = Cyclo::new(params(clifford(), &[&[], &[2]]), 2).unwrap();
        let r = even.nakayama_check(&mut rng, 50).unwrap();
        assert!(r.holds && r.symmetric && r.gram_super_symmetric == Some(true) && r.theta_divides_level);
    }

    #[test]
    fn level_one_is_wreath_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let c = Cyclo::new(params(clifford(), &[&[0]]), 2).unwrap();
        assert!(c.level_one_structure_matches().unwrap());
        let a = c.awpa();
        for k in 1..=2 {
            let jk = evaluation_hom(a, &a.x(k).unwrap()).unwrap();
            assert_eq!(c.reduce(&a.x(k).unwrap()).unwrap().lift(), &from_wreath(a, &jk).unwrap());
        }
        let s3 = Cyclo::new(params(symmetric_group3(), &[&[0]]), 2).unwrap();
        for _ in 0..10 {
            let u = s3.awpa().parse("x2^2*s1 + 3*x1*x2").unwrap();
            let v = s3.random_elem(&mut rng, 2);
            let z = s3.awpa().mul(&u, v.lift()).unwrap();
            assert!(s3.level_one_agrees(&z).unwrap());
        }
        let k2 = Cyclo::new(params(trivial(), &[&[0]]), 2).unwrap();
        let lhs = k2.parse("s1*x2").unwrap();
        let rhs = k2.parse("x1*s1 + 1").unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn extension_dimensions_and_trace() {
        let ext = Extension::new(params(trivial(), &[&[0, 1]]), 1).unwrap();
        let r = ext.induction_report().unwrap();
        assert_eq!((r.basis_len, r.lo_dim, r.hi_dim, r.rank), (4, 2, 8, 8));
        assert!(r.free && r.mackey_holds);
        assert_eq!(ext.bimodule_span_rank().unwrap(), 4);
        let hi = ext.hi();
        assert!(ext.partial_trace(&hi.one()).unwrap().is_zero());
        assert_eq!(ext.partial_trace(&hi.parse("x2").unwrap()).unwrap(), ext.lo().one());
        assert!(ext.partial_trace(&hi.parse("x1*s1*x1").unwrap()).unwrap().is_zero());

        let ext = Extension::new(params(clifford(), &[&[], &[1]]), 1).unwrap();
        let r = ext.induction_report().unwrap();
        assert_eq!((r.basis_len, r.lo_dim, r.hi_dim), (8, 4, 32));
        assert!(r.free && r.mackey_holds);
    }

    #[test]
    fn extension_from_zero() {
        let ext = Extension::new(params(trivial(), &[&[0]]), 0).unwrap();
        let r = ext.induction_report().unwrap();
        assert_eq!((r.basis_len, r.lo_dim, r.hi_dim), (1, 1, 1));
        assert!(r.free && r.mackey_holds);
        assert_eq!(ext.partial_trace(&ext.hi().one()).unwrap(), ext.lo().one());
    }

    #[test]
    fn partial_trace_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let ext = Extension::new(params(clifford(), &[&[0]]), 1).unwrap();
        let (lo, hi) = (ext.lo(), ext.hi());
        for _ in 0..10 {
            let a = lo.random_elem(&mut rng, 2);
            let b = lo.random_elem(&mut rng, 2);
            let z = hi.random_elem(&mut rng, 3);
            let azb = hi.mul_all(&[&ext.embed(&a).unwrap(), &z, &ext.embed(&b).unwrap()]).unwrap();
            let lhs = ext.partial_trace(&azb).unwrap();
            let rhs = lo.mul_all(&[&a, &ext.partial_trace(&z).unwrap(), &b]).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(hi.trace(&z), lo.trace(&ext.partial_trace(&z).unwrap()));
        }
    }

    #[test]
    fn general_parameters_disable_induction() {
        let k = Arc::new(trivial());
        let c = TensorElem::zero(2);
        let p = Arc::new(CycloParams::general(k, 2, vec![vec![c]]).unwrap());
        assert!(p.is_general());
        assert!(Cyclo::new(p.clone(), 2).is_ok());
        assert_eq!(Cyclo::new(p.clone(), 3).unwrap_err(), Error::ParamsMismatch);
        assert!(Extension::new(p, 1).is_err());
    }

    #[test]
    fn mismatched_params_rejected() {
        let c1 = Cyclo::new(params(trivial(), &[&[0]]), 2).unwrap();
        let c2 = Cyclo::new(params(trivial(), &[&[0]]), 2).unwrap();
        assert_eq!(c1.mul(&c1.one(), &c2.one()).unwrap_err(), Error::ParamsMismatch);
    }
}
