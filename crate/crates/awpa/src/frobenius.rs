//! Graded Frobenius superalgebras given by structure constants.
//!
//! Conventions: `mult[i][j]` is the sparse expansion of `b_i b_j`; the
//! Nakayama automorphism ψ satisfies `tr(fg) = (-1)^{f̄ḡ} tr(g ψ(f))`; the left
//! dual basis satisfies `tr(b_i^∨ b_j) = δ_ij`. Matrices of linear maps act on
//! row vectors: `ψ(b_i) = Σ_k Ψ[i][k] b_k`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::{lcm, root_of_unity, CycScalar};

/// Sparse element of F: sorted (basis index, nonzero coefficient) pairs.
pub type FVec = Vec<(usize, CycScalar)>;

pub const DEFAULT_THETA_BOUND: u32 = 64;

/// Dense coordinate vector of an element of F.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElem(pub Vec<CycScalar>);

impl AlgElem {
    pub fn zero(dim: usize) -> Self {
        AlgElem(vec![CycScalar::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = CycScalar::one();
        v
    }

    pub fn from_fvec(dim: usize, f: &FVec) -> Self {
        let mut v = Self::zero(dim);
        for (i, c) in f {
            v.0[*i] = c.clone();
        }
        v
    }

    pub fn to_fvec(&self) -> FVec {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &AlgElem) -> AlgElem {
        AlgElem(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &AlgElem) -> AlgElem {
        AlgElem(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &CycScalar) -> AlgElem {
        AlgElem(self.0.iter().map(|a| a * s).collect())
    }
}

#[derive(Clone, Debug)]
pub struct FrobAlg {
    pub name: String,
    conductor: u32,
    labels: Vec<String>,
    degree: Vec<u32>,
    parity: Vec<u8>,
    mult: Vec<Vec<FVec>>,
    unit: Vec<CycScalar>,
    trace: Vec<CycScalar>,
    gram: Matrix,
    dual: Vec<FVec>,
    /// `psi_pows[k][i]` = ψ^k(b_i) for 0 ≤ k < θ.
    psi_pows: Vec<Vec<FVec>>,
    theta: u32,
    delta: u32,
    /// Homogeneous ψ-eigenvectors with exponent e: ψ(v) = ζ_θ^e v.
    eigen: Vec<(FVec, u32)>,
}

/// Raw description accepted by [`FrobAlg::new`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawAlgebra {
    pub name: String,
    pub conductor: u32,
    pub labels: Vec<String>,
    pub degree: Vec<u32>,
    pub parity: Vec<u8>,
    /// Dense cube: `consts[i][j][k]` is the coefficient of b_k in b_i b_j.
    pub consts: Vec<Vec<Vec<CycScalar>>>,
    pub unit: Vec<CycScalar>,
    pub trace: Vec<CycScalar>,
}

fn sparse(v: &[CycScalar]) -> FVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

fn row_to_fvec(row: &[CycScalar]) -> FVec {
    sparse(row)
}

impl FrobAlg {
    pub fn new(raw: RawAlgebra) -> Result<FrobAlg> {
        Self::with_theta_bound(raw, DEFAULT_THETA_BOUND)
    }

    pub fn with_theta_bound(raw: RawAlgebra, theta_bound: u32) -> Result<FrobAlg> {
        let d = raw.labels.len();
        if d == 0 {
            return Err(Error::DimensionMismatch("empty basis".into()));
        }
        let dims_ok = raw.degree.len() == d
            && raw.parity.len() == d
            && raw.unit.len() == d
            && raw.trace.len() == d
            && raw.consts.len() == d
            && raw.consts.iter().all(|m| m.len() == d && m.iter().all(|v| v.len() == d));
        if !dims_ok {
            return Err(Error::DimensionMismatch(format!("basis has {} elements", d)));
        }
        if raw.parity.iter().any(|&p| p > 1) {
            return Err(Error::GradingViolation("parity must be 0 or 1".into()));
        }
        let mult: Vec<Vec<FVec>> = raw.consts.iter().map(|m| m.iter().map(|v| sparse(v)).collect()).collect();
        let mut alg = FrobAlg {
            name: raw.name.clone(),
            conductor: raw.conductor.max(1),
            labels: raw.labels.clone(),
            degree: raw.degree.clone(),
            parity: raw.parity.clone(),
            mult,
            unit: raw.unit.clone(),
            trace: raw.trace.clone(),
            gram: vec![],
            dual: vec![],
            psi_pows: vec![],
            theta: 1,
            delta: 0,
            eigen: vec![],
        };
        alg.check_grading()?;
        alg.check_unit()?;
        alg.check_associative()?;
        alg.delta = *alg.degree.iter().max().unwrap();
        for i in 0..d {
            if !alg.trace[i].is_zero() && (alg.degree[i] != alg.delta || alg.parity[i] != 0) {
                return Err(Error::GradingViolation(format!(
                    "trace is nonzero on {} which is not even of top degree {}",
                    alg.labels[i], alg.delta
                )));
            }
        }
        alg.derive(theta_bound)?;
        Ok(alg)
    }

    fn check_grading(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for (k, _) in &self.mult[i][j] {
                    if self.degree[*k] != self.degree[i] + self.degree[j]
                        || self.parity[*k] != (self.parity[i] + self.parity[j]) % 2
                    {
                        return Err(Error::GradingViolation(format!(
                            "{}*{} has a component along {}",
                            self.labels[i], self.labels[j], self.labels[*k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<()> {
        let d = self.dim();
        let u = AlgElem(self.unit.clone());
        for i in 0..d {
            let b = AlgElem::basis(d, i);
            if self.mul_elems(&u, &b) != b || self.mul_elems(&b, &u) != b {
                return Err(Error::NoUnit);
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let bi = AlgElem::basis(d, i);
                    let bj = AlgElem::basis(d, j);
                    let bk = AlgElem::basis(d, k);
                    let l = self.mul_elems(&self.mul_elems(&bi, &bj), &bk);
                    let r = self.mul_elems(&bi, &self.mul_elems(&bj, &bk));
                    if l != r {
                        return Err(Error::NotAssociative(
                            self.labels[i].clone(),
                            self.labels[j].clone(),
                            self.labels[k].clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn derive(&mut self, theta_bound: u32) -> Result<()> {
        let d = self.dim();
        let gram: Matrix = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut acc = CycScalar::zero();
                        for (k, c) in &self.mult[i][j] {
                            acc += &(c * &self.trace[*k]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let ginv = linalg::inverse(&gram).ok_or(Error::DegenerateTrace)?;
        let signed: Matrix = (0..d)
            .map(|i| {
                (0..d).map(|j| if self.parity[i] * self.parity[j] == 1 { -&gram[i][j] } else { gram[i][j].clone() }).collect()
            })
            .collect();
        let gtinv = linalg::inverse(&linalg::transpose(&gram)).ok_or(Error::DegenerateTrace)?;
        let psi = linalg::mat_mul(&signed, &gtinv);
        let id = linalg::identity(d);
        let mut pows: Vec<Matrix> = vec![id.clone()];
        let mut theta = 0;
        let mut cur = psi.clone();
        for t in 1..=theta_bound {
            if cur == id {
                theta = t;
                break;
            }
            pows.push(cur.clone());
            cur = linalg::mat_mul(&cur, &psi);
        }
        if theta == 0 {
            return Err(Error::NakayamaInfiniteOrder(theta_bound));
        }
        let m = lcm(self.conductor, theta);
        let m = self.scalars_conductor().into_iter().fold(m, lcm);
        let m = crate::scalar::canonical_conductor(m);
        self.conductor = m;
        let emb = |s: &CycScalar| s.embed(m);
        let emb_fv = |f: &FVec| f.iter().map(|(i, c)| (*i, emb(c))).collect::<FVec>();
        self.mult = self.mult.iter().map(|r| r.iter().map(emb_fv).collect()).collect();
        self.unit = self.unit.iter().map(emb).collect();
        self.trace = self.trace.iter().map(emb).collect();
        self.gram = gram.iter().map(|r| r.iter().map(emb).collect()).collect();
        self.dual = ginv.iter().map(|r| emb_fv(&row_to_fvec(r))).collect();
        self.psi_pows = pows.iter().map(|p| p.iter().map(|r| emb_fv(&row_to_fvec(r))).collect()).collect();
        self.theta = theta;
        self.eigen = self.eigenbasis(&psi)?;
        Ok(())
    }

    fn scalars_conductor(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.unit.iter().chain(self.trace.iter()).map(|s| s.conductor()).collect();
        for r in &self.mult {
            for f in r {
                out.extend(f.iter().map(|(_, c)| c.conductor()));
            }
        }
        out
    }

    fn eigenbasis(&self, psi: &Matrix) -> Result<Vec<(FVec, u32)>> {
        let d = self.dim();
        let mut blocks: BTreeMap<(u32, u8), Vec<usize>> = BTreeMap::new();
        for i in 0..d {
            blocks.entry((self.degree[i], self.parity[i])).or_default().push(i);
        }
        let mut out = Vec::new();
        for idx in blocks.values() {
            for &i in idx {
                for (k, c) in psi[i].iter().enumerate() {
                    if !c.is_zero() && !idx.contains(&k) {
                        return Err(Error::GradingViolation("Nakayama automorphism is not homogeneous".into()));
                    }
                }
            }
            let mut found = 0;
            for e in 0..self.theta {
                let w = root_of_unity(self.theta, e as i64).embed(self.conductor);
                // (Ψ^T - ω I) restricted to the block.
                let a: Matrix = idx
                    .iter()
                    .map(|&r| {
                        idx.iter()
                            .map(|&c| {
                                let v = psi[c][r].embed(self.conductor);
                                if r == c {
                                    &v - &w
                                } else {
                                    v
                                }
                            })
                            .collect()
                    })
                    .collect();
                for v in linalg::nullspace(&a, idx.len()) {
                    let f: FVec = idx.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(&i, c)| (i, c)).collect();
                    out.push((f, e));
                    found += 1;
                }
            }
            if found != idx.len() {
                return Err(Error::NakayamaNotDiagonalizable);
            }
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn conductor(&self) -> u32 {
        self.conductor
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
    pub fn degree(&self, i: usize) -> u32 {
        self.degree[i]
    }
    pub fn degrees(&self) -> &[u32] {
        &self.degree
    }
    pub fn parity(&self, i: usize) -> u8 {
        self.parity[i]
    }
    pub fn parities(&self) -> &[u8] {
        &self.parity
    }
    pub fn theta(&self) -> u32 {
        self.theta
    }
    pub fn delta(&self) -> u32 {
        self.delta
    }
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }
    pub fn trace_vec(&self) -> &[CycScalar] {
        &self.trace
    }
    pub fn unit(&self) -> AlgElem {
        AlgElem(self.unit.clone())
    }
    pub fn eigenbasis_vectors(&self) -> &[(FVec, u32)] {
        &self.eigen
    }

    /// Index of the basis element equal to 1, if the unit is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        let f = sparse(&self.unit);
        if f.len() == 1 && f[0].1.is_one() {
            Some(f[0].0)
        } else {
            None
        }
    }

    pub fn one_scalar(&self) -> CycScalar {
        CycScalar::one().embed(self.conductor)
    }

    pub fn zero_scalar(&self) -> CycScalar {
        CycScalar::zero_in(self.conductor)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &FVec {
        &self.mult[i][j]
    }

    /// Structure constant: coefficient of b_k in b_i b_j.
    pub fn struct_const(&self, i: usize, j: usize, k: usize) -> CycScalar {
        self.mult[i][j].iter().find(|(x, _)| *x == k).map(|(_, c)| c.clone()).unwrap_or_else(|| self.zero_scalar())
    }

    pub fn dual_basis_elem(&self, i: usize) -> &FVec {
        &self.dual[i]
    }

    pub fn dual_basis(&self) -> Vec<AlgElem> {
        (0..self.dim()).map(|i| AlgElem::from_fvec(self.dim(), &self.dual[i])).collect()
    }

    /// ψ^k(b_i) for any integer k.
    pub fn psi_basis(&self, k: i64, i: usize) -> &FVec {
        let e = k.rem_euclid(self.theta as i64) as usize;
        &self.psi_pows[e][i]
    }

    pub fn psi_pow(&self, k: i64, f: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero(self.dim());
        for (i, c) in f.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, x) in self.psi_basis(k, i) {
                out.0[*j] += &(c * x);
            }
        }
        out
    }

    /// Matrix of ψ^k in the row-vector convention.
    pub fn psi_matrix(&self, k: i64) -> Matrix {
        let d = self.dim();
        (0..d).map(|i| AlgElem::from_fvec(d, self.psi_basis(k, i)).0).collect()
    }

    pub fn mul_elems(&self, u: &AlgElem, v: &AlgElem) -> AlgElem {
        let d = self.dim();
        let mut out = AlgElem::zero(d);
        for (i, a) in u.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.mult[i][j] {
                    out.0[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Product with dimension check.
    pub fn mul(&self, u: &AlgElem, v: &AlgElem) -> Result<AlgElem> {
        if u.0.len() != self.dim() || v.0.len() != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.mul_elems(u, v))
    }

    pub fn tr(&self, f: &AlgElem) -> CycScalar {
        let mut acc = self.zero_scalar();
        for (a, t) in f.0.iter().zip(&self.trace) {
            if !a.is_zero() && !t.is_zero() {
                acc += &(a * t);
            }
        }
        acc
    }

    /// (degree, parity) if `f` is homogeneous and nonzero.
    pub fn homogeneous_type(&self, f: &AlgElem) -> Option<(u32, u8)> {
        let mut ty = None;
        for (i, c) in f.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = (self.degree[i], self.parity[i]);
            match ty {
                None => ty = Some(t),
                Some(u) if u != t => return None,
                _ => {}
            }
        }
        ty
    }

    /// Left dual basis of an arbitrary basis `c`: `tr(c_i^∨ c_j) = δ_ij`.
    pub fn left_dual_of(&self, c: &[AlgElem]) -> Option<Vec<AlgElem>> {
        let d = self.dim();
        if c.len() != d {
            return None;
        }
        let cm: Matrix = c.iter().map(|e| e.0.clone()).collect();
        let x = linalg::inverse(&linalg::mat_mul(&self.gram, &linalg::transpose(&cm)))?;
        Some(x.into_iter().map(AlgElem).collect())
    }

    /// Basis of F^{(k)} (or F_ψ^{(k)} when `fixed_only`), homogeneous elements.
    pub fn graded_piece(&self, k: i64, fixed_only: bool) -> Vec<AlgElem> {
        let d = self.dim();
        let mut blocks: BTreeMap<(u32, u8), Vec<usize>> = BTreeMap::new();
        for i in 0..d {
            blocks.entry((self.degree[i], self.parity[i])).or_default().push(i);
        }
        let mut out = Vec::new();
        for (&(_, p), idx) in &blocks {
            let mut rows: Matrix = Vec::new();
            for g in 0..d {
                let sign = if p * self.parity[g] == 1 { -self.one_scalar() } else { self.one_scalar() };
                let pg = AlgElem::from_fvec(d, self.psi_basis(k, g));
                let bg = AlgElem::basis(d, g);
                let cols: Vec<AlgElem> = idx
                    .iter()
                    .map(|&i| {
                        let bi = AlgElem::basis(d, i);
                        self.mul_elems(&bg, &bi).sub(&self.mul_elems(&bi, &pg).scale(&sign))
                    })
                    .collect();
                for r in 0..d {
                    rows.push(cols.iter().map(|c| c.0[r].clone()).collect());
                }
            }
            if fixed_only {
                let cols: Vec<AlgElem> =
                    idx.iter().map(|&i| AlgElem::from_fvec(d, self.psi_basis(1, i)).sub(&AlgElem::basis(d, i))).collect();
                for r in 0..d {
                    rows.push(cols.iter().map(|c| c.0[r].clone()).collect());
                }
            }
            for v in linalg::nullspace(&rows, idx.len()) {
                let mut e = AlgElem::zero(d);
                for (&i, c) in idx.iter().zip(v) {
                    e.0[i] = c;
                }
                out.push(e);
            }
        }
        out
    }

    /// Whether `f` lies in F^{(k)} (resp. F_ψ^{(k)}).
    pub fn in_graded_piece(&self, f: &AlgElem, k: i64, fixed_only: bool) -> bool {
        let d = self.dim();
        if fixed_only && self.psi_pow(1, f) != *f {
            return false;
        }
        for p in 0..2u8 {
            let part = AlgElem(
                f.0.iter().enumerate().map(|(i, c)| if self.parity[i] == p { c.clone() } else { self.zero_scalar() }).collect(),
            );
            if part.is_zero() {
                continue;
            }
            for g in 0..d {
                let bg = AlgElem::basis(d, g);
                let pg = AlgElem::from_fvec(d, self.psi_basis(k, g));
                let lhs = self.mul_elems(&bg, &part);
                let mut rhs = self.mul_elems(&part, &pg);
                if p * self.parity[g] == 1 {
                    rhs = rhs.scale(&-self.one_scalar());
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Supercenter Z(F) = F^{(0)}.
    pub fn center(&self) -> Vec<AlgElem> {
        self.graded_piece(0, false)
    }

    /// F^op with product `a·b = (-1)^{āb̄} ba` and the same trace.
    pub fn opposite(&self) -> Result<FrobAlg> {
        let d = self.dim();
        let consts = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut v = vec![self.zero_scalar(); d];
                        for (k, c) in &self.mult[j][i] {
                            v[*k] = if self.parity[i] * self.parity[j] == 1 { -c } else { c.clone() };
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        FrobAlg::new(RawAlgebra {
            name: format!("{}^op", self.name),
            conductor: self.conductor,
            labels: self.labels.clone(),
            degree: self.degree.clone(),
            parity: self.parity.clone(),
            consts,
            unit: self.unit.clone(),
            trace: self.trace.clone(),
        })
    }

    /// Same algebra with trace `f ↦ tr(f u)`.
    pub fn with_trace_twist(&self, u: &AlgElem) -> Result<FrobAlg> {
        let d = self.dim();
        let trace: Vec<CycScalar> = (0..d).map(|i| self.tr(&self.mul_elems(&AlgElem::basis(d, i), u))).collect();
        let mut raw = self.to_raw();
        raw.name = format!("{}[tr*u]", self.name);
        raw.trace = trace;
        FrobAlg::new(raw)
    }

    pub fn to_raw(&self) -> RawAlgebra {
        let d = self.dim();
        RawAlgebra {
            name: self.name.clone(),
            conductor: self.conductor,
            labels: self.labels.clone(),
            degree: self.degree.clone(),
            parity: self.parity.clone(),
            consts: (0..d).map(|i| (0..d).map(|j| AlgElem::from_fvec(d, &self.mult[i][j]).0).collect()).collect(),
            unit: self.unit.clone(),
            trace: self.trace.clone(),
        }
    }

    pub fn format_elem(&self, f: &AlgElem) -> String {
        let mut out = String::new();
        for (i, c) in f.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.format_in(self.conductor);
            let (neg, coef) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ if cs.contains(' ') => (false, format!("({})", cs)),
                _ => (false, cs),
            };
            let term = if coef == "1" { self.labels[i].clone() } else { format!("{}*{}", coef, self.labels[i]) };
            let sep = match (out.is_empty(), neg) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            out.push_str(sep);
            out.push_str(&term);
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    /// Parse sums of products of scalars and basis labels, e.g. `1/2*c - (1 + z)*y*g`.
    pub fn parse_elem(&self, s: &str) -> Result<AlgElem> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut out = AlgElem::zero(self.dim());
        for (neg, term) in crate::awpa::split_terms(t)? {
            let mut acc = self.unit();
            for fac in crate::awpa::split_top(&term, '*') {
                let v = self.parse_factor(fac.trim())?;
                acc = self.mul_elems(&acc, &v);
            }
            out = if neg { out.sub(&acc) } else { out.add(&acc) };
        }
        Ok(out)
    }

    fn parse_factor(&self, f: &str) -> Result<AlgElem> {
        if let Some(i) = self.index_of(f) {
            return Ok(AlgElem::basis(self.dim(), i));
        }
        if let Some(inner) = f.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
            return self.parse_elem(inner);
        }
        let m = self.conductor;
        let c = if f == "z" {
            root_of_unity(m, 1)
        } else if let Some(e) = f.strip_prefix("z^") {
            root_of_unity(m, e.parse::<i64>().map_err(|_| Error::Parse(format!("bad factor '{}'", f)))?)
        } else if f.starts_with(|c: char| c.is_ascii_digit()) {
            CycScalar::parse(f, m)?
        } else {
            return Err(Error::Parse(format!("unknown basis label '{}'", f)));
        };
        Ok(self.unit().scale(&c))
    }
}

/// Outcome of [`check_frobenius_morphism`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismVerdict {
    pub valid: bool,
    pub parity_preserving: bool,
    pub multiplicative: bool,
    pub unital: bool,
    pub trace_preserving: bool,
    /// ξψ = ψ'ξ (hom) or τψ = ψ^{-1}τ (anti); checked for valid bijections.
    pub nakayama_compatible: Option<bool>,
    /// τ(b^∨)^∨ = (-1)^{b̄} τ(b); checked for valid anti-isomorphisms.
    pub dual_identity: Option<bool>,
    pub failure: Option<String>,
}

/// Check whether `map` (rows: images of the basis of F in G) is a Frobenius
/// homomorphism F → G, or with `anti` a homomorphism F → G^op.
pub fn check_frobenius_morphism(f: &FrobAlg, g: &FrobAlg, map: &Matrix, anti: bool) -> Result<MorphismVerdict> {
    let (df, dg) = (f.dim(), g.dim());
    if map.len() != df || map.iter().any(|r| r.len() != dg) {
        return Err(Error::DimensionMismatch(format!("expected a {}x{} matrix", df, dg)));
    }
    let img = |e: &AlgElem| -> AlgElem {
        let mut out = AlgElem::zero(dg);
        for (i, c) in e.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, x) in map[i].iter().enumerate() {
                if !x.is_zero() {
                    out.0[j] += &(c * x);
                }
            }
        }
        out
    };
    let mut v = MorphismVerdict {
        valid: false,
        parity_preserving: true,
        multiplicative: true,
        unital: true,
        trace_preserving: true,
        nakayama_compatible: None,
        dual_identity: None,
        failure: None,
    };
    let basis = |i: usize| AlgElem::basis(df, i);
    for i in 0..df {
        let im = img(&basis(i));
        if !im.is_zero() && g.homogeneous_type(&im).map(|t| t.1) != Some(f.parity(i)) {
            v.parity_preserving = false;
            v.failure.get_or_insert(format!("image of {} is not of parity {}", f.label(i), f.parity(i)));
        }
    }
    'outer: for i in 0..df {
        for j in 0..df {
            let lhs = img(&f.mul_elems(&basis(i), &basis(j)));
            let rhs = if anti {
                let r = g.mul_elems(&img(&basis(j)), &img(&basis(i)));
                if f.parity(i) * f.parity(j) == 1 {
                    r.scale(&-g.one_scalar())
                } else {
                    r
                }
            } else {
                g.mul_elems(&img(&basis(i)), &img(&basis(j)))
            };
            if lhs != rhs {
                v.multiplicative = false;
                v.failure.get_or_insert(format!(
                    "map fails {}multiplicativity on ({}, {})",
                    if anti { "anti-" } else { "" },
                    f.label(i),
                    f.label(j)
                ));
                break 'outer;
            }
        }
    }
    if img(&f.unit()) != g.unit() {
        v.unital = false;
        v.failure.get_or_insert("map does not send 1 to 1".into());
    }
    for i in 0..df {
        if f.tr(&basis(i)) != g.tr(&img(&basis(i))) {
            v.trace_preserving = false;
            v.failure.get_or_insert(format!("trace not preserved on {}", f.label(i)));
            break;
        }
    }
    v.valid = v.parity_preserving && v.multiplicative && v.unital && v.trace_preserving;
    let bijective = df == dg && linalg::rank(map) == df;
    if v.valid && bijective {
        if anti {
            // Here G = F as vector spaces, τψ = ψ^{-1}τ.
            let ok = (0..df).all(|i| img(&f.psi_pow(1, &basis(i))) == g.psi_pow(-1, &img(&basis(i))));
            v.nakayama_compatible = Some(ok);
            let tdual: Vec<AlgElem> = f.dual_basis().iter().map(&img).collect();
            let dd = g.left_dual_of(&tdual);
            let ok = dd.is_some_and(|dd| {
                (0..df).all(|i| {
                    let rhs = img(&basis(i));
                    let rhs = if f.parity(i) == 1 { rhs.scale(&-g.one_scalar()) } else { rhs };
                    dd[i] == rhs
                })
            });
            v.dual_identity = Some(ok);
        } else {
            let ok = (0..df).all(|i| img(&f.psi_pow(1, &basis(i))) == g.psi_pow(1, &img(&basis(i))));
            v.nakayama_compatible = Some(ok);
        }
        if v.nakayama_compatible == Some(false) || v.dual_identity == Some(false) {
            v.valid = false;
            v.failure.get_or_insert("Nakayama or dual-basis compatibility fails".into());
        }
    }
    Ok(v)
}
