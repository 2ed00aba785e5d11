//! Permutations in one-line notation, Bruhat order and double cosets of Young subgroups.
//!
//! Composition is composition of functions on positions: `(πσ)(i) = π(σ(i))`.
//! With this convention `^{πσ}𝐟 = ^π(^σ𝐟)` where `^π` moves the tensor factor in
//! slot i to slot π(i).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// One-line notation, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(v: &[usize]) -> Result<Perm> {
        let n = v.len();
        let mut seen = vec![false; n];
        for &x in v {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Parse(format!("{:?} is not a permutation", v)));
            }
            seen[x - 1] = true;
        }
        Ok(Perm(v.iter().map(|&x| (x - 1) as u8).collect()))
    }

    /// From 0-based images.
    pub fn from_images0(v: Vec<u8>) -> Perm {
        Perm(v)
    }

    /// Simple transposition s_i (1-based i) swapping i and i+1.
    pub fn simple(n: usize, i: usize) -> Perm {
        assert!(i >= 1 && i < n, "s_{} not in S_{}", i, n);
        let mut p = Perm::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    /// Transposition of i and j (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
        let mut p = Perm::identity(n);
        p.0.swap(i - 1, j - 1);
        p
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// 0-based image of a 0-based position.
    pub fn at(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images0(&self) -> &[u8] {
        &self.0
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// self ∘ other.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u8; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x as usize] = i as u8;
        }
        Perm(v)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut c = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.0[i] > self.0[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Whether s_i (1-based) is a right descent: ℓ(π s_i) < ℓ(π).
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// Whether s_i is a left descent: ℓ(s_i π) < ℓ(π).
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i - 1] > inv.0[i]
    }

    /// Reduced word `[i1, …, il]` (1-based) with π = s_{i1} ⋯ s_{il}, by bubble sort.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.0.clone();
        let mut word = Vec::new();
        loop {
            let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) else { break };
            // π = π' s_{i+1} with π' = π s_{i+1}.
            p.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        word
    }

    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        word.iter().fold(Perm::identity(n), |acc, &i| acc.compose(&Perm::simple(n, i)))
    }

    /// The longest element w₀.
    pub fn longest(n: usize) -> Perm {
        Perm((0..n as u8).rev().collect())
    }

    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        permute(&mut cur, 0, &mut out);
        out.sort();
        out
    }

    pub fn parse(s: &str) -> Result<Perm> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("bad permutation '{}'", s)))?;
        if inner.trim().is_empty() {
            return Ok(Perm(vec![]));
        }
        let v: std::result::Result<Vec<usize>, _> = inner.split(',').map(|x| x.trim().parse::<usize>()).collect();
        Perm::from_one_line(&v.map_err(|_| Error::Parse(format!("bad permutation '{}'", s)))?)
    }
}

fn permute(cur: &mut Vec<u8>, k: usize, out: &mut Vec<Perm>) {
    if k == cur.len() {
        out.push(Perm(cur.clone()));
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, out);
        cur.swap(k, i);
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Strong Bruhat order σ ≤ π via the lifting recursion on right descents,
/// equivalent to the subword criterion on reduced words.
pub fn bruhat_leq(sigma: &Perm, pi: &Perm) -> Result<bool> {
    if sigma.n() != pi.n() {
        return Err(Error::SizeMismatch(sigma.n(), pi.n()));
    }
    Ok(bruhat_rec(sigma.clone(), pi.clone()))
}

fn bruhat_rec(sigma: Perm, pi: Perm) -> bool {
    if sigma.is_identity() {
        return true;
    }
    if pi.is_identity() || sigma.length() > pi.length() {
        return false;
    }
    let n = pi.n();
    let i = (1..n).find(|&i| pi.has_right_descent(i)).unwrap();
    let s = Perm::simple(n, i);
    let pi2 = pi.compose(&s);
    if sigma.has_right_descent(i) {
        bruhat_rec(sigma.compose(&s), pi2)
    } else {
        bruhat_rec(sigma, pi2)
    }
}

pub type Composition = Vec<usize>;

pub fn parse_composition(s: &str) -> Result<Composition> {
    let t = s.trim();
    let inner =
        t.strip_prefix('[').and_then(|x| x.strip_suffix(']')).ok_or_else(|| Error::Parse(format!("bad composition '{}'", s)))?;
    inner.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad composition '{}'", s)))).collect()
}

pub fn format_composition(c: &[usize]) -> String {
    let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// All compositions of n with positive parts.
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn check_composition(c: &[usize], n: usize) -> Result<()> {
    if c.iter().sum::<usize>() != n || c.iter().any(|&x| x == 0) {
        return Err(Error::BadComposition(format!("{} is not a composition of {}", format_composition(c), n)));
    }
    Ok(())
}

/// Block index of each (0-based) position.
pub fn block_of(c: &[usize]) -> Vec<usize> {
    c.iter().enumerate().flat_map(|(b, &len)| std::iter::repeat_n(b, len)).collect()
}

/// Simple reflections (1-based) generating S_μ.
pub fn young_generators(c: &[usize]) -> Vec<usize> {
    let b = block_of(c);
    (1..b.len()).filter(|&i| b[i - 1] == b[i]).collect()
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn young_order(c: &[usize]) -> u128 {
    c.iter().map(|&x| factorial(x)).product()
}

/// All elements of the Young subgroup S_μ.
pub fn young_subgroup(c: &[usize]) -> Vec<Perm> {
    let n: usize = c.iter().sum();
    let b = block_of(c);
    Perm::all(n).into_iter().filter(|p| (0..n).all(|i| b[p.at(i)] == b[i])).collect()
}

/// Composition recording consecutive runs of equal labels; None if a label recurs non-consecutively.
fn runs(labels: &[(usize, usize)]) -> Option<Composition> {
    let mut out: Composition = Vec::new();
    let mut seen = BTreeSet::new();
    let mut prev: Option<(usize, usize)> = None;
    for &l in labels {
        if Some(l) == prev {
            *out.last_mut().unwrap() += 1;
        } else {
            if !seen.insert(l) {
                return None;
            }
            out.push(1);
            prev = Some(l);
        }
    }
    Some(out)
}

/// A minimal double-coset representative with its intersection compositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    pub rep: Perm,
    /// μ ∩ πν: S_μ ∩ π S_ν π⁻¹ = S_{μ∩πν}.
    pub mu_cap_pi_nu: Composition,
    /// π⁻¹μ ∩ ν: π⁻¹ S_μ π ∩ S_ν.
    pub pi_inv_mu_cap_nu: Composition,
    pub size: u128,
}

/// D_{μ,ν} by exhaustive minimal-length filtering over S_n.
pub fn min_double_cosets(mu: &[usize], nu: &[usize]) -> Result<Vec<DoubleCoset>> {
    let n: usize = mu.iter().sum();
    check_composition(mu, n)?;
    check_composition(nu, n)?;
    if n > 8 {
        return Err(Error::BadComposition("double cosets are enumerated only for n <= 8".into()));
    }
    let smu = young_subgroup(mu);
    let snu = young_subgroup(nu);
    let mut perms = Perm::all(n);
    perms.sort_by_key(|p| (p.length(), p.clone()));
    let mut visited: BTreeSet<Perm> = BTreeSet::new();
    let bm = block_of(mu);
    let bn = block_of(nu);
    let mut out = Vec::new();
    for p in perms {
        if visited.contains(&p) {
            continue;
        }
        let mut coset = BTreeSet::new();
        for a in &smu {
            let ap = a.compose(&p);
            for b in &snu {
                coset.insert(ap.compose(b));
            }
        }
        let pinv = p.inverse();
        let left: Vec<(usize, usize)> = (0..n).map(|i| (bm[i], bn[pinv.at(i)])).collect();
        let right: Vec<(usize, usize)> = (0..n).map(|j| (bm[p.at(j)], bn[j])).collect();
        let mu_cap = runs(&left).ok_or_else(|| Error::BadComposition("intersection is not a Young subgroup".into()))?;
        let cap_nu = runs(&right).ok_or_else(|| Error::BadComposition("intersection is not a Young subgroup".into()))?;
        out.push(DoubleCoset { rep: p, mu_cap_pi_nu: mu_cap, pi_inv_mu_cap_nu: cap_nu, size: coset.len() as u128 });
        visited.extend(coset);
    }
    out.sort_by(|a, b| a.rep.cmp(&b.rep));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Perm {
        Perm::from_one_line(v).unwrap()
    }

    /// Subword oracle: σ ≤ π iff σ is the product of some subword of a reduced word of π.
    fn subword_oracle(sigma: &Perm, pi: &Perm) -> bool {
        let w = pi.reduced_word();
        (0..1u32 << w.len()).any(|mask| {
            let sub: Vec<usize> = w.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &i)| i).collect();
            Perm::from_word(pi.n(), &sub) == *sigma
        })
    }

    #[test]
    fn reduced_word_recovers_permutation() {
        for n in 0..=5 {
            for q in Perm::all(n) {
                let w = q.reduced_word();
                assert_eq!(w.len(), q.length());
                assert_eq!(Perm::from_word(n, &w), q);
            }
        }
    }

    #[test]
    fn s1s2_one_line() {
        let s1s2 = Perm::simple(3, 1).compose(&Perm::simple(3, 2));
        assert_eq!(s1s2, p(&[2, 3, 1]));
    }

    #[test]
    fn bruhat_examples() {
        let id = Perm::identity(3);
        for q in Perm::all(3) {
            assert!(bruhat_leq(&id, &q).unwrap());
        }
        let s1 = Perm::simple(3, 1);
        let w0 = Perm::from_word(3, &[1, 2, 1]);
        assert!(bruhat_leq(&s1, &w0).unwrap());
    }

    #[test]
    fn bruhat_matches_subword_oracle_on_s3_and_s4() {
        for n in [3, 4] {
            let all = Perm::all(n);
            let mut count = 0;
            for a in &all {
                for b in &all {
                    assert_eq!(bruhat_leq(a, b).unwrap(), subword_oracle(a, b), "{} <= {}", a, b);
                    count += 1;
                }
            }
            if n == 3 {
                assert_eq!(count, 36);
            }
        }
    }

    #[test]
    fn bruhat_s3_relation_count() {
        // 19 related pairs in S3: 6 with id, plus 13 among the rest.
        let all = Perm::all(3);
        let related = all.iter().flat_map(|a| all.iter().map(move |b| (a, b))).filter(|(a, b)| subword_oracle(a, b)).count();
        assert_eq!(related, 19);
        let ours = all.iter().flat_map(|a| all.iter().map(move |b| (a, b))).filter(|(a, b)| bruhat_leq(a, b).unwrap()).count();
        assert_eq!(ours, related);
    }

    #[test]
    fn bruhat_is_partial_order_on_s4() {
        let all = Perm::all(4);
        for a in &all {
            assert!(bruhat_leq(a, a).unwrap());
            for b in &all {
                if a != b && bruhat_leq(a, b).unwrap() {
                    assert!(!bruhat_leq(b, a).unwrap());
                    for c in &all {
                        if bruhat_leq(b, c).unwrap() {
                            assert!(bruhat_leq(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn double_cosets_examples() {
        let d = min_double_cosets(&[3], &[3]).unwrap();
        assert_eq!(d.len(), 1);
        assert!(d[0].rep.is_identity());
        let d = min_double_cosets(&[1, 1], &[1, 1]).unwrap();
        assert_eq!(d.iter().map(|c| c.rep.clone()).collect::<Vec<_>>(), vec![p(&[1, 2]), p(&[2, 1])]);
    }

    /// Brute-force oracle: partition S_n into double cosets, take the minimum-length element of each.
    fn brute_double_cosets(mu: &[usize], nu: &[usize]) -> Vec<Perm> {
        let n: usize = mu.iter().sum();
        let smu = young_subgroup(mu);
        let snu = young_subgroup(nu);
        let mut reps = BTreeSet::new();
        for q in Perm::all(n) {
            let aq: Vec<Perm> = smu.iter().map(|a| a.compose(&q)).collect();
            let coset: Vec<Perm> = aq.iter().flat_map(|x| snu.iter().map(move |b| x.compose(b))).collect();
            let min = coset.iter().min_by_key(|x| (x.length(), (*x).clone())).unwrap().clone();
            reps.insert(min);
        }
        reps.into_iter().collect()
    }

    #[test]
    fn double_cosets_21_12_match_brute_force() {
        let d = min_double_cosets(&[2, 1], &[1, 2]).unwrap();
        let reps: Vec<Perm> = d.iter().map(|c| c.rep.clone()).collect();
        assert_eq!(reps, brute_double_cosets(&[2, 1], &[1, 2]));
        assert_eq!(reps.len(), 2);
    }

    #[test]
    fn double_coset_structure_for_small_n() {
        for n in 1..=4 {
            for mu in compositions(n) {
                for nu in compositions(n) {
                    let d = min_double_cosets(&mu, &nu).unwrap();
                    let reps: Vec<Perm> = d.iter().map(|c| c.rep.clone()).collect();
                    assert_eq!(reps, brute_double_cosets(&mu, &nu));
                    let total: u128 = d.iter().map(|c| young_order(&mu) * young_order(&nu) / young_order(&c.mu_cap_pi_nu)).sum();
                    assert_eq!(total, factorial(n));
                    for c in &d {
                        assert_eq!(c.size, young_order(&mu) * young_order(&nu) / young_order(&c.mu_cap_pi_nu));
                        let inv = c.rep.inverse();
                        for i in young_generators(&c.mu_cap_pi_nu) {
                            assert_eq!(inv.at(i), inv.at(i - 1) + 1);
                            // π⁻¹ s_i π = s_{π⁻¹(i)}
                            let conj = inv.compose(&Perm::simple(n, i)).compose(&c.rep);
                            assert_eq!(conj, Perm::simple(n, inv.at(i - 1) + 1));
                        }
                        // S_μ ∩ π S_ν π⁻¹ as sets
                        let lhs: BTreeSet<Perm> = young_subgroup(&mu)
                            .into_iter()
                            .filter(|x| young_subgroup(&nu).contains(&inv.compose(x).compose(&c.rep)))
                            .collect();
                        let rhs: BTreeSet<Perm> = young_subgroup(&c.mu_cap_pi_nu).into_iter().collect();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn bad_composition() {
        assert!(matches!(min_double_cosets(&[2, 1], &[2]), Err(Error::BadComposition(_))));
    }

    proptest! {
        #[test]
        fn inverse_and_length(v in Just((0..6u8).collect::<Vec<_>>()).prop_shuffle()) {
            let q = Perm::from_images0(v);
            prop_assert!(q.compose(&q.inverse()).is_identity());
            prop_assert_eq!(q.length(), q.inverse().length());
            prop_assert_eq!(Perm::parse(&q.to_string()).unwrap(), q);
        }
    }
}
