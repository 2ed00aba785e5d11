//! Exact elements of the cyclotomic field ℚ(ζ_m).
//!
//! A scalar is stored in the power basis `1, ζ, …, ζ^{φ(m)-1}` reduced modulo
//! the m-th cyclotomic polynomial. Conductors are kept canonical: `m ≡ 2 (mod 4)`
//! is replaced by `m/2`, since ℚ(ζ_{2k}) = ℚ(ζ_k) for odd k. Binary operations
//! on scalars of different conductors embed both into the lcm first.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Canonical conductor: the smallest m' with ℚ(ζ_m) = ℚ(ζ_{m'}) and m' | m.
pub fn canonical_conductor(m: u32) -> u32 {
    assert!(m >= 1, "conductor must be positive");
    if m % 4 == 2 {
        m / 2
    } else {
        m
    }
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

fn cyclo_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (low degree first) of the m-th cyclotomic polynomial.
pub fn cyclotomic_poly(m: u32) -> Arc<Vec<i64>> {
    if let Some(p) = cyclo_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by Φ_d for every proper divisor d.
    let mut num: Vec<i64> = vec![0; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            let den = cyclotomic_poly(d);
            num = poly_div_exact(&num, &den);
        }
    }
    let p = Arc::new(num);
    cyclo_cache().lock().unwrap().insert(m, p.clone());
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut q = vec![0i64; nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Euler totient, equal to the degree of Φ_m.
pub fn phi(m: u32) -> usize {
    cyclotomic_poly(m).len() - 1
}

/// Reduce a polynomial in ζ (low degree first) modulo Φ_m in place.
fn reduce_mod(mut v: Vec<BigRational>, m: u32) -> Vec<BigRational> {
    let p = cyclotomic_poly(m);
    let d = p.len() - 1;
    if v.len() > d {
        for top in (d..v.len()).rev() {
            if v[top].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut v[top], BigRational::zero());
            let shift = top - d;
            for (j, &pj) in p.iter().enumerate().take(d) {
                if pj != 0 {
                    let t = &c * BigRational::from_integer(BigInt::from(pj));
                    v[shift + j] -= t;
                }
            }
        }
        v.truncate(d);
    }
    while v.len() < d {
        v.push(BigRational::zero());
    }
    v
}

#[derive(Clone, Debug)]
pub struct CycScalar {
    m: u32,
    c: Vec<BigRational>,
}

impl CycScalar {
    pub fn zero_in(m: u32) -> Self {
        let m = canonical_conductor(m);
        CycScalar { m, c: vec![BigRational::zero(); phi(m)] }
    }

    pub fn zero() -> Self {
        Self::zero_in(1)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        CycScalar { m: 1, c: vec![r] }
    }

    /// Scalar from power-basis coordinates; any length is accepted and reduced.
    pub fn from_coeffs(m: u32, coeffs: Vec<BigRational>) -> Self {
        let cm = canonical_conductor(m);
        if cm == m {
            return CycScalar { m, c: reduce_mod(coeffs, m) };
        }
        // ζ_{2k} = -ζ_k^{(k+1)/2} for odd k.
        let mut acc = CycScalar::zero_in(cm);
        for (i, a) in coeffs.into_iter().enumerate() {
            if !a.is_zero() {
                acc += &(&root_of_unity(m, i as i64) * &CycScalar::from_rational(a));
            }
        }
        acc
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }

    /// The value as a rational number, if it lies in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Re-express in ℚ(ζ_big); requires the canonical conductor to divide `big`.
    pub fn embed(&self, big: u32) -> CycScalar {
        let big = canonical_conductor(big);
        if big == self.m {
            return self.clone();
        }
        assert!(big % self.m == 0, "conductor {} does not divide {}", self.m, big);
        let step = (big / self.m) as usize;
        let mut v = vec![BigRational::zero(); (self.c.len().max(1) - 1) * step + 1];
        for (k, a) in self.c.iter().enumerate() {
            v[k * step] = a.clone();
        }
        CycScalar { m: big, c: reduce_mod(v, big) }
    }

    fn unify(a: &CycScalar, b: &CycScalar) -> (CycScalar, CycScalar) {
        let m = lcm(a.m, b.m);
        (a.embed(m), b.embed(m))
    }

    pub fn pow(&self, e: u32) -> CycScalar {
        let mut acc = CycScalar::one().embed(self.m);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse by solving `a·x = 1` in the power basis.
    pub fn inv(&self) -> Result<CycScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.c.len() == 1 {
            return Ok(CycScalar { m: self.m, c: vec![self.c[0].recip()] });
        }
        let d = self.c.len();
        // Column k of the matrix is a·ζ^k.
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(d);
        for k in 0..d {
            let z = root_of_unity(self.m, k as i64);
            cols.push((self * &z).c);
        }
        let mut aug: Vec<Vec<BigRational>> = (0..d)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..d).map(|k| cols[k][r].clone()).collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d).find(|&r| !aug[r][col].is_zero()).expect("field element is invertible");
            aug.swap(col, piv);
            let inv = aug[col][col].recip();
            for x in aug[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..d {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for k in col..=d {
                        let t = &f * &aug[col][k];
                        aug[r][k] -= t;
                    }
                }
            }
        }
        Ok(CycScalar { m: self.m, c: aug.into_iter().map(|row| row[d].clone()).collect() })
    }

    pub fn div(&self, other: &CycScalar) -> Result<CycScalar> {
        Ok(self * &other.inv()?)
    }

    /// Render in the power basis of ℚ(ζ_m) with `z` standing for ζ_m.
    pub fn format_in(&self, m: u32) -> String {
        let s = self.embed(lcm(m, self.m));
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (k, a) in s.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            let mag_s = fmt_rat(&mag);
            let body = match k {
                0 => mag_s,
                _ => {
                    let zp = if k == 1 { "z".to_string() } else { format!("z^{}", k) };
                    if mag.is_one() {
                        zp
                    } else {
                        format!("{}*{}", mag_s, zp)
                    }
                }
            };
            parts.push((neg, body));
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (neg, body)) in parts.into_iter().enumerate() {
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }

    /// Parse "p/q", "p/q*z^k + …" with `z` = ζ_m.
    pub fn parse(s: &str, m: u32) -> Result<CycScalar> {
        let bad = || Error::Parse(format!("bad scalar '{}'", s));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        let mut acc = CycScalar::zero_in(m);
        let bytes = t.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                i += 1;
            }
            let term = &t[start..i];
            if term.is_empty() {
                return Err(bad());
            }
            let mut val = CycScalar::from_int(sign);
            for f in term.split('*') {
                let fv = if let Some(rest) = f.strip_prefix('z') {
                    let e: i64 =
                        if rest.is_empty() { 1 } else { rest.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())? };
                    root_of_unity(m, e)
                } else {
                    CycScalar::from_rational(parse_rat(f).ok_or_else(bad)?)
                };
                val = &val * &fv;
            }
            acc += &val;
        }
        Ok(acc.embed(lcm(m, acc.m)))
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<BigRational> {
    let mut it = s.splitn(2, '/');
    let p: BigInt = it.next()?.parse().ok()?;
    let q: BigInt = match it.next() {
        Some(q) => q.parse().ok()?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return None;
    }
    Some(BigRational::new(p, q))
}

/// ζ_m^power in canonical form.
pub fn root_of_unity(m: u32, power: i64) -> CycScalar {
    assert!(m >= 1, "root_of_unity needs m >= 1");
    let e = power.rem_euclid(m as i64) as usize;
    let cm = canonical_conductor(m);
    if cm != m {
        let k = cm as i64;
        let sign = if e % 2 == 0 { 1 } else { -1 };
        return &root_of_unity(cm, e as i64 * (k + 1) / 2) * &CycScalar::from_int(sign);
    }
    let mut v = vec![BigRational::zero(); e + 1];
    v[e] = BigRational::one();
    CycScalar { m, c: reduce_mod(v, m) }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.m == other.m {
            return self.c == other.c;
        }
        let (a, b) = CycScalar::unify(self, other);
        a.c == b.c
    }
}
impl Eq for CycScalar {}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_in(self.m))
    }
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, o: &CycScalar) -> CycScalar {
        if self.m == o.m {
            return CycScalar { m: self.m, c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect() };
        }
        let (a, b) = CycScalar::unify(self, o);
        &a + &b
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, o: &CycScalar) -> CycScalar {
        if self.m == o.m {
            return CycScalar { m: self.m, c: self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect() };
        }
        let (a, b) = CycScalar::unify(self, o);
        &a - &b
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, o: &CycScalar) -> CycScalar {
        if self.m == o.m {
            if self.c.len() == 1 {
                return CycScalar { m: self.m, c: vec![&self.c[0] * &o.c[0]] };
            }
            let d = self.c.len();
            let mut v = vec![BigRational::zero(); 2 * d - 1];
            for (i, a) in self.c.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in o.c.iter().enumerate() {
                    if !b.is_zero() {
                        v[i + j] += a * b;
                    }
                }
            }
            return CycScalar { m: self.m, c: reduce_mod(v, self.m) };
        }
        let (a, b) = CycScalar::unify(self, o);
        &a * &b
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { m: self.m, c: self.c.iter().map(|a| -a).collect() }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, o: &CycScalar) {
        if self.m == o.m {
            for (a, b) in self.c.iter_mut().zip(&o.c) {
                *a += b;
            }
        } else {
            *self = &*self + o;
        }
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, o: &CycScalar) {
        if self.m == o.m {
            for (a, b) in self.c.iter_mut().zip(&o.c) {
                *a -= b;
            }
        } else {
            *self = &*self - o;
        }
    }
}
