//! Exact linear algebra over cyclotomic scalars.

use std::collections::BTreeMap;

use crate::scalar::CycScalar;

pub type Matrix = Vec<Vec<CycScalar>>;
pub type SparseVec = BTreeMap<usize, CycScalar>;

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { CycScalar::one() } else { CycScalar::zero() }).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![CycScalar::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] += &(&a[i][l] * &b[l][j]);
                }
            }
        }
    }
    out
}

pub fn transpose(a: &Matrix) -> Matrix {
    if a.is_empty() {
        return vec![];
    }
    (0..a[0].len()).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(a: &mut Matrix) -> Vec<usize> {
    let rows = a.len();
    if rows == 0 {
        return vec![];
    }
    let cols = a[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    if !a[r][j].is_zero() {
                        let t = &f * &a[r][j];
                        a[i][j] -= &t;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &Matrix) -> usize {
    let mut m = a.clone();
    rref(&mut m).len()
}

pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { CycScalar::one() } else { CycScalar::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of {v : a·v = 0} for a matrix with `cols` columns.
pub fn nullspace(a: &Matrix, cols: usize) -> Vec<Vec<CycScalar>> {
    let mut m = a.clone();
    let piv = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![CycScalar::zero(); cols];
            v[f] = CycScalar::one();
            for (r, &pc) in piv.iter().enumerate() {
                v[pc] = -&m[r][f];
            }
            v
        })
        .collect()
}

fn axpy(v: &mut SparseVec, f: &CycScalar, w: &SparseVec) {
    for (k, x) in w {
        let t = f * x;
        match v.get_mut(k) {
            Some(e) => {
                *e += &t;
                if e.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                if !t.is_zero() {
                    v.insert(*k, t);
                }
            }
        }
    }
}

/// Incremental row echelon basis of a subspace of sparse vectors.
/// Each stored vector has leading index equal to its pivot and leading coefficient 1.
#[derive(Default, Clone)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Eliminate leading terms of `v` against the basis.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut floor = 0usize;
        loop {
            let Some((&k, c)) = v.range(floor..).next() else { return v };
            if let Some(p) = self.pivots.get(&k) {
                let f = -c;
                axpy(&mut v, &f, p);
            } else {
                floor = k + 1;
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Insert; returns false when `v` was already in the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.lead_reduce(v);
        if r.is_empty() {
            return false;
        }
        let (&k, c) = r.iter().next().unwrap();
        let inv = c.inv().expect("nonzero");
        let r: SparseVec = r.iter().map(|(j, x)| (*j, x * &inv)).collect();
        self.pivots.insert(k, r);
        true
    }

    fn lead_reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let Some((&k, c)) = v.iter().next() else { return v };
            match self.pivots.get(&k) {
                Some(p) => {
                    let f = -c;
                    axpy(&mut v, &f, p);
                }
                None => return v,
            }
        }
    }

    /// Fully reduced basis, sorted by pivot.
    pub fn basis(&self) -> Vec<SparseVec> {
        let keys: Vec<usize> = self.pivots.keys().copied().collect();
        let mut out: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for &k in keys.iter().rev() {
            let mut v = self.pivots[&k].clone();
            let others: Vec<usize> = v.keys().copied().filter(|j| *j != k && out.contains_key(j)).collect();
            for j in others {
                if let Some(c) = v.get(&j).cloned() {
                    axpy(&mut v, &-&c, &out[&j]);
                }
            }
            out.insert(k, v);
        }
        out.into_values().collect()
    }
}

/// Kernel of the linear map sending the j-th unit vector to `images[j]`.
pub fn kernel_of_images(images: &[SparseVec]) -> Vec<SparseVec> {
    // Pivot rows carry (reduced image, combination of unknowns producing it).
    let mut pivots: BTreeMap<usize, (SparseVec, SparseVec)> = BTreeMap::new();
    let mut kernel = Echelon::new();
    for (j, img) in images.iter().enumerate() {
        let mut v = img.clone();
        let mut comb: SparseVec = BTreeMap::new();
        comb.insert(j, CycScalar::one());
        loop {
            let Some((&k, c)) = v.iter().next() else { break };
            match pivots.get(&k) {
                Some((pv, pc)) => {
                    let f = -c;
                    axpy(&mut v, &f, pv);
                    axpy(&mut comb, &f, pc);
                }
                None => break,
            }
        }
        if v.is_empty() {
            kernel.insert(comb);
        } else {
            let (&k, c) = v.iter().next().unwrap();
            let inv = c.inv().expect("nonzero");
            let v: SparseVec = v.iter().map(|(i, x)| (*i, x * &inv)).collect();
            let comb: SparseVec = comb.iter().map(|(i, x)| (*i, x * &inv)).collect();
            pivots.insert(k, (v, comb));
        }
    }
    kernel.basis()
}

/// Solves `Σ c_j images[j] = target` against a fixed family of columns.
pub struct Solver {
    // pivot index -> (reduced image, combination of columns producing it)
    pivots: BTreeMap<usize, (SparseVec, SparseVec)>,
    rank: usize,
}

impl Solver {
    pub fn new(images: &[SparseVec]) -> Self {
        let mut pivots: BTreeMap<usize, (SparseVec, SparseVec)> = BTreeMap::new();
        for (j, img) in images.iter().enumerate() {
            let mut comb: SparseVec = BTreeMap::new();
            comb.insert(j, CycScalar::one());
            let (v, comb) = Self::eliminate(&pivots, img.clone(), comb);
            if let Some((&k, c)) = v.iter().next() {
                let inv = c.inv().expect("nonzero");
                let v: SparseVec = v.iter().map(|(i, x)| (*i, x * &inv)).collect();
                let comb: SparseVec = comb.iter().map(|(i, x)| (*i, x * &inv)).collect();
                pivots.insert(k, (v, comb));
            }
        }
        let rank = pivots.len();
        Solver { pivots, rank }
    }

    fn eliminate(
        pivots: &BTreeMap<usize, (SparseVec, SparseVec)>,
        mut v: SparseVec,
        mut comb: SparseVec,
    ) -> (SparseVec, SparseVec) {
        let mut floor = 0usize;
        loop {
            let Some((&k, c)) = v.range(floor..).next() else { return (v, comb) };
            match pivots.get(&k) {
                Some((pv, pc)) => {
                    let f = -c;
                    axpy(&mut v, &f, pv);
                    axpy(&mut comb, &f, pc);
                }
                None => floor = k + 1,
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coefficients of some solution, or None if `target` is outside the span.
    pub fn solve(&self, target: &SparseVec) -> Option<SparseVec> {
        let (rest, comb) = Self::eliminate(&self.pivots, target.clone(), BTreeMap::new());
        rest.is_empty().then(|| comb.into_iter().map(|(j, c)| (j, -c)).collect())
    }
}

/// Whether two families of sparse vectors span the same subspace.
pub fn same_span(a: &[SparseVec], b: &[SparseVec]) -> bool {
    let mut ea = Echelon::new();
    for v in a {
        ea.insert(v.clone());
    }
    let mut eb = Echelon::new();
    for v in b {
        eb.insert(v.clone());
    }
    ea.rank() == eb.rank() && b.iter().all(|v| ea.contains(v))
}

pub fn dense_to_sparse(v: &[CycScalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| CycScalar::from_int(x)).collect()).collect()
    }

    #[test]
    fn inverse_2x2() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn nullspace_rank_nullity() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        assert_eq!(rank(&a), 1);
        for v in ns {
            let col: Matrix = v.into_iter().map(|x| vec![x]).collect();
            assert!(mat_mul(&a, &col).iter().all(|r| r[0].is_zero()));
        }
    }

    #[test]
    fn kernel_from_images() {
        let e = |pairs: &[(usize, i64)]| -> SparseVec { pairs.iter().map(|&(i, x)| (i, CycScalar::from_int(x))).collect() };
        // u0 -> a, u1 -> b, u2 -> a + b
        let imgs = vec![e(&[(0, 1)]), e(&[(1, 1)]), e(&[(0, 1), (1, 1)])];
        let k = kernel_of_images(&imgs);
        assert_eq!(k.len(), 1);
        assert!(same_span(&k, &[e(&[(0, 1), (1, 1), (2, -1)])]));
    }

    #[test]
    fn solver_recovers_combination() {
        let e = |pairs: &[(usize, i64)]| -> SparseVec { pairs.iter().map(|&(i, x)| (i, CycScalar::from_int(x))).collect() };
        let cols = vec![e(&[(0, 1), (1, 1)]), e(&[(1, 2)]), e(&[(0, 1), (1, 3)])];
        let s = Solver::new(&cols);
        assert_eq!(s.rank(), 2);
        let t = e(&[(0, 3), (1, 7)]);
        let c = s.solve(&t).unwrap();
        let mut acc = SparseVec::new();
        for (j, x) in &c {
            axpy(&mut acc, x, &cols[*j]);
        }
        assert_eq!(acc, t);
        assert!(Solver::new(&cols[..1]).solve(&e(&[(1, 1)])).is_none());
    }

    #[test]
    fn echelon_membership() {
        let mut ech = Echelon::new();
        let v1: SparseVec = [(0, CycScalar::from_int(1)), (2, CycScalar::from_int(1))].into_iter().collect();
        let v2: SparseVec = [(1, CycScalar::from_int(1)), (2, CycScalar::from_int(-1))].into_iter().collect();
        assert!(ech.insert(v1.clone()));
        assert!(ech.insert(v2.clone()));
        let mut s = v1.clone();
        axpy(&mut s, &CycScalar::from_int(3), &v2);
        assert!(ech.contains(&s));
        assert!(!ech.insert(s));
        assert_eq!(ech.rank(), 2);
    }
}
