//! Built-in Frobenius superalgebras.

use crate::error::{Error, Result};
use crate::frobenius::{FrobAlg, RawAlgebra};
use crate::scalar::{root_of_unity, CycScalar};

fn cube(d: usize) -> Vec<Vec<Vec<CycScalar>>> {
    vec![vec![vec![CycScalar::zero(); d]; d]; d]
}

fn unit_vec(d: usize, i: usize) -> Vec<CycScalar> {
    let mut v = vec![CycScalar::zero(); d];
    v[i] = CycScalar::one();
    v
}

/// The ground field k with tr(1) = 1.
pub fn trivial() -> FrobAlg {
    let mut c = cube(1);
    c[0][0][0] = CycScalar::one();
    FrobAlg::new(RawAlgebra {
        name: "trivial".into(),
        conductor: 1,
        labels: vec!["1".into()],
        degree: vec![0],
        parity: vec![0],
        consts: c,
        unit: unit_vec(1, 0),
        trace: unit_vec(1, 0),
    })
    .expect("trivial algebra is Frobenius")
}

/// Clifford superalgebra: odd c with c² = 1, tr(1) = 1, tr(c) = 0.
pub fn clifford() -> FrobAlg {
    let mut c = cube(2);
    c[0][0][0] = CycScalar::one();
    c[0][1][1] = CycScalar::one();
    c[1][0][1] = CycScalar::one();
    c[1][1][0] = CycScalar::one();
    FrobAlg::new(RawAlgebra {
        name: "clifford".into(),
        conductor: 1,
        labels: vec!["1".into(), "c".into()],
        degree: vec![0, 0],
        parity: vec![0, 1],
        consts: c,
        unit: unit_vec(2, 0),
        trace: unit_vec(2, 0),
    })
    .expect("Clifford algebra is Frobenius")
}

/// k[z]/(z²) with |z| = 2 and tr(a + bz) = b.
pub fn dual_numbers() -> FrobAlg {
    let mut c = cube(2);
    c[0][0][0] = CycScalar::one();
    c[0][1][1] = CycScalar::one();
    c[1][0][1] = CycScalar::one();
    FrobAlg::new(RawAlgebra {
        name: "dual_numbers".into(),
        conductor: 1,
        labels: vec!["1".into(), "z".into()],
        degree: vec![0, 2],
        parity: vec![0, 0],
        consts: c,
        unit: unit_vec(2, 0),
        trace: unit_vec(2, 1),
    })
    .expect("dual numbers are Frobenius")
}

/// Group algebra from a multiplication table `table[a][b] = a·b`; tr picks the identity coefficient.
pub fn group_algebra(name: &str, labels: Vec<String>, table: &[Vec<usize>]) -> Result<FrobAlg> {
    let d = table.len();
    if d == 0 || labels.len() != d || table.iter().any(|r| r.len() != d || r.iter().any(|&x| x >= d)) {
        return Err(Error::BadParams("group table must be square with entries in range".into()));
    }
    let e = (0..d)
        .find(|&e| (0..d).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| Error::BadParams("group table has no identity".into()))?;
    for a in 0..d {
        if !(0..d).any(|b| table[a][b] == e && table[b][a] == e) {
            return Err(Error::BadParams(format!("element {} has no inverse", labels[a])));
        }
        for b in 0..d {
            for c in 0..d {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::BadParams("group table is not associative".into()));
                }
            }
        }
    }
    let mut c = cube(d);
    for a in 0..d {
        for b in 0..d {
            c[a][b][table[a][b]] = CycScalar::one();
        }
    }
    FrobAlg::new(RawAlgebra {
        name: name.into(),
        conductor: 1,
        labels,
        degree: vec![0; d],
        parity: vec![0; d],
        consts: c,
        unit: unit_vec(d, e),
        trace: unit_vec(d, e),
    })
}

fn power_label(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.into(),
        _ => format!("{}{}", var, k),
    }
}

/// Group algebra of ℤ/m with basis 1, g, g2, …
pub fn cyclic_group(m: usize) -> Result<FrobAlg> {
    if m == 0 {
        return Err(Error::BadParams("cyclic group order must be positive".into()));
    }
    let labels = (0..m).map(|k| if k == 0 { "1".into() } else { power_label("g", k) }).collect();
    let table: Vec<Vec<usize>> = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
    group_algebra(&format!("cyclic_group:{}", m), labels, &table)
}

/// Group algebra of S₃ generated by a = (1 2), b = (2 3).
pub fn symmetric_group3() -> FrobAlg {
    // Elements as one-line permutations; composition (pq)(i) = p(q(i)).
    let elems: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let labels: Vec<String> = ["e", "a", "b", "ab", "ba", "aba"].iter().map(|s| s.to_string()).collect();
    let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] { [p[q[0]], p[q[1]], p[q[2]]] };
    let idx = |p: [usize; 3]| elems.iter().position(|q| *q == p).unwrap();
    let table: Vec<Vec<usize>> = elems.iter().map(|p| elems.iter().map(|q| idx(compose(p, q))).collect()).collect();
    group_algebra("group_algebra:s3", labels, &table).expect("S3 table is a group")
}

/// Taft algebra T_q: g^q = 1, y^q = 0, yg = ω g y with ω = ζ_q; basis y^k g^l,
/// g even of degree 0, y even of degree `y_degree`, tr(y^k g^l) = δ_{k,q-1} δ_{l,0}.
pub fn taft(q: usize, y_degree: u32) -> Result<FrobAlg> {
    if q < 2 {
        return Err(Error::BadParams("Taft algebra needs q >= 2".into()));
    }
    let d = q * q;
    let index = |k: usize, l: usize| k * q + l;
    let labels: Vec<String> = (0..q)
        .flat_map(|k| {
            (0..q).map(move |l| {
                let s = format!("{}{}", power_label("y", k), power_label("g", l));
                if s.is_empty() {
                    "1".to_string()
                } else {
                    s
                }
            })
        })
        .collect();
    let mut c = cube(d);
    for k in 0..q {
        for l in 0..q {
            for k2 in 0..q {
                for l2 in 0..q {
                    if k + k2 >= q {
                        continue;
                    }
                    // g^l y^{k2} = ω^{-l k2} y^{k2} g^l
                    let w = root_of_unity(q as u32, -((l * k2) as i64));
                    c[index(k, l)][index(k2, l2)][index(k + k2, (l + l2) % q)] = w;
                }
            }
        }
    }
    let degree = (0..q).flat_map(|k| std::iter::repeat_n(k as u32 * y_degree, q)).collect();
    FrobAlg::new(RawAlgebra {
        name: format!("taft:{}:{}", q, y_degree),
        conductor: q as u32,
        labels,
        degree,
        parity: vec![0; d],
        consts: c,
        unit: unit_vec(d, 0),
        trace: unit_vec(d, index(q - 1, 0)),
    })
}

/// Resolve a built-in name: `trivial`, `clifford`, `dual_numbers`,
/// `cyclic_group:M`, `group_algebra:s3`, `taft:Q[:DEG]`.
pub fn builtin(name: &str) -> Result<FrobAlg> {
    let parts: Vec<&str> = name.split(':').collect();
    let num = |s: &str| s.parse::<usize>().map_err(|_| Error::BadParams(format!("bad number '{}' in '{}'", s, name)));
    match parts.as_slice() {
        ["trivial"] | ["k"] => Ok(trivial()),
        ["clifford"] | ["cl"] => Ok(clifford()),
        ["dual_numbers"] => Ok(dual_numbers()),
        ["cyclic_group", m] => cyclic_group(num(m)?),
        ["group_algebra", "s3"] | ["s3"] => Ok(symmetric_group3()),
        ["taft", q] => taft(num(q)?, 1),
        ["taft", q, deg] => taft(num(q)?, num(deg)? as u32),
        _ => Err(Error::BadParams(format!("unknown built-in algebra '{}'", name))),
    }
}

pub fn is_builtin_name(name: &str) -> bool {
    builtin(name).is_ok()
}

/// The algebras used throughout the verification suites.
pub fn desk_set() -> Vec<FrobAlg> {
    vec![
        trivial(),
        clifford(),
        dual_numbers(),
        cyclic_group(2).unwrap(),
        cyclic_group(3).unwrap(),
        taft(2, 1).unwrap(),
        taft(3, 1).unwrap(),
        symmetric_group3(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::AlgElem;

    fn elem(f: &FrobAlg, terms: &[(&str, CycScalar)]) -> AlgElem {
        let mut v = AlgElem::zero(f.dim());
        for (l, c) in terms {
            v.0[f.index_of(l).unwrap()] = c.clone();
        }
        v
    }

    #[test]
    fn trivial_data() {
        let k = trivial();
        assert_eq!((k.theta(), k.delta()), (1, 0));
        assert_eq!(k.dual_basis(), vec![k.unit()]);
    }

    #[test]
    fn clifford_nakayama_and_duals() {
        let cl = clifford();
        let c = elem(&cl, &[("c", CycScalar::one())]);
        assert_eq!(cl.psi_pow(1, &c), c.scale(&CycScalar::from_int(-1)));
        assert_eq!(cl.theta(), 2);
        assert_eq!(cl.dual_basis(), vec![cl.unit(), c.clone()]);
        assert_eq!(cl.mul(&c, &c).unwrap(), cl.unit());
    }

    #[test]
    fn dual_numbers_data() {
        let f = dual_numbers();
        let z = elem(&f, &[("z", CycScalar::one())]);
        assert!(f.mul(&z, &z).unwrap().is_zero());
        assert_eq!(f.dual_basis(), vec![z.clone(), f.unit()]);
        assert_eq!((f.theta(), f.delta()), (1, 2));
    }

    #[test]
    fn taft_nakayama() {
        for q in 2..=4usize {
            let t = taft(q, 1).unwrap();
            let w = root_of_unity(q as u32, 1);
            let g = elem(&t, &[("g", CycScalar::one())]);
            let y = elem(&t, &[("y", CycScalar::one())]);
            assert_eq!(t.psi_pow(1, &g), g.scale(&w));
            assert_eq!(t.psi_pow(1, &y), y);
            assert_eq!(t.theta(), q as u32);
            // y·g = ω g·y
            assert_eq!(t.mul(&y, &g).unwrap(), t.mul(&g, &y).unwrap().scale(&w));
        }
    }

    #[test]
    fn cyclic_group_is_symmetric() {
        let f = cyclic_group(2).unwrap();
        assert_eq!(f.dim(), 2);
        assert_eq!(f.theta(), 1);
    }

    #[test]
    fn clifford_graded_pieces() {
        let cl = clifford();
        for k in -4..=4i64 {
            let piece = cl.graded_piece(k, true);
            if k % 2 == 0 {
                assert_eq!(piece, vec![cl.unit()]);
            } else {
                assert!(piece.is_empty());
            }
        }
        let c = elem(&cl, &[("c", CycScalar::one())]);
        assert!(cl.in_graded_piece(&c, 1, false));
        assert!(!cl.in_graded_piece(&c, 1, true));
    }

    #[test]
    fn taft_top_power_in_fixed_piece() {
        for m in 2..=3usize {
            let t = taft(m, 1).unwrap();
            let top = elem(&t, &[(&power_label("y", m - 1), CycScalar::one())]);
            assert!(t.in_graded_piece(&top, 1 - m as i64, true));
        }
    }

    #[test]
    fn center_is_graded_piece_at_multiples_of_theta() {
        for f in desk_set() {
            let z = f.center();
            let t = f.theta() as i64;
            for k in [t, -t, 2 * t] {
                assert!(crate::linalg::same_span(
                    &z.iter().map(|e| crate::linalg::dense_to_sparse(&e.0)).collect::<Vec<_>>(),
                    &f.graded_piece(k, false).iter().map(|e| crate::linalg::dense_to_sparse(&e.0)).collect::<Vec<_>>()
                ));
            }
        }
    }

    #[test]
    fn bad_group_table_rejected() {
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(group_algebra("bad", vec!["1".into(), "g".into()], &t).is_err());
    }

    #[test]
    fn element_text_round_trips() {
        for f in desk_set() {
            let d = f.dim();
            let mut e = AlgElem::zero(d);
            for i in 0..d {
                e.0[i] = &root_of_unity(f.conductor(), i as i64) * &CycScalar::from_int(i as i64 - 1);
            }
            assert_eq!(f.parse_elem(&f.format_elem(&e)).unwrap(), e, "{}", f.name);
        }
        let t = taft(2, 1).unwrap();
        let y = t.parse_elem("y").unwrap();
        let g = t.parse_elem("g").unwrap();
        assert_eq!(t.parse_elem("g*y + y*g").unwrap(), t.mul_elems(&g, &y).add(&t.mul_elems(&y, &g)));
        assert!(t.parse_elem("w").is_err());
    }
}
