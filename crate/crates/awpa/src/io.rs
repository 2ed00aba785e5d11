//! JSON algebra spec files, optionally carrying cyclotomic parameters.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::builtins;
use crate::cyclotomic::CycloParams;
use crate::error::{Error, Result};
use crate::frobenius::{FrobAlg, RawAlgebra};
use crate::scalar::CycScalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub conductor: u32,
    pub basis: Vec<String>,
    pub degrees: Vec<u32>,
    pub parities: Vec<u8>,
    pub unit: Vec<String>,
    /// `mult[i][j][k]` is the coefficient of b_k in b_i b_j.
    pub mult: Vec<Vec<Vec<String>>>,
    pub trace: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclotomic: Option<CycloSpec>,
}

/// `c[k-1]` holds e_k element strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloSpec {
    pub e: Vec<usize>,
    pub c: Vec<Vec<String>>,
}

/// A built algebra with its optional cyclotomic parameters.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub algebra: Arc<FrobAlg>,
    pub params: Option<Arc<CycloParams>>,
}

impl AlgebraSpec {
    pub fn from_algebra(f: &FrobAlg, params: Option<&CycloParams>) -> Result<AlgebraSpec> {
        let raw = f.to_raw();
        let m = raw.conductor;
        let fmt_vec = |v: &[CycScalar]| v.iter().map(|c| c.format_in(m)).collect::<Vec<_>>();
        let cyclotomic = match params {
            None => None,
            Some(p) => {
                let entries = p.slot1_entries().ok_or_else(|| Error::BadParams("only slot-1 parameters serialize".into()))?;
                Some(CycloSpec {
                    e: entries.iter().map(|l| l.len()).collect(),
                    c: entries.iter().map(|l| l.iter().map(|c| f.format_elem(c)).collect()).collect(),
                })
            }
        };
        Ok(AlgebraSpec {
            name: Some(raw.name.clone()),
            conductor: m,
            basis: raw.labels.clone(),
            degrees: raw.degree.clone(),
            parities: raw.parity.clone(),
            unit: fmt_vec(&raw.unit),
            mult: raw.consts.iter().map(|row| row.iter().map(|v| fmt_vec(v)).collect()).collect(),
            trace: fmt_vec(&raw.trace),
            cyclotomic,
        })
    }

    pub fn build(&self) -> Result<Loaded> {
        let m = self.conductor;
        if m == 0 {
            return Err(Error::BadParams("conductor must be positive".into()));
        }
        let d = self.basis.len();
        let parse_vec = |v: &[String], what: &str| -> Result<Vec<CycScalar>> {
            if v.len() != d {
                return Err(Error::DimensionMismatch(format!("{} has length {}, expected {}", what, v.len(), d)));
            }
            v.iter().map(|s| CycScalar::parse(s, m)).collect()
        };
        if self.mult.len() != d || self.mult.iter().any(|r| r.len() != d) {
            return Err(Error::DimensionMismatch(format!("mult must be {}x{}x{}", d, d, d)));
        }
        let consts = self
            .mult
            .iter()
            .map(|row| row.iter().map(|v| parse_vec(v, "mult entry")).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let raw = RawAlgebra {
            name: self.name.clone().unwrap_or_else(|| "custom".into()),
            conductor: m,
            labels: self.basis.clone(),
            degree: self.degrees.clone(),
            parity: self.parities.clone(),
            consts,
            unit: parse_vec(&self.unit, "unit")?,
            trace: parse_vec(&self.trace, "trace")?,
        };
        let algebra = Arc::new(FrobAlg::new(raw)?);
        let params = match &self.cyclotomic {
            None => None,
            Some(cs) => Some(Arc::new(cs.build(algebra.clone())?)),
        };
        Ok(Loaded { algebra, params })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    pub fn from_json(s: &str) -> Result<AlgebraSpec> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl CycloSpec {
    pub fn build(&self, f: Arc<FrobAlg>) -> Result<CycloParams> {
        if self.e.len() != self.c.len() || self.e.iter().zip(&self.c).any(|(e, c)| *e != c.len()) {
            return Err(Error::BadParams("cyclotomic.e must list the lengths of cyclotomic.c".into()));
        }
        let entries =
            self.c.iter().map(|l| l.iter().map(|s| f.parse_elem(s)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        CycloParams::new(f, entries)
    }
}

pub fn load_spec_file(path: &Path) -> Result<Loaded> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))?;
    AlgebraSpec::from_json(&text)?.build()
}

/// Resolve a built-in name first, then a spec file path. The second component is a
/// warning when a built-in name shadows an existing file.
pub fn resolve_algebra(name_or_path: &str) -> Result<(Loaded, Option<String>)> {
    if builtins::is_builtin_name(name_or_path) {
        let warning = Path::new(name_or_path)
            .exists()
            .then(|| format!("'{}' is a built-in name; the file of the same name was ignored", name_or_path));
        let algebra = Arc::new(builtins::builtin(name_or_path)?);
        return Ok((Loaded { algebra, params: None }, warning));
    }
    Ok((load_spec_file(Path::new(name_or_path))?, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{clifford, desk_set};
    use crate::frobenius::AlgElem;

    #[test]
    fn spec_round_trips() {
        for f in desk_set() {
            let spec = AlgebraSpec::from_algebra(&f, None).unwrap();
            let back = AlgebraSpec::from_json(&spec.to_json()).unwrap();
            assert_eq!(back, spec);
            let g = back.build().unwrap().algebra;
            assert_eq!(g.to_raw(), f.to_raw());
        }
    }

    #[test]
    fn cyclotomic_section_round_trips() {
        let f = Arc::new(clifford());
        let p = CycloParams::new(f.clone(), vec![vec![AlgElem::zero(2)], vec![f.unit().scale(&CycScalar::from_ratio(-1, 2))]])
            .unwrap();
        let spec = AlgebraSpec::from_algebra(&f, Some(&p)).unwrap();
        assert_eq!(spec.cyclotomic.as_ref().unwrap().e, vec![1, 1]);
        let loaded = AlgebraSpec::from_json(&spec.to_json()).unwrap().build().unwrap();
        let q = loaded.params.unwrap();
        assert_eq!(q.level(), 3);
        assert_eq!(q.slot1_entries().unwrap(), p.slot1_entries().unwrap());
    }

    #[test]
    fn malformed_specs_rejected() {
        let mut spec = AlgebraSpec::from_algebra(&clifford(), None).unwrap();
        spec.trace.pop();
        assert!(matches!(spec.build(), Err(Error::DimensionMismatch(_))));
        assert!(AlgebraSpec::from_json("{\"conductor\": 1}").is_err());
        let mut spec = AlgebraSpec::from_algebra(&clifford(), None).unwrap();
        spec.cyclotomic = Some(CycloSpec { e: vec![1], c: vec![vec!["c".into()]] });
        assert!(matches!(spec.build(), Err(Error::OddParity(_))));
    }
}
