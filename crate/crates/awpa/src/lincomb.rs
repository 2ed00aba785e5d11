//! Sparse linear combinations with canonical (sorted, zero-free) storage.

use std::collections::BTreeMap;

use crate::scalar::CycScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, CycScalar>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: CycScalar) -> Self {
        let mut l = Self::new();
        l.add_term(k, c);
        l
    }

    pub fn from_terms<I: IntoIterator<Item = (K, CycScalar)>>(it: I) -> Self {
        let mut l = Self::new();
        for (k, c) in it {
            l.add_term(k, c);
        }
        l
    }

    pub fn add_term(&mut self, k: K, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<K>, s: &CycScalar) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * s);
        }
    }

    pub fn add(&mut self, other: &LinComb<K>) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn sub(&mut self, other: &LinComb<K>) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), -c);
        }
    }

    pub fn scaled(&self, s: &CycScalar) -> Self {
        if s.is_zero() {
            return Self::new();
        }
        LinComb { terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect() }
    }

    pub fn neg(&self) -> Self {
        LinComb { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&K, &CycScalar)> {
        self.terms.iter()
    }

    pub fn get(&self, k: &K) -> Option<&CycScalar> {
        self.terms.get(k)
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn map_keys<K2: Ord + Clone, F: Fn(&K) -> K2>(&self, f: F) -> LinComb<K2> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    pub fn into_terms(self) -> BTreeMap<K, CycScalar> {
        self.terms
    }
}
