use std::collections::btree_map::{self, BTreeMap};

use exactlinalg::Field;

/// Finitely supported linear combination with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<K: Ord, F> {
    terms: BTreeMap<K, F>,
}

impl<K: Ord, F> Default for LinComb<K, F> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, F: Field> LinComb<K, F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: F) -> Self {
        let mut out = Self::new();
        out.add_term(k, c);
        out
    }

    pub fn add_term(&mut self, k: K, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `(-1)^e c k`.
    pub fn add_signed(&mut self, k: K, c: F, e: i64) {
        if e.rem_euclid(2) == 1 {
            self.add_term(k, -c)
        } else {
            self.add_term(k, c)
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone() * c.clone());
        }
    }

    pub fn add_comb(&mut self, other: &Self) {
        self.add_scaled(other, &F::one());
    }

    pub fn sub_comb(&mut self, other: &Self) {
        self.add_scaled(other, &-F::one());
    }

    pub fn scaled(&self, c: &F) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, c);
        out
    }

    /// `(-1)^e self`.
    pub fn signed(&self, e: i64) -> Self {
        self.scaled(&F::sign(e))
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub_comb(other);
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_comb(other);
        out
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

    pub fn coeff(&self, k: &K) -> F {
        self.terms.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, F> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, F> {
        self.terms.keys()
    }

    /// Applies a linear map given on basis keys.
    pub fn apply<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2, F>) -> LinComb<K2, F> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// First key (in key order) where the two combinations differ.
    pub fn first_difference(&self, other: &Self) -> Option<K> {
        self.minus(other).terms.into_keys().next()
    }
}

impl<K: Ord + Clone, F: Field> FromIterator<(K, F)> for LinComb<K, F> {
    fn from_iter<I: IntoIterator<Item = (K, F)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord, F> IntoIterator for LinComb<K, F> {
    type Item = (K, F);
    type IntoIter = btree_map::IntoIter<K, F>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord, F> IntoIterator for &'a LinComb<K, F> {
    type Item = (&'a K, &'a F);
    type IntoIter = btree_map::Iter<'a, K, F>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactlinalg::Q;

    #[test]
    fn cancellation_removes_terms() {
        let mut c: LinComb<u8, Q> = LinComb::single(1, Q::from_i64(2));
        c.add_signed(1, Q::from_i64(2), 1);
        assert!(c.is_zero());
    }

    #[test]
    fn first_difference_is_ordered() {
        let a: LinComb<u8, Q> = [(1, Q::from_i64(1)), (3, Q::from_i64(1))].into_iter().collect();
        let b: LinComb<u8, Q> = [(1, Q::from_i64(1)), (2, Q::from_i64(1))].into_iter().collect();
        assert_eq!(a.first_difference(&b), Some(2));
        assert_eq!(a.first_difference(&a), None);
    }
}
