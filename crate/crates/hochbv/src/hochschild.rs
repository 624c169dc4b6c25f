//! The normalized Hochschild complex `C_*(A, A) = A ⊗ T(sĀ)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::Range;

use exactlinalg::{homology_dims, Field, SparseMatrix};
use serde::Serialize;

use crate::comb::LinComb;
use crate::frobenius::FrobeniusAlgebra;
use crate::sign::permutation_exponent;
use crate::ChainError;

/// Basis word `a₀[a₁,…,aₙ]`; letter 0 is `a₀`, the rest are slots (never the unit).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(Vec<u16>);

impl Word {
    pub fn new(letters: Vec<u16>) -> Self {
        debug_assert!(!letters.is_empty());
        Word(letters)
    }

    pub fn from_parts(a0: usize, slots: &[usize]) -> Self {
        let mut v = Vec::with_capacity(slots.len() + 1);
        v.push(a0 as u16);
        v.extend(slots.iter().map(|&s| s as u16));
        Word(v)
    }

    pub fn a0(&self) -> usize {
        self.0[0] as usize
    }

    pub fn slots(&self) -> &[u16] {
        &self.0[1..]
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    /// Number of slots `n`.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() == 1
    }

    pub fn is_normalized(&self) -> bool {
        self.slots().iter().all(|&a| a != 0)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse combination of words.
pub type Chain<F> = LinComb<Word, F>;
/// Sparse combination of tensors of words, of any tensor length.
pub type Tensor<F> = LinComb<Vec<Word>, F>;

pub fn chain_to_tensor<F: Field>(c: &Chain<F>) -> Tensor<F> {
    c.iter().map(|(w, v)| (vec![w.clone()], v.clone())).collect()
}

/// Finite window: words of length at most `max_length`, optionally of degree at most `max_degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Truncation {
    pub max_length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<i64>,
}

impl Truncation {
    pub fn new(max_length: usize) -> Self {
        Truncation { max_length, max_degree: None }
    }

    pub fn with_max_degree(self, d: i64) -> Self {
        Truncation { max_degree: Some(d), ..self }
    }
}

/// The complex of an algebra; every chain operation is a method taking words.
#[derive(Clone, Copy, Debug)]
pub struct Complex<'a, F> {
    pub alg: &'a FrobeniusAlgebra<F>,
}

impl<'a, F: Field> Complex<'a, F> {
    pub fn new(alg: &'a FrobeniusAlgebra<F>) -> Self {
        Complex { alg }
    }

    pub fn m(&self) -> i64 {
        self.alg.m()
    }

    #[inline]
    pub fn deg(&self, i: u16) -> i64 {
        self.alg.deg(i as usize)
    }

    /// Sum of raw degrees.
    pub fn sum_deg(&self, letters: &[u16]) -> i64 {
        letters.iter().map(|&a| self.deg(a)).sum()
    }

    /// `|a₀| + Σ(|aᵢ| - 1)`.
    pub fn degree(&self, w: &Word) -> i64 {
        self.deg(w.0[0]) + w.slots().iter().map(|&a| self.deg(a) - 1).sum::<i64>()
    }

    pub fn tensor_degree(&self, ws: &[Word]) -> i64 {
        ws.iter().map(|w| self.degree(w)).sum()
    }

    pub fn word_name(&self, w: &Word) -> String {
        let slots: Vec<&str> = w.slots().iter().map(|&a| self.alg.name(a as usize)).collect();
        format!("{}[{}]", self.alg.name(w.a0()), slots.join(","))
    }

    pub fn tensor_name(&self, ws: &[Word]) -> String {
        ws.iter().map(|w| self.word_name(w)).collect::<Vec<_>>().join(" ⊗ ")
    }

    /// Hochschild differential `D = d₀ + d₁`.
    pub fn d(&self, w: &Word) -> Chain<F> {
        let alg = self.alg;
        let mut out = Chain::new();
        let a0 = w.0[0];
        let sl = w.slots();
        let n = sl.len();
        // eps[i-1] = |a₀| + Σ_{k<i}(|a_k| - 1)
        let mut eps = Vec::with_capacity(n + 1);
        let mut e = self.deg(a0);
        for &a in sl {
            eps.push(e);
            e += self.deg(a) - 1;
        }
        for (k, c) in alg.d(a0 as usize) {
            let mut v = w.0.clone();
            v[0] = *k as u16;
            out.add_term(Word(v), c.clone());
        }
        for i in 1..=n {
            for (k, c) in alg.d(sl[i - 1] as usize) {
                if *k == 0 {
                    continue;
                }
                let mut v = w.0.clone();
                v[i] = *k as u16;
                out.add_signed(Word(v), c.clone(), eps[i - 1] + 1);
            }
        }
        if n >= 1 {
            for (k, c) in alg.mul(a0 as usize, sl[0] as usize) {
                let mut v = Vec::with_capacity(n);
                v.push(*k as u16);
                v.extend_from_slice(&sl[1..]);
                out.add_signed(Word(v), c.clone(), self.deg(a0));
            }
            for i in 2..=n {
                for (k, c) in alg.mul(sl[i - 2] as usize, sl[i - 1] as usize) {
                    if *k == 0 {
                        continue;
                    }
                    let mut v = Vec::with_capacity(n);
                    v.extend_from_slice(&w.0[..i - 1]);
                    v.push(*k as u16);
                    v.extend_from_slice(&w.0[i + 1..]);
                    out.add_signed(Word(v), c.clone(), eps[i - 1]);
                }
            }
            let an = sl[n - 1];
            for (k, c) in alg.mul(an as usize, a0 as usize) {
                let mut v = Vec::with_capacity(n);
                v.push(*k as u16);
                v.extend_from_slice(&sl[..n - 1]);
                out.add_signed(Word(v), c.clone(), eps[n - 1] * (self.deg(an) + 1) + 1);
            }
        }
        out
    }

    /// One rotation term of `B`: the word `1[aᵢ,…,aₙ,a₀,…,aᵢ₋₁]` and its sign exponent,
    /// for `1 ≤ i ≤ n+1`.
    fn rotation(&self, w: &Word, i: usize) -> (Word, i64) {
        let n = w.len() as i64;
        let full = &w.0;
        let ii = i as i64;
        let e = (self.sum_deg(&full[..i]) - ii) * (self.sum_deg(&full[i..]) - n + ii - 1);
        let mut v = Vec::with_capacity(full.len() + 1);
        v.push(0);
        v.extend_from_slice(&full[i..]);
        v.extend_from_slice(&full[..i]);
        (Word(v), e)
    }

    /// Connes operator.
    pub fn b(&self, w: &Word) -> Chain<F> {
        self.b_partial(w, 1..w.len() + 2)
    }

    /// `B` restricted to the rotations starting at slot positions in `starts`
    /// (position `n + 1` is the term with `a₀` last).
    pub fn b_partial(&self, w: &Word, starts: Range<usize>) -> Chain<F> {
        let mut out = Chain::new();
        if w.a0() == 0 {
            return out;
        }
        for i in starts {
            let (nw, e) = self.rotation(w, i);
            if nw.is_normalized() {
                out.add_signed(nw, F::one(), e);
            }
        }
        out
    }

    /// `B` with each term tagged by the slot position of the old `a₀`.
    pub fn b_tagged(&self, w: &Word) -> Vec<(Word, i64, usize)> {
        if w.a0() == 0 {
            return Vec::new();
        }
        let n = w.len();
        (1..=n + 1)
            .map(|i| {
                let (nw, e) = self.rotation(w, i);
                (nw, e, n + 2 - i)
            })
            .filter(|(nw, _, _)| nw.is_normalized())
            .collect()
    }

    pub fn d_chain(&self, c: &Chain<F>) -> Chain<F> {
        c.apply(|w| self.d(w))
    }

    pub fn b_chain(&self, c: &Chain<F>) -> Chain<F> {
        c.apply(|w| self.b(w))
    }

    /// Applies a word operator of degree `op_degree` to tensor factor `k`, with Koszul sign;
    /// the output tensor of `f` replaces that factor.
    pub fn apply_at(&self, t: &Tensor<F>, k: usize, op_degree: i64, mut f: impl FnMut(&Word) -> Tensor<F>) -> Tensor<F> {
        let mut out = Tensor::new();
        for (key, c) in t {
            let pre = self.tensor_degree(&key[..k]);
            let s = F::sign(op_degree * pre) * c.clone();
            for (r, v) in &f(&key[k]) {
                let mut nk = Vec::with_capacity(key.len() + r.len() - 1);
                nk.extend_from_slice(&key[..k]);
                nk.extend_from_slice(r);
                nk.extend_from_slice(&key[k + 1..]);
                out.add_term(nk, v.clone() * s.clone());
            }
        }
        out
    }

    /// Same as [`Complex::apply_at`] for an operator with chain output.
    pub fn apply_chain_at(&self, t: &Tensor<F>, k: usize, op_degree: i64, mut f: impl FnMut(&Word) -> Chain<F>) -> Tensor<F> {
        self.apply_at(t, k, op_degree, |w| chain_to_tensor(&f(w)))
    }

    /// `Σ 1⊗…⊗D⊗…⊗1`.
    pub fn d_tensor(&self, t: &Tensor<F>) -> Tensor<F> {
        let mut out = Tensor::new();
        for (key, c) in t {
            let mut pre = 0;
            for (k, w) in key.iter().enumerate() {
                for (nw, v) in &self.d(w) {
                    let mut nk = key.clone();
                    nk[k] = nw.clone();
                    out.add_signed(nk, c.clone() * v.clone(), pre);
                }
                pre += self.degree(w);
            }
        }
        out
    }

    /// Koszul reordering: factor `order[k]` moves to position `k`.
    pub fn permute(&self, t: &Tensor<F>, order: &[usize]) -> Tensor<F> {
        let mut out = Tensor::new();
        for (key, c) in t {
            let degs: Vec<i64> = order.iter().map(|&i| self.degree(&key[i])).collect();
            let nk: Vec<Word> = order.iter().map(|&i| key[i].clone()).collect();
            out.add_signed(nk, c.clone(), permutation_exponent(order, &degs));
        }
        out
    }

    /// `τ(u⊗v) = (-1)^{|u||v|} v⊗u` on two-fold tensors.
    pub fn tau(&self, t: &Tensor<F>) -> Tensor<F> {
        self.permute(t, &[1, 0])
    }

    /// All normalized words in the window, ordered by length then lexicographically.
    pub fn enumerate_words(&self, t: &Truncation) -> Vec<Word> {
        let n = self.alg.dim() as u16;
        let mut out = Vec::new();
        let mut level: Vec<Vec<u16>> = (0..n).map(|a| vec![a]).collect();
        for len in 0..=t.max_length {
            if len > 0 {
                let mut next = Vec::with_capacity(level.len() * (n as usize).saturating_sub(1));
                for w in &level {
                    for a in 1..n {
                        let mut v = w.clone();
                        v.push(a);
                        next.push(v);
                    }
                }
                level = next;
            }
            out.extend(level.iter().cloned().map(Word));
        }
        out.sort();
        if let Some(dmax) = t.max_degree {
            out.retain(|w| self.degree(w) <= dmax);
        }
        out
    }

    /// Words of exactly `len` slots.
    pub fn words_of_length(&self, len: usize) -> Vec<Word> {
        let mut v = self.enumerate_words(&Truncation::new(len));
        v.retain(|w| w.len() == len);
        v
    }

    /// Matrix of `op` from `domain` to `codomain`; any output word outside `codomain` is an error.
    pub fn operator_matrix(
        &self,
        domain: &[Word],
        codomain: &[Word],
        mut op: impl FnMut(&Word) -> Chain<F>,
    ) -> Result<SparseMatrix<F>, ChainError> {
        let index: BTreeMap<&Word, usize> = codomain.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let max_length = codomain.iter().map(Word::len).max().unwrap_or(0);
        let mut trip = Vec::new();
        for (j, w) in domain.iter().enumerate() {
            for (nw, c) in &op(w) {
                match index.get(nw) {
                    Some(&i) => trip.push((i, j, c.clone())),
                    None => {
                        return Err(ChainError::TruncationOverflow { word: self.word_name(nw), max_length });
                    }
                }
            }
        }
        Ok(SparseMatrix::from_triplets(codomain.len(), domain.len(), trip).expect("indices from enumeration"))
    }

    /// One term per line: `coeff a0 [a1,...,an]`.
    pub fn dump(&self, c: &Chain<F>) -> String {
        let mut s = String::new();
        for (w, v) in c {
            let slots: Vec<&str> = w.slots().iter().map(|&a| self.alg.name(a as usize)).collect();
            let _ = writeln!(s, "{} {} [{}]", v.to_ratio_string(), self.alg.name(w.a0()), slots.join(","));
        }
        s
    }

    /// One term per line: `coeff a0 [a1,...] ⊗ b0 [b1,...]`.
    pub fn dump_tensor(&self, t: &Tensor<F>) -> String {
        let mut s = String::new();
        for (key, v) in t {
            let parts: Vec<String> = key
                .iter()
                .map(|w| {
                    let slots: Vec<&str> = w.slots().iter().map(|&a| self.alg.name(a as usize)).collect();
                    format!("{} [{}]", self.alg.name(w.a0()), slots.join(","))
                })
                .collect();
            let _ = writeln!(s, "{} {}", v.to_ratio_string(), parts.join(" ⊗ "));
        }
        s
    }

    /// Smallest suspended slot degree `|a| - 1` over non-unit basis elements.
    fn min_slot_degree(&self) -> Option<i64> {
        (1..self.alg.dim()).map(|a| self.alg.deg(a) - 1).min()
    }

    /// Homology of the window.
    ///
    /// With `d_A = 0` the complex is bigraded by (degree, length) and `D` lowers length by
    /// one, so each bidegree with length ≤ L is computed exactly using words of length L + 1
    /// as boundaries. Otherwise the length ≤ L subcomplex is used and a degree is exact only
    /// when the window holds every word of the neighbouring degrees.
    pub fn homology(&self, t: &Truncation) -> HomologyProfile {
        let mut entries = Vec::new();
        if self.alg.has_zero_differential() {
            let words = self.enumerate_words(&Truncation::new(t.max_length + 1));
            let mut groups: BTreeMap<(i64, usize), Vec<Word>> = BTreeMap::new();
            for w in words {
                groups.entry((self.degree(&w), w.len())).or_default().push(w);
            }
            let empty = Vec::new();
            for (&(d, n), mid) in &groups {
                if n > t.max_length || t.max_degree.is_some_and(|dm| d > dm) {
                    continue;
                }
                let src = groups.get(&(d - 1, n + 1)).unwrap_or(&empty);
                let tgt = if n == 0 { &empty } else { groups.get(&(d + 1, n - 1)).unwrap_or(&empty) };
                let d_in = self.operator_matrix(src, mid, |w| self.d(w)).expect("bigraded");
                let d_out = self.operator_matrix(mid, tgt, |w| self.d(w)).expect("bigraded");
                let dim = homology_dims(&d_in, &d_out).expect("D squares to zero");
                entries.push(HomologyEntry { degree: d, length: Some(n), dimension: dim, exact: true });
            }
        } else {
            let words = self.enumerate_words(&Truncation::new(t.max_length));
            let mut groups: BTreeMap<i64, Vec<Word>> = BTreeMap::new();
            for w in words {
                groups.entry(self.degree(&w)).or_default().push(w);
            }
            let empty = Vec::new();
            let s = self.min_slot_degree();
            for (&d, mid) in &groups {
                if t.max_degree.is_some_and(|dm| d > dm) {
                    continue;
                }
                let src = groups.get(&(d - 1)).unwrap_or(&empty);
                let tgt = groups.get(&(d + 1)).unwrap_or(&empty);
                let d_in = self.operator_matrix(src, mid, |w| self.d(w)).expect("length filtration");
                let d_out = self.operator_matrix(mid, tgt, |w| self.d(w)).expect("length filtration");
                let dim = homology_dims(&d_in, &d_out).expect("D squares to zero");
                // a word of degree d + 1 has at most (d + 1) / s slots
                let exact = match s {
                    None => true,
                    Some(s) if s >= 1 => ((d + 1) / s) as usize <= t.max_length,
                    Some(_) => false,
                };
                entries.push(HomologyEntry { degree: d, length: None, dimension: dim, exact });
            }
        }
        let label = if entries.iter().all(|e| e.exact) { Exactness::Exact } else { Exactness::TruncatedApproximation };
        HomologyProfile { field: F::label(), window: *t, label, entries }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    Exact,
    TruncatedApproximation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyEntry {
    pub degree: i64,
    pub length: Option<usize>,
    pub dimension: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub field: String,
    pub window: Truncation,
    pub label: Exactness,
    pub entries: Vec<HomologyEntry>,
}

impl HomologyProfile {
    pub fn dimension(&self, degree: i64, length: Option<usize>) -> Option<usize> {
        self.entries.iter().find(|e| e.degree == degree && e.length == length).map(|e| e.dimension)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use exactlinalg::Q;

    fn w(a: &[u16]) -> Word {
        Word::new(a.to_vec())
    }

    #[test]
    fn enumeration_counts() {
        let a = fixtures::x3d2();
        let c = Complex::new(&a);
        let l0 = c.enumerate_words(&Truncation::new(0));
        assert_eq!(l0, vec![w(&[0]), w(&[1]), w(&[2])]);
        assert_eq!(c.enumerate_words(&Truncation::new(1)).len(), 9);
        let k = fixtures::ground();
        assert_eq!(Complex::new(&k).enumerate_words(&Truncation::new(3)), vec![w(&[0])]);
    }

    #[test]
    fn differential_on_small_words() {
        let a = fixtures::x3d2();
        let c = Complex::new(&a);
        assert!(c.d(&w(&[1])).is_zero());
        assert!(c.d(&w(&[0, 1])).is_zero());
        assert!(c.d(&w(&[1, 1])).is_zero());
    }

    #[test]
    fn connes_on_length_zero() {
        let a = fixtures::x3d2();
        let c = Complex::new(&a);
        assert_eq!(c.b(&w(&[1])), Chain::single(w(&[0, 1]), Q::from_i64(1)));
        assert!(c.b(&w(&[0, 1])).is_zero());
    }

    #[test]
    fn overflow_is_reported() {
        let a = fixtures::x3d2();
        let c = Complex::new(&a);
        let dom = c.enumerate_words(&Truncation::new(1));
        let err = c.operator_matrix(&dom, &dom, |x| c.b(x)).unwrap_err();
        assert!(matches!(err, ChainError::TruncationOverflow { .. }));
        let cod = c.enumerate_words(&Truncation::new(2));
        assert!(c.operator_matrix(&dom, &cod, |x| c.b(x)).is_ok());
    }

    #[test]
    fn ground_field_homology() {
        let k = fixtures::ground();
        let p = Complex::new(&k).homology(&Truncation::new(3));
        assert_eq!(p.entries.len(), 1);
        assert_eq!(p.dimension(0, Some(0)), Some(1));
        assert_eq!(p.label, Exactness::Exact);
    }

    #[test]
    fn dump_format() {
        let a = fixtures::x3d2();
        let c = Complex::new(&a);
        assert_eq!(c.dump(&c.b(&w(&[2]))), "1/1 1 [x2]\n");
    }
}
