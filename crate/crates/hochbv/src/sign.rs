//! Koszul sign bookkeeping.
//!
//! Signs are tracked as integer exponents of `-1`; only their parity matters.

/// Sequence of labelled graded symbols, accumulating the Koszul exponent of
/// every insertion, suspension and final reordering.
#[derive(Clone, Debug)]
pub struct Koszul {
    seq: Vec<(u32, i64)>,
    exponent: i64,
}

impl Koszul {
    pub fn new(items: impl IntoIterator<Item = (u32, i64)>) -> Self {
        Koszul { seq: items.into_iter().collect(), exponent: 0 }
    }

    fn position(&self, label: u32) -> usize {
        self.seq.iter().position(|(l, _)| *l == label).expect("label present")
    }

    fn degree_before(&self, pos: usize) -> i64 {
        self.seq[..pos].iter().map(|(_, d)| d).sum()
    }

    /// Applies an operator of degree `op_degree` producing the pair `a, b` right after
    /// `after` (or at the front when `None`).
    pub fn insert(&mut self, after: Option<u32>, a: (u32, i64), b: (u32, i64), op_degree: i64) -> &mut Self {
        let pos = after.map_or(0, |l| self.position(l) + 1);
        self.exponent += op_degree * self.degree_before(pos);
        self.seq.splice(pos..pos, [a, b]);
        self
    }

    /// Applies the suspension `s` (degree -1) to the symbol `label`.
    pub fn suspend(&mut self, label: u32) -> &mut Self {
        let pos = self.position(label);
        self.exponent += self.degree_before(pos);
        self.seq[pos].1 -= 1;
        self
    }

    pub fn twist(&mut self, e: i64) -> &mut Self {
        self.exponent += e;
        self
    }

    /// Total exponent after permuting the symbols into `target` order.
    pub fn finish(&self, target: &[u32]) -> i64 {
        assert_eq!(target.len(), self.seq.len(), "target must be a permutation");
        let mut degs = Vec::with_capacity(target.len());
        let mut idx = Vec::with_capacity(target.len());
        for t in target {
            let p = self.position(*t);
            idx.push(p);
            degs.push(self.seq[p].1);
        }
        self.exponent + permutation_exponent(&idx, &degs)
    }
}

/// Koszul exponent of moving graded items so that item `order[k]` ends at position `k`.
pub fn permutation_exponent(order: &[usize], degrees: &[i64]) -> i64 {
    let mut e = 0;
    for x in 0..order.len() {
        for y in x + 1..order.len() {
            if order[x] > order[y] {
                e += degrees[x] * degrees[y];
            }
        }
    }
    e
}

/// A value regraded by `shift`: its degree is the original degree plus `shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shifted<T> {
    pub value: T,
    pub shift: i64,
}

pub fn shift<T>(value: T, by: i64) -> Shifted<T> {
    Shifted { value, shift: by }
}

impl<T> Shifted<T> {
    pub fn unshift(self) -> T {
        self.value
    }

    pub fn degree(&self, original: i64) -> i64 {
        original + self.shift
    }
}

/// Exponent acquired by a binary product pulled back along a shift by `m`:
/// `μ_m(s a, s b) = (-1)^{m|a|} s μ(a, b)`.
pub fn pullback_exponent(m: i64, left_degree: i64) -> i64 {
    m * left_degree
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_of_odd_items() {
        assert_eq!(permutation_exponent(&[1, 0], &[1, 1]) % 2, 1);
        assert_eq!(permutation_exponent(&[1, 0], &[1, 2]) % 2, 0);
    }

    #[test]
    fn insertion_passes_earlier_items() {
        let mut k = Koszul::new([(0, 1), (1, 3)]);
        k.insert(Some(0), (2, 0), (3, 1), 1);
        assert_eq!(k.finish(&[0, 2, 3, 1]), 1);
        k.suspend(1);
        // suspending the last item passes degrees 1 + 0 + 1
        assert_eq!(k.finish(&[0, 2, 3, 1]), 3);
    }

    #[test]
    fn shift_round_trip() {
        let s = shift(7, 4);
        assert_eq!(s.degree(1), 5);
        assert_eq!(s.unshift(), 7);
    }
}
