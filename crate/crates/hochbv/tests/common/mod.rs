//! A second, deliberately naive evaluator for D, B, θ and •, written straight from the
//! displayed formulas on plain index vectors, plus a dense homology computation.
#![allow(dead_code)]

use std::collections::BTreeMap;

use exactlinalg::Q;
use hochbv::QAlgebra;
use num_traits::{One, Zero};

pub type V = BTreeMap<Vec<usize>, Q>;
pub type V2 = BTreeMap<(Vec<usize>, Vec<usize>), Q>;

pub fn pm(e: i64) -> Q {
    if e.rem_euclid(2) == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

pub fn push<K: Ord>(v: &mut BTreeMap<K, Q>, k: K, c: Q) {
    let e = v.entry(k).or_insert_with(Q::zero);
    *e += c;
}

pub fn clean<K: Ord>(mut v: BTreeMap<K, Q>) -> BTreeMap<K, Q> {
    v.retain(|_, c| !c.is_zero());
    v
}

pub struct Oracle<'a> {
    pub a: &'a QAlgebra,
}

impl Oracle<'_> {
    pub fn deg(&self, i: usize) -> i64 {
        self.a.deg(i)
    }

    pub fn word_degree(&self, w: &[usize]) -> i64 {
        w.iter().map(|&i| self.deg(i)).sum::<i64>() - (w.len() as i64 - 1)
    }

    /// All words a₀[a₁…aₙ] with n ≤ l and non-unit slots.
    pub fn words(&self, l: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0..self.a.dim()).map(|i| vec![i]).collect();
        let mut layer = out.clone();
        for _ in 0..l {
            let mut next = Vec::new();
            for w in &layer {
                for s in 1..self.a.dim() {
                    let mut v = w.clone();
                    v.push(s);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// ε_i = |a₀| + |a₁| + … + |a_{i−1}| − i + 1.
    pub fn eps(&self, w: &[usize], i: usize) -> i64 {
        w[..i].iter().map(|&x| self.deg(x)).sum::<i64>() - i as i64 + 1
    }

    pub fn d(&self, w: &[usize]) -> V {
        let n = w.len() - 1;
        let mut out = V::new();
        // d₀
        for (t, c) in self.a.d(w[0]) {
            let mut v = w.to_vec();
            v[0] = *t;
            push(&mut out, v, c.clone());
        }
        for i in 1..=n {
            for (t, c) in self.a.d(w[i]) {
                if *t == 0 {
                    continue;
                }
                let mut v = w.to_vec();
                v[i] = *t;
                push(&mut out, v, -pm(self.eps(w, i)) * c.clone());
            }
        }
        if n == 0 {
            return clean(out);
        }
        // d₁
        for (t, c) in self.a.mul(w[0], w[1]) {
            let mut v = vec![*t];
            v.extend_from_slice(&w[2..]);
            push(&mut out, v, pm(self.deg(w[0])) * c.clone());
        }
        for i in 2..=n {
            for (t, c) in self.a.mul(w[i - 1], w[i]) {
                if *t == 0 {
                    continue;
                }
                let mut v = w[..i - 1].to_vec();
                v.push(*t);
                v.extend_from_slice(&w[i + 1..]);
                push(&mut out, v, pm(self.eps(w, i)) * c.clone());
            }
        }
        for (t, c) in self.a.mul(w[n], w[0]) {
            let mut v = vec![*t];
            v.extend_from_slice(&w[1..n]);
            push(&mut out, v, -pm(self.eps(w, n) * (self.deg(w[n]) + 1)) * c.clone());
        }
        clean(out)
    }

    /// Sum of cyclic rotations, signed by counting inversions of suspended degrees.
    pub fn b(&self, w: &[usize]) -> V {
        let mut out = V::new();
        if w[0] == 0 {
            return out;
        }
        let n = w.len() - 1;
        let s: Vec<i64> = w.iter().map(|&x| self.deg(x) - 1).collect();
        for i in 1..=n + 1 {
            let order: Vec<usize> = (i..=n).chain(0..i).collect();
            let mut e = 0;
            for p in 0..order.len() {
                for q in p + 1..order.len() {
                    if order[p] > order[q] {
                        e += s[order[p]] * s[order[q]];
                    }
                }
            }
            let mut v = vec![0];
            v.extend(order.iter().map(|&k| w[k]));
            push(&mut out, v, pm(e));
        }
        clean(out)
    }

    pub fn theta(&self, w: &[usize]) -> V2 {
        let mut out = V2::new();
        let n = w.len() - 1;
        for (p, q, c) in self.a.cop(w[0]) {
            for i in 0..=n {
                let sigma = self.deg(*q) + w[1..=i].iter().map(|&x| self.deg(x)).sum::<i64>() + i as i64;
                let mut left = vec![*q];
                left.extend_from_slice(&w[1..=i]);
                let mut right = vec![*p];
                right.extend_from_slice(&w[i + 1..]);
                push(&mut out, (left, right), pm(self.deg(*p) * sigma) * c.clone());
            }
        }
        clean(out)
    }

    pub fn bullet(&self, x: &[usize], y: &[usize]) -> V {
        let mut out = V::new();
        if x.len() > 1 {
            return out;
        }
        for (p, q, c) in self.a.cop(x[0]) {
            for (r, c1) in self.a.mul(*q, *p) {
                for (t, c2) in self.a.mul(*r, y[0]) {
                    let mut v = y.to_vec();
                    v[0] = *t;
                    push(&mut out, v, pm(self.deg(*p) * self.deg(*q)) * c.clone() * c1.clone() * c2.clone());
                }
            }
        }
        clean(out)
    }
}

/// Rank of a dense matrix by fraction Gaussian elimination.
pub fn dense_rank(mut m: Vec<Vec<Q>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone() / piv.clone();
            for j in c..cols {
                let t = m[r][j].clone() * f.clone();
                m[i][j] -= t;
            }
        }
        r += 1;
    }
    r
}

/// Dense matrix of D from `src` to `tgt`, rows indexed by `tgt`.
pub fn dense(o: &Oracle, src: &[Vec<usize>], tgt: &[Vec<usize>]) -> Vec<Vec<Q>> {
    let index: BTreeMap<&Vec<usize>, usize> = tgt.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut m = vec![vec![Q::zero(); src.len()]; tgt.len()];
    for (j, w) in src.iter().enumerate() {
        for (k, c) in o.d(w) {
            let i = index.get(&k).expect("D stays in the window");
            m[*i][j] = c;
        }
    }
    m
}

/// (degree, length, dimension) triples, mirroring the library's window conventions.
pub fn dense_homology(a: &QAlgebra, l: usize) -> Vec<(i64, Option<usize>, usize)> {
    let o = Oracle { a };
    let flat = (0..a.dim()).all(|i| a.d(i).is_empty());
    let mut out = Vec::new();
    if flat {
        let mut groups: BTreeMap<(i64, usize), Vec<Vec<usize>>> = BTreeMap::new();
        for w in o.words(l + 1) {
            groups.entry((o.word_degree(&w), w.len() - 1)).or_default().push(w);
        }
        for (&(d, n), mid) in groups.range(..).filter(|((_, n), _)| *n <= l) {
            let none = Vec::new();
            let src = groups.get(&(d - 1, n + 1)).unwrap_or(&none);
            let tgt = if n == 0 { &none } else { groups.get(&(d + 1, n - 1)).unwrap_or(&none) };
            let dim = mid.len() - dense_rank(dense(&o, mid, tgt)) - dense_rank(dense(&o, src, mid));
            out.push((d, Some(n), dim));
        }
    } else {
        let mut groups: BTreeMap<i64, Vec<Vec<usize>>> = BTreeMap::new();
        for w in o.words(l) {
            groups.entry(o.word_degree(&w)).or_default().push(w);
        }
        let none = Vec::new();
        for (&d, mid) in &groups {
            let src = groups.get(&(d - 1)).unwrap_or(&none);
            let tgt = groups.get(&(d + 1)).unwrap_or(&none);
            let dim = mid.len() - dense_rank(dense(&o, mid, tgt)) - dense_rank(dense(&o, src, mid));
            out.push((d, None, dim));
        }
    }
    out
}
