use std::collections::BTreeMap;

use crate::sparse::{axpy, SparseMatrix, SparseVec};
use crate::{Field, LinalgError};

/// Row echelon basis keyed by leading column; each pivot row has leading entry 1.
struct Echelon<F> {
    pivots: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> Echelon<F> {
    fn new() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }

    /// Clears every pivot column from `v`.
    fn reduce(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        let mut i = 0;
        while i < v.len() {
            let (c, x) = (v[i].0, v[i].1.clone());
            match self.pivots.get(&c) {
                Some(p) => v = axpy(&v, &x, p),
                None => i += 1,
            }
        }
        v
    }

    /// Inserts a reduced nonzero row; returns its pivot column.
    fn insert(&mut self, v: SparseVec<F>, back_substitute: bool) -> usize {
        let (c, lead) = (v[0].0, v[0].1.clone());
        let inv = lead.inv().expect("nonzero leading entry");
        let v: SparseVec<F> = v.into_iter().map(|(j, x)| (j, x * inv.clone())).collect();
        if back_substitute {
            for row in self.pivots.values_mut() {
                if let Ok(k) = row.binary_search_by_key(&c, |(j, _)| *j) {
                    let x = row[k].1.clone();
                    *row = axpy(row, &x, &v);
                }
            }
        }
        self.pivots.insert(c, v);
        c
    }

    fn absorb(&mut self, v: SparseVec<F>, back_substitute: bool) -> Option<usize> {
        let v = self.reduce(v);
        if v.is_empty() {
            None
        } else {
            Some(self.insert(v, back_substitute))
        }
    }
}

pub fn rank<F: Field>(m: &SparseMatrix<F>) -> usize {
    let mut e = Echelon::new();
    let mut r = 0;
    for row in m.clone().into_rows() {
        if e.absorb(row, false).is_some() {
            r += 1;
        }
    }
    r
}

/// Rank and a kernel basis. Kernel vectors are indexed by column and have a 1 in their free column.
pub fn rank_kernel<F: Field>(m: &SparseMatrix<F>) -> (usize, Vec<SparseVec<F>>) {
    let mut e = Echelon::new();
    for row in m.clone().into_rows() {
        e.absorb(row, true);
    }
    let rank = e.pivots.len();
    let mut kernel = Vec::with_capacity(m.cols() - rank);
    for f in (0..m.cols()).filter(|c| !e.pivots.contains_key(c)) {
        let mut v: BTreeMap<usize, F> = BTreeMap::new();
        v.insert(f, F::one());
        for (pc, row) in &e.pivots {
            if let Ok(k) = row.binary_search_by_key(&f, |(j, _)| *j) {
                v.insert(*pc, -row[k].1.clone());
            }
        }
        kernel.push(v.into_iter().collect());
    }
    (rank, kernel)
}

/// Outcome of [`solve`]; inconsistency is a value, not an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution<F> {
    Solved(SparseVec<F>),
    Inconsistent,
}

/// Finds `x` with `m x = b`, free variables set to zero.
pub fn solve<F: Field>(m: &SparseMatrix<F>, b: &[(usize, F)]) -> Result<Solution<F>, LinalgError> {
    if let Some((i, _)) = b.iter().find(|(i, _)| *i >= m.rows()) {
        return Err(LinalgError::DimensionMismatch(format!("rhs index {i} with {} rows", m.rows())));
    }
    let aug = m.cols();
    let rhs: BTreeMap<usize, &F> = b.iter().map(|(i, v)| (*i, v)).collect();
    let mut e = Echelon::new();
    for (i, row) in m.clone().into_rows().into_iter().enumerate() {
        let mut row = row;
        if let Some(v) = rhs.get(&i) {
            if !v.is_zero() {
                row.push((aug, (*v).clone()));
            }
        }
        if e.absorb(row, true) == Some(aug) {
            return Ok(Solution::Inconsistent);
        }
    }
    let mut x = Vec::new();
    for (pc, row) in &e.pivots {
        if let Some((j, v)) = row.last() {
            if *j == aug {
                x.push((*pc, v.clone()));
            }
        }
    }
    Ok(Solution::Solved(x))
}

/// dim ker(`d_out`) - rank(`d_in`) at the middle space of `. -d_in-> . -d_out-> .`.
pub fn homology_dims<F: Field>(
    d_in: &SparseMatrix<F>,
    d_out: &SparseMatrix<F>,
) -> Result<usize, LinalgError> {
    if d_out.cols() != d_in.rows() {
        return Err(LinalgError::DimensionMismatch(format!(
            "d_out has {} columns, d_in has {} rows",
            d_out.cols(),
            d_in.rows()
        )));
    }
    if !d_out.matmul(d_in)?.is_zero() {
        return Err(LinalgError::NotAComplex);
    }
    let middle = d_in.rows();
    Ok(middle - rank(d_out) - rank(d_in))
}
