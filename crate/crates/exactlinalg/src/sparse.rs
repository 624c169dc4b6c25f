use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::{Field, LinalgError};

/// Sparse vector as a sorted list of `(index, nonzero value)`.
pub type SparseVec<F> = Vec<(usize, F)>;

/// Row-major sparse matrix with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<F>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].push((i, F::one()));
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, F)>,
    {
        let mut acc: Vec<BTreeMap<usize, F>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(LinalgError::IndexOutOfRange { row: r, col: c, rows, cols });
            }
            let slot = acc[r].entry(c).or_insert_with(F::zero);
            *slot += v;
        }
        let data = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Ok(SparseMatrix { rows, cols, data })
    }

    /// Builds a matrix from its columns, each a sparse vector of row indices.
    pub fn from_columns(rows: usize, columns: &[SparseVec<F>]) -> Result<Self, LinalgError> {
        let trip = columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v.clone())));
        Self::from_triplets(rows, columns.len(), trip)
    }

    pub fn from_dense(rows: &[Vec<F>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let trip = rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (i, j, v.clone())));
        Self::from_triplets(r, c, trip).expect("dense input is in range")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, F)] {
        &self.data[i]
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        self.data[r]
            .binary_search_by_key(&c, |(j, _)| *j)
            .map(|k| self.data[r][k].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// Triplets in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<SparseVec<F>> = vec![Vec::new(); self.cols];
        for (i, j, v) in self.triplets() {
            data[j].push((i, v.clone()));
        }
        SparseMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul_vec(&self, x: &[(usize, F)]) -> Result<SparseVec<F>, LinalgError> {
        let dense: BTreeMap<usize, &F> = x.iter().map(|(i, v)| (*i, v)).collect();
        if let Some((&i, _)) = dense.iter().next_back() {
            if i >= self.cols {
                return Err(LinalgError::DimensionMismatch(format!(
                    "vector index {i} with {} columns",
                    self.cols
                )));
            }
        }
        let mut out = Vec::new();
        for (i, row) in self.data.iter().enumerate() {
            let mut s = F::zero();
            for (j, v) in row {
                if let Some(xj) = dense.get(j) {
                    s += v.clone() * (*xj).clone();
                }
            }
            if !s.is_zero() {
                out.push((i, s));
            }
        }
        Ok(out)
    }

    /// `self * other`.
    pub fn matmul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut acc: BTreeMap<usize, F> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    *acc.entry(*j).or_insert_with(F::zero) += a.clone() * b.clone();
                }
            }
            data.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(SparseMatrix { rows: self.rows, cols: other.cols, data })
    }

    /// Coordinate export: header `rows cols nnz field`, then `row col num/den` lines.
    pub fn to_coordinate(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} {} {}", self.rows, self.cols, self.nnz(), F::label());
        for (i, j, v) in self.triplets() {
            let _ = writeln!(s, "{} {} {}", i, j, v.to_ratio_string());
        }
        s
    }

    pub fn from_coordinate(text: &str) -> Result<Self, LinalgError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let head = lines.next().ok_or_else(|| LinalgError::Parse("empty matrix file".into()))?;
        let h: Vec<&str> = head.split_whitespace().collect();
        if h.len() != 4 {
            return Err(LinalgError::Parse(format!("bad header: {head}")));
        }
        let num = |x: &str| x.parse::<usize>().map_err(|_| LinalgError::Parse(x.to_string()));
        let (rows, cols, nnz) = (num(h[0])?, num(h[1])?, num(h[2])?);
        if h[3] != F::label() {
            return Err(LinalgError::Parse(format!("field {} does not match {}", h[3], F::label())));
        }
        let mut trip = Vec::with_capacity(nnz);
        for line in lines {
            let p: Vec<&str> = line.split_whitespace().collect();
            if p.len() != 3 {
                return Err(LinalgError::Parse(format!("bad entry: {line}")));
            }
            trip.push((num(p[0])?, num(p[1])?, F::parse(p[2])?));
        }
        if trip.len() != nnz {
            return Err(LinalgError::Parse(format!("expected {nnz} entries, found {}", trip.len())));
        }
        Self::from_triplets(rows, cols, trip)
    }

    pub(crate) fn into_rows(self) -> Vec<SparseVec<F>> {
        self.data
    }
}

/// `a - c * b` on sorted sparse vectors.
pub(crate) fn axpy<F: Field>(a: &[(usize, F)], c: &F, b: &[(usize, F)]) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(c.clone() * b[j].1.clone())));
            j += 1;
        } else {
            let v = a[i].1.clone() - c.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
