//! Sparse vectors and matrices over ℚ(i).
//!
//! A vector is a sorted list of `(index, coefficient)` pairs with no zero
//! coefficients; a matrix is a row-major list of such vectors. Elimination
//! is plain exact Gauss–Jordan over the field: the pivot is always the first
//! nonzero entry in column order, rows are normalised to a leading 1, and
//! the result is the (unique) reduced row echelon form of the row space.

use std::fmt;

use super::scalar::GaussianRational;

/// A sparse coordinate vector: strictly increasing indices, no zeros stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct SparseVector {
    entries: Vec<(usize, GaussianRational)>,
}

impl SparseVector {
    pub fn new() -> Self {
        SparseVector { entries: vec![] }
    }

    pub fn unit(index: usize) -> Self {
        SparseVector {
            entries: vec![(index, GaussianRational::one())],
        }
    }

    /// Builds from unsorted pairs, combining duplicates and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, GaussianRational)>) -> Self {
        let mut entries: Vec<(usize, GaussianRational)> = pairs.into_iter().collect();
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, GaussianRational)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += &c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        SparseVector { entries: out }
    }

    pub fn from_dense(values: &[GaussianRational]) -> Self {
        SparseVector {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<GaussianRational> {
        let mut out = vec![GaussianRational::zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, GaussianRational)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, index: usize) -> GaussianRational {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => GaussianRational::zero(),
        }
    }

    /// Index of the first nonzero coordinate.
    pub fn leading(&self) -> Option<usize> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn leading_coeff(&self) -> Option<&GaussianRational> {
        self.entries.first().map(|(_, c)| c)
    }

    pub fn scale(&self, factor: &GaussianRational) -> Self {
        if factor.is_zero() {
            return SparseVector::new();
        }
        SparseVector {
            entries: self
                .entries
                .iter()
                .map(|(i, c)| (*i, c * factor))
                .collect(),
        }
    }

    /// `self + factor · other`, merged in one pass.
    pub fn add_scaled(&self, other: &SparseVector, factor: &GaussianRational) -> Self {
        if factor.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, _)), Some((ib, _))) if ia < ib => {
                    out.push(a.next().unwrap().clone());
                }
                (Some((ia, _)), Some((ib, _))) if ia > ib => {
                    let (i, c) = b.next().unwrap();
                    out.push((*i, c * factor));
                }
                (Some(_), Some(_)) => {
                    let (i, ca) = a.next().unwrap();
                    let (_, cb) = b.next().unwrap();
                    let c = ca.clone() + cb * factor;
                    if !c.is_zero() {
                        out.push((*i, c));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (i, c) = b.next().unwrap();
                    out.push((*i, c * factor));
                }
                (None, None) => break,
            }
        }
        SparseVector { entries: out }
    }

    pub fn add(&self, other: &SparseVector) -> Self {
        self.add_scaled(other, &GaussianRational::one())
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-GaussianRational::one()))
    }

    /// Shifts every index by `offset` (embedding into a larger space).
    pub fn shifted(&self, offset: usize) -> Self {
        SparseVector {
            entries: self
                .entries
                .iter()
                .map(|(i, c)| (i + offset, c.clone()))
                .collect(),
        }
    }

    /// Keeps indices in `[lo, hi)` and rebases them to start at zero.
    pub fn restricted(&self, lo: usize, hi: usize) -> Self {
        SparseVector {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= lo && *i < hi)
                .map(|(i, c)| (i - lo, c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for SparseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(i, c)| format!("({c})e{i}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A sparse matrix over ℚ(i), stored as rows. No zero entries are kept.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    row_data: Vec<SparseVector>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            row_data: vec![SparseVector::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            row_data: (0..n).map(SparseVector::unit).collect(),
        }
    }

    /// Builds from `(row, col, value)` triples; duplicate positions add up.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, GaussianRational)>,
    ) -> Self {
        let mut per_row: Vec<Vec<(usize, GaussianRational)>> = vec![vec![]; rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) out of bounds");
            per_row[r].push((c, v));
        }
        SparseMatrix {
            rows,
            cols,
            row_data: per_row.into_iter().map(SparseVector::from_pairs).collect(),
        }
    }

    pub fn from_rows(cols: usize, row_data: Vec<SparseVector>) -> Self {
        for r in &row_data {
            if let Some(lead) = r.entries.last() {
                assert!(lead.0 < cols, "row entry out of bounds");
            }
        }
        SparseMatrix {
            rows: row_data.len(),
            cols,
            row_data,
        }
    }

    /// Column-wise constructor: column `j` holds the image of basis vector `j`.
    pub fn from_columns(rows: usize, columns: &[SparseVector]) -> Self {
        let mut entries = vec![];
        for (j, col) in columns.iter().enumerate() {
            for (i, c) in col.iter() {
                entries.push((*i, j, c.clone()));
            }
        }
        SparseMatrix::from_entries(rows, columns.len(), entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &SparseVector {
        &self.row_data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> GaussianRational {
        self.row_data[r].get(c)
    }

    pub fn is_zero(&self) -> bool {
        self.row_data.iter().all(SparseVector::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.row_data.iter().map(SparseVector::nnz).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &GaussianRational)> {
        self.row_data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_entries(
            self.cols,
            self.rows,
            self.entries().map(|(r, c, v)| (c, r, v.clone())),
        )
    }

    /// Matrix–vector product `M·x`.
    pub fn apply(&self, x: &SparseVector) -> SparseVector {
        assert!(
            x.leading().map_or(true, |_| x.entries.last().unwrap().0 < self.cols),
            "vector index out of bounds"
        );
        let mut pairs = vec![];
        for (r, row) in self.row_data.iter().enumerate() {
            let mut acc = GaussianRational::zero();
            // Both lists are sorted; intersect them.
            let (mut i, mut j) = (0usize, 0usize);
            let (re, xe) = (&row.entries, &x.entries);
            while i < re.len() && j < xe.len() {
                match re[i].0.cmp(&xe[j].0) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        acc += &(&re[i].1 * &xe[j].1);
                        i += 1;
                        j += 1;
                    }
                }
            }
            if !acc.is_zero() {
                pairs.push((r, acc));
            }
        }
        SparseVector { entries: pairs }
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut rows_out = Vec::with_capacity(self.rows);
        for row in &self.row_data {
            let mut acc = SparseVector::new();
            for (k, coeff) in row.iter() {
                acc = acc.add_scaled(&rhs.row_data[*k], coeff);
            }
            rows_out.push(acc);
        }
        SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            row_data: rows_out,
        }
    }

    pub fn add(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            row_data: self
                .row_data
                .iter()
                .zip(&rhs.row_data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            row_data: self.row_data.iter().map(SparseVector::neg).collect(),
        }
    }

    /// Restriction to a contiguous row band `[lo, hi)`.
    pub fn row_band(&self, lo: usize, hi: usize) -> SparseMatrix {
        SparseMatrix {
            rows: hi - lo,
            cols: self.cols,
            row_data: self.row_data[lo..hi].to_vec(),
        }
    }

    /// Restriction to a contiguous column band `[lo, hi)`.
    pub fn col_band(&self, lo: usize, hi: usize) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: hi - lo,
            row_data: self
                .row_data
                .iter()
                .map(|r| r.restricted(lo, hi))
                .collect(),
        }
    }
}

/// Reduced row echelon form of a list of rows.
///
/// Deterministic: pivot column = leftmost column with a nonzero entry among
/// the remaining rows, pivot row = the first such row in the current order.
/// Returns the nonzero RREF rows (sorted by pivot) and their pivot columns.
pub(crate) fn row_reduce(mut rows: Vec<SparseVector>) -> (Vec<SparseVector>, Vec<usize>) {
    let mut done: Vec<SparseVector> = vec![];
    rows.retain(|r| !r.is_zero());
    while !rows.is_empty() {
        // First nonzero in column order: the row with the smallest leading index.
        let mut best = 0usize;
        for (idx, row) in rows.iter().enumerate() {
            if row.leading().unwrap() < rows[best].leading().unwrap() {
                best = idx;
            }
        }
        let pivot_row = rows.remove(best);
        let pivot_col = pivot_row.leading().unwrap();
        let lead = pivot_row.leading_coeff().unwrap().clone();
        let pivot_row = pivot_row.scale(&lead.inv());
        for row in rows.iter_mut() {
            let c = row.get(pivot_col);
            if !c.is_zero() {
                *row = row.add_scaled(&pivot_row, &(-c));
            }
        }
        for row in done.iter_mut() {
            let c = row.get(pivot_col);
            if !c.is_zero() {
                *row = row.add_scaled(&pivot_row, &(-c));
            }
        }
        done.push(pivot_row);
        rows.retain(|r| !r.is_zero());
    }
    done.sort_by_key(|r| r.leading().unwrap());
    let pivots = done.iter().map(|r| r.leading().unwrap()).collect();
    (done, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(p: i64, q: i64) -> GaussianRational {
        GaussianRational::from_ratio(p, q)
    }

    #[test]
    fn vector_merge_arithmetic() {
        let a = SparseVector::from_pairs([(0, gr(1, 1)), (2, gr(1, 2))]);
        let b = SparseVector::from_pairs([(1, gr(3, 1)), (2, gr(-1, 2))]);
        let sum = a.add(&b);
        assert_eq!(sum.get(0), gr(1, 1));
        assert_eq!(sum.get(1), gr(3, 1));
        assert!(sum.get(2).is_zero());
        assert_eq!(sum.nnz(), 2);
    }

    #[test]
    fn apply_and_mul_agree() {
        let m = SparseMatrix::from_entries(
            2,
            3,
            [
                (0, 0, gr(1, 1)),
                (0, 2, gr(2, 1)),
                (1, 1, GaussianRational::i()),
            ],
        );
        let x = SparseVector::from_pairs([(0, gr(1, 1)), (1, gr(1, 1)), (2, gr(1, 1))]);
        let y = m.apply(&x);
        assert_eq!(y.get(0), gr(3, 1));
        assert_eq!(y.get(1), GaussianRational::i());

        let id = SparseMatrix::identity(3);
        assert_eq!(m.mul(&id), m);
    }

    #[test]
    fn rref_is_canonical() {
        // Two different spanning sets of the same row space.
        let rows1 = vec![
            SparseVector::from_pairs([(0, gr(2, 1)), (1, gr(4, 1))]),
            SparseVector::from_pairs([(0, gr(1, 1)), (1, gr(2, 1)), (2, gr(1, 1))]),
        ];
        let rows2 = vec![
            SparseVector::from_pairs([(0, gr(1, 1)), (1, gr(2, 1))]),
            SparseVector::from_pairs([(2, gr(-5, 1))]),
            SparseVector::from_pairs([(0, gr(3, 1)), (1, gr(6, 1)), (2, gr(1, 1))]),
        ];
        let (r1, p1) = row_reduce(rows1);
        let (r2, p2) = row_reduce(rows2);
        assert_eq!(r1, r2);
        assert_eq!(p1, vec![0, 2]);
        assert_eq!(p2, vec![0, 2]);
    }
}
