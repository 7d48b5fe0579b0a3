use std::fmt;

use super::dense::{gauss_jordan, BitMatrix};
use super::BinaryVector;
use crate::error::{Error, Result};

/// A sparse matrix over GF(2), stored row-wise as sorted column lists.
///
/// This is the interchange type for every check matrix in the crate. Elimination
/// work goes through the packed [`BitMatrix`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<usize>>,
}

/// Output of [`BinaryMatrix::row_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduction {
    /// `transform · M`, in reduced row-echelon form; row `i` holds pivot `pivots[i]`.
    pub reduced: BinaryMatrix,
    /// Pivot columns in visiting order.
    pub pivots: Vec<usize>,
    /// Invertible `rows × rows` matrix of accumulated row operations.
    pub transform: BinaryMatrix,
}

impl RowReduction {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl BinaryMatrix {
    /// Builds a matrix from per-row column lists. Rows are sorted; duplicate or
    /// out-of-range column indices are rejected.
    pub fn new(rows: usize, cols: usize, mut entries: Vec<Vec<usize>>) -> Result<Self> {
        if entries.len() != rows {
            return Err(Error::dims(format!(
                "{} row lists supplied for {rows} rows",
                entries.len()
            )));
        }
        for row in &mut entries {
            row.sort_unstable();
            for w in row.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::DuplicateIndex(w[0]));
                }
            }
            if let Some(&last) = row.last() {
                if last >= cols {
                    return Err(Error::IndexOutOfRange {
                        index: last,
                        len: cols,
                    });
                }
            }
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub(crate) fn from_sorted_unchecked(rows: usize, cols: usize, entries: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(entries.len(), rows);
        debug_assert!(entries
            .iter()
            .all(|r| r.windows(2).all(|w| w[0] < w[1]) && r.last().map_or(true, |&c| c < cols)));
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from dense rows; nonzero entries become 1.
    pub fn from_dense<T: Copy + Default + PartialEq>(dense: &[Vec<T>]) -> Result<Self> {
        let cols = dense.first().map_or(0, Vec::len);
        let zero = T::default();
        let mut entries = Vec::with_capacity(dense.len());
        for (i, row) in dense.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::dims(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.push(
                row.iter()
                    .enumerate()
                    .filter(|(_, &b)| b != zero)
                    .map(|(j, _)| j)
                    .collect(),
            );
        }
        Ok(Self {
            rows: dense.len(),
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| vec![i]).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Column indices of the 1-entries in row `i`.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.entries[i]
    }

    pub fn row_vector(&self, i: usize) -> BinaryVector {
        BinaryVector::from_sorted_unchecked(self.cols, self.entries[i].clone())
    }

    pub fn row_lists(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i].binary_search(&j).is_ok()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.entries.iter().map(Vec::len).collect()
    }

    pub fn column_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for row in &self.entries {
            for &j in row {
                w[j] += 1;
            }
        }
        w
    }

    /// Row indices of the 1-entries in each column.
    pub fn column_lists(&self) -> Vec<Vec<usize>> {
        let mut cols = vec![Vec::new(); self.cols];
        for (i, row) in self.entries.iter().enumerate() {
            for &j in row {
                cols[j].push(i);
            }
        }
        cols
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            entries: self.column_lists(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        self.entries
            .iter()
            .map(|row| {
                let mut d = vec![0u8; self.cols];
                for &j in row {
                    d[j] = 1;
                }
                d
            })
            .collect()
    }

    /// Matrix-vector product over GF(2).
    pub fn mat_vec(&self, v: &BinaryVector) -> Result<BinaryVector> {
        if v.len() != self.cols {
            return Err(Error::dims(format!(
                "{}x{} matrix times length-{} vector",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut mask = vec![false; self.cols];
        for &j in v.support() {
            mask[j] = true;
        }
        let support = self
            .entries
            .iter()
            .enumerate()
            .filter(|(_, row)| row.iter().filter(|&&j| mask[j]).count() % 2 == 1)
            .map(|(i, _)| i)
            .collect();
        Ok(BinaryVector::from_sorted_unchecked(self.rows, support))
    }

    /// Matrix product `self · other` over GF(2).
    pub fn mul(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.cols != other.rows {
            return Err(Error::dims(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut acc = vec![false; other.cols];
        let mut seen = vec![false; other.cols];
        let mut touched = Vec::new();
        let entries = self
            .entries
            .iter()
            .map(|row| {
                for &k in row {
                    for &j in &other.entries[k] {
                        if !std::mem::replace(&mut seen[j], true) {
                            touched.push(j);
                        }
                        acc[j] = !acc[j];
                    }
                }
                let mut out = Vec::new();
                for j in touched.drain(..) {
                    if std::mem::replace(&mut acc[j], false) {
                        out.push(j);
                    }
                    seen[j] = false;
                }
                out.sort_unstable();
                out
            })
            .collect();
        Ok(BinaryMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// Kronecker product: entry `(i·Br + k, j·Bc + l)` is `A(i,j)·B(k,l)`.
    pub fn kron(&self, other: &BinaryMatrix) -> BinaryMatrix {
        let mut entries = Vec::with_capacity(self.rows * other.rows);
        for a_row in &self.entries {
            for b_row in &other.entries {
                let mut row = Vec::with_capacity(a_row.len() * b_row.len());
                for &j in a_row {
                    row.extend(b_row.iter().map(|&l| j * other.cols + l));
                }
                entries.push(row);
            }
        }
        BinaryMatrix {
            rows: self.rows * other.rows,
            cols: self.cols * other.cols,
            entries,
        }
    }

    /// Horizontal concatenation `[A | B | ...]`.
    pub fn hstack(blocks: &[&BinaryMatrix]) -> Result<BinaryMatrix> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if let Some(b) = blocks.iter().find(|b| b.rows != rows) {
            return Err(Error::dims(format!(
                "hstack of blocks with {rows} and {} rows",
                b.rows
            )));
        }
        let mut entries = vec![Vec::new(); rows];
        let mut offset = 0;
        for b in blocks {
            for (row, src) in entries.iter_mut().zip(&b.entries) {
                row.extend(src.iter().map(|&j| j + offset));
            }
            offset += b.cols;
        }
        Ok(BinaryMatrix {
            rows,
            cols: offset,
            entries,
        })
    }

    /// Vertical concatenation.
    pub fn vstack(blocks: &[&BinaryMatrix]) -> Result<BinaryMatrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if let Some(b) = blocks.iter().find(|b| b.cols != cols) {
            return Err(Error::dims(format!(
                "vstack of blocks with {cols} and {} columns",
                b.cols
            )));
        }
        let entries: Vec<Vec<usize>> = blocks.iter().flat_map(|b| b.entries.iter().cloned()).collect();
        Ok(BinaryMatrix {
            rows: entries.len(),
            cols,
            entries,
        })
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_rows(cols: usize, rows: &[BinaryVector]) -> Result<BinaryMatrix> {
        if let Some(v) = rows.iter().find(|v| v.len() != cols) {
            return Err(Error::dims(format!(
                "row of length {} for a {cols}-column matrix",
                v.len()
            )));
        }
        Ok(BinaryMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().map(|v| v.support().to_vec()).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        let mut dense = BitMatrix::from_sparse(self);
        let order: Vec<usize> = (0..self.cols).collect();
        gauss_jordan(&mut dense, &order).len()
    }

    /// Gauss-Jordan elimination visiting columns in `column_order`. Within each
    /// column the lowest-index remaining row is taken as pivot.
    pub fn row_reduce(&self, column_order: &[usize]) -> Result<RowReduction> {
        check_permutation(column_order, self.cols)?;
        // [M | I] so the accumulated row operations come out alongside.
        let mut aug = BitMatrix::zeros(self.rows, self.cols + self.rows);
        for (i, row) in self.entries.iter().enumerate() {
            for &j in row {
                aug.set(i, j, true);
            }
            aug.set(i, self.cols + i, true);
        }
        let pivots = gauss_jordan(&mut aug, column_order);
        let mut reduced = Vec::with_capacity(self.rows);
        let mut transform = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut r = Vec::new();
            let mut t = Vec::new();
            for j in aug.ones_in_row(i) {
                if j < self.cols {
                    r.push(j);
                } else {
                    t.push(j - self.cols);
                }
            }
            reduced.push(r);
            transform.push(t);
        }
        Ok(RowReduction {
            reduced: BinaryMatrix::from_sorted_unchecked(self.rows, self.cols, reduced),
            pivots,
            transform: BinaryMatrix::from_sorted_unchecked(self.rows, self.rows, transform),
        })
    }

    /// A basis of `{v : M v = 0}`, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<BinaryVector> {
        let order: Vec<usize> = (0..self.cols).collect();
        self.kernel_basis_ordered(&order)
    }

    /// Kernel basis from elimination in `column_order`; the free columns are
    /// the non-pivots, so columns late in the order tend to carry the basis.
    pub(crate) fn kernel_basis_ordered(&self, column_order: &[usize]) -> Vec<BinaryVector> {
        let mut dense = BitMatrix::from_sparse(self);
        let pivots = gauss_jordan(&mut dense, column_order);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        column_order
            .iter()
            .filter(|&&f| !is_pivot[f])
            .map(|&f| {
                let mut support: Vec<usize> = pivots
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| dense.get(i, f))
                    .map(|(_, &p)| p)
                    .collect();
                support.push(f);
                support.sort_unstable();
                BinaryVector::from_sorted_unchecked(self.cols, support)
            })
            .collect()
    }

    /// Solves `M x = b`. The returned solution is supported on pivot columns of
    /// the natural-order elimination.
    pub fn solve(&self, b: &BinaryVector) -> Result<BinaryVector> {
        if b.len() != self.rows {
            return Err(Error::dims(format!(
                "{}x{} system with right-hand side of length {}",
                self.rows,
                self.cols,
                b.len()
            )));
        }
        let mut aug = BitMatrix::zeros(self.rows, self.cols + 1);
        for (i, row) in self.entries.iter().enumerate() {
            for &j in row {
                aug.set(i, j, true);
            }
        }
        for &i in b.support() {
            aug.set(i, self.cols, true);
        }
        let order: Vec<usize> = (0..self.cols).collect();
        let pivots = gauss_jordan(&mut aug, &order);
        if (pivots.len()..self.rows).any(|i| aug.get(i, self.cols)) {
            return Err(Error::Inconsistent);
        }
        let mut support: Vec<usize> = pivots
            .iter()
            .enumerate()
            .filter(|&(i, _)| aug.get(i, self.cols))
            .map(|(_, &p)| p)
            .collect();
        support.sort_unstable();
        Ok(BinaryVector::from_sorted_unchecked(self.cols, support))
    }
}

pub(crate) fn check_permutation(order: &[usize], n: usize) -> Result<()> {
    if order.len() != n {
        return Err(Error::dims(format!(
            "column order of length {} for {n} columns",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &c in order {
        if c >= n {
            return Err(Error::IndexOutOfRange { index: c, len: n });
        }
        if std::mem::replace(&mut seen[c], true) {
            return Err(Error::DuplicateIndex(c));
        }
    }
    Ok(())
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix {}x{} ", self.rows, self.cols)?;
        if self.rows <= 16 && self.cols <= 64 {
            writeln!(f)?;
            for row in self.to_dense() {
                for b in row {
                    write!(f, "{b}")?;
                }
                writeln!(f)?;
            }
            Ok(())
        } else {
            write!(f, "(nnz = {})", self.nnz())
        }
    }
}
