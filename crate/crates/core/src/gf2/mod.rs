//! Linear algebra over GF(2).
//!
//! [`BinaryMatrix`] and [`BinaryVector`] are sparse and canonical: two values
//! compare equal exactly when their dimensions and 1-positions agree. Row
//! reduction, rank, kernels and solves run on a word-packed [`BitMatrix`].

pub mod alist;
mod dense;
mod sparse;
mod vector;

pub use dense::{BitMatrix, XorBasis};
pub(crate) use dense::gauss_jordan;
pub use sparse::{BinaryMatrix, RowReduction};
pub use vector::BinaryVector;

use crate::error::Result;

pub fn mat_vec(m: &BinaryMatrix, v: &BinaryVector) -> Result<BinaryVector> {
    m.mat_vec(v)
}

pub fn kron(a: &BinaryMatrix, b: &BinaryMatrix) -> BinaryMatrix {
    a.kron(b)
}

pub fn row_reduce(m: &BinaryMatrix, column_order: &[usize]) -> Result<RowReduction> {
    m.row_reduce(column_order)
}

pub fn kernel_basis(m: &BinaryMatrix) -> Vec<BinaryVector> {
    m.kernel_basis()
}

pub fn solve(m: &BinaryMatrix, b: &BinaryVector) -> Result<BinaryVector> {
    m.solve(b)
}

pub fn rank(m: &BinaryMatrix) -> usize {
    m.rank()
}
