use super::{BinaryMatrix, BinaryVector};

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// Dense row-major GF(2) matrix packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn from_sparse(m: &BinaryMatrix) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for &j in m.row(i) {
                out.set(i, j, true);
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.stride + c / WORD] >> (c % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let w = &mut self.data[r * self.stride + c / WORD];
        let bit = 1u64 << (c % WORD);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    #[inline]
    pub fn toggle(&mut self, r: usize, c: usize) {
        self.data[r * self.stride + c / WORD] ^= 1u64 << (c % WORD);
    }

    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    /// Column indices of the 1-entries of row `r`, ascending.
    pub fn ones_in_row(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_words(r).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            })
        })
    }

    pub fn to_sparse(&self) -> BinaryMatrix {
        let entries = (0..self.rows).map(|r| self.ones_in_row(r).collect()).collect();
        BinaryMatrix::from_sorted_unchecked(self.rows, self.cols, entries)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * self.stride);
        head[lo * self.stride..(lo + 1) * self.stride].swap_with_slice(&mut tail[..self.stride]);
    }

    /// `row[dst] ^= row[src]`, touching only words from `from_word` on.
    #[inline]
    fn xor_row_into(&mut self, src: usize, dst: usize, from_word: usize) {
        let s = self.stride;
        let (src_row, dst_row) = if src < dst {
            let (head, tail) = self.data.split_at_mut(dst * s);
            (&head[src * s..(src + 1) * s], &mut tail[..s])
        } else {
            let (head, tail) = self.data.split_at_mut(src * s);
            (&tail[..s] as &[u64], &mut head[dst * s..(dst + 1) * s])
        };
        for (d, v) in dst_row[from_word..].iter_mut().zip(&src_row[from_word..]) {
            *d ^= v;
        }
    }
}

/// In-place Gauss-Jordan elimination over the columns listed in `order`.
///
/// Rows are permuted so that row `i` carries the `i`-th pivot; rows past the
/// rank end up zero on every visited column. Columns not listed in `order`
/// (for example an augmented right-hand side) are carried along. Returns the
/// pivot columns in visiting order.
pub(crate) fn gauss_jordan(m: &mut BitMatrix, order: &[usize]) -> Vec<usize> {
    // When columns are visited left to right, a fresh pivot row is zero on
    // everything to the left of its pivot, so row updates can skip those words.
    let left_to_right = order.iter().enumerate().all(|(i, &c)| i == c);
    let mut pivots = Vec::new();
    for &col in order {
        let rank = pivots.len();
        if rank == m.rows {
            break;
        }
        let w = col / WORD;
        let bit = 1u64 << (col % WORD);
        let Some(p) = (rank..m.rows).find(|&r| m.data[r * m.stride + w] & bit != 0) else {
            continue;
        };
        m.swap_rows(p, rank);
        let from = if left_to_right { w } else { 0 };
        for r in 0..m.rows {
            if r != rank && m.data[r * m.stride + w] & bit != 0 {
                m.xor_row_into(rank, r, from);
            }
        }
        pivots.push(col);
    }
    pivots
}

/// Packed bit vector with XOR, used for incremental span tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct PackedBits {
    words: Vec<u64>,
}

impl PackedBits {
    pub(crate) fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; words_for(len)],
        }
    }

    pub(crate) fn from_vector(v: &BinaryVector) -> Self {
        let mut out = Self::zeros(v.len());
        for &i in v.support() {
            out.words[i / WORD] |= 1 << (i % WORD);
        }
        out
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub(crate) fn xor_assign(&mut self, other: &PackedBits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub(crate) fn lowest_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }
}

/// A growing set of linearly independent vectors, kept reduced so membership
/// of the span can be tested in one pass.
#[derive(Clone, Debug)]
pub struct XorBasis {
    len: usize,
    rows: Vec<(usize, PackedBits)>,
}

impl XorBasis {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &BinaryVector) -> PackedBits {
        assert_eq!(v.len(), self.len, "vector length does not match basis");
        let mut bits = PackedBits::from_vector(v);
        for (lead, row) in &self.rows {
            if bits.get(*lead) {
                bits.xor_assign(row);
            }
        }
        bits
    }

    /// Adds `v` if it is outside the current span; returns whether it was added.
    pub fn insert(&mut self, v: &BinaryVector) -> bool {
        let bits = self.reduce(v);
        match bits.lowest_one() {
            Some(lead) => {
                self.rows.push((lead, bits));
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &BinaryVector) -> bool {
        self.reduce(v).lowest_one().is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_and_xor_rows() {
        let m = BinaryMatrix::from_dense(&[vec![1u8, 0, 1], vec![0, 1, 1]]).unwrap();
        let mut d = BitMatrix::from_sparse(&m);
        d.xor_row_into(0, 1, 0);
        assert_eq!(d.to_sparse().to_dense(), vec![vec![1, 0, 1], vec![1, 1, 0]]);
        d.swap_rows(0, 1);
        assert_eq!(d.to_sparse().to_dense(), vec![vec![1, 1, 0], vec![1, 0, 1]]);
        d.xor_row_into(1, 0, 0);
        assert_eq!(d.to_sparse().to_dense(), vec![vec![0, 1, 1], vec![1, 0, 1]]);
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let mut d = BitMatrix::zeros(2, 130);
        d.set(0, 3, true);
        d.set(0, 129, true);
        d.set(1, 64, true);
        assert_eq!(d.ones_in_row(0).collect::<Vec<_>>(), vec![3, 129]);
        d.toggle(0, 3);
        assert!(!d.get(0, 3));
        assert_eq!(d.to_sparse().nnz(), 2);
    }

    #[test]
    fn xor_basis_span() {
        let a = BinaryVector::from_bits(&[1u8, 1, 0, 0]);
        let b = BinaryVector::from_bits(&[0u8, 1, 1, 0]);
        let c = a.add(&b).unwrap();
        let mut basis = XorBasis::new(4);
        assert!(basis.insert(&a));
        assert!(basis.insert(&b));
        assert!(!basis.insert(&c));
        assert!(basis.contains(&c));
        assert!(!basis.contains(&BinaryVector::unit(4, 3).unwrap()));
        assert_eq!(basis.rank(), 2);
    }
}
