use std::fmt;

use crate::error::{Error, Result};

/// A vector over GF(2) stored as the sorted list of its 1-positions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryVector {
    len: usize,
    support: Vec<usize>,
}

impl BinaryVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            support: Vec::new(),
        }
    }

    pub fn ones(len: usize) -> Self {
        Self {
            len,
            support: (0..len).collect(),
        }
    }

    /// The weight-1 vector with a single 1 at `index`.
    pub fn unit(len: usize, index: usize) -> Result<Self> {
        Self::from_support(len, vec![index])
    }

    /// Builds a vector from 1-positions given in any order. Out-of-range and
    /// repeated indices are rejected.
    pub fn from_support(len: usize, mut support: Vec<usize>) -> Result<Self> {
        support.sort_unstable();
        for w in support.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateIndex(w[0]));
            }
        }
        if let Some(&last) = support.last() {
            if last >= len {
                return Err(Error::IndexOutOfRange { index: last, len });
            }
        }
        Ok(Self { len, support })
    }

    /// Caller guarantees `support` is strictly increasing and in range.
    pub(crate) fn from_sorted_unchecked(len: usize, support: Vec<usize>) -> Self {
        debug_assert!(support.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(support.last().map_or(true, |&i| i < len));
        Self { len, support }
    }

    /// Nonzero entries of `bits` become 1.
    pub fn from_bits<T: Copy + Default + PartialEq>(bits: &[T]) -> Self {
        let zero = T::default();
        let support = bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != zero)
            .map(|(i, _)| i)
            .collect();
        Self {
            len: bits.len(),
            support,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn weight(&self) -> usize {
        self.support.len()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn get(&self, index: usize) -> bool {
        self.support.binary_search(&index).is_ok()
    }

    pub fn to_bits(&self) -> Vec<u8> {
        let mut bits = vec![0u8; self.len];
        for &i in &self.support {
            bits[i] = 1;
        }
        bits
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::dims(format!(
                "vector lengths {} and {}",
                self.len, other.len
            )));
        }
        Ok(())
    }

    /// Sum over GF(2) (symmetric difference of supports).
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let (a, b) = (&self.support, &other.support);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(Self {
            len: self.len,
            support: out,
        })
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        *self = self.add(other)?;
        Ok(())
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        let (a, b) = (&self.support, &other.support);
        let (mut i, mut j, mut parity) = (0, 0, false);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    parity = !parity;
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(parity)
    }

    /// Concatenation of blocks, in order.
    pub fn concat(parts: &[BinaryVector]) -> Self {
        let mut len = 0;
        let mut support = Vec::new();
        for p in parts {
            support.extend(p.support.iter().map(|&i| i + len));
            len += p.len;
        }
        Self { len, support }
    }

    /// The sub-vector covering positions `start..end`, re-indexed from 0.
    pub fn slice(&self, start: usize, end: usize) -> Result<Self> {
        if start > end || end > self.len {
            return Err(Error::dims(format!(
                "slice {start}..{end} of a length-{} vector",
                self.len
            )));
        }
        let lo = self.support.partition_point(|&i| i < start);
        let hi = self.support.partition_point(|&i| i < end);
        Ok(Self {
            len: end - start,
            support: self.support[lo..hi].iter().map(|&i| i - start).collect(),
        })
    }

    /// Splits into consecutive blocks of `block` entries each.
    pub fn chunks(&self, block: usize) -> Result<Vec<BinaryVector>> {
        if block == 0 || self.len % block != 0 {
            return Err(Error::dims(format!(
                "length {} is not a multiple of block size {block}",
                self.len
            )));
        }
        (0..self.len / block)
            .map(|b| self.slice(b * block, (b + 1) * block))
            .collect()
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.to_bits() {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}
