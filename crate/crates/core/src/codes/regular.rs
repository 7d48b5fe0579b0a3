use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf2::BinaryMatrix;

/// A classical base matrix with its declared regularity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseCode {
    pub matrix: BinaryMatrix,
    pub column_weight: usize,
    pub row_weight: usize,
}

impl BaseCode {
    pub fn is_regular(&self) -> bool {
        self.matrix.column_weights().iter().all(|&w| w == self.column_weight)
            && self.matrix.row_weights().iter().all(|&w| w == self.row_weight)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegularLdpcOptions {
    /// Reject samples whose Tanner graph has a cycle shorter than this.
    pub min_girth: Option<usize>,
    pub max_attempts: usize,
}

impl Default for RegularLdpcOptions {
    fn default() -> Self {
        Self {
            min_girth: None,
            max_attempts: 100_000,
        }
    }
}

/// Samples an `m × n` matrix with exactly `r` ones per column and `s` per row.
///
/// Each column contributes `r` edge sockets; a uniformly shuffled socket list is
/// cut into `m` consecutive blocks of `s`, one block per row. Samples with a
/// repeated edge (or short cycle, if requested) are redrawn.
pub fn generate_regular_ldpc(
    m: usize,
    n: usize,
    r: usize,
    s: usize,
    seed: u64,
    options: RegularLdpcOptions,
) -> Result<BaseCode> {
    if m == 0 || n == 0 || r == 0 || s == 0 {
        return Err(Error::InvalidParameter("dimensions and weights must be positive".into()));
    }
    if n * r != m * s {
        return Err(Error::InvalidParameter(format!(
            "({r},{s})-regular {m}x{n} matrix is infeasible: n*r = {} but m*s = {}",
            n * r,
            m * s
        )));
    }
    if r > m || s > n {
        return Err(Error::InvalidParameter(format!(
            "column weight {r} exceeds {m} rows or row weight {s} exceeds {n} columns"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sockets: Vec<usize> = (0..n).flat_map(|c| std::iter::repeat(c).take(r)).collect();
    'attempt: for _ in 0..options.max_attempts {
        sockets.shuffle(&mut rng);
        let mut rows = Vec::with_capacity(m);
        for block in sockets.chunks(s) {
            let mut row = block.to_vec();
            row.sort_unstable();
            if row.windows(2).any(|w| w[0] == w[1]) {
                continue 'attempt;
            }
            rows.push(row);
        }
        let matrix = BinaryMatrix::new(m, n, rows)?;
        if let Some(min) = options.min_girth {
            if girth(&matrix).is_some_and(|g| g < min) {
                continue;
            }
        }
        return Ok(BaseCode {
            matrix,
            column_weight: r,
            row_weight: s,
        });
    }
    Err(Error::ConstructionFailed(format!(
        "no ({r},{s})-regular {m}x{n} matrix found in {} attempts",
        options.max_attempts
    )))
}

/// Length of the shortest cycle in the Tanner graph, or `None` if acyclic.
pub fn girth(h: &BinaryMatrix) -> Option<usize> {
    // Nodes 0..cols are variables, cols.. are checks.
    let n = h.cols();
    let mut adj: Vec<Vec<usize>> = h.column_lists().into_iter().map(|c| c.into_iter().map(|i| n + i).collect()).collect();
    adj.extend(h.row_lists().iter().cloned());
    let total = adj.len();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; total];
    let mut parent = vec![usize::MAX; total];
    for src in 0..total {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[src] = 0;
        parent[src] = usize::MAX;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] >= b) {
                break;
            }
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let len = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_four_regular_base() {
        let base = generate_regular_ldpc(15, 20, 3, 4, 1, Default::default()).unwrap();
        assert!(base.is_regular());
        assert!(base.matrix.column_weights().iter().all(|&w| w == 3));
        assert!(base.matrix.row_weights().iter().all(|&w| w == 4));
        let again = generate_regular_ldpc(15, 20, 3, 4, 1, Default::default()).unwrap();
        assert_eq!(base, again);
        let other = generate_regular_ldpc(15, 20, 3, 4, 2, Default::default()).unwrap();
        assert_ne!(base, other);
    }

    #[test]
    fn forced_shapes() {
        let one = generate_regular_ldpc(1, 1, 1, 1, 0, Default::default()).unwrap();
        assert_eq!(one.matrix.to_dense(), vec![vec![1]]);
        let full = generate_regular_ldpc(3, 4, 3, 4, 0, Default::default()).unwrap();
        assert_eq!(full.matrix.to_dense(), vec![vec![1u8; 4]; 3]);
    }

    #[test]
    fn infeasible_parameters() {
        assert!(matches!(
            generate_regular_ldpc(15, 20, 3, 5, 0, Default::default()),
            Err(Error::InvalidParameter(_))
        ));
        assert!(generate_regular_ldpc(2, 1, 4, 2, 0, Default::default()).is_err());
        let opts = RegularLdpcOptions {
            min_girth: Some(100),
            max_attempts: 5,
        };
        assert!(matches!(
            generate_regular_ldpc(15, 20, 3, 4, 0, opts),
            Err(Error::ConstructionFailed(_))
        ));
    }

    #[test]
    fn girth_filter() {
        let opts = RegularLdpcOptions {
            min_girth: Some(6),
            ..Default::default()
        };
        let base = generate_regular_ldpc(40, 60, 2, 3, 3, opts).unwrap();
        assert!(girth(&base.matrix).unwrap() >= 6);
    }

    #[test]
    fn girth_small_graphs() {
        let four = BinaryMatrix::from_dense(&[vec![1u8, 1], vec![1, 1]]).unwrap();
        assert_eq!(girth(&four), Some(4));
        let path = BinaryMatrix::from_dense(&[vec![1u8, 1, 0], vec![0, 1, 1]]).unwrap();
        assert_eq!(girth(&path), None);
        let hexagon = BinaryMatrix::from_dense(&[vec![1u8, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
        assert_eq!(girth(&hexagon), Some(6));
    }
}
