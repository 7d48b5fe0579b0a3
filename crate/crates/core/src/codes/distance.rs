use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{logical_basis_unchecked, CssCode};
use crate::gf2::BinaryMatrix;

/// Randomized upper bound on the code distance, or `None` when `k = 0`.
///
/// Each trial eliminates `H_Z` (and then `H_X`) in a random column order and
/// inspects the resulting kernel basis: every basis vector outside the
/// stabilizer space is a logical operator, so its weight bounds `d` from
/// above. The minimum over trials and both error types is returned.
pub fn distance_upper_bound(code: &CssCode, trials: usize, seed: u64) -> Option<usize> {
    if code.k() == 0 {
        return None;
    }
    let trials = trials.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let logical_x = logical_basis_unchecked(code.hz(), code.hx());
    // X logicals live in ker(H_Z) and are detected by the Z logicals; Z logicals symmetrically.
    let sides: [(&BinaryMatrix, &BinaryMatrix); 2] = [(code.hz(), code.logical_z()), (code.hx(), &logical_x)];
    let mut order: Vec<usize> = (0..code.n()).collect();
    let mut best = usize::MAX;
    for _ in 0..trials {
        for (checks, detectors) in sides {
            order.shuffle(&mut rng);
            for v in checks.kernel_basis_ordered(&order) {
                if v.weight() < best && !detectors.mat_vec(&v).expect("length n").is_zero() {
                    best = v.weight();
                }
            }
        }
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::super::tests::repetition_product;
    use super::*;
    use crate::codes::fixture;
    use crate::gf2::BinaryVector;

    #[test]
    fn repetition_product_exhaustive() {
        let code = repetition_product();
        // Exhaustive minimum over syndrome-free, non-stabilizer X errors.
        let mut exact = usize::MAX;
        for mask in 1u32..32 {
            let v = BinaryVector::from_support(5, (0..5).filter(|i| mask >> i & 1 == 1).collect()).unwrap();
            if code.hz().mat_vec(&v).unwrap().is_zero() && code.is_logical_failure(&v).unwrap() {
                exact = exact.min(v.weight());
            }
        }
        assert_eq!(exact, 2);
        let bound = distance_upper_bound(&code, 1, 0).unwrap();
        assert!(bound >= exact && bound <= 2);
    }

    #[test]
    fn fixture_625_bound() {
        let code = fixture("hgp_625").unwrap();
        let one = distance_upper_bound(&code, 1, 4).unwrap();
        assert!(one >= 8);
        assert_eq!(distance_upper_bound(&code, 300, 4), Some(8));
    }
}
