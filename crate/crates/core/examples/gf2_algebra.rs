// Sparse GF(2) matrices: products, rank, kernels, solving and alist I/O.

use qldpc_window::gf2::alist::{parse_alist, to_alist};
use qldpc_window::gf2::{BinaryMatrix, BinaryVector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Parity checks of the [7,4] Hamming code.
    let h = BinaryMatrix::from_dense(&[
        vec![1u8, 0, 1, 0, 1, 0, 1],
        vec![0, 1, 1, 0, 0, 1, 1],
        vec![0, 0, 0, 1, 1, 1, 1],
    ])?;
    println!("H is {} x {}, rank {}", h.rows(), h.cols(), h.rank());

    let e = BinaryVector::unit(7, 4)?;
    let s = h.mat_vec(&e)?;
    println!("syndrome of an error on bit 4: {s}");

    let kernel = h.kernel_basis();
    println!("kernel has dimension {}", kernel.len());
    for v in &kernel {
        assert!(h.mat_vec(v)?.is_zero());
    }

    let x = h.solve(&s)?;
    assert_eq!(h.mat_vec(&x)?, s);
    println!("a solution of H x = s: {x}");

    let product = h.kron(&BinaryMatrix::identity(2));
    println!("H ⊗ I_2 is {} x {} with {} ones", product.rows(), product.cols(), product.nnz());

    let text = to_alist(&h);
    assert_eq!(parse_alist(&text)?, h);
    println!("alist form:\n{text}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
