// Random (3,4)-regular base matrices, their hypergraph products, and an
// alist round trip through a temporary directory.

use qldpc_window::codes::{generate_regular_ldpc, girth, hgp, load_code, store_code, RegularLdpcOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let base = generate_regular_ldpc(15, 20, 3, 4, 2024, RegularLdpcOptions::default())?;
    assert!(base.is_regular());
    println!(
        "base: {} x {}, rank {}, girth {:?}",
        base.matrix.rows(),
        base.matrix.cols(),
        base.matrix.rank(),
        girth(&base.matrix)
    );

    let code = hgp(&base.matrix)?;
    println!("product: [[{}, {}]]", code.n(), code.k());

    let dir = std::env::temp_dir().join(format!("qldpc-window-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let source = store_code(&code, &dir, "random")?;
    let back = load_code(&source)?;
    assert_eq!(back, code);
    println!("stored and reloaded as {source}");
    std::fs::remove_dir_all(&dir)?;

    // The same code, named by its generator parameters.
    let again = load_code(&"gen:15,20,3,4,2024".parse()?)?;
    assert_eq!(again, code);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
