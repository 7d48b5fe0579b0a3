// The five built-in hypergraph-product codes and their parameters.

use qldpc_window::codes::{base_matrix, distance_upper_bound, fixture, validate_css, FIXTURE_NAMES};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in FIXTURE_NAMES {
        let base = base_matrix(name)?;
        let code = fixture(name)?;
        assert!(validate_css(code.hx(), code.hz())?);
        println!(
            "{name:<9} base {:>2} x {:>2}  [[{}, {}]]  H_Z is {} x {}",
            base.rows(),
            base.cols(),
            code.n(),
            code.k(),
            code.hz().rows(),
            code.hz().cols()
        );
    }

    // Randomized search for low-weight logical operators.
    let code = fixture("hgp_625")?;
    let d = distance_upper_bound(&code, 30, 1).expect("k > 0");
    println!("hgp_625: distance <= {d}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
