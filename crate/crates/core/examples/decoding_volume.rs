// Decoding volume W(n-k)/2: a (4,1) window on [[625,25]] processes as many
// syndrome bits as single-shot decoding of [[2500,100]].

use qldpc_window::codes::{fixture, FIXTURE_NAMES};
use qldpc_window::lifetime::decoding_volume;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:<9} {:>5} {:>4} {:>6} {:>6} {:>6}", "code", "n", "k", "W=1", "W=3", "W=4");
    for name in FIXTURE_NAMES {
        let code = fixture(name)?;
        let v = |w| decoding_volume(w, code.n(), code.k());
        println!("{name:<9} {:>5} {:>4} {:>6} {:>6} {:>6}", code.n(), code.k(), v(1)?, v(3)?, v(4)?);
    }
    assert_eq!(decoding_volume(4, 625, 25)?, decoding_volume(1, 2500, 100)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
