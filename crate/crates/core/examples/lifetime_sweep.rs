// A small memory-lifetime sweep: single-shot against overlapping window
// decoding at a high error rate, written as CSV records.

use qldpc_window::cli::{run_sweep, write_records, OutputFormat, RunConfig};

const CONFIG: &str = r#"
code = "hgp_625"
p = [0.03]
windows = ["1x1", "3x1"]
trials = 8
seed = 11
max_cycles = 1000
"#;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = RunConfig::parse(CONFIG)?;
    let sweep = run_sweep(&config, |line| eprintln!("{line}"))?;
    println!("[[{}, {}]], config hash {}", sweep.code.n(), sweep.code.k(), config.hash());
    write_records(&sweep.records, OutputFormat::Csv, &mut std::io::stdout())?;
    let failures: Vec<_> = sweep.trials.iter().filter_map(|t| t.t).collect();
    println!("per-trial lifetimes: {failures:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
