// BP-OSD on the [[625,25]] code with a noiseless syndrome: BP alone, then
// OSD-0 and the combination sweep on the same soft output.

use qldpc_window::bposd::{BpOsdDecoder, DecoderConfig, OsdMode};
use qldpc_window::codes::fixture;
use qldpc_window::noise::{sample_round, NoiseParams, StreamKey};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let code = fixture("hgp_625")?;
    let h = code.hz();
    let noise = NoiseParams::new(0.04)?;
    let mut decoder = BpOsdDecoder::uniform(h, 0.04, DecoderConfig::default())?;
    let osd0_config = DecoderConfig {
        osd_mode: OsdMode::Osd0,
        ..DecoderConfig::default()
    };
    let mut osd0 = BpOsdDecoder::uniform(h, 0.04, osd0_config)?;

    let (mut bp_ok, mut failures) = (0, 0);
    for trial in 0..20 {
        let e = sample_round(code.n(), 0, noise, &mut StreamKey::new(7, trial, 0).rng()).e;
        let s = h.mat_vec(&e)?;
        let bp = decoder.bp_decode(&s)?;
        if bp.bp_converged {
            bp_ok += 1;
            continue;
        }
        let sweep = decoder.osd_post_process(&s, &bp.reliabilities)?;
        let zero = osd0.osd_post_process(&s, &bp.reliabilities)?;
        assert!(sweep.estimate.weight() <= zero.estimate.weight());
        let failed = code.is_logical_failure(&e.add(&sweep.estimate)?)?;
        failures += failed as usize;
        println!(
            "trial {trial:>2}: |e| = {:>2}, BP stuck, OSD-0 weight {:>2}, sweep weight {:>2}{}",
            e.weight(),
            zero.estimate.weight(),
            sweep.estimate.weight(),
            if failed { ", logical failure" } else { "" }
        );
    }
    println!("BP converged on {bp_ok} of 20 syndromes; {failures} logical failures");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
