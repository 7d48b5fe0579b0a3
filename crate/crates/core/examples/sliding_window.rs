// Overlapping (3,1) window decoding of phenomenological noise on the
// [[625,25]] code, tracking the residual error after each cycle.

use qldpc_window::bposd::DecoderConfig;
use qldpc_window::codes::fixture;
use qldpc_window::gf2::BinaryVector;
use qldpc_window::noise::{sample_round, synthesize_syndrome, NoiseParams, StreamKey};
use qldpc_window::window::{residual_error, WindowConfig, WindowDecoder};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let code = fixture("hgp_625")?;
    let h = code.hz();
    let p = 0.005;
    let noise = NoiseParams::new(p)?;
    let mut decoder = WindowDecoder::new(h, WindowConfig::new(3, 1)?, p, DecoderConfig::default())?;
    let mut state = decoder.new_state();

    let mut history = Vec::new();
    let mut cumulative = BinaryVector::zeros(code.n());
    let mut round = 0;
    for _ in 0..8 {
        let mut syndromes = Vec::new();
        for _ in 0..state.syndromes_needed() {
            let sample = sample_round(code.n(), h.rows(), noise, &mut StreamKey::new(3, 0, round).rng());
            round += 1;
            cumulative.add_assign(&sample.e)?;
            syndromes.push(synthesize_syndrome(h, &cumulative, &sample.u)?);
            history.push(sample.e);
        }
        let trace = decoder.cycle_traced(&mut state, &syndromes)?;
        let r = residual_error(&state, &history[..state.rounds_elapsed()])?;
        println!(
            "cycle {}: window syndrome weights {:?}, BP {}, commit weight {}, residual weight {}, residual syndrome weight {}",
            state.cycles(),
            trace.window_syndromes.iter().map(|s| s.weight()).collect::<Vec<_>>(),
            if trace.decode.bp_converged { "converged" } else { "+ OSD" },
            trace.commit.weight(),
            r.weight(),
            h.mat_vec(&r)?.weight()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
