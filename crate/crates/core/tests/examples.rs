macro_rules! example_test {
    ($module:ident, $file:literal, $test:ident) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(gf2_algebra, "gf2_algebra.rs", gf2_algebra_example_runs);
example_test!(hgp_codes, "hgp_codes.rs", hgp_codes_example_runs);
example_test!(generate_base_code, "generate_base_code.rs", generate_base_code_example_runs);
example_test!(bposd_decode, "bposd_decode.rs", bposd_decode_example_runs);
example_test!(sliding_window, "sliding_window.rs", sliding_window_example_runs);
example_test!(lifetime_sweep, "lifetime_sweep.rs", lifetime_sweep_example_runs);
example_test!(decoding_volume, "decoding_volume.rs", decoding_volume_example_runs);
