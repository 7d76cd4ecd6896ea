macro_rules! example_test {
    ($module:ident, $test:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(polarization_thresholds, polarization_thresholds_runs, "polarization_thresholds.rs");
example_test!(bloch_dephasing, bloch_dephasing_runs, "bloch_dephasing.rs");
example_test!(coherence_regimes, coherence_regimes_runs, "coherence_regimes.rs");
example_test!(phonon_debye, phonon_debye_runs, "phonon_debye.rs");
example_test!(impurity_bounds, impurity_bounds_runs, "impurity_bounds.rs");
example_test!(monte_carlo_bridge, monte_carlo_bridge_runs, "monte_carlo_bridge.rs");
example_test!(register_error_model, register_error_model_runs, "register_error_model.rs");
example_test!(consistency_audit, consistency_audit_runs, "consistency_audit.rs");
example_test!(parameter_sweep, parameter_sweep_runs, "parameter_sweep.rs");
