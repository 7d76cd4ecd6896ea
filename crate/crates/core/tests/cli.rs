use std::path::Path;
use std::process::{Command, Output};

use qubit_dephasing::mechanisms::{ChannelKind, HyperfineElectronChannel, PhononMode};
use qubit_dephasing::report::{run_sweep, ChannelConfig, SweepSpec};
use qubit_dephasing::units::Registry;
use qubit_dephasing::{decoherence_time, Convention};

fn dephase(args: &[&str]) -> Output {
    dephase_env(args, &[])
}

fn dephase_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dephase"));
    cmd.args(args).env_remove("SEED");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn constants_round_trip() {
    let o = dephase(&["constants"]);
    assert!(o.status.success());
    let reg: Registry = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reg, Registry::standard());
    assert_eq!(reg.species[0].gamma, 1.76e11);
    assert_eq!(reg.silicon.debye_temperature, 625.0);
}

#[test]
fn audit_never_fails() {
    for format in ["text", "json", "csv"] {
        let o = dephase(&["audit", "--format", format]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("nuclear-impurity-percent-bound"));
    }
    let v: serde_json::Value = serde_json::from_str(&stdout(&dephase(&["audit", "--format", "json"]))).unwrap();
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["claim_id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"paramagnetic-full-prefactor"));
}

#[test]
fn channel_report_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "h.toml", "[hyperfine]\nb_tesla = 2.0\nt_kelvin = 0.1\n");
    let o = dephase(&["channel", "--config", &cfg]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let td = v["decoherence_time_s"]["static"].as_f64().unwrap();
    let lib = decoherence_time(&HyperfineElectronChannel::silicon(2.0, 0.1).unwrap().correlation(), Convention::Static).unwrap();
    assert_eq!(td, lib);
    assert!(td > 0.5e-3 && td < 1.5e-3);
}

#[test]
fn channel_infinite_td_is_null() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "p.toml", "[paramagnetic]\nconcentration_per_m3 = 0.0\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&dephase(&["channel", "--config", &cfg]))).unwrap();
    assert!(v["decoherence_time_s"]["static"].is_null());
    assert_eq!(v["infinite_decoherence_time"], true);
}

#[test]
fn phonon_channel_flags_insignificant_rate() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&dephase(&["channel", "--kind", "phonon"]))).unwrap();
    assert!(v["phonon"]["rate_per_s"].as_f64().unwrap() < 1e-20);
    assert_eq!(v["phonon"]["insignificant"], true);
}

#[test]
fn channel_profile_csv() {
    let o = dephase(&["channel", "--kind", "hyperfine", "--format", "csv", "--grid", "1e-4:1e-2:5:log"]);
    let text = stdout(&o);
    assert!(text.starts_with("t_seconds,gamma,envelope\n"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let typo = write(dir.path(), "t.toml", "[hyperfine]\nb_tesal = 2.0\n");
    assert_eq!(dephase(&["channel", "--config", &typo]).status.code(), Some(2));
    assert_eq!(dephase(&["channel", "--kind", "gate"]).status.code(), Some(2));
    let bad = write(dir.path(), "b.toml", "[phonon]\nt_kelvin = -1.0\n");
    assert_eq!(dephase(&["channel", "--config", &bad]).status.code(), Some(2));
    assert_eq!(dephase(&["sweep", "--kind", "hyperfine", "--param", "b_over_t", "--grid", "1:2:1:lin"]).status.code(), Some(2));
    assert_eq!(
        dephase(&["sweep", "--kind", "hyperfine", "--param", "b_over_t", "--grid", "10:40:4:lin", "--out", "/nonexistent-dir/s.csv"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn sweep_header_and_library_agreement() {
    let o = dephase(&["sweep", "--kind", "hyperfine", "--param", "b_over_t", "--grid", "10:40:7:lin"]);
    let text = stdout(&o);
    assert_eq!(text.lines().next().unwrap(), "b_over_t,variance_rad2_per_s2,tau_c_s,polarization_ratio,polarized,td_static_s");
    let spec = SweepSpec {
        base: ChannelConfig::default_for(ChannelKind::Hyperfine),
        parameter: "b_over_t".into(),
        grid: "10:40:7:lin".parse().unwrap(),
        convention: Convention::Static,
        phonon_mode: PhononMode::ExactIntegral,
    };
    assert_eq!(text, run_sweep(&spec).unwrap());

    let o = dephase(&["sweep", "--kind", "paramagnetic", "--param", "concentration_per_m3", "--grid", "1e20:2e20:3:lin", "--convention", "unit-gamma"]);
    assert!(stdout(&o).lines().next().unwrap().ends_with(",td_unit_gamma_s"));
}

#[test]
fn montecarlo_is_reproducible_across_threads_and_seed_sources() {
    let args = ["montecarlo", "--regime", "markovian", "--trajectories", "1000"];
    let one = dephase_env(&[&args[..], &["--seed", "9"]].concat(), &[("RAYON_NUM_THREADS", "1")]);
    let four = dephase_env(&[&args[..], &["--seed", "9"]].concat(), &[("RAYON_NUM_THREADS", "4")]);
    let env = dephase_env(&args, &[("SEED", "9")]);
    let flag_wins = dephase_env(&[&args[..], &["--seed", "9"]].concat(), &[("SEED", "10")]);
    let other = dephase_env(&args, &[("SEED", "10")]);
    assert!(one.status.success());
    assert_eq!(stdout(&one), stdout(&four));
    assert_eq!(stdout(&one), stdout(&env));
    assert_eq!(stdout(&one), stdout(&flag_wins));
    assert_ne!(stdout(&one), stdout(&other));
    assert!(stdout(&one).starts_with("t,re_mean,im_mean,std_error,analytic_envelope,z\n"));
}

#[test]
fn montecarlo_summary_and_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let summary = dir.path().join("summary.json");
    let s = summary.to_str().unwrap();
    let ok = dephase(&["montecarlo", "--regime", "static", "--seed", "4", "--summary", s]);
    assert!(ok.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&summary).unwrap()).unwrap();
    assert!(v["max_z"].as_f64().unwrap() <= 4.0);

    let bad = dephase(&["montecarlo", "--regime", "markovian", "--seed", "4", "--tau-mismatch", "10", "--summary", s]);
    assert!(bad.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&summary).unwrap()).unwrap();
    assert!(v["max_z"].as_f64().unwrap() > 10.0, "{v}");
}

#[test]
fn rejected_plan_exits_three() {
    let o = dephase(&["montecarlo", "--regime", "markovian", "--steps", "100"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("need at least"));
}
