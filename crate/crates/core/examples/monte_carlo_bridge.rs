// Simulated Ornstein-Uhlenbeck phase noise against the closed-form
// envelope, in both limiting regimes.

use qubit_dephasing::report::{run_montecarlo, MonteCarloSpec, Regime};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for regime in [Regime::Static, Regime::Markovian] {
        let spec = MonteCarloSpec {
            n_trajectories: 500,
            grid_points: 10,
            ..MonteCarloSpec::preset(regime, 42)
        };
        let out = run_montecarlo(&spec)?;
        println!("{regime:?}: {} steps, max z = {:.2}", out.summary.n_steps, out.summary.max_z);
        for row in out.comparison.rows.iter().step_by(3) {
            println!("  t = {:.3}: simulated {:.4} +- {:.4}, analytic {:.4}", row.t, row.re_mean, row.std_error, row.analytic_envelope);
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
