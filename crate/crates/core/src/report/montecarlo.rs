//! Seeded Monte Carlo runs compared against the analytic envelope.

use serde::{Deserialize, Serialize};

use crate::dephasing::{gamma_exact, ExponentialCorrelation};
use crate::error::{require, Error, Result};
use crate::stochastic::{compare_to_analytic, ensemble_coherence, Comparison, SimulationPlan, DEFAULT_GRID_POINTS, DEFAULT_TRAJECTORIES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// τ_c = 10⁶·t_max: quasi-static noise, Gaussian decay.
    Static,
    /// τ_c = 10⁻³·t_max: motional narrowing, exponential decay.
    Markovian,
}

impl std::str::FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "static" => Ok(Regime::Static),
            "markovian" => Ok(Regime::Markovian),
            _ => Err(Error::Config(format!("unknown regime '{s}' (static or markovian)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloSpec {
    pub variance: f64,
    pub tau_c: f64,
    pub t_max: f64,
    /// `None` picks the smallest accepted step count.
    pub n_steps: Option<usize>,
    pub n_trajectories: usize,
    pub grid_points: usize,
    pub seed: u64,
    /// The analytic reference uses `tau_c·tau_mismatch`; anything but 1
    /// should be caught by the z-scores.
    pub tau_mismatch: f64,
}

impl MonteCarloSpec {
    pub fn preset(regime: Regime, seed: u64) -> Self {
        let (variance, t_max, tau_c) = match regime {
            Regime::Static => (1.0, 3.0, 1e6 * 3.0),
            Regime::Markovian => (3000.0, 1.0, 1e-3),
        };
        Self {
            variance,
            tau_c,
            t_max,
            n_steps: None,
            n_trajectories: DEFAULT_TRAJECTORIES,
            grid_points: DEFAULT_GRID_POINTS,
            seed,
            tau_mismatch: 1.0,
        }
    }

    pub fn plan(&self) -> Result<SimulationPlan> {
        let corr = ExponentialCorrelation::new(self.variance, self.tau_c)?;
        let plan = match self.n_steps {
            Some(n) => SimulationPlan::new(corr, self.t_max, n, self.n_trajectories, self.seed)?,
            None => SimulationPlan::with_minimal_steps(corr, self.t_max, self.n_trajectories, self.seed)?,
        };
        plan.with_grid_points(self.grid_points)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloSummary {
    pub seed: u64,
    pub variance: f64,
    pub tau_c: f64,
    pub reference_tau_c: f64,
    pub t_max: f64,
    pub n_steps: usize,
    pub n_trajectories: usize,
    pub grid_points: usize,
    /// Largest `|(|⟨e^{iφ}⟩| − e^{−Γ})|/σ` over the grid.
    pub max_z: f64,
    /// Largest `|⟨φ²⟩/2 − Γ|/σ` over the grid.
    pub max_phase_variance_z: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloOutcome {
    pub comparison: Comparison,
    pub summary: MonteCarloSummary,
}

impl MonteCarloOutcome {
    pub fn csv(&self) -> String {
        self.comparison.to_csv()
    }

    pub fn summary_json(&self) -> String {
        serde_json::to_string_pretty(&self.summary).expect("summary serializes")
    }
}

pub fn run_montecarlo(spec: &MonteCarloSpec) -> Result<MonteCarloOutcome> {
    require(spec.tau_mismatch > 0.0 && spec.tau_mismatch.is_finite(), "tau mismatch", "positive", spec.tau_mismatch)?;
    let plan = spec.plan()?;
    let result = ensemble_coherence(&plan)?;
    let reference = ExponentialCorrelation::new(spec.variance, spec.tau_c * spec.tau_mismatch)?;
    let comparison = compare_to_analytic(&result, &reference)?;

    let mut max_phase_variance_z: f64 = 0.0;
    for (k, &t) in result.times.iter().enumerate() {
        let gamma = gamma_exact(&reference, t)?;
        let se = result.half_mean_square_phase_std_error[k];
        let dev = (result.half_mean_square_phase[k] - gamma).abs();
        let z = if se > 0.0 { dev / se } else if dev == 0.0 { 0.0 } else { f64::INFINITY };
        max_phase_variance_z = max_phase_variance_z.max(z);
    }

    let summary = MonteCarloSummary {
        seed: spec.seed,
        variance: spec.variance,
        tau_c: spec.tau_c,
        reference_tau_c: reference.tau_c_seconds(),
        t_max: spec.t_max,
        n_steps: plan.n_steps,
        n_trajectories: plan.n_trajectories,
        grid_points: plan.grid_points,
        max_z: comparison.max_z,
        max_phase_variance_z,
    };
    Ok(MonteCarloOutcome { comparison, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(regime: Regime) -> MonteCarloSpec {
        MonteCarloSpec {
            n_trajectories: 400,
            grid_points: 10,
            ..MonteCarloSpec::preset(regime, 11)
        }
    }

    #[test]
    fn small_static_run_agrees() {
        let out = run_montecarlo(&small(Regime::Static)).unwrap();
        assert_eq!(out.comparison.rows.len(), 10);
        assert!(out.summary.max_z < 5.0, "{}", out.summary.max_z);
    }

    #[test]
    fn repeated_seed_is_identical() {
        let a = run_montecarlo(&small(Regime::Markovian)).unwrap();
        let b = run_montecarlo(&small(Regime::Markovian)).unwrap();
        assert_eq!(a.csv(), b.csv());
    }

    #[test]
    fn too_few_steps_is_rejected_with_advice() {
        let spec = MonteCarloSpec {
            n_steps: Some(100),
            ..small(Regime::Markovian)
        };
        match run_montecarlo(&spec) {
            Err(Error::PlanRejected { required_steps, .. }) => assert!(required_steps >= 20_000),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn regime_names() {
        assert_eq!("static".parse::<Regime>().unwrap(), Regime::Static);
        assert!("fast".parse::<Regime>().is_err());
    }
}
