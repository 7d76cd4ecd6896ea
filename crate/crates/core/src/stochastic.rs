//! Monte Carlo check of the analytic coherence envelope.
//!
//! Frequency noise is an Ornstein–Uhlenbeck process with the channel's
//! variance and correlation time, sampled with the exact AR(1) update
//!
//! `Δω_{k+1} = ρ·Δω_k + σ√(1 − ρ²)·ξ_k`, `ρ = e^{−dt/τ_c}`,
//!
//! integrated to a phase with the trapezoid rule, and averaged as `e^{iφ}`
//! over independent trajectories.
//!
//! Trajectory `i` draws from ChaCha8 stream `i` of the master seed, and all
//! reductions run sequentially in trajectory order, so results do not depend
//! on how many threads rayon uses.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dephasing::{coherence_envelope, CorrelationTime, ExponentialCorrelation};
use crate::error::{require, Error, Result};
use crate::report::csv_float;

/// `dt ≤ τ_c / STEPS_PER_CORRELATION_TIME`.
pub const STEPS_PER_CORRELATION_TIME: f64 = 20.0;
/// `dt·σ ≤ MAX_PHASE_INCREMENT`.
pub const MAX_PHASE_INCREMENT: f64 = 0.05;
pub const DEFAULT_TRAJECTORIES: usize = 10_000;
pub const DEFAULT_GRID_POINTS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimulationPlan {
    pub correlation: ExponentialCorrelation,
    pub t_max: f64,
    pub n_steps: usize,
    pub n_trajectories: usize,
    pub master_seed: u64,
    /// Output times are `k·t_max/grid_points` for `k = 1..=grid_points`,
    /// snapped to the step grid.
    pub grid_points: usize,
}

impl SimulationPlan {
    pub fn new(correlation: ExponentialCorrelation, t_max: f64, n_steps: usize, n_trajectories: usize, master_seed: u64) -> Result<Self> {
        let plan = Self {
            correlation,
            t_max,
            n_steps,
            n_trajectories,
            master_seed,
            grid_points: DEFAULT_GRID_POINTS.min(n_steps.max(1)),
        };
        plan.validate()?;
        Ok(plan)
    }

    /// Smallest step count accepted for this correlation and horizon,
    /// rounded up to a multiple of `grid_points`.
    pub fn with_minimal_steps(correlation: ExponentialCorrelation, t_max: f64, n_trajectories: usize, master_seed: u64) -> Result<Self> {
        require(t_max > 0.0, "t_max", "positive", t_max)?;
        let grid = DEFAULT_GRID_POINTS;
        let need = required_steps(&correlation, t_max).max(grid);
        let n_steps = need.div_ceil(grid) * grid;
        Self::new(correlation, t_max, n_steps, n_trajectories, master_seed)
    }

    pub fn with_grid_points(mut self, grid_points: usize) -> Result<Self> {
        self.grid_points = grid_points;
        self.validate()?;
        Ok(self)
    }

    pub fn dt(&self) -> f64 {
        self.t_max / self.n_steps as f64
    }

    /// Step indices of the output grid.
    pub fn grid_indices(&self) -> Vec<usize> {
        (1..=self.grid_points).map(|k| k * self.n_steps / self.grid_points).collect()
    }

    pub fn grid_times(&self) -> Vec<f64> {
        let dt = self.dt();
        self.grid_indices().into_iter().map(|i| i as f64 * dt).collect()
    }

    pub fn validate(&self) -> Result<()> {
        require(self.t_max > 0.0 && self.t_max.is_finite(), "t_max", "positive and finite", self.t_max)?;
        require(self.n_trajectories >= 1, "n_trajectories", "at least 1", self.n_trajectories as f64)?;
        require(
            self.grid_points >= 1 && self.grid_points <= self.n_steps,
            "grid_points",
            "between 1 and n_steps",
            self.grid_points as f64,
        )?;
        let need = required_steps(&self.correlation, self.t_max);
        if self.n_steps < need {
            let dt = self.dt();
            let reason = if let CorrelationTime::Finite(tc) = self.correlation.tau_c {
                if dt > tc / STEPS_PER_CORRELATION_TIME {
                    format!("dt = {dt:e} s does not resolve tau_c = {tc:e} s")
                } else {
                    format!("dt = {dt:e} s gives phase increments above {MAX_PHASE_INCREMENT} rad")
                }
            } else {
                format!("dt = {dt:e} s gives phase increments above {MAX_PHASE_INCREMENT} rad")
            };
            return Err(Error::PlanRejected {
                reason,
                required_steps: need,
            });
        }
        Ok(())
    }
}

/// Step count needed to satisfy both resolution limits.
pub fn required_steps(c: &ExponentialCorrelation, t_max: f64) -> usize {
    let by_tau = match c.tau_c {
        CorrelationTime::Finite(tc) => (t_max * STEPS_PER_CORRELATION_TIME / tc).ceil(),
        CorrelationTime::Infinite => 1.0,
    };
    let by_phase = (t_max * c.variance.sqrt() / MAX_PHASE_INCREMENT).ceil();
    by_tau.max(by_phase).max(1.0) as usize
}

/// RNG for one trajectory: stream `index` of the master seed.
pub fn trajectory_rng(master_seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(index);
    rng
}

/// Stationary AR(1) sampler; yields Δω₀, Δω₁, …
struct OuSampler {
    rng: ChaCha8Rng,
    sigma: f64,
    rho: f64,
    kick: f64,
    current: Option<f64>,
}

impl OuSampler {
    fn new(plan: &SimulationPlan, index: u64) -> Self {
        let sigma = plan.correlation.variance.sqrt();
        let (rho, kick) = match plan.correlation.tau_c {
            CorrelationTime::Finite(tc) => {
                let a = plan.dt() / tc;
                ((-a).exp(), sigma * (-(-2.0 * a).exp_m1()).sqrt())
            }
            CorrelationTime::Infinite => (1.0, 0.0),
        };
        Self {
            rng: trajectory_rng(plan.master_seed, index),
            sigma,
            rho,
            kick,
            current: None,
        }
    }
}

impl Iterator for OuSampler {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let xi: f64 = StandardNormal.sample(&mut self.rng);
        let next = match self.current {
            None => self.sigma * xi,
            Some(prev) => self.rho * prev + self.kick * xi,
        };
        self.current = Some(next);
        Some(next)
    }
}

/// `n_steps + 1` samples of Δω for trajectory `index`.
pub fn generate_trajectory(plan: &SimulationPlan, index: u64) -> Result<Vec<f64>> {
    plan.validate()?;
    Ok(OuSampler::new(plan, index).take(plan.n_steps + 1).collect())
}

/// Trapezoidal running integral, starting at 0.
pub fn accumulate_phase(trajectory: &[f64], dt: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(trajectory.len());
    let mut phi = 0.0;
    if trajectory.is_empty() {
        return out;
    }
    out.push(phi);
    for w in trajectory.windows(2) {
        phi += 0.5 * dt * (w[0] + w[1]);
        out.push(phi);
    }
    out
}

/// Phases at the output grid for one trajectory, without storing the path.
fn grid_phases(plan: &SimulationPlan, index: u64, grid: &[usize]) -> Vec<f64> {
    let dt = plan.dt();
    let mut sampler = OuSampler::new(plan, index);
    let mut prev = sampler.next().expect("infinite sampler");
    let mut phi = 0.0;
    let mut out = Vec::with_capacity(grid.len());
    let mut next_grid = grid.iter().peekable();
    for step in 1..=plan.n_steps {
        let cur = sampler.next().expect("infinite sampler");
        phi += 0.5 * dt * (prev + cur);
        prev = cur;
        while next_grid.peek() == Some(&&step) {
            out.push(phi);
            next_grid.next();
        }
    }
    out
}

/// Phases `φ_i(t_k)` for every trajectory `i` and grid time `t_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseEnsemble {
    pub times: Vec<f64>,
    /// Row-major, one row per trajectory.
    pub phases: Vec<f64>,
    pub n_trajectories: usize,
}

impl PhaseEnsemble {
    pub fn simulate(plan: &SimulationPlan) -> Result<Self> {
        plan.validate()?;
        let grid = plan.grid_indices();
        let rows: Vec<Vec<f64>> = (0..plan.n_trajectories as u64)
            .into_par_iter()
            .map(|i| grid_phases(plan, i, &grid))
            .collect();
        Ok(Self {
            times: plan.grid_times(),
            phases: rows.concat(),
            n_trajectories: plan.n_trajectories,
        })
    }

    fn column(&self, k: usize) -> impl Iterator<Item = f64> + '_ {
        let width = self.times.len();
        (0..self.n_trajectories).map(move |i| self.phases[i * width + k])
    }

    /// Phases at the last grid time.
    pub fn final_phases(&self) -> Vec<f64> {
        self.column(self.times.len() - 1).collect()
    }

    pub fn coherence(&self) -> EnsembleCoherence {
        let n = self.n_trajectories as f64;
        let mut mean_coherence = Vec::with_capacity(self.times.len());
        let mut std_error = Vec::with_capacity(self.times.len());
        let mut half_msq = Vec::with_capacity(self.times.len());
        let mut half_msq_err = Vec::with_capacity(self.times.len());
        let mut mean_phase = Vec::with_capacity(self.times.len());
        for k in 0..self.times.len() {
            let (mut sc, mut ss, mut sc2, mut sp, mut sq, mut sq2) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
            for phi in self.column(k) {
                let (s, c) = phi.sin_cos();
                sc += c;
                ss += s;
                sc2 += c * c;
                sp += phi;
                let q = 0.5 * phi * phi;
                sq += q;
                sq2 += q * q;
            }
            let mc = sc / n;
            mean_coherence.push(Complex64::new(mc, ss / n));
            std_error.push(standard_error(sc2 / n - mc * mc, n));
            let mq = sq / n;
            half_msq.push(mq);
            half_msq_err.push(standard_error(sq2 / n - mq * mq, n));
            mean_phase.push(sp / n);
        }
        EnsembleCoherence {
            times: self.times.clone(),
            mean_coherence,
            std_error,
            n_trajectories: self.n_trajectories,
            mean_phase,
            half_mean_square_phase: half_msq,
            half_mean_square_phase_std_error: half_msq_err,
        }
    }
}

fn standard_error(population_variance: f64, n: f64) -> f64 {
    if n < 2.0 {
        return 0.0;
    }
    // Bessel-corrected sample variance.
    (population_variance.max(0.0) * n / (n - 1.0) / n).sqrt()
}

/// Ensemble averages on the output grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleCoherence {
    pub times: Vec<f64>,
    /// `⟨e^{iφ(t)}⟩`.
    pub mean_coherence: Vec<Complex64>,
    /// Standard error of the real part.
    pub std_error: Vec<f64>,
    pub n_trajectories: usize,
    pub mean_phase: Vec<f64>,
    /// `⟨φ²⟩/2`, the sample estimate of Γ.
    pub half_mean_square_phase: Vec<f64>,
    pub half_mean_square_phase_std_error: Vec<f64>,
}

impl EnsembleCoherence {
    /// Wrap deterministic envelope values as if they were a simulation
    /// result; useful for exercising the comparison harness.
    pub fn from_envelope(times: Vec<f64>, envelope: &[f64], std_error: f64) -> Self {
        let len = times.len();
        Self {
            times,
            mean_coherence: envelope.iter().map(|&e| Complex64::new(e, 0.0)).collect(),
            std_error: vec![std_error; len],
            n_trajectories: 0,
            mean_phase: vec![0.0; len],
            half_mean_square_phase: envelope.iter().map(|e| -e.ln()).collect(),
            half_mean_square_phase_std_error: vec![0.0; len],
        }
    }
}

pub fn ensemble_coherence(plan: &SimulationPlan) -> Result<EnsembleCoherence> {
    Ok(PhaseEnsemble::simulate(plan)?.coherence())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub t: f64,
    pub re_mean: f64,
    pub im_mean: f64,
    pub std_error: f64,
    pub analytic_envelope: f64,
    pub z: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub rows: Vec<ComparisonRow>,
    pub max_z: f64,
}

impl Comparison {
    pub const CSV_HEADER: &'static str = "t,re_mean,im_mean,std_error,analytic_envelope,z";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let cells = [r.t, r.re_mean, r.im_mean, r.std_error, r.analytic_envelope, r.z].map(csv_float);
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// z-scores of `|⟨e^{iφ}⟩|` against supplied envelope values.
pub fn z_scores(result: &EnsembleCoherence, envelope: &[f64]) -> Result<Comparison> {
    if envelope.len() != result.times.len() {
        return Err(Error::GridMismatch);
    }
    let mut rows = Vec::with_capacity(envelope.len());
    let mut max_z: f64 = 0.0;
    for (k, &env) in envelope.iter().enumerate() {
        let m = result.mean_coherence[k];
        let se = result.std_error[k];
        let dev = (m.norm() - env).abs();
        let z = if se > 0.0 {
            dev / se
        } else if dev == 0.0 {
            0.0
        } else {
            return Err(Error::DegenerateStatistics {
                time: result.times[k],
                deviation: dev,
            });
        };
        max_z = max_z.max(z);
        rows.push(ComparisonRow {
            t: result.times[k],
            re_mean: m.re,
            im_mean: m.im,
            std_error: se,
            analytic_envelope: env,
            z,
        });
    }
    Ok(Comparison { rows, max_z })
}

/// Compare a simulation with `e^{−Γ(t)}` of `correlation` on its own grid.
pub fn compare_to_analytic(result: &EnsembleCoherence, correlation: &ExponentialCorrelation) -> Result<Comparison> {
    let env = result
        .times
        .iter()
        .map(|&t| coherence_envelope(correlation, t))
        .collect::<Result<Vec<_>>>()?;
    z_scores(result, &env)
}
