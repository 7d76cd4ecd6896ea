//! Pure-dephasing models for ³¹P nuclear-spin qubits in silicon.
//!
//! The pieces, bottom to top:
//!
//! - [`units`]: constants, spin species, silicon parameters, thermal ratios.
//! - [`qubit`]: Bloch vectors, 2×2 density matrices, dephasing of a state.
//! - [`dephasing`]: Γ(t) for exponentially correlated Gaussian frequency noise.
//! - [`mechanisms`]: the four noise channels and their variances and bounds.
//! - [`stochastic`]: seeded Ornstein–Uhlenbeck Monte Carlo of the phase.
//! - [`register`]: the small-rotation error model on the register ground state.
//! - [`report`]: CSV/JSON reports, sweeps and the published-value audit.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod dephasing;
pub mod error;
pub mod mechanisms;
pub mod numeric;
pub mod qubit;
pub mod register;
pub mod report;
pub mod stochastic;
pub mod units;

pub use dephasing::{coherence_envelope, decoherence_time, gamma_exact, gamma_static, Convention, CorrelationTime, ExponentialCorrelation};
pub use error::{Error, Result};
pub use mechanisms::{channel_to_correlation, ChannelKind, NoiseChannel};
pub use qubit::{BlochState, DensityMatrix};
pub use stochastic::SimulationPlan;
