use serde::{Deserialize, Serialize};

use crate::dephasing::ExponentialCorrelation;
use crate::error::{require, Error, Result};
use crate::numeric;
use crate::units::{boltzmann_ratio, ln_spin_half_variance, spin_half_variance, MaterialParams, PhysicalConstants, SpinSpecies};

/// Default electron longitudinal relaxation time τ₁, s.
pub const DEFAULT_TAU1: f64 = 1e4;

/// Frequency noise on the ³¹P nucleus from thermal fluctuations of its own
/// donor electron, `Δω = A₀(S_z(t) − ⟨S_z⟩)`.
///
/// The electron transverse time τ₂ only enters through the adiabatic
/// ordering `γ_S·B > 1/τ₁ ≫ 1/τ₂` and is not modelled.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HyperfineElectronChannel {
    /// A₀, rad/s.
    pub a0: f64,
    /// Field, T.
    pub b: f64,
    /// Lattice (electron) temperature, K.
    pub t: f64,
    /// τ₁, s.
    pub tau1: f64,
    /// γ_S, rad/s/T.
    pub electron_gamma: f64,
}

impl HyperfineElectronChannel {
    pub fn new(a0: f64, b: f64, t: f64, tau1: f64) -> Result<Self> {
        let ch = Self {
            a0,
            b,
            t,
            tau1,
            electron_gamma: SpinSpecies::electron().gamma,
        };
        ch.validate()?;
        Ok(ch)
    }

    /// ³¹P in silicon with τ₁ = 10⁴ s.
    pub fn silicon(b: f64, t: f64) -> Result<Self> {
        Self::new(MaterialParams::silicon().hyperfine_constant, b, t, DEFAULT_TAU1)
    }

    pub fn validate(&self) -> Result<()> {
        require(self.a0 >= 0.0 && self.a0.is_finite(), "A0", "nonnegative", self.a0)?;
        require(self.b >= 0.0, "magnetic field", "nonnegative", self.b)?;
        if !(self.t > 0.0) {
            return Err(Error::NonPositiveTemperature(self.t));
        }
        require(self.tau1 > 0.0, "tau1", "positive", self.tau1)
    }

    /// `γ_SħB/(kT)`.
    pub fn polarization_ratio(&self) -> f64 {
        boltzmann_ratio(self.electron_gamma, self.b, self.t).expect("validated channel")
    }

    /// Electron Larmor frequency `ω_S = γ_S·B`, rad/s.
    pub fn larmor_frequency(&self) -> f64 {
        self.electron_gamma.abs() * self.b
    }

    /// `ω_S·τ₁ > 1`.
    pub fn is_adiabatic(&self) -> bool {
        self.larmor_frequency() * self.tau1 > 1.0
    }

    pub fn variance(&self) -> f64 {
        hyperfine_variance(self)
    }

    pub fn correlation(&self) -> ExponentialCorrelation {
        ExponentialCorrelation::new(self.variance(), self.tau1).expect("validated channel")
    }
}

/// `⟨Δω²⟩ = A₀²·sech²(x/2)/4`, → `A₀²e⁻ˣ` once the electron is polarized.
pub fn hyperfine_variance(ch: &HyperfineElectronChannel) -> f64 {
    ch.a0 * ch.a0 * spin_half_variance(ch.polarization_ratio())
}

/// Polarization ratio gained per unit `B/T`, `γ_Sħ/k` in K/T.
pub fn electron_ratio_slope() -> f64 {
    SpinSpecies::electron().gamma * PhysicalConstants::SI.hbar_over_k()
}

/// Smallest `B/T` (T/K) for which the static-convention decoherence time
/// reaches `target_td`, i.e. `A₀²·sech²(x/2)/4 = 1/T_d²`.
///
/// Returns 0 when even an unpolarized electron already meets the target.
pub fn required_field_temperature_ratio(a0: f64, target_td: f64) -> Result<f64> {
    require(target_td > 0.0, "target decoherence time", "positive", target_td)?;
    require(a0 > 0.0 && a0.is_finite(), "A0", "positive", a0)?;
    if !target_td.is_finite() {
        return Err(Error::NoSolution(
            "an infinite decoherence time needs an infinite field".into(),
        ));
    }
    // Work with logarithms so that very long targets do not underflow.
    let ln_a0_sq = 2.0 * a0.ln();
    let ln_target = -2.0 * target_td.ln();
    let excess = |x: f64| ln_a0_sq + ln_spin_half_variance(x) - ln_target;
    if excess(0.0) <= 0.0 {
        return Ok(0.0);
    }
    let hi = numeric::expand_bracket(&excess, 0.0, 1.0, 1e300)
        .ok_or_else(|| Error::NoSolution(format!("target T_d = {target_td:e} s")))?;
    let x = numeric::bisect(excess, 0.0, hi, 1e-14)?;
    Ok(x / electron_ratio_slope())
}
