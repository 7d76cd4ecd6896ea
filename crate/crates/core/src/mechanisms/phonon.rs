//! Two-phonon Raman modulation of the hyperfine constant.
//!
//! Near-elastic phonon scattering makes Γ grow linearly in time, so this
//! channel is a rate `1/T_d` rather than an exponential correlation:
//!
//! `1/T_d = (81π/8)·ξ²·A₀²(ħ/Mv²)²(kΘ/ħ)(T/Θ)⁷·∫₀^{Θ/T} x⁶eˣ/(eˣ − 1)² dx`

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::numeric;
use crate::units::{MaterialParams, PhysicalConstants};

/// `T/Θ` below which the integral has saturated to its `u → ∞` value.
pub const LOW_TEMPERATURE_LIMIT: f64 = 1e-3;

/// Rates below this (s⁻¹) do nothing over a one-second computation.
pub const INSIGNIFICANT_RATE: f64 = 1e-3;

/// Integrand beyond this is below 10⁻⁶⁰ of the total.
const INTEGRAND_CUTOFF: f64 = 200.0;

/// `6! = 720`, the `u → ∞` value without the ζ(6) factor.
pub const FACTORIAL_SIX: f64 = 720.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PhononMode {
    /// Quadrature of the Debye integral at `Θ/T`.
    ExactIntegral,
    /// Replace the integral by 6!.
    FactorialApprox,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhononRamanChannel {
    pub material: MaterialParams,
    /// Lattice temperature, K.
    pub t: f64,
}

impl PhononRamanChannel {
    pub fn new(material: MaterialParams, t: f64) -> Result<Self> {
        material.validate()?;
        if !(t > 0.0) {
            return Err(Error::NonPositiveTemperature(t));
        }
        Ok(Self { material, t })
    }

    pub fn silicon(t: f64) -> Result<Self> {
        Self::new(MaterialParams::silicon(), t)
    }

    /// `T/Θ`.
    pub fn reduced_temperature(&self) -> f64 {
        self.t / self.material.debye_temperature
    }

    pub fn is_low_temperature(&self) -> bool {
        self.reduced_temperature() < LOW_TEMPERATURE_LIMIT
    }

    pub fn rate(&self, mode: PhononMode) -> f64 {
        phonon_rate(self, mode)
    }
}

fn debye_integrand(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    // x⁶eˣ/(eˣ − 1)² = x⁶e⁻ˣ/(1 − e⁻ˣ)², stable at both ends.
    let d = -(-x).exp_m1();
    x.powi(6) * (-x).exp() / (d * d)
}

/// `∫₀ᵘ x⁶eˣ/(eˣ − 1)² dx`; tends to `720·ζ(6)` as `u → ∞` and to `u⁵/5`
/// as `u → 0`.
pub fn debye_integral(upper: f64) -> Result<f64> {
    require(upper > 0.0, "upper limit", "positive", upper)?;
    let top = upper.min(INTEGRAND_CUTOFF);
    Ok(numeric::integrate(debye_integrand, 0.0, top, 1e-12))
}

/// `(81π/8)·ξ²·A₀²(ħ/Mv²)²(kΘ/ħ)`, the rate per unit `(T/Θ)⁷·I`, s⁻¹.
pub fn phonon_rate_scale(m: &MaterialParams) -> f64 {
    let c = PhysicalConstants::SI;
    let stiffness = c.hbar / (m.atom_mass * m.sound_velocity * m.sound_velocity);
    let debye_frequency = c.k_boltzmann * m.debye_temperature / c.hbar;
    81.0 * PI / 8.0
        * m.xi
        * m.xi
        * m.hyperfine_constant
        * m.hyperfine_constant
        * stiffness
        * stiffness
        * debye_frequency
}

/// `1/T_d` under the linear (markovian-like) convention, s⁻¹.
pub fn phonon_rate(ch: &PhononRamanChannel, mode: PhononMode) -> f64 {
    let integral = match mode {
        PhononMode::ExactIntegral => {
            debye_integral(1.0 / ch.reduced_temperature()).expect("positive temperature")
        }
        PhononMode::FactorialApprox => FACTORIAL_SIX,
    };
    phonon_rate_scale(&ch.material) * ch.reduced_temperature().powi(7) * integral
}

#[cfg(test)]
mod tests {
    use super::*;

    /// ζ(6) = π⁶/945.
    fn zeta6() -> f64 {
        PI.powi(6) / 945.0
    }

    #[test]
    fn saturated_integral() {
        let full = FACTORIAL_SIX * zeta6();
        assert!((full - 732.487).abs() < 1e-3);
        for u in [100.0, 6250.0, 1e6] {
            let v = debye_integral(u).unwrap();
            assert!(((v - full) / full).abs() < 1e-10, "u = {u}: {v}");
        }
    }

    #[test]
    fn small_argument_series() {
        let u = 1e-3;
        let v = debye_integral(u).unwrap();
        let lead = u.powi(5) / 5.0;
        assert!(((v - lead) / lead).abs() < 1e-3);
        // Next order: integrand x⁴(1 − x²/12 + …) gives u⁵/5 − u⁷/84.
        assert!(((v - (lead - u.powi(7) / 84.0)) / lead).abs() < 1e-9);
        assert!(debye_integral(0.0).is_err());
    }

    #[test]
    fn integral_is_increasing() {
        let mut prev = 0.0;
        for i in 1..60 {
            let v = debye_integral(0.5 * i as f64).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn silicon_factorial_prefactor() {
        let ch = PhononRamanChannel::silicon(0.1).unwrap();
        let pre = ch.rate(PhononMode::FactorialApprox) / ch.reduced_temperature().powi(7);
        assert!((pre / 0.82e4 - 1.0).abs() < 0.01, "{pre}");
        assert!((pre / 0.75e4 - 1.0).abs() < 0.15);
    }

    #[test]
    fn insignificant_at_100_mk() {
        let ch = PhononRamanChannel::silicon(0.1).unwrap();
        assert!(ch.is_low_temperature());
        let rate = ch.rate(PhononMode::ExactIntegral);
        assert!(rate < 1e-20 && rate > 1e-24, "{rate}");
        assert!(rate < INSIGNIFICANT_RATE);
    }

    #[test]
    fn exact_over_factorial_is_zeta6() {
        for t in [0.01, 0.1, 0.6] {
            let ch = PhononRamanChannel::silicon(t).unwrap();
            let r = ch.rate(PhononMode::ExactIntegral) / ch.rate(PhononMode::FactorialApprox);
            assert!((r - zeta6()).abs() < 1e-9, "{r}");
        }
    }

    #[test]
    fn xi_enters_squared() {
        let base = phonon_rate_scale(&MaterialParams::silicon());
        let doubled = phonon_rate_scale(&MaterialParams::silicon().with_xi(2.0));
        assert!((doubled / base - 4.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_temperature() {
        assert!(PhononRamanChannel::silicon(0.0).is_err());
    }
}
