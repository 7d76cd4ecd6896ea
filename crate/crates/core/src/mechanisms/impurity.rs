//! Dipolar coupling of the qubit nucleus to randomly placed impurity spins.
//!
//! For a dilute, uncorrelated distribution of impurities at concentration
//! `C` outside an exclusion radius `a`, the frequency variance is
//! `C·K²·⟨(1 − 3cos²θ)²⟩·4π∫_a^∞ r⁻⁴ dr·⟨δS_z²⟩ = C·K²·(16π/15a³)·⟨δS_z²⟩`
//! with `K = (μ₀/4π)γ_Iγ_impħ`. The cutoff volume `a³` is taken as the
//! volume per lattice site.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::dephasing::ExponentialCorrelation;
use crate::error::{require, Error, Result};
use crate::units::{boltzmann_ratio, spin_half_variance, unhalved_tanh_variance, MaterialParams, PhysicalConstants, SpinSpecies};

/// Default longitudinal relaxation time of impurity spins, s.
pub const DEFAULT_IMPURITY_T1: f64 = 1e4;

/// Lattice temperature used when only `B/T` is given, K.
pub const REFERENCE_TEMPERATURE: f64 = 0.1;

/// Dipolar coupling constant `(μ₀/4π)·γ₁γ₂ħ`, m³/s².
pub fn dipolar_constant(gamma_1: f64, gamma_2: f64) -> f64 {
    let c = PhysicalConstants::SI;
    c.mu0_over_4pi * gamma_1.abs() * gamma_2.abs() * c.hbar
}

/// Paramagnetic centres (electron spins in S-state) in the substrate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamagneticImpurityChannel {
    /// C_S,imp, m⁻³.
    pub concentration: f64,
    /// Qubit nucleus γ_I, rad/s/T.
    pub nuclear_gamma: f64,
    /// Impurity electron γ_S, rad/s/T.
    pub electron_gamma: f64,
    /// Exclusion volume a³, m³.
    pub site_volume: f64,
    pub b: f64,
    pub t: f64,
    /// τ₁ of the impurity electrons, s.
    pub tau1_imp: f64,
}

impl ParamagneticImpurityChannel {
    pub fn silicon(concentration: f64, b: f64, t: f64) -> Result<Self> {
        let ch = Self {
            concentration,
            nuclear_gamma: SpinSpecies::phosphorus31().gamma,
            electron_gamma: SpinSpecies::electron().gamma,
            site_volume: MaterialParams::silicon().site_volume(),
            b,
            t,
            tau1_imp: DEFAULT_IMPURITY_T1,
        };
        ch.validate()?;
        Ok(ch)
    }

    pub fn validate(&self) -> Result<()> {
        require(self.concentration >= 0.0 && self.concentration.is_finite(), "concentration", "nonnegative", self.concentration)?;
        require(self.site_volume > 0.0, "site volume", "positive", self.site_volume)?;
        require(self.nuclear_gamma != 0.0, "nuclear gamma", "nonzero", self.nuclear_gamma)?;
        require(self.electron_gamma != 0.0, "electron gamma", "nonzero", self.electron_gamma)?;
        require(self.b >= 0.0, "magnetic field", "nonnegative", self.b)?;
        if !(self.t > 0.0) {
            return Err(Error::NonPositiveTemperature(self.t));
        }
        require(self.tau1_imp > 0.0, "tau1_imp", "positive", self.tau1_imp)
    }

    /// `C·a³`, the fraction of sites occupied.
    pub fn site_fraction(&self) -> f64 {
        self.concentration * self.site_volume
    }

    /// Dilute-limit formulas assume `C·a³ < 1`.
    pub fn is_dilute(&self) -> bool {
        self.site_fraction() < 1.0
    }

    pub fn polarization_ratio(&self) -> f64 {
        boltzmann_ratio(self.electron_gamma, self.b, self.t).expect("validated channel")
    }

    /// `K²·16π/(15a⁶)`, s⁻²: the variance per unit site fraction before
    /// thermal suppression.
    pub fn dipolar_prefactor(&self) -> f64 {
        let k = dipolar_constant(self.nuclear_gamma, self.electron_gamma);
        k * k * 16.0 * PI / 15.0 / (self.site_volume * self.site_volume)
    }

    pub fn variance(&self) -> f64 {
        paramagnetic_variance(self)
    }

    pub fn correlation(&self) -> ExponentialCorrelation {
        ExponentialCorrelation::new(self.variance(), self.tau1_imp).expect("validated channel")
    }

    /// Largest concentration (m⁻³) keeping `⟨Δω²⟩ ≤ 1/T_d²`.
    pub fn max_concentration(&self, target_td: f64) -> Result<f64> {
        require(target_td > 0.0, "target decoherence time", "positive", target_td)?;
        let per_unit = self.dipolar_prefactor() * self.site_volume * spin_half_variance(self.polarization_ratio());
        Ok(1.0 / (target_td * target_td * per_unit))
    }
}

/// `C·K²·(16π/15a³)·sech²(x/2)/4`, rad²/s².
pub fn paramagnetic_variance(ch: &ParamagneticImpurityChannel) -> f64 {
    ch.dipolar_prefactor() * ch.site_fraction() * spin_half_variance(ch.polarization_ratio())
}

/// Concentration bound (m⁻³) for phosphorus-doped silicon at field-to-
/// temperature ratio `b_over_t` (T/K).
pub fn max_paramagnetic_concentration(target_td: f64, b_over_t: f64) -> Result<f64> {
    require(b_over_t >= 0.0, "B/T", "nonnegative", b_over_t)?;
    let t = REFERENCE_TEMPERATURE;
    ParamagneticImpurityChannel::silicon(0.0, b_over_t * t, t)?.max_concentration(target_td)
}

/// Diamagnetic atoms carrying a nuclear spin (²⁹Si by default).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NuclearImpurityChannel {
    /// C_I,imp, m⁻³.
    pub concentration: f64,
    pub nuclear_gamma: f64,
    /// Impurity nucleus γ; only |γ| matters.
    pub impurity_gamma: f64,
    pub site_volume: f64,
    pub b: f64,
    /// Nuclear spin temperature T_I, K.
    pub spin_temperature: f64,
    /// T_∥ of the impurity nuclei, s; doubles as τ_c.
    pub t_parallel: f64,
}

impl NuclearImpurityChannel {
    pub fn silicon29(concentration: f64, b: f64, spin_temperature: f64) -> Result<Self> {
        let ch = Self {
            concentration,
            nuclear_gamma: SpinSpecies::phosphorus31().gamma,
            impurity_gamma: SpinSpecies::silicon29().gamma,
            site_volume: MaterialParams::silicon().site_volume(),
            b,
            spin_temperature,
            t_parallel: DEFAULT_IMPURITY_T1,
        };
        ch.validate()?;
        Ok(ch)
    }

    pub fn validate(&self) -> Result<()> {
        require(self.concentration >= 0.0 && self.concentration.is_finite(), "concentration", "nonnegative", self.concentration)?;
        require(self.site_volume > 0.0, "site volume", "positive", self.site_volume)?;
        require(self.nuclear_gamma != 0.0, "nuclear gamma", "nonzero", self.nuclear_gamma)?;
        require(self.impurity_gamma != 0.0, "impurity gamma", "nonzero", self.impurity_gamma)?;
        require(self.b >= 0.0, "magnetic field", "nonnegative", self.b)?;
        if !(self.spin_temperature > 0.0) {
            return Err(Error::NonPositiveTemperature(self.spin_temperature));
        }
        require(self.t_parallel > 0.0, "t_parallel", "positive", self.t_parallel)
    }

    /// `|γ_imp|ħB/(kT_I)`.
    pub fn polarization_ratio(&self) -> f64 {
        boltzmann_ratio(self.impurity_gamma, self.b, self.spin_temperature).expect("validated channel")
    }

    /// Impurity spins count as polarized once the ratio exceeds 1.
    pub fn is_polarized(&self) -> bool {
        self.polarization_ratio() > 1.0
    }

    pub fn percent_of_sites(&self) -> f64 {
        100.0 * self.concentration * self.site_volume
    }

    /// Variance per unit concentration, rad²·m³/s².
    fn variance_per_concentration(&self) -> f64 {
        let k = dipolar_constant(self.nuclear_gamma, self.impurity_gamma);
        // 1 − tanh²(x), with the unhalved argument.
        let thermal = 4.0 * unhalved_tanh_variance(self.polarization_ratio());
        k * k * 4.0 * PI / 15.0 / self.site_volume * thermal
    }

    pub fn variance(&self) -> f64 {
        nuclear_impurity_variance(self)
    }

    pub fn correlation(&self) -> ExponentialCorrelation {
        ExponentialCorrelation::new(self.variance(), self.t_parallel).expect("validated channel")
    }

    pub fn max_concentration(&self, target_td: f64) -> Result<ConcentrationBound> {
        require(target_td > 0.0, "target decoherence time", "positive", target_td)?;
        let per_m3 = 1.0 / (target_td * target_td * self.variance_per_concentration());
        Ok(ConcentrationBound {
            per_m3,
            percent_of_sites: 100.0 * per_m3 * self.site_volume,
        })
    }
}

/// `C·K²·(4π/15a³)·(1 − tanh²(|γ_imp|ħB/kT_I))`, rad²/s².
pub fn nuclear_impurity_variance(ch: &NuclearImpurityChannel) -> f64 {
    ch.concentration * ch.variance_per_concentration()
}

/// Spin temperature at which `|γ|ħB/(kT_I) = 1`, K.
pub fn threshold_spin_temperature(gamma: f64, b: f64) -> f64 {
    gamma.abs() * PhysicalConstants::SI.hbar_over_k() * b
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConcentrationBound {
    pub per_m3: f64,
    pub percent_of_sites: f64,
}

/// Allowed ²⁹Si concentration in silicon for a target decoherence time.
pub fn max_nuclear_impurity_concentration(target_td: f64, b: f64, spin_temperature: f64) -> Result<ConcentrationBound> {
    NuclearImpurityChannel::silicon29(0.0, b, spin_temperature)?.max_concentration(target_td)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SITES: f64 = 5.0e28;

    #[test]
    fn paramagnetic_prefactor_at_twenty() {
        let ch = ParamagneticImpurityChannel::silicon(1e-3 * SITES, 2.0, 0.1).unwrap();
        let per_fraction = ch.variance() / ch.site_fraction();
        assert!((per_fraction / 0.74e3 - 1.0).abs() < 0.15, "{per_fraction}");
    }

    #[test]
    fn full_prefactor_by_hand() {
        // (1e-7·108e6·176e9·1.05e-34)²·(16π/15)·(5e28)², evaluated stepwise.
        let k = 1e-7 * 108e6 * 176e9 * 1.05e-34;
        let oracle = k * k * (16.0 * PI / 15.0) * SITES * SITES;
        let ch = ParamagneticImpurityChannel::silicon(0.0, 2.0, 0.1).unwrap();
        assert!((ch.dipolar_prefactor() / oracle - 1.0).abs() < 1e-12);
        assert!((oracle / 3.34e14 - 1.0).abs() < 0.01, "{oracle}");
    }

    #[test]
    fn zero_concentration() {
        let ch = ParamagneticImpurityChannel::silicon(0.0, 2.0, 0.1).unwrap();
        assert_eq!(ch.variance(), 0.0);
        let n = NuclearImpurityChannel::silicon29(0.0, 2.0, 1e-3).unwrap();
        assert_eq!(n.variance(), 0.0);
    }

    #[test]
    fn paramagnetic_bound() {
        let c = max_paramagnetic_concentration(1.0, 20.0).unwrap();
        let cm3 = c * 1e-6;
        assert!((cm3 / 0.7e20 - 1.0).abs() < 0.15, "{cm3:e}");
        let c10 = max_paramagnetic_concentration(10.0, 20.0).unwrap();
        assert!((c / c10 - 100.0).abs() < 1e-9);
        let c30 = max_paramagnetic_concentration(1.0, 30.0).unwrap();
        assert!(c30 > c);
        // Inversion really hits the target.
        let ch = ParamagneticImpurityChannel::silicon(c, 2.0, 0.1).unwrap();
        assert!((ch.variance() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dilute_flag() {
        assert!(ParamagneticImpurityChannel::silicon(0.5 * SITES, 2.0, 0.1).unwrap().is_dilute());
        assert!(!ParamagneticImpurityChannel::silicon(2.0 * SITES, 2.0, 0.1).unwrap().is_dilute());
    }

    #[test]
    fn threshold_temperature_for_29si() {
        let t = threshold_spin_temperature(SpinSpecies::silicon29().gamma, 2.0);
        assert!((t - 0.807e-3).abs() < 0.002e-3, "{t}");
        let ch = NuclearImpurityChannel::silicon29(0.0, 2.0, 0.9 * t).unwrap();
        assert!(ch.is_polarized());
    }

    #[test]
    fn nuclear_variance_by_hand() {
        let c = 4.5e-4 * SITES;
        let ch = NuclearImpurityChannel::silicon29(c, 2.0, 0.8e-3).unwrap();
        let k = 1e-7 * 108e6 * 53e6 * 1.05e-34;
        let x = 53e6 * 1.05e-34 * 2.0 / (1.38e-23 * 0.8e-3);
        let sech = 1.0 / f64::cosh(x);
        let oracle = c * k * k * (4.0 * PI / 15.0) * SITES * sech * sech;
        assert!((ch.variance() / oracle - 1.0).abs() < 1e-12);
        // Three orders of magnitude above the 1 s⁻² target.
        assert!(ch.variance() > 1e3 && ch.variance() < 2e3, "{}", ch.variance());
    }

    #[test]
    fn nuclear_bound() {
        let b = max_nuclear_impurity_concentration(1.0, 2.0, 0.8e-3).unwrap();
        assert!((b.percent_of_sites - 100.0 * b.per_m3 / SITES).abs() < 1e-18);
        let ch = NuclearImpurityChannel::silicon29(b.per_m3, 2.0, 0.8e-3).unwrap();
        assert!((ch.variance() - 1.0).abs() < 1e-12);
        let ratio = b.percent_of_sites / 4.5e-2;
        assert!(ratio < 1e-2, "{ratio}");
        let long = max_nuclear_impurity_concentration(1e12, 2.0, 0.8e-3).unwrap();
        assert!(long.per_m3 < 1e-20 * b.per_m3);
    }

    #[test]
    fn correlation_times() {
        let n = NuclearImpurityChannel::silicon29(1e20, 2.0, 1e-3).unwrap();
        assert_eq!(n.correlation().tau_c_seconds(), 1e4);
        let p = ParamagneticImpurityChannel::silicon(1e20, 2.0, 0.1).unwrap();
        assert_eq!(p.correlation().tau_c_seconds(), 1e4);
    }

    #[test]
    fn invalid_channels() {
        assert!(ParamagneticImpurityChannel::silicon(-1.0, 2.0, 0.1).is_err());
        assert!(ParamagneticImpurityChannel::silicon(1.0, 2.0, 0.0).is_err());
        assert!(NuclearImpurityChannel::silicon29(1.0, 2.0, 0.0).is_err());
    }
}
