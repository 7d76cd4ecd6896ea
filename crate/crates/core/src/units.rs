//! Physical constants, spin species and silicon material parameters.
//!
//! Everything is stored in SI (m, s, K, T, J, rad/s). Literature values for
//! silicon are quoted in mixed CGS units (cm, cm/s, J·s²/cm², cm⁻³); they are
//! converted once, in [`cgs`], when the presets are built.

use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};

/// Fundamental constants, SI.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    /// Reduced Planck constant, J·s/rad.
    pub hbar: f64,
    /// Boltzmann constant, J/K.
    pub k_boltzmann: f64,
    /// μ₀/4π, T²·m³/J.
    pub mu0_over_4pi: f64,
}

impl PhysicalConstants {
    /// The three-significant-figure values used throughout the estimates.
    pub const SI: PhysicalConstants = PhysicalConstants {
        hbar: 1.05e-34,
        k_boltzmann: 1.38e-23,
        mu0_over_4pi: 1.0e-7,
    };

    /// `ħ/k`, K·s/rad.
    pub fn hbar_over_k(&self) -> f64 {
        self.hbar / self.k_boltzmann
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::SI
    }
}

/// A spin-1/2 species with its gyromagnetic ratio.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpinSpecies {
    pub name: String,
    /// Signed gyromagnetic ratio, rad/s/T.
    pub gamma: f64,
    pub spin: f64,
}

impl SpinSpecies {
    pub fn new(name: impl Into<String>, gamma: f64) -> Result<Self> {
        require(gamma != 0.0 && gamma.is_finite(), "gamma", "finite and nonzero", gamma)?;
        Ok(Self {
            name: name.into(),
            gamma,
            spin: 0.5,
        })
    }

    /// Donor electron, γ_S = 176 rad·GHz/T.
    pub fn electron() -> Self {
        Self {
            name: "electron".into(),
            gamma: 176.0e9,
            spin: 0.5,
        }
    }

    /// ³¹P nucleus (the qubit), γ_I = 108 rad·MHz/T.
    pub fn phosphorus31() -> Self {
        Self {
            name: "31P".into(),
            gamma: 108.0e6,
            spin: 0.5,
        }
    }

    /// ²⁹Si nucleus, γ = −53 rad·MHz/T.
    pub fn silicon29() -> Self {
        Self {
            name: "29Si".into(),
            gamma: -53.0e6,
            spin: 0.5,
        }
    }

    pub fn registry() -> Vec<SpinSpecies> {
        vec![Self::electron(), Self::phosphorus31(), Self::silicon29()]
    }

    pub fn abs_gamma(&self) -> f64 {
        self.gamma.abs()
    }
}

/// Host-crystal and donor parameters, SI.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaterialParams {
    /// Debye temperature Θ, K.
    pub debye_temperature: f64,
    /// Lattice constant, m.
    pub lattice_constant: f64,
    /// Sound velocity, m/s.
    pub sound_velocity: f64,
    /// Atom mass, J·s²/m² (= kg).
    pub atom_mass: f64,
    /// Hyperfine constant A₀, rad/s.
    pub hyperfine_constant: f64,
    /// Lattice site density a⁻³, m⁻³. Quoted independently of the lattice
    /// constant; see [`MaterialParams::site_density_mismatch`].
    pub site_density: f64,
    /// Dimensionless phonon coupling parameter ξ.
    pub xi: f64,
}

impl MaterialParams {
    /// Silicon doped with ³¹P, converted from the CGS literature values.
    pub fn silicon() -> Self {
        Self {
            debye_temperature: 625.0,
            lattice_constant: cgs::length_to_si(cgs::SILICON_LATTICE_CONSTANT_CM),
            sound_velocity: cgs::velocity_to_si(cgs::SILICON_SOUND_VELOCITY_CM_S),
            atom_mass: cgs::mass_to_si(cgs::SILICON_ATOM_MASS_J_S2_CM2),
            hyperfine_constant: 725.0e6,
            site_density: cgs::density_to_si(cgs::SILICON_SITE_DENSITY_CM3),
            xi: 1.0,
        }
    }

    pub fn with_xi(mut self, xi: f64) -> Self {
        self.xi = xi;
        self
    }

    /// Per-site volume a³ implied by `site_density`, m³.
    pub fn site_volume(&self) -> f64 {
        1.0 / self.site_density
    }

    /// `lattice_constant⁻³ / site_density`. About 0.127 for the silicon
    /// preset: the cubic cell of the diamond lattice holds eight atoms.
    pub fn site_density_mismatch(&self) -> f64 {
        self.lattice_constant.powi(-3) / self.site_density
    }

    /// `8·a⁻³` within 5 % of the site density.
    pub fn site_density_consistent(&self) -> bool {
        (ATOMS_PER_CUBIC_CELL * self.site_density_mismatch() - 1.0).abs() <= 0.05
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("debye_temperature", self.debye_temperature),
            ("lattice_constant", self.lattice_constant),
            ("sound_velocity", self.sound_velocity),
            ("atom_mass", self.atom_mass),
            ("hyperfine_constant", self.hyperfine_constant),
            ("site_density", self.site_density),
        ] {
            require(v > 0.0 && v.is_finite(), name, "positive and finite", v)?;
        }
        require(self.xi >= 0.0 && self.xi.is_finite(), "xi", "nonnegative", self.xi)
    }
}

impl Default for MaterialParams {
    fn default() -> Self {
        Self::silicon()
    }
}

/// Conversions between the literature's mixed CGS units and SI.
pub mod cgs {
    pub const SILICON_LATTICE_CONSTANT_CM: f64 = 5.4e-8;
    pub const SILICON_SOUND_VELOCITY_CM_S: f64 = 5.0e5;
    pub const SILICON_ATOM_MASS_J_S2_CM2: f64 = 0.46e-29;
    pub const SILICON_SITE_DENSITY_CM3: f64 = 5.0e22;
    /// μ₀ in T²·cm³/J.
    pub const MU0_T2_CM3_PER_J: f64 = 0.4 * std::f64::consts::PI;

    pub fn length_to_si(cm: f64) -> f64 {
        cm * 1e-2
    }
    pub fn length_from_si(m: f64) -> f64 {
        m * 1e2
    }
    pub fn velocity_to_si(cm_s: f64) -> f64 {
        cm_s * 1e-2
    }
    pub fn velocity_from_si(m_s: f64) -> f64 {
        m_s * 1e2
    }
    /// J·s²/cm² → J·s²/m².
    pub fn mass_to_si(j_s2_cm2: f64) -> f64 {
        j_s2_cm2 * 1e4
    }
    pub fn mass_from_si(j_s2_m2: f64) -> f64 {
        j_s2_m2 * 1e-4
    }
    /// cm⁻³ → m⁻³.
    pub fn density_to_si(per_cm3: f64) -> f64 {
        per_cm3 * 1e6
    }
    pub fn density_from_si(per_m3: f64) -> f64 {
        per_m3 * 1e-6
    }
    /// μ₀ in T²·cm³/J → μ₀/4π in T²·m³/J.
    pub fn mu0_over_4pi_to_si(mu0_t2_cm3: f64) -> f64 {
        mu0_t2_cm3 / (4.0 * std::f64::consts::PI) * 1e-6
    }
}

/// Atoms in the conventional cubic cell of the diamond lattice.
pub const ATOMS_PER_CUBIC_CELL: f64 = 8.0;

/// Thermal polarization ratio `|γ|ħB/(kT)`.
pub fn boltzmann_ratio(gamma: f64, b: f64, t: f64) -> Result<f64> {
    boltzmann_ratio_with(&PhysicalConstants::SI, gamma, b, t)
}

pub fn boltzmann_ratio_with(c: &PhysicalConstants, gamma: f64, b: f64, t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::NonPositiveTemperature(t));
    }
    require(b >= 0.0, "magnetic field", "nonnegative", b)?;
    Ok(gamma.abs() * c.hbar * b / (c.k_boltzmann * t))
}

/// Thermal variance `⟨S_z²⟩ − ⟨S_z⟩²` of a spin-1/2 at polarization ratio `x`:
/// `sech²(x/2)/4`, which tends to `e⁻ˣ` for large `x`.
pub fn spin_half_variance(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    let e = (-x).exp();
    e / ((1.0 + e) * (1.0 + e))
}

/// `ln(spin_half_variance(x))`, finite for every finite `x`.
pub fn ln_spin_half_variance(x: f64) -> f64 {
    -x - 2.0 * (-x).exp().ln_1p()
}

/// `(1 − tanh²(x))/4`, the hyperfine variance with the tanh argument left
/// unhalved. Decays as `e⁻²ˣ`; only used by the audit to contrast with
/// [`spin_half_variance`].
pub fn unhalved_tanh_variance(x: f64) -> f64 {
    let e = (-2.0 * x).exp();
    e / ((1.0 + e) * (1.0 + e))
}

/// Everything `dephase constants` prints.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Registry {
    pub constants: PhysicalConstants,
    pub species: Vec<SpinSpecies>,
    pub silicon: MaterialParams,
    /// ²⁹Si natural abundance, percent.
    pub natural_abundance_29si_percent: f64,
    /// Unit for every numeric field above.
    pub units: std::collections::BTreeMap<String, String>,
}

impl Registry {
    pub fn standard() -> Self {
        let units = [
            ("constants.hbar", "J s/rad"),
            ("constants.k_boltzmann", "J/K"),
            ("constants.mu0_over_4pi", "T^2 m^3/J"),
            ("species.gamma", "rad/s/T"),
            ("species.spin", "1"),
            ("silicon.debye_temperature", "K"),
            ("silicon.lattice_constant", "m"),
            ("silicon.sound_velocity", "m/s"),
            ("silicon.atom_mass", "J s^2/m^2"),
            ("silicon.hyperfine_constant", "rad/s"),
            ("silicon.site_density", "m^-3"),
            ("silicon.xi", "1"),
            ("natural_abundance_29si_percent", "%"),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
        Self {
            constants: PhysicalConstants::SI,
            species: SpinSpecies::registry(),
            silicon: MaterialParams::silicon(),
            natural_abundance_29si_percent: 4.7,
            units,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn electron_ratio_at_two_tesla_and_100_mk() {
        let x = boltzmann_ratio(SpinSpecies::electron().gamma, 2.0, 0.1).unwrap();
        assert!(rel(x, 27.0) < 0.01, "x = {x}");
    }

    #[test]
    fn zero_field_gives_zero_ratio() {
        assert_eq!(boltzmann_ratio(176e9, 0.0, 3.0).unwrap(), 0.0);
    }

    #[test]
    fn phosphorus_ratio_at_one_millikelvin() {
        let x = boltzmann_ratio(SpinSpecies::phosphorus31().gamma, 2.0, 1e-3).unwrap();
        let oracle = 108e6 * 1.05e-34 * 2.0 / (1.38e-23 * 1e-3);
        assert!(rel(x, oracle) < 1e-15);
        assert!((x - 1.64).abs() < 0.005);
    }

    #[test]
    fn ratio_rejects_bad_temperature_and_field() {
        assert_eq!(
            boltzmann_ratio(1.0, 1.0, 0.0),
            Err(Error::NonPositiveTemperature(0.0))
        );
        assert!(boltzmann_ratio(1.0, 1.0, -1.0).is_err());
        assert!(boltzmann_ratio(1.0, -1.0, 1.0).is_err());
    }

    #[test]
    fn ratio_doubles_exactly_with_field() {
        for &(b, t) in &[(0.3, 0.07), (2.0, 0.1), (7.5, 1.3e-3)] {
            let one = boltzmann_ratio(176e9, b, t).unwrap();
            let two = boltzmann_ratio(176e9, 2.0 * b, t).unwrap();
            assert_eq!(two, 2.0 * one);
        }
    }

    #[test]
    fn spin_half_variance_limits() {
        assert_eq!(spin_half_variance(0.0), 0.25);
        // sech²(13.5)/4 evaluated independently through cosh.
        let oracle = 0.25 / 13.5f64.cosh().powi(2);
        assert!(rel(spin_half_variance(27.0), oracle) < 1e-13);
        assert!(rel(spin_half_variance(27.0), (-27.0f64).exp()) < 0.01);
        assert_eq!(spin_half_variance(f64::INFINITY), 0.0);
        assert!(rel(spin_half_variance(50.0) * 50f64.exp(), 1.0) < 1e-15);
    }

    #[test]
    fn log_variance_matches_direct_form() {
        for &x in &[0.0, 0.5, 3.0, 26.8, 40.8, 300.0] {
            assert!(rel(ln_spin_half_variance(x).exp(), spin_half_variance(x)) < 1e-13);
        }
        assert!(ln_spin_half_variance(5000.0).is_finite());
    }

    #[test]
    fn unhalved_variance_values() {
        assert_eq!(unhalved_tanh_variance(0.0), 0.25);
        let t = 1f64.tanh();
        assert!(rel(unhalved_tanh_variance(1.0), (1.0 - t * t) / 4.0) < 1e-14);
        assert!((unhalved_tanh_variance(1.0) - 0.1050).abs() < 5e-5);
        assert!(rel(unhalved_tanh_variance(27.0), (-54.0f64).exp()) < 1e-12);
    }

    #[test]
    fn silicon_preset_round_trips_through_cgs() {
        let si = MaterialParams::silicon();
        let show = |v: f64| format!("{v:.2e}");
        assert_eq!(show(cgs::length_from_si(si.lattice_constant)), show(5.4e-8));
        assert_eq!(show(cgs::velocity_from_si(si.sound_velocity)), show(5e5));
        assert_eq!(show(cgs::mass_from_si(si.atom_mass)), show(0.46e-29));
        assert_eq!(show(cgs::density_from_si(si.site_density)), show(5.0e22));
        assert!(rel(si.atom_mass, 0.46e-25) < 1e-15);
        assert!(rel(si.site_density, 5.0e28) < 1e-15);
        assert!(rel(cgs::mu0_over_4pi_to_si(cgs::MU0_T2_CM3_PER_J), 1e-7) < 1e-15);
    }

    #[test]
    fn silicon_site_density_gap() {
        let si = MaterialParams::silicon();
        let gap = si.site_density_mismatch();
        assert!((gap - 0.127).abs() < 0.001, "gap = {gap}");
        assert!(si.site_density_consistent());
        si.validate().unwrap();
    }

    #[test]
    fn registry_contents() {
        let r = Registry::standard();
        assert_eq!(r.species.len(), 3);
        assert_eq!(r.species[0].gamma, 1.76e11);
        assert_eq!(r.species[2].gamma, -53e6);
        assert_eq!(r.silicon.debye_temperature, 625.0);
        assert!(SpinSpecies::new("bad", 0.0).is_err());
    }
}
