//! Recomputes each published estimate and grades the agreement.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dephasing::{decoherence_time, Convention};
use crate::mechanisms::{
    max_nuclear_impurity_concentration, max_paramagnetic_concentration, required_field_temperature_ratio, threshold_spin_temperature,
    HyperfineElectronChannel, ParamagneticImpurityChannel, PhononMode, PhononRamanChannel, REFERENCE_TEMPERATURE,
};
use crate::register::{error_phase, tangent_formula_phase, ErrorVector};
use crate::units::{boltzmann_ratio, cgs, spin_half_variance, unhalved_tanh_variance, MaterialParams, ATOMS_PER_CUBIC_CELL, SpinSpecies};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Approx,
    TypoSuspected,
    Discrepant,
}

impl Verdict {
    /// Within 15 % → match, within 2× → approx, off by a clean power of
    /// ten (after which it would match) → typo-suspected.
    pub fn from_ratio(ratio: f64) -> Self {
        if !(ratio.is_finite() && ratio > 0.0) {
            return Verdict::Discrepant;
        }
        let spread = |r: f64| r.max(1.0 / r);
        if spread(ratio) <= 1.15 {
            return Verdict::Match;
        }
        if spread(ratio) <= 2.0 {
            return Verdict::Approx;
        }
        let k = ratio.log10().round();
        if k != 0.0 && spread(ratio / 10f64.powf(k)) <= 1.15 {
            return Verdict::TypoSuspected;
        }
        Verdict::Discrepant
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Approx => "approx",
            Verdict::TypoSuspected => "typo-suspected",
            Verdict::Discrepant => "discrepant",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub claim_id: String,
    pub description: String,
    pub published_value: f64,
    pub published_unit: String,
    pub computed_value: f64,
    pub computed_unit: String,
    /// computed / published.
    pub ratio: f64,
    pub verdict: Verdict,
}

impl AuditEntry {
    pub fn new(claim_id: &str, description: &str, published_value: f64, computed_value: f64, unit: &str) -> Self {
        let ratio = computed_value / published_value;
        Self {
            claim_id: claim_id.into(),
            description: description.into(),
            published_value,
            published_unit: unit.into(),
            computed_value,
            computed_unit: unit.into(),
            ratio,
            verdict: Verdict::from_ratio(ratio),
        }
    }
}

/// All audited claims, in a fixed order.
pub fn audit_entries() -> Vec<AuditEntry> {
    let electron = SpinSpecies::electron();
    let si = MaterialParams::silicon();
    let b = 2.0;
    let t = REFERENCE_TEMPERATURE;
    let x20 = boltzmann_ratio(electron.gamma, b, t).expect("positive temperature");

    let hyperfine = HyperfineElectronChannel::silicon(b, t).expect("valid preset");
    let td20 = decoherence_time(&hyperfine.correlation(), Convention::Static).expect("static convention");
    let threshold = required_field_temperature_ratio(si.hyperfine_constant, 1.0).expect("finite target");

    let phonon = PhononRamanChannel::silicon(t).expect("valid preset");
    let phonon_prefactor = phonon.rate(PhononMode::FactorialApprox) / phonon.reduced_temperature().powi(7);

    let para = ParamagneticImpurityChannel::silicon(0.0, b, t).expect("valid preset");
    let full_prefactor = para.dipolar_prefactor();
    let thermal_prefactor = full_prefactor * spin_half_variance(x20);
    let bound = max_paramagnetic_concentration(1.0, b / t).expect("positive target");

    let t_i = threshold_spin_temperature(SpinSpecies::silicon29().gamma, b);
    let nuclear = max_nuclear_impurity_concentration(1.0, b, 0.8e-3).expect("positive target");

    let lattice_density = 1.0 / cgs::SILICON_LATTICE_CONSTANT_CM.powi(3);
    let eps = ErrorVector::new(0.1, 0.2, 0.3);

    vec![
        AuditEntry::new("electron-polarization-ratio", "electron gamma*hbar*B/kT at B = 2 T, T = 0.1 K", 27.0, x20, "1"),
        AuditEntry::new(
            "hyperfine-threshold-b-over-t",
            "B/T needed for a 1 s static decoherence time",
            30.0,
            threshold,
            "T/K",
        ),
        AuditEntry::new("hyperfine-td-at-20", "static decoherence time from the donor electron at B/T = 20", 1e-3, td20, "s"),
        AuditEntry::new(
            "phonon-prefactor",
            "Raman rate divided by (T/Theta)^7 with the 6! approximation",
            0.75e4,
            phonon_prefactor,
            "1/s",
        ),
        AuditEntry::new(
            "paramagnetic-full-prefactor",
            "paramagnetic variance per unit site fraction without thermal suppression",
            33.4e-13,
            full_prefactor,
            "rad^2/s^2",
        ),
        AuditEntry::new(
            "paramagnetic-prefactor-at-20",
            "paramagnetic variance per unit site fraction at B/T = 20",
            0.74e3,
            thermal_prefactor,
            "rad^2/s^2",
        ),
        AuditEntry::new(
            "paramagnetic-site-fraction-bound",
            "largest paramagnetic site fraction for a 1 s decoherence time",
            1.4e-3,
            bound * si.site_volume(),
            "1",
        ),
        AuditEntry::new(
            "paramagnetic-concentration-bound",
            "largest paramagnetic concentration for a 1 s decoherence time",
            0.7e20,
            cgs::density_from_si(bound),
            "1/cm^3",
        ),
        AuditEntry::new(
            "nuclear-spin-temperature-threshold",
            "29Si spin temperature where gamma*hbar*B/kT_I = 1 at B = 2 T",
            0.8,
            t_i * 1e3,
            "mK",
        ),
        AuditEntry::new(
            "nuclear-impurity-percent-bound",
            "largest 29Si fraction for a 1 s decoherence time at B = 2 T, T_I = 0.8 mK",
            4.5e-2,
            nuclear.percent_of_sites,
            "%",
        ),
        AuditEntry::new(
            "hyperfine-variance-unhalved-tanh",
            "hyperfine variance / A0^2 with tanh(x) against the e^-x large-x form, B/T = 20",
            (-x20).exp(),
            unhalved_tanh_variance(x20),
            "1",
        ),
        AuditEntry::new(
            "hyperfine-variance-halved-tanh",
            "hyperfine variance / A0^2 with tanh(x/2) against the e^-x large-x form, B/T = 20",
            (-x20).exp(),
            spin_half_variance(x20),
            "1",
        ),
        AuditEntry::new(
            "site-density-vs-lattice-constant",
            "a^-3 from the lattice constant against the quoted site density",
            cgs::SILICON_SITE_DENSITY_CM3,
            lattice_density,
            "1/cm^3",
        ),
        AuditEntry::new(
            "site-density-vs-cubic-cell",
            "8 a^-3 (eight atoms per cubic cell) against the quoted site density",
            cgs::SILICON_SITE_DENSITY_CM3,
            ATOMS_PER_CUBIC_CELL * lattice_density,
            "1/cm^3",
        ),
        AuditEntry::new(
            "error-phase-tangent-formula",
            "phase of the error-perturbed coherence at eps = (0.1, 0.2, 0.3): printed tangent vs matrix element",
            tangent_formula_phase(&eps),
            error_phase(&eps),
            "rad",
        ),
    ]
}

pub fn render_audit_text(entries: &[AuditEntry]) -> String {
    let id_w = entries.iter().map(|e| e.claim_id.len()).max().unwrap_or(8).max(8);
    let mut out = String::new();
    let _ = writeln!(out, "{:<id_w$}  {:>12}  {:>12}  {:<10}  {:>10}  verdict", "claim", "published", "computed", "unit", "ratio");
    for e in entries {
        let _ = writeln!(
            out,
            "{:<id_w$}  {:>12.4e}  {:>12.4e}  {:<10}  {:>10.4e}  {}",
            e.claim_id,
            e.published_value,
            e.computed_value,
            e.computed_unit,
            e.ratio,
            e.verdict.as_str()
        );
    }
    out
}

pub fn render_audit_csv(entries: &[AuditEntry]) -> String {
    use super::csv_float;
    let mut out = String::from("claim_id,published_value,published_unit,computed_value,computed_unit,ratio,verdict\n");
    for e in entries {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            e.claim_id,
            csv_float(e.published_value),
            e.published_unit,
            csv_float(e.computed_value),
            e.computed_unit,
            csv_float(e.ratio),
            e.verdict.as_str()
        );
    }
    out
}
