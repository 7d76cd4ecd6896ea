//! Single-channel report: variance, correlation time, decoherence times and
//! a Γ(t) profile.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::finite;
use crate::dephasing::{decoherence_time, Convention, DecoherenceProfile};
use crate::error::Result;
use crate::mechanisms::{channel_to_correlation, ChannelKind, NoiseChannel, PhononMode, INSIGNIFICANT_RATE};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhononSummary {
    pub rate_per_s: f64,
    pub rate_factorial_per_s: f64,
    pub reduced_temperature: f64,
    pub low_temperature: bool,
    /// Rate below one dephasing event per ~20 minutes.
    pub insignificant: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelReport {
    pub kind: ChannelKind,
    pub channel: NoiseChannel,
    pub variance_rad2_per_s2: Option<f64>,
    pub tau_c_s: Option<f64>,
    pub polarization_ratio: Option<f64>,
    /// One entry per convention; `null` when the time is infinite.
    pub decoherence_time_s: BTreeMap<String, Option<f64>>,
    pub infinite_decoherence_time: bool,
    pub phonon: Option<PhononSummary>,
}

pub fn channel_report(ch: &NoiseChannel, phonon_mode: PhononMode) -> Result<ChannelReport> {
    ch.validate()?;
    let mut times = BTreeMap::new();
    let mut report = ChannelReport {
        kind: ch.kind(),
        channel: *ch,
        variance_rad2_per_s2: None,
        tau_c_s: None,
        polarization_ratio: None,
        decoherence_time_s: BTreeMap::new(),
        infinite_decoherence_time: false,
        phonon: None,
    };
    if let NoiseChannel::Phonon(p) = ch {
        let rate = p.rate(phonon_mode);
        let td = 1.0 / rate;
        report.phonon = Some(PhononSummary {
            rate_per_s: rate,
            rate_factorial_per_s: p.rate(PhononMode::FactorialApprox),
            reduced_temperature: p.reduced_temperature(),
            low_temperature: p.is_low_temperature(),
            insignificant: rate < INSIGNIFICANT_RATE,
        });
        report.infinite_decoherence_time = !td.is_finite();
        times.insert(Convention::Markovian.key().to_string(), finite(td));
        report.decoherence_time_s = times;
        return Ok(report);
    }

    let corr = channel_to_correlation(ch)?;
    report.variance_rad2_per_s2 = Some(corr.variance);
    report.tau_c_s = finite(corr.tau_c_seconds());
    report.polarization_ratio = Some(match ch {
        NoiseChannel::Hyperfine(c) => c.polarization_ratio(),
        NoiseChannel::Paramagnetic(c) => c.polarization_ratio(),
        NoiseChannel::Nuclear(c) => c.polarization_ratio(),
        NoiseChannel::Phonon(_) => unreachable!(),
    });
    for conv in Convention::ALL {
        let td = decoherence_time(&corr, conv)?;
        report.infinite_decoherence_time |= td.is_infinite();
        times.insert(conv.key().to_string(), finite(td));
    }
    report.decoherence_time_s = times;
    Ok(report)
}

/// Γ(t) and e^{−Γ} on `times`. The phonon channel has `Γ = rate·t`.
pub fn channel_profile(ch: &NoiseChannel, phonon_mode: PhononMode, times: &[f64]) -> Result<DecoherenceProfile> {
    match ch {
        NoiseChannel::Phonon(p) => {
            let rate = p.rate(phonon_mode);
            Ok(DecoherenceProfile {
                times: times.to_vec(),
                gamma_values: times.iter().map(|t| rate * t).collect(),
            })
        }
        other => DecoherenceProfile::compute(&channel_to_correlation(other)?, times),
    }
}
