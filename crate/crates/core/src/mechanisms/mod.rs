//! The four pure-dephasing channels acting on a ³¹P qubit in silicon.
//!
//! Three of them (donor electron via hyperfine coupling, paramagnetic
//! impurities, nuclear-spin impurities) are Gaussian frequency noise with an
//! exponential correlation and reduce to an [`ExponentialCorrelation`]. The
//! phonon channel produces a linear Γ(t) directly and is reported as a rate.

mod hyperfine;
mod impurity;
mod phonon;

pub use hyperfine::{electron_ratio_slope, hyperfine_variance, required_field_temperature_ratio, HyperfineElectronChannel, DEFAULT_TAU1};
pub use impurity::{
    dipolar_constant, max_nuclear_impurity_concentration, max_paramagnetic_concentration, nuclear_impurity_variance, paramagnetic_variance,
    threshold_spin_temperature, ConcentrationBound, NuclearImpurityChannel, ParamagneticImpurityChannel, DEFAULT_IMPURITY_T1,
    REFERENCE_TEMPERATURE,
};
pub use phonon::{
    debye_integral, phonon_rate, phonon_rate_scale, PhononMode, PhononRamanChannel, FACTORIAL_SIX, INSIGNIFICANT_RATE, LOW_TEMPERATURE_LIMIT,
};

use serde::{Deserialize, Serialize};

use crate::dephasing::ExponentialCorrelation;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChannelKind {
    Hyperfine,
    Phonon,
    Paramagnetic,
    Nuclear,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 4] = [ChannelKind::Hyperfine, ChannelKind::Phonon, ChannelKind::Paramagnetic, ChannelKind::Nuclear];

    pub fn as_str(&self) -> &'static str {
        match self {
            ChannelKind::Hyperfine => "hyperfine",
            ChannelKind::Phonon => "phonon",
            ChannelKind::Paramagnetic => "paramagnetic",
            ChannelKind::Nuclear => "nuclear",
        }
    }
}

impl std::str::FromStr for ChannelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ChannelKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown channel kind '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum NoiseChannel {
    Hyperfine(HyperfineElectronChannel),
    Phonon(PhononRamanChannel),
    Paramagnetic(ParamagneticImpurityChannel),
    Nuclear(NuclearImpurityChannel),
}

impl NoiseChannel {
    pub fn kind(&self) -> ChannelKind {
        match self {
            NoiseChannel::Hyperfine(_) => ChannelKind::Hyperfine,
            NoiseChannel::Phonon(_) => ChannelKind::Phonon,
            NoiseChannel::Paramagnetic(_) => ChannelKind::Paramagnetic,
            NoiseChannel::Nuclear(_) => ChannelKind::Nuclear,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            NoiseChannel::Hyperfine(c) => c.validate(),
            NoiseChannel::Phonon(c) => PhononRamanChannel::new(c.material, c.t).map(|_| ()),
            NoiseChannel::Paramagnetic(c) => c.validate(),
            NoiseChannel::Nuclear(c) => c.validate(),
        }
    }
}

/// Pair a channel's variance with its correlation time (τ₁, τ₁,imp or
/// T_∥,imp). The phonon channel has none.
pub fn channel_to_correlation(ch: &NoiseChannel) -> Result<ExponentialCorrelation> {
    match ch {
        NoiseChannel::Hyperfine(c) => Ok(c.correlation()),
        NoiseChannel::Paramagnetic(c) => Ok(c.correlation()),
        NoiseChannel::Nuclear(c) => Ok(c.correlation()),
        NoiseChannel::Phonon(_) => Err(Error::UnsupportedChannel),
    }
}
