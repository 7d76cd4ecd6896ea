//! Channel parameter files.
//!
//! Flat key-value text with one section per channel, e.g.
//!
//! ```text
//! [hyperfine]
//! b_tesla = 2.0
//! t_kelvin = 0.1
//! ```
//!
//! Omitted keys take the phosphorus-in-silicon defaults; unknown keys and
//! sections are errors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mechanisms::{
    ChannelKind, HyperfineElectronChannel, NoiseChannel, NuclearImpurityChannel, ParamagneticImpurityChannel, PhononRamanChannel,
    DEFAULT_IMPURITY_T1, DEFAULT_TAU1,
};
use crate::units::MaterialParams;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct HyperfineConfig {
    pub a0_rad_per_s: f64,
    pub b_tesla: f64,
    pub t_kelvin: f64,
    pub tau1_s: f64,
}

impl Default for HyperfineConfig {
    fn default() -> Self {
        Self {
            a0_rad_per_s: MaterialParams::silicon().hyperfine_constant,
            b_tesla: 2.0,
            t_kelvin: 0.1,
            tau1_s: DEFAULT_TAU1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PhononConfig {
    pub t_kelvin: f64,
    pub xi: f64,
    pub debye_temperature_k: f64,
}

impl Default for PhononConfig {
    fn default() -> Self {
        let si = MaterialParams::silicon();
        Self {
            t_kelvin: 0.1,
            xi: si.xi,
            debye_temperature_k: si.debye_temperature,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ParamagneticConfig {
    pub concentration_per_m3: f64,
    pub b_tesla: f64,
    pub t_kelvin: f64,
    pub tau1_s: f64,
}

impl Default for ParamagneticConfig {
    fn default() -> Self {
        Self {
            concentration_per_m3: 1e22,
            b_tesla: 2.0,
            t_kelvin: 0.1,
            tau1_s: DEFAULT_IMPURITY_T1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct NuclearConfig {
    pub concentration_per_m3: f64,
    pub b_tesla: f64,
    pub spin_temperature_k: f64,
    pub t_parallel_s: f64,
}

impl Default for NuclearConfig {
    fn default() -> Self {
        // Natural-abundance ²⁹Si, 4.7 % of sites.
        Self {
            concentration_per_m3: 0.047 * MaterialParams::silicon().site_density,
            b_tesla: 2.0,
            spin_temperature_k: 1e-3,
            t_parallel_s: DEFAULT_IMPURITY_T1,
        }
    }
}

/// A parsed parameter file; any subset of sections may be present.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub hyperfine: Option<HyperfineConfig>,
    pub phonon: Option<PhononConfig>,
    pub paramagnetic: Option<ParamagneticConfig>,
    pub nuclear: Option<NuclearConfig>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.message().to_string()))
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    fn present(&self) -> Vec<ChannelConfig> {
        let mut out = Vec::new();
        if let Some(c) = self.hyperfine {
            out.push(ChannelConfig::Hyperfine(c));
        }
        if let Some(c) = self.phonon {
            out.push(ChannelConfig::Phonon(c));
        }
        if let Some(c) = self.paramagnetic {
            out.push(ChannelConfig::Paramagnetic(c));
        }
        if let Some(c) = self.nuclear {
            out.push(ChannelConfig::Nuclear(c));
        }
        out
    }

    /// The section for `kind` (defaults if absent), or the only section
    /// when `kind` is `None`.
    pub fn select(&self, kind: Option<ChannelKind>) -> Result<ChannelConfig> {
        let present = self.present();
        match kind {
            Some(k) => Ok(present.into_iter().find(|c| c.kind() == k).unwrap_or_else(|| ChannelConfig::default_for(k))),
            None => match present.as_slice() {
                [one] => Ok(*one),
                [] => Err(Error::Config("config has no channel section".into())),
                _ => Err(Error::Config("config has several channel sections; pick one with --kind".into())),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChannelConfig {
    Hyperfine(HyperfineConfig),
    Phonon(PhononConfig),
    Paramagnetic(ParamagneticConfig),
    Nuclear(NuclearConfig),
}

impl ChannelConfig {
    pub fn default_for(kind: ChannelKind) -> Self {
        match kind {
            ChannelKind::Hyperfine => Self::Hyperfine(Default::default()),
            ChannelKind::Phonon => Self::Phonon(Default::default()),
            ChannelKind::Paramagnetic => Self::Paramagnetic(Default::default()),
            ChannelKind::Nuclear => Self::Nuclear(Default::default()),
        }
    }

    pub fn kind(&self) -> ChannelKind {
        match self {
            Self::Hyperfine(_) => ChannelKind::Hyperfine,
            Self::Phonon(_) => ChannelKind::Phonon,
            Self::Paramagnetic(_) => ChannelKind::Paramagnetic,
            Self::Nuclear(_) => ChannelKind::Nuclear,
        }
    }

    /// Parameters accepted by [`ChannelConfig::set`].
    pub fn parameter_names(kind: ChannelKind) -> &'static [&'static str] {
        match kind {
            ChannelKind::Hyperfine => &["a0_rad_per_s", "b_tesla", "t_kelvin", "tau1_s", "b_over_t"],
            ChannelKind::Phonon => &["t_kelvin", "xi", "debye_temperature_k"],
            ChannelKind::Paramagnetic => &["concentration_per_m3", "b_tesla", "t_kelvin", "tau1_s", "b_over_t"],
            ChannelKind::Nuclear => &["concentration_per_m3", "b_tesla", "spin_temperature_k", "t_parallel_s"],
        }
    }

    /// Override one parameter. `b_over_t` keeps the temperature and sets
    /// the field to `value·T`.
    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        let slot: &mut f64 = match (self, name) {
            (Self::Hyperfine(c), "b_over_t") => {
                c.b_tesla = value * c.t_kelvin;
                return Ok(());
            }
            (Self::Paramagnetic(c), "b_over_t") => {
                c.b_tesla = value * c.t_kelvin;
                return Ok(());
            }
            (Self::Hyperfine(c), "a0_rad_per_s") => &mut c.a0_rad_per_s,
            (Self::Hyperfine(c), "b_tesla") => &mut c.b_tesla,
            (Self::Hyperfine(c), "t_kelvin") => &mut c.t_kelvin,
            (Self::Hyperfine(c), "tau1_s") => &mut c.tau1_s,
            (Self::Phonon(c), "t_kelvin") => &mut c.t_kelvin,
            (Self::Phonon(c), "xi") => &mut c.xi,
            (Self::Phonon(c), "debye_temperature_k") => &mut c.debye_temperature_k,
            (Self::Paramagnetic(c), "concentration_per_m3") => &mut c.concentration_per_m3,
            (Self::Paramagnetic(c), "b_tesla") => &mut c.b_tesla,
            (Self::Paramagnetic(c), "t_kelvin") => &mut c.t_kelvin,
            (Self::Paramagnetic(c), "tau1_s") => &mut c.tau1_s,
            (Self::Nuclear(c), "concentration_per_m3") => &mut c.concentration_per_m3,
            (Self::Nuclear(c), "b_tesla") => &mut c.b_tesla,
            (Self::Nuclear(c), "spin_temperature_k") => &mut c.spin_temperature_k,
            (Self::Nuclear(c), "t_parallel_s") => &mut c.t_parallel_s,
            (this, other) => {
                return Err(Error::Config(format!(
                    "unknown parameter '{other}' for {} (expected one of: {})",
                    this.kind().as_str(),
                    Self::parameter_names(this.kind()).join(", ")
                )))
            }
        };
        *slot = value;
        Ok(())
    }

    pub fn build(&self) -> Result<NoiseChannel> {
        Ok(match *self {
            Self::Hyperfine(c) => NoiseChannel::Hyperfine(HyperfineElectronChannel::new(c.a0_rad_per_s, c.b_tesla, c.t_kelvin, c.tau1_s)?),
            Self::Phonon(c) => {
                let material = MaterialParams {
                    debye_temperature: c.debye_temperature_k,
                    xi: c.xi,
                    ..MaterialParams::silicon()
                };
                NoiseChannel::Phonon(PhononRamanChannel::new(material, c.t_kelvin)?)
            }
            Self::Paramagnetic(c) => {
                let mut ch = ParamagneticImpurityChannel::silicon(c.concentration_per_m3, c.b_tesla, c.t_kelvin)?;
                ch.tau1_imp = c.tau1_s;
                ch.validate()?;
                NoiseChannel::Paramagnetic(ch)
            }
            Self::Nuclear(c) => {
                let mut ch = NuclearImpurityChannel::silicon29(c.concentration_per_m3, c.b_tesla, c.spin_temperature_k)?;
                ch.t_parallel = c.t_parallel_s;
                ch.validate()?;
                NoiseChannel::Nuclear(ch)
            }
        })
    }
}
