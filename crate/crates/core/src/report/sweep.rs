//! One-parameter sweeps over a channel.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{csv_flag, csv_float, ChannelConfig};
use crate::dephasing::{decoherence_time, Convention};
use crate::error::{Error, Result};
use crate::mechanisms::{channel_to_correlation, NoiseChannel, PhononMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridScale {
    Lin,
    Log,
}

/// `min:max:count:{lin,log}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub scale: GridScale,
}

impl Grid {
    pub fn new(min: f64, max: f64, count: usize, scale: GridScale) -> Result<Self> {
        let g = Self { min, max, count, scale };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.count < 2 {
            return Err(Error::Config(format!("grid needs at least 2 points, got {}", self.count)));
        }
        if !(self.min.is_finite() && self.max.is_finite() && self.min < self.max) {
            return Err(Error::Config(format!("grid needs min < max, got {}:{}", self.min, self.max)));
        }
        if self.scale == GridScale::Log && self.min <= 0.0 {
            return Err(Error::Config(format!("log grid needs min > 0, got {}", self.min)));
        }
        Ok(())
    }

    /// Grid values; both endpoints are exact.
    pub fn points(&self) -> Vec<f64> {
        let last = self.count - 1;
        (0..self.count)
            .map(|i| {
                if i == 0 {
                    return self.min;
                }
                if i == last {
                    return self.max;
                }
                let f = i as f64 / last as f64;
                match self.scale {
                    GridScale::Lin => self.min + f * (self.max - self.min),
                    GridScale::Log => (self.min.ln() + f * (self.max.ln() - self.min.ln())).exp(),
                }
            })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("grid '{s}' is not min:max:count:{{lin,log}}"));
        let parts: Vec<&str> = s.split(':').collect();
        let [min, max, count, scale] = parts.as_slice() else {
            return Err(bad());
        };
        let scale = match *scale {
            "lin" => GridScale::Lin,
            "log" => GridScale::Log,
            _ => return Err(bad()),
        };
        Grid::new(
            min.trim().parse().map_err(|_| bad())?,
            max.trim().parse().map_err(|_| bad())?,
            count.trim().parse().map_err(|_| bad())?,
            scale,
        )
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scale = match self.scale {
            GridScale::Lin => "lin",
            GridScale::Log => "log",
        };
        write!(f, "{}:{}:{}:{scale}", self.min, self.max, self.count)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    /// Fixed parameters; the channel kind comes from here.
    pub base: ChannelConfig,
    pub parameter: String,
    pub grid: Grid,
    pub convention: Convention,
    pub phonon_mode: PhononMode,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        self.grid.validate()?;
        let mut probe = self.base;
        probe.set(&self.parameter, self.grid.min)
    }

    pub fn header(&self) -> String {
        match self.base {
            ChannelConfig::Phonon(_) => format!("{},rate_per_s,td_s,reduced_temperature,low_temperature", self.parameter),
            _ => format!(
                "{},variance_rad2_per_s2,tau_c_s,polarization_ratio,polarized,td_{}_s",
                self.parameter,
                self.convention.key()
            ),
        }
    }
}

/// CSV with one row per grid point, in grid order.
pub fn run_sweep(spec: &SweepSpec) -> Result<String> {
    spec.validate()?;
    let mut out = spec.header();
    out.push('\n');
    for value in spec.grid.points() {
        let mut cfg = spec.base;
        cfg.set(&spec.parameter, value)?;
        let ch = cfg.build()?;
        let cells: Vec<String> = match ch {
            NoiseChannel::Phonon(p) => {
                let rate = p.rate(spec.phonon_mode);
                vec![
                    csv_float(value),
                    csv_float(rate),
                    csv_float(1.0 / rate),
                    csv_float(p.reduced_temperature()),
                    csv_flag(p.is_low_temperature()).into(),
                ]
            }
            _ => {
                let corr = channel_to_correlation(&ch)?;
                let x = match ch {
                    NoiseChannel::Hyperfine(c) => c.polarization_ratio(),
                    NoiseChannel::Paramagnetic(c) => c.polarization_ratio(),
                    NoiseChannel::Nuclear(c) => c.polarization_ratio(),
                    NoiseChannel::Phonon(_) => unreachable!(),
                };
                vec![
                    csv_float(value),
                    csv_float(corr.variance),
                    csv_float(corr.tau_c_seconds()),
                    csv_float(x),
                    csv_flag(x > 1.0).into(),
                    csv_float(decoherence_time(&corr, spec.convention)?),
                ]
            }
        };
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    Ok(out)
}
