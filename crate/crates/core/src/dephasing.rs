//! The dephasing exponent Γ(t) for Gaussian frequency noise with an
//! exponential correlation function `⟨Δω(τ)Δω(0)⟩ = ⟨Δω²⟩e^{−|τ|/τ_c}`.
//!
//! `Γ(t) = ∫₀ᵗ (t − τ)⟨Δω(τ)Δω(0)⟩ dτ = ⟨Δω²⟩τ_c²(t/τ_c − 1 + e^{−t/τ_c})`.
//! Two limits matter: the static regime `t ≪ τ_c`, where `Γ → ⟨Δω²⟩t²/2`,
//! and motional narrowing `t ≫ τ_c`, where `Γ → ⟨Δω²⟩τ_c·t`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::numeric;
use crate::report::csv_float;

/// Below this `t/τ_c` the closed form is replaced by its Taylor series.
pub const SERIES_SWITCHOVER: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorrelationTime {
    Finite(f64),
    /// Frozen noise; Γ is always the static form.
    Infinite,
}

/// A noise channel reduced to its variance and correlation time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExponentialCorrelation {
    /// ⟨Δω²⟩, rad²/s².
    pub variance: f64,
    pub tau_c: CorrelationTime,
}

impl ExponentialCorrelation {
    pub fn new(variance: f64, tau_c: f64) -> Result<Self> {
        require(variance >= 0.0 && variance.is_finite(), "variance", "nonnegative", variance)?;
        let tau_c = if tau_c == f64::INFINITY {
            CorrelationTime::Infinite
        } else {
            require(tau_c > 0.0, "correlation time", "positive", tau_c)?;
            CorrelationTime::Finite(tau_c)
        };
        Ok(Self { variance, tau_c })
    }

    pub fn frozen(variance: f64) -> Result<Self> {
        Self::new(variance, f64::INFINITY)
    }

    /// Correlation time in seconds (`∞` for frozen noise).
    pub fn tau_c_seconds(&self) -> f64 {
        match self.tau_c {
            CorrelationTime::Finite(t) => t,
            CorrelationTime::Infinite => f64::INFINITY,
        }
    }

    /// `⟨Δω(τ)Δω(0)⟩`.
    pub fn correlation(&self, lag: f64) -> f64 {
        match self.tau_c {
            CorrelationTime::Finite(tc) => self.variance * (-lag.abs() / tc).exp(),
            CorrelationTime::Infinite => self.variance,
        }
    }
}

/// `r − 1 + e^{−r}`, accurate for every `r ≥ 0`.
fn relaxation_shape(r: f64) -> f64 {
    if r < SERIES_SWITCHOVER {
        let r2 = r * r;
        r2 / 2.0 - r2 * r / 6.0 + r2 * r2 / 24.0
    } else if r < 0.5 {
        // Same closed form, summed term by term to dodge the cancellation.
        let mut term = r * r / 2.0;
        let mut sum: f64 = 0.0;
        let mut k = 2.0;
        while term.abs() > 1e-18 * sum.abs() {
            sum += term;
            k += 1.0;
            term *= -r / k;
        }
        sum
    } else {
        r + (-r).exp_m1()
    }
}

/// Exact Γ(t) for exponential correlation.
pub fn gamma_exact(c: &ExponentialCorrelation, t: f64) -> Result<f64> {
    require(t >= 0.0, "time", "nonnegative", t)?;
    Ok(match c.tau_c {
        CorrelationTime::Infinite => 0.5 * c.variance * t * t,
        CorrelationTime::Finite(tc) => c.variance * tc * tc * relaxation_shape(t / tc),
    })
}

/// Static-regime Γ(t) = ⟨Δω²⟩t²/2, regardless of τ_c.
pub fn gamma_static(c: &ExponentialCorrelation, t: f64) -> f64 {
    0.5 * c.variance * t * t
}

/// `e^{−Γ(t)}`.
pub fn coherence_envelope(c: &ExponentialCorrelation, t: f64) -> Result<f64> {
    Ok((-gamma_exact(c, t)?).exp())
}

/// How a decoherence time is read off a noise channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// `T_d = ⟨Δω²⟩^{−1/2}`.
    Static,
    /// `T_d = (⟨Δω²⟩τ_c)⁻¹`.
    Markovian,
    /// The `t` at which Γ(t) = 1.
    UnitGamma,
}

impl Convention {
    pub const ALL: [Convention; 3] = [Convention::Static, Convention::Markovian, Convention::UnitGamma];

    pub fn as_str(&self) -> &'static str {
        match self {
            Convention::Static => "static",
            Convention::Markovian => "markovian",
            Convention::UnitGamma => "unit-gamma",
        }
    }

    /// Identifier-safe form for CSV headers and JSON keys.
    pub fn key(&self) -> &'static str {
        match self {
            Convention::Static => "static",
            Convention::Markovian => "markovian",
            Convention::UnitGamma => "unit_gamma",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "static" => Ok(Convention::Static),
            "markovian" => Ok(Convention::Markovian),
            "unit-gamma" | "unit_gamma" => Ok(Convention::UnitGamma),
            other => Err(Error::Config(format!("unknown convention '{other}'"))),
        }
    }
}

/// Decoherence time in seconds under `convention`. Zero variance gives
/// `f64::INFINITY`.
pub fn decoherence_time(c: &ExponentialCorrelation, convention: Convention) -> Result<f64> {
    if c.variance == 0.0 {
        return Ok(f64::INFINITY);
    }
    match convention {
        Convention::Static => Ok(c.variance.sqrt().recip()),
        Convention::Markovian => match c.tau_c {
            CorrelationTime::Finite(tc) => Ok((c.variance * tc).recip()),
            CorrelationTime::Infinite => Err(Error::Domain {
                name: "correlation time",
                requirement: "finite for the markovian convention",
                value: f64::INFINITY,
            }),
        },
        Convention::UnitGamma => {
            let f = |t: f64| gamma_exact(c, t).unwrap_or(f64::NAN) - 1.0;
            // Γ_exact ≤ Γ_static, so the static crossing √2/σ is a lower bound.
            let start = (2.0 / c.variance).sqrt();
            let hi = numeric::expand_bracket(&f, 0.0, start, f64::MAX / 4.0)
                .ok_or_else(|| Error::NoSolution("Γ(t) never reaches 1".into()))?;
            numeric::bisect(f, 0.0, hi, 1e-13)
        }
    }
}

/// Γ sampled on a time grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecoherenceProfile {
    pub times: Vec<f64>,
    pub gamma_values: Vec<f64>,
}

impl DecoherenceProfile {
    pub fn compute(c: &ExponentialCorrelation, times: &[f64]) -> Result<Self> {
        if times.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::Config("profile times must be sorted".into()));
        }
        let gamma_values = times
            .iter()
            .map(|&t| gamma_exact(c, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            times: times.to_vec(),
            gamma_values,
        })
    }

    pub fn envelopes(&self) -> impl Iterator<Item = f64> + '_ {
        self.gamma_values.iter().map(|g| (-g).exp())
    }

    pub const CSV_HEADER: &'static str = "t_seconds,gamma,envelope";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for ((t, g), e) in self.times.iter().zip(&self.gamma_values).zip(self.envelopes()) {
            out.push_str(&format!("{},{},{}\n", csv_float(*t), csv_float(*g), csv_float(e)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corr(v: f64, tc: f64) -> ExponentialCorrelation {
        ExponentialCorrelation::new(v, tc).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn zero_variance_never_dephases() {
        let c = corr(0.0, 3.0);
        for t in [0.0, 1.0, 1e5] {
            assert_eq!(gamma_exact(&c, t).unwrap(), 0.0);
        }
        assert_eq!(decoherence_time(&c, Convention::UnitGamma).unwrap(), f64::INFINITY);
    }

    #[test]
    fn short_time_limit() {
        let g = gamma_exact(&corr(1.0, 1e6), 1.0).unwrap();
        assert!(rel(g, 0.5) < 1e-6);
    }

    #[test]
    fn long_time_limit() {
        let g = gamma_exact(&corr(1.0, 1e-3), 10.0).unwrap();
        assert!(rel(g, 1e-3 * (10.0 - 1e-3)) < 1e-12, "{g}");
    }

    #[test]
    fn negative_time_is_rejected() {
        assert!(gamma_exact(&corr(1.0, 1.0), -1.0).is_err());
    }

    #[test]
    fn frozen_noise_uses_static_form() {
        let c = ExponentialCorrelation::frozen(4.0).unwrap();
        assert_eq!(gamma_exact(&c, 3.0).unwrap(), 18.0);
        assert!(decoherence_time(&c, Convention::Markovian).is_err());
    }

    #[test]
    fn static_form() {
        let c = corr(1.0, 10.0);
        assert_eq!(gamma_static(&c, 0.0), 0.0);
        assert_eq!(gamma_static(&c, 1.0), 0.5);
    }

    #[test]
    fn static_form_tracks_exact_at_short_times() {
        // Γ_exact/Γ_static = 1 − r/3 + O(r²); within 1% needs r ≲ 0.03.
        let c = corr(2.5, 1.0);
        for i in 1..=300 {
            let t = 1e-4 * i as f64;
            let s = gamma_static(&c, t);
            assert!(rel(gamma_exact(&c, t).unwrap(), s) < 0.01, "t = {t}");
        }
        let r = gamma_exact(&c, 0.1).unwrap() / gamma_static(&c, 0.1);
        assert!((r - 0.9675).abs() < 1e-4, "{r}");
    }

    #[test]
    fn conventions() {
        assert!(rel(decoherence_time(&corr(1e6, 1e4), Convention::Static).unwrap(), 1e-3) < 1e-15);
        assert_eq!(decoherence_time(&corr(4.0, 0.5), Convention::Markovian).unwrap(), 0.5);
        for &(v, tc) in &[(1.0, 1e4), (1e6, 1e-3), (3.0, 0.7)] {
            let c = corr(v, tc);
            let td = decoherence_time(&c, Convention::UnitGamma).unwrap();
            assert!((gamma_exact(&c, td).unwrap() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn envelope_values() {
        let c = corr(3.0, 1e9);
        assert_eq!(coherence_envelope(&c, 0.0).unwrap(), 1.0);
        let t = 2f64.sqrt() / 3f64.sqrt();
        assert!(rel(coherence_envelope(&c, t).unwrap(), (-1f64).exp()) < 1e-8);
        let f = ExponentialCorrelation::frozen(2.0 * std::f64::consts::LN_2).unwrap();
        assert!(rel(coherence_envelope(&f, 1.0).unwrap(), 0.5) < 1e-15);
    }

    #[test]
    fn convention_parsing() {
        for c in Convention::ALL {
            assert_eq!(c.as_str().parse::<Convention>().unwrap(), c);
        }
        assert!("lorentzian".parse::<Convention>().is_err());
    }

    #[test]
    fn profile_csv() {
        let p = DecoherenceProfile::compute(&corr(1.0, 1.0), &[0.0, 1.0]).unwrap();
        let csv = p.to_csv();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "t_seconds,gamma,envelope");
        assert_eq!(lines[1], "0.0000000000000000e0,0.0000000000000000e0,1.0000000000000000e0");
        assert!(DecoherenceProfile::compute(&corr(1.0, 1.0), &[1.0, 0.5]).is_err());
    }
}
