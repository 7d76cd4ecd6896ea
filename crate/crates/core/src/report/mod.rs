//! Everything the `dephase` binary prints: channel reports, sweeps, Monte
//! Carlo comparisons and the consistency audit. Numbers come from the
//! library modules; this layer only assembles and formats them.

mod audit;
mod channel;
mod config;
mod montecarlo;
mod sweep;

pub use audit::{audit_entries, render_audit_csv, render_audit_text, AuditEntry, Verdict};
pub use channel::{channel_report, channel_profile, ChannelReport, PhononSummary};
pub use config::{ChannelConfig, ConfigFile, HyperfineConfig, NuclearConfig, ParamagneticConfig, PhononConfig};
pub use montecarlo::{run_montecarlo, MonteCarloOutcome, MonteCarloSpec, MonteCarloSummary, Regime};
pub use sweep::{run_sweep, Grid, GridScale, SweepSpec};

use std::path::Path;

use crate::error::Result;
use crate::units::Registry;

/// CSV float: 17 significant digits in scientific notation.
pub fn csv_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// CSV boolean.
pub fn csv_flag(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

/// Pretty JSON of the constants registry.
pub fn constants_json() -> String {
    serde_json::to_string_pretty(&Registry::standard()).expect("registry serializes")
}

/// Write to `path`, or stdout when `None`.
pub fn write_output(path: Option<&Path>, content: &str) -> Result<()> {
    use std::io::Write;
    match path {
        Some(p) => std::fs::write(p, content)?,
        None => std::io::stdout().write_all(content.as_bytes())?,
    }
    Ok(())
}

/// `None` for non-finite values so JSON shows `null`.
pub(crate) fn finite(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}
