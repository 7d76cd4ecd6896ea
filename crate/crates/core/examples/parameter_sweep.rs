// Sweep the spin temperature of 29Si through its polarization threshold.

use qubit_dephasing::mechanisms::{ChannelKind, PhononMode};
use qubit_dephasing::report::{run_sweep, ChannelConfig, SweepSpec};
use qubit_dephasing::Convention;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = SweepSpec {
        base: ChannelConfig::default_for(ChannelKind::Nuclear),
        parameter: "spin_temperature_k".into(),
        grid: "0.4e-3:1.2e-3:9:lin".parse()?,
        convention: Convention::Static,
        phonon_mode: PhononMode::ExactIntegral,
    };
    print!("{}", run_sweep(&spec)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
