// Thermal polarization of the donor electron and the field/temperature
// ratio that pushes hyperfine dephasing out to a given T_d.

use qubit_dephasing::mechanisms::{electron_ratio_slope, required_field_temperature_ratio, threshold_spin_temperature};
use qubit_dephasing::units::{boltzmann_ratio, spin_half_variance, MaterialParams, SpinSpecies};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let electron = SpinSpecies::electron();
    let x = boltzmann_ratio(electron.gamma, 2.0, 0.1)?;
    println!("electron gamma*hbar*B/kT at 2 T, 100 mK: {x:.3}");
    println!("  spin variance sech^2(x/2)/4 = {:.3e}", spin_half_variance(x));
    println!("  slope per unit B/T: {:.4} K/T", electron_ratio_slope());

    let a0 = MaterialParams::silicon().hyperfine_constant;
    for td in [1e-3, 1.0, 1e3] {
        let ratio = required_field_temperature_ratio(a0, td)?;
        println!("T_d = {td:>6} s needs B/T >= {ratio:.2} T/K");
    }

    let t_i = threshold_spin_temperature(SpinSpecies::silicon29().gamma, 2.0);
    println!("29Si polarizes below T_I = {:.3} mK at 2 T", t_i * 1e3);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
