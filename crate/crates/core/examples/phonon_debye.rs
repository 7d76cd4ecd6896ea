// Two-phonon Raman dephasing rate from the Debye integral.

use qubit_dephasing::mechanisms::{debye_integral, PhononMode, PhononRamanChannel, FACTORIAL_SIX};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let zeta6 = std::f64::consts::PI.powi(6) / 945.0;
    println!("I(inf) = {:.10} vs 720 zeta(6) = {:.10}", debye_integral(500.0)?, FACTORIAL_SIX * zeta6);
    println!("{:>8} {:>12} {:>12} {:>12}", "T [K]", "exact", "6! approx", "T_d [s]");
    for t in [0.1, 1.0, 4.2, 20.0, 77.0, 300.0] {
        let ch = PhononRamanChannel::silicon(t)?;
        let exact = ch.rate(PhononMode::ExactIntegral);
        println!("{t:>8} {exact:>12.4e} {:>12.4e} {:>12.4e}", ch.rate(PhononMode::FactorialApprox), 1.0 / exact);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
