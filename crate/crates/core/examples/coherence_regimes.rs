// Γ(t) across the quasi-static and motional-narrowing regimes, and the
// decoherence time under each convention.

use qubit_dephasing::{decoherence_time, gamma_exact, gamma_static, Convention, ExponentialCorrelation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let variance = 1e4;
    for tau_c in [1e-5, 1e-2, 1e2] {
        let c = ExponentialCorrelation::new(variance, tau_c)?;
        println!("tau_c = {tau_c:e} s");
        for t in [1e-4, 1e-3, 1e-2, 1e-1] {
            let g = gamma_exact(&c, t)?;
            let markov = variance * tau_c * t;
            println!(
                "  t = {t:e}: exact {g:.4e}, static {:.4e}, linear {markov:.4e}",
                gamma_static(&c, t)
            );
        }
        for conv in Convention::ALL {
            println!("  T_d[{conv}] = {:.4e} s", decoherence_time(&c, conv)?);
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
