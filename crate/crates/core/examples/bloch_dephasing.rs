// A pure equatorial state losing its coherence as Γ grows.

use qubit_dephasing::qubit::{apply_dephasing, dephased_eigenvalues, fidelity, limiting_populations};
use qubit_dephasing::BlochState;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s = BlochState::from_angles(std::f64::consts::FRAC_PI_2, 0.3);
    let start = apply_dephasing(&s, 0.0)?;
    println!("{:>6} {:>10} {:>10} {:>10} {:>10}", "gamma", "|rho01|", "lambda+", "purity", "fidelity");
    for gamma in [0.0, 0.1, 0.5, 1.0, 2.0, 5.0] {
        let rho = apply_dephasing(&s, gamma)?;
        let (hi, _) = dephased_eigenvalues(&s, gamma)?;
        println!(
            "{gamma:>6.2} {:>10.5} {hi:>10.5} {:>10.5} {:>10.5}",
            rho.m[0][1].norm(),
            rho.purity(),
            fidelity(&start, &rho)?
        );
    }
    let (p0, p1) = limiting_populations(&s);
    println!("populations never move: {p0:.3}, {p1:.3}");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
