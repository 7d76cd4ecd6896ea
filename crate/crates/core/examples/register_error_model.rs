// Small random rotations of the register ground state and the mixing
// they leave after ensemble averaging.

use qubit_dephasing::register::{
    ensemble_average_state, error_phase, error_probability, error_unitary, perturbed_ground_state, unitarity_residual, ErrorSampler,
    ErrorVector,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e = ErrorVector::new(0.1, 0.2, 0.3);
    let rho = perturbed_ground_state(&e);
    println!("eps = (0.1, 0.2, 0.3): p = {:.5}, phase = {:.5}", error_probability(&e), error_phase(&e));
    println!("  unitarity residual {:.1e}, rho00 = {:.5}", unitarity_residual(&error_unitary(&e)), rho.m[0][0].re);

    for sigma in [0.01, 0.03, 0.1] {
        let avg = ensemble_average_state(&ErrorSampler::isotropic(sigma, 7)?, 10_000)?;
        println!(
            "sigma = {sigma}: <p> = {:.3e} +- {:.1e} (2 sigma^2 = {:.3e}), |<rho01>| = {:.2e}",
            avg.mean_p,
            avg.stderr_p,
            2.0 * sigma * sigma,
            avg.avg_offdiag_magnitude()
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
