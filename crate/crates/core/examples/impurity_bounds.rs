// How many paramagnetic and 29Si impurities a 1 s coherence time allows.

use qubit_dephasing::mechanisms::{max_nuclear_impurity_concentration, max_paramagnetic_concentration, NuclearImpurityChannel};
use qubit_dephasing::units::cgs;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for b_over_t in [10.0, 20.0, 30.0] {
        let c = max_paramagnetic_concentration(1.0, b_over_t)?;
        println!("B/T = {b_over_t}: paramagnetic impurities < {:.3e} cm^-3", cgs::density_from_si(c));
    }
    for t_i in [0.4e-3, 0.8e-3, 1.6e-3] {
        let bound = max_nuclear_impurity_concentration(1.0, 2.0, t_i)?;
        println!("T_I = {:.1} mK: 29Si < {:.3e} % of sites", t_i * 1e3, bound.percent_of_sites);
    }
    let natural = NuclearImpurityChannel::silicon29(0.047 * 5e28, 2.0, 1e-3)?;
    println!("natural 29Si at 1 mK: variance {:.3e} s^-2, polarized = {}", natural.variance(), natural.is_polarized());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
