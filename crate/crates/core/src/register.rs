//! One-qubit control errors and their ensemble average.
//!
//! An error is parameterized by a real vector ε and acts through
//! `U_ε = (I + i ε·σ)/√(1 + |ε|²)`, which is exactly unitary because
//! `(ε·σ)² = |ε|²I`. Acting on `|0⟩` it tilts the Bloch vector, leaving an
//! error probability `p_ε` on the diagonal and a random phase φ_ε on the
//! off-diagonals. Averaging over an ensemble of register copies washes out
//! the phases and leaves a mixed state with mixing degree `⟨p_ε⟩`.

use num_complex::Complex64;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{require, Result};
use crate::qubit::{fidelity, DensityMatrix};
use crate::stochastic::trajectory_rng;

pub type Matrix2 = [[Complex64; 2]; 2];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorVector {
    pub eps_x: f64,
    pub eps_y: f64,
    pub eps_z: f64,
}

impl ErrorVector {
    pub fn new(eps_x: f64, eps_y: f64, eps_z: f64) -> Self {
        Self { eps_x, eps_y, eps_z }
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0)
    }

    pub fn norm_sq(&self) -> f64 {
        self.eps_x * self.eps_x + self.eps_y * self.eps_y + self.eps_z * self.eps_z
    }

    pub fn is_finite(&self) -> bool {
        self.norm_sq().is_finite()
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `U_ε = [[1 + iε_z, iε_x + ε_y], [iε_x − ε_y, 1 − iε_z]] / √(1 + |ε|²)`.
pub fn error_unitary(e: &ErrorVector) -> Matrix2 {
    let s = 1.0 / (1.0 + e.norm_sq()).sqrt();
    [
        [c(s, s * e.eps_z), c(s * e.eps_y, s * e.eps_x)],
        [c(-s * e.eps_y, s * e.eps_x), c(s, -s * e.eps_z)],
    ]
}

pub fn adjoint(m: &Matrix2) -> Matrix2 {
    [[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]]
}

pub fn matmul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// Largest entry of `|U†U − I|`.
pub fn unitarity_residual(u: &Matrix2) -> f64 {
    let p = matmul(&adjoint(u), u);
    let mut worst: f64 = 0.0;
    for (i, row) in p.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((v - target).norm());
        }
    }
    worst
}

/// `U_ε|0⟩⟨0|U_ε†`.
pub fn perturbed_ground_state(e: &ErrorVector) -> DensityMatrix {
    let u = error_unitary(e);
    let ground = DensityMatrix::diagonal(1.0, 0.0);
    DensityMatrix::from_entries(matmul(&matmul(&u, &ground.m), &adjoint(&u)))
}

/// `p_ε = (ε_x² + ε_y²)/(1 + |ε|²)`.
pub fn error_probability(e: &ErrorVector) -> f64 {
    (e.eps_x * e.eps_x + e.eps_y * e.eps_y) / (1.0 + e.norm_sq())
}

/// `|P±,ε| = 2√((1 + ε_z²)(ε_x² + ε_y²))/(1 + |ε|²)`.
pub fn transverse_magnitude(e: &ErrorVector) -> f64 {
    let perp = e.eps_x * e.eps_x + e.eps_y * e.eps_y;
    2.0 * ((1.0 + e.eps_z * e.eps_z) * perp).sqrt() / (1.0 + e.norm_sq())
}

/// φ_ε = arg(P₊,ε) = arg(2ρ₁₀) = atan2(ε_x + ε_yε_z, ε_xε_z − ε_y); 0 when
/// the state has no transverse component.
pub fn error_phase(e: &ErrorVector) -> f64 {
    let num = e.eps_x + e.eps_y * e.eps_z;
    let den = e.eps_x * e.eps_z - e.eps_y;
    if num == 0.0 && den == 0.0 {
        0.0
    } else {
        num.atan2(den)
    }
}

/// The widely quoted form `tan φ_ε = (ε_xε_y + ε_z)/(ε_xε_z − ε_y)`, resolved
/// with atan2 (0 when both parts vanish). It swaps ε_x and ε_z in the
/// numerator relative to [`error_phase`] and does not match the phase of
/// the perturbed state in general; kept for the audit.
pub fn tangent_formula_phase(e: &ErrorVector) -> f64 {
    let num = e.eps_x * e.eps_y + e.eps_z;
    let den = e.eps_x * e.eps_z - e.eps_y;
    if num == 0.0 && den == 0.0 {
        0.0
    } else {
        num.atan2(den)
    }
}

/// Overlap of the perturbed ground state with `|0⟩⟨0|`, equal to `1 − p_ε`.
pub fn ground_fidelity(e: &ErrorVector) -> f64 {
    fidelity(&perturbed_ground_state(e), &DensityMatrix::diagonal(1.0, 0.0)).expect("perturbed state is a valid density matrix")
}

/// Independent zero-mean Gaussian errors per component.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorSampler {
    pub sigma: [f64; 3],
    pub seed: u64,
}

impl ErrorSampler {
    pub fn new(sigma: [f64; 3], seed: u64) -> Result<Self> {
        for s in sigma {
            require(s >= 0.0 && s.is_finite(), "error standard deviation", "nonnegative", s)?;
        }
        Ok(Self { sigma, seed })
    }

    pub fn isotropic(sigma: f64, seed: u64) -> Result<Self> {
        Self::new([sigma; 3], seed)
    }

    /// The error for register copy `index`; deterministic in `(seed, index)`.
    pub fn sample(&self, index: u64) -> ErrorVector {
        let mut rng = trajectory_rng(self.seed, index);
        let mut draw = |s: f64| {
            // Always consume a draw so components stay aligned across sigmas.
            let z: f64 = Normal::new(0.0, 1.0).expect("unit normal").sample(&mut rng);
            s * z
        };
        ErrorVector::new(draw(self.sigma[0]), draw(self.sigma[1]), draw(self.sigma[2]))
    }
}

/// Ensemble-averaged register state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleAverage {
    pub n: usize,
    pub state: DensityMatrix,
    /// Mixing degree ⟨p_ε⟩.
    pub mean_p: f64,
    pub stderr_p: f64,
}

impl EnsembleAverage {
    /// `|⟨ρ₀₁⟩|`.
    pub fn avg_offdiag_magnitude(&self) -> f64 {
        self.state.m[0][1].norm()
    }

    pub fn report(&self) -> EnsembleReport {
        EnsembleReport {
            n: self.n,
            mean_p: self.mean_p,
            stderr_p: self.stderr_p,
            avg_offdiag_magnitude: self.avg_offdiag_magnitude(),
            diag: [self.state.m[0][0].re, self.state.m[1][1].re],
        }
    }
}

/// JSON form of [`EnsembleAverage`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleReport {
    pub n: usize,
    pub mean_p: f64,
    pub stderr_p: f64,
    pub avg_offdiag_magnitude: f64,
    pub diag: [f64; 2],
}

/// Mean of `n` perturbed ground states drawn from `sampler`.
pub fn ensemble_average_state(sampler: &ErrorSampler, n: usize) -> Result<EnsembleAverage> {
    require(n >= 1, "ensemble size", "at least 1", n as f64)?;
    let draws: Vec<(DensityMatrix, f64)> = (0..n as u64)
        .into_par_iter()
        .map(|i| {
            let e = sampler.sample(i);
            (perturbed_ground_state(&e), error_probability(&e))
        })
        .collect();
    let w = 1.0 / n as f64;
    let mut state = DensityMatrix::zero();
    let (mut sp, mut sp2) = (0.0, 0.0);
    for (rho, p) in &draws {
        state.add_scaled(rho, w);
        sp += p;
        sp2 += p * p;
    }
    let mean_p = sp * w;
    let stderr_p = if n > 1 {
        let var = (sp2 * w - mean_p * mean_p).max(0.0) * n as f64 / (n as f64 - 1.0);
        (var * w).sqrt()
    } else {
        0.0
    };
    Ok(EnsembleAverage {
        n,
        state,
        mean_p,
        stderr_p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-15
    }

    #[test]
    fn zero_error_is_identity() {
        let u = error_unitary(&ErrorVector::zero());
        assert_eq!(u, [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
        assert_eq!(perturbed_ground_state(&ErrorVector::zero()), DensityMatrix::diagonal(1.0, 0.0));
        assert_eq!(ground_fidelity(&ErrorVector::zero()), 1.0);
    }

    #[test]
    fn x_error_matches_pauli_form() {
        let e = ErrorVector::new(1.0, 0.0, 0.0);
        let u = error_unitary(&e);
        let s = 0.5f64.sqrt();
        // (I + iσ_x)/√2
        assert!(close(u[0][0], c(s, 0.0)) && close(u[1][1], c(s, 0.0)));
        assert!(close(u[0][1], c(0.0, s)) && close(u[1][0], c(0.0, s)));
        assert!(unitarity_residual(&u) < 1e-15);

        let rho = perturbed_ground_state(&e);
        assert!(close(rho.m[0][0], c(0.5, 0.0)) && close(rho.m[1][1], c(0.5, 0.0)));
        assert!(close(rho.m[0][1], c(0.0, -0.5)) && close(rho.m[1][0], c(0.0, 0.5)));
        let b = rho.bloch();
        assert!((b.py - 1.0).abs() < 1e-15 && b.px.abs() < 1e-15 && b.pz.abs() < 1e-15);
        assert_eq!(error_probability(&e), 0.5);
        assert!((ground_fidelity(&e) - 0.5).abs() < 1e-15);
        assert!((error_phase(&e) - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn mixed_error_probability() {
        let e = ErrorVector::new(0.1, 0.2, 0.3);
        let p = error_probability(&e);
        assert!((p - 0.05 / 1.14).abs() < 1e-16);
        assert!((p - 0.043860).abs() < 5e-7);
        let rho = perturbed_ground_state(&e);
        assert!((rho.m[1][1].re - p).abs() < 1e-15);
        assert!((rho.m[0][0].re - (1.0 - p)).abs() < 1e-15);
        assert!((ground_fidelity(&e) - 0.956140).abs() < 5e-7);
    }

    #[test]
    fn pure_phase_error_keeps_population() {
        for z in [-3.0, 0.1, 7.0] {
            assert_eq!(error_probability(&ErrorVector::new(0.0, 0.0, z)), 0.0);
        }
    }

    #[test]
    fn tangent_formula_examples() {
        assert!((tangent_formula_phase(&ErrorVector::new(0.0, 0.0, 1.0)) - FRAC_PI_2).abs() < 1e-15);
        assert!((tangent_formula_phase(&ErrorVector::new(0.0, 1.0, 0.0)) - PI).abs() < 1e-15);
        assert_eq!(tangent_formula_phase(&ErrorVector::new(1.0, 0.0, 0.0)), 0.0);
    }

    #[test]
    fn phase_matches_matrix_element() {
        for e in [ErrorVector::new(0.1, 0.2, 0.3), ErrorVector::new(-1.2, 0.4, 0.9), ErrorVector::new(0.0, 1.0, 0.0)] {
            let rho = perturbed_ground_state(&e);
            assert!((error_phase(&e) - rho.m[1][0].arg()).abs() < 1e-12);
            assert!((transverse_magnitude(&e) - 2.0 * rho.m[0][1].norm()).abs() < 1e-12);
        }
        // Printed tangent disagrees away from special points.
        let e = ErrorVector::new(0.1, 0.2, 0.3);
        assert!((tangent_formula_phase(&e) - error_phase(&e)).abs() > 0.1);
    }

    #[test]
    fn degenerate_sampler() {
        let s = ErrorSampler::isotropic(0.0, 3).unwrap();
        let avg = ensemble_average_state(&s, 100).unwrap();
        let mut d = avg.state;
        d.add_scaled(&DensityMatrix::diagonal(1.0, 0.0), -1.0);
        assert!(d.m.iter().flatten().all(|z| z.norm() < 1e-12));
        assert_eq!(avg.mean_p, 0.0);
        assert_eq!(avg.stderr_p, 0.0);
    }

    #[test]
    fn sampler_validation_and_determinism() {
        assert!(ErrorSampler::new([0.1, -0.1, 0.0], 0).is_err());
        let s = ErrorSampler::isotropic(0.3, 11).unwrap();
        assert_eq!(s.sample(5), s.sample(5));
        assert_ne!(s.sample(5), s.sample(6));
        assert!(ensemble_average_state(&s, 0).is_err());
    }

    #[test]
    fn report_fields() {
        let s = ErrorSampler::isotropic(0.05, 1).unwrap();
        let r = ensemble_average_state(&s, 1000).unwrap().report();
        assert_eq!(r.n, 1000);
        assert!((r.diag[0] + r.diag[1] - 1.0).abs() < 1e-12);
        assert!((r.diag[1] - r.mean_p).abs() < 1e-12);
        let json = serde_json::to_value(&r).unwrap();
        for key in ["n", "mean_p", "stderr_p", "avg_offdiag_magnitude", "diag"] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }
}
