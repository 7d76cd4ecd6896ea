//! One-qubit states in the rotating frame.
//!
//! Convention: `ρ = ½[[1 + P_z, P₋], [P₊, 1 − P_z]]` with `P± = P_x ± iP_y`,
//! so `ρ₁₀ = P₊/2`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};

/// Absolute tolerance for every matrix invariant.
pub const MATRIX_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochState {
    pub px: f64,
    pub py: f64,
    pub pz: f64,
}

impl BlochState {
    pub fn new(px: f64, py: f64, pz: f64) -> Result<Self> {
        let s = Self { px, py, pz };
        s.validate()?;
        Ok(s)
    }

    pub fn ground() -> Self {
        Self {
            px: 0.0,
            py: 0.0,
            pz: 1.0,
        }
    }

    /// Unit vector from polar and azimuthal angles.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        Self {
            px: theta.sin() * phi.cos(),
            py: theta.sin() * phi.sin(),
            pz: theta.cos(),
        }
    }

    pub fn norm(&self) -> f64 {
        (self.px * self.px + self.py * self.py + self.pz * self.pz).sqrt()
    }

    pub fn transverse_sq(&self) -> f64 {
        self.px * self.px + self.py * self.py
    }

    pub fn is_pure(&self) -> bool {
        (self.norm() - 1.0).abs() <= MATRIX_TOLERANCE
    }

    /// `P₊ = P_x + iP_y`.
    pub fn p_plus(&self) -> Complex64 {
        Complex64::new(self.px, self.py)
    }

    pub fn validate(&self) -> Result<()> {
        let n2 = self.px * self.px + self.py * self.py + self.pz * self.pz;
        if !n2.is_finite() || n2 > 1.0 + MATRIX_TOLERANCE {
            return Err(Error::BlochNormExceeded(n2.sqrt()));
        }
        Ok(())
    }
}

/// Hermitian 2×2 density matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityMatrix {
    pub m: [[Complex64; 2]; 2],
}

impl DensityMatrix {
    pub fn from_entries(m: [[Complex64; 2]; 2]) -> Self {
        Self { m }
    }

    pub fn diagonal(p0: f64, p1: f64) -> Self {
        let z = Complex64::new(0.0, 0.0);
        Self {
            m: [[p0.into(), z], [z, p1.into()]],
        }
    }

    pub fn identity_half() -> Self {
        Self::diagonal(0.5, 0.5)
    }

    pub fn zero() -> Self {
        Self::diagonal(0.0, 0.0)
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn mul(&self, other: &DensityMatrix) -> [[Complex64; 2]; 2] {
        let a = &self.m;
        let b = &other.m;
        [
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ]
    }

    /// `tr ρ²`.
    pub fn purity(&self) -> f64 {
        let sq = self.mul(self);
        (sq[0][0] + sq[1][1]).re
    }

    pub fn bloch(&self) -> BlochState {
        BlochState {
            px: 2.0 * self.m[1][0].re,
            py: 2.0 * self.m[1][0].im,
            pz: (self.m[0][0] - self.m[1][1]).re,
        }
    }

    /// Entrywise `self + w·other`; used for ensemble sums.
    pub fn add_scaled(&mut self, other: &DensityMatrix, w: f64) {
        for i in 0..2 {
            for j in 0..2 {
                self.m[i][j] += other.m[i][j] * w;
            }
        }
    }

    pub fn hermiticity_residual(&self) -> f64 {
        let off = (self.m[1][0] - self.m[0][1].conj()).norm();
        off.max(self.m[0][0].im.abs()).max(self.m[1][1].im.abs())
    }

    pub fn validate(&self) -> Result<()> {
        let h = self.hermiticity_residual();
        if !(h <= MATRIX_TOLERANCE) {
            return Err(Error::InvalidDensityMatrix(format!(
                "not Hermitian (residual {h:e})"
            )));
        }
        let tr = self.trace();
        if !((tr.re - 1.0).abs() <= MATRIX_TOLERANCE && tr.im.abs() <= MATRIX_TOLERANCE) {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr} is not 1")));
        }
        let (_, low) = hermitian_eigenvalues(self);
        if low < -MATRIX_TOLERANCE {
            return Err(Error::InvalidDensityMatrix(format!(
                "negative eigenvalue {low:e}"
            )));
        }
        Ok(())
    }
}

/// Pure-state matrix for Bloch vector `s`, with the off-diagonals rotated by
/// the phase `phi` (`ρ₀₁ = P₋e^{iφ}/2`).
pub fn density_from_bloch(s: &BlochState, phi: f64) -> Result<DensityMatrix> {
    s.validate()?;
    let rot = Complex64::from_polar(1.0, phi);
    let p_plus = s.p_plus();
    Ok(DensityMatrix {
        m: [
            [(0.5 * (1.0 + s.pz)).into(), 0.5 * p_plus.conj() * rot],
            [0.5 * p_plus * rot.conj(), (0.5 * (1.0 - s.pz)).into()],
        ],
    })
}

/// Phase-averaged matrix: off-diagonals damped by `e^{−Γ}`.
pub fn apply_dephasing(s: &BlochState, gamma: f64) -> Result<DensityMatrix> {
    require(gamma >= 0.0, "dephasing exponent", "nonnegative", gamma)?;
    let mut rho = density_from_bloch(s, 0.0)?;
    dephase_in_place(&mut rho, gamma);
    Ok(rho)
}

/// Damp the off-diagonals of an existing matrix by `e^{−Γ}`.
pub fn dephase_in_place(rho: &mut DensityMatrix, gamma: f64) {
    let d = (-gamma).exp();
    rho.m[0][1] *= d;
    rho.m[1][0] *= d;
}

/// Eigenvalues of the dephased pure state,
/// `½(1 ± √(1 − (P_x² + P_y²)(1 − e^{−2Γ})))`, larger first.
///
/// Only valid for |P| = 1; mixed states go through [`hermitian_eigenvalues`].
pub fn dephased_eigenvalues(s: &BlochState, gamma: f64) -> Result<(f64, f64)> {
    require(gamma >= 0.0, "dephasing exponent", "nonnegative", gamma)?;
    if !s.is_pure() {
        return Err(Error::NotPure(s.norm()));
    }
    let lost = s.transverse_sq() * -(-2.0 * gamma).exp_m1();
    let root = (1.0 - lost).max(0.0).sqrt();
    Ok((0.5 * (1.0 + root), 0.5 * (1.0 - root)))
}

/// Eigenvalues of any Hermitian 2×2 matrix, larger first.
pub fn hermitian_eigenvalues(rho: &DensityMatrix) -> (f64, f64) {
    let a = rho.m[0][0].re;
    let d = rho.m[1][1].re;
    let b = rho.m[0][1].norm();
    let mean = 0.5 * (a + d);
    let half = 0.5 * (a - d);
    let r = half.hypot(b);
    (mean + r, mean - r)
}

/// `p± = ½(1 ± P_z)`, the populations left once coherence is gone.
pub fn limiting_populations(s: &BlochState) -> (f64, f64) {
    (0.5 * (1.0 + s.pz), 0.5 * (1.0 - s.pz))
}

/// `tr(ρ_a ρ_b)`.
pub fn fidelity(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    a.validate()?;
    b.validate()?;
    let prod = a.mul(b);
    let tr = prod[0][0] + prod[1][1];
    if tr.im.abs() > MATRIX_TOLERANCE {
        return Err(Error::InvalidDensityMatrix(format!(
            "overlap has imaginary part {:e}",
            tr.im
        )));
    }
    Ok(tr.re)
}
