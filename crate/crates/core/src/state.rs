//! Qubit density matrices, Bloch vectors and state-level figures of merit.

use std::f64::consts::PI;

use nalgebra::{Matrix2, Vector3};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// 2×2 complex matrix, the carrier for states and Kraus operators alike.
pub type Mat2 = Matrix2<Complex64>;

/// Tolerance used for the Hermitian, trace and PSD invariants of a state.
pub const STATE_TOL: f64 = 1e-12;
/// User-supplied Bloch vectors may overshoot the unit ball by this much.
pub const BLOCH_TOL: f64 = 1e-9;
/// Determinants at or below this are rounding noise on a pure state.
pub const DET_FLOOR: f64 = 1e-14;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn identity() -> Mat2 {
    Mat2::identity()
}

pub fn sigma_x() -> Mat2 {
    Mat2::new(ZERO, ONE, ONE, ZERO)
}

pub fn sigma_y() -> Mat2 {
    Mat2::new(ZERO, -I, I, ZERO)
}

pub fn sigma_z() -> Mat2 {
    Mat2::new(ONE, ZERO, ZERO, -ONE)
}

/// The Pauli matrices in x, y, z order.
pub fn paulis() -> [Mat2; 3] {
    [sigma_x(), sigma_y(), sigma_z()]
}

/// Real part of Tr[a b].
pub(crate) fn trace_product(a: &Mat2, b: &Mat2) -> f64 {
    (a * b).trace().re
}

/// Eigenvalues of a 2×2 Hermitian matrix, ascending.
pub(crate) fn hermitian_eigenvalues(m: &Mat2) -> [f64; 2] {
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    let half_gap = ((a - d) * 0.5).hypot(m[(0, 1)].norm());
    let mid = 0.5 * (a + d);
    [mid - half_gap, mid + half_gap]
}

fn hermiticity_defect(m: &Mat2) -> f64 {
    (m - m.adjoint()).norm()
}

/// Real 3-vector ξ with ρ = ½(I + ξ·σ).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn norm_squared(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn dot(&self, other: &BlochVector) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn to_vector(self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.z)
    }

    pub fn from_vector(v: &Vector3<f64>) -> Self {
        Self::new(v[0], v[1], v[2])
    }
}

/// Polar and azimuthal angles of a pure state on the Bloch sphere.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PureAngles {
    theta: f64,
    phi: f64,
}

impl PureAngles {
    /// `theta` must lie in [0, π] and `phi` in [0, 2π).
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::OutOfRange {
                name: "theta",
                value: theta,
                range: "[0, pi]",
            });
        }
        if !(0.0..2.0 * PI).contains(&phi) {
            return Err(Error::OutOfRange {
                name: "phi",
                value: phi,
                range: "[0, 2pi)",
            });
        }
        Ok(Self { theta, phi })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// A qubit density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QubitState {
    elements: Mat2,
}

impl QubitState {
    /// Validates the density-matrix invariants at [`STATE_TOL`].
    pub fn new(elements: Mat2) -> Result<Self> {
        let herm = hermiticity_defect(&elements);
        if herm > STATE_TOL {
            return Err(Error::InvalidState(format!(
                "not Hermitian (defect {herm:e})"
            )));
        }
        let tr = elements.trace();
        if (tr - ONE).norm() > STATE_TOL {
            return Err(Error::InvalidState(format!("trace is {tr}, not 1")));
        }
        let [low, _] = hermitian_eigenvalues(&elements);
        if low < -STATE_TOL {
            return Err(Error::InvalidState(format!("negative eigenvalue {low:e}")));
        }
        Ok(Self { elements })
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_matrix_unchecked(elements: Mat2) -> Self {
        Self { elements }
    }

    pub fn maximally_mixed() -> Self {
        Self::from_matrix_unchecked(identity() * Complex64::new(0.5, 0.0))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.elements
    }

    /// Off-diagonal element ρ01.
    pub fn coherence_element(&self) -> Complex64 {
        self.elements[(0, 1)]
    }

    pub fn determinant(&self) -> f64 {
        self.elements.determinant().re
    }

    /// Tr[ρ²].
    pub fn purity(&self) -> f64 {
        trace_product(&self.elements, &self.elements)
    }

    /// Both eigenvalues, ascending.
    pub fn eigenvalues(&self) -> [f64; 2] {
        hermitian_eigenvalues(&self.elements)
    }
}

/// ½(I + xσx + yσy + zσz).
pub fn bloch_to_density(v: BlochVector) -> Result<QubitState> {
    let norm_sq = v.norm_squared();
    if norm_sq.is_nan() || norm_sq > 1.0 + BLOCH_TOL {
        return Err(Error::InvalidBloch { norm_sq });
    }
    let half = 0.5;
    let m = Mat2::new(
        Complex64::new(half * (1.0 + v.z), 0.0),
        Complex64::new(half * v.x, -half * v.y),
        Complex64::new(half * v.x, half * v.y),
        Complex64::new(half * (1.0 - v.z), 0.0),
    );
    Ok(QubitState::from_matrix_unchecked(m))
}

/// Components Tr[σi ρ].
pub fn density_to_bloch(rho: &QubitState) -> BlochVector {
    bloch_components(rho.matrix())
}

pub(crate) fn bloch_components(m: &Mat2) -> BlochVector {
    let [sx, sy, sz] = paulis();
    BlochVector::new(
        trace_product(&sx, m),
        trace_product(&sy, m),
        trace_product(&sz, m),
    )
}

/// [[cos²(θ/2), ½e^{−iφ} sin θ], [½e^{iφ} sin θ, sin²(θ/2)]].
pub fn pure_state(angles: PureAngles) -> QubitState {
    let (theta, phi) = (angles.theta(), angles.phi());
    let c = (0.5 * theta).cos();
    let s = (0.5 * theta).sin();
    let off = 0.5 * theta.sin();
    let m = Mat2::new(
        Complex64::new(c * c, 0.0),
        Complex64::from_polar(off, -phi),
        Complex64::from_polar(off, phi),
        Complex64::new(s * s, 0.0),
    );
    QubitState::from_matrix_unchecked(m)
}

fn clamped_det(rho: &QubitState) -> Result<f64> {
    let det = rho.determinant();
    if det < -STATE_TOL {
        Err(Error::NegativeDet(det))
    } else if det <= DET_FLOOR {
        // √det would turn 1e-17 of rounding into a 1e-8 fidelity error
        Ok(0.0)
    } else {
        Ok(det)
    }
}

/// Qubit fidelity Tr[ρρ′] + 2√(det ρ · det ρ′).
pub fn fidelity(rho: &QubitState, sigma: &QubitState) -> Result<f64> {
    let det_product = clamped_det(rho)? * clamped_det(sigma)?;
    Ok(trace_product(rho.matrix(), sigma.matrix()) + 2.0 * det_product.sqrt())
}

/// l1 coherence in the computational basis, 2|ρ01|.
pub fn l1_coherence(rho: &QubitState) -> f64 {
    2.0 * rho.coherence_element().norm()
}

/// The squared l1 coherence used by the quantumness witness.
pub fn l1_coherence_squared(rho: &QubitState) -> f64 {
    let c = l1_coherence(rho);
    c * c
}
