//! Cyclic Jacobi eigensolver for real symmetric 3×3 matrices.

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};

/// Sweeps stop once the off-diagonal Frobenius norm drops to this level.
pub const OFF_DIAGONAL_TOL: f64 = 1e-14;
/// Inputs whose asymmetry exceeds this are rejected.
pub const SYMMETRY_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 64;

/// Eigenvalues and the orthogonal matrix whose columns are the eigenvectors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymmetricEigen3 {
    pub values: Vector3<f64>,
    pub vectors: Matrix3<f64>,
}

fn off_diagonal_norm(m: &Matrix3<f64>) -> f64 {
    (2.0 * (m[(0, 1)].powi(2) + m[(0, 2)].powi(2) + m[(1, 2)].powi(2))).sqrt()
}

pub fn asymmetry(m: &Matrix3<f64>) -> f64 {
    (m - m.transpose()).amax()
}

/// Diagonalizes `m` by plane rotations, cycling over (0,1), (0,2), (1,2).
///
/// Eigenvalues come back sorted descending, eigenvectors reordered to match.
pub fn jacobi_eigen(m: &Matrix3<f64>) -> Result<SymmetricEigen3> {
    let defect = asymmetry(m);
    if defect.is_nan() || defect > SYMMETRY_TOL {
        return Err(Error::NotSymmetric(defect));
    }
    let mut a = (m + m.transpose()) * 0.5;
    let mut v = Matrix3::<f64>::identity();

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= OFF_DIAGONAL_TOL {
            break;
        }
        for (p, q) in [(0, 1), (0, 2), (1, 2)] {
            let apq = a[(p, q)];
            if apq == 0.0 {
                continue;
            }
            // Rotation angle from the 2x2 subproblem, small-angle root for stability.
            let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;

            let mut rot = Matrix3::<f64>::identity();
            rot[(p, p)] = c;
            rot[(q, q)] = c;
            rot[(p, q)] = s;
            rot[(q, p)] = -s;
            a = rot.transpose() * a * rot;
            a[(p, q)] = 0.0;
            a[(q, p)] = 0.0;
            v *= rot;
        }
    }

    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]));
    let values = Vector3::from_fn(|k, _| a[(order[k], order[k])]);
    let vectors = Matrix3::from_fn(|r, k| v[(r, order[k])]);
    Ok(SymmetricEigen3 { values, vectors })
}
