//! Kraus-form qubit channels and their Bloch-sphere affine representation.

use nalgebra::{Matrix3, Matrix4, Vector3};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::{
    bloch_components, identity, paulis, trace_product, BlochVector, Mat2, QubitState,
};

/// Completeness is enforced at this residual when a channel is applied.
pub const COMPLETENESS_TOL: f64 = 1e-9;
/// Most negative Choi eigenvalue still accepted as positive.
pub const CHOI_PSD_TOL: f64 = -1e-10;
/// |B| below this counts as unital.
pub const UNITAL_TOL: f64 = 1e-10;

/// Ordered set of Kraus operators Mμ; the channel is ρ ↦ Σ Mμ ρ Mμ†.
///
/// Completeness is not enforced at construction so that broken operator
/// sets can still be inspected. Operations that need a channel check it.
#[derive(Clone, Debug, PartialEq)]
pub struct KrausChannel {
    operators: Vec<Mat2>,
}

impl KrausChannel {
    pub fn new(operators: Vec<Mat2>) -> Result<Self> {
        if operators.is_empty() {
            return Err(Error::EmptyChannel);
        }
        Ok(Self { operators })
    }

    pub fn identity() -> Self {
        Self {
            operators: vec![identity()],
        }
    }

    /// {½I, ½σx, ½σy, ½σz}: every input goes to ½I.
    pub fn completely_depolarizing() -> Self {
        let half = Complex64::new(0.5, 0.0);
        let [sx, sy, sz] = paulis();
        Self {
            operators: vec![identity() * half, sx * half, sy * half, sz * half],
        }
    }

    pub fn operators(&self) -> &[Mat2] {
        &self.operators
    }

    /// ‖Σ Mμ†Mμ − I‖_F.
    pub fn completeness_residual(&self) -> f64 {
        let sum: Mat2 = self.operators.iter().map(|m| m.adjoint() * m).sum();
        (sum - identity()).norm()
    }

    pub fn check_completeness(&self, tol: f64) -> bool {
        self.completeness_residual() <= tol
    }

    pub(crate) fn ensure_complete(&self) -> Result<()> {
        let residual = self.completeness_residual();
        if residual <= COMPLETENESS_TOL {
            Ok(())
        } else {
            Err(Error::IncompleteKraus { residual })
        }
    }

    /// Σ Mμ X Mμ† for an arbitrary operator X.
    pub fn apply_operator(&self, x: &Mat2) -> Mat2 {
        self.operators.iter().map(|m| m * x * m.adjoint()).sum()
    }

    pub fn apply(&self, rho: &QubitState) -> Result<QubitState> {
        self.ensure_complete()?;
        Ok(self.apply_unchecked(rho))
    }

    /// Callers have already checked completeness.
    pub(crate) fn apply_unchecked(&self, rho: &QubitState) -> QubitState {
        QubitState::from_matrix_unchecked(self.apply_operator(rho.matrix()))
    }

    /// (Φ ⊗ id) applied to the unnormalized |Ω⟩⟨Ω|, |Ω⟩ = |00⟩ + |11⟩.
    pub fn choi_matrix(&self) -> ChoiMatrix {
        let mut choi = Matrix4::<Complex64>::zeros();
        for i in 0..2 {
            for j in 0..2 {
                let mut unit = Mat2::zeros();
                unit[(i, j)] = Complex64::new(1.0, 0.0);
                let image = self.apply_operator(&unit);
                for a in 0..2 {
                    for b in 0..2 {
                        choi[(2 * a + i, 2 * b + j)] = image[(a, b)];
                    }
                }
            }
        }
        ChoiMatrix { elements: choi }
    }

    /// Choi matrix positive and completeness satisfied.
    pub fn is_cptp(&self) -> bool {
        self.check_completeness(COMPLETENESS_TOL)
            && self.choi_matrix().min_eigenvalue() >= CHOI_PSD_TOL
    }

    /// Aij = ½Tr[σi Φ(σj)], Bi = ½Tr[σi Φ(I)].
    pub fn affine_rep(&self) -> Result<AffineRep> {
        self.ensure_complete()?;
        Ok(self.affine_rep_unchecked())
    }

    pub(crate) fn affine_rep_unchecked(&self) -> AffineRep {
        let sigmas = paulis();
        let images = sigmas.map(|s| self.apply_operator(&s));
        let a = Matrix3::from_fn(|i, j| 0.5 * trace_product(&sigmas[i], &images[j]));
        let shift = bloch_components(&self.apply_operator(&identity())).to_vector() * 0.5;
        AffineRep::new(a, shift)
    }

    /// Whether Φ(I) = I, i.e. |B| ≤ [`UNITAL_TOL`].
    pub fn is_unital(&self) -> bool {
        self.affine_rep_unchecked().b.norm() <= UNITAL_TOL
    }

    /// The channel Φ2 ∘ Φ1 with Kraus set {M2,j · M1,i}.
    pub fn compose(second: &KrausChannel, first: &KrausChannel) -> Result<KrausChannel> {
        second.ensure_complete()?;
        first.ensure_complete()?;
        let operators = second
            .operators
            .iter()
            .flat_map(|m2| first.operators.iter().map(move |m1| m2 * m1))
            .collect();
        Ok(KrausChannel { operators })
    }
}

/// 4×4 Choi matrix of a qubit channel (trace 2 when trace preserving).
#[derive(Clone, Debug, PartialEq)]
pub struct ChoiMatrix {
    elements: Matrix4<Complex64>,
}

impl ChoiMatrix {
    pub fn matrix(&self) -> &Matrix4<Complex64> {
        &self.elements
    }

    pub fn trace(&self) -> f64 {
        self.elements.trace().re
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let hermitian = (self.elements + self.elements.adjoint()) * Complex64::new(0.5, 0.0);
        let eig = hermitian.symmetric_eigenvalues();
        let mut values = [eig[0], eig[1], eig[2], eig[3]];
        values.sort_by(f64::total_cmp);
        values
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }
}

/// ξ′ = Aξ + B.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffineRep {
    pub a: Matrix3<f64>,
    pub b: Vector3<f64>,
}

impl AffineRep {
    pub fn new(a: Matrix3<f64>, b: Vector3<f64>) -> Self {
        Self { a, b }
    }

    pub fn apply(&self, v: BlochVector) -> BlochVector {
        BlochVector::from_vector(&(self.a * v.to_vector() + self.b))
    }

    pub fn singular_values(&self) -> Vector3<f64> {
        self.a.singular_values()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{bloch_to_density, density_to_bloch, sigma_z};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn diag(a: f64, d: f64) -> Mat2 {
        Mat2::new(c(a), c(0.0), c(0.0), c(d))
    }

    fn phase_damping(factor: f64) -> KrausChannel {
        KrausChannel::new(vec![
            diag(1.0, factor),
            diag(0.0, (1.0 - factor * factor).sqrt()),
        ])
        .unwrap()
    }

    fn dephasing(lambda: f64) -> KrausChannel {
        KrausChannel::new(vec![
            identity() * c(((1.0 + lambda) / 2.0).sqrt()),
            sigma_z() * c(((1.0 - lambda) / 2.0).sqrt()),
        ])
        .unwrap()
    }

    fn amplitude_damping(decay: f64) -> KrausChannel {
        KrausChannel::new(vec![
            diag(1.0, (1.0 - decay).sqrt()),
            Mat2::new(c(0.0), c(decay.sqrt()), c(0.0), c(0.0)),
        ])
        .unwrap()
    }

    fn state(x: f64, y: f64, z: f64) -> QubitState {
        bloch_to_density(BlochVector::new(x, y, z)).unwrap()
    }

    #[test]
    fn empty_channel_is_rejected() {
        assert!(matches!(
            KrausChannel::new(vec![]),
            Err(Error::EmptyChannel)
        ));
    }

    #[test]
    fn identity_channel_leaves_states_alone() {
        let rho = state(0.3, -0.2, 0.5);
        let out = KrausChannel::identity().apply(&rho).unwrap();
        assert_eq!(out, rho);
    }

    #[test]
    fn full_phase_damping_erases_coherence() {
        let out = phase_damping(0.0).apply(&state(1.0, 0.0, 0.0)).unwrap();
        assert!((out.matrix() - QubitState::maximally_mixed().matrix()).norm() < 1e-15);
    }

    #[test]
    fn apply_rejects_incomplete_sets() {
        let half = KrausChannel::new(vec![identity() * c(0.5)]).unwrap();
        assert!(matches!(
            half.apply(&state(0.0, 0.0, 0.0)),
            Err(Error::IncompleteKraus { .. })
        ));
        assert!(half.affine_rep().is_err());
        assert!(KrausChannel::compose(&half, &KrausChannel::identity()).is_err());
    }

    #[test]
    fn completeness_examples() {
        assert!(KrausChannel::identity().check_completeness(1e-12));
        let half = KrausChannel::new(vec![identity() * c(0.5)]).unwrap();
        assert!(!half.check_completeness(1e-12));
        assert_abs_diff_eq!(
            half.completeness_residual(),
            0.75 * 2f64.sqrt(),
            epsilon = 1e-15
        );
    }

    #[test]
    fn choi_of_identity() {
        let choi = KrausChannel::identity().choi_matrix();
        for r in 0..4 {
            for col in 0..4 {
                let expected = if (r == 0 || r == 3) && (col == 0 || col == 3) {
                    1.0
                } else {
                    0.0
                };
                assert_eq!(choi.matrix()[(r, col)], c(expected));
            }
        }
        assert_abs_diff_eq!(choi.trace(), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn choi_of_depolarizing_is_half_identity() {
        let choi = KrausChannel::completely_depolarizing().choi_matrix();
        let expected = Matrix4::<Complex64>::identity() * c(0.5);
        assert!((choi.matrix() - expected).norm() < 1e-15);
    }

    #[test]
    fn choi_spectrum_of_phase_damping() {
        // S = 0.5: the only nonzero block is [[1, √0.5], [√0.5, 1]]
        let pd = phase_damping(0.5f64.sqrt());
        let eig = pd.choi_matrix().eigenvalues();
        let r = 0.5f64.sqrt();
        let expected = [0.0, 0.0, 1.0 - r, 1.0 + r];
        for (got, want) in eig.iter().zip(expected) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn cptp_examples() {
        assert!(KrausChannel::identity().is_cptp());
        assert!(KrausChannel::completely_depolarizing().is_cptp());
        assert!(!KrausChannel::new(vec![identity() * c(1.2f64.sqrt())])
            .unwrap()
            .is_cptp());
        assert!(!KrausChannel::new(vec![diag(1.0, 1.1)]).unwrap().is_cptp());
        // a positive but non-completely-positive map is not expressible in Kraus
        // form, so the only failure mode left is completeness
        assert!(amplitude_damping(0.3).is_cptp());
    }

    #[test]
    fn affine_rep_examples() {
        let lambda = 0.37;
        let rep = dephasing(lambda).affine_rep().unwrap();
        let expected = Matrix3::from_diagonal(&Vector3::new(lambda, lambda, 1.0));
        assert!((rep.a - expected).norm() < 1e-15);
        assert!(rep.b.norm() < 1e-15);

        let rep = KrausChannel::completely_depolarizing()
            .affine_rep()
            .unwrap();
        assert!(rep.a.norm() < 1e-15);
        assert!(rep.b.norm() < 1e-15);

        let decay = 0.2;
        let rep = amplitude_damping(decay).affine_rep().unwrap();
        let s = (1.0 - decay).sqrt();
        let expected = Matrix3::from_diagonal(&Vector3::new(s, s, 1.0 - decay));
        assert!((rep.a - expected).norm() < 1e-15);
        assert!((rep.b - Vector3::new(0.0, 0.0, decay)).norm() < 1e-15);
    }

    #[test]
    fn unitality() {
        assert!(KrausChannel::identity().is_unital());
        assert!(dephasing(0.1).is_unital());
        assert!(phase_damping(0.4).is_unital());
        assert!(!amplitude_damping(0.1).is_unital());
    }

    #[test]
    fn composing_phase_dampings_multiplies_factors() {
        let (c1, c2) = (0.8, 0.35);
        let both = KrausChannel::compose(&phase_damping(c2), &phase_damping(c1)).unwrap();
        assert_eq!(both.operators().len(), 4);
        let out = both.apply(&state(1.0, 0.0, 0.0)).unwrap();
        assert_abs_diff_eq!(out.coherence_element().re, 0.5 * c1 * c2, epsilon = 1e-15);
        let rep = both.affine_rep().unwrap();
        assert_abs_diff_eq!(rep.a[(0, 0)], c1 * c2, epsilon = 1e-15);
    }

    #[test]
    fn depolarizing_after_anything_is_depolarizing() {
        let both = KrausChannel::compose(
            &KrausChannel::completely_depolarizing(),
            &amplitude_damping(0.4),
        )
        .unwrap();
        let out = both.apply(&state(0.1, 0.5, -0.6)).unwrap();
        assert!((out.matrix() - QubitState::maximally_mixed().matrix()).norm() < 1e-15);
    }

    fn ball_vector() -> impl Strategy<Value = BlochVector> {
        (0.0f64..=1.0, -1.0f64..=1.0, 0.0f64..(2.0 * PI)).prop_map(|(r, z, phi)| {
            let rho = (1.0 - z * z).max(0.0).sqrt();
            BlochVector::new(r * rho * phi.cos(), r * rho * phi.sin(), r * z)
        })
    }

    fn some_channel() -> impl Strategy<Value = KrausChannel> {
        prop_oneof![
            (-1.0f64..=1.0).prop_map(dephasing),
            (0.0f64..=1.0).prop_map(phase_damping),
            (0.0f64..=1.0).prop_map(amplitude_damping),
            Just(KrausChannel::completely_depolarizing()),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn outputs_are_states(ch in some_channel(), v in ball_vector()) {
            let out = ch.apply(&state(v.x, v.y, v.z)).unwrap();
            let m = out.matrix();
            prop_assert!((m - m.adjoint()).norm() <= 1e-12);
            prop_assert!((m.trace().re - 1.0).abs() <= 1e-12);
            prop_assert!(out.eigenvalues()[0] >= -1e-10);
        }

        #[test]
        fn linearity(ch in some_channel(), v1 in ball_vector(), v2 in ball_vector(),
                     a in -2.0f64..2.0, b in -2.0f64..2.0) {
            let r1 = state(v1.x, v1.y, v1.z);
            let r2 = state(v2.x, v2.y, v2.z);
            let mix = r1.matrix() * c(a) + r2.matrix() * c(b);
            let lhs = ch.apply_operator(&mix);
            let rhs = ch.apply_operator(r1.matrix()) * c(a) + ch.apply_operator(r2.matrix()) * c(b);
            prop_assert!((lhs - rhs).norm() <= 1e-12);
        }

        #[test]
        fn affine_rep_tracks_apply(ch in some_channel(), v in ball_vector()) {
            let rep = ch.affine_rep().unwrap();
            let direct = density_to_bloch(&ch.apply(&state(v.x, v.y, v.z)).unwrap());
            let mapped = rep.apply(v);
            prop_assert!((direct.x - mapped.x).abs() <= 1e-10);
            prop_assert!((direct.y - mapped.y).abs() <= 1e-10);
            prop_assert!((direct.z - mapped.z).abs() <= 1e-10);
            prop_assert!(rep.singular_values().max() <= 1.0 + 1e-9);
            prop_assert!(rep.b.norm() <= 1.0 + 1e-9);
        }

        #[test]
        fn compose_matches_sequential_application(
            second in some_channel(), first in some_channel(), v in ball_vector()
        ) {
            let rho = state(v.x, v.y, v.z);
            let both = KrausChannel::compose(&second, &first).unwrap();
            let direct = both.apply(&rho).unwrap();
            let sequential = second.apply(&first.apply(&rho).unwrap()).unwrap();
            prop_assert!((direct.matrix() - sequential.matrix()).norm() <= 1e-12);
        }

        #[test]
        fn identity_composition_is_neutral(ch in some_channel(), v in ball_vector()) {
            let rho = state(v.x, v.y, v.z);
            let both = KrausChannel::compose(&KrausChannel::identity(), &ch).unwrap();
            prop_assert!((both.apply(&rho).unwrap().matrix() - ch.apply(&rho).unwrap().matrix()).norm() <= 1e-12);
        }
    }
}
