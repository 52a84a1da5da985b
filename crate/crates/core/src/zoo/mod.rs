//! Parametrized noise channels: random telegraph noise, non-Markovian
//! dephasing, phase damping, (generalized) amplitude damping and Unruh.

mod reference;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::channel::KrausChannel;
use crate::error::{Error, Result};
use crate::state::{identity, sigma_z, Mat2};

pub use reference::{reference_avg_fidelity, reference_quantumness};

/// |(2b/γ)² − 1| at or below this uses the critically damped kernel.
pub const RTN_CRITICAL_TOL: f64 = 1e-9;

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn check(name: &'static str, value: f64, ok: bool, range: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfRange { name, value, range })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Rtn,
    Nmd,
    Pd,
    Gad,
    Ad,
    Unruh,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Rtn,
        Family::Nmd,
        Family::Pd,
        Family::Gad,
        Family::Ad,
        Family::Unruh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Rtn => "rtn",
            Family::Nmd => "nmd",
            Family::Pd => "pd",
            Family::Gad => "gad",
            Family::Ad => "ad",
            Family::Unruh => "unruh",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                Error::config(
                    "family",
                    format!("unknown family `{s}` (rtn|nmd|pd|gad|ad|unruh)"),
                )
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    Markovian,
    NonMarkovian,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Markovian => "Markovian",
            Regime::NonMarkovian => "NonMarkovian",
        })
    }
}

// ---------------------------------------------------------------------------
// Random telegraph noise

/// Coupling `b`, fluctuation rate `gamma` and time `t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RtnParams {
    pub b: f64,
    pub gamma: f64,
    pub t: f64,
}

impl RtnParams {
    pub fn new(b: f64, gamma: f64, t: f64) -> Result<Self> {
        check("b", b, b >= 0.0 && b.is_finite(), "[0, inf)")?;
        check("gamma", gamma, gamma > 0.0 && gamma.is_finite(), "(0, inf)")?;
        check("t", t, t >= 0.0 && t.is_finite(), "[0, inf)")?;
        Ok(Self { b, gamma, t })
    }

    /// Correlation time 1/(2γ).
    pub fn correlation_time(&self) -> f64 {
        0.5 / self.gamma
    }
}

/// The RTN memory kernel Λ(t).
///
/// With ω² = (2b/γ)² − 1 the kernel oscillates for ω² > 0 and decays
/// monotonically for ω² < 0, where it is evaluated as a sum of decaying
/// exponentials so that large γt cannot overflow cosh/sinh.
pub fn rtn_kernel(p: &RtnParams) -> f64 {
    let ratio = 2.0 * p.b / p.gamma;
    let w2 = ratio * ratio - 1.0;
    let gt = p.gamma * p.t;
    if w2.abs() <= RTN_CRITICAL_TOL {
        (-gt).exp() * (1.0 + gt)
    } else if w2 > 0.0 {
        let w = w2.sqrt();
        (-gt).exp() * ((w * gt).cos() + (w * gt).sin() / w)
    } else {
        let w = (-w2).sqrt();
        // e^{-gt}cosh(w gt) + e^{-gt}sinh(w gt)/w
        let slow = (-(1.0 - w) * gt).exp();
        let fast = (-(1.0 + w) * gt).exp();
        0.5 * (slow + fast) + slow * (-(-2.0 * w * gt).exp_m1()) / (2.0 * w)
    }
}

/// Oscillatory kernels, (2b/γ)² > 1, are non-Markovian; the boundary is Markovian.
pub fn rtn_regime(b: f64, gamma: f64) -> Regime {
    let ratio = 2.0 * b / gamma;
    if ratio * ratio > 1.0 {
        Regime::NonMarkovian
    } else {
        Regime::Markovian
    }
}

/// Kraus pair √((1+Λ)/2) I and √((1−Λ)/2) σz.
pub fn rtn_channel(p: &RtnParams) -> Result<KrausChannel> {
    let lambda = rtn_kernel(p);
    if lambda.is_nan() || lambda.abs() > 1.0 + 1e-12 {
        return Err(Error::KernelOutOfRange(lambda));
    }
    let lambda = lambda.clamp(-1.0, 1.0);
    dephasing_channel(lambda)
}

/// Pauli-z dephasing with off-diagonal factor `factor`.
fn dephasing_channel(factor: f64) -> Result<KrausChannel> {
    KrausChannel::new(vec![
        identity() * real(((1.0 + factor) / 2.0).sqrt()),
        sigma_z() * real(((1.0 - factor) / 2.0).sqrt()),
    ])
}

// ---------------------------------------------------------------------------
// Non-Markovian dephasing

/// Non-Markovianity `alpha` ∈ [0, 1] and time-like `p` ∈ [0, ½].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NmdParams {
    pub alpha: f64,
    pub p: f64,
}

impl NmdParams {
    pub fn new(alpha: f64, p: f64) -> Result<Self> {
        check("alpha", alpha, (0.0..=1.0).contains(&alpha), "[0, 1]")?;
        check("p", p, (0.0..=0.5).contains(&p), "[0, 1/2]")?;
        Ok(Self { alpha, p })
    }

    /// Uses p = ½(1 − e^{−κt}).
    pub fn from_time(alpha: f64, kappa: f64, t: f64) -> Result<Self> {
        check(
            "kappa",
            kappa,
            kappa >= 0.0 && kappa.is_finite(),
            "[0, inf)",
        )?;
        check("t", t, t >= 0.0, "[0, inf)")?;
        Self::new(alpha, p_of_t(kappa, t))
    }

    pub fn omega(&self) -> f64 {
        nmd_omega(self.alpha, self.p)
    }
}

/// Ω = 1 − 2p − 2αp(1 − p).
pub fn nmd_omega(alpha: f64, p: f64) -> f64 {
    1.0 - 2.0 * p - 2.0 * alpha * p * (1.0 - p)
}

/// p(t) = ½(1 − e^{−κt}).
pub fn p_of_t(kappa: f64, t: f64) -> f64 {
    -0.5 * (-kappa * t).exp_m1()
}

/// Kraus pair √((1−αp)(1−p)) I and √(p + αp(1−p)) σz.
pub fn nmd_channel(params: &NmdParams) -> Result<KrausChannel> {
    let NmdParams { alpha, p } = *params;
    KrausChannel::new(vec![
        identity() * real(((1.0 - alpha * p) * (1.0 - p)).sqrt()),
        sigma_z() * real((p + alpha * p * (1.0 - p)).sqrt()),
    ])
}

// ---------------------------------------------------------------------------
// Phase damping

/// Dimensionless phase χt ∈ [0, π/2].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PdParams {
    pub chi_t: f64,
}

impl PdParams {
    pub fn new(chi_t: f64) -> Result<Self> {
        check(
            "chi_t",
            chi_t,
            (0.0..=FRAC_PI_2).contains(&chi_t),
            "[0, pi/2]",
        )?;
        Ok(Self { chi_t })
    }

    /// S = 1 − cos²(χt).
    pub fn damping(&self) -> f64 {
        1.0 - self.chi_t.cos().powi(2)
    }
}

/// Kraus pair diag(1, √(1−S)) and diag(0, √S).
pub fn pd_channel(params: &PdParams) -> Result<KrausChannel> {
    // On [0, π/2], √(1−S) = cos χt and √S = sin χt exactly.
    let (sin, cos) = params.chi_t.sin_cos();
    KrausChannel::new(vec![
        Mat2::new(real(1.0), real(0.0), real(0.0), real(cos)),
        Mat2::new(real(0.0), real(0.0), real(0.0), real(sin)),
    ])
}

// ---------------------------------------------------------------------------
// Generalized amplitude damping

/// Bath excitation number `n`, emission rate `gamma`, time `t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GadParams {
    pub n: f64,
    pub gamma: f64,
    pub t: f64,
}

impl GadParams {
    pub fn new(n: f64, gamma: f64, t: f64) -> Result<Self> {
        check("n", n, n >= 0.0 && n.is_finite(), "[0, inf)")?;
        check("gamma", gamma, gamma > 0.0 && gamma.is_finite(), "(0, inf)")?;
        check("t", t, t >= 0.0 && t.is_finite(), "[0, inf)")?;
        Ok(Self { n, gamma, t })
    }

    /// Zero-temperature amplitude damping.
    pub fn amplitude_damping(gamma: f64, t: f64) -> Result<Self> {
        Self::new(0.0, gamma, t)
    }

    /// Θ = (n+1)/(2n+1).
    pub fn theta(&self) -> f64 {
        (self.n + 1.0) / (2.0 * self.n + 1.0)
    }

    fn rate_time(&self) -> f64 {
        0.5 * self.gamma * self.t * (2.0 * self.n + 1.0)
    }

    /// s = exp[−γt(2n+1)/2].
    pub fn survival(&self) -> f64 {
        (-self.rate_time()).exp()
    }

    /// 1 − s, the decay probability entering the off-diagonal Kraus operators.
    pub fn decay(&self) -> f64 {
        -(-self.rate_time()).exp_m1()
    }

    /// Survival s* = 5/(4n² + 4n + 6) below which Q = s.
    pub fn crossover_survival(&self) -> f64 {
        let n = self.n;
        5.0 / (4.0 * n * n + 4.0 * n + 6.0)
    }

    /// Time at which s reaches [`Self::crossover_survival`].
    pub fn crossover_time(&self) -> f64 {
        -2.0 / (self.gamma * (2.0 * self.n + 1.0)) * self.crossover_survival().ln()
    }
}

/// The four Kraus operators of generalized amplitude damping, with p = 1 − s.
pub fn gad_channel(params: &GadParams) -> Result<KrausChannel> {
    let theta = params.theta();
    let s = params.survival();
    let p = params.decay();
    let z = real(0.0);
    KrausChannel::new(vec![
        Mat2::new(real(theta.sqrt()), z, z, real((s * theta).sqrt())),
        Mat2::new(z, real((p * theta).sqrt()), z, z),
        Mat2::new(
            real((s * (1.0 - theta)).sqrt()),
            z,
            z,
            real((1.0 - theta).sqrt()),
        ),
        Mat2::new(z, z, real((p * (1.0 - theta)).sqrt()), z),
    ])
}

// ---------------------------------------------------------------------------
// Unruh

/// Unruh angle r ∈ [0, π/4).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnruhParams {
    pub r: f64,
}

impl UnruhParams {
    pub fn new(r: f64) -> Result<Self> {
        check("r", r, (0.0..FRAC_PI_4).contains(&r), "[0, pi/4)")?;
        Ok(Self { r })
    }

    /// cos r = [1 + exp(−2πω/a)]^{−1/2} in units ħ = c = 1.
    pub fn from_acceleration(a: f64, omega: f64) -> Result<Self> {
        check("a", a, a >= 0.0 && a.is_finite(), "[0, inf)")?;
        check("omega", omega, omega > 0.0 && omega.is_finite(), "(0, inf)")?;
        let cos_r = (1.0 + (-2.0 * PI * omega / a).exp()).powf(-0.5);
        Self::new(cos_r.clamp(-1.0, 1.0).acos())
    }

    /// Unruh temperature a/(2π) in natural units.
    pub fn temperature(acceleration: f64) -> f64 {
        acceleration / (2.0 * PI)
    }
}

/// Kraus pair [[cos r, 0], [0, 1]] and [[0, 0], [sin r, 0]].
pub fn unruh_channel(params: &UnruhParams) -> Result<KrausChannel> {
    let (sin, cos) = params.r.sin_cos();
    let z = real(0.0);
    KrausChannel::new(vec![
        Mat2::new(real(cos), z, z, real(1.0)),
        Mat2::new(z, z, real(sin), z),
    ])
}

// ---------------------------------------------------------------------------

/// One family member at a fixed parameter point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ChannelPoint {
    Rtn(RtnParams),
    Nmd(NmdParams),
    Pd(PdParams),
    Gad(GadParams),
    /// Amplitude damping; `n` is always zero.
    Ad(GadParams),
    Unruh(UnruhParams),
}

impl ChannelPoint {
    pub fn family(&self) -> Family {
        match self {
            ChannelPoint::Rtn(_) => Family::Rtn,
            ChannelPoint::Nmd(_) => Family::Nmd,
            ChannelPoint::Pd(_) => Family::Pd,
            ChannelPoint::Gad(_) => Family::Gad,
            ChannelPoint::Ad(_) => Family::Ad,
            ChannelPoint::Unruh(_) => Family::Unruh,
        }
    }

    pub fn channel(&self) -> Result<KrausChannel> {
        match self {
            ChannelPoint::Rtn(p) => rtn_channel(p),
            ChannelPoint::Nmd(p) => nmd_channel(p),
            ChannelPoint::Pd(p) => pd_channel(p),
            ChannelPoint::Gad(p) | ChannelPoint::Ad(p) => gad_channel(p),
            ChannelPoint::Unruh(p) => unruh_channel(p),
        }
    }

    /// Only RTN carries a regime label.
    pub fn regime(&self) -> Option<Regime> {
        match self {
            ChannelPoint::Rtn(p) => Some(rtn_regime(p.b, p.gamma)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{average_fidelity_analytic, l_spectrum, quantumness};
    use approx::assert_abs_diff_eq;
    use nalgebra::{Matrix3, Vector3};

    /// Kernel straight from the oscillatory formula with complex arithmetic,
    /// valid in every regime away from the critical point.
    fn kernel_oracle(b: f64, gamma: f64, t: f64) -> f64 {
        let w = Complex64::new((2.0 * b / gamma).powi(2) - 1.0, 0.0).sqrt();
        let x = w * gamma * t;
        ((-gamma * t).exp() * (x.cos() + x.sin() / w)).re
    }

    #[test]
    fn kernel_at_origin_is_one() {
        for (b, g) in [(0.05, 0.001), (0.07, 1.0), (0.5, 1.0), (3.0, 0.2)] {
            assert_abs_diff_eq!(
                rtn_kernel(&RtnParams::new(b, g, 0.0).unwrap()),
                1.0,
                epsilon = 1e-15
            );
        }
    }

    #[test]
    fn kernel_reference_values() {
        let osc = rtn_kernel(&RtnParams::new(0.05, 0.001, 10.0).unwrap());
        assert_abs_diff_eq!(osc, kernel_oracle(0.05, 0.001, 10.0), epsilon = 1e-14);
        // 40-digit mpmath values
        assert_abs_diff_eq!(osc, 0.543_298_994_555_096_9, epsilon = 1e-12);
        let hyp = rtn_kernel(&RtnParams::new(0.25, 1.0, 1.0).unwrap());
        assert_abs_diff_eq!(hyp, kernel_oracle(0.25, 1.0, 1.0), epsilon = 1e-14);
        assert_abs_diff_eq!(hyp, 0.930_294_794_098_040_7, epsilon = 1e-12);
    }

    #[test]
    fn kernel_regimes_match_oracle() {
        for &(b, g) in &[
            (0.05, 0.001),
            (0.07, 1.0),
            (0.3, 1.0),
            (2.0, 1.0),
            (0.2, 0.5),
        ] {
            for k in 0..50 {
                let t = k as f64 * 7.3;
                let ours = rtn_kernel(&RtnParams::new(b, g, t).unwrap());
                assert_abs_diff_eq!(ours, kernel_oracle(b, g, t), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn critical_kernel_is_continuous() {
        let g = 1.0;
        for &t in &[0.5, 2.0, 10.0] {
            let crit = rtn_kernel(&RtnParams::new(0.5, g, t).unwrap());
            assert_abs_diff_eq!(crit, (-t).exp() * (1.0 + t), epsilon = 1e-15);
            let above = rtn_kernel(&RtnParams::new(0.5 + 1e-8, g, t).unwrap());
            let below = rtn_kernel(&RtnParams::new(0.5 - 1e-8, g, t).unwrap());
            assert_abs_diff_eq!(above, crit, epsilon = 1e-7);
            assert_abs_diff_eq!(below, crit, epsilon = 1e-7);
        }
    }

    #[test]
    fn kernel_survives_long_times() {
        let lambda = rtn_kernel(&RtnParams::new(0.07, 1.0, 1e5).unwrap());
        assert!(lambda.is_finite() && lambda >= 0.0);
    }

    #[test]
    fn kernel_bounded_on_dense_grid() {
        for &(b, g) in &[(0.05, 0.001), (0.07, 1.0), (0.5, 1.0), (10.0, 1.0)] {
            for k in 0..5000 {
                let t = k as f64 * 1.7;
                let lambda = rtn_kernel(&RtnParams::new(b, g, t).unwrap());
                assert!(lambda.abs() <= 1.0, "b={b} g={g} t={t} -> {lambda}");
            }
        }
    }

    #[test]
    fn regime_examples() {
        assert_eq!(rtn_regime(0.05, 0.001), Regime::NonMarkovian);
        assert_eq!(rtn_regime(0.07, 1.0), Regime::Markovian);
        assert_eq!(rtn_regime(0.5, 1.0), Regime::Markovian);
    }

    #[test]
    fn rtn_channel_examples() {
        let ch = rtn_channel(&RtnParams::new(0.05, 0.001, 0.0).unwrap()).unwrap();
        assert!(ch.operators()[1].norm() < 1e-15);
        let p = RtnParams::new(0.05, 0.001, 10.0).unwrap();
        let q = quantumness(&rtn_channel(&p).unwrap()).unwrap();
        assert_abs_diff_eq!(q, rtn_kernel(&p).powi(2), epsilon = 1e-14);
        assert_abs_diff_eq!(q, 0.2951, epsilon = 1e-4);
        assert_abs_diff_eq!(
            quantumness(&dephasing_channel(0.0).unwrap()).unwrap(),
            0.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn invalid_params() {
        assert!(RtnParams::new(-1.0, 1.0, 0.0).is_err());
        assert!(RtnParams::new(1.0, 0.0, 0.0).is_err());
        assert!(RtnParams::new(1.0, 1.0, -1.0).is_err());
        assert!(NmdParams::new(1.1, 0.2).is_err());
        assert!(NmdParams::new(0.5, 0.51).is_err());
        assert!(PdParams::new(FRAC_PI_2 + 1e-9).is_err());
        assert!(PdParams::new(-1e-9).is_err());
        assert!(GadParams::new(-0.5, 1.0, 0.0).is_err());
        assert!(UnruhParams::new(FRAC_PI_4).is_err());
        assert!(UnruhParams::from_acceleration(1.0, 0.0).is_err());
    }

    #[test]
    fn nmd_examples() {
        let id = nmd_channel(&NmdParams::new(0.7, 0.0).unwrap()).unwrap();
        assert_abs_diff_eq!(quantumness(&id).unwrap(), 1.0, epsilon = 1e-15);
        let end = nmd_channel(&NmdParams::new(1.0, 0.5).unwrap()).unwrap();
        assert_abs_diff_eq!(quantumness(&end).unwrap(), 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(
            average_fidelity_analytic(&end).unwrap(),
            0.5,
            epsilon = 1e-15
        );
        let markov = nmd_channel(&NmdParams::new(0.0, 0.25).unwrap()).unwrap();
        assert_abs_diff_eq!(quantumness(&markov).unwrap(), 0.25, epsilon = 1e-15);

        let p = NmdParams::new(0.6, 0.3).unwrap();
        let rep = nmd_channel(&p).unwrap().affine_rep().unwrap();
        let w = p.omega();
        assert!((rep.a - Matrix3::from_diagonal(&Vector3::new(w, w, 1.0))).amax() < 1e-15);
        assert!(rep.b.norm() < 1e-15);
        assert_abs_diff_eq!(p_of_t(2.0, 0.0), 0.0);
        assert_abs_diff_eq!(p_of_t(1.0, 50.0), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn pd_examples() {
        let id = pd_channel(&PdParams::new(0.0).unwrap()).unwrap();
        assert_abs_diff_eq!(quantumness(&id).unwrap(), 1.0, epsilon = 1e-15);
        let full = pd_channel(&PdParams::new(FRAC_PI_2).unwrap()).unwrap();
        assert_abs_diff_eq!(quantumness(&full).unwrap(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            average_fidelity_analytic(&full).unwrap(),
            2.0 / 3.0,
            epsilon = 1e-15
        );
        let third = pd_channel(&PdParams::new(PI / 3.0).unwrap()).unwrap();
        assert_abs_diff_eq!(quantumness(&third).unwrap(), 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(
            average_fidelity_analytic(&third).unwrap(),
            2.5 / 3.0,
            epsilon = 1e-15
        );
        // operators agree with the damping-parameter form
        let p = PdParams::new(0.9).unwrap();
        let ops = pd_channel(&p).unwrap();
        assert_abs_diff_eq!(
            ops.operators()[0][(1, 1)].re,
            (1.0 - p.damping()).sqrt(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            ops.operators()[1][(1, 1)].re,
            p.damping().sqrt(),
            epsilon = 1e-15
        );
    }

    #[test]
    fn gad_completeness_on_grid() {
        for i in 0..10 {
            for j in 0..10 {
                let n = i as f64 * 5.5;
                let t = j as f64 * 0.3;
                let ch = gad_channel(&GadParams::new(n, 1.0 + 0.1 * i as f64, t).unwrap()).unwrap();
                assert!(ch.check_completeness(1e-12), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn gad_examples() {
        let id = gad_channel(&GadParams::new(3.0, 1.0, 0.0).unwrap()).unwrap();
        assert_abs_diff_eq!(quantumness(&id).unwrap(), 1.0, epsilon = 1e-15);

        // n = 0 with survival 5/6, the branch point
        let t = -2.0 * (5.0f64 / 6.0).ln();
        let ad = gad_channel(&GadParams::amplitude_damping(1.0, t).unwrap()).unwrap();
        assert_abs_diff_eq!(quantumness(&ad).unwrap(), 5.0 / 6.0, epsilon = 1e-12);

        let t = -2.0 * 0.9f64.ln();
        let ad = gad_channel(&GadParams::amplitude_damping(1.0, t).unwrap()).unwrap();
        assert_abs_diff_eq!(quantumness(&ad).unwrap(), 0.88, epsilon = 1e-12);

        let p = GadParams::new(1.5, 1.0, 0.4).unwrap();
        let rep = gad_channel(&p).unwrap().affine_rep().unwrap();
        assert_abs_diff_eq!(
            rep.b[2],
            (2.0 * p.theta() - 1.0) * p.decay(),
            epsilon = 1e-15
        );
        assert!(
            !gad_channel(&GadParams::amplitude_damping(1.0, 0.2).unwrap())
                .unwrap()
                .is_unital()
        );
    }

    #[test]
    fn gad_crossover_time_lands_on_crossover_survival() {
        let p = GadParams::new(2.0, 1.0, 0.0).unwrap();
        let at = GadParams::new(2.0, 1.0, p.crossover_time()).unwrap();
        assert_abs_diff_eq!(at.survival(), 1.0 / 6.0, epsilon = 1e-15);
        let eig = l_spectrum(&gad_channel(&at).unwrap()).unwrap();
        // all three eigenvalues are s/2 there
        assert_abs_diff_eq!(eig.l1, eig.l3, epsilon = 1e-12);
    }

    #[test]
    fn unruh_examples() {
        let id = unruh_channel(&UnruhParams::new(0.0).unwrap()).unwrap();
        assert_abs_diff_eq!(quantumness(&id).unwrap(), 1.0, epsilon = 1e-15);

        let r = 0.8f64.sqrt().acos();
        let ch = unruh_channel(&UnruhParams::new(r).unwrap()).unwrap();
        assert_abs_diff_eq!(quantumness(&ch).unwrap(), 0.8, epsilon = 1e-12);

        let r = 0.9f64.sqrt().acos();
        let ch = unruh_channel(&UnruhParams::new(r).unwrap()).unwrap();
        assert_abs_diff_eq!(quantumness(&ch).unwrap(), 0.88, epsilon = 1e-12);

        let rep = ch.affine_rep().unwrap();
        let (s, c) = r.sin_cos();
        assert!((rep.a - Matrix3::from_diagonal(&Vector3::new(c, c, c * c))).amax() < 1e-15);
        assert!((rep.b - Vector3::new(0.0, 0.0, -s * s)).amax() < 1e-15);
    }

    #[test]
    fn unruh_from_acceleration() {
        let still = UnruhParams::from_acceleration(0.0, 1.0).unwrap();
        assert_eq!(still.r, 0.0);
        let a = 3.0;
        let p = UnruhParams::from_acceleration(a, 1.0).unwrap();
        let expected = (1.0 + (-2.0 * PI / a).exp()).powf(-0.5);
        assert_abs_diff_eq!(p.r.cos(), expected, epsilon = 1e-15);
        assert!(UnruhParams::from_acceleration(1e6, 1.0).unwrap().r < FRAC_PI_4);
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("xyz".parse::<Family>().is_err());
    }
}
