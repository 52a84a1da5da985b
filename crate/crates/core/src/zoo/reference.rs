//! Published closed forms for Q and the average fidelity of each family.
//!
//! These are transcribed as printed, including forms that disagree with the
//! eigenvalue pipeline (GAD at n > 0, Unruh for cos²r > 5/6). They exist to
//! be compared against, never to replace the pipeline.

use super::{nmd_omega, rtn_kernel, ChannelPoint, GadParams};

/// Piecewise amplitude-damping witness in terms of the decay ξ = 1 − s.
fn amplitude_damping_quantumness(decay: f64) -> f64 {
    if decay <= 1.0 / 6.0 {
        0.5 * (6.0 * decay * decay - 3.0 * decay + 2.0)
    } else {
        1.0 - decay
    }
}

/// Printed GAD form with s̃ = (5/2)(2Θ−1)²(1−s)² and switch time τ.
fn gad_printed_quantumness(p: &GadParams) -> f64 {
    let n = p.n;
    let s = p.survival();
    let tau = -2.0 / (p.gamma * (2.0 * n + 1.0)) * (5.0 / (6.0 + 4.0 * n + n * n)).ln();
    if p.t <= tau {
        let s_tilde = 2.5 * (2.0 * p.theta() - 1.0).powi(2) * (1.0 - s).powi(2);
        0.5 * s + s_tilde
    } else {
        s
    }
}

/// Published closed form for Q at this point.
///
/// GAD at n = 0 uses the amplitude-damping form, the published zero
/// temperature specialization.
pub fn reference_quantumness(point: &ChannelPoint) -> f64 {
    match point {
        ChannelPoint::Rtn(p) => rtn_kernel(p).powi(2),
        ChannelPoint::Nmd(p) => nmd_omega(p.alpha, p.p).powi(2),
        ChannelPoint::Pd(p) => 1.0 - p.damping(),
        ChannelPoint::Gad(p) if p.n == 0.0 => amplitude_damping_quantumness(p.decay()),
        ChannelPoint::Gad(p) => gad_printed_quantumness(p),
        ChannelPoint::Ad(p) => amplitude_damping_quantumness(p.decay()),
        ChannelPoint::Unruh(p) => p.r.cos().powi(2),
    }
}

/// Published closed form for the average fidelity at this point.
pub fn reference_avg_fidelity(point: &ChannelPoint) -> f64 {
    match point {
        ChannelPoint::Rtn(p) => (2.0 + rtn_kernel(p)) / 3.0,
        ChannelPoint::Nmd(p) => (2.0 + nmd_omega(p.alpha, p.p)) / 3.0,
        ChannelPoint::Pd(p) => (2.0 + p.chi_t.cos()) / 3.0,
        ChannelPoint::Gad(p) | ChannelPoint::Ad(p) => {
            let s = p.survival();
            (3.0 + 2.0 * s.sqrt() + s) / 6.0
        }
        ChannelPoint::Unruh(p) => (4.0 * p.r.cos() + (2.0 * p.r).cos() + 7.0) / 12.0,
    }
}
