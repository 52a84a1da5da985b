use rayon::prelude::*;

use crate::error::Result;
use crate::measure::{
    average_fidelity_analytic, average_fidelity_mc_stream, quantumness, FidelityEstimate,
};
use crate::zoo::{reference_avg_fidelity, reference_quantumness, ChannelPoint, Regime};

use super::config::SweepConfig;

/// Pipeline and reference values with agreement at or below this are not flagged.
pub const AGREEMENT_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub sweep_var: f64,
    pub q_pipeline: f64,
    pub q_reference: f64,
    pub f_analytic: f64,
    pub f_reference: f64,
    pub mc: Option<FidelityEstimate>,
    pub regime: Option<Regime>,
}

impl SweepRow {
    /// Pipeline Q disagrees with the published closed form.
    pub fn q_diverges(&self) -> bool {
        (self.q_pipeline - self.q_reference).abs() > AGREEMENT_TOL
    }

    pub fn f_diverges(&self) -> bool {
        (self.f_analytic - self.f_reference).abs() > AGREEMENT_TOL
    }
}

/// Evaluates one channel point. `stream` selects the Monte Carlo stream.
pub fn evaluate_point(
    sweep_var: f64,
    point: &ChannelPoint,
    mc_samples: u64,
    seed: u64,
    stream: u64,
) -> Result<SweepRow> {
    let channel = point.channel()?;
    let mc = if mc_samples > 0 {
        Some(average_fidelity_mc_stream(
            &channel, mc_samples, seed, stream,
        )?)
    } else {
        None
    };
    Ok(SweepRow {
        sweep_var,
        q_pipeline: quantumness(&channel)?,
        q_reference: reference_quantumness(point),
        f_analytic: average_fidelity_analytic(&channel)?,
        f_reference: reference_avg_fidelity(point),
        mc,
        regime: point.regime(),
    })
}

/// One row per grid point, in grid order. Points are evaluated in parallel;
/// grid point k always uses Monte Carlo stream k.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    cfg.grid
        .values()
        .into_par_iter()
        .enumerate()
        .map(|(k, x)| {
            let point = cfg.point_at(x)?;
            evaluate_point(x, &point, cfg.mc_samples, cfg.seed, k as u64)
        })
        .collect()
}
