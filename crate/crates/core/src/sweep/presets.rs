//! Sweep configurations that regenerate the data behind each figure.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::zoo::Family;

use super::config::{FamilyParams, Grid, SweepAxis, SweepConfig};

#[derive(Clone, Debug, PartialEq)]
pub struct Panel {
    pub label: String,
    pub config: SweepConfig,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FigurePreset {
    pub name: &'static str,
    /// States every value the preset had to choose.
    pub description: &'static str,
    pub panels: Vec<Panel>,
}

pub const FIGURE_NAMES: [&str; 5] = ["fig1", "fig2", "fig3", "fig4", "fig5"];

/// α values drawn for the NMD figure.
pub const FIG2_ALPHAS: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// Amplitude-damping time at which ξ = 1 − s reaches 1/6 for γ = 1.
pub fn ad_branch_time() -> f64 {
    -2.0 * (5.0f64 / 6.0).ln()
}

fn panel(
    label: impl Into<String>,
    family: Family,
    params: FamilyParams,
    grid: Grid,
) -> Result<Panel> {
    Ok(Panel {
        label: label.into(),
        config: SweepConfig::new(family, params, SweepAxis::default_for(family), grid, 0, 0)?,
    })
}

fn fig1() -> Result<FigurePreset> {
    let grid = Grid::new(0.0, 5000.0, 500)?;
    Ok(FigurePreset {
        name: "fig1",
        description: "RTN over t in [0, 5000] s, 500 points. Non-Markovian b=0.05, gamma=0.001; \
                      Markovian b=0.07 with gamma=1 chosen (not given numerically).",
        panels: vec![
            panel(
                "nonmarkovian",
                Family::Rtn,
                FamilyParams {
                    b: Some(0.05),
                    gamma: Some(0.001),
                    ..Default::default()
                },
                grid,
            )?,
            panel(
                "markovian",
                Family::Rtn,
                FamilyParams {
                    b: Some(0.07),
                    gamma: Some(1.0),
                    ..Default::default()
                },
                grid,
            )?,
        ],
    })
}

fn fig2() -> Result<FigurePreset> {
    let grid = Grid::new(0.0, 10.0, 500)?;
    let panels = FIG2_ALPHAS
        .iter()
        .map(|&alpha| {
            panel(
                format!("alpha{alpha:.2}"),
                Family::Nmd,
                FamilyParams {
                    alpha: Some(alpha),
                    kappa: Some(1.0),
                    ..Default::default()
                },
                grid,
            )
        })
        .collect::<Result<_>>()?;
    Ok(FigurePreset {
        name: "fig2",
        description: "NMD with kappa=1 over kappa*t in [0, 10], 500 points; \
                      alpha in {0, 0.25, 0.5, 0.75, 1} chosen.",
        panels,
    })
}

fn fig3() -> Result<FigurePreset> {
    Ok(FigurePreset {
        name: "fig3",
        description: "PD over chi*t in [0, pi/2], 100 points.",
        panels: vec![panel(
            "pd",
            Family::Pd,
            FamilyParams::default(),
            Grid::new(0.0, FRAC_PI_2, 100)?,
        )?],
    })
}

fn fig4() -> Result<FigurePreset> {
    Ok(FigurePreset {
        name: "fig4",
        description: "GAD with gamma=1. n=50 over t in [0, 0.5], 501 points; n=0 over \
                      t in [0, 4 t*], 401 points, where t* = -2 ln(5/6) puts the \
                      amplitude-damping branch point 1-s = 1/6 on grid node 100.",
        panels: vec![
            panel(
                "n50",
                Family::Gad,
                FamilyParams {
                    n: Some(50.0),
                    gamma: Some(1.0),
                    ..Default::default()
                },
                Grid::new(0.0, 0.5, 501)?,
            )?,
            panel(
                "n0",
                Family::Gad,
                FamilyParams {
                    n: Some(0.0),
                    gamma: Some(1.0),
                    ..Default::default()
                },
                Grid::new(0.0, 4.0 * ad_branch_time(), 401)?,
            )?,
        ],
    })
}

fn fig5() -> Result<FigurePreset> {
    Ok(FigurePreset {
        name: "fig5",
        description: "Unruh over acceleration a in [0, 50] (hbar = c = 1), 501 points; \
                      mode frequency omega=1 chosen.",
        panels: vec![panel(
            "unruh",
            Family::Unruh,
            FamilyParams {
                omega: Some(1.0),
                ..Default::default()
            },
            Grid::new(0.0, 50.0, 501)?,
        )?],
    })
}

pub fn figure_preset(name: &str) -> Result<FigurePreset> {
    match name {
        "fig1" => fig1(),
        "fig2" => fig2(),
        "fig3" => fig3(),
        "fig4" => fig4(),
        "fig5" => fig5(),
        other => Err(Error::UnknownFigure(other.to_string())),
    }
}
