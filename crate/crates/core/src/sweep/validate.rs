//! Channel health report and the plain-text Kraus operator file format.
//!
//! A Kraus file holds one operator per line as eight numbers,
//! `re00 im00 re01 im01 re10 im10 re11 im11`, separated by whitespace or
//! commas. Blank lines and `#` comments are ignored.

use std::fmt;
use std::path::Path;

use num_complex::Complex64;

use crate::channel::{KrausChannel, CHOI_PSD_TOL, COMPLETENESS_TOL};
use crate::error::{Error, Result};
use crate::state::{bloch_components, bloch_to_density, BlochVector, Mat2};
use crate::zoo::Regime;

/// Largest tolerated |ξ′ − (Aξ + B)| over the probe states.
pub const AFFINE_TOL: f64 = 1e-10;
const PROBE_STATES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ValidationReport {
    pub operators: usize,
    pub completeness_residual: f64,
    pub min_choi_eigenvalue: f64,
    pub choi_trace: f64,
    pub unital: bool,
    pub affine_residual: f64,
    pub regime: Option<Regime>,
}

impl ValidationReport {
    pub fn completeness_ok(&self) -> bool {
        self.completeness_residual <= COMPLETENESS_TOL
    }

    pub fn choi_ok(&self) -> bool {
        self.min_choi_eigenvalue >= CHOI_PSD_TOL
    }

    pub fn affine_ok(&self) -> bool {
        self.affine_residual <= AFFINE_TOL
    }

    pub fn passed(&self) -> bool {
        self.completeness_ok() && self.choi_ok() && self.affine_ok()
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kraus_operators: {}", self.operators)?;
        writeln!(
            f,
            "completeness_residual: {:e} [{}]",
            self.completeness_residual,
            verdict(self.completeness_ok())
        )?;
        writeln!(
            f,
            "min_choi_eigenvalue: {:e} [{}]",
            self.min_choi_eigenvalue,
            verdict(self.choi_ok())
        )?;
        writeln!(f, "choi_trace: {}", self.choi_trace)?;
        writeln!(f, "unital: {}", self.unital)?;
        writeln!(
            f,
            "affine_residual: {:e} [{}]",
            self.affine_residual,
            verdict(self.affine_ok())
        )?;
        if let Some(regime) = self.regime {
            writeln!(f, "regime: {regime}")?;
        }
        write!(f, "status: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Deterministic probe states: a Fibonacci lattice on the sphere at radii 0.2 … 1.
fn probe_states() -> Vec<BlochVector> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..PROBE_STATES)
        .map(|k| {
            let z = 1.0 - 2.0 * (k as f64 + 0.5) / PROBE_STATES as f64;
            let rho = (1.0 - z * z).sqrt();
            let phi = golden * k as f64;
            let radius = ((k % 5) + 1) as f64 / 5.0;
            BlochVector::new(
                radius * rho * phi.cos(),
                radius * rho * phi.sin(),
                radius * z,
            )
        })
        .collect()
}

/// Runs every check without short-circuiting, so broken operator sets are
/// still fully reported.
pub fn validate_channel(channel: &KrausChannel, regime: Option<Regime>) -> ValidationReport {
    let choi = channel.choi_matrix();
    let rep = channel.affine_rep_unchecked();
    let affine_residual = probe_states()
        .into_iter()
        .map(|v| {
            let rho = bloch_to_density(v).expect("probe states lie in the unit ball");
            let image = channel.apply_operator(rho.matrix());
            let direct = bloch_components(&image);
            let mapped = rep.apply(v);
            (direct.to_vector() - mapped.to_vector()).norm()
        })
        .fold(0.0, f64::max);
    ValidationReport {
        operators: channel.operators().len(),
        completeness_residual: channel.completeness_residual(),
        min_choi_eigenvalue: choi.min_eigenvalue(),
        choi_trace: choi.trace(),
        unital: channel.is_unital(),
        affine_residual,
        regime,
    }
}

pub fn parse_kraus(text: &str) -> Result<KrausChannel> {
    let mut operators = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let field = || format!("kraus line {}", lineno + 1);
        let numbers = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<f64>()
                    .map_err(|_| Error::config(field(), format!("cannot parse `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if numbers.len() != 8 {
            return Err(Error::config(
                field(),
                format!("expected 8 numbers, found {}", numbers.len()),
            ));
        }
        let c = |k: usize| Complex64::new(numbers[2 * k], numbers[2 * k + 1]);
        operators.push(Mat2::new(c(0), c(1), c(2), c(3)));
    }
    if operators.is_empty() {
        return Err(Error::config("kraus", "file holds no operators"));
    }
    KrausChannel::new(operators)
}

pub fn read_kraus_file(path: &Path) -> Result<KrausChannel> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_kraus(&text)
}
