//! The coherence-based quantumness witness and average channel fidelity.
//!
//! For a qubit channel with Bloch action ξ′ = Aξ + B the witness is
//! Q = λ2 + λ3, the two smallest eigenvalues of 𝓛 = ½(AAᵀ + 5BBᵀ).
//! Average fidelity over pure inputs reduces to ½ + Tr(A)/6; the Monte
//! Carlo estimator evaluates it from the state-level fidelity instead.

use std::f64::consts::PI;

use nalgebra::Matrix3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::channel::{AffineRep, KrausChannel};
use crate::eigen::jacobi_eigen;
use crate::error::Result;
use crate::state::{fidelity, pure_state, PureAngles};

/// Weight of the BBᵀ term in 𝓛.
pub const SHIFT_WEIGHT: f64 = 5.0;

/// 𝓛 = ½(AAᵀ + 5BBᵀ), real symmetric and positive semidefinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LMatrix {
    elements: Matrix3<f64>,
}

impl LMatrix {
    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.elements
    }
}

/// Eigenvalues sorted l1 ≥ l2 ≥ l3.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenTriple {
    pub l1: f64,
    pub l2: f64,
    pub l3: f64,
}

impl EigenTriple {
    pub fn as_array(&self) -> [f64; 3] {
        [self.l1, self.l2, self.l3]
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FidelityEstimate {
    pub mean: f64,
    /// Sample standard deviation over √samples.
    pub std_error: f64,
    pub samples: u64,
}

pub fn l_matrix(rep: &AffineRep) -> LMatrix {
    let a = &rep.a;
    let b = &rep.b;
    let elements = (a * a.transpose() + b * b.transpose() * SHIFT_WEIGHT) * 0.5;
    LMatrix { elements }
}

pub fn eigenvalues_desc(m: &LMatrix) -> Result<EigenTriple> {
    let values = jacobi_eigen(&m.elements)?.values;
    Ok(EigenTriple {
        l1: values[0],
        l2: values[1],
        l3: values[2],
    })
}

/// Sorted 𝓛 spectrum of a channel.
pub fn l_spectrum(channel: &KrausChannel) -> Result<EigenTriple> {
    eigenvalues_desc(&l_matrix(&channel.affine_rep()?))
}

/// Q(Φ) = λ2 + λ3.
pub fn quantumness(channel: &KrausChannel) -> Result<f64> {
    let eig = l_spectrum(channel)?;
    Ok(eig.l2 + eig.l3)
}

/// ½ + Tr(A)/6, the pure-state average of Tr[ρΦ(ρ)].
pub fn average_fidelity_analytic(channel: &KrausChannel) -> Result<f64> {
    let rep = channel.affine_rep()?;
    Ok(0.5 + rep.a.trace() / 6.0)
}

const CHUNK: u64 = 4096;
// Each sample draws two u64 values, i.e. four 32-bit ChaCha words.
const WORDS_PER_SAMPLE: u64 = 4;

#[derive(Clone, Copy, Default)]
struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let count = self.count + other.count;
        let delta = other.mean - self.mean;
        let mean = self.mean + delta * other.count as f64 / count as f64;
        let m2 = self.m2
            + other.m2
            + delta * delta * (self.count as f64 * other.count as f64) / count as f64;
        Moments { count, mean, m2 }
    }
}

/// Uniform pure state: z ~ U[−1, 1], φ ~ U[0, 2π).
fn sample_angles(rng: &mut ChaCha8Rng) -> PureAngles {
    let z: f64 = 2.0 * rng.random::<f64>() - 1.0;
    let mut phi = 2.0 * PI * rng.random::<f64>();
    if phi >= 2.0 * PI {
        phi = 0.0;
    }
    let theta = z.clamp(-1.0, 1.0).acos();
    PureAngles::new(theta, phi).expect("sampled angles lie in range")
}

fn chunk_moments(
    channel: &KrausChannel,
    seed: u64,
    stream: u64,
    chunk: u64,
    samples: u64,
) -> Result<Moments> {
    let start = chunk * CHUNK;
    let end = (start + CHUNK).min(samples);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.set_word_pos(u128::from(start) * u128::from(WORDS_PER_SAMPLE));
    let mut moments = Moments::default();
    for _ in start..end {
        let rho = pure_state(sample_angles(&mut rng));
        let out = channel.apply_unchecked(&rho);
        moments.push(fidelity(&rho, &out)?);
    }
    Ok(moments)
}

/// Monte Carlo estimate of the average fidelity over uniformly random pure inputs.
///
/// The random stream for sample `i` is the ChaCha8 keystream of `seed` at
/// word offset 4i, so the estimate does not depend on how chunks are
/// scheduled across threads. Chunk statistics are merged in index order.
pub fn average_fidelity_mc(
    channel: &KrausChannel,
    samples: u64,
    seed: u64,
) -> Result<FidelityEstimate> {
    average_fidelity_mc_stream(channel, samples, seed, 0)
}

/// As [`average_fidelity_mc`], drawing from an independent ChaCha stream.
///
/// Sweeps give every grid point its own stream under one master seed.
pub fn average_fidelity_mc_stream(
    channel: &KrausChannel,
    samples: u64,
    seed: u64,
    stream: u64,
) -> Result<FidelityEstimate> {
    channel.ensure_complete()?;
    let samples = samples.max(1);
    let chunks = samples.div_ceil(CHUNK);
    let parts: Vec<Moments> = (0..chunks)
        .into_par_iter()
        .map(|k| chunk_moments(channel, seed, stream, k, samples))
        .collect::<Result<_>>()?;
    let total = parts.into_iter().fold(Moments::default(), Moments::merge);
    let n = total.count as f64;
    let std_error = if total.count > 1 {
        (total.m2.max(0.0) / (n - 1.0)).sqrt() / n.sqrt()
    } else {
        0.0
    };
    Ok(FidelityEstimate {
        mean: total.mean,
        std_error,
        samples: total.count,
    })
}
