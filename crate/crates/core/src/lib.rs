//! Quantumness witness and average fidelity for qubit noise channels.
//!
//! A qubit channel in Kraus form acts on Bloch vectors as ξ′ = Aξ + B. The
//! witness Q = λ2 + λ3 takes the two smallest eigenvalues of
//! 𝓛 = ½(AAᵀ + 5BBᵀ). This crate builds the standard dephasing and
//! dissipative families, extracts (A, B) from their Kraus operators,
//! evaluates Q and the average fidelity, and compares them with the
//! published closed forms.

pub mod channel;
pub mod eigen;
pub mod error;
pub mod measure;
pub mod state;
pub mod sweep;
pub mod zoo;

pub use channel::{AffineRep, ChoiMatrix, KrausChannel};
pub use error::{Error, Result};
pub use measure::{
    average_fidelity_analytic, average_fidelity_mc, eigenvalues_desc, l_matrix, quantumness,
    EigenTriple, FidelityEstimate, LMatrix,
};
pub use state::{BlochVector, PureAngles, QubitState};
pub use zoo::{ChannelPoint, Family, Regime};
