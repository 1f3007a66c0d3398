//! Simulator for a cavity-QED single-photon source built around a four-level
//! atom, with the conventional Λ-type three-level system as a reference.
//!
//! The crate covers four complementary views of the same physics, which the
//! test suite plays against each other:
//!
//! - [`qmodel`]: basis, parameters, drive pulses, Hamiltonian and jump
//!   operators for both level schemes.
//! - [`lindblad`]: full master-equation integration with per-channel emission
//!   bookkeeping and optional suppression of jump recycling terms, which
//!   yields jump-resolved probabilities without Monte Carlo sampling.
//! - [`effective`]: adiabatic elimination of the excited manifold into
//!   time-dependent effective decay rates and the no-jump amplitude.
//! - [`closedform`]: analytic expressions for generation probabilities,
//!   re-excitation ratio, purity/fidelity, emission time, wavepacket
//!   overlaps, and extended-decay corrections.
//! - [`photonics`]: numerical construction of the emitted temporal mode and
//!   its purity/fidelity, cross-checked against [`closedform`].
//!
//! All rates, detunings, and times are expressed in units of the atom-cavity
//! coupling `g` (`g = 1` by convention).

pub mod cli;
pub mod closedform;
pub mod config;
pub mod effective;
pub mod lindblad;
pub mod linalg;
pub mod photonics;
pub mod qmodel;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Physical parameters violate an invariant or do not match the scheme.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// An argument is outside its documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An effective-model denominator or operator is numerically singular.
    #[error("singular model: {0}")]
    Singular(String),

    /// The ODE integrator failed (step underflow or non-finite state).
    #[error("integration failure: {0}")]
    Integration(String),

    /// A threshold could not be reached within the pulse support.
    #[error("threshold not reached: {0}")]
    NotReached(String),

    /// A configuration file could not be parsed.
    #[error("config error: {0}")]
    Config(String),

    /// Filesystem failure while reading configs or writing outputs.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
