//! Measurement-induced information measures for quantum channels.
//!
//! The library models a projective measurement as entanglement between a
//! system and a pointer register, defines the Shannon entropy of the
//! induced outcome distribution ("measured information"), and evaluates a
//! channel mutual information as the difference between the measured
//! entropy of the channel output and the entropy of the joint
//! system-pointer output state. Reductions to Holevo-style ensemble
//! quantities and both fidelity notions are included, along with a seeded
//! sweep harness that tests the framework's inequality claims on random
//! instances.
//!
//! Entry points:
//! - [`numerics`]: dense complex matrices, Hermitian eigensolver, partial
//!   trace, spectral functions.
//! - [`state`]: pure states, density matrices, measurement bases, the
//!   pointer-entanglement constructions, seeded random generators.
//! - [`channel`]: Kraus-form CPTP maps, composition, adjoints, named
//!   families.
//! - [`measures`]: entropies, measured information, mutual information,
//!   Holevo reduction, fidelities.
//! - [`verifier`]: random-instance property sweeps with JSON reports.
//! - [`scenario`]: the JSON scenario format consumed by the `qmi` binary.

pub mod channel;
pub mod error;
pub mod measures;
pub mod numerics;
pub mod scenario;
pub mod state;
pub mod verifier;

pub use error::{Error, Result};

/// Default cap on the total composite dimension of any joint state.
pub const DEFAULT_MAX_DIM: usize = 64;

/// Composite-dimension cap, overridable through `QMI_MAX_DIM`.
pub fn max_composite_dim() -> usize {
    std::env::var("QMI_MAX_DIM")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}
