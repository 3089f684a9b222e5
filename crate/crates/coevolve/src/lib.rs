//! Projective and coarse projective time integration in co-evolving frames
//! (co-traveling, dynamically renormalized) for 1-D PDEs and particle-based
//! micro-simulators.
//!
//! The crate provides:
//! - deterministic inner integrators for the Nagumo, diffusion, and
//!   quasilinear Burgers-type model equations ([`pde`]);
//! - stochastic inner simulators (spatial Gillespie SSA and random walkers)
//!   with lifting/restriction maps ([`micro`]);
//! - template (pinning) conditions extracting shift and scale factors
//!   ([`frames`]);
//! - the projective outer loops in fixed, co-traveling, renormalized, and
//!   asymptotic three-report modes ([`projector`]);
//! - black-box identification of scale-invariance exponents ([`symmetry`]);
//! - scenario orchestration, configuration, and CSV output ([`harness`]).

pub mod error;
pub mod field;
pub mod frames;
pub mod harness;
pub mod micro;
pub mod pde;
pub mod projector;
pub mod rootfind;
pub mod symmetry;

pub use error::{Error, Result};
pub use field::{Field1D, FourierCoeffs, GridSpec};
