//! Desk-scale simulation and security analysis of QBC4, a quantum bit
//! commitment protocol built on split entangled qubit pairs.
//!
//! The crate is organized around four pieces:
//!
//! - [`quantum`]: exact dense complex linear algebra over labeled tensor
//!   factors (states, operators, partial traces, Schmidt decompositions,
//!   Haar sampling).
//! - [`protocol`]: the honest commit/open/verify state machine for a single
//!   pair (QBC4p) and for N independent instances (QBC4), producing
//!   replayable transcripts.
//! - [`concealing`] and [`binding`]: the two security analyzers. The first
//!   certifies that the receiver's view is independent of the committed bit;
//!   the second computes the committer's optimal cheating probability by
//!   optimization over local unitaries.
//! - [`babe`]: a dishonest receiver model (substituted input states) together
//!   with the sender-side entanglement check and a cut-and-choose schedule.
//!
//! All randomness flows through explicitly seeded ChaCha streams so every
//! analysis is reproducible from its reported seed.

pub mod babe;
pub mod binding;
pub mod concealing;
pub mod error;
pub mod protocol;
pub mod quantum;
pub mod report;
pub mod tol;

pub use error::{Error, Result};
