//! Syndrome-based channel parameter estimation for linear codes.
//!
//! The syndrome of a hard-decided received block is free channel state
//! information: its Hamming weight is a sufficient statistic for the
//! hard-decision error rate, with no extra bits on the wire and no help
//! from the transmitter. This crate provides
//!
//! - sparse GF(2) parity-check matrices, random check-regular LDPC
//!   construction and alist I/O ([`codes`]),
//! - BSC and hard-decided BI-AWGN channel models with the maps between
//!   SNR and crossover probability ([`channels`]),
//! - the closed-form ML crossover estimator, its irregular-profile
//!   numeric counterpart and the clamped SNR estimator ([`estimators`]),
//! - exact and approximate estimator moments — mean, bias, MSE — plus
//!   Fisher information and the biased Cramér-Rao MSE bound ([`analysis`]),
//! - deterministic Monte-Carlo validation of the i.i.d.-syndrome
//!   approximation against real codes ([`montecarlo`]).

pub mod analysis;
pub mod bitvec;
pub mod channels;
pub mod codes;
pub mod error;
pub mod estimators;
pub mod montecarlo;
pub mod rng;

pub use bitvec::BitVector;
pub use channels::{CrossoverProb, QMapVariant, SnrDb};
pub use codes::{DegreeProfile, ParityCheckMatrix};
pub use error::{Error, Result};
pub use estimators::{SnrClamp, SyndromeObservation};
