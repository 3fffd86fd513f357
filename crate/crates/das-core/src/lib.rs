//! Data-aided sensing (DAS) simulation library.
//!
//! A base station collects measurements from `K` devices over multiple rounds
//! with `L` parallel uplink channels, using the data already gathered to steer
//! what is collected next. Three regimes are implemented:
//!
//! - [`gaussian_das`]: centralized selection over a jointly Gaussian field with
//!   known second-order statistics (conditional entropy or expected-MSE
//!   criteria, MMSE reconstruction).
//! - [`sparse_das`]: centralized selection when measurements have a sparse
//!   representation, with greedy recovery from the collected subvector and a
//!   correlation-normalized selection rule, plus a random-polling baseline and
//!   a downlink-error model.
//! - [`ra_das`]: distributed collection via multichannel slotted ALOHA where
//!   each device picks its own access probability from its local measurement,
//!   regulated by a dual-ascent multiplier broadcast from the base station.
//!
//! [`scenario`] generates reproducible problem instances, and [`harness`] runs
//! seeded multi-trial experiments and writes CSV outputs.

pub mod error;
pub mod gaussian_das;
pub mod harness;
mod linalg;
pub mod ra_das;
pub mod rng;
pub mod scenario;
pub mod sparse_das;

pub use error::{DasError, Result};
