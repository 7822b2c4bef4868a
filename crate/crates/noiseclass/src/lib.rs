//! Simulation and classification of single-qubit gate-set noise.
//!
//! The crate covers the full pipeline:
//!
//! * [`superop`] — Pauli-transfer-matrix channel algebra (generators, matrix
//!   exponentials, composition, outcome probabilities, CPTP diagnostics);
//! * [`noise`] — sampling of purely coherent / purely stochastic noise
//!   realizations and construction of noisy gate sets;
//! * [`expdesign`] — GST-style experiment designs indexed by maximum depth
//!   `L`, plus exact-probability dataset simulation;
//! * [`features`] — feature maps and column standardization;
//! * [`seplp`] — certified linear-separability testing (separating
//!   hyperplane or Farkas witness);
//! * [`learn`] — perceptron, LDA/QDA, linear and RBF soft-margin SVMs,
//!   geometric margins, shuffle-split cross-validation and grid search;
//! * [`embed`] — PCA and metric MDS for 2-d structure plots;
//! * [`robustness`] — finite-sample (binomial) noise injection against a
//!   fixed max-margin hyperplane;
//! * [`io`] — deterministic JSON/CSV artifact serialization.

extern crate blas_src;

pub mod embed;
pub mod error;
pub mod expdesign;
pub mod features;
pub mod io;
pub mod learn;
pub mod linalg;
pub mod noise;
pub mod rng;
pub mod robustness;
pub mod seplp;
pub mod superop;

pub use error::{Error, Result};
