//! Truncated-Fock-space quantum optics toolkit.
//!
//! Everything here works with dense complex matrices over a finite Fock
//! basis |0⟩..|dim−1⟩. The crate covers:
//!
//! - state construction and validation ([`fock`]),
//! - s-parametrized characteristic functions and quasiprobability
//!   distributions with phase-space grid scans ([`phase_space`]),
//! - beam splitters, attenuation channels and the lossy Mach-Zehnder
//!   pipeline with its analytic comparator ([`optical`]),
//! - entanglement witnesses built from operator bases ([`witness`]),
//! - the continuous-variable displacement witness and the beam-splitter
//!   nonclassicality/entanglement criterion ([`cv`]),
//! - partial transposition, negativity and the lossy-Bell oracle
//!   ([`entanglement`]).
//!
//! All values are immutable after construction and every operation is a
//! pure function, so states can be shared freely across threads. Grid
//! scans, quadratures and sampling loops run on rayon when the `parallel`
//! feature (default) is enabled; results are identical either way because
//! reductions use a fixed order.

pub mod config;
pub mod cv;
pub mod entanglement;
pub mod error;
pub mod fock;
pub mod linalg;
pub mod optical;
pub mod par;
pub mod phase_space;
pub mod witness;

pub use config::Tolerances;
pub use error::{Error, Result};
pub use fock::{DensityMatrix, StateSpec, TwoModeState};
pub use phase_space::{PhaseGrid, QpdScan, SParam};
