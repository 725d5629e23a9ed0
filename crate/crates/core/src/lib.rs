//! Quantum discord, classical correlations, mutual information,
//! entanglement of formation and negativity for SU(2)-invariant states of a
//! spin-j ⊗ spin-1/2 system.
//!
//! Two independent routes are provided: [`analytic`] evaluates closed forms,
//! while [`oracle`] optimizes over qubit measurements numerically and never
//! touches them.

pub mod analytic;
pub mod angular;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod states;

pub use analytic::CorrelationReport;
pub use angular::TwiceJ;
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, DensityMatrix, Spectrum, Subsystem};
pub use oracle::{GridSpec, MeasurementDirection};
pub use states::Su2InvariantState;
