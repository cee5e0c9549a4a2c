//! Certified bounds for the trigonometric/hyperbolic inequality catalog:
//! an outward-rounded interval kernel, rigorous series enclosures of the
//! elementary functions, a double-double high-precision oracle, the
//! machine-readable inequality catalog, and an adaptive bisection prover
//! that emits certificates, counterexamples and tightness reports.

pub mod catalog;
pub mod dd;
pub mod error;
pub mod functions;
pub mod interval;
pub mod oracle;
pub mod prover;

pub use error::{Error, Result};
pub use interval::Interval;
