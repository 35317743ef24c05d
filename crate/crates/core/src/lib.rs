//! Finite-dimensional Z2-graded Lie-Rinehart and 3-Lie-Rinehart superalgebras over exact rationals:
//! axiom checkers, induced and derived constructions, cochain complexes and formal deformations.

pub mod cohomology;
pub mod constructions;
pub mod deformations;
pub mod fixtures;
pub mod graded;
pub mod linalg;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod structures;

pub use graded::{koszul_sign, Element, GradedError, GradedSpace, MultilinearMap, Permutation};
pub use report::{CheckReport, Violation};
pub use scalar::{Parity, Scalar};

/// Sign bookkeeping for formulas that admit two sign readings.
///
/// `Consistent` uses signs derived from the Koszul rule, under which the coboundaries square to zero
/// and the constructions satisfy their axioms. `Literal` keeps the alternative reading, which in places
/// gives a map that does not square to zero or a construction that breaks the axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SignConvention {
    #[default]
    Consistent,
    Literal,
}
