//! Exact integer cohomology for powers and symmetric products of a curve,
//! Quot-scheme Betti numbers from the torus-fixed-point decomposition, the
//! universal divisor, and Brauer-group rank bookkeeping.

pub mod brauer;
pub mod chern;
pub mod class;
pub mod cli;
pub mod combi;
pub mod divisor;
pub mod error;
pub mod genus;
pub mod linalg;
pub mod perm;
pub mod quot;
pub mod sym;

pub use class::{diagonal_class, CohomClass, CurveCycle, TensorMonomial};
pub use error::{Error, Result};
pub use genus::{GenusContext, Letter};
pub use perm::Permutation;
