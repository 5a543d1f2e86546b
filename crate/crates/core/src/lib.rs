pub mod algebras;
pub mod cli;
pub mod duality;
pub mod error;
pub mod io;
pub mod kernel;
pub mod manin;
pub mod pairs;
pub mod random;
pub mod report;
pub mod reps;
pub mod search;

pub use algebras::{Algebra, Family, LinearMap};
pub use error::{Error, Result};
pub use kernel::{Matrix, Scalar, Tensor};
pub use report::{EquivalenceReport, LawReport};
