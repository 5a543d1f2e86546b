//! Exact scalars, dense tensors and matrices, and exact linear algebra.

mod matrix;
pub mod perm;
mod poly;
mod scalar;
mod tensor;
pub mod vector;

pub use matrix::Matrix;
pub use poly::Poly;
pub use scalar::{ParseScalarError, Scalar};
pub use tensor::{wedge3, MultiIndex, Tensor};
pub use vector::Vector;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("index error: {0}")]
    Index(String),
    #[error("extent mismatch: {0}")]
    Extent(String),
}
