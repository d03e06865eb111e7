//! Dense tensors with reverse-mode automatic differentiation, MSE / BCE losses,
//! the Adam optimizer with decoupled weight decay, and a finite-difference
//! gradient checker.
//!
//! Everything is 64-bit and single-threaded per computation record: a [`Graph`]
//! is a tape of recorded operations built fresh per example, while learnable
//! state persists across records in a [`ParamSet`]. After [`Graph::backward`],
//! [`Graph::accumulate_param_grads`] folds leaf gradients back into the set.

mod adam;
mod graph;
mod gradcheck;
mod params;
mod tensor;

pub use adam::AdamState;
pub use gradcheck::{grad_check, GradCheckReport};
pub use graph::{Graph, NodeId};
pub use params::{ParamId, ParamSet, ParamSnapshot, ParamsFile};
pub use tensor::Tensor;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("{op}: shape mismatch between {lhs:?} and {rhs:?}")]
    ShapeMismatch {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },
    #[error("{op}: unsupported shape {shape:?}")]
    BadShape { op: &'static str, shape: Vec<usize> },
    #[error("tensor data length {len} does not match shape {shape:?}")]
    BadLength { shape: Vec<usize>, len: usize },
    #[error("{op}: expected at least one input")]
    EmptyInput { op: &'static str },
    #[error("node {0} is not recorded in this graph")]
    UnknownNode(usize),
    #[error("backward requires a scalar loss, got shape {0:?}")]
    NonScalarLoss(Vec<usize>),
    #[error("parameter name {0:?} is already registered")]
    DuplicateParam(String),
    #[error("unknown parameter {0:?}")]
    UnknownParam(String),
    #[error("parameter snapshot does not match the set ({expected} vs {got} entries)")]
    SnapshotMismatch { expected: usize, got: usize },
    #[error("unsupported checkpoint version {0}")]
    BadVersion(u32),
}
