//! Sentence-ordering (coherence modeling) toolkit.
//!
//! Restoring a shuffled paragraph to its original order, implemented four ways:
//!
//! - **regression**: each sentence is regressed onto a scalar in `[-1, 1]` and the
//!   paragraph is recovered by argsort ([`regression`]),
//! - **pairwise ranking**: a classifier scores sentence transitions and orderings
//!   are decoded exhaustively or by beam search ([`pairwise`]),
//! - **first-next**: a selection-sort-style decoder that conditions on already
//!   placed sentences and an encoding of the unplaced remainder ([`firstnext`]),
//! - **context-aware regression**: plain regression plus a vector encoding of the
//!   whole shuffled paragraph ([`regression`] with a context path).
//!
//! Sentence encoders (CBoW, CNN, LSTM) live in [`encoders`] on top of a small
//! reverse-mode autodiff tape in [`numerics`]. Corpus handling (tokenization,
//! vocabularies, embeddings, synthetic corpora) is in [`corpus`]; Kendall tau /
//! perfect-match / positional-accuracy evaluation is in [`metrics`]; the
//! train/eval CLI plumbing is in [`harness`].

pub mod corpus;
pub mod encoders;
mod error;
pub mod firstnext;
pub mod harness;
pub mod metrics;
pub mod numerics;
pub mod pairwise;
pub mod regression;
pub mod training;

pub use error::{Error, Result};
