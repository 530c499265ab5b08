//! Authorship attribution from the dynamics of network automata.
//!
//! A document becomes a word-adjacency network, a Life-Like rule evolves
//! binary states over that network, and the distributions of
//! spatio-temporal measurements (per-node entropy and Lempel-Ziv
//! complexity, snapshot and time-series similarities) form feature vectors
//! for supervised classification. The rule space of 2^18 born/survive
//! combinations can be swept exhaustively to find discriminative rules.
//!
//! The pipeline, end to end:
//!
//! ```
//! use llna::corpus::{preprocess, LemmaMode, LemmaTable, StopwordList};
//! use llna::graph::{build_network, giant_component};
//! use llna::automaton::{evolve, Rule};
//! use llna::features::{assemble, FeatureConfig};
//!
//! let text = "The cats sat on the mat. The dogs sat on the rug. \
//!             Cats and dogs ran around the mat and the rug all day.";
//! let tokens = preprocess(
//!     text,
//!     "example",
//!     &StopwordList::default_english(),
//!     &LemmaTable::default_english(),
//!     LemmaMode::Partial,
//! );
//! let net = giant_component(&build_network(&tokens)?);
//! let matrix = evolve(&net, Rule::parse("B024678-S4")?, 50, 1)?;
//! let features = assemble(&matrix, &FeatureConfig::default())?;
//! assert_eq!(features.values.len(), 140);
//! # Ok::<(), llna::error::Error>(())
//! ```

pub mod automaton;
pub mod bits;
pub mod classify;
pub mod corpus;
pub mod error;
pub mod features;
pub mod graph;
pub mod powerlaw;
pub mod svg;
pub mod sweep;
pub mod synth;

pub use error::{Error, Result};
