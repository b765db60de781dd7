//! Balanced hypercube `BH_n`: topology, fault-tolerant cycle embedding and an
//! independent brute-force oracle.
//!
//! The [`topology`] module materializes the graph and its subcube splits,
//! [`embed`] constructs fault-free cycles of every even length from 6 up to
//! `4^n` through a chosen edge, and [`oracle`] checks those cycles and runs the
//! verification campaigns.

#![forbid(unsafe_code)]

pub mod embed;
pub mod error;
pub mod oracle;
pub mod topology;

pub use embed::{embed_cycle, CyclePath, EmbedTrace, Embedder, FaultSet};
pub use error::{Error, Result};
pub use topology::{BalancedHypercube, Color, Edge, Split, SubcubeView, Vertex};
