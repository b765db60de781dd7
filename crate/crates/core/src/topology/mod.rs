//! Construction and structural queries of the balanced hypercube `BH_n`.

mod automorphism;
mod graph;
mod isomorphism;
mod split;
mod vertex;

pub use automorphism::Automorphism;
pub use graph::{BalancedHypercube, MAX_DIMENSION};
pub use isomorphism::find_isomorphism;
pub use split::{Split, SubcubeView};
pub use vertex::{add_mod4, Color, Edge, Vertex};
