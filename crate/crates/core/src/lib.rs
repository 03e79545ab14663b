//! Structure toolkit for (2P3, C4, C6)-free graphs that contain an induced
//! C7 or T0.
//!
//! Graphs in this class are recognized by stripping a simplicial prefix and
//! the universal vertices, collapsing twins, and matching the quotient
//! against a small catalog. The resulting certificates (7-saucer or tent
//! partitions) drive optimal coloring and width-12 clique-width expressions.
//! Brute-force oracles in [`oracle`] provide ground truth at desk scale.

pub mod catalog;
pub mod cli;
pub mod color;
pub mod cwd;
pub mod decompose;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod recognize;

pub use error::{Error, Result};
pub use graph::{Graph, Relation, VertexSet};
