//! Edge-coloring toolkit for edge-chromatic critical graphs.
//!
//! - [`graph`]: simple graphs, vertex splitting and contraction
//! - [`io`]: graph6 and edge-list formats
//! - [`coloring`] and [`kempe`]: partial colorings and the Kempe-chain calculus
//! - [`chromatic`]: exact chromatic index, Vizing coloring, criticality
//! - [`structures`]: multi-fans, Kierstead paths and the lemma checkers
//! - [`canon`]: canonical forms for isomorphism rejection
//! - [`verifier`]: exhaustive vertex-splitting sweeps and reports

pub mod canon;
pub mod chromatic;
pub mod coloring;
pub mod graph;
pub mod io;
pub mod kempe;
pub mod structures;
pub mod verifier;

pub use coloring::{Color, ColorSet, EdgeColoring};
pub use graph::{Edge, EdgeId, Graph, SplitSpec, Vertex};
