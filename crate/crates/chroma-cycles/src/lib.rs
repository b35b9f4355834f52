//! Certified cycle extraction from colorings of edge-critical graphs.
//!
//! When deleting an edge makes a graph colorable, the coloring of the
//! smaller graph forces cycles through (or around) the deleted edge whose
//! lengths fall in specific residue classes. This crate extracts those
//! cycles constructively, packages each as an independently re-checkable
//! certificate, and ships a brute-force cycle oracle to verify every count
//! from the ground up.
//!
//! - [`graph`]: dense small graphs, digraphs, named constructors.
//! - [`graph6`]: graph6/sparse6 interchange.
//! - [`coloring`]: exact proper, circular, and homomorphism solvers.
//! - [`tuza`]: 1-mod-r cycles through the edge, 0-mod-r cycles avoiding it.
//! - [`circular`]: the (k,d)-coloring analogue with class index reporting.
//! - [`oracle`]: exhaustive enumeration, residue profiles, orientation
//!   experiments.

pub mod cert;
pub mod circular;
pub mod coloring;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod tuza;

pub use cert::{CertError, CertWitness, CycleCert, CyclicPerm, TheoremTag};
pub use coloring::{CircularSpec, ColorSpec, Coloring};
pub use graph::{Digraph, Edge, Graph, GraphError, MAX_VERTICES};
pub use graph6::{parse_graph6, parse_graph_line, parse_sparse6, write_graph6, Graph6Error};
pub use tuza::ExtractError;
