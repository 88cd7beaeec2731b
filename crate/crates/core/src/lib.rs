//! Spanning simplicial complexes of finite simple connected graphs.
//!
//! The complex `Δ_s(G)` lives on the edge labels of `G`; its facets are the
//! edge sets of the spanning trees of `G`. This crate builds these complexes,
//! computes their f-vectors, h-vectors, Stanley–Reisner data and Hilbert
//! series with exact integer arithmetic, and evaluates the closed forms known
//! for uni-cyclic graphs `U_{n,m}` so they can be checked against
//! brute-force enumeration.
//!
//! Exhaustive routines run on rayon when the `parallel` feature is enabled
//! (the default) and fall back to plain iterators otherwise; see [`Exec`].

pub mod binomial;
pub mod edge_list;
mod exec;
pub mod graph;
pub mod report;
pub mod series;
pub mod simplicial;
pub mod trees;
pub mod unicyclic;
pub mod verify;

pub use exec::Exec;
pub use graph::{Graph, GraphError, UnicyclicGraph};
pub use series::{HVector, HilbertSeries, Poly, SeriesError};
pub use simplicial::{ComplexError, FVector, Face, ShellingSearch, SimplicialComplex};
pub use trees::{SpanningTreeSet, TreeError};
pub use unicyclic::{FormulaError, UnicyclicParams};

/// Largest ground set (edge count) accepted by the exhaustive routines.
pub const ENUMERATION_GUARD: usize = 25;
