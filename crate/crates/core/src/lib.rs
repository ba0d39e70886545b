//! Exact 3-coloring for triangle-free graphs with no induced seven-vertex path.
//!
//! The engine answers "is this graph 3-colorable?" for graphs promised to be
//! {P7, triangle}-free, and produces an explicit proper coloring whenever one
//! exists. Inputs outside the promised class are detected and rejected with a
//! witness (a triangle or an induced P7) instead of being answered wrongly.
//!
//! The pipeline: verify the class promise, delete dominated vertices and
//! shrink homogeneous pairs of stable sets ([`cleaning`]), split into
//! components, and dispatch each component on the longest structure it
//! contains (7-gon, shell, 5-gon, else bipartite). The case solvers reduce
//! everything to polynomially many list-coloring instances with lists of size
//! at most two, which a 2-SAT backend ([`palette::solve_two_list`]) decides
//! exactly.
//!
//! Ground-truth brute-force solvers and seeded instance generators live in
//! [`oracle`]; every reduction in this crate is tested against them.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature only toggles conveniences, and the optional `parallel` feature
//! adds a rayon work pool over independent solver branches.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod anchors;
pub mod chains;
pub mod cleaning;
pub mod graph;
pub mod oracle;
pub mod pair_reduction;
pub mod palette;
pub mod restriction;
pub mod solvers;
pub mod twosat;

pub use graph::{Graph, GraphError, InducedWitness, VertexId, WitnessKind};
pub use palette::{Color, ColorSet, Coloring, ColoringProblem, ConstraintFamily, Palette};
pub use solvers::{solve, solve_with, SolveOptions, SolveOutcome, SolveReport};
