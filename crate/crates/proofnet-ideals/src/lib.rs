//! Multiplicative proof nets as polynomial ideals.
//!
//! This crate translates proof nets of multiplicative linear logic into
//! ideals of exact rational polynomial rings and demonstrates, executably,
//! that cut-elimination coincides with Gröbner-basis elimination:
//!
//! - [`formulas`]: oriented atoms and formulas in De Morgan normal form.
//! - [`proofnet`]: proof structures, sequent-proof translation, redexes,
//!   cut reduction with variable maps, normalization, η-expansion.
//! - [`polyring`]: sparse exact polynomials, lexicographic orders, standard
//!   and early-stopping division.
//! - [`groebner`]: Buchberger in standard and early-stopping form, basis
//!   predicates, reduced bases, ideal equality.
//! - [`roofgraph`]: height-ordered graphs, roofs, the Falling Roofs
//!   algorithm, and the cut-off-the-top elimination view.
//! - [`netideal`]: link generators, persistent paths, the boundary
//!   permutation, and the monomial orders attached to a net.
//! - [`verify`]: executable theorem checkers and random net generation.
//!
//! The `examples/` directory walks through each capability; the bundled
//! `proofnet-ideals` binary exposes the same operations on JSON files.

pub mod formulas;
pub mod groebner;
pub mod netideal;
pub mod polyring;
pub mod proofnet;
pub mod roofgraph;
pub mod verify;
