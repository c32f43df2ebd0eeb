//! Exact counting and enumeration of independent sets in graphs and
//! antichains in finite posets.
//!
//! The engine computes independence polynomials through the Hilbert-series
//! recursion on modified edge ideals, constructs the binomial ideal family
//! attached to a poset together with its universal reduced Groebner basis,
//! and provides the bipartite Cohen-Macaulay graph correspondence and an
//! exact Vandermonde interpolation procedure for antichain polynomials.
//!
//! All arithmetic is exact: polynomial coefficients are arbitrary-precision
//! integers and evaluations are carried out over exact rationals.

pub mod bitset;
pub mod cm_bipartite;
pub mod error;
pub mod graph;
pub mod hilbert;
pub mod interpolation;
pub mod monomial_ideal;
pub mod polynomial;
pub mod poset;
pub mod poset_ideal;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
pub use hilbert::{HilbertOptions, HilbertResult, PivotStrategy};
pub use monomial_ideal::{Monomial, MonomialIdeal};
pub use polynomial::{Polynomial, Rational};
pub use poset::Poset;
