//! Algebraic cubature for the product Chebyshev measure on the d-cube,
//! total-degree hyperinterpolation in the 3-cube via fast cosine transforms,
//! and the nontensorial Clenshaw-Curtis-like rule for the Lebesgue measure
//! obtained by integrating the hyperinterpolant.
//!
//! The building block is the even/odd factorization of the Gauss-Lobatto
//! quadrature for the Chebyshev weight: the d-dimensional rules are unions of
//! two product grids selected by a sigma pattern over {E, O}, exact for all
//! polynomials of total degree 2n-1.

pub mod bench;
pub mod cc3;
pub mod cheb1d;
pub mod cli;
pub mod cubature;
pub mod hyper3;
pub mod transform;

use thiserror::Error;

/// Errors produced by rule construction and evaluation.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the domain of an operation (e.g. |x| > 1 beyond the
    /// clamping tolerance).
    #[error("domain error: {0}")]
    Domain(String),

    /// Structurally invalid argument (zero dimension, bad sigma length, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An iterative solver failed to reach its tolerance.
    #[error("convergence failure: {0}")]
    NonConvergence(String),

    /// A denominator degenerated (e.g. relative error of a constant vector).
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
