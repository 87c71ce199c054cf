//! Exact higher-order Euler and Bernoulli polynomials, computed four
//! independent ways: exponential generating functions, generalized Motzkin
//! numbers (weighted lattice paths), powers of tridiagonal transfer
//! matrices, and closed-form monic orthogonal polynomials.

pub mod bernoulli_lab;
pub mod error;
pub mod matrix;
pub mod motzkin;
pub mod ortho;
pub mod poly;
pub mod quadrature;
pub mod rational;
pub mod series;

pub use error::{Error, Result};
pub use poly::{Poly, Ring, XPoly, YPoly};
pub use rational::Rational;
pub use series::MomentSeq;
