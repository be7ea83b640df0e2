//! Exact rational arithmetic: scalars, dense linear algebra with a
//! first-dependency search, univariate polynomials, and factorization
//! over the rationals. Everything here is exact; no floating point.

pub mod factor;
pub mod linalg;
pub mod poly;
pub mod rational;

pub use factor::factor_over_q;
pub use linalg::{first_dependency, RationalMatrix};
pub use poly::RationalPolynomial;
pub use rational::Rational;
