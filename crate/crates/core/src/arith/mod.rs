//! Exact number types: rationals, finite and periodic continued fractions,
//! quadratic surds and 2x2 unimodular matrices.

mod cf;
mod mat2;
mod periodic;
mod rational;
mod surd;

pub use cf::ContinuedFraction;
pub use mat2::Mat2;
pub use periodic::PeriodicCF;
pub use rational::{parse_rational, Rational};
pub use surd::QuadraticSurd;

pub(crate) use rational::is_positive;
#[cfg(test)]
pub(crate) use rational::rat;
