//! Exact arithmetic for the conumerator function and the Jimm involution.
//!
//! The conumerator `con` is the unique map `Q+ -> Z+` with
//! `con(1 + x) = con(x) + con(1/x)`, `con(1/(1 + x)) = con(x)` and `con(1) = 1`.
//! It extends the Fibonacci numbers (`con(n) = F(n+1)`), and the ratio
//! `J(x) = con(x) / con(1/x)` is the Jimm involution, which is induced by the
//! outer automorphism of `PGL(2, Z)` and acts on quadratic irrationals.
//!
//! Everything here is exact: big integers, rationals, continued fractions,
//! quadratic surds and unimodular integer matrices. No floating point is used.

pub mod arith;
pub mod conumerator;
mod error;
pub mod factorize;
pub mod jimm;
pub mod markov;
pub mod pgl2;
pub mod tables;
pub mod variations;
pub mod verify;

pub use arith::{ContinuedFraction, Mat2, PeriodicCF, QuadraticSurd, Rational};
pub use error::{Error, Result};
pub use jimm::JimmValue;
pub use markov::{CharPair, MarkovTriple};
pub use pgl2::{Generator, GeneratorWord};
