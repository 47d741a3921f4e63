//! Exact scalars, sparse polynomials, rational functions, truncated power series
//! and matrix algebra over exact rings.

mod error;
mod finite;
mod gaussian;
mod intmat;
mod matrix;
mod parse;
mod poly;
mod ratfunc;
mod rational;
mod ring;
mod series;

pub use error::ArithError;
pub use finite::{Fp, F13, F17, F2, F4};
pub use gaussian::QI;
pub use intmat::{inertia, IntMatrix, Smith};
pub use matrix::Matrix;
pub use parse::parse_poly;
pub use poly::{vars, Exps, MultiPoly, Vars};
pub use ratfunc::RatFunc;
pub use rational::{q, qf, to_integer, Q, Z};
pub use ring::{inv_mod, is_prime, sqrt_minus_one_mod, Domain, Field, ModP, Ring};
pub use series::{PowerSeriesTrunc, DEFAULT_TRUNCATION};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
