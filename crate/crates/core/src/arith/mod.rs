//! Exact arithmetic: rationals, dense-exponent multivariate polynomials,
//! univariate integer/rational polynomials with gcd machinery, monomial
//! valuations and residue evaluation modulo prime powers.

pub mod factor;
mod multipoly;
mod padic;
mod parse;
pub mod primes;
mod unipoly;
mod valuation;

pub use multipoly::{Alphabet, Exponents, MultiPoly, PolyOp};
pub use padic::{eval_mod_pk, PAdicApprox};
pub use parse::{parse_poly, parse_poly_infer};
pub use unipoly::{content_primitive, gcd_q, gcd_z, UniPolyQ, UniPolyZ};
pub use valuation::{monomial_valuation, rational_valuation, Value, WeightVector};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact rational number with a positive, coprime denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
