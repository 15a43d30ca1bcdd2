//! Exact arithmetic: rationals, sparse polynomials, linear algebra over ℚ and ℤ.

pub mod atoms;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod snf;
pub mod symdet;

pub use atoms::{coeff_atom, coeff_const, Atom, AtomMono, CoeffPoly, Specialization};
pub use matrix::{IntMatrix, Matrix, RankProfile, RatMatrix};
pub use poly::{Coeff, Exponent, LaurentExp, LaurentPoly, Monomial, SparsePoly};
pub use rational::{format_rational, int, parse_rational, pow_signed, rat, signum, Rational};
pub use snf::{smith_normal_form, Smith};
pub use symdet::small_symbolic_det;
