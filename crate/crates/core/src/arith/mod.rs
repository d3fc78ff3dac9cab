//! Exact coefficient arithmetic: rationals, Laurent polynomials and rational
//! functions over a fixed variable universe.

pub mod gcd;
pub mod laurent;
pub mod monomial;
pub mod rational;
pub mod ratfunc;
pub mod var;
pub mod zpoly;

pub use laurent::LaurentPoly;
pub use monomial::Monomial;
pub use rational::Rational;
pub use ratfunc::RatFunc;
pub use var::{Var, NVARS};
pub use zpoly::ZPoly;
