//! Skew polynomials in the shift operators over rational functions.

pub mod apply;
pub mod closure;
pub mod commutative;
pub mod division;
pub mod poly;
pub mod reduce;
pub mod shift;
pub mod text;

pub use apply::ore_apply;
pub use closure::{ore_closure_deg1, Closure, ClosureTrace};
pub use commutative::CommutativeOperatorPoly;
pub use division::{check_right_divisor, skew_right_divide};
pub use poly::OrePoly;
pub use reduce::{right_reduce, ReduceStep, ReduceStrategy, Reduction};
pub use shift::{Shift, ShiftExp};
pub use text::parse_operator;
