//! Quantum integers and factorials in `s`.

use crate::arith::{LaurentPoly, Monomial, Rational, Var};
use crate::error::{Error, Result};

fn s_pow(e: i64) -> LaurentPoly {
    LaurentPoly::var_pow(Var::S, e as i32)
}

/// `{n} = s^n - s^-n`.
pub fn qint(n: i64) -> LaurentPoly {
    &s_pow(n) - &s_pow(-n)
}

/// `[n] = {n} / {1}`, a Laurent polynomial.
pub fn qbracket(n: i64) -> LaurentPoly {
    let k = n.abs();
    let sum = LaurentPoly::from_terms(
        (0..k).map(|j| (Monomial::var(Var::S, (k - 1 - 2 * j) as i32), Rational::from_i64(1))),
    );
    if n < 0 {
        -&sum
    } else {
        sum
    }
}

/// `{n}!`; for negative `n` the factorial is infinite, so its reciprocal is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QFactorial {
    Finite(LaurentPoly),
    Infinite,
}

pub fn qfact(n: i64) -> QFactorial {
    if n < 0 {
        QFactorial::Infinite
    } else {
        QFactorial::Finite(qprod(1, n))
    }
}

/// `{n}!` in a numerator position.
pub fn qfact_value(n: i64) -> Result<LaurentPoly> {
    match qfact(n) {
        QFactorial::Finite(p) => Ok(p),
        QFactorial::Infinite => Err(Error::NegativeFactorialUse(n)),
    }
}

/// `{lo} {lo+1} ... {hi}`; the empty product is 1.
pub fn qprod(lo: i64, hi: i64) -> LaurentPoly {
    (lo..=hi).fold(LaurentPoly::one(), |acc, j| &acc * &qint(j))
}

/// `(x)_k = (1 - x)(1 - x^2)...(1 - x^k)` at `x = s^2`; `None` for `k < 0`.
pub fn pochhammer_s2(k: i64) -> Option<LaurentPoly> {
    (k >= 0).then(|| (1..=k).fold(LaurentPoly::one(), |acc, j| &acc * &(&LaurentPoly::one() - &s_pow(2 * j))))
}
