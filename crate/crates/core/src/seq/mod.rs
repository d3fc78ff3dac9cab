//! Colored Jones polynomials of the Hopf and Whitehead links and the summand
//! families used to certify their recurrences.

pub mod qnum;
pub mod rmatrix;
pub mod whitehead;

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use crate::arith::{LaurentPoly, RatFunc, Var};
use crate::error::{Error, Result};

pub use qnum::{pochhammer_s2, qbracket, qfact, qfact_value, qint, qprod, QFactorial};
pub use rmatrix::{rmatrix_value, RSign};
pub use whitehead::{
    whitehead_f, whitehead_fprime, whitehead_g, whitehead_g0, whitehead_g0_closed, whitehead_v, WhiteheadF, WhiteheadFprime,
    WhiteheadG, WhiteheadG0, WhiteheadV,
};

/// A function of integer points (colors and optional summation index) with
/// values in rational functions of `s`.
pub trait JonesSequence: Sync {
    fn name(&self) -> &str;
    /// Number of coordinates: `(m, n)` or `(m, n, i)`.
    fn arity(&self) -> usize;
    fn eval(&self, point: &[i64]) -> Result<RatFunc>;
}

/// Which link a link-level sequence refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Link {
    Hopf,
    Whitehead,
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Link::Hopf => "hopf",
            Link::Whitehead => "whitehead",
        })
    }
}

impl std::str::FromStr for Link {
    type Err = Error;
    fn from_str(s: &str) -> Result<Link> {
        match s {
            "hopf" => Ok(Link::Hopf),
            "whitehead" => Ok(Link::Whitehead),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// Thread-safe memo table for sequence values.
#[derive(Default)]
pub(crate) struct Memo {
    table: RwLock<HashMap<Vec<i64>, RatFunc>>,
}

impl Memo {
    pub(crate) fn get_or(&self, key: &[i64], f: impl FnOnce() -> Result<RatFunc>) -> Result<RatFunc> {
        if let Some(v) = self.table.read().unwrap().get(key) {
            return Ok(v.clone());
        }
        let v = f()?;
        self.table.write().unwrap().insert(key.to_vec(), v.clone());
        Ok(v)
    }
}

pub(crate) fn check_colors(m: i64, n: i64) -> Result<()> {
    if m < 1 || n < 1 {
        Err(Error::InvalidColor { m, n })
    } else {
        Ok(())
    }
}

pub(crate) fn s_pow(e: i64) -> LaurentPoly {
    LaurentPoly::var_pow(Var::S, e as i32)
}

/// `V_H(m, n) = [mn]`.
pub fn hopf_v(m: i64, n: i64) -> Result<RatFunc> {
    check_colors(m, n)?;
    Ok(RatFunc::from_laurent(&qbracket(m * n)))
}

/// `J(m, n) = V(m, n) / ([m] [n])`, normalized so the unlink has value 1.
pub fn normalized_j(link: Link, m: i64, n: i64) -> Result<RatFunc> {
    let v = match link {
        Link::Hopf => hopf_v(m, n)?,
        Link::Whitehead => whitehead_v(m, n)?,
    };
    let den = &qbracket(m) * &qbracket(n);
    v.checked_div(&RatFunc::from_laurent(&den))
}

/// The Hopf link invariant as a sequence in `(m, n)`.
#[derive(Default)]
pub struct HopfV;

impl JonesSequence for HopfV {
    fn name(&self) -> &str {
        "V_H"
    }
    fn arity(&self) -> usize {
        2
    }
    fn eval(&self, p: &[i64]) -> Result<RatFunc> {
        hopf_v(p[0], p[1])
    }
}

/// `J(m, n)` for either link, memoized.
pub struct NormalizedJ {
    link: Link,
    v: Option<WhiteheadV>,
    memo: Memo,
}

impl NormalizedJ {
    pub fn new(link: Link) -> Self {
        let v = (link == Link::Whitehead).then(WhiteheadV::default);
        NormalizedJ { link, v, memo: Memo::default() }
    }
}

impl JonesSequence for NormalizedJ {
    fn name(&self) -> &str {
        match self.link {
            Link::Hopf => "J_H",
            Link::Whitehead => "J_W",
        }
    }
    fn arity(&self) -> usize {
        2
    }
    fn eval(&self, p: &[i64]) -> Result<RatFunc> {
        let (m, n) = (p[0], p[1]);
        check_colors(m, n)?;
        self.memo.get_or(p, || {
            let v = match &self.v {
                Some(w) => w.eval(p)?,
                None => hopf_v(m, n)?,
            };
            v.checked_div(&RatFunc::from_laurent(&(&qbracket(m) * &qbracket(n))))
        })
    }
}

/// Wraps a closure as a sequence.
pub struct FnSequence<F> {
    name: String,
    arity: usize,
    f: F,
}

impl<F: Fn(&[i64]) -> Result<RatFunc> + Sync> FnSequence<F> {
    pub fn new(name: impl Into<String>, arity: usize, f: F) -> Self {
        FnSequence { name: name.into(), arity, f }
    }
}

impl<F: Fn(&[i64]) -> Result<RatFunc> + Sync> JonesSequence for FnSequence<F> {
    fn name(&self) -> &str {
        &self.name
    }
    fn arity(&self) -> usize {
        self.arity
    }
    fn eval(&self, p: &[i64]) -> Result<RatFunc> {
        (self.f)(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hopf_values() {
        assert_eq!(hopf_v(2, 3).unwrap().to_string(), "s^5+s^3+s+s^-1+s^-3+s^-5");
        assert_eq!(hopf_v(1, 4).unwrap(), RatFunc::from_laurent(&qbracket(4)));
        assert_eq!(hopf_v(0, 3), Err(Error::InvalidColor { m: 0, n: 3 }));
        assert!(normalized_j(Link::Hopf, 1, 7).unwrap().is_one());
    }
}
