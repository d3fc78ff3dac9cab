//! The Whitehead link invariant and its summand family.
//!
//! `V_W(m, n) = sum_{i=0}^{min(m,n)-1} F(m, n, i)` with
//!
//! ```text
//! F(m,n,i) = (-1)^(m+n) s^(-(i^2+3i)/2) {m+i}! {n+i}! {i}!
//!            / ({1} {m-i-1}! {n-i-1}! {2i+1}!)
//! ```

use super::qnum::{qbracket, qint, qprod};
use super::{check_colors, s_pow, JonesSequence, Memo};
use crate::arith::{LaurentPoly, RatFunc, Var};
use crate::error::{Error, Result};
use crate::ore::{OrePoly, Shift};

/// Numerator and denominator of `F(m, n, i)`, or `None` outside the support
/// `0 <= i < min(m, n)`.
fn summand_parts(m: i64, n: i64, i: i64) -> Option<(LaurentPoly, LaurentPoly)> {
    if i < 0 || i >= m.min(n) {
        return None;
    }
    // i(i+3) is always even.
    let mut num = s_pow(-(i * i + 3 * i) / 2);
    if (m + n) % 2 != 0 {
        num = -&num;
    }
    // {m+i}!/{m-i-1}! and {n+i}!/{n-i-1}! are products of 2i+1 consecutive terms.
    let num = &(&num * &qprod(m - i, m + i)) * &qprod(n - i, n + i);
    let den = &qint(1) * &qprod(i + 1, 2 * i + 1);
    Some((num, den))
}

/// `F(m, n, i)`, zero outside `0 <= i < min(m, n)`.
pub fn whitehead_f(m: i64, n: i64, i: i64) -> RatFunc {
    match summand_parts(m, n, i) {
        Some((num, den)) => RatFunc::new(&num, &den).expect("nonzero quantum product"),
        None => RatFunc::zero(),
    }
}

/// `F'(m, n, i) = s^m (s^(2+4i) + s^(2+2i) - 1 - s^(-2i)) F(m, n, i)`.
pub fn whitehead_fprime(m: i64, n: i64, i: i64) -> RatFunc {
    match summand_parts(m, n, i) {
        Some((num, den)) => {
            let bump = &(&(&s_pow(2 + 4 * i) + &s_pow(2 + 2 * i)) - &LaurentPoly::one()) - &s_pow(-2 * i);
            let num = &(&num * &bump) * &s_pow(m);
            RatFunc::new(&num, &den).expect("nonzero quantum product")
        }
        None => RatFunc::zero(),
    }
}

/// `V_W(m, n)`.
pub fn whitehead_v(m: i64, n: i64) -> Result<RatFunc> {
    check_colors(m, n)?;
    Ok((0..m.min(n)).map(|i| whitehead_f(m, n, i)).sum())
}

/// `G(m, n, i) = sum_l c_l(s, s^m) F'(m + l, n, i)` for `Y = sum_l c_l(s, Qm) Em^l`.
pub fn whitehead_g(coeffs: &[RatFunc], m: i64, n: i64, i: i64) -> Result<RatFunc> {
    let mut acc = RatFunc::zero();
    for (l, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let fp = whitehead_fprime(m + l as i64, n, i);
        if fp.is_zero() {
            continue;
        }
        acc = &acc + &(&c.bind_s_powers(&[(Var::Qm, m as i32)])? * &fp);
    }
    Ok(acc)
}

/// Closed form `G(m, n, 0) = (-1)^(m+n) 2 (1 - s^2) (1 + s^(2m+4)) [n] / ((1 - s^(2+2m)) (1 - s^(6+2m)))`.
pub fn whitehead_g0_closed(m: i64, n: i64) -> Result<RatFunc> {
    let one = LaurentPoly::one();
    let sign = if (m + n) % 2 == 0 { 2 } else { -2 };
    let num = &(&(&(&one - &s_pow(2)) * &(&one + &s_pow(2 * m + 4))) * &qbracket(n)) * &LaurentPoly::from_i64(sign);
    let den = &(&one - &s_pow(2 + 2 * m)) * &(&one - &s_pow(6 + 2 * m));
    RatFunc::new(&num, &den).map_err(|_| Error::SubstitutionPole(format!("G({m}, {n}, 0)")))
}

/// `F` as a memoized sequence in `(m, n, i)`.
#[derive(Default)]
pub struct WhiteheadF {
    memo: Memo,
}

impl JonesSequence for WhiteheadF {
    fn name(&self) -> &str {
        "F"
    }
    fn arity(&self) -> usize {
        3
    }
    fn eval(&self, p: &[i64]) -> Result<RatFunc> {
        self.memo.get_or(p, || Ok(whitehead_f(p[0], p[1], p[2])))
    }
}

/// `F'` as a memoized sequence in `(m, n, i)`.
#[derive(Default)]
pub struct WhiteheadFprime {
    memo: Memo,
}

impl JonesSequence for WhiteheadFprime {
    fn name(&self) -> &str {
        "F'"
    }
    fn arity(&self) -> usize {
        3
    }
    fn eval(&self, p: &[i64]) -> Result<RatFunc> {
        self.memo.get_or(p, || Ok(whitehead_fprime(p[0], p[1], p[2])))
    }
}

/// `V_W` as a memoized sequence in `(m, n)`.
#[derive(Default)]
pub struct WhiteheadV {
    memo: Memo,
}

impl JonesSequence for WhiteheadV {
    fn name(&self) -> &str {
        "V_W"
    }
    fn arity(&self) -> usize {
        2
    }
    fn eval(&self, p: &[i64]) -> Result<RatFunc> {
        check_colors(p[0], p[1])?;
        self.memo.get_or(p, || whitehead_v(p[0], p[1]))
    }
}

/// `G(m, n, i)` through the coefficients of `Y(s, Em, Qm)`.
pub struct WhiteheadG {
    coeffs: Vec<RatFunc>,
    fprime: WhiteheadFprime,
    memo: Memo,
}

impl WhiteheadG {
    /// `y` must be a polynomial in `Em` alone with coefficients in `s`, `Qm`.
    pub fn new(y: &OrePoly) -> Result<Self> {
        if !y.is_univariate_in(Shift::Em) {
            return Err(Error::Shape(format!("expected an operator in Em only: {}", y)));
        }
        let d = y.degree(Shift::Em).unwrap_or(0);
        let coeffs = (0..=d)
            .map(|l| y.coefficient_of(Shift::Em, l).as_scalar().unwrap_or_else(RatFunc::zero))
            .collect();
        Ok(WhiteheadG { coeffs, fprime: WhiteheadFprime::default(), memo: Memo::default() })
    }

    pub fn coefficients(&self) -> &[RatFunc] {
        &self.coeffs
    }
}

impl JonesSequence for WhiteheadG {
    fn name(&self) -> &str {
        "G"
    }
    fn arity(&self) -> usize {
        3
    }
    fn eval(&self, p: &[i64]) -> Result<RatFunc> {
        let (m, n, i) = (p[0], p[1], p[2]);
        self.memo.get_or(p, || {
            let mut acc = RatFunc::zero();
            for (l, c) in self.coeffs.iter().enumerate() {
                let fp = self.fprime.eval(&[m + l as i64, n, i])?;
                if !c.is_zero() && !fp.is_zero() {
                    acc = &acc + &(&c.bind_s_powers(&[(Var::Qm, m as i32)])? * &fp);
                }
            }
            Ok(acc)
        })
    }
}

/// `G(m, n, 0) = (-1)^(m+n+1) 2 s (1 + s^(2m+4)) [n] / ((1 - s^(2+2m)) (1 - s^(6+2m)))`,
/// which is [`whitehead_g0_closed`] divided by `s - s^-1`.
pub fn whitehead_g0(m: i64, n: i64) -> Result<RatFunc> {
    let unit = RatFunc::from_laurent(&(&s_pow(1) - &s_pow(-1)));
    Ok(&whitehead_g0_closed(m, n)? / &unit)
}

/// `m -> G(m, n, 0)` from the corrected closed form, as a sequence in `(m, n)`.
#[derive(Default)]
pub struct WhiteheadG0;

impl JonesSequence for WhiteheadG0 {
    fn name(&self) -> &str {
        "G(m,n,0)"
    }
    fn arity(&self) -> usize {
        2
    }
    fn eval(&self, p: &[i64]) -> Result<RatFunc> {
        check_colors(p[0], p[1])?;
        whitehead_g0(p[0], p[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(r: &RatFunc) -> LaurentPoly {
        r.as_laurent().expect("Laurent value")
    }

    #[test]
    fn first_values() {
        assert!(whitehead_f(1, 1, 0).is_one());
        assert!(whitehead_v(1, 1).unwrap().is_one());
        let b2 = qbracket(2);
        assert_eq!(whitehead_f(2, 2, 0), RatFunc::from_laurent(&(&b2 * &b2)));
        assert!(whitehead_f(3, 2, 5).is_zero());
        assert!(whitehead_f(3, 2, -1).is_zero());
    }

    #[test]
    fn second_summand_at_two_two() {
        // F(2,2,1) = s^-2 {3}{2}{1}.
        let f = whitehead_f(2, 2, 1);
        let expect = &(&(&s_pow(-2) * &qint(3)) * &qint(2)) * &qint(1);
        assert_eq!(lp(&f), expect);
        assert_eq!(whitehead_v(2, 2).unwrap(), &whitehead_f(2, 2, 0) + &f);
    }

    #[test]
    fn fprime_at_zero_index() {
        for m in 1..5 {
            for n in 1..5 {
                let sign = if (m + n) % 2 == 0 { 2 } else { -2 };
                let expect = &(&(&(&s_pow(2) - &LaurentPoly::one()) * &s_pow(m)) * &(&qbracket(m) * &qbracket(n)))
                    * &LaurentPoly::from_i64(sign);
                assert_eq!(lp(&whitehead_fprime(m, n, 0)), expect);
            }
        }
        assert!(whitehead_fprime(2, 3, 9).is_zero());
    }

    #[test]
    fn symmetric_in_colors() {
        for m in 1..7 {
            for n in 1..m {
                assert_eq!(whitehead_v(m, n).unwrap(), whitehead_v(n, m).unwrap());
            }
        }
    }

    #[test]
    fn invariant_is_laurent() {
        for m in 1..6 {
            for n in 1..6 {
                assert!(whitehead_v(m, n).unwrap().is_laurent(), "V_W({m},{n})");
            }
        }
    }
}
