use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use super::shift::{Shift, ShiftExp};
use crate::arith::{LaurentPoly, RatFunc, Var};
use crate::error::{Error, Result};
use crate::par::Exec;

/// Operator in the skew polynomial algebra generated by `Em`, `En`, `tE1`
/// over `Q(s, Qm, Qn, tQ1, ...)`, in coefficient-left normal form
/// `sum c_a * Em^a0 * En^a1 * tE1^a2`.
///
/// Terms are kept in descending [`ShiftExp`] order with nonzero coefficients,
/// so structural equality is operator equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct OrePoly {
    terms: Vec<(ShiftExp, RatFunc)>,
}

/// Sums a list of rational functions pairwise, which keeps intermediate
/// denominators balanced.
pub fn sum_tree(mut xs: Vec<RatFunc>) -> RatFunc {
    if xs.is_empty() {
        return RatFunc::zero();
    }
    while xs.len() > 1 {
        let mut next = Vec::with_capacity(xs.len().div_ceil(2));
        let mut it = xs.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(&a + &b),
                None => next.push(a),
            }
        }
        xs = next;
    }
    xs.pop().unwrap()
}

impl OrePoly {
    pub fn zero() -> OrePoly {
        OrePoly { terms: Vec::new() }
    }

    pub fn one() -> OrePoly {
        OrePoly::constant(RatFunc::one())
    }

    pub fn constant(c: RatFunc) -> OrePoly {
        OrePoly::term(c, ShiftExp::ZERO)
    }

    pub fn from_i64(c: i64) -> OrePoly {
        OrePoly::constant(RatFunc::from_i64(c))
    }

    pub fn var(v: Var) -> OrePoly {
        OrePoly::constant(RatFunc::var(v))
    }

    pub fn shift(e: Shift) -> OrePoly {
        OrePoly::shift_pow(e, 1)
    }

    pub fn shift_pow(e: Shift, k: u32) -> OrePoly {
        OrePoly::term(RatFunc::one(), ShiftExp::single(e, k))
    }

    /// The single term `c * E^exp`.
    pub fn term(c: RatFunc, exp: ShiftExp) -> OrePoly {
        if c.is_zero() {
            OrePoly::zero()
        } else {
            OrePoly { terms: vec![(exp, c)] }
        }
    }

    /// Collects arbitrary terms, summing coefficients of equal exponents.
    pub fn from_terms<I: IntoIterator<Item = (ShiftExp, RatFunc)>>(iter: I) -> OrePoly {
        OrePoly::from_terms_with(iter, Exec::Sequential)
    }

    fn from_terms_with<I: IntoIterator<Item = (ShiftExp, RatFunc)>>(iter: I, exec: Exec) -> OrePoly {
        let mut groups: FxHashMap<ShiftExp, Vec<RatFunc>> = FxHashMap::default();
        for (e, c) in iter {
            if !c.is_zero() {
                groups.entry(e).or_default().push(c);
            }
        }
        let mut groups: Vec<(ShiftExp, Vec<RatFunc>)> = groups.into_iter().collect();
        groups.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let sums = exec.map(&groups, |(_, cs)| {
            if cs.len() == 1 {
                cs[0].clone()
            } else {
                sum_tree(cs.clone())
            }
        });
        let terms = groups.into_iter().zip(sums).filter(|(_, c)| !c.is_zero()).map(|((e, _), c)| (e, c)).collect();
        OrePoly { terms }
    }

    #[inline]
    pub fn terms(&self) -> &[(ShiftExp, RatFunc)] {
        &self.terms
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient if the operator has no shift part.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.as_slice() {
            [] => Some(RatFunc::zero()),
            [(e, c)] if e.is_zero() => Some(c.clone()),
            _ => None,
        }
    }

    /// Coefficient of the monomial `E^exp`.
    pub fn coeff(&self, exp: ShiftExp) -> RatFunc {
        self.terms.iter().find(|(e, _)| *e == exp).map(|(_, c)| c.clone()).unwrap_or_default()
    }

    /// Highest exponent of `e`, or `None` for the zero operator.
    pub fn degree(&self, e: Shift) -> Option<u32> {
        self.terms.iter().map(|(x, _)| x.get(e)).max()
    }

    pub fn uses_shift(&self, e: Shift) -> bool {
        self.terms.iter().any(|(x, _)| x.get(e) > 0)
    }

    /// `true` if no generator other than `e` occurs.
    pub fn is_univariate_in(&self, e: Shift) -> bool {
        self.terms.iter().all(|(x, _)| Shift::ALL.iter().all(|&o| o == e || x.get(o) == 0))
    }

    /// Total number of coefficient terms, a size measure.
    pub fn size(&self) -> usize {
        self.terms.iter().map(|(_, c)| c.size()).sum()
    }

    /// The operator `L_k` with `self = sum_k L_k * e^k`; `L_k` is free of `e`.
    pub fn coefficient_of(&self, e: Shift, k: u32) -> OrePoly {
        OrePoly {
            terms: self
                .terms
                .iter()
                .filter(|(x, _)| x.get(e) == k)
                .map(|(x, c)| (x.with(e, 0), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of the highest power of `e`.
    pub fn leading_coefficient(&self, e: Shift) -> OrePoly {
        match self.degree(e) {
            None => OrePoly::zero(),
            Some(d) => self.coefficient_of(e, d),
        }
    }

    /// Scalar coefficient of the highest power of `e` when the operator is
    /// univariate in `e`.
    pub fn leading_scalar(&self, e: Shift) -> Option<RatFunc> {
        self.leading_coefficient(e).as_scalar()
    }

    pub fn map_coefficients(&self, f: impl Fn(&RatFunc) -> RatFunc) -> OrePoly {
        OrePoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Left multiplication by a scalar: `c * self`.
    pub fn scale_left(&self, c: &RatFunc) -> OrePoly {
        if c.is_zero() {
            return OrePoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        OrePoly { terms: self.terms.iter().map(|(e, x)| (*e, c * x)).collect() }
    }

    /// `c * self` where `c` is the least common multiple of the coefficient
    /// denominators, so every coefficient becomes a Laurent polynomial.
    pub fn clear_denominators(&self) -> OrePoly {
        let mut l = LaurentPoly::one();
        for (_, c) in &self.terms {
            let d = c.den_laurent();
            let ratio = RatFunc::new(&l, &d).expect("denominators are nonzero");
            l = &l * &ratio.den_laurent();
        }
        self.scale_left(&RatFunc::from_laurent(&l))
    }

    /// Right multiplication by a scalar: `self * c`.
    pub fn scale_right(&self, c: &RatFunc) -> OrePoly {
        if c.is_zero() {
            return OrePoly::zero();
        }
        OrePoly { terms: self.terms.iter().map(|(e, x)| (*e, x * &c.dilate_multi(&e.dilations()))).collect() }
    }

    /// Applies `Q -> s^k Q` for the variable paired with `e` to every coefficient.
    pub fn dilate_coefficients(&self, e: Shift, k: i32) -> OrePoly {
        if k == 0 {
            return self.clone();
        }
        let v = e.paired();
        OrePoly { terms: self.terms.iter().map(|(x, c)| (*x, c.dilate(v, k))).collect() }
    }

    /// Exchanges `Em <-> En` together with `Qm <-> Qn`.
    pub fn swap_mn(&self) -> OrePoly {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(x, c)| {
                let mut y = *x;
                y.0.swap(Shift::Em.index(), Shift::En.index());
                (y, c.swap_vars(Var::Qm, Var::Qn))
            })
            .collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        OrePoly { terms }
    }

    /// Substitutes `e -> factor * e` where `factor` is a power of `s`; this is
    /// an algebra endomorphism since `s` is central.
    pub fn shift_rescale(&self, e: Shift, factor: &LaurentPoly) -> Result<OrePoly> {
        let k = match factor.terms() {
            [(m, c)] if c.is_one() && (0..crate::arith::NVARS).all(|i| i == 0 || m.0[i] == 0) => m.exp(Var::S),
            _ => return Err(Error::Shape(format!("rescaling factor {} is not a power of s", factor))),
        };
        Ok(self.shift_rescale_s(e, k))
    }

    /// `e -> s^k e`.
    pub fn shift_rescale_s(&self, e: Shift, k: i32) -> OrePoly {
        OrePoly {
            terms: self
                .terms
                .iter()
                .map(|(x, c)| {
                    let a = x.get(e) as i32;
                    (*x, c * &RatFunc::var_pow(Var::S, k * a))
                })
                .collect(),
        }
    }

    /// Sets the generator `e` to 1 (it must commute with all coefficients for
    /// this to be meaningful as an operator identity).
    pub fn set_shift_to_one(&self, e: Shift) -> OrePoly {
        OrePoly::from_terms(self.terms.iter().map(|(x, c)| (x.with(e, 0), c.clone())))
    }

    /// `lc^{-1} * self` for the leading scalar coefficient in `e`.
    pub fn monic_in(&self, e: Shift) -> Result<OrePoly> {
        let lc = self
            .leading_scalar(e)
            .ok_or_else(|| Error::Shape(format!("leading coefficient in {} is not a scalar", e)))?;
        Ok(self.scale_left(&lc.inv()?))
    }

    pub fn pow(&self, k: u32) -> OrePoly {
        let mut acc = OrePoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Ore product with an explicit execution strategy.
    pub fn mul_with(&self, rhs: &OrePoly, exec: Exec) -> OrePoly {
        if self.is_zero() || rhs.is_zero() {
            return OrePoly::zero();
        }
        if let Some(c) = self.as_scalar() {
            return rhs.scale_left(&c);
        }
        if let Some(c) = rhs.as_scalar() {
            return self.scale_right(&c);
        }
        let exec = if self.len() * rhs.len() < 4 { Exec::Sequential } else { exec };
        let partial: Vec<Vec<(ShiftExp, RatFunc)>> = exec.map(&self.terms, |(a, c)| {
            let dil = a.dilations();
            rhs.terms.iter().map(|(b, d)| (*a + *b, c * &d.dilate_multi(&dil))).collect()
        });
        OrePoly::from_terms_with(partial.into_iter().flatten(), exec)
    }

    fn add_impl(&self, rhs: &OrePoly, negate: bool) -> OrePoly {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        OrePoly { terms: out }
    }
}

impl<'a> Add<&'a OrePoly> for &'a OrePoly {
    type Output = OrePoly;
    fn add(self, rhs: &OrePoly) -> OrePoly {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a OrePoly> for &'a OrePoly {
    type Output = OrePoly;
    fn sub(self, rhs: &OrePoly) -> OrePoly {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a OrePoly> for &'a OrePoly {
    type Output = OrePoly;
    fn mul(self, rhs: &OrePoly) -> OrePoly {
        self.mul_with(rhs, Exec::default())
    }
}

impl Neg for &OrePoly {
    type Output = OrePoly;
    fn neg(self) -> OrePoly {
        OrePoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for OrePoly {
    type Output = OrePoly;
    fn neg(self) -> OrePoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for OrePoly {
            type Output = OrePoly;
            fn $m(self, rhs: OrePoly) -> OrePoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a OrePoly> for OrePoly {
            type Output = OrePoly;
            fn $m(self, rhs: &OrePoly) -> OrePoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<OrePoly> for &'a OrePoly {
            type Output = OrePoly;
            fn $m(self, rhs: OrePoly) -> OrePoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<RatFunc> for OrePoly {
    fn from(c: RatFunc) -> Self {
        OrePoly::constant(c)
    }
}

impl From<Shift> for OrePoly {
    fn from(e: Shift) -> Self {
        OrePoly::shift(e)
    }
}

impl From<Var> for OrePoly {
    fn from(v: Var) -> Self {
        OrePoly::var(v)
    }
}

impl From<i64> for OrePoly {
    fn from(c: i64) -> Self {
        OrePoly::from_i64(c)
    }
}

impl std::iter::Sum for OrePoly {
    fn sum<I: Iterator<Item = OrePoly>>(iter: I) -> OrePoly {
        OrePoly::from_terms(iter.flat_map(|p| p.terms))
    }
}

/// Text of one coefficient: `(negative, body, is_unit)`. Single-term
/// coefficients expose their sign so it can become the term separator.
pub(crate) fn coefficient_text(c: &RatFunc) -> (bool, String, bool) {
    if let Some(p) = c.as_laurent() {
        if p.is_monomial() {
            let (m, x) = &p.terms()[0];
            let neg = x.is_negative();
            let body = LaurentPoly::monomial(*m, x.abs());
            return (neg, body.to_string(), body.is_one());
        }
        return (false, format!("({:#})", p), false);
    }
    (false, format!("({:#})/({:#})", c.num_laurent(), c.den_laurent()), false)
}

/// Writes `c*Em^a*En^b` terms joined by ` + ` / ` - `.
pub(crate) fn write_operator<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a ShiftExp, &'a RatFunc)>,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let (neg, body, unit) = coefficient_text(c);
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if e.is_zero() {
            f.write_str(&body)?;
        } else if unit {
            write!(f, "{}", e)?;
        } else {
            write!(f, "{}*{}", body, e)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for OrePoly {
    /// Canonical operator text, e.g. `Em^2 + (-Qn - Qn^-1)*Em + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_operator(f, self.terms.iter().map(|(e, c)| (e, c)))
    }
}

impl fmt::Debug for OrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: Var, e: i32) -> OrePoly {
        OrePoly::constant(RatFunc::var_pow(v, e))
    }

    fn s(e: i32) -> OrePoly {
        q(Var::S, e)
    }

    #[test]
    fn commutation_with_paired_variable() {
        let em = OrePoly::shift(Shift::Em);
        assert_eq!(&em * &q(Var::Qm, 1), &(&s(1) * &q(Var::Qm, 1)) * &em);
        assert_eq!(&em * &q(Var::Qn, 1), &q(Var::Qn, 1) * &em);
    }

    #[test]
    fn product_of_whitehead_factors() {
        let em = OrePoly::shift(Shift::Em);
        let qm2 = q(Var::Qm, 2);
        let left = &em - &(&s(2) * &qm2);
        let right = &(&qm2 * &em) - &OrePoly::one();
        let prod = &left * &right;
        let expect = &(&(&(&s(2) * &qm2) * &em.pow(2)) - &(&(&OrePoly::one() + &(&s(2) * &q(Var::Qm, 4))) * &em))
            + &(&s(2) * &qm2);
        assert_eq!(prod, expect);
    }

    #[test]
    fn display_hopf_operator() {
        let em = OrePoly::shift(Shift::Em);
        let qn = &q(Var::Qn, 1) + &q(Var::Qn, -1);
        let a = &(&em.pow(2) - &(&qn * &em)) + &OrePoly::one();
        assert_eq!(a.to_string(), "Em^2 + (-Qn - Qn^-1)*Em + 1");
    }

    #[test]
    fn rescale_examples() {
        let em = OrePoly::shift(Shift::Em);
        let r = em.pow(2).shift_rescale(Shift::Em, &LaurentPoly::var(Var::S)).unwrap();
        assert_eq!(r, &s(2) * &em.pow(2));
        let r = (&q(Var::Qm, 1) * &em).shift_rescale(Shift::Em, &LaurentPoly::var(Var::S)).unwrap();
        assert_eq!(r, &(&s(1) * &q(Var::Qm, 1)) * &em);
        assert!(em.shift_rescale(Shift::Em, &LaurentPoly::var(Var::Qm)).is_err());
    }

    #[test]
    fn sequential_and_parallel_products_agree() {
        let em = OrePoly::shift(Shift::Em);
        let en = OrePoly::shift(Shift::En);
        let a = &(&(&q(Var::Qm, 2) * &em) + &(&q(Var::Qn, -1) * &en)) + &s(3);
        let b = &(&em * &en) - &(&q(Var::Qm, 1) * &OrePoly::one());
        assert_eq!(a.mul_with(&b, Exec::Sequential), a.mul_with(&b, Exec::Parallel));
    }
}
