use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::gcd::gcd_cofactors;
use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::rational::Rational;
use super::var::Var;
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// Canonical element of `Q(s, Qm, Qn, tQ1, ...)`.
///
/// Stored as a reduced fraction of integer Laurent polynomials: the
/// denominator has positive leading coefficient and minimal exponent zero in
/// every variable, the numerator carries all monomial content, and numerator
/// and denominator are coprime (integer contents included). Equality is
/// therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: ZPoly,
    den: ZPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc { num: ZPoly::zero(), den: ZPoly::one() }
    }

    pub fn one() -> RatFunc {
        RatFunc { num: ZPoly::one(), den: ZPoly::one() }
    }

    pub fn from_i64(c: i64) -> RatFunc {
        RatFunc { num: ZPoly::constant(BigInt::from(c)), den: ZPoly::one() }
    }

    pub fn from_rational(c: &Rational) -> RatFunc {
        RatFunc { num: ZPoly::constant(c.numer().clone()), den: ZPoly::constant(c.denom().clone()) }
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> RatFunc {
        RatFunc { num: ZPoly::monomial(Monomial::var(v, e), BigInt::one()), den: ZPoly::one() }
    }

    pub fn monomial(m: Monomial, c: &Rational) -> RatFunc {
        RatFunc::from_laurent(&LaurentPoly::monomial(m, c.clone()))
    }

    pub fn from_laurent(p: &LaurentPoly) -> RatFunc {
        // Clearing denominators by their lcm leaves a numerator content coprime to it.
        let (z, d) = ZPoly::from_laurent(p);
        if z.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: z, den: ZPoly::constant(d) }
    }

    /// Reduced fraction `num / den`.
    pub fn new(num: &LaurentPoly, den: &LaurentPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (zn, dn) = ZPoly::from_laurent(num);
        let (zd, dd) = ZPoly::from_laurent(den);
        // num/den = (zn/dn) / (zd/dd) = (zn*dd) / (zd*dn)
        RatFunc::from_zpolys(zn.scale(&dd), zd.scale(&dn))
    }

    /// Reduced fraction of two integer polynomials.
    pub fn from_zpolys(num: ZPoly, den: ZPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let (_, n, d) = gcd_cofactors(&num, &den);
        Ok(RatFunc::finish(n, d))
    }

    /// Moves the denominator's monomial content to the numerator and fixes the
    /// sign; the caller guarantees coprimality.
    fn finish(mut num: ZPoly, den: ZPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (m, mut den) = den.split_monomial_content();
        if !m.is_one() {
            num = num.mul_monomial(&m.inv());
        }
        if den.leading_sign() < 0 {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    #[inline]
    pub fn numer(&self) -> &ZPoly {
        &self.num
    }

    #[inline]
    pub fn denom(&self) -> &ZPoly {
        &self.den
    }

    pub fn num_laurent(&self) -> LaurentPoly {
        self.num.to_laurent()
    }

    pub fn den_laurent(&self) -> LaurentPoly {
        self.den.to_laurent()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `true` when the denominator is an integer.
    pub fn is_laurent(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        let d = self.den.as_constant()?;
        let p = self.num.to_laurent();
        if d.is_one() {
            Some(p)
        } else {
            Some(p.scale(&Rational::new(BigInt::one(), d)))
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(Rational::new(n, d))
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Sign of the leading numerator coefficient.
    pub fn leading_sign(&self) -> i32 {
        match self.num.leading() {
            None => 0,
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }

    pub fn var_mask(&self) -> u32 {
        self.num.var_mask() | self.den.var_mask()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.var_mask() & (1 << v.index()) != 0
    }

    /// Total number of stored terms, a rough size measure.
    pub fn size(&self) -> usize {
        self.num.len() + self.den.len()
    }

    /// Equality by cross-multiplication; agrees with `==` on canonical values.
    pub fn eq_cross(&self, other: &RatFunc) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::finish(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i32) -> Result<RatFunc> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let k = k as u32;
        // Powers of coprime polynomials stay coprime.
        Ok(RatFunc::finish(self.num.pow(k), self.den.pow(k)))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        self * &RatFunc::from_rational(c)
    }

    /// Dilation `v -> s^k v`. This is a field automorphism, so no gcd is needed.
    pub fn dilate(&self, v: Var, k: i32) -> RatFunc {
        if k == 0 || self.is_constant() {
            return self.clone();
        }
        let i = v.index();
        let f = |m: &Monomial| {
            let mut out = *m;
            out.0[0] += k * m.0[i];
            out
        };
        RatFunc::finish(self.num.map_monomials_injective(f), self.den.map_monomials_injective(f))
    }

    /// Simultaneous dilations `v -> s^k v` for each listed pair.
    pub fn dilate_multi(&self, ks: &[(Var, i32)]) -> RatFunc {
        if self.is_constant() || ks.iter().all(|&(_, k)| k == 0) {
            return self.clone();
        }
        let f = |m: &Monomial| {
            let mut out = *m;
            for &(v, k) in ks {
                out.0[0] += k * m.0[v.index()];
            }
            out
        };
        RatFunc::finish(self.num.map_monomials_injective(f), self.den.map_monomials_injective(f))
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> RatFunc {
        let (i, j) = (a.index(), b.index());
        let f = |m: &Monomial| {
            let mut out = *m;
            out.0.swap(i, j);
            out
        };
        RatFunc::finish(self.num.map_monomials_injective(f), self.den.map_monomials_injective(f))
    }

    /// Substitutes Laurent polynomials for variables.
    pub fn substitute(&self, bindings: &[(Var, LaurentPoly)]) -> Result<RatFunc> {
        for (v, b) in bindings {
            if b.is_zero() {
                return Err(Error::SubstitutionPole(format!("{} bound to 0", v)));
            }
        }
        if bindings.iter().all(|(_, b)| b.is_monomial()) {
            let mono: Vec<(Var, Rational, Monomial)> = bindings
                .iter()
                .map(|(v, b)| {
                    let (m, c) = &b.terms()[0];
                    (*v, c.clone(), *m)
                })
                .collect();
            let num = self.num.to_laurent().substitute_monomials(&mono);
            let den = self.den.to_laurent().substitute_monomials(&mono);
            if den.is_zero() {
                return Err(Error::SubstitutionPole(format!("denominator {} vanishes", self.den)));
            }
            return RatFunc::new(&num, &den);
        }
        let values: Vec<(Var, RatFunc)> = bindings.iter().map(|(v, b)| (*v, RatFunc::from_laurent(b))).collect();
        let num = substitute_poly(&self.num, &values)?;
        let den = substitute_poly(&self.den, &values)?;
        if den.is_zero() {
            return Err(Error::SubstitutionPole(format!("denominator {} vanishes", self.den)));
        }
        num.checked_div(&den)
    }

    /// Binds variables to integer powers of `s` (e.g. `Qm -> s^m`).
    pub fn bind_s_powers(&self, bindings: &[(Var, i32)]) -> Result<RatFunc> {
        let b: Vec<(Var, LaurentPoly)> =
            bindings.iter().map(|&(v, e)| (v, LaurentPoly::var_pow(Var::S, e))).collect();
        self.substitute(&b)
    }

    /// Specialization `s = 1`. A reduced fraction has no common `(s-1)` factor,
    /// so a denominator vanishing at `s = 1` is a genuine pole.
    pub fn eval_s1(&self) -> Result<RatFunc> {
        let mask = 1u32 << Var::S.index();
        if self.var_mask() & mask == 0 {
            return Ok(self.clone());
        }
        let den = self.den.at_one(mask);
        if den.is_zero() {
            return Err(Error::PoleAtS1(format!("{}", self)));
        }
        RatFunc::from_zpolys(self.num.at_one(mask), den)
    }

    fn add_impl(&self, other: &RatFunc, negate: bool) -> RatFunc {
        let c = if negate { -&other.num } else { other.num.clone() };
        if self.is_zero() {
            return RatFunc { num: c, den: other.den.clone() };
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b, d) = (&self.num, &self.den, &other.den);
        if b == d {
            let n = a + &c;
            if b.is_one() || n.is_zero() {
                return RatFunc::finish(n, b.clone());
            }
            let (_, n, den) = gcd_cofactors(&n, b);
            return RatFunc::finish(n, den);
        }
        if b.is_one() {
            // a + c/d is already reduced: gcd(a*d + c, d) = gcd(c, d) = 1.
            return RatFunc::finish(&(a * d) + &c, d.clone());
        }
        if d.is_one() {
            return RatFunc::finish(&(&c * b) + a, b.clone());
        }
        let (g, b1, d1) = gcd_cofactors(b, d);
        let t = &(a * &d1) + &(&c * &b1);
        if t.is_zero() {
            return RatFunc::zero();
        }
        if g.is_one() {
            return RatFunc::finish(t, &b1 * &d1);
        }
        // Only the common part g can share factors with t.
        let (_, t1, g1) = gcd_cofactors(&t, &g);
        RatFunc::finish(t1, &(&b1 * &d1) * &g1)
    }

    fn mul_impl(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let (a, b, c, d) = (&self.num, &self.den, &other.num, &other.den);
        let (a1, d1) = if d.is_one() { (a.clone(), d.clone()) } else { cancel(a, d) };
        let (c1, b1) = if b.is_one() { (c.clone(), b.clone()) } else { cancel(c, b) };
        RatFunc::finish(&a1 * &c1, &b1 * &d1)
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, spaced: bool) -> fmt::Result {
        let show = |p: &dyn fmt::Display, f: &mut fmt::Formatter<'_>| {
            if spaced {
                write!(f, "{:#}", DisplayAlt(p))
            } else {
                write!(f, "{}", p)
            }
        };
        if self.den.is_one() {
            return show(&self.num, f);
        }
        if let Some(d) = self.den.as_constant() {
            // Integer denominator: print as a polynomial with rational coefficients.
            let p = self.num.to_laurent().scale(&Rational::new(BigInt::one(), d));
            return show(&p, f);
        }
        f.write_str("(")?;
        show(&self.num, f)?;
        f.write_str(")/(")?;
        show(&self.den, f)?;
        f.write_str(")")
    }
}

/// Forwards the alternate flag through a trait object.
struct DisplayAlt<'a>(&'a dyn fmt::Display);

impl fmt::Display for DisplayAlt<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() {
            write!(f, "{:#}", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Removes the gcd of `x` and `y`, returning both cofactors.
fn cancel(x: &ZPoly, y: &ZPoly) -> (ZPoly, ZPoly) {
    let (_, x1, y1) = gcd_cofactors(x, y);
    (x1, y1)
}

fn substitute_poly(p: &ZPoly, values: &[(Var, RatFunc)]) -> Result<RatFunc> {
    let mut acc = RatFunc::zero();
    for (m, c) in p.terms() {
        let mut rest = *m;
        let mut term = RatFunc::from_rational(&Rational::from_integer(c.clone()));
        for (v, val) in values {
            let e = m.exp(*v);
            if e != 0 {
                rest.0[v.index()] = 0;
                term = &term * &val.pow(e)?;
            }
        }
        term = &term * &RatFunc::monomial(rest, &Rational::one());
        acc = &acc + &term;
    }
    Ok(acc)
}

impl fmt::Display for RatFunc {
    /// `num` when the denominator is 1, `(num)/(den)` otherwise. The alternate
    /// flag spaces the term separators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, f.alternate())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, false)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.mul_impl(rhs)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from_i64(c)
    }
}

impl From<&Rational> for RatFunc {
    fn from(c: &Rational) -> Self {
        RatFunc::from_rational(c)
    }
}

impl From<&LaurentPoly> for RatFunc {
    fn from(p: &LaurentPoly) -> Self {
        RatFunc::from_laurent(p)
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_laurent(&p)
    }
}

impl From<Var> for RatFunc {
    fn from(v: Var) -> Self {
        RatFunc::var(v)
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> RatFunc {
        iter.fold(RatFunc::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for RatFunc {
    fn product<I: Iterator<Item = RatFunc>>(iter: I) -> RatFunc {
        iter.fold(RatFunc::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> LaurentPoly {
        LaurentPoly::var(Var::S)
    }

    fn one() -> LaurentPoly {
        LaurentPoly::one()
    }

    fn rf(num: LaurentPoly, den: LaurentPoly) -> RatFunc {
        RatFunc::new(&num, &den).unwrap()
    }

    fn braces(n: i32) -> LaurentPoly {
        LaurentPoly::var_pow(Var::S, n) - LaurentPoly::var_pow(Var::S, -n)
    }

    #[test]
    fn common_factor_cancels() {
        let x = rf(s().pow(2) - one(), s() - one());
        assert_eq!(x.to_string(), "s+1");
    }

    #[test]
    fn zero_numerator() {
        let den = s().pow(3) * LaurentPoly::var(Var::Qm);
        assert!(rf(LaurentPoly::zero(), den).is_zero());
    }

    #[test]
    fn quantum_two_over_one() {
        assert_eq!(rf(braces(2), braces(1)).to_string(), "s+s^-1");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RatFunc::new(&one(), &LaurentPoly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn substitution_examples() {
        let qn = LaurentPoly::var(Var::Qn);
        let x = RatFunc::from_laurent(&(qn.clone() + LaurentPoly::var_pow(Var::Qn, -1)));
        let y = x.substitute(&[(Var::Qn, s().pow(2))]).unwrap();
        assert_eq!(y.to_string(), "s^2+s^-2");

        let qm2 = LaurentPoly::var_pow(Var::Qm, 2);
        let x = rf(one(), one() - s().pow(2) * qm2.clone());
        let err = x.substitute(&[(Var::Qm, LaurentPoly::var_pow(Var::S, -1))]);
        assert!(matches!(err, Err(Error::SubstitutionPole(_))));

        let x = rf(s().pow(2) * qm2.clone(), one() - s().pow(6) * qm2.pow(2));
        let y = x.substitute(&[(Var::Qm, s().pow(3))]).unwrap();
        assert_eq!(y, rf(s().pow(8), one() - s().pow(18)));
    }

    #[test]
    fn evaluation_at_one() {
        let x = rf(one() - s().pow(2), one() - s().pow(4));
        assert_eq!(x.eval_s1().unwrap(), RatFunc::from_rational(&Rational::new(1.into(), 2.into())));
        let qn = LaurentPoly::var(Var::Qn) + LaurentPoly::var_pow(Var::Qn, -1);
        assert_eq!(RatFunc::from_laurent(&qn).eval_s1().unwrap(), RatFunc::from_laurent(&qn));
        let x = rf(one(), s() - one());
        assert!(matches!(x.eval_s1(), Err(Error::PoleAtS1(_))));
    }

    #[test]
    fn display_forms() {
        let half = RatFunc::from_rational(&Rational::new(1.into(), 2.into()));
        assert_eq!((&half * &RatFunc::var(Var::S)).to_string(), "1/2*s");
        let x = rf(s(), one() - s().pow(2));
        assert_eq!(x.to_string(), "(-s)/(s^2-1)");
        assert_eq!(format!("{:#}", x), "(-s)/(s^2 - 1)");
    }

    #[test]
    fn henrici_sum_matches_cross_multiplication() {
        let qm = LaurentPoly::var(Var::Qm);
        let a = rf(one(), (s() - one()) * (qm.clone() + one()));
        let b = rf(qm.clone(), (s() - one()) * (qm.clone() - s()));
        let sum = &a + &b;
        let direct = rf(
            (qm.clone() - s()) + qm.clone() * (qm.clone() + one()),
            (s() - one()) * (qm.clone() + one()) * (qm.clone() - s()),
        );
        assert_eq!(sum, direct);
        assert!((&sum - &direct).is_zero());
    }

    #[test]
    fn dilation_renormalizes() {
        let qm = LaurentPoly::var(Var::Qm);
        let x = rf(one(), one() - s().pow(2) * qm.pow(2));
        let y = x.dilate(Var::Qm, 1);
        assert_eq!(y, rf(one(), one() - s().pow(4) * qm.pow(2)));
        let z = rf(one(), qm.clone() - s());
        let w = z.dilate(Var::Qm, -2);
        assert_eq!(w, rf(one(), LaurentPoly::var_pow(Var::S, -2) * qm - s()));
    }
}
