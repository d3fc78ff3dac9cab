use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use super::monomial::Monomial;
use super::rational::Rational;
use super::var::{Var, NVARS};

/// Multivariate Laurent polynomial with rational coefficients over the global
/// variable universe.
///
/// Terms are kept sorted by descending lexicographic exponent vector, with no
/// zero coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> LaurentPoly {
        LaurentPoly::monomial(Monomial::ONE, c)
    }

    pub fn from_i64(c: i64) -> LaurentPoly {
        LaurentPoly::constant(Rational::from(c))
    }

    pub fn var(v: Var) -> LaurentPoly {
        LaurentPoly::monomial(Monomial::var(v, 1), Rational::one())
    }

    /// `v^e`; negative exponents allowed.
    pub fn var_pow(v: Var, e: i32) -> LaurentPoly {
        LaurentPoly::monomial(Monomial::var(v, e), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> LaurentPoly {
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> LaurentPoly {
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (m, c) in iter {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(x) => *x += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        LaurentPoly::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Monomial, Rational>) -> LaurentPoly {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        LaurentPoly { terms }
    }

    /// Trusted constructor: terms already sorted descending, distinct and nonzero.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, Rational)>) -> LaurentPoly {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        LaurentPoly { terms }
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading term under the descending lexicographic order.
    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    /// Coefficient of the monomial `m` (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(k, _)| m.cmp(k))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Componentwise minimum exponent over all terms (`ONE` for zero).
    pub fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m, _)) => it.fold(*m, |acc, (m, _)| acc.meet(m)),
        }
    }

    /// Componentwise maximum exponent over all terms (`ONE` for zero).
    pub fn max_exponents(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m, _)) => it.fold(*m, |acc, (m, _)| acc.join(m)),
        }
    }

    /// Highest exponent of `v`, or `None` for the zero polynomial.
    pub fn degree(&self, v: Var) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.exp(v)).max()
    }

    /// `true` if `v` occurs with a nonzero exponent.
    pub fn uses(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) != 0)
    }

    /// Bit mask of the variables that occur.
    pub fn var_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (m, _) in &self.terms {
            for i in 0..NVARS {
                if m.0[i] != 0 {
                    mask |= 1 << i;
                }
            }
        }
        mask
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Multiplies by a monomial; order is preserved.
    pub fn mul_monomial(&self, mono: &Monomial) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m * *mono, c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return LaurentPoly::monomial(m.pow(k as i32), c.pow(k as i32));
        }
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Applies a monomial map to every term, merging collisions.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> LaurentPoly {
        let mut terms: Vec<_> = self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        if terms.windows(2).all(|w| w[0].0 != w[1].0) {
            return LaurentPoly { terms };
        }
        LaurentPoly::from_terms(terms)
    }

    /// Applies a map that is injective on monomials (a unimodular exponent change),
    /// so no merging is needed.
    pub fn map_monomials_injective(&self, f: impl Fn(&Monomial) -> Monomial) -> LaurentPoly {
        let mut terms: Vec<_> = self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        debug_assert!(terms.windows(2).all(|w| w[0].0 != w[1].0));
        LaurentPoly { terms }
    }

    /// Dilation `v -> s^k v`: the `s`-exponent of each term grows by `k` times its `v`-exponent.
    pub fn dilate(&self, v: Var, k: i32) -> LaurentPoly {
        if k == 0 || v == Var::S {
            return self.clone();
        }
        let i = v.index();
        self.map_monomials_injective(|m| {
            let mut out = *m;
            out.0[0] += k * m.0[i];
            out
        })
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> LaurentPoly {
        let (i, j) = (a.index(), b.index());
        self.map_monomials_injective(|m| {
            let mut out = *m;
            out.0.swap(i, j);
            out
        })
    }

    /// Replaces each listed variable by a coefficient times a monomial.
    pub fn substitute_monomials(&self, bindings: &[(Var, Rational, Monomial)]) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut mono = *m;
            let mut coeff = c.clone();
            for (v, bc, bm) in bindings {
                let e = m.exp(*v);
                if e == 0 {
                    continue;
                }
                mono.0[v.index()] = 0;
                mono = mono * bm.pow(e);
                if !bc.is_one() {
                    coeff = &coeff * &bc.pow(e);
                }
            }
            (mono, coeff)
        }))
    }

    /// Sets `v` to a nonzero rational value.
    pub fn specialize(&self, v: Var, value: &Rational) -> LaurentPoly {
        self.substitute_monomials(&[(v, value.clone(), Monomial::ONE)])
    }

    /// Sum of coefficients grouped by the remaining monomial after dropping `v`,
    /// i.e. evaluation at `v = 1`.
    pub fn at_one(&self, v: Var) -> LaurentPoly {
        let i = v.index();
        self.map_monomials(|m| {
            let mut out = *m;
            out.0[i] = 0;
            out
        })
    }

    fn merge(&self, other: &LaurentPoly, negate_other: bool) -> LaurentPoly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
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
            let c = if negate_other { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        LaurentPoly { terms: out }
    }

    /// Writes the polynomial; `spaced` selects ` + `/` - ` separators.
    fn write_terms(&self, f: &mut fmt::Formatter<'_>, spaced: bool) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg, spaced) {
                (0, true, _) => f.write_str("-")?,
                (0, false, _) => {}
                (_, true, true) => f.write_str(" - ")?,
                (_, false, true) => f.write_str(" + ")?,
                (_, true, false) => f.write_str("-")?,
                (_, false, false) => f.write_str("+")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", a, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form: `s^5+s^3-2*Qm^-1`. The alternate flag (`{:#}`)
    /// spaces the separators: `s^5 + s^3 - 2*Qm^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, f.alternate())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, false)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.is_monomial() {
            let (m, c) = &rhs.terms[0];
            return self.mul_monomial(m).scale(c);
        }
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return rhs.mul_monomial(m).scale(c);
        }
        let mut acc: FxHashMap<Monomial, Rational> =
            FxHashMap::with_capacity_and_hasher(self.len() * rhs.len() / 2 + 1, Default::default());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca * cb;
                match acc.get_mut(&(*ma * *mb)) {
                    Some(x) => *x += &c,
                    None => {
                        acc.insert(*ma * *mb, c);
                    }
                }
            }
        }
        LaurentPoly::from_map(acc)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for t in self.terms.iter_mut() {
            t.1 = -std::mem::take(&mut t.1);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        LaurentPoly::from_terms(iter.flat_map(|p| p.terms))
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::from_i64(c)
    }
}

impl From<Var> for LaurentPoly {
    fn from(v: Var) -> Self {
        LaurentPoly::var(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> LaurentPoly {
        LaurentPoly::var(Var::S)
    }

    #[test]
    fn difference_of_squares() {
        let sinv = LaurentPoly::var_pow(Var::S, -1);
        let p = (s() - sinv.clone()) * (s() + sinv);
        assert_eq!(p.to_string(), "s^2-s^-2");
    }

    #[test]
    fn additive_inverse_is_zero() {
        let x = LaurentPoly::monomial(Monomial::from_pairs(&[(Var::S, 3), (Var::Qm, -2)]), Rational::one());
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn phi2_phi6_expansion() {
        let q4 = LaurentPoly::var_pow(Var::Qm, 4);
        let phi = |k: i32| LaurentPoly::one() - LaurentPoly::var_pow(Var::S, k) * q4.clone();
        let p = phi(2) * phi(6);
        assert_eq!(p.to_string(), "s^8*Qm^8-s^6*Qm^4-s^2*Qm^4+1");
        assert_eq!(format!("{:#}", p), "s^8*Qm^8 - s^6*Qm^4 - s^2*Qm^4 + 1");
    }

    #[test]
    fn dilation_moves_s_exponent() {
        let p = LaurentPoly::var_pow(Var::Qm, 2) + LaurentPoly::var_pow(Var::Qn, -1);
        let d = p.dilate(Var::Qm, 3);
        assert_eq!(d.to_string(), "s^6*Qm^2+Qn^-1");
    }

    #[test]
    fn evaluation_at_one_merges() {
        let p = s() * LaurentPoly::var(Var::Qm) - LaurentPoly::var(Var::Qm);
        assert!(p.at_one(Var::S).is_zero());
    }
}
