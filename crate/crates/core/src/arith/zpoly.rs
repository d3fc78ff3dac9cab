use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::rational::{lcm_denominators, Rational};
use super::var::{Var, NVARS};

/// Sparse Laurent polynomial with integer coefficients.
///
/// Same term order as [`LaurentPoly`]: descending lexicographic, no zero
/// coefficients. This is the representation used for numerators and
/// denominators of rational functions and for all gcd work.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl ZPoly {
    pub fn zero() -> ZPoly {
        ZPoly { terms: Vec::new() }
    }

    pub fn one() -> ZPoly {
        ZPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> ZPoly {
        ZPoly::monomial(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial, c: BigInt) -> ZPoly {
        if c.is_zero() {
            ZPoly::zero()
        } else {
            ZPoly { terms: vec![(m, c)] }
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> ZPoly {
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        for (m, c) in iter {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(x) => *x += c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        ZPoly::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Monomial, BigInt>) -> ZPoly {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        ZPoly { terms }
    }

    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, BigInt)>) -> ZPoly {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        ZPoly { terms }
    }

    /// Clears denominators: returns `(z, d)` with `p = z / d`, `d > 0`.
    pub fn from_laurent(p: &LaurentPoly) -> (ZPoly, BigInt) {
        let d = lcm_denominators(p.terms().iter().map(|(_, c)| c));
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let n = if d.is_one() { c.numer().clone() } else { c.numer() * (&d / c.denom()) };
                (*m, n)
            })
            .collect();
        (ZPoly { terms }, d)
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_sorted_unchecked(
            self.terms.iter().map(|(m, c)| (*m, Rational::from_integer(c.clone()))).collect(),
        )
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, BigInt)] {
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    /// Sign of the leading coefficient (0 for the zero polynomial).
    pub fn leading_sign(&self) -> i32 {
        match self.terms.first() {
            None => 0,
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m, _)) => it.fold(*m, |acc, (m, _)| acc.meet(m)),
        }
    }

    pub fn max_exponents(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m, _)) => it.fold(*m, |acc, (m, _)| acc.join(m)),
        }
    }

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

    pub fn degree(&self, v: Var) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.exp(v)).max()
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        ZPoly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Divides every coefficient by `c`, which must divide them exactly.
    pub fn div_exact_int(&self, c: &BigInt) -> ZPoly {
        if c.is_one() {
            return self.clone();
        }
        ZPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| {
                    debug_assert!((x % c).is_zero());
                    (*m, x / c)
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> ZPoly {
        if mono.is_one() {
            return self.clone();
        }
        ZPoly { terms: self.terms.iter().map(|(m, c)| (*m * *mono, c.clone())).collect() }
    }

    /// Applies an exponent map that is injective on the support.
    pub fn map_monomials_injective(&self, f: impl Fn(&Monomial) -> Monomial) -> ZPoly {
        let mut terms: Vec<_> = self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        debug_assert!(terms.windows(2).all(|w| w[0].0 != w[1].0));
        ZPoly { terms }
    }

    /// Applies an arbitrary exponent map, merging collisions.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> ZPoly {
        ZPoly::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    pub fn pow(&self, k: u32) -> ZPoly {
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return ZPoly::monomial(m.pow(k as i32), c.pow(k));
        }
        let mut result = ZPoly::one();
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

    /// Sets every variable of `mask` to 1, merging the terms that collide.
    pub fn at_one(&self, mask: u32) -> ZPoly {
        self.map_monomials(|m| {
            let mut out = *m;
            for i in 0..NVARS {
                if mask & (1 << i) != 0 {
                    out.0[i] = 0;
                }
            }
            out
        })
    }

    /// Splits off the monomial content: returns `(m, q)` with `self = m * q`
    /// and every variable appearing in `q` with minimum exponent zero.
    pub fn split_monomial_content(&self) -> (Monomial, ZPoly) {
        let m = self.min_exponents();
        if m.is_one() {
            (m, self.clone())
        } else {
            (m, self.mul_monomial(&m.inv()))
        }
    }

    /// Groups terms by their exponents in the variables of `mask`; each
    /// coefficient is returned with those variables removed.
    pub fn coefficients_in(&self, mask: u32) -> Vec<ZPoly> {
        let mut groups: FxHashMap<Monomial, Vec<(Monomial, BigInt)>> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut key = Monomial::ONE;
            let mut rest = *m;
            for i in 0..NVARS {
                if mask & (1 << i) != 0 {
                    key.0[i] = m.0[i];
                    rest.0[i] = 0;
                }
            }
            groups.entry(key).or_default().push((rest, c.clone()));
        }
        groups
            .into_values()
            .map(|terms| {
                // Removing variables keeps the relative order of the remaining ones.
                ZPoly::from_sorted_unchecked(terms)
            })
            .collect()
    }

    /// Exact division in the Laurent ring. Returns `None` when `d` does not
    /// divide `self`.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if d.is_monomial() {
            let (dm, dc) = &d.terms[0];
            let inv = dm.inv();
            let mut terms = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                terms.push((*m * inv, q));
            }
            return Some(ZPoly { terms });
        }
        // Quotient exponents are boxed in by the per-variable degree ranges.
        let lo = self.min_exponents() / d.min_exponents();
        let hi = self.max_exponents() / d.max_exponents();
        if (0..NVARS).any(|i| lo.0[i] > hi.0[i]) {
            return None;
        }
        let (dlm, dlc) = &d.terms[0];
        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m / *dlm;
            if (0..NVARS).any(|i| qm.0[i] < lo.0[i] || qm.0[i] > hi.0[i]) {
                return None;
            }
            let (qc, r) = c.div_rem(dlc);
            if !r.is_zero() {
                return None;
            }
            for (tm, tc) in &d.terms[1..] {
                let key = *tm * qm;
                let prod = tc * &qc;
                match rem.get_mut(&key) {
                    Some(x) => {
                        *x -= prod;
                        if x.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -prod);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(ZPoly { terms: quot })
    }

    /// Value mod `p` at the point given per variable (`point[i]` for variable `i`).
    /// Negative exponents use modular inverses; the point must avoid zero where needed.
    pub fn eval_mod(&self, p: u64, point: &[u64; NVARS]) -> u64 {
        let mut powers: [Vec<u64>; NVARS] = Default::default();
        let lo = self.min_exponents();
        let hi = self.max_exponents();
        for i in 0..NVARS {
            powers[i] = power_table(point[i], lo.0[i], hi.0[i], p);
        }
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut t = bigint_mod(c, p);
            for i in 0..NVARS {
                if m.0[i] != 0 || lo.0[i] != 0 {
                    t = t * powers[i][(m.0[i] - lo.0[i]) as usize] % p;
                }
            }
            acc = (acc + t) % p;
        }
        acc
    }

    fn merge(&self, other: &ZPoly, negate_other: bool) -> ZPoly {
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
        ZPoly { terms: out }
    }
}

/// `x^lo .. x^hi` mod `p`, indexed from `lo`.
fn power_table(x: u64, lo: i32, hi: i32, p: u64) -> Vec<u64> {
    let n = (hi - lo + 1).max(1) as usize;
    let mut out = Vec::with_capacity(n);
    let base = if lo < 0 { pow_mod(inv_mod(x, p), (-lo) as u64, p) } else { pow_mod(x, lo as u64, p) };
    let mut cur = base;
    for _ in 0..n {
        out.push(cur);
        cur = cur * x % p;
    }
    out
}

pub(crate) fn bigint_mod(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    r.iter_u64_digits().next().unwrap_or(0)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(x: u64, p: u64) -> u64 {
    debug_assert!(x % p != 0);
    pow_mod(x, p - 2, p)
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() {
            write!(f, "{:#}", self.to_laurent())
        } else {
            write!(f, "{}", self.to_laurent())
        }
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

impl<'a> Add<&'a ZPoly> for &'a ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a ZPoly> for &'a ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a ZPoly> for &'a ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        if rhs.is_monomial() {
            let (m, c) = &rhs.terms[0];
            return self.mul_monomial(m).scale(c);
        }
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return rhs.mul_monomial(m).scale(c);
        }
        let mut acc: FxHashMap<Monomial, BigInt> =
            FxHashMap::with_capacity_and_hasher(self.len() * rhs.len() / 2 + 1, Default::default());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let key = *ma * *mb;
                let c = ca * cb;
                match acc.get_mut(&key) {
                    Some(x) => *x += c,
                    None => {
                        acc.insert(key, c);
                    }
                }
            }
        }
        ZPoly::from_map(acc)
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(mut self) -> ZPoly {
        for t in self.terms.iter_mut() {
            t.1 = -std::mem::take(&mut t.1);
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(p: &LaurentPoly) -> ZPoly {
        ZPoly::from_laurent(p).0
    }

    #[test]
    fn exact_division_recovers_factor() {
        let s = LaurentPoly::var(Var::S);
        let q = LaurentPoly::var(Var::Qm);
        let a = zp(&(s.clone() * q.clone() - LaurentPoly::one()));
        let b = zp(&(s.clone() * s.clone() + q.clone() + LaurentPoly::from_i64(3)));
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(b.div_exact(&a), None);
    }

    #[test]
    fn divisor_with_more_terms_than_dividend() {
        let s = LaurentPoly::var(Var::S);
        let one = LaurentPoly::one();
        let d = zp(&(s.pow(2) + s.clone() + one.clone()));
        let prod = zp(&(s.pow(3) - one.clone()));
        assert_eq!(prod.div_exact(&d), Some(zp(&(s - one))));
    }

    #[test]
    fn laurent_division() {
        let s = LaurentPoly::var(Var::S);
        let si = LaurentPoly::var_pow(Var::S, -1);
        let a = zp(&(s.clone() - si.clone()));
        let b = zp(&(s.pow(2) - si.pow(2)));
        let q = b.div_exact(&a).unwrap();
        assert_eq!(q.to_string(), "s+s^-1");
    }

    #[test]
    fn modular_evaluation() {
        let p = 1_000_003u64;
        let s = LaurentPoly::var(Var::S);
        let si = LaurentPoly::var_pow(Var::S, -1);
        let z = zp(&(s.clone() * LaurentPoly::from_i64(3) - si));
        let mut pt = [1u64; NVARS];
        pt[0] = 5;
        let expect = (15 + p - inv_mod(5, p)) % p;
        assert_eq!(z.eval_mod(p, &pt), expect);
    }
}
