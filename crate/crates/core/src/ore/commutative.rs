use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use super::poly::{sum_tree, write_operator, OrePoly};
use super::shift::{Shift, ShiftExp};
use crate::arith::{RatFunc, Var};
use crate::error::{Error, Result};

/// Commutative polynomial in the shift symbols with coefficients free of `s`;
/// the image of an operator under `s = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CommutativeOperatorPoly {
    terms: Vec<(ShiftExp, RatFunc)>,
}

impl CommutativeOperatorPoly {
    pub fn zero() -> Self {
        CommutativeOperatorPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        CommutativeOperatorPoly::constant(RatFunc::one())
    }

    pub fn constant(c: RatFunc) -> Self {
        CommutativeOperatorPoly::from_terms([(ShiftExp::ZERO, c)])
    }

    pub fn shift(e: Shift) -> Self {
        CommutativeOperatorPoly::from_terms([(ShiftExp::single(e, 1), RatFunc::one())])
    }

    pub fn var(v: Var) -> Self {
        CommutativeOperatorPoly::constant(RatFunc::var(v))
    }

    pub fn from_terms<I: IntoIterator<Item = (ShiftExp, RatFunc)>>(iter: I) -> Self {
        let mut groups: FxHashMap<ShiftExp, Vec<RatFunc>> = FxHashMap::default();
        for (e, c) in iter {
            if !c.is_zero() {
                groups.entry(e).or_default().push(c);
            }
        }
        let mut terms: Vec<(ShiftExp, RatFunc)> =
            groups.into_iter().map(|(e, cs)| (e, sum_tree(cs))).filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        CommutativeOperatorPoly { terms }
    }

    pub fn terms(&self) -> &[(ShiftExp, RatFunc)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self, e: Shift) -> Option<u32> {
        self.terms.iter().map(|(x, _)| x.get(e)).max()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        CommutativeOperatorPoly::from_terms(self.terms.iter().map(|(e, x)| (*e, x * c)))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(CommutativeOperatorPoly::one(), |acc, _| &acc * self)
    }

    /// Leading coefficient in the descending term order.
    pub fn leading_coefficient(&self) -> Option<&RatFunc> {
        self.terms.first().map(|(_, c)| c)
    }

    /// `self` and `other` differ by a nonzero scalar factor: both have the same
    /// support and `self * lc(other) = other * lc(self)`.
    pub fn is_proportional(&self, other: &Self) -> bool {
        match (self.leading_coefficient(), other.leading_coefficient()) {
            (None, None) => true,
            (Some(a), Some(b)) => self.scale(b) == other.scale(a),
            _ => false,
        }
    }

    /// Substitutes values for some shift symbols.
    pub fn substitute_shifts(&self, values: &[(Shift, RatFunc)]) -> Result<Self> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let mut x = *e;
            let mut c = c.clone();
            for (sh, v) in values {
                let k = e.get(*sh);
                if k > 0 {
                    x.0[sh.index()] = 0;
                    c = &c * &v.pow(k as i32)?;
                }
            }
            out.push((x, c));
        }
        Ok(CommutativeOperatorPoly::from_terms(out))
    }

    /// Evaluates at a point where every occurring shift symbol is bound.
    pub fn evaluate(&self, values: &[(Shift, RatFunc)]) -> Result<RatFunc> {
        let r = self.substitute_shifts(values)?;
        match r.terms.as_slice() {
            [] => Ok(RatFunc::zero()),
            [(e, c)] if e.is_zero() => Ok(c.clone()),
            _ => Err(Error::Shape("unbound shift symbols remain".into())),
        }
    }

    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        let b = rhs.terms.iter().map(|(e, c)| (*e, if negate { -c } else { c.clone() }));
        CommutativeOperatorPoly::from_terms(self.terms.iter().cloned().chain(b))
    }
}

impl OrePoly {
    /// The specialization `s = 1`, after which shifts commute with coordinates.
    pub fn eval_at_s1(&self) -> Result<CommutativeOperatorPoly> {
        let mut terms = Vec::with_capacity(self.len());
        for (e, c) in self.terms() {
            let v = c.eval_s1().map_err(|err| match err {
                Error::PoleAtS1(_) => Error::PoleAtS1(format!("coefficient of {}: {}", e, c)),
                other => other,
            })?;
            terms.push((*e, v));
        }
        Ok(CommutativeOperatorPoly::from_terms(terms))
    }
}

impl<'a> Add<&'a CommutativeOperatorPoly> for &'a CommutativeOperatorPoly {
    type Output = CommutativeOperatorPoly;
    fn add(self, rhs: &CommutativeOperatorPoly) -> CommutativeOperatorPoly {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a CommutativeOperatorPoly> for &'a CommutativeOperatorPoly {
    type Output = CommutativeOperatorPoly;
    fn sub(self, rhs: &CommutativeOperatorPoly) -> CommutativeOperatorPoly {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a CommutativeOperatorPoly> for &'a CommutativeOperatorPoly {
    type Output = CommutativeOperatorPoly;
    fn mul(self, rhs: &CommutativeOperatorPoly) -> CommutativeOperatorPoly {
        CommutativeOperatorPoly::from_terms(
            self.terms.iter().flat_map(|(a, c)| rhs.terms.iter().map(move |(b, d)| (*a + *b, c * d))),
        )
    }
}

impl Neg for &CommutativeOperatorPoly {
    type Output = CommutativeOperatorPoly;
    fn neg(self) -> CommutativeOperatorPoly {
        CommutativeOperatorPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl fmt::Display for CommutativeOperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_operator(f, self.terms.iter().map(|(e, c)| (e, c)))
    }
}

impl fmt::Debug for CommutativeOperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
