use std::fmt;
use std::ops::{Div, Mul};

use super::var::{Var, NVARS};

/// Exponent vector over the global variable universe. Exponents may be negative.
///
/// The derived `Ord` is lexicographic in variable order, which is the term order
/// used for printing, hashing and leading terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [i32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var, e: i32) -> Monomial {
        let mut m = Monomial::ONE;
        m.0[v.index()] = e;
        m
    }

    pub fn from_pairs(pairs: &[(Var, i32)]) -> Monomial {
        let mut m = Monomial::ONE;
        for &(v, e) in pairs {
            m.0[v.index()] += e;
        }
        m
    }

    #[inline]
    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn inv(&self) -> Monomial {
        let mut m = *self;
        m.0.iter_mut().for_each(|e| *e = -*e);
        m
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.0.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        m
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.0.iter_mut().zip(other.0.iter()) {
            *a = (*a).max(*b);
        }
        m
    }

    /// `true` if every exponent of `self` is at least the matching exponent of `other`.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn pow(&self, k: i32) -> Monomial {
        let mut m = *self;
        m.0.iter_mut().for_each(|e| *e *= k);
        m
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    #[inline]
    fn mul(mut self, rhs: Monomial) -> Monomial {
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a += *b;
        }
        self
    }
}

impl Div for Monomial {
    type Output = Monomial;
    #[inline]
    fn div(mut self, rhs: Monomial) -> Monomial {
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a -= *b;
        }
        self
    }
}

impl fmt::Display for Monomial {
    /// `s^a*Qm^b*Qn^c*tQ1^d` with zero exponents omitted; `1` for the unit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
