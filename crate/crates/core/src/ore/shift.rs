use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::arith::Var;

/// Number of shift generators.
pub const NSHIFTS: usize = 3;

/// A shift generator. Each one dilates exactly one coordinate variable:
/// `Em` acts on `Qm`, `En` on `Qn`, `tE1` on `tQ1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Shift {
    Em,
    En,
    TE1,
}

impl Shift {
    pub const ALL: [Shift; NSHIFTS] = [Shift::Em, Shift::En, Shift::TE1];

    #[inline]
    pub const fn index(self) -> usize {
        self as usize
    }

    /// The coordinate variable this generator dilates.
    pub const fn paired(self) -> Var {
        match self {
            Shift::Em => Var::Qm,
            Shift::En => Var::Qn,
            Shift::TE1 => Var::TQ1,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Shift::Em => "Em",
            Shift::En => "En",
            Shift::TE1 => "tE1",
        }
    }

    pub fn from_name(name: &str) -> Option<Shift> {
        Shift::ALL.iter().copied().find(|s| s.name() == name)
    }

    /// The generator that shifts `v`, if any.
    pub fn for_var(v: Var) -> Option<Shift> {
        Shift::ALL.iter().copied().find(|s| s.paired() == v)
    }
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The fixed commutation data of the operator algebra: every shift generator
/// `E` and its paired variable `Q` satisfy `E Q = s Q E`; all other pairs
/// commute.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OreSignature;

impl OreSignature {
    pub fn shifts(&self) -> &'static [Shift] {
        &Shift::ALL
    }

    pub fn paired(&self, e: Shift) -> Var {
        e.paired()
    }

    pub fn dilation_unit(&self) -> Var {
        Var::S
    }
}

/// Exponent vector of a monomial in the shift generators.
///
/// Ordered by total degree, then lexicographically; operator terms are stored
/// and printed in descending order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ShiftExp(pub [u32; NSHIFTS]);

impl ShiftExp {
    pub const ZERO: ShiftExp = ShiftExp([0; NSHIFTS]);

    pub fn single(e: Shift, k: u32) -> ShiftExp {
        let mut x = ShiftExp::ZERO;
        x.0[e.index()] = k;
        x
    }

    #[inline]
    pub fn get(&self, e: Shift) -> u32 {
        self.0[e.index()]
    }

    pub fn with(mut self, e: Shift, k: u32) -> ShiftExp {
        self.0[e.index()] = k;
        self
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Dilation amounts `(Q, a)` applied to a coefficient pushed through `E^self`.
    pub fn dilations(&self) -> [(Var, i32); NSHIFTS] {
        let mut out = [(Var::Qm, 0); NSHIFTS];
        for e in Shift::ALL {
            out[e.index()] = (e.paired(), self.get(e) as i32);
        }
        out
    }
}

impl Add for ShiftExp {
    type Output = ShiftExp;
    fn add(mut self, rhs: ShiftExp) -> ShiftExp {
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a += *b;
        }
        self
    }
}

impl Ord for ShiftExp {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ShiftExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ShiftExp {
    /// `Em^2*En` style; `1` for the empty monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in Shift::ALL {
            let k = self.get(e);
            if k == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if k == 1 {
                write!(f, "{}", e)?;
            } else {
                write!(f, "{}^{}", e, k)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
