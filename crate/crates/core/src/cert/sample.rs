//! Seeded random operators for the closure and division property checks.

use rand::rngs::StdRng;
use rand::Rng;

use crate::arith::{LaurentPoly, RatFunc, Var};
use crate::ore::{OrePoly, Shift, ShiftExp};

const VARS: [Var; 3] = [Var::S, Var::Qm, Var::Qn];

/// A Laurent polynomial with up to three terms, small exponents and
/// coefficients in `-3..=3`.
pub fn random_laurent(rng: &mut StdRng) -> LaurentPoly {
    let terms = rng.gen_range(1..=3);
    let mut acc = LaurentPoly::zero();
    for _ in 0..terms {
        let mut t = LaurentPoly::from_i64(rng.gen_range(-3..=3));
        for v in VARS {
            t = &t * &LaurentPoly::var_pow(v, rng.gen_range(-2..=2));
        }
        acc = &acc + &t;
    }
    acc
}

/// A nonzero rational function; a fraction about half of the time.
pub fn random_ratfunc(rng: &mut StdRng) -> RatFunc {
    loop {
        let num = random_laurent(rng);
        if num.is_zero() {
            continue;
        }
        if rng.gen_bool(0.5) {
            return RatFunc::from_laurent(&num);
        }
        let den = random_laurent(rng);
        if let Ok(x) = RatFunc::new(&num, &den) {
            return x;
        }
    }
}

/// `sum_{k <= deg} c_k e^k` with a nonzero leading coefficient; lower
/// coefficients vanish with probability 1/4.
pub fn random_univariate(rng: &mut StdRng, e: Shift, deg: u32) -> OrePoly {
    OrePoly::from_terms((0..=deg).filter_map(|k| {
        if k < deg && rng.gen_bool(0.25) {
            None
        } else {
            Some((ShiftExp::single(e, k), random_ratfunc(rng)))
        }
    }))
}
