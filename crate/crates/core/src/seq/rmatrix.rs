//! Summands of the colored R-matrices with odd colors `2m+1`, `2m'+1`, and the
//! closed forms of their shift ratios.

use super::qnum::pochhammer_s2;
use super::s_pow;
use crate::arith::{LaurentPoly, RatFunc, Var};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RSign {
    Plus,
    Minus,
}

/// Product of `(s^2)_k` over `ks`; `None` if some index is negative.
fn poch_product(ks: &[i64]) -> Option<LaurentPoly> {
    ks.iter().try_fold(LaurentPoly::one(), |acc, &k| Some(&acc * &pochhammer_s2(k)?))
}

/// `R^{+/-}(m, m', k1, k2, k3, k4)`; zero when any Pochhammer index is negative.
pub fn rmatrix_value(sign: RSign, m: i64, mp: i64, k: [i64; 4]) -> Result<RatFunc> {
    let [k1, k2, k3, k4] = k;
    let (exp, num_idx, den_idx, negate) = match sign {
        RSign::Plus => (
            -2 * (k2 - k1) * (k3 - k2) - (m + mp) * (k2 + k4 - k1 - k3),
            [m + k4 - k3, mp + k4 - k1],
            [k2 + k4 - k1 - k3, m + k2 - k1, mp + k3 - k2],
            false,
        ),
        RSign::Minus => (
            2 * (k3 - k4) * (k4 - k1) - (m + mp) * (k1 + k3 - k2 - k4),
            [m + k1 - k4, mp + k3 - k4],
            [k1 + k3 - k2 - k4, m + k2 - k3, mp + k2 - k1],
            (k1 + k3 - k2 - k4).rem_euclid(2) == 1,
        ),
    };
    let (Some(num), Some(den)) = (poch_product(&num_idx), poch_product(&den_idx)) else {
        return Ok(RatFunc::zero());
    };
    let num = &num * &s_pow(exp);
    let v = RatFunc::new(&num, &den)?;
    Ok(if negate { -&v } else { v })
}

/// Closed form of `E R^+ / R^+` (shift `m -> m+1`) as displayed.
pub fn ratio_e_closed(m: i64, k: [i64; 4]) -> Result<RatFunc> {
    let [k1, k2, k3, k4] = k;
    let one = LaurentPoly::one();
    let num = &s_pow(k1 + k3 - k2 - k4) * &(&one - &s_pow(2 * (m + 1 - k3 + k4)));
    RatFunc::new(&num, &(&one - &s_pow(2 * (m + 1 + k1 - k2))))
}

/// Closed form of `E' R^+ / R^+` (shift `m' -> m'+1`) as displayed.
pub fn ratio_eprime_closed(mp: i64, k: [i64; 4]) -> Result<RatFunc> {
    let [k1, k2, k3, k4] = k;
    let one = LaurentPoly::one();
    let num = &s_pow(k1 + k3 - k2 - k4) * &(&one - &s_pow(2 * (mp + 1 - k1 + k4)));
    RatFunc::new(&num, &(&one - &s_pow(2 * (mp + 1 - k2 + k3))))
}

const TQ: [Var; 4] = [Var::TQ1, Var::TQ2, Var::TQ3, Var::TQ4];

fn tq(j: usize, e: i32) -> RatFunc {
    RatFunc::var_pow(TQ[j], e)
}

/// `1 - s^2 * Q^2 * tQ_a^2 / tQ_b^2`, the image of `1 - s^(2(m+1+k_a-k_b))`
/// under `s^m -> Q`, `s^k -> tQ`.
fn one_minus(q: Var, a: usize, b: usize) -> RatFunc {
    let t = &(&(&RatFunc::var_pow(Var::S, 2) * &RatFunc::var_pow(q, 2)) * &tq(a, 2)) * &tq(b, -2);
    &RatFunc::one() - &t
}

/// The closed ratios written in the variables `Q = s^m` (as `Qm`),
/// `Q' = s^m'` (as `Qn`) and `tQ_j = s^(k_j)`: `(E ratio, E' ratio)`.
pub fn symbolic_ratios() -> (RatFunc, RatFunc) {
    let pref = &(&tq(0, 1) * &tq(2, 1)) * &(&tq(1, -1) * &tq(3, -1));
    let e = &(&pref * &one_minus(Var::Qm, 3, 2)) / &one_minus(Var::Qm, 0, 1);
    let ep = &(&pref * &one_minus(Var::Qn, 3, 0)) / &one_minus(Var::Qn, 2, 1);
    (e, ep)
}

/// The displayed `s = 1` forms of the two ratios.
pub fn symbolic_ratios_at_s1() -> (RatFunc, RatFunc) {
    let pref = &(&tq(0, 1) * &tq(2, 1)) * &(&tq(1, -1) * &tq(3, -1));
    let f = |q: Var, a: usize, b: usize| &RatFunc::one() - &(&(&RatFunc::var_pow(q, 2) * &tq(a, 2)) * &tq(b, -2));
    let e = &(&pref * &f(Var::Qm, 3, 2)) / &f(Var::Qm, 0, 1);
    let ep = &(&pref * &f(Var::Qn, 3, 0)) / &f(Var::Qn, 2, 1);
    (e, ep)
}
