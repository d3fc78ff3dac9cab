use super::poly::OrePoly;
use super::shift::{Shift, ShiftExp};
use crate::arith::RatFunc;
use crate::error::{Error, Result};

/// Scalar coefficients `[c_0, .., c_d]` of an operator univariate in `e`.
pub(crate) fn univariate_coefficients(p: &OrePoly, e: Shift) -> Result<Vec<RatFunc>> {
    if !p.is_univariate_in(e) {
        return Err(Error::Shape(format!("operator is not univariate in {}: {}", e, p)));
    }
    let d = p.degree(e).unwrap_or(0) as usize;
    let mut out = vec![RatFunc::zero(); d + 1];
    for (x, c) in p.terms() {
        out[x.get(e) as usize] = c.clone();
    }
    Ok(out)
}

/// Builds `sum c_k e^k` from scalar coefficients.
pub(crate) fn from_univariate(coeffs: &[RatFunc], e: Shift) -> OrePoly {
    OrePoly::from_terms(coeffs.iter().enumerate().map(|(k, c)| (ShiftExp::single(e, k as u32), c.clone())))
}

/// Right division in the skew polynomial ring over the coefficient field:
/// returns `(q, r)` with `f = q * g + r` and `deg(r; e) < deg(g; e)`.
pub fn skew_right_divide(f: &OrePoly, g: &OrePoly, e: Shift) -> Result<(OrePoly, OrePoly)> {
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let gc = univariate_coefficients(g, e)?;
    let mut r = univariate_coefficients(f, e)?;
    if f.is_zero() {
        return Ok((OrePoly::zero(), OrePoly::zero()));
    }
    let dg = gc.len() - 1;
    let lg = gc[dg].clone();
    let v = e.paired();
    let mut q = vec![RatFunc::zero(); r.len().saturating_sub(dg).max(1)];
    while r.len() > dg && !r.is_empty() {
        let dr = r.len() - 1;
        let lead = r[dr].clone();
        if !lead.is_zero() {
            let k = dr - dg;
            // (t e^k) g has leading coefficient t * sigma^k(lg).
            let t = lead.checked_div(&lg.dilate(v, k as i32))?;
            for (j, c) in gc.iter().enumerate() {
                if !c.is_zero() {
                    let sub = &t * &c.dilate(v, k as i32);
                    r[k + j] = &r[k + j] - &sub;
                }
            }
            q[k] = t;
        }
        r.pop();
    }
    Ok((from_univariate(&q, e), from_univariate(&r, e)))
}

/// `true` iff `p = qt * d` exactly.
pub fn check_right_divisor(p: &OrePoly, d: &OrePoly, qt: &OrePoly) -> bool {
    &(qt * d) == p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Var;

    fn qn(e: i32) -> OrePoly {
        OrePoly::constant(RatFunc::var_pow(Var::Qn, e))
    }

    #[test]
    fn hopf_operator_has_linear_right_factor() {
        let em = OrePoly::shift(Shift::Em);
        let f = &(&em.pow(2) - &(&(&qn(1) + &qn(-1)) * &em)) + &OrePoly::one();
        let g = &em - &qn(1);
        let (q, r) = skew_right_divide(&f, &g, Shift::Em).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, &em - &qn(-1));
        assert!(check_right_divisor(&f, &g, &q));
    }

    #[test]
    fn trivial_divisions() {
        let em = OrePoly::shift(Shift::Em);
        let f = &(&em * &qn(1)) + &OrePoly::from_i64(3);
        let (q, r) = skew_right_divide(&f, &OrePoly::one(), Shift::Em).unwrap();
        assert_eq!((q, r), (f.clone(), OrePoly::zero()));
        let (q, r) = skew_right_divide(&em, &em.pow(2), Shift::Em).unwrap();
        assert_eq!((q, r), (OrePoly::zero(), em.clone()));
        assert_eq!(skew_right_divide(&em, &OrePoly::zero(), Shift::Em), Err(Error::DivisionByZero));
    }
}
