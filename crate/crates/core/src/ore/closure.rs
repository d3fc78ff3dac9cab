use super::division::{from_univariate, univariate_coefficients};
use super::poly::OrePoly;
use super::shift::Shift;
use crate::arith::RatFunc;
use crate::error::{Error, Result};

/// Intermediate quantities of the degree-1 closure for monic inputs
/// `f = E^d + sum a_k E^k`, `g = E + b`: the unknowns of
/// `f~ = E^d + sum A_k E^k`, `g~ = E + B` satisfy `A_k = xi_k B + eta_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureTrace {
    pub b: RatFunc,
    pub a: Vec<RatFunc>,
    pub xi: Vec<RatFunc>,
    pub eta: Vec<RatFunc>,
    pub big_a: Vec<RatFunc>,
    pub big_b: RatFunc,
}

/// Result of [`ore_closure_deg1`]: `g_tilde * f = f_tilde * g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    pub g_tilde: OrePoly,
    pub f_tilde: OrePoly,
    pub trace: ClosureTrace,
}

/// Left common multiple of `f` and a degree-1 `g`, both univariate in `e`:
/// finds `g~` of degree 1 and `f~` of degree `deg f` with `g~ f = f~ g`.
///
/// Matching coefficients of `E^k` in `(E + B) f = f~ (E + b)` for monic
/// inputs gives
///
/// ```text
/// A_0 b            = B a_0
/// A_{k-1} + A_k σ^k(b) = σ(a_{k-1}) + B a_k        (1 <= k <= d-1)
/// A_{d-1} + σ^d(b)     = σ(a_{d-1}) + B
/// ```
///
/// where `σ` dilates the variable paired with `e`. The first two lines make
/// each `A_k` affine in `B`; the last one is a linear equation for `B`.
pub fn ore_closure_deg1(f: &OrePoly, g: &OrePoly, e: Shift) -> Result<Closure> {
    let fc = univariate_coefficients(f, e)?;
    let gc = univariate_coefficients(g, e)?;
    if g.degree(e) != Some(1) {
        return Err(Error::Shape(format!("closure needs deg({}) = 1, got {}", e, g)));
    }
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let v = e.paired();
    let sigma = |x: &RatFunc, k: usize| x.dilate(v, k as i32);
    let d = fc.len() - 1;
    let lf = fc[d].clone();
    let lg = gc[1].clone();
    let lf_inv = lf.inv()?;
    let a: Vec<RatFunc> = fc[..d].iter().map(|c| c * &lf_inv).collect();
    let b = &gc[0] * &lg.inv()?;

    let (xi, eta, big_a, big_b) = if d == 0 {
        (Vec::new(), Vec::new(), Vec::new(), b.clone())
    } else if b.is_zero() {
        // E f = σ(f) E.
        let big_a = a.iter().map(|x| sigma(x, 1)).collect();
        (Vec::new(), Vec::new(), big_a, RatFunc::zero())
    } else {
        let mut xi = Vec::with_capacity(d);
        let mut eta = Vec::with_capacity(d);
        xi.push(a[0].checked_div(&b)?);
        eta.push(RatFunc::zero());
        for k in 1..d {
            let sb = sigma(&b, k);
            xi.push((&a[k] - &xi[k - 1]).checked_div(&sb)?);
            eta.push((&sigma(&a[k - 1], 1) - &eta[k - 1]).checked_div(&sb)?);
        }
        let lhs = &RatFunc::one() - &xi[d - 1];
        let rhs = &(&sigma(&b, d) + &eta[d - 1]) - &sigma(&a[d - 1], 1);
        let big_b = if lhs.is_zero() {
            if rhs.is_zero() {
                RatFunc::zero()
            } else {
                return Err(Error::ClosureDegenerate {
                    step: 0,
                    equation: format!("0 * B = {}", rhs),
                });
            }
        } else {
            rhs.checked_div(&lhs)?
        };
        let big_a = xi.iter().zip(&eta).map(|(x, y)| &(x * &big_b) + y).collect();
        (xi, eta, big_a, big_b)
    };

    if d == 0 {
        // f is a nonzero scalar: (g f^-1) f = 1 g.
        let g_tilde = g.scale_right(&lf_inv);
        return Ok(Closure { g_tilde, f_tilde: OrePoly::one(), trace: ClosureTrace { b, a, xi, eta, big_a, big_b } });
    }
    let gt = vec![big_b.clone(), RatFunc::one()];
    let mut ft: Vec<RatFunc> = big_a.clone();
    ft.push(RatFunc::one());
    // Undo the normalization: g~ f = f~ g with g~ = g~_m lc(f)^-1, f~ = f~_m lc(g)^-1.
    let g_tilde = from_univariate(&gt, e).scale_right(&lf_inv);
    let f_tilde = from_univariate(&ft, e).scale_right(&lg.inv()?);
    Ok(Closure { g_tilde, f_tilde, trace: ClosureTrace { b, a, xi, eta, big_a, big_b } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{LaurentPoly, Var};

    fn c(p: LaurentPoly) -> OrePoly {
        OrePoly::constant(RatFunc::from_laurent(&p))
    }

    #[test]
    fn pushing_through_a_pure_shift() {
        let en = OrePoly::shift(Shift::En);
        let a0 = LaurentPoly::var_pow(Var::Qn, 2) + LaurentPoly::from_i64(3);
        let f = &en.pow(2) + &c(a0.clone());
        let r = ore_closure_deg1(&f, &en, Shift::En).unwrap();
        assert_eq!(r.g_tilde, en);
        let shifted = a0.dilate(Var::Qn, 1);
        assert_eq!(r.f_tilde, &en.pow(2) + &c(shifted));
        assert_eq!(&r.g_tilde * &f, &r.f_tilde * &en);
    }

    #[test]
    fn generic_linear_pair() {
        let en = OrePoly::shift(Shift::En);
        let qm = LaurentPoly::var(Var::Qm);
        let qn = LaurentPoly::var(Var::Qn);
        let f = &en + &c(qm.clone() * qn.clone() + LaurentPoly::one());
        let g = &(&c(qn.clone()) * &en) - &c(qm.clone() - LaurentPoly::var(Var::S));
        let r = ore_closure_deg1(&f, &g, Shift::En).unwrap();
        assert_eq!(r.g_tilde.degree(Shift::En), Some(1));
        assert_eq!(r.f_tilde.degree(Shift::En), Some(1));
        assert_eq!(&r.g_tilde * &f, &r.f_tilde * &g);
    }
}
