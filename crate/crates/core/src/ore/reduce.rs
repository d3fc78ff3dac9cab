use super::closure::ore_closure_deg1;
use super::division::skew_right_divide;
use super::poly::OrePoly;
use super::shift::Shift;
use crate::error::{Error, Result};

/// How the multiplier pair of each reduction step is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReduceStrategy {
    /// Always use the degree-1 closure.
    Closure,
    /// Use an exact right quotient when the leading coefficient is a left
    /// multiple of the shifted `c1`, the closure otherwise.
    ExactDivisionFirst,
}

/// One elimination step: `P <- tc * P - tdel * E^(k-1) * D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReduceStep {
    /// Degree of `P` in the primary generator before the step.
    pub degree: u32,
    /// Coefficient of `E^degree` in `P` (an operator in the auxiliary generator).
    pub leading: OrePoly,
    /// `c1` with the primary coordinate dilated by `s^(degree-1)`.
    pub target: OrePoly,
    pub tc: OrePoly,
    pub tdel: OrePoly,
    /// `true` when the step used an exact right quotient.
    pub exact: bool,
}

/// Outcome of [`right_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub remainder: OrePoly,
    pub steps: Vec<ReduceStep>,
    /// `D = c1 * E + c0` split along the primary generator.
    pub c1: OrePoly,
    pub c0: OrePoly,
    /// The intermediate operators after each step.
    pub intermediates: Vec<OrePoly>,
}

/// Lowers the degree of `p` in `primary` one step at a time by subtracting left
/// multiples of `d = c1 * E + c0`, where `c1`, `c0` are operators in `aux`.
///
/// The result certifies `T * p - M * d = remainder` with `T` the product of
/// the `tc` multipliers; a zero remainder shows that a nonzero left multiple of
/// `p` is a left multiple of `d`.
pub fn right_reduce(
    p: &OrePoly,
    d: &OrePoly,
    primary: Shift,
    aux: Shift,
    strategy: ReduceStrategy,
) -> Result<Reduction> {
    if d.degree(primary) != Some(1) {
        return Err(Error::Shape(format!("divisor must have degree 1 in {}", primary)));
    }
    let c1 = d.coefficient_of(primary, 1);
    let c0 = d.coefficient_of(primary, 0);
    for part in [&c1, &c0] {
        if !part.is_univariate_in(aux) || part.degree(aux).unwrap_or(0) > 1 {
            return Err(Error::Shape(format!("coefficients of the divisor must be degree <= 1 in {}", aux)));
        }
    }
    let mut cur = p.clone();
    let mut steps = Vec::new();
    let mut intermediates = Vec::new();
    while let Some(k) = cur.degree(primary).filter(|&k| k >= 1) {
        let leading = cur.coefficient_of(primary, k);
        let target = c1.dilate_coefficients(primary, k as i32 - 1);
        let step_no = steps.len() + 1;
        let mut chosen = None;
        if strategy == ReduceStrategy::ExactDivisionFirst && target.degree(aux) == Some(1) {
            let (q, r) = skew_right_divide(&leading, &target, aux)?;
            if r.is_zero() {
                chosen = Some((OrePoly::one(), q, true));
            }
        }
        let (tc, tdel, exact) = match chosen {
            Some(x) => x,
            None => {
                let cl = ore_closure_deg1(&leading, &target, aux).map_err(|err| match err {
                    Error::ClosureDegenerate { equation, .. } => Error::ClosureDegenerate { step: step_no, equation },
                    other => other,
                })?;
                (cl.g_tilde, cl.f_tilde, false)
            }
        };
        let shifted_d = &OrePoly::shift_pow(primary, k - 1) * d;
        let next = &(&tc * &cur) - &(&tdel * &shifted_d);
        if next.degree(primary).is_some_and(|nk| nk >= k) {
            return Err(Error::DegreeMismatch {
                what: format!("degree in {} after step {}", primary, step_no),
                expected: k as i64 - 1,
                got: next.degree(primary).unwrap() as i64,
            });
        }
        steps.push(ReduceStep { degree: k, leading, target, tc, tdel, exact });
        intermediates.push(next.clone());
        cur = next;
    }
    Ok(Reduction { remainder: cur, steps, c1, c0, intermediates })
}
