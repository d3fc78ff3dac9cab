use super::poly::OrePoly;
use super::shift::Shift;
use crate::arith::{RatFunc, Var};
use crate::error::{Error, Result};
use crate::seq::JonesSequence;

/// Coordinate of the sequence argument moved by each shift: `Em -> m`,
/// `En -> n`, `tE1 -> i`.
fn coordinate(e: Shift) -> usize {
    match e {
        Shift::Em => 0,
        Shift::En => 1,
        Shift::TE1 => 2,
    }
}

/// `(P seq)(point)`: each term `c * Em^a * En^b * tE1^c` contributes
/// `c(s, s^m, s^n, s^i) * seq(m + a, n + b, i + c)`.
pub fn ore_apply(p: &OrePoly, seq: &dyn JonesSequence, point: &[i64]) -> Result<RatFunc> {
    let arity = seq.arity();
    if point.len() != arity {
        return Err(Error::Shape(format!("{} takes {} coordinates, got {}", seq.name(), arity, point.len())));
    }
    let bind_vars = [Var::Qm, Var::Qn, Var::TQ1];
    let bindings: Vec<(Var, i32)> = bind_vars.iter().zip(point).map(|(&v, &x)| (v, x as i32)).collect();
    let mut acc = RatFunc::zero();
    for (e, c) in p.terms() {
        let mut at = point.to_vec();
        for sh in Shift::ALL {
            let k = e.get(sh);
            if k > 0 {
                let j = coordinate(sh);
                if j >= arity {
                    return Err(Error::Shape(format!("{} does not act on {}", sh, seq.name())));
                }
                at[j] += k as i64;
            }
        }
        for &v in &bind_vars[arity..] {
            if c.uses(v) {
                return Err(Error::Shape(format!("{} is not bound for {}", v, seq.name())));
            }
        }
        let value = seq.eval(&at).map_err(|err| match err {
            Error::InvalidColor { .. } => Error::OutOfDomain(at.clone()),
            other => other,
        })?;
        if value.is_zero() {
            continue;
        }
        let coeff = c.bind_s_powers(&bindings)?;
        acc = &acc + &(&coeff * &value);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::{hopf_v, qbracket, HopfV};

    #[test]
    fn hopf_recurrence_vanishes() {
        let em = OrePoly::shift(Shift::Em);
        let qn = OrePoly::constant(&RatFunc::var(Var::Qn) + &RatFunc::var_pow(Var::Qn, -1));
        let a = &(&em.pow(2) - &(&qn * &em)) + &OrePoly::one();
        assert!(ore_apply(&a, &HopfV, &[1, 2]).unwrap().is_zero());
        assert_eq!(ore_apply(&OrePoly::one(), &HopfV, &[2, 3]).unwrap(), RatFunc::from_laurent(&qbracket(6)));
        let en = OrePoly::shift(Shift::En);
        assert_eq!(ore_apply(&en, &HopfV, &[1, 1]).unwrap(), hopf_v(1, 2).unwrap());
    }

    #[test]
    fn leaving_the_domain_is_reported() {
        assert_eq!(ore_apply(&OrePoly::one(), &HopfV, &[0, 1]), Err(Error::OutOfDomain(vec![0, 1])));
        let tq = OrePoly::var(Var::TQ1);
        assert!(matches!(ore_apply(&tq, &HopfV, &[1, 1]), Err(Error::Shape(_))));
    }
}
