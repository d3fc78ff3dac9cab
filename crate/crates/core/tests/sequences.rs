use qlink_core::arith::{LaurentPoly, RatFunc, Var};
use qlink_core::cert::suites::ratio_e_expanded;
use qlink_core::seq::rmatrix::{ratio_e_closed, ratio_eprime_closed, symbolic_ratios, symbolic_ratios_at_s1};
use qlink_core::seq::*;
use qlink_core::Error;

fn s(e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::S, e)
}

fn curly(n: i32) -> LaurentPoly {
    &s(n) - &s(-n)
}

fn r(p: &LaurentPoly) -> RatFunc {
    RatFunc::from_laurent(p)
}

/// `[n]` as the exact quotient `{n} / {1}`, independent of `qbracket`.
fn bracket(n: i32) -> RatFunc {
    RatFunc::new(&curly(n), &curly(1)).unwrap()
}

#[test]
fn quantum_integers() {
    assert!(qint(0).is_zero());
    assert_eq!(qint(2), curly(2));
    let expected = &(&curly(3) * &curly(2)) * &curly(1);
    assert_eq!(qfact_value(3).unwrap(), expected);
    for n in 1..8 {
        assert_eq!(r(&qbracket(n)), bracket(n as i32));
    }
}

#[test]
fn hopf_values() {
    for n in 1..10 {
        assert_eq!(hopf_v(1, n).unwrap(), bracket(n as i32));
    }
    let expected = [5, 3, 1, -1, -3, -5].iter().map(|&e| s(e)).sum::<LaurentPoly>();
    assert_eq!(hopf_v(2, 3).unwrap(), r(&expected));
    assert_eq!(hopf_v(2, 3).unwrap(), bracket(6));
    assert_eq!(hopf_v(0, 3), Err(Error::InvalidColor { m: 0, n: 3 }));
}

#[test]
fn whitehead_summands() {
    assert!(whitehead_f(1, 1, 0).is_one());
    assert_eq!(whitehead_f(2, 2, 0), r(&(&s(1) + &s(-1)).pow(2)));
    assert!(whitehead_f(3, 2, 5).is_zero());
    let f221 = &r(&s(-2)) * &r(&(&(&curly(3) * &curly(2)) * &curly(1)));
    assert_eq!(whitehead_f(2, 2, 1), f221);
    assert!(whitehead_v(1, 1).unwrap().is_one());
    assert_eq!(whitehead_v(2, 2).unwrap(), &whitehead_f(2, 2, 0) + &f221);
}

#[test]
fn whitehead_with_one_color_equal_to_one() {
    for n in 1..10 {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        assert_eq!(whitehead_v(1, n).unwrap(), &RatFunc::from_i64(sign) * &bracket(n as i32));
    }
}

#[test]
fn whitehead_is_symmetric_in_the_colors() {
    for m in 1..6 {
        for n in 1..6 {
            assert_eq!(whitehead_v(m, n).unwrap(), whitehead_v(n, m).unwrap(), "({}, {})", m, n);
        }
    }
}

#[test]
fn hopf_values_are_invariant_under_s_inversion() {
    for (m, n) in [(2, 3), (3, 3), (4, 2)] {
        let v = hopf_v(m, n).unwrap();
        let bar = v.substitute(&[(Var::S, s(-1))]).unwrap();
        assert_eq!(bar, v);
    }
}

#[test]
fn weighted_summand_at_zero() {
    for m in 1..5 {
        for n in 1..5 {
            let sign = if (m + n) % 2 == 0 { 2 } else { -2 };
            let expected = &(&r(&(&(&s(2) - &LaurentPoly::one()) * &s(m as i32))) * &RatFunc::from_i64(sign))
                * &(&bracket(m as i32) * &bracket(n as i32));
            assert_eq!(whitehead_fprime(m, n, 0), expected);
        }
    }
    assert_eq!(whitehead_fprime(1, 1, 0), r(&(&(&s(2) - &LaurentPoly::one()) * &s(1))).scale(&2.into()));
    assert!(whitehead_fprime(2, 3, 9).is_zero());
}

#[test]
fn telescoped_term() {
    let y = qlink_core::cert::build_named("Y").unwrap().value.as_ore().unwrap().clone();
    let g = WhiteheadG::new(&y).unwrap();
    for m in 1..=6 {
        for n in 1..=6 {
            let top = (m + 4).min(n);
            assert!(g.eval(&[m, n, top]).unwrap().is_zero(), "({}, {})", m, n);
            let route = g.eval(&[m, n, 0]).unwrap();
            assert_eq!(route, whitehead_g0(m, n).unwrap());
            let unit = RatFunc::from_laurent(&curly(1));
            assert_eq!(&route * &unit, whitehead_g0_closed(m, n).unwrap());
        }
    }
}

#[test]
fn normalized_invariant() {
    assert!(normalized_j(Link::Whitehead, 1, 1).unwrap().is_one());
    for n in 1..6 {
        assert!(normalized_j(Link::Hopf, 1, n).unwrap().is_one());
    }
}

#[test]
fn rmatrix_ratios_at_a_fixed_tuple() {
    let (m, mp, k) = (2, 2, [0, 1, 1, 0]);
    let base = rmatrix_value(RSign::Plus, m, mp, k).unwrap();
    assert!(!base.is_zero());
    let e = &rmatrix_value(RSign::Plus, m + 1, mp, k).unwrap() / &base;
    let ep = &rmatrix_value(RSign::Plus, m, mp + 1, k).unwrap() / &base;
    assert_eq!(e, ratio_e_expanded(m, k).unwrap());
    assert_eq!(ep, ratio_eprime_closed(mp, k).unwrap());
    assert_ne!(e, ratio_e_closed(m, k).unwrap());
}

#[test]
fn rmatrix_vanishes_outside_its_support() {
    assert!(rmatrix_value(RSign::Plus, 3, 3, [1, 0, 0, 0]).unwrap().is_zero());
    assert!(rmatrix_value(RSign::Minus, 3, 3, [0, 1, 0, 0]).unwrap().is_zero());
}

#[test]
fn rmatrix_symbolic_ratios_at_s_equal_one() {
    let (e, ep) = symbolic_ratios();
    let (e1, ep1) = symbolic_ratios_at_s1();
    assert_eq!(e.eval_s1().unwrap(), e1);
    assert_eq!(ep.eval_s1().unwrap(), ep1);
}
