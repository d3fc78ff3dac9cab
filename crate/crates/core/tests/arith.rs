use proptest::prelude::*;
use qlink_core::arith::{LaurentPoly, Monomial, RatFunc, Rational, Var};
use qlink_core::Error;

fn s(e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::S, e)
}

fn qm(e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::Qm, e)
}

fn qn(e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::Qn, e)
}

fn int(c: i64) -> LaurentPoly {
    LaurentPoly::from_i64(c)
}

fn frac(num: &LaurentPoly, den: &LaurentPoly) -> RatFunc {
    RatFunc::new(num, den).unwrap()
}

fn r(p: &LaurentPoly) -> RatFunc {
    RatFunc::from_laurent(p)
}

#[test]
fn laurent_products() {
    assert_eq!(&(&s(1) - &s(-1)) * &(&s(1) + &s(-1)), &s(2) - &s(-2));
    let x = &(&s(3) * &qm(-2)) * &int(1);
    assert!((&x + &(-&x)).is_zero());
    let lhs = &(&int(1) - &(&s(2) * &qm(4))) * &(&int(1) - &(&s(6) * &qm(4)));
    let expanded = &(&(&int(1) - &(&s(2) * &qm(4))) - &(&s(6) * &qm(4))) + &(&s(8) * &qm(8));
    assert_eq!(lhs, expanded);
}

#[test]
fn fractions_are_reduced() {
    assert_eq!(frac(&(&s(2) - &int(1)), &(&s(1) - &int(1))), r(&(&s(1) + &int(1))));
    assert!(frac(&LaurentPoly::zero(), &(&s(3) * &qm(1))).is_zero());
    let two = &s(2) - &s(-2);
    let one = &s(1) - &s(-1);
    assert_eq!(frac(&two, &one), r(&(&s(1) + &s(-1))));
    assert_eq!(RatFunc::new(&int(1), &LaurentPoly::zero()), Err(Error::ZeroDenominator));
}

#[test]
fn substitution() {
    let x = r(&(&qn(1) + &qn(-1)));
    assert_eq!(x.substitute(&[(Var::Qn, s(2))]).unwrap(), r(&(&s(2) + &s(-2))));

    let pole = frac(&int(1), &(&int(1) - &(&s(2) * &qm(2))));
    assert!(matches!(pole.substitute(&[(Var::Qm, s(-1))]), Err(Error::SubstitutionPole(_))));

    let c = frac(&(&s(2) * &qm(2)), &(&int(1) - &(&s(6) * &qm(4))));
    assert_eq!(c.substitute(&[(Var::Qm, s(3))]).unwrap(), frac(&s(8), &(&int(1) - &s(18))));
}

#[test]
fn evaluation_at_s_equal_one() {
    let x = frac(&(&int(1) - &s(2)), &(&int(1) - &s(4)));
    assert_eq!(x.eval_s1().unwrap(), RatFunc::from_rational(&Rational::new(1.into(), 2.into())));
    let y = r(&(&qn(1) + &qn(-1)));
    assert_eq!(y.eval_s1().unwrap(), y);
    assert!(matches!(frac(&int(1), &(&s(1) - &int(1))).eval_s1(), Err(Error::PoleAtS1(_))));
}

#[test]
fn display_is_stable() {
    assert_eq!(r(&(&(&s(5) + &s(-5)) + &int(1))).to_string(), "s^5+1+s^-5");
    let x = frac(&int(1), &(&s(2) + &int(1)));
    assert_eq!(x.to_string(), "(1)/(s^2+1)");
}

#[test]
fn dilation_and_swap() {
    let x = frac(&qm(1), &(&int(1) - &qn(2)));
    assert_eq!(x.dilate(Var::Qm, 2), frac(&(&s(2) * &qm(1)), &(&int(1) - &qn(2))));
    assert_eq!(x.swap_vars(Var::Qm, Var::Qn).swap_vars(Var::Qm, Var::Qn), x);
}

const VARS: [Var; 3] = [Var::S, Var::Qm, Var::Qn];

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -2i32..=2, -2i32..=2, -2i32..=2), 1..4).prop_map(|ts| {
        ts.into_iter()
            .map(|(c, a, b, d)| {
                let mut m = Monomial::ONE;
                for (v, e) in VARS.iter().zip([a, b, d]) {
                    m = m * Monomial::var(*v, e);
                }
                LaurentPoly::monomial(m, Rational::from_i64(c))
            })
            .sum()
    })
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| RatFunc::new(&n, &d).unwrap())
}

fn nonzero_ratfunc() -> impl Strategy<Value = RatFunc> {
    ratfunc().prop_filter("nonzero", |x| !x.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in nonzero_ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &c) / &c, a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&c * &c.inv().unwrap()).is_one());
    }

    #[test]
    fn normal_form_is_canonical(n in laurent(), d in nonzero_laurent(), k in nonzero_laurent()) {
        let x = RatFunc::new(&n, &d).unwrap();
        let y = RatFunc::new(&(&n * &k), &(&d * &k)).unwrap();
        prop_assert_eq!(&x, &y);
        let again = RatFunc::new(&x.num_laurent(), &x.den_laurent()).unwrap();
        prop_assert_eq!(again, x);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in ratfunc(), b in ratfunc(), e in 1i32..4) {
        let bind = [(Var::Qm, s(e)), (Var::Qn, s(e + 7))];
        if let (Ok(sa), Ok(sb)) = (a.substitute(&bind), b.substitute(&bind)) {
            prop_assert_eq!((&a * &b).substitute(&bind).unwrap(), &sa * &sb);
            prop_assert_eq!((&a + &b).substitute(&bind).unwrap(), &sa + &sb);
        }
    }

    #[test]
    fn evaluation_at_one_is_multiplicative(a in ratfunc(), b in ratfunc()) {
        if let (Ok(ea), Ok(eb)) = (a.eval_s1(), b.eval_s1()) {
            prop_assert_eq!((&a * &b).eval_s1().unwrap(), &ea * &eb);
        }
    }
}
