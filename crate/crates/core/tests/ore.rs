use proptest::prelude::*;
use qlink_core::arith::{LaurentPoly, RatFunc, Var};
use qlink_core::cert::{build_named, names};
use qlink_core::ore::*;
use qlink_core::seq::{hopf_v, whitehead_v, HopfV, WhiteheadV};

fn s(e: i32) -> RatFunc {
    RatFunc::var_pow(Var::S, e)
}

fn q(v: Var, e: i32) -> RatFunc {
    RatFunc::var_pow(v, e)
}

fn c(x: RatFunc) -> OrePoly {
    OrePoly::constant(x)
}

fn em() -> OrePoly {
    OrePoly::shift(Shift::Em)
}

fn en() -> OrePoly {
    OrePoly::shift(Shift::En)
}

fn one() -> OrePoly {
    OrePoly::one()
}

fn parse(text: &str) -> OrePoly {
    parse_operator(text).unwrap()
}

/// `Em^2 - (Qn + Qn^-1) Em + 1`.
fn hopf_m() -> OrePoly {
    let mid = c(&q(Var::Qn, 1) + &q(Var::Qn, -1));
    &(&em().pow(2) - &(&mid * &em())) + &one()
}

#[test]
fn commutation_rules() {
    let qm = c(q(Var::Qm, 1));
    let qn = c(q(Var::Qn, 1));
    assert_eq!(&em() * &qm, &c(&s(1) * &q(Var::Qm, 1)) * &em());
    assert_eq!(&em() * &qn, &qn * &em());
    let b = &em() - &c(&s(2) * &q(Var::Qm, 2));
    let a = &(&c(q(Var::Qm, 2)) * &em()) - &one();
    let expected = &(&(&c(&s(2) * &q(Var::Qm, 2)) * &em().pow(2))
        - &(&c(&RatFunc::one() + &(&s(2) * &q(Var::Qm, 4))) * &em()))
        + &c(&s(2) * &q(Var::Qm, 2));
    assert_eq!(&b * &a, expected);
}

#[test]
fn application_to_sequences() {
    assert!(ore_apply(&hopf_m(), &HopfV, &[1, 2]).unwrap().is_zero());
    assert_eq!(ore_apply(&one(), &HopfV, &[2, 3]).unwrap(), hopf_v(2, 3).unwrap());
    assert_eq!(ore_apply(&en(), &WhiteheadV::default(), &[1, 1]).unwrap(), whitehead_v(1, 2).unwrap());
}

#[test]
fn evaluation_at_s_equal_one() {
    let eps = hopf_m().eval_at_s1().unwrap();
    assert_eq!(eps.to_string(), hopf_m().to_string());
    let qm = c(q(Var::Qm, 1));
    let left = (&em() * &qm).eval_at_s1().unwrap();
    let right = (&c(&s(1) * &q(Var::Qm, 1)) * &em()).eval_at_s1().unwrap();
    assert_eq!(left, right);
    assert_eq!(left.to_string(), "Qm*Em");
}

#[test]
fn bivariate_whitehead_at_s_equal_one() {
    let abi = build_named("Abi_W").unwrap().value.as_ore().unwrap().clone();
    let eps = abi.eval_at_s1().unwrap();
    let (m2, n2) = (q(Var::Qm, 2), q(Var::Qn, 2));
    let expected = CommutativeOperatorPoly::from_terms([
        (ShiftExp::single(Shift::Em, 1).with(Shift::En, 1), &m2 - &n2),
        (ShiftExp::single(Shift::Em, 1), &RatFunc::one() - &(&m2 * &n2)),
        (ShiftExp::single(Shift::En, 1), &(&m2 * &n2) - &RatFunc::one()),
        (ShiftExp::default(), &n2 - &m2),
    ]);
    assert!(eps.is_proportional(&expected));
}

#[test]
fn rescaling_shifts() {
    let e2 = em().pow(2);
    assert_eq!(e2.shift_rescale(Shift::Em, &LaurentPoly::var(Var::S)).unwrap(), &c(s(2)) * &e2);
    let x = &c(q(Var::Qm, 1)) * &em();
    assert_eq!(x.shift_rescale(Shift::Em, &LaurentPoly::var(Var::S)).unwrap(), &c(&s(1) * &q(Var::Qm, 1)) * &em());
    assert!(x.shift_rescale(Shift::Em, &LaurentPoly::from_i64(2)).is_err());
}

#[test]
fn right_division() {
    let g = &em() - &c(q(Var::Qn, 1));
    let (quot, rem) = skew_right_divide(&hopf_m(), &g, Shift::Em).unwrap();
    assert_eq!(quot, &em() - &c(q(Var::Qn, -1)));
    assert!(rem.is_zero());

    let f = hopf_m();
    assert_eq!(skew_right_divide(&f, &one(), Shift::Em).unwrap(), (f.clone(), OrePoly::zero()));
    assert_eq!(skew_right_divide(&em(), &em().pow(2), Shift::Em).unwrap(), (OrePoly::zero(), em()));
}

#[test]
fn closure_when_g_is_the_shift() {
    let a0 = &q(Var::Qn, 2) + &RatFunc::from_i64(3);
    let f = &en().pow(2) + &c(a0.clone());
    let cl = ore_closure_deg1(&f, &en(), Shift::En).unwrap();
    assert_eq!(cl.g_tilde, en());
    assert_eq!(cl.f_tilde, &en().pow(2) + &c(a0.dilate(Var::Qn, 1)));
    assert_eq!(&cl.g_tilde * &f, &cl.f_tilde * &en());
}

#[test]
fn closure_of_two_linear_operators() {
    let a = &(&q(Var::Qm, 1) + &q(Var::Qn, -1)) / &(&s(1) + &RatFunc::from_i64(2));
    let b = &s(3) - &q(Var::Qn, 2);
    let f = &en() + &c(a);
    let g = &en() + &c(b);
    let cl = ore_closure_deg1(&f, &g, Shift::En).unwrap();
    assert_eq!(cl.g_tilde.degree(Shift::En), Some(1));
    assert_eq!(cl.f_tilde.degree(Shift::En), Some(1));
    assert_eq!(&cl.g_tilde * &f, &cl.f_tilde * &g);
}

#[test]
fn reduction_against_the_bivariate_operator() {
    let abi = build_named("Abi_W").unwrap().value.as_ore().unwrap().clone();
    let red = right_reduce(&abi, &abi, Shift::Em, Shift::En, ReduceStrategy::Closure).unwrap();
    assert!(red.remainder.is_zero());
    let x = &(&c(q(Var::Qn, 1)) * &em().pow(2)) + &(&c(&s(1) + &q(Var::Qm, -1)) * &en());
    let multiple = &x * &abi;
    for strategy in [ReduceStrategy::Closure, ReduceStrategy::ExactDivisionFirst] {
        let red = right_reduce(&multiple, &abi, Shift::Em, Shift::En, strategy).unwrap();
        assert!(red.remainder.is_zero(), "{:?}", strategy);
    }
}

#[test]
fn right_divisor_certificate() {
    let d = &em() - &c(q(Var::Qn, 1));
    let qt = &em() - &c(q(Var::Qn, -1));
    let p = &qt * &d;
    assert!(check_right_divisor(&p, &d, &qt));
    let bumped = &qt + &one();
    assert!(!check_right_divisor(&p, &d, &bumped));
}

#[test]
fn parse_errors_carry_positions() {
    assert!(matches!(parse_operator("Em + * 2"), Err(qlink_core::Error::Parse { pos: 5, .. })));
    assert!(parse_operator("Zz").is_err());
    assert!(parse_operator("(Em").is_err());
}

#[test]
fn registry_operators_round_trip_through_text() {
    for name in names() {
        let op = build_named(&name).unwrap();
        let text = op.value.to_string();
        assert_eq!(parse(&text).to_string(), text, "{}", name);
    }
}

// ----------------------------------------------------------------- properties

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (-3i64..=3, -2i32..=2, -2i32..=2, -2i32..=2, -3i64..=3, 0i32..=2, -2i32..=2).prop_map(|(a, i, j, k, b, l, t)| {
        let num = &(&RatFunc::from_i64(a) * &(&(&s(i) * &q(Var::Qm, j)) * &q(Var::Qn, k))) + &RatFunc::from_i64(b);
        let den = &(&s(l) * &q(Var::Qm, t)) + &RatFunc::from_i64(2);
        &num / &den
    })
}

fn operator() -> impl Strategy<Value = OrePoly> {
    prop::collection::vec((0u32..=2, 0u32..=2, 0u32..=1, ratfunc()), 1..4).prop_map(|ts| {
        OrePoly::from_terms(
            ts.into_iter()
                .map(|(a, b, t, x)| (ShiftExp::single(Shift::Em, a).with(Shift::En, b).with(Shift::TE1, t), x)),
        )
    })
}

fn univariate(e: Shift, max_deg: u32) -> impl Strategy<Value = OrePoly> {
    prop::collection::vec(ratfunc(), 1..=(max_deg as usize + 1)).prop_map(move |cs| {
        let d = cs.len() as u32 - 1;
        OrePoly::from_terms(
            cs.into_iter().enumerate().map(|(k, x)| (ShiftExp::single(e, k as u32), x)),
        )
        .monic_in(e)
        .unwrap_or_else(|_| OrePoly::shift_pow(e, d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_associative(a in operator(), b in operator(), x in operator()) {
        prop_assert_eq!(&(&a * &b) * &x, &a * &(&b * &x));
    }

    #[test]
    fn product_distributes(a in operator(), b in operator(), x in operator()) {
        prop_assert_eq!(&x * &(&a + &b), &(&x * &a) + &(&x * &b));
        prop_assert_eq!(&(&a + &b) * &x, &(&a * &x) + &(&b * &x));
    }

    #[test]
    fn shift_moves_past_coefficients(x in ratfunc()) {
        for (e, v) in [(Shift::Em, Var::Qm), (Shift::En, Var::Qn), (Shift::TE1, Var::TQ1)] {
            let lhs = &OrePoly::shift(e) * &c(x.clone());
            prop_assert_eq!(lhs, &c(x.dilate(v, 1)) * &OrePoly::shift(e));
        }
    }

    #[test]
    fn application_is_linear(a in univariate(Shift::Em, 2), b in univariate(Shift::Em, 2), k in ratfunc(), m in 1i64..4, n in 1i64..4) {
        let seq = HopfV;
        let combo = &a + &(&c(k.clone()) * &b);
        if let (Ok(x), Ok(y), Ok(z)) = (ore_apply(&a, &seq, &[m, n]), ore_apply(&b, &seq, &[m, n]), ore_apply(&combo, &seq, &[m, n])) {
            let kv = k.bind_s_powers(&[(Var::Qm, m as i32), (Var::Qn, n as i32)]);
            if let Ok(kv) = kv {
                prop_assert_eq!(z, &x + &(&kv * &y));
            }
        }
    }

    #[test]
    fn rescaling_is_a_homomorphism(a in operator(), b in operator(), k in -2i32..=2) {
        let lhs = (&a * &b).shift_rescale_s(Shift::Em, k);
        prop_assert_eq!(lhs, &a.shift_rescale_s(Shift::Em, k) * &b.shift_rescale_s(Shift::Em, k));
    }

    #[test]
    fn division_reconstructs(f in univariate(Shift::Em, 4), g in univariate(Shift::Em, 2)) {
        let (quot, rem) = skew_right_divide(&f, &g, Shift::Em).unwrap();
        prop_assert_eq!(&(&quot * &g) + &rem, f);
        prop_assert!(rem.is_zero() || rem.degree(Shift::Em) < g.degree(Shift::Em));
    }

    #[test]
    fn closure_contract(f in univariate(Shift::En, 3), b in ratfunc()) {
        let g = &en() + &c(b);
        if let Ok(cl) = ore_closure_deg1(&f, &g, Shift::En) {
            prop_assert_eq!(&cl.g_tilde * &f, &cl.f_tilde * &g);
            prop_assert_eq!(cl.f_tilde.degree(Shift::En), f.degree(Shift::En));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn text_round_trip(p in operator()) {
        prop_assert_eq!(parse(&p.to_string()), p);
    }
}
