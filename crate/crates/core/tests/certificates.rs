use std::collections::BTreeMap;

use qlink_core::arith::{RatFunc, Var};
use qlink_core::cert::ops::*;
use qlink_core::cert::pipeline::STEPS;
use qlink_core::cert::suites::{hopf_annihilation, hopf_division, run_suite, HOPF_GRID};
use qlink_core::cert::{annwrel_reduction, build_named, names, pipeline, Status, Suite, VerificationReport};
use qlink_core::ore::*;
use qlink_core::par::Exec;
use qlink_core::seq::{whitehead_v, WhiteheadV};
use qlink_core::Error;

fn named(name: &str) -> OrePoly {
    build_named(name).unwrap().value.as_ore().unwrap().clone()
}

fn q(v: Var, e: i32) -> RatFunc {
    RatFunc::var_pow(v, e)
}

#[test]
fn registry_values() {
    assert_eq!(build_named("A_sm_H").unwrap().value.to_string(), "Em^2 + (-Qn - Qn^-1)*Em + 1");
    let s = |k| OrePoly::constant(RatFunc::var_pow(Var::S, k));
    let qq = |v, k| OrePoly::constant(q(v, k));
    let (em, en, one) = (OrePoly::shift(Shift::Em), OrePoly::shift(Shift::En), OrePoly::one());
    let lin_n = &en - &(&s(1) * &qq(Var::Qn, 2));
    let lin_m = &em - &(&s(1) * &qq(Var::Qm, 2));
    let tilt_m = &(&(&s(1) * &qq(Var::Qm, 2)) * &em) - &one;
    let tilt_n = &(&(&s(1) * &qq(Var::Qn, 2)) * &en) - &one;
    assert_eq!(named("Abi_W"), &(&lin_n * &tilt_m) - &(&lin_m * &tilt_n));
    assert!(matches!(build_named("nosuch"), Err(Error::UnknownName(_))));
}

#[test]
fn golden_fingerprints() {
    let golden: BTreeMap<String, String> = include_str!("golden/fingerprints.txt")
        .lines()
        .filter_map(|l| l.split_once(' '))
        .map(|(n, f)| (n.to_string(), f.to_string()))
        .collect();
    let listed = names();
    assert_eq!(listed.len(), golden.len());
    for name in listed {
        let op = build_named(&name).unwrap();
        assert_eq!(Some(&op.fingerprint()), golden.get(&name), "{}", name);
    }
}

#[test]
fn perturbed_identities_fail() {
    let lhs = u1(M) * big_a(M);
    let rhs = v1(M) * big_b(M);
    assert_eq!(lhs, rhs);
    let bumped = &(u1(M) + &OrePoly::one()) * big_a(M);
    assert!(!(&bumped - &rhs).is_zero());
}

#[test]
fn perturbed_combination_leaves_a_remainder() {
    let bumped = annwrel_combination() + &OrePoly::one();
    let red = right_reduce(&bumped, abi_w(), Shift::Em, Shift::En, ReduceStrategy::ExactDivisionFirst).unwrap();
    assert!(!red.remainder.is_zero());
    assert!(annwrel_reduction().unwrap().remainder.is_zero());
}

#[test]
fn parity_of_normalized_operators() {
    assert!(has_even_exponents(&named("J_ann_W")));
    assert!(!has_even_exponents(a_s_hopf(M)));
}

#[test]
fn roots_of_the_bivariate_operator() {
    let eps = abi_w().eval_at_s1().unwrap();
    let at = |em: RatFunc, en: RatFunc| eps.evaluate(&[(Shift::Em, em), (Shift::En, en)]).unwrap();
    assert!(at(q(Var::Qm, 2), q(Var::Qn, 2)).is_zero());
    assert!(!at(&RatFunc::from_i64(2) * &q(Var::Qm, 2), q(Var::Qn, 2)).is_zero());
    let hopf = a_s_hopf(M).eval_at_s1().unwrap();
    assert!(hopf.evaluate(&[(Shift::Em, q(Var::Qn, 1))]).unwrap().is_zero());
}

#[test]
fn pipeline_degrees_and_annihilation() {
    let pl = pipeline().unwrap();
    assert_eq!(pl.reduction.steps.len(), STEPS);
    for k in 1..=STEPS {
        assert_eq!(pl.delta_at_s1(k).unwrap().degree(Shift::En), Some(k as u32));
    }
    let v = WhiteheadV::default();
    assert!(ore_apply(&pl.delta(STEPS), &v, &[3, 4]).unwrap().is_zero());
    assert!(ore_apply(&pl.delta(STEPS).clear_denominators(), &v, &[5, 1]).unwrap().is_zero());
}

#[test]
fn cleared_operator_is_a_left_multiple() {
    let pl = pipeline().unwrap();
    let d = pl.delta(STEPS);
    let cleared = d.clear_denominators();
    assert!(cleared.terms().iter().all(|(_, c)| c.is_laurent()));
    let ratios: Vec<RatFunc> = d
        .terms()
        .iter()
        .map(|(e, c)| &cleared.coeff(*e) / c)
        .collect();
    assert!(ratios.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(d.scale_left(&ratios[0]), cleared);
}

#[test]
fn main_operator_annihilates_at_a_point() {
    assert!(!whitehead_v(2, 3).unwrap().is_zero());
    assert!(ore_apply(af_w(M), &WhiteheadV::default(), &[2, 3]).unwrap().is_zero());
    assert!(!ore_apply(a_s_hopf(M), &WhiteheadV::default(), &[2, 3]).unwrap().is_zero());
}

fn strip_timing(rs: &[VerificationReport]) -> Vec<(String, Status, usize)> {
    rs.iter().map(|r| (r.check.clone(), r.status, r.failures.len())).collect()
}

#[test]
fn sequential_and_parallel_agree() {
    let a = hopf_annihilation([6, 6], Exec::Sequential);
    let b = hopf_annihilation([6, 6], Exec::Parallel);
    assert_eq!(strip_timing(&a), strip_timing(&b));
}

#[test]
fn hopf_suite_passes() {
    let reports = run_suite(Suite::Hopf, None, Exec::default());
    assert!(reports.iter().all(|r| r.status == Status::Pass), "{:#?}", reports);
    assert!(reports.iter().any(|r| r.grid == HOPF_GRID));
    assert!(hopf_division().iter().all(VerificationReport::passed));
}

#[test]
fn reports_serialize() {
    let reports = hopf_division();
    let json = serde_json::to_value(&reports).unwrap();
    assert_eq!(json[0]["status"], "pass");
    assert!(json[0]["check"].as_str().unwrap().starts_with("A_sm_H"));
}

#[test]
fn suites_parse() {
    for s in Suite::ALL {
        assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
    }
    assert!("nosuch".parse::<Suite>().is_err());
}
