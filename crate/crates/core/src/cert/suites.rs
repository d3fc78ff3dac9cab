//! Verification suites. Each topic function returns its reports in a fixed
//! order; [`run_suite`] runs topics concurrently and concatenates them in
//! declaration order.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use super::ops::*;
use super::pipeline::{annwrel_reduction, pipeline, STEPS};
use super::registry::{abi_alpha_w, j_annihilator};
use super::report::*;
use super::sample::random_univariate;
use crate::arith::{LaurentPoly, RatFunc, Var};
use crate::error::{Error, Result};
use crate::ore::*;
use crate::par::Exec;
use crate::seq::rmatrix::{ratio_e_closed, ratio_eprime_closed, symbolic_ratios, symbolic_ratios_at_s1};
use crate::seq::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Hopf,
    Whitehead,
    Appendix,
    Rmatrix,
    All,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Hopf, Suite::Whitehead, Suite::Appendix, Suite::Rmatrix, Suite::All];

    /// Grid used when none is given.
    pub fn default_grid(self) -> [i64; 2] {
        match self {
            Suite::Hopf => HOPF_GRID,
            Suite::Whitehead | Suite::All => WHITEHEAD_GRID,
            Suite::Appendix => APPENDIX_GRID,
            Suite::Rmatrix => [0, 0],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Hopf => "hopf",
            Suite::Whitehead => "whitehead",
            Suite::Appendix => "appendix",
            Suite::Rmatrix => "rmatrix",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|x| x.to_string() == s).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

pub const HOPF_GRID: [i64; 2] = [25, 25];
pub const WHITEHEAD_GRID: [i64; 2] = [12, 12];
pub const APPENDIX_GRID: [i64; 2] = [8, 8];
pub const RANDOM_INSTANCES: usize = 200;
pub const RMATRIX_SAMPLES: usize = 100;
pub const SEED: u64 = 0x5eed_2024;

// ------------------------------------------------------------------ helpers

fn static_seq<T: Send + Sync>(cell: &'static OnceLock<T>, init: impl FnOnce() -> T) -> &'static T {
    cell.get_or_init(init)
}

fn seq_f() -> &'static WhiteheadF {
    static C: OnceLock<WhiteheadF> = OnceLock::new();
    static_seq(&C, WhiteheadF::default)
}

fn seq_fprime() -> &'static WhiteheadFprime {
    static C: OnceLock<WhiteheadFprime> = OnceLock::new();
    static_seq(&C, WhiteheadFprime::default)
}

fn seq_v() -> &'static WhiteheadV {
    static C: OnceLock<WhiteheadV> = OnceLock::new();
    static_seq(&C, WhiteheadV::default)
}

fn seq_g() -> &'static WhiteheadG {
    static C: OnceLock<WhiteheadG> = OnceLock::new();
    static_seq(&C, || WhiteheadG::new(y_op(M)).expect("Y is an operator in Em"))
}

fn seq_j() -> &'static NormalizedJ {
    static C: OnceLock<NormalizedJ> = OnceLock::new();
    static_seq(&C, || NormalizedJ::new(Link::Whitehead))
}

/// `op` applied to `seq` vanishes at every point.
pub fn annihilates(
    check: &str,
    op: &OrePoly,
    seq: &dyn JonesSequence,
    grid: [i64; 2],
    points: &[Vec<i64>],
    exec: Exec,
) -> VerificationReport {
    check_points(check, grid, points, exec, |p| Ok((ore_apply(op, seq, p)?, RatFunc::zero())))
}

/// `lhs` and `rhs` agree after application to `seq` at every point.
fn agree_on(
    check: &str,
    lhs: &OrePoly,
    rhs: &OrePoly,
    seq: &dyn JonesSequence,
    grid: [i64; 2],
    points: &[Vec<i64>],
    exec: Exec,
) -> VerificationReport {
    check_points(check, grid, points, exec, |p| Ok((ore_apply(lhs, seq, p)?, ore_apply(rhs, seq, p)?)))
}

fn is_root(p: &CommutativeOperatorPoly, values: &[(Shift, RatFunc)]) -> Result<(RatFunc, RatFunc)> {
    Ok((p.evaluate(values)?, RatFunc::zero()))
}

fn q(v: Var, k: i32) -> RatFunc {
    RatFunc::var_pow(v, k)
}

// ---------------------------------------------------------------- Hopf link

/// `A_{s;m}(H)`, `A_{s;n}(H)` and `A^bi(H)` annihilate `V_H`.
pub fn hopf_annihilation(grid: [i64; 2], exec: Exec) -> Vec<VerificationReport> {
    let pts = color_grid(grid);
    vec![
        annihilates("A_sm_H annihilates V_H", a_s_hopf(M), &HopfV, grid, &pts, exec),
        annihilates("A_sn_H annihilates V_H", a_s_hopf(N), &HopfV, grid, &pts, exec),
        annihilates("Abi_H annihilates V_H", abi_hopf(), &HopfV, grid, &pts, exec),
    ]
}

/// Division of `A_{s;m}(H)` by `A^bi(H)` with the explicit quotient, and the
/// symmetric combination.
pub fn hopf_division() -> Vec<VerificationReport> {
    let (l, r) = hlanndiv2_sides();
    vec![
        check_equal("A_sm_H = (Em/a(sQm) + p_H/a(Qm)) Abi_H + a(Qn)a(sQn)/(a(Qm)a(sQm)) A_sn_H", a_s_hopf(M), &hlanndiv_rhs()),
        check_equal("a(Qm)a(sQm) A_sm_H - a(Qn)a(sQn) A_sn_H = (a(Qm)Em + a(Qn)En - a(sQmQn)) Abi_H", &l, &r),
    ]
}

/// Roots of the `s = 1` Hopf operators.
pub fn hopf_roots() -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for (side, name) in [(M, "A_sm_H"), (N, "A_sn_H")] {
        for k in [1, -1] {
            let at = q(side.other().q, k);
            let check = format!("eps_s {} vanishes at {} = {}", name, side.e, at);
            out.push(check_equal_with(&check, || is_root(&a_s_hopf(side).eval_at_s1()?, &[(side.e, at.clone())])));
        }
    }
    for k in [1, -1] {
        let vals = [(Shift::Em, q(Var::Qn, k)), (Shift::En, q(Var::Qm, k))];
        let check = format!("eps_s Abi_H vanishes at (Em, En) = ({}, {})", vals[0].1, vals[1].1);
        out.push(check_equal_with(&check, || is_root(&abi_hopf().eval_at_s1()?, &vals)));
    }
    out
}

// ----------------------------------------------------------- Whitehead link

/// Symbolic identities among the Whitehead building blocks.
pub fn whitehead_symbolic() -> Vec<VerificationReport> {
    let mut out = vec![
        check_equal("u1 (Qm^2 Em - 1) = v1 (Em - s^2 Qm^2)", &(u1(M) * big_a(M)), &(v1(M) * big_b(M))),
        check_equal("Y = u2 u1 (Em - s^2Qm^2) = v2 v1 (Qm^2 Em - 1)", y_op(M), y_op_v(M)),
    ];
    for (name, l, r) in commutation_chains() {
        out.push(check_equal(&format!("commutation: {}", name), &l, &r));
    }
    out.push(check_equal("normalized tE1 relation", &whl_e1a(), &whl_e1_normalized()));
    let expansion = p0_tilde_w() + &(&(OrePoly::shift(Shift::TE1) - OrePoly::one()) * r_w());
    out.push(check_equal("P_W = P0t_W + (tE1 - 1) R_W", p_w(), &expansion));
    let r_uses_tq = r_w().terms().iter().any(|(_, c)| c.uses(Var::TQ1));
    out.push(check_equal("R_W is free of tQ1", &r_uses_tq, &false));
    let deg = p0_tilde_w().degree(Shift::Em).map_or(-1, |d| d as i64);
    out.push(check_equal("deg(P0t_W; Em) = 4", &deg, &4));
    out
}

/// The relations among shifts of `F`, applied to `F`.
pub fn whitehead_relations(grid: [i64; 2], exec: Exec) -> Vec<VerificationReport> {
    let pts = summand_grid(grid, 4);
    summand_relations()
        .into_iter()
        .map(|(name, l, r)| agree_on(&format!("{} holds on F", name), &l, &r, seq_f(), grid, &pts, exec))
        .collect()
}

/// `P_W` annihilates `F`; the closed form of `F'`; both forms of `R_W` agree on `F`.
pub fn whitehead_summand(grid: [i64; 2], exec: Exec) -> Vec<VerificationReport> {
    let pts = summand_grid(grid, 4);
    let weight = fprime_weight() * &OrePoly::constant(q(Var::Qm, 1));
    vec![
        annihilates("P_W annihilates F", p_w(), seq_f(), grid, &pts, exec),
        check_points("F' closed form = (s^2tQ1^4 + s^2tQ1^2 - 1 - tQ1^-2) Qm F", grid, &pts, exec, |p| {
            Ok((seq_fprime().eval(p)?, ore_apply(&weight, seq_f(), p)?))
        }),
        agree_on("R_W and Y (s^2tQ1^4 + s^2tQ1^2 - 1 - tQ1^-2) Qm agree on F", r_w(), r_w_displayed(), seq_f(), grid, &pts, exec),
    ]
}

/// The telescoping chain from `P_W` to `P1_W P0t_W`.
pub fn telescoping(grid: [i64; 2], exec: Exec) -> Vec<VerificationReport> {
    let pts3 = summand_grid(grid, 4);
    let pts2 = color_grid(grid);
    let g = seq_g();
    vec![
        check_points("P0t_W F(m,n,i) = -(G(m,n,i+1) - G(m,n,i))", grid, &pts3, exec, |p| {
            let lhs = ore_apply(p0_tilde_w(), seq_f(), p)?;
            let next = g.eval(&[p[0], p[1], p[2] + 1])?;
            Ok((lhs, &g.eval(p)? - &next))
        }),
        check_points("P0t_W V_W(m,n) = G(m,n,0)", grid, &pts2, exec, |p| {
            Ok((ore_apply(p0_tilde_w(), seq_v(), p)?, g.eval(&[p[0], p[1], 0])?))
        }),
        check_points("G(m,n,min(m+4,n)) = 0", grid, &pts2, exec, |p| {
            Ok((g.eval(&[p[0], p[1], (p[0] + 4).min(p[1])])?, RatFunc::zero()))
        }),
        check_points("G(m,n,0) displayed closed form = sum of c_l F'(m+l,n,0)", grid, &pts2, exec, |p| {
            Ok((whitehead_g0_closed(p[0], p[1])?, g.eval(&[p[0], p[1], 0])?))
        }),
        check_points("G(m,n,0) displayed closed form / (s - s^-1) = sum of c_l F'(m+l,n,0)", grid, &pts2, exec, |p| {
            Ok((whitehead_g0(p[0], p[1])?, g.eval(&[p[0], p[1], 0])?))
        }),
        annihilates("P1_W annihilates G(m,n,0)", p1_w(M), &WhiteheadG0, grid, &pts2, exec),
    ]
}

/// The `s = 1` evaluation of `Af_m(W)` and its annihilation of `V_W`.
pub fn main_evaluation(grid: [i64; 2], exec: Exec) -> Vec<VerificationReport> {
    let pts = color_grid(grid);
    let eps = af_w(M).eval_at_s1();
    let abstract_numer = &RatFunc::one() - &q(Var::Qm, 2);
    let factor = abelian_factor(M);
    let mut out = vec![
        check_equal_with("eps_s Af_m_W = -(E+1)(E-Qm^2) Alk_m_W / ((1+Qm^2)^2 Qm^2 Qn^2)", || {
            Ok((eps.clone()?, whlev_rhs(RatFunc::from_i64(-1))))
        }),
        check_equal_with("eps_s Af_m_W with the prefactor (1-Qm^2)/((1+Qm^2)^2 Qm^2 Qn^2)", || {
            Ok((eps.clone()?, whlev_rhs(abstract_numer)))
        })
        .informational(),
    ];
    for root in [RatFunc::from_i64(-1), q(Var::Qm, 2)] {
        let check = format!("(Em+1)(Em-Qm^2) vanishes at Em = {}", root);
        out.push(check_equal_with(&check, || is_root(&factor, &[(Shift::Em, root.clone())])));
    }
    out.push(annihilates("Af_m_W annihilates V_W", af_w(M), seq_v(), grid, &pts, exec));
    out.push(annihilates("Af_n_W annihilates V_W", af_w(N), seq_v(), grid, &pts, exec));
    out
}

/// The six listed `s = 1` roots `(Em, En)` of `A^bi(W)`.
pub fn whitehead_roots() -> Vec<(RatFunc, RatFunc)> {
    let neg = |x: RatFunc| -&x;
    vec![
        (RatFunc::one(), RatFunc::one()),
        (RatFunc::from_i64(-1), RatFunc::from_i64(-1)),
        (q(Var::Qm, 2), q(Var::Qn, 2)),
        (q(Var::Qm, -2), q(Var::Qn, -2)),
        (neg(q(Var::Qn, 2)), neg(q(Var::Qm, 2))),
        (neg(q(Var::Qn, -2)), neg(q(Var::Qm, -2))),
    ]
}

/// `A^bi(W)` annihilates `V_W`, its rescaled form and its roots.
pub fn bivariate(grid: [i64; 2], exec: Exec) -> Vec<VerificationReport> {
    let pts = color_grid(grid);
    let sqq = OrePoly::constant(&(&q(Var::S, 1) * &q(Var::Qm, 1)) * &q(Var::Qn, 1));
    let mut out = vec![
        annihilates("Abi_W annihilates V_W", abi_w(), seq_v(), grid, &pts, exec),
        annihilates("Abi_tilde_W annihilates V_W", abi_tilde_w(), seq_v(), grid, &pts, exec),
        check_equal("Abi_tilde_W = s Qm Qn Abi_W", abi_tilde_w(), &(&sqq * abi_w())),
    ];
    let eps = abi_w().eval_at_s1();
    for (em, en) in whitehead_roots() {
        let vals = [(Shift::Em, em), (Shift::En, en)];
        let check = format!("eps_s Abi_W vanishes at (Em, En) = ({}, {})", vals[0].1, vals[1].1);
        out.push(check_equal_with(&check, || is_root(eps.as_ref().map_err(Clone::clone)?, &vals)));
    }
    out
}

/// `A^bi;2 = (u1_n v1 + u1 v1_n) A~^bi`.
pub fn awalt2() -> Vec<VerificationReport> {
    let qt = abi2_quotient();
    vec![check_that(
        "Abi2_W = (u1_n v1 + u1 v1_n) Abi_tilde_W",
        Ok(check_right_divisor(abi2_w(), abi_tilde_w(), qt)),
        || ((qt * abi_tilde_w()).to_string(), abi2_w().to_string()),
    )]
}

/// The combination of `Af_m(W)` and `Af_n(W)` is a left multiple of `A^bi(W)`.
pub fn annwrel() -> Vec<VerificationReport> {
    let start = Instant::now();
    let reduction = annwrel_reduction();
    let reduced = match &reduction {
        Ok(r) if r.remainder.is_zero() => Vec::new(),
        Ok(r) => vec![Failure::new("symbolic", &r.remainder, "0")],
        Err(e) => vec![Failure::error("symbolic", e)],
    };
    let mut out = vec![VerificationReport::from_failures(
        "P1_W Y(sEn) Af_m_W - P1_W Y(sEm) Af_n_W reduces to 0 against Abi_W",
        [0, 0],
        reduced,
        start,
    )];
    out.push(check_equal_with("the reduction trace reproduces the combination", || {
        let r = reduction.as_ref().map_err(Clone::clone)?;
        Ok((replay(annwrel_combination(), abi_w(), r), r.remainder.clone()))
    }));
    let f = f_term();
    out.push(check_equal("f - f(m <-> n) = u2 u2_n Abi2_W", &(f - &f.swap_mn()), &(&(u2(M) * u2(N)) * abi2_w())));
    let lhs = &(y_op(N) * g_m_term()) - &(y_op(M) * g_n_term());
    let rhs = &(&(&(u2(M) * u2(N)) * u1(N)) * h_op()) * abi_tilde_w();
    out.push(check_equal("Y_n g_m - Y g_n = u2 u2_n u1_n h Abi_tilde_W", &lhs, &rhs));
    out
}

/// Replays the steps of a reduction of `p` against `d` and returns the final operator.
fn replay(p: &OrePoly, d: &OrePoly, r: &Reduction) -> OrePoly {
    let mut cur = p.clone();
    for st in &r.steps {
        let shifted = &OrePoly::shift_pow(Shift::Em, st.degree - 1) * d;
        cur = &(&st.tc * &cur) - &(&st.tdel * &shifted);
    }
    cur
}

/// Parity and annihilation of the normalized-invariant operators.
pub fn remarks(grid: [i64; 2], exec: Exec) -> Vec<VerificationReport> {
    let pts = color_grid(grid);
    let j_ann = j_annihilator();
    let alpha_op = abi_alpha_w();
    let even = |name: &str, p: &OrePoly| {
        check_that(&format!("{} has only even exponents", name), Ok(has_even_exponents(p)), || {
            (p.to_string(), "even exponents only".into())
        })
    };
    vec![
        annihilates("P1_W P0_W (Qm^2 - 1) annihilates J_W", &j_ann, seq_j(), grid, &pts, exec),
        even("P1_W P0_W (Qm^2 - 1)", &j_ann),
        annihilates("{B_n A - B A_n} alpha annihilates J_W", &alpha_op, seq_j(), grid, &pts, exec),
        even("{B_n A - B A_n} alpha", &alpha_op),
        check_that("A_sm_H has odd exponents (control)", Ok(!has_even_exponents(a_s_hopf(M))), || {
            (a_s_hopf(M).to_string(), "some odd exponent".into())
        }),
    ]
}

// ----------------------------------------------------------------- appendix

/// The five-step reduction of `Af'_m(W)` and its checks.
pub fn appendix(grid: [i64; 2], exec: Exec) -> Vec<VerificationReport> {
    let start = Instant::now();
    let pl = match pipeline() {
        Ok(p) => p,
        Err(e) => {
            let f = vec![Failure::error("symbolic", &e)];
            return vec![VerificationReport::from_failures("reduction of Afp_m_W against Abi_W", [0, 0], f, start)];
        }
    };
    let red = &pl.reduction;
    let mut out = vec![check_equal("reduction of Afp_m_W against Abi_W takes 5 steps", &red.steps.len(), &STEPS)];
    let (c1, _) = abi_split();
    let f1 = &(&c1.dilate_coefficients(Shift::Em, 4) * &pl.afp) - &(&OrePoly::shift_pow(Shift::Em, 4) * abi_w());
    out.push(check_equal("F1 = c1(s, En, s^4Qm, Qn) Afp_m_W - Em^4 Abi_W", pl.f(1), &f1));
    for k in 1..STEPS {
        let prev = pl.f(k);
        let next = &red.intermediates[k];
        let shifted = &OrePoly::shift_pow(Shift::Em, (STEPS - k - 1) as u32) * abi_w();
        let rhs = &(pl.tc(k) * prev) - &(pl.tdel(k) * &shifted);
        let name = if k + 1 == STEPS { "delta5".to_string() } else { format!("F{}", k + 1) };
        let check = format!("{} = tc{} F{} - tdel{} Em^{} Abi_W", name, k, k, k, STEPS - k - 1);
        out.push(check_equal(&check, next, &rhs));
    }
    for k in 2..=STEPS {
        let st = &red.steps[k - 1];
        out.push(check_equal_with(&format!("closure contract g~ f = f~ g at step {}", k), || {
            let cl = pl.closure(k)?;
            Ok((&cl.g_tilde * &st.leading, &cl.f_tilde * &st.target))
        }));
    }
    for k in 1..=STEPS {
        out.push(check_equal_with(&format!("deg(eps_s delta{}; En) = {}", k, k), || {
            let d = pl.delta_at_s1(k)?;
            Ok((d.degree(Shift::En).map_or(-1, |x| x as i64), k as i64))
        }));
    }
    let target = &abelian_factor(N) * &alk_w(N);
    out.push(check_that(
        "eps_s delta5 is proportional to (En+1)(En-Qn^2) Alk_n_W",
        pl.delta_at_s1(STEPS).map(|d| d.is_proportional(&target)),
        || (pl.delta_at_s1(STEPS).map(|d| d.to_string()).unwrap_or_default(), target.to_string()),
    ));
    let pts = color_grid(grid);
    out.push(annihilates("delta5 (denominators cleared) annihilates V_W", &pl.delta(STEPS).clear_denominators(), seq_v(), grid, &pts, exec));
    out
}

/// Closure contract and division reconstruction on seeded random instances.
pub fn closure_properties(count: usize, seed: u64, exec: Exec) -> Vec<VerificationReport> {
    let e = Shift::En;
    let instance = |i: usize| {
        let mut rng = StdRng::seed_from_u64(seed.wrapping_add(i as u64));
        let deg_f = rng.gen_range(1..=4);
        let f = random_univariate(&mut rng, e, deg_f);
        let g = random_univariate(&mut rng, e, 1);
        let deg_h = rng.gen_range(0..=3);
        let h = random_univariate(&mut rng, e, deg_h);
        (f, g, h)
    };
    let pts: Vec<Vec<i64>> = (0..count as i64).map(|i| vec![i]).collect();
    let grid = [count as i64, 1];
    vec![
        check_points(&format!("g~ f = f~ g on {} random instances", count), grid, &pts, exec, |p| {
            let (f, g, _) = instance(p[0] as usize);
            let cl = ore_closure_deg1(&f, &g, e)?;
            Ok((&cl.g_tilde * &f, &cl.f_tilde * &g))
        }),
        check_points(&format!("f = q g + r on {} random instances", count), grid, &pts, exec, |p| {
            let (f, _, h) = instance(p[0] as usize);
            let (qt, r) = skew_right_divide(&f, &h, e)?;
            if r.degree(e).is_some_and(|d| Some(d) >= h.degree(e)) && !r.is_zero() {
                return Err(Error::DegreeMismatch { what: "remainder".into(), expected: 0, got: d_or(&r, e) });
            }
            Ok((&(&qt * &h) + &r, f))
        }),
    ]
}

fn d_or(p: &OrePoly, e: Shift) -> i64 {
    p.degree(e).map_or(-1, |d| d as i64)
}

// ----------------------------------------------------------------- R-matrix

/// `s^(k1+k3-k2-k4) (1 - s^(2(m+1-k3+k4))) / (1 - s^(2(m+1+k2-k1)))`, the
/// shift ratio in `m` obtained by expanding the summand.
pub fn ratio_e_expanded(m: i64, k: [i64; 4]) -> Result<RatFunc> {
    let [k1, k2, k3, k4] = k;
    let s = |e: i64| LaurentPoly::var_pow(Var::S, e as i32);
    let one = LaurentPoly::one();
    let num = &s(k1 + k3 - k2 - k4) * &(&one - &s(2 * (m + 1 - k3 + k4)));
    RatFunc::new(&num, &(&one - &s(2 * (m + 1 + k2 - k1))))
}

/// Seeded tuples `(m, m', k)` with `R^+(m, m', k) != 0`; `shift_m` selects
/// the coordinate whose closed ratio must be defined. Returns the tuples and
/// the number of degenerate draws skipped.
pub fn rmatrix_samples(count: usize, seed: u64, shift_m: bool) -> (Vec<Vec<i64>>, usize) {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut skipped = 0;
    while out.len() < count {
        let m = rng.gen_range(0..=5);
        let mp = rng.gen_range(0..=5);
        let k: [i64; 4] = std::array::from_fn(|_| rng.gen_range(0..=4));
        let base = rmatrix_value(RSign::Plus, m, mp, k);
        let closed = if shift_m { ratio_e_closed(m, k) } else { ratio_eprime_closed(mp, k) };
        let expanded_ok = !shift_m || ratio_e_expanded(m, k).is_ok();
        match (base, closed) {
            (Ok(b), Ok(_)) if !b.is_zero() && expanded_ok => out.push(vec![m, mp, k[0], k[1], k[2], k[3]]),
            _ => skipped += 1,
        }
    }
    (out, skipped)
}

fn ratio_at(p: &[i64], shift_m: bool) -> Result<RatFunc> {
    let (m, mp, k) = (p[0], p[1], [p[2], p[3], p[4], p[5]]);
    let base = rmatrix_value(RSign::Plus, m, mp, k)?;
    let next = if shift_m {
        rmatrix_value(RSign::Plus, m + 1, mp, k)?
    } else {
        rmatrix_value(RSign::Plus, m, mp + 1, k)?
    };
    Ok(&next / &base)
}

/// Shift ratios of `R^+` on sampled tuples and their `s = 1` forms.
pub fn rmatrix(count: usize, seed: u64, exec: Exec) -> Vec<VerificationReport> {
    let (pts_e, skip_e) = rmatrix_samples(count, seed, true);
    let (pts_ep, skip_ep) = rmatrix_samples(count, seed ^ 1, false);
    let grid = [count as i64, 1];
    let (sym, sym_s1) = (symbolic_ratios(), symbolic_ratios_at_s1());
    let name = |what: &str, skipped: usize| format!("{} on {} samples ({} degenerate draws skipped)", what, count, skipped);
    vec![
        check_points(&name("E R+/R+ matches the displayed closed form", skip_e), grid, &pts_e, exec, |p| {
            Ok((ratio_at(p, true)?, ratio_e_closed(p[0], [p[2], p[3], p[4], p[5]])?))
        }),
        check_points(&name("E R+/R+ matches the expanded ratio", skip_e), grid, &pts_e, exec, |p| {
            Ok((ratio_at(p, true)?, ratio_e_expanded(p[0], [p[2], p[3], p[4], p[5]])?))
        }),
        check_points(&name("E' R+/R+ matches the displayed closed form", skip_ep), grid, &pts_ep, exec, |p| {
            Ok((ratio_at(p, false)?, ratio_eprime_closed(p[1], [p[2], p[3], p[4], p[5]])?))
        }),
        check_equal_with("eps_s of the E ratio equals its displayed s = 1 form", || Ok((sym.0.eval_s1()?, sym_s1.0))),
        check_equal_with("eps_s of the E' ratio equals its displayed s = 1 form", || Ok((sym.1.eval_s1()?, sym_s1.1))),
    ]
}

// ------------------------------------------------------------------- suites

type Topic = Box<dyn Fn(Exec) -> Vec<VerificationReport> + Send + Sync>;

fn topics(suite: Suite, grid: Option<[i64; 2]>) -> Vec<Topic> {
    let g = |s: Suite| grid.unwrap_or(s.default_grid());
    let mut out: Vec<Topic> = Vec::new();
    let include = |s: Suite| suite == s || suite == Suite::All;
    if include(Suite::Hopf) {
        let h = g(Suite::Hopf);
        out.push(Box::new(move |x| hopf_annihilation(h, x)));
        out.push(Box::new(|_| hopf_division()));
        out.push(Box::new(|_| hopf_roots()));
    }
    if include(Suite::Whitehead) {
        let w = g(Suite::Whitehead);
        out.push(Box::new(|_| whitehead_symbolic()));
        out.push(Box::new(move |x| whitehead_relations(w, x)));
        out.push(Box::new(move |x| whitehead_summand(w, x)));
        out.push(Box::new(move |x| telescoping(w, x)));
        out.push(Box::new(move |x| main_evaluation(w, x)));
        out.push(Box::new(move |x| bivariate(w, x)));
        out.push(Box::new(|_| awalt2()));
        out.push(Box::new(|_| annwrel()));
        out.push(Box::new(move |x| remarks(w, x)));
    }
    if include(Suite::Appendix) {
        let a = g(Suite::Appendix);
        out.push(Box::new(move |x| appendix(a, x)));
        out.push(Box::new(|x| closure_properties(RANDOM_INSTANCES, SEED, x)));
    }
    if include(Suite::Rmatrix) {
        out.push(Box::new(|x| rmatrix(RMATRIX_SAMPLES, SEED, x)));
    }
    out
}

/// Runs every check of `suite`. `grid` overrides the default grids.
pub fn run_suite(suite: Suite, grid: Option<[i64; 2]>, exec: Exec) -> Vec<VerificationReport> {
    let ts = topics(suite, grid);
    exec.map(&ts, |t| t(exec)).into_iter().flatten().collect()
}

/// `true` when no report failed (skipped reports do not count as failures).
pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}
