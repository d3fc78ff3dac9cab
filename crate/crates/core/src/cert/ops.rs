//! Constructors for the Hopf and Whitehead link operators. Every operator is
//! rebuilt from its defining formula on first use and cached.

use std::sync::OnceLock;

use crate::arith::{RatFunc, Var};
use crate::ore::{CommutativeOperatorPoly, OrePoly, Shift};

/// One link component: its shift and coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Side {
    pub e: Shift,
    pub q: Var,
}

pub const M: Side = Side { e: Shift::Em, q: Var::Qm };
pub const N: Side = Side { e: Shift::En, q: Var::Qn };

impl Side {
    fn slot(self) -> usize {
        if self == M {
            0
        } else {
            1
        }
    }

    pub fn other(self) -> Side {
        if self == M {
            N
        } else {
            M
        }
    }
}

macro_rules! cached {
    ($(#[$m:meta])* $vis:vis fn $name:ident() -> $t:ty $body:block) => {
        $(#[$m])*
        $vis fn $name() -> &'static $t {
            static CELL: OnceLock<$t> = OnceLock::new();
            CELL.get_or_init(|| $body)
        }
    };
    ($(#[$m:meta])* $vis:vis fn $name:ident($side:ident) -> $t:ty $body:block) => {
        $(#[$m])*
        $vis fn $name($side: Side) -> &'static $t {
            static CELLS: [OnceLock<$t>; 2] = [OnceLock::new(), OnceLock::new()];
            CELLS[$side.slot()].get_or_init(|| $body)
        }
    };
}

pub(crate) fn s(k: i32) -> RatFunc {
    RatFunc::var_pow(Var::S, k)
}

pub(crate) fn qv(v: Var, k: i32) -> RatFunc {
    RatFunc::var_pow(v, k)
}

pub(crate) fn c(x: RatFunc) -> OrePoly {
    OrePoly::constant(x)
}

pub(crate) fn int(k: i64) -> RatFunc {
    RatFunc::from_i64(k)
}

fn shift(side: Side) -> OrePoly {
    OrePoly::shift(side.e)
}

/// `a(x) = x - x^-1`.
pub fn a_fn(x: &RatFunc) -> RatFunc {
    x - &x.inv().expect("nonzero argument")
}

// ---------------------------------------------------------------- Hopf link

cached! {
    /// `A_{s;j}(H) = E_j^2 - (Q_k + Q_k^-1) E_j + 1` for the other coordinate `Q_k`.
    pub fn a_s_hopf(side) -> OrePoly {
        let qk = side.other().q;
        let e = shift(side);
        &(&e.pow(2) - &(&c(&qv(qk, 1) + &qv(qk, -1)) * &e)) + &OrePoly::one()
    }
}

cached! {
    /// `a(Qm) Em - a(Qn) En + a(Qn Qm^-1)`.
    pub fn abi_hopf() -> OrePoly {
        let am = a_fn(&qv(Var::Qm, 1));
        let an = a_fn(&qv(Var::Qn, 1));
        let amn = a_fn(&(&qv(Var::Qn, 1) * &qv(Var::Qm, -1)));
        &(&(&c(am) * &shift(M)) - &(&c(an) * &shift(N))) + &c(amn)
    }
}

cached! {
    /// `p = a(Qn)/a(sQm) En - Qn - Qn^-1 - a(Qn/(sQm))/a(sQm)`.
    pub fn p_hopf() -> OrePoly {
        let a_sqm = a_fn(&(&s(1) * &qv(Var::Qm, 1)));
        let a_qn = a_fn(&qv(Var::Qn, 1));
        let ratio = a_fn(&(&(&qv(Var::Qn, 1) * &qv(Var::Qm, -1)) * &s(-1)));
        let first = &c(&a_qn / &a_sqm) * &shift(N);
        let rest = &(&qv(Var::Qn, 1) + &qv(Var::Qn, -1)) + &(&ratio / &a_sqm);
        &first - &c(rest)
    }
}

/// Both sides of the division of `A_{s;m}(H)` by the bivariate operator:
/// `(1/a(sQm) Em + p/a(Qm)) A^bi + a(Qn)a(sQn)/(a(Qm)a(sQm)) A_{s;n}`.
pub fn hlanndiv_rhs() -> OrePoly {
    let a_qm = a_fn(&qv(Var::Qm, 1));
    let a_sqm = a_fn(&(&s(1) * &qv(Var::Qm, 1)));
    let a_qn = a_fn(&qv(Var::Qn, 1));
    let a_sqn = a_fn(&(&s(1) * &qv(Var::Qn, 1)));
    let quot = &(&c(a_sqm.inv().unwrap()) * &shift(M)) + &(p_hopf() * &c(a_qm.inv().unwrap()));
    let tail = c(&(&a_qn * &a_sqn) / &(&a_qm * &a_sqm));
    &(&quot * abi_hopf()) + &(&tail * a_s_hopf(N))
}

/// `(a(Qm)a(sQm) A_{s;m} - a(Qn)a(sQn) A_{s;n}, {a(Qm)Em + a(Qn)En - a(sQmQn)} A^bi)`.
pub fn hlanndiv2_sides() -> (OrePoly, OrePoly) {
    let a_qm = a_fn(&qv(Var::Qm, 1));
    let a_sqm = a_fn(&(&s(1) * &qv(Var::Qm, 1)));
    let a_qn = a_fn(&qv(Var::Qn, 1));
    let a_sqn = a_fn(&(&s(1) * &qv(Var::Qn, 1)));
    let lhs = &(&c(&a_qm * &a_sqm) * a_s_hopf(M)) - &(&c(&a_qn * &a_sqn) * a_s_hopf(N));
    let a_mn = a_fn(&(&(&s(1) * &qv(Var::Qm, 1)) * &qv(Var::Qn, 1)));
    let left = &(&(&c(a_qm) * &shift(M)) + &(&c(a_qn) * &shift(N))) - &c(a_mn);
    (lhs, &left * abi_hopf())
}

// ----------------------------------------------------------- Whitehead link

/// `Phi_k(Q) = 1 - s^k Q^4`.
pub fn phi(k: i32, side: Side) -> RatFunc {
    &RatFunc::one() - &(&s(k) * &qv(side.q, 4))
}

fn inv(x: &RatFunc) -> RatFunc {
    x.inv().expect("nonzero")
}

cached! {
    /// `Q^2 E - 1`.
    pub fn big_a(side) -> OrePoly {
        &(&c(qv(side.q, 2)) * &shift(side)) - &OrePoly::one()
    }
}

cached! {
    /// `E - s^2 Q^2`.
    pub fn big_b(side) -> OrePoly {
        &shift(side) - &c(&s(2) * &qv(side.q, 2))
    }
}

cached! {
    /// `u1 = E / Phi_6 - s^2 Q^2 / Phi_2`.
    pub fn u1(side) -> OrePoly {
        &(&c(inv(&phi(6, side))) * &shift(side)) - &c(&(&s(2) * &qv(side.q, 2)) / &phi(2, side))
    }
}

cached! {
    /// `v1 = s^2 Q^2 E / Phi_6 - 1 / Phi_2`.
    pub fn v1(side) -> OrePoly {
        &(&c(&(&s(2) * &qv(side.q, 2)) / &phi(6, side)) * &shift(side)) - &c(inv(&phi(2, side)))
    }
}

cached! {
    pub fn u2(side) -> OrePoly {
        let e = shift(side);
        let q = side.q;
        let t2 = c(&(&s(12) * &qv(q, 4)) / &(&phi(10, side) * &phi(12, side)));
        let t1 = c(&(&(&s(4) * &(&int(1) + &s(2))) * &qv(q, 2)) / &(&phi(6, side) * &phi(10, side)));
        let t0 = c(inv(&(&phi(4, side) * &phi(6, side))));
        &(&(&t2 * &e.pow(2)) - &(&t1 * &e)) + &t0
    }
}

cached! {
    pub fn v2(side) -> OrePoly {
        let e = shift(side);
        let q = side.q;
        let t2 = c(inv(&(&phi(10, side) * &phi(12, side))));
        let t1 = c(&(&(&s(2) * &(&int(1) + &s(2))) * &qv(q, 2)) / &(&phi(6, side) * &phi(10, side)));
        let t0 = c(&(&s(4) * &qv(q, 4)) / &(&phi(4, side) * &phi(6, side)));
        &(&(&t2 * &e.pow(2)) - &(&t1 * &e)) + &t0
    }
}

cached! {
    /// `Y = u2 u1 (E - s^2 Q^2)`.
    pub fn y_op(side) -> OrePoly {
        &(u2(side) * u1(side)) * big_b(side)
    }
}

cached! {
    /// `Y` through its second factorization `v2 v1 (Q^2 E - 1)`.
    pub fn y_op_v(side) -> OrePoly {
        &(v2(side) * v1(side)) * big_a(side)
    }
}

fn te1() -> OrePoly {
    OrePoly::shift(Shift::TE1)
}

fn qm(k: i32) -> OrePoly {
    c(qv(Var::Qm, k))
}

fn qn(k: i32) -> OrePoly {
    c(qv(Var::Qn, k))
}

fn sp(k: i32) -> OrePoly {
    c(s(k))
}

/// `s^2 Qm^2 + s^-2 Qm^-2`.
fn sym_qm() -> OrePoly {
    &(&sp(2) * &qm(2)) + &(&sp(-2) * &qm(-2))
}

cached! {
    /// The braced summands of the annihilator of `F`, before the common right factor `Qm`.
    pub fn p_w_parts() -> Vec<OrePoly> {
        let (u1, v1, u2, v2) = (u1(M), v1(M), u2(M), v2(M));
        let (a, b, y) = (big_a(M), big_b(M), y_op(M));
        let t1 = &(&(&(&sp(2) * &te1()) - &sp(4)) * &(u2 * v1)) * a;
        let t2 = &(&(&sp(2) * &(&(&qn(2) + &te1()) + &qn(-2))) * &(u2 * u1)) * a;
        let t3 = &(&(&sp(2) * &(u2 * u1)) * &sym_qm()) * a;
        let t4 = &(&(&sp(2) - &sp(4)) * u2) * a;
        let mix = [qm(2) * qn(2), qm(2) * qn(-2), OrePoly::from_i64(2), te1(), qm(-2) * qn(2), qm(-2) * qn(-2)];
        let t5 = -&(y * &mix.into_iter().sum::<OrePoly>());
        let t6 = &(&(&sp(-2) * &(&(&qn(2) - &(&sp(2) * &te1())) + &qn(-2))) * &(v2 * v1)) * b;
        let t7 = &(&(&sp(-2) * &(v2 * v1)) * &sym_qm()) * b;
        let t8 = &(&(&(&sp(-4) - &sp(-2)) * v2) * &qm(-2)) * b;
        let t9 = -&(&(&sp(-4) * &(v2 * u1)) * b);
        vec![t1, t2, t3, t4, t5, t6, t7, t8, t9]
    }
}

cached! {
    /// Annihilator `P_W(s, Em, Qm, Qn, tE1)` of the summand `F(m, n, i)`.
    pub fn p_w() -> OrePoly {
        &p_w_parts().iter().cloned().sum::<OrePoly>() * &qm(1)
    }
}

cached! {
    /// `P_W` at `tE1 = 1`.
    pub fn p0_tilde_w() -> OrePoly {
        p_w().set_shift_to_one(Shift::TE1)
    }
}

cached! {
    /// The `tE1` coefficient of `P_W`, so that `P_W = P0~ + (tE1 - 1) R_W`.
    pub fn r_w() -> OrePoly {
        p_w().coefficient_of(Shift::TE1, 1)
    }
}

cached! {
    /// `s^2 tQ1^4 + s^2 tQ1^2 - 1 - tQ1^-2`, the weight turning `F` into `F'` (with `Qm`).
    pub fn fprime_weight() -> OrePoly {
        let tq = |k: i32| c(qv(Var::TQ1, k));
        &(&(&(&sp(2) * &tq(4)) + &(&sp(2) * &tq(2))) - &OrePoly::one()) - &tq(-2)
    }
}

cached! {
    /// `R_W` in its displayed form `Y (s^2 tQ1^4 + s^2 tQ1^2 - 1 - tQ1^-2) Qm`.
    pub fn r_w_displayed() -> OrePoly {
        &(y_op(M) * fprime_weight()) * &qm(1)
    }
}

cached! {
    /// `P1_W = (Em + 1) (1 - s^2 Qm^2)(1 - s^6 Qm^2) / (1 + s^4 Qm^2)`.
    pub fn p1_w(side) -> OrePoly {
        let q = side.q;
        let one = RatFunc::one();
        let r = &(&(&one - &(&s(2) * &qv(q, 2))) * &(&one - &(&s(6) * &qv(q, 2)))) / &(&one + &(&s(4) * &qv(q, 2)));
        &(&shift(side) + &OrePoly::one()) * &c(r)
    }
}

cached! {
    /// `P0_W = P0~_W Qm^-1`.
    pub fn p0_w() -> OrePoly {
        p0_tilde_w() * &qm(-1)
    }
}

cached! {
    /// `Af(W) = P1_W(s, sE, Q) P0_W(s, sE, Q, Q')` for either component.
    pub fn af_w(side) -> OrePoly {
        if side == M {
            let p1 = p1_w(M).shift_rescale_s(Shift::Em, 1);
            let p0 = p0_w().shift_rescale_s(Shift::Em, 1);
            &p1 * &p0
        } else {
            af_w(M).swap_mn()
        }
    }
}

/// `A^Lk(W)(E, Q, Q')` for the component with shift `E` and coordinate `Q`.
pub fn alk_w(side: Side) -> CommutativeOperatorPoly {
    let (a, b) = (side.q, side.other().q);
    let t = |pairs: &[(i64, i32, i32)]| -> RatFunc {
        pairs.iter().map(|&(k, x, y)| &(&int(k) * &qv(a, x)) * &qv(b, y)).sum()
    };
    let e = CommutativeOperatorPoly::shift(side.e);
    let c3 = t(&[(1, 4, 2)]);
    let c2 = t(&[(1, 4, 4), (-1, 2, 4), (1, 4, 0), (-2, 2, 2), (-1, 2, 0), (1, 0, 2)]);
    let c1 = t(&[(1, 4, 2), (-1, 2, 4), (-2, 2, 2), (1, 0, 4), (-1, 2, 0), (1, 0, 0)]);
    let c0 = t(&[(1, 0, 2)]);
    let k = CommutativeOperatorPoly::constant;
    &(&(&(&k(c3) * &e.pow(3)) + &(&k(c2) * &e.pow(2))) + &(&k(c1) * &e)) + &k(c0)
}

/// `(E + 1)(E - Q^2)` as a commutative polynomial.
pub fn abelian_factor(side: Side) -> CommutativeOperatorPoly {
    let e = CommutativeOperatorPoly::shift(side.e);
    let one = CommutativeOperatorPoly::one();
    &(&e + &one) * &(&e - &CommutativeOperatorPoly::var(side.q).pow(2))
}

/// Right side of the `s = 1` evaluation of `Af_m(W)` with numerator `numer`
/// in the prefactor `numer / ((1 + Qm^2)^2 Qm^2 Qn^2)`.
pub fn whlev_rhs(numer: RatFunc) -> CommutativeOperatorPoly {
    let q2 = qv(Var::Qm, 2);
    let den = &(&(&(&int(1) + &q2) * &(&int(1) + &q2)) * &q2) * &qv(Var::Qn, 2);
    let pref = CommutativeOperatorPoly::constant(&numer / &den);
    &(&pref * &abelian_factor(M)) * &alk_w(M)
}

cached! {
    /// `A^bi(W) = (En - sQn^2)(sQm^2 Em - 1) - (Em - sQm^2)(sQn^2 En - 1)`.
    pub fn abi_w() -> OrePoly {
        let lin = |side: Side| &shift(side) - &c(&s(1) * &qv(side.q, 2));
        let tilt = |side: Side| &(&c(&s(1) * &qv(side.q, 2)) * &shift(side)) - &OrePoly::one();
        &(&lin(N) * &tilt(M)) - &(&lin(M) * &tilt(N))
    }
}

cached! {
    /// `{(En - s^2Qn^2)(Qm^2Em - 1) - (Em - s^2Qm^2)(Qn^2En - 1)} Qm Qn`.
    pub fn abi_tilde_w() -> OrePoly {
        &(&(big_b(N) * big_a(M)) - &(big_b(M) * big_a(N))) * &(&qm(1) * &qn(1))
    }
}

cached! {
    /// `{u1(n)(En - s^2Qn^2) v1(m)(Qm^2Em - 1) - u1(m)(Em - s^2Qm^2) v1(n)(Qn^2En - 1)} Qm Qn`.
    pub fn abi2_w() -> OrePoly {
        let left = &(&(u1(N) * big_b(N)) * v1(M)) * big_a(M);
        let right = &(&(u1(M) * big_b(M)) * v1(N)) * big_a(N);
        &(&left - &right) * &(&qm(1) * &qn(1))
    }
}

cached! {
    /// The explicit left quotient `u1(n) v1(m) + u1(m) v1(n)` of `A^bi;2` by `A~^bi`.
    pub fn abi2_quotient() -> OrePoly {
        &(u1(N) * v1(M)) + &(u1(M) * v1(N))
    }
}

/// `c1`, `c0` with `A^bi(W) = c1 Em + c0`.
pub fn abi_split() -> (OrePoly, OrePoly) {
    (abi_w().coefficient_of(Shift::Em, 1), abi_w().coefficient_of(Shift::Em, 0))
}

/// `alpha(Qm, Qn) = (Qm^2 - 1)(Qn^2 - 1)`.
pub fn alpha() -> RatFunc {
    &(&qv(Var::Qm, 2) - &int(1)) * &(&qv(Var::Qn, 2) - &int(1))
}

cached! {
    /// `h = u1 (s^2 Qm^2 + s^-2 Qm^-2) + 1 - s^2`.
    pub fn h_op() -> OrePoly {
        &(&(u1(M) * &sym_qm()) + &OrePoly::one()) - &sp(2)
    }
}

cached! {
    /// `f = Y(n) u2(m) v1(m) (Qm^2 Em - 1) Qm Qn`.
    pub fn f_term() -> OrePoly {
        &(&(&(y_op(N) * u2(M)) * v1(M)) * big_a(M)) * &(&qm(1) * &qn(1))
    }
}

cached! {
    /// `g_m = u2(m) h (Qm^2 Em - 1) Qm Qn`.
    pub fn g_m_term() -> OrePoly {
        &(&(u2(M) * h_op()) * big_a(M)) * &(&qm(1) * &qn(1))
    }
}

cached! {
    /// `g_n = u2(n) u1(n) (Qm^2 + Qm^-2) (Qn^2 En - 1) Qm Qn`.
    pub fn g_n_term() -> OrePoly {
        &(&(&(u2(N) * u1(N)) * &(&qm(2) + &qm(-2))) * big_a(N)) * &(&qm(1) * &qn(1))
    }
}

cached! {
    /// `P1_W(s, sEn, Qn) Y(s, sEn, Qn) Af_m(W) - P1_W(s, sEm, Qm) Y(s, sEm, Qm) Af_n(W)`.
    pub fn annwrel_combination() -> OrePoly {
        let p1s = p1_w(M).shift_rescale_s(Shift::Em, 1);
        let ys = y_op(M).shift_rescale_s(Shift::Em, 1);
        let lead_m = &p1s * &ys;
        let lead_n = lead_m.swap_mn();
        &(&lead_n * af_w(M)) - &(&lead_m * af_w(N))
    }
}

/// `(lhs, rhs)` pairs of the relations satisfied by `F(m, n, i)`.
pub fn summand_relations() -> Vec<(&'static str, OrePoly, OrePoly)> {
    let tq = |k: i32| c(qv(Var::TQ1, k));
    let (a, b) = (big_a(M), big_b(M));
    let q = qm(1);
    let whl_q2 = (&(b * &tq(2)) * &q, a * &q);
    let whl_q2inv = (&(a * &tq(-2)) * &q, b * &q);
    let whl_q4 = (&(&(u1(M) * b) * &tq(4)) * &q, &(v1(M) * a) * &q);
    let whl_q4inv = (&(&(v1(M) * a) * &tq(-4)) * &q, &(u1(M) * b) * &q);
    let qm2 = |k: i32| &(&sp(k) * &qm(2)) * &tq(2);
    let qn2 = |k: i32| &(&sp(k) * &qn(2)) * &tq(2);
    let one = OrePoly::one();
    let e1_left = &(&(&(&(&sp(2) * &qm(2)) * &qn(2)) * &(&(&sp(6) * &tq(4)) - &one)) * &(&(&sp(2) * &tq(2)) + &one))
        * &(&tq(2) * &te1());
    let e1_right = &(&(&(&qm2(2) - &one) * &(&qm(2) - &(&sp(2) * &tq(2)))) * &(&qn2(2) - &one))
        * &(&qn(2) - &(&sp(2) * &tq(2)));
    vec![
        ("whlQ2", whl_q2.0, whl_q2.1),
        ("whlQ2inv", whl_q2inv.0, whl_q2inv.1),
        ("whlQ4", whl_q4.0, whl_q4.1),
        ("whlQ4inv", whl_q4inv.0, whl_q4inv.1),
        ("whlE1", e1_left, e1_right),
        ("whlE1a", whl_e1a(), OrePoly::zero()),
    ]
}

/// The normalized form of the `tE1` relation, `{tE1 (s^2tQ1^4 + ...) - ...} Qm`.
pub fn whl_e1a() -> OrePoly {
    let tq = |k: i32| c(qv(Var::TQ1, k));
    let sum4 = [qm(2), qn(2), qm(-2), qn(-2)].into_iter().sum::<OrePoly>();
    let mix = [qm(2) * qn(2), qm(2) * qn(-2), OrePoly::from_i64(2), qm(-2) * qn(2), qm(-2) * qn(-2)]
        .into_iter()
        .sum::<OrePoly>();
    let body = [
        &te1() * fprime_weight(),
        -&(&sp(4) * &tq(4)),
        &(&sp(2) * &sum4) * &tq(2),
        -&mix,
        &(&sp(-2) * &sum4) * &tq(-2),
        -&(&sp(-4) * &tq(-4)),
    ]
    .into_iter()
    .sum::<OrePoly>();
    &body * &qm(1)
}

/// `(s^4 Qm^2 Qn^2 tQ1^4)^-1 Qm` applied on the left of the unnormalized `tE1` relation.
pub fn whl_e1_normalized() -> OrePoly {
    let rels = summand_relations();
    let (_, l, r) = &rels[4];
    let scale = &(&(&(&s(-4) * &qv(Var::Qm, -2)) * &qv(Var::Qn, -2)) * &qv(Var::TQ1, -4)) * &qv(Var::Qm, 1);
    &c(scale) * &(l - r)
}

/// The commutation identities used to clear `(Qm^2 + Qm^-2) tQ1^{+-2}`.
pub fn commutation_chains() -> Vec<(&'static str, OrePoly, OrePoly)> {
    let tq = |k: i32| c(qv(Var::TQ1, k));
    let (a, b) = (big_a(M), big_b(M));
    let one = OrePoly::one();
    let qsum = &qm(2) + &qm(-2);
    let c1 = (
        &(b * &qm(2)) * &tq(2),
        &(&(&(&sp(2) * &qm(2)) * b) * &tq(2)) + &(&(&(&sp(2) * &(&sp(2) - &one)) * &qm(4)) * &tq(2)),
    );
    let c2 = (
        &(b * &qm(-2)) * &tq(2),
        &(&(&(&sp(-2) * &qm(-2)) * b) * &tq(2)) + &(&(&one - &sp(2)) * &tq(2)),
    );
    let c3 = (
        &(b * &qsum) * &tq(2),
        &(&(&sym_qm() * b) * &tq(2)) + &(&(&(&one - &sp(2)) * &(&one - &(&sp(2) * &qm(4)))) * &tq(2)),
    );
    let c4 = (u1(M).clone(), b * &c(inv(&phi(2, M))));
    let c5 = (
        &(&(u1(M) * b) * &qsum) * &tq(2),
        &(&(&(u1(M) * &sym_qm()) * b) * &tq(2)) + &(&(&(&one - &sp(2)) * b) * &tq(2)),
    );
    let c6 = (
        &(&(v1(M) * a) * &qsum) * &tq(-2),
        &(&(&(v1(M) * &sym_qm()) * a) * &tq(-2)) + &(&(&(&(&sp(-2) * &(&one - &sp(2))) * &qm(-2)) * a) * &tq(-2)),
    );
    vec![
        ("Qm^2 tQ1^2", c1.0, c1.1),
        ("Qm^-2 tQ1^2", c2.0, c2.1),
        ("(Qm^2 + Qm^-2) tQ1^2", c3.0, c3.1),
        ("u1 = (Em - s^2Qm^2)/Phi_2", c4.0, c4.1),
        ("u1 chain", c5.0, c5.1),
        ("v1 chain", c6.0, c6.1),
    ]
}

/// `true` when every coefficient of `p` uses only even exponents.
pub fn has_even_exponents(p: &OrePoly) -> bool {
    p.terms().iter().all(|(_, x)| {
        [x.numer(), x.denom()].iter().all(|z| z.terms().iter().all(|(m, _)| m.0.iter().all(|e| e % 2 == 0)))
    })
}
