//! Named operators, each rebuilt from its defining formula.

use std::fmt;

use sha2::{Digest, Sha256};

use super::ops::*;
use super::pipeline::{pipeline, STEPS};
use crate::arith::{RatFunc, Var};
use crate::error::{Error, Result};
use crate::ore::{CommutativeOperatorPoly, OrePoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedValue {
    Ore(OrePoly),
    Commutative(CommutativeOperatorPoly),
}

impl fmt::Display for NamedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedValue::Ore(p) => p.fmt(f),
            NamedValue::Commutative(p) => p.fmt(f),
        }
    }
}

impl NamedValue {
    pub fn as_ore(&self) -> Option<&OrePoly> {
        match self {
            NamedValue::Ore(p) => Some(p),
            NamedValue::Commutative(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedOperator {
    pub name: String,
    pub value: NamedValue,
    /// The defining formula the value was built from.
    pub anchor: String,
}

impl NamedOperator {
    /// SHA-256 of the canonical text form, as lowercase hex.
    pub fn fingerprint(&self) -> String {
        let digest = Sha256::digest(self.value.to_string().as_bytes());
        digest.iter().map(|b| format!("{:02x}", b)).collect()
    }
}

/// Names with a fixed definition, with their defining formulas.
const FIXED: &[(&str, &str)] = &[
    ("A_sm_H", "Em^2 - (Qn + Qn^-1) Em + 1"),
    ("A_sn_H", "En^2 - (Qm + Qm^-1) En + 1"),
    ("Abi_H", "a(Qm) Em - a(Qn) En + a(Qn Qm^-1), a(x) = x - x^-1"),
    ("p_H", "a(Qn)/a(sQm) En - Qn - Qn^-1 - a(Qn/(sQm))/a(sQm)"),
    ("a_Qm", "a(Qm) = Qm - Qm^-1"),
    ("a_sQm", "a(sQm) = sQm - s^-1 Qm^-1"),
    ("Phi2", "1 - s^2 Qm^4"),
    ("Phi4", "1 - s^4 Qm^4"),
    ("Phi6", "1 - s^6 Qm^4"),
    ("Phi10", "1 - s^10 Qm^4"),
    ("Phi12", "1 - s^12 Qm^4"),
    ("u1", "Em/Phi6 - s^2 Qm^2/Phi2"),
    ("v1", "s^2 Qm^2 Em/Phi6 - 1/Phi2"),
    ("u2", "s^12 Qm^4/(Phi10 Phi12) Em^2 - s^4(1 + s^2) Qm^2/(Phi6 Phi10) Em + 1/(Phi4 Phi6)"),
    ("v2", "1/(Phi10 Phi12) Em^2 - s^2(1 + s^2) Qm^2/(Phi6 Phi10) Em + s^4 Qm^4/(Phi4 Phi6)"),
    ("u1_n", "u1 with (Em, Qm) -> (En, Qn)"),
    ("v1_n", "v1 with (Em, Qm) -> (En, Qn)"),
    ("u2_n", "u2 with (Em, Qm) -> (En, Qn)"),
    ("v2_n", "v2 with (Em, Qm) -> (En, Qn)"),
    ("A_W", "Qm^2 Em - 1"),
    ("B_W", "Em - s^2 Qm^2"),
    ("Y", "u2 u1 (Em - s^2 Qm^2)"),
    ("Y_v", "v2 v1 (Qm^2 Em - 1)"),
    ("Y_n", "Y with (Em, Qm) -> (En, Qn)"),
    ("P_W_1", "(s^2 tE1 - s^4) u2 v1 (Qm^2 Em - 1)"),
    ("P_W_2", "s^2 (Qn^2 + tE1 + Qn^-2) u2 u1 (Qm^2 Em - 1)"),
    ("P_W_3", "s^2 u2 u1 (s^2 Qm^2 + s^-2 Qm^-2)(Qm^2 Em - 1)"),
    ("P_W_4", "(s^2 - s^4) u2 (Qm^2 Em - 1)"),
    ("P_W_5", "-Y (Qm^2 Qn^2 + Qm^2 Qn^-2 + 2 + tE1 + Qm^-2 Qn^2 + Qm^-2 Qn^-2)"),
    ("P_W_6", "s^-2 (Qn^2 - s^2 tE1 + Qn^-2) v2 v1 (Em - s^2 Qm^2)"),
    ("P_W_7", "s^-2 v2 v1 (s^2 Qm^2 + s^-2 Qm^-2)(Em - s^2 Qm^2)"),
    ("P_W_8", "(s^-4 - s^-2) v2 Qm^-2 (Em - s^2 Qm^2)"),
    ("P_W_9", "-s^-4 v2 u1 (Em - s^2 Qm^2)"),
    ("P_W", "(P_W_1 + ... + P_W_9) Qm"),
    ("P0t_W", "P_W with tE1 = 1"),
    ("R_W", "coefficient of tE1 in P_W"),
    ("R_W_displayed", "Y (s^2 tQ1^4 + s^2 tQ1^2 - 1 - tQ1^-2) Qm"),
    ("Fprime_weight", "s^2 tQ1^4 + s^2 tQ1^2 - 1 - tQ1^-2"),
    ("P1_W", "(Em + 1)(1 - s^2 Qm^2)(1 - s^6 Qm^2)/(1 + s^4 Qm^2)"),
    ("P0_W", "P0t_W Qm^-1"),
    ("J_ann_W", "P1_W P0_W (Qm^2 - 1)"),
    ("Af_m_W", "P1_W(s, sEm, Qm) P0_W(s, sEm, Qm, Qn)"),
    ("Af_n_W", "Af_m_W with (Em, Qm) <-> (En, Qn)"),
    ("Afp_m_W", "Af_m_W made monic in Em"),
    ("Alk_m_W", "Qm^4 Qn^2 Em^3 + ... + Qn^2"),
    ("Alk_n_W", "Alk_m_W with (Em, Qm) <-> (En, Qn)"),
    ("Abi_W", "(En - sQn^2)(sQm^2 Em - 1) - (Em - sQm^2)(sQn^2 En - 1)"),
    ("Abi_tilde_W", "{(En - s^2Qn^2)(Qm^2 Em - 1) - (Em - s^2Qm^2)(Qn^2 En - 1)} Qm Qn"),
    ("Abi2_W", "{u1_n (En - s^2Qn^2) v1 (Qm^2 Em - 1) - u1 (Em - s^2Qm^2) v1_n (Qn^2 En - 1)} Qm Qn"),
    ("Abi2_quotient", "u1_n v1 + u1 v1_n"),
    ("Abi_alpha_W", "{(En - s^2Qn^2)(Qm^2 Em - 1) - (Em - s^2Qm^2)(Qn^2 En - 1)} alpha"),
    ("c1", "coefficient of Em in Abi_W"),
    ("c0", "Em-free part of Abi_W"),
    ("alpha", "(Qm^2 - 1)(Qn^2 - 1)"),
    ("h", "u1 (s^2 Qm^2 + s^-2 Qm^-2) + 1 - s^2"),
    ("f", "Y_n u2 v1 (Qm^2 Em - 1) Qm Qn"),
    ("g_m", "u2 h (Qm^2 Em - 1) Qm Qn"),
    ("g_n", "u2_n u1_n (Qm^2 + Qm^-2)(Qn^2 En - 1) Qm Qn"),
    ("AnnWrel_combination", "P1_W(s, sEn, Qn) Y(s, sEn, Qn) Af_m_W - P1_W(s, sEm, Qm) Y(s, sEm, Qm) Af_n_W"),
];

fn pipeline_names() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for k in 0..STEPS {
        out.push((format!("d{}", k), format!("coefficient of Em^{} in Afp_m_W", k)));
    }
    for k in 1..STEPS {
        out.push((format!("F{}", k), format!("operator after reduction step {}", k)));
    }
    for k in 1..=STEPS {
        out.push((format!("delta{}", k), format!("coefficient of Em^{} in F{}", STEPS - k, k)));
    }
    for k in 1..STEPS {
        out.push((format!("tc{}", k), format!("left multiplier of F{} at step {}", k, k + 1)));
        out.push((format!("tdel{}", k), format!("left multiplier of Em^{} Abi_W at step {}", STEPS - k - 1, k + 1)));
    }
    for k in 2..=STEPS {
        let pre = format!("closure{}", k);
        out.push((format!("{pre}.b"), format!("constant term of the monic target at step {k}")));
        out.push((format!("{pre}.B"), format!("constant term of g~ at step {k}")));
        for j in 0..k - 1 {
            out.push((format!("{pre}.xi{j}"), format!("xi_{j} of the closure at step {k}")));
            out.push((format!("{pre}.eta{j}"), format!("eta_{j} of the closure at step {k}")));
            out.push((format!("{pre}.A{j}"), format!("A_{j} = xi_{j} B + eta_{j} at step {k}")));
        }
    }
    out
}

/// Every registry name, in a fixed order.
pub fn names() -> Vec<String> {
    FIXED.iter().map(|(n, _)| n.to_string()).chain(pipeline_names().into_iter().map(|(n, _)| n)).collect()
}

fn anchor_of(name: &str) -> Option<String> {
    FIXED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, a)| a.to_string())
        .or_else(|| pipeline_names().into_iter().find(|(n, _)| n == name).map(|(_, a)| a))
}

fn ore(p: &OrePoly) -> NamedValue {
    NamedValue::Ore(p.clone())
}

fn scalar(x: RatFunc) -> NamedValue {
    NamedValue::Ore(OrePoly::constant(x))
}

fn q2_minus_1() -> OrePoly {
    OrePoly::constant(&RatFunc::var_pow(Var::Qm, 2) - &RatFunc::one())
}

/// `P1_W P0_W (Qm^2 - 1)`, the annihilator of the normalized invariant.
pub fn j_annihilator() -> OrePoly {
    &(p1_w(M) * p0_w()) * &q2_minus_1()
}

/// `{B(n) A(m) - B(m) A(n)} alpha`.
pub fn abi_alpha_w() -> OrePoly {
    &(&(big_b(N) * big_a(M)) - &(big_b(M) * big_a(N))) * &OrePoly::constant(alpha())
}

fn fixed_value(name: &str) -> Option<NamedValue> {
    let v = match name {
        "A_sm_H" => ore(a_s_hopf(M)),
        "A_sn_H" => ore(a_s_hopf(N)),
        "Abi_H" => ore(abi_hopf()),
        "p_H" => ore(p_hopf()),
        "a_Qm" => scalar(a_fn(&RatFunc::var(Var::Qm))),
        "a_sQm" => scalar(a_fn(&(&RatFunc::var(Var::S) * &RatFunc::var(Var::Qm)))),
        "Phi2" => scalar(phi(2, M)),
        "Phi4" => scalar(phi(4, M)),
        "Phi6" => scalar(phi(6, M)),
        "Phi10" => scalar(phi(10, M)),
        "Phi12" => scalar(phi(12, M)),
        "u1" => ore(u1(M)),
        "v1" => ore(v1(M)),
        "u2" => ore(u2(M)),
        "v2" => ore(v2(M)),
        "u1_n" => ore(u1(N)),
        "v1_n" => ore(v1(N)),
        "u2_n" => ore(u2(N)),
        "v2_n" => ore(v2(N)),
        "A_W" => ore(big_a(M)),
        "B_W" => ore(big_b(M)),
        "Y" => ore(y_op(M)),
        "Y_v" => ore(y_op_v(M)),
        "Y_n" => ore(y_op(N)),
        "P_W" => ore(p_w()),
        "P0t_W" => ore(p0_tilde_w()),
        "R_W" => ore(r_w()),
        "R_W_displayed" => ore(r_w_displayed()),
        "Fprime_weight" => ore(fprime_weight()),
        "P1_W" => ore(p1_w(M)),
        "P0_W" => ore(p0_w()),
        "J_ann_W" => ore(&j_annihilator()),
        "Af_m_W" => ore(af_w(M)),
        "Af_n_W" => ore(af_w(N)),
        "Alk_m_W" => NamedValue::Commutative(alk_w(M)),
        "Alk_n_W" => NamedValue::Commutative(alk_w(N)),
        "Abi_W" => ore(abi_w()),
        "Abi_tilde_W" => ore(abi_tilde_w()),
        "Abi2_W" => ore(abi2_w()),
        "Abi2_quotient" => ore(abi2_quotient()),
        "Abi_alpha_W" => ore(&abi_alpha_w()),
        "c1" => ore(&abi_split().0),
        "c0" => ore(&abi_split().1),
        "alpha" => scalar(alpha()),
        "h" => ore(h_op()),
        "f" => ore(f_term()),
        "g_m" => ore(g_m_term()),
        "g_n" => ore(g_n_term()),
        "AnnWrel_combination" => ore(annwrel_combination()),
        _ => {
            let k: usize = name.strip_prefix("P_W_")?.parse().ok()?;
            ore(p_w_parts().get(k.checked_sub(1)?)?)
        }
    };
    Some(v)
}

fn index(name: &str, prefix: &str, range: std::ops::RangeInclusive<usize>) -> Option<usize> {
    let k: usize = name.strip_prefix(prefix)?.parse().ok()?;
    range.contains(&k).then_some(k)
}

fn pipeline_value(name: &str) -> Result<Option<NamedValue>> {
    if let Some(k) = index(name, "d", 0..=STEPS - 1) {
        return Ok(Some(scalar(pipeline()?.d[k].clone())));
    }
    if name == "Afp_m_W" {
        return Ok(Some(ore(&pipeline()?.afp)));
    }
    if let Some(k) = index(name, "F", 1..=STEPS - 1) {
        return Ok(Some(ore(pipeline()?.f(k))));
    }
    if let Some(k) = index(name, "delta", 1..=STEPS) {
        return Ok(Some(ore(&pipeline()?.delta(k))));
    }
    if let Some(k) = index(name, "tc", 1..=STEPS - 1) {
        return Ok(Some(ore(pipeline()?.tc(k))));
    }
    if let Some(k) = index(name, "tdel", 1..=STEPS - 1) {
        return Ok(Some(ore(pipeline()?.tdel(k))));
    }
    let Some((head, field)) = name.split_once('.') else { return Ok(None) };
    let Some(k) = index(head, "closure", 2..=STEPS) else { return Ok(None) };
    let pick = |v: &[RatFunc], prefix: &str| -> Option<RatFunc> {
        let j: usize = field.strip_prefix(prefix)?.parse().ok()?;
        v.get(j).cloned()
    };
    let cl = pipeline()?.closure(k)?;
    let t = &cl.trace;
    let x = match field {
        "b" => Some(t.b.clone()),
        "B" => Some(t.big_b.clone()),
        _ => pick(&t.xi, "xi").or_else(|| pick(&t.eta, "eta")).or_else(|| pick(&t.big_a, "A")),
    };
    Ok(x.map(scalar))
}

/// Builds the named operator; fails with `UnknownName` for names outside [`names`].
pub fn build_named(name: &str) -> Result<NamedOperator> {
    let anchor = anchor_of(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
    let value = match fixed_value(name) {
        Some(v) => v,
        None => pipeline_value(name)?.ok_or_else(|| Error::UnknownName(name.to_string()))?,
    };
    Ok(NamedOperator { name: name.to_string(), value, anchor })
}

/// `true` for names whose construction runs the reduction pipeline.
pub fn needs_pipeline(name: &str) -> bool {
    FIXED.iter().all(|(n, _)| *n != name) || name == "Afp_m_W"
}

