//! The five-step reduction of the monic `Af'_m(W)` against `A^bi(W)`.

use std::sync::OnceLock;

use super::ops::{abi_w, af_w, annwrel_combination, M};
use crate::arith::RatFunc;
use crate::error::Result;
use crate::ore::{ore_closure_deg1, right_reduce, Closure, CommutativeOperatorPoly, OrePoly, ReduceStrategy, Reduction, Shift};

/// Number of elimination steps (the `E_m` degree of `Af_m(W)`).
pub const STEPS: usize = 5;

#[derive(Clone, Debug)]
pub struct Pipeline {
    /// `Af'_m(W)`, monic in `Em`.
    pub afp: OrePoly,
    /// `d_0 .. d_4` with `Af'_m(W) = Em^5 + sum d_k Em^k`.
    pub d: Vec<RatFunc>,
    pub reduction: Reduction,
}

impl Pipeline {
    /// Runs the reduction from scratch.
    pub fn run() -> Result<Pipeline> {
        let afp = af_w(M).monic_in(Shift::Em)?;
        let d = (0..STEPS as u32)
            .map(|k| afp.coefficient_of(Shift::Em, k).as_scalar().unwrap_or_else(RatFunc::zero))
            .collect();
        let reduction = right_reduce(&afp, abi_w(), Shift::Em, Shift::En, ReduceStrategy::Closure)?;
        Ok(Pipeline { afp, d, reduction })
    }

    /// `F_k` for `1 <= k <= 4`; `F_5` is `delta_5` itself.
    pub fn f(&self, k: usize) -> &OrePoly {
        &self.reduction.intermediates[k - 1]
    }

    /// `delta_k`, the `Em^(5-k)` coefficient of `F_k`.
    pub fn delta(&self, k: usize) -> OrePoly {
        self.f(k).coefficient_of(Shift::Em, (STEPS - k) as u32)
    }

    /// Left multiplier of the current operator at step `k + 1`, `1 <= k <= 4`.
    pub fn tc(&self, k: usize) -> &OrePoly {
        &self.reduction.steps[k].tc
    }

    /// Left multiplier of the shifted divisor at step `k + 1`, `1 <= k <= 4`.
    pub fn tdel(&self, k: usize) -> &OrePoly {
        &self.reduction.steps[k].tdel
    }

    /// The closure solved at step `k`, `2 <= k <= 5`.
    pub fn closure(&self, k: usize) -> Result<Closure> {
        let step = &self.reduction.steps[k - 1];
        ore_closure_deg1(&step.leading, &step.target, Shift::En)
    }

    pub fn delta_at_s1(&self, k: usize) -> Result<CommutativeOperatorPoly> {
        self.delta(k).eval_at_s1()
    }
}

/// The pipeline, computed once per process.
pub fn pipeline() -> Result<&'static Pipeline> {
    static CELL: OnceLock<Result<Pipeline>> = OnceLock::new();
    CELL.get_or_init(Pipeline::run).as_ref().map_err(Clone::clone)
}

/// The combination of `Af_m(W)` and `Af_n(W)` reduced against `A^bi(W)`,
/// preferring exact quotients; computed once per process.
pub fn annwrel_reduction() -> Result<&'static Reduction> {
    static CELL: OnceLock<Result<Reduction>> = OnceLock::new();
    CELL.get_or_init(|| {
        right_reduce(annwrel_combination(), abi_w(), Shift::Em, Shift::En, ReduceStrategy::ExactDivisionFirst)
    })
    .as_ref()
    .map_err(Clone::clone)
}
