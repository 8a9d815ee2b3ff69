//! Stage approximations of Δ⁰₂ functions and finite-horizon settling.
//!
//! A [`StageFn`] is a total two-argument function `(tuple, stage) → natural`
//! that promises pointwise stabilization as the stage grows. The promise is
//! a contract, not something a finite tool can check, so every settling
//! verdict here is a [`SettleReport`] carrying its horizon.

use crate::tuple::{encode_tuple, Tuple};
use std::rc::Rc;

/// Total stage approximation of an n-ary function.
pub trait StageFn {
    fn arity(&self) -> usize;
    fn eval(&self, t: &Tuple, stage: u64) -> u64;
}

/// Closure-backed stage function.
pub struct FnStageFn<F: Fn(&Tuple, u64) -> u64> {
    arity: usize,
    f: F,
}

impl<F: Fn(&Tuple, u64) -> u64> FnStageFn<F> {
    pub fn new(arity: usize, f: F) -> Self {
        FnStageFn { arity, f }
    }
}

impl<F: Fn(&Tuple, u64) -> u64> StageFn for FnStageFn<F> {
    fn arity(&self) -> usize {
        self.arity
    }
    fn eval(&self, t: &Tuple, stage: u64) -> u64 {
        (self.f)(t, stage)
    }
}

impl StageFn for Rc<dyn StageFn> {
    fn arity(&self) -> usize {
        (**self).arity()
    }
    fn eval(&self, t: &Tuple, stage: u64) -> u64 {
        (**self).eval(t, stage)
    }
}

/// Finite-horizon verdict carrier: value present iff settle stage present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SettleReport {
    pub value: Option<u64>,
    pub settle_stage: Option<u64>,
    pub horizon: u64,
}

impl SettleReport {
    pub fn settled(value: u64, settle_stage: u64, horizon: u64) -> Self {
        debug_assert!(settle_stage <= horizon);
        SettleReport {
            value: Some(value),
            settle_stage: Some(settle_stage),
            horizon,
        }
    }

    pub fn unknown(horizon: u64) -> Self {
        SettleReport {
            value: None,
            settle_stage: None,
            horizon,
        }
    }

    pub fn is_settled(&self) -> bool {
        self.value.is_some()
    }
}

/// Start of the final quarter of `[0, horizon]`.
fn quarter_start(horizon: u64) -> u64 {
    horizon - horizon / 4
}

/// Settling verdict for a series of values indexed by stages
/// `first_stage..=horizon`.
///
/// The series counts as settled when it is constant on the final quarter of
/// `[0, horizon]`; the reported settle stage is the start of the final
/// constant run, so callers can tighten their horizons. A series that does
/// not even reach the final quarter is reported unknown.
pub fn settle_series<I: IntoIterator<Item = u64>>(
    series: I,
    first_stage: u64,
    horizon: u64,
) -> SettleReport {
    let q = quarter_start(horizon);
    if first_stage > q {
        return SettleReport::unknown(horizon);
    }
    let mut cur: Option<u64> = None;
    let mut run_start = first_stage;
    let mut stage = first_stage;
    for v in series {
        if cur != Some(v) {
            cur = Some(v);
            run_start = stage;
        }
        stage += 1;
        if stage > horizon {
            break;
        }
    }
    match cur {
        Some(v) if stage == horizon + 1 && run_start <= q => {
            SettleReport::settled(v, run_start, horizon)
        }
        _ => SettleReport::unknown(horizon),
    }
}

/// Settling verdict of `f(ξ, ·)` over stages `0..=horizon`.
pub fn stable_limit(f: &dyn StageFn, xi: &Tuple, horizon: u64) -> SettleReport {
    assert_eq!(xi.len(), f.arity(), "tuple length must equal function arity");
    settle_series((0..=horizon).map(|s| f.eval(xi, s)), 0, horizon)
}

/// One row of a limit coloring: the σ with its settling verdict.
#[derive(Debug, Clone)]
pub struct LimitEntry {
    pub sigma: Tuple,
    pub report: SettleReport,
}

/// Limit coloring `g(σ) = lim_{x ∈ C} f(σ⟨x⟩)` at a finite horizon.
///
/// The inner stage limits are resolved first (stages up to `horizon`); the
/// outer limit over `x ∈ C` then requires the settled inner values to be
/// constant on the final quarter of the x-list above `max σ`. In the entry
/// for σ, `settle_stage` is the x-value at which the constant tail begins
/// and `horizon` is `max C`.
pub fn limit_coloring(f: &dyn StageFn, c: &Tuple, horizon: u64) -> Vec<LimitEntry> {
    assert!(f.arity() >= 1);
    let n = f.arity() - 1;
    let mut out = Vec::new();
    for sigma in crate::coloring::subsets(c.elements(), n) {
        let xs: Vec<u64> = c
            .elements()
            .iter()
            .copied()
            .filter(|&x| sigma.max_elem().map_or(true, |m| x > m))
            .collect();
        let x_horizon = c.max_elem().unwrap_or(0);
        if xs.is_empty() {
            out.push(LimitEntry {
                sigma,
                report: SettleReport::unknown(x_horizon),
            });
            continue;
        }
        let mut inner = Vec::with_capacity(xs.len());
        let mut all_settled = true;
        for &x in &xs {
            let xi = sigma.push(x).expect("x above max of sigma");
            let rep = stable_limit(f, &xi, horizon);
            match rep.value {
                Some(v) => inner.push(v),
                None => {
                    all_settled = false;
                    break;
                }
            }
        }
        let report = if !all_settled {
            SettleReport::unknown(x_horizon)
        } else {
            // settle over the x-axis: constant on the final quarter of the list
            let last = *inner.last().unwrap();
            let mut run_start_idx = 0;
            for (idx, &v) in inner.iter().enumerate() {
                if idx > 0 && inner[idx - 1] != v {
                    run_start_idx = idx;
                }
            }
            let q_idx = (xs.len() - 1) - (xs.len() - 1) / 4;
            if run_start_idx <= q_idx {
                SettleReport::settled(last, xs[run_start_idx], x_horizon)
            } else {
                SettleReport::unknown(x_horizon)
            }
        };
        out.push(LimitEntry { sigma, report });
    }
    out
}

/// Named stage-function families used by configs and tests.
///
/// * `const V` — constantly `V`
/// * `codemod M` — `⌜ξ⌝ mod M`, stage-constant
/// * `settle M D` — `(⌜ξ⌝ + s) mod M` until stage `max ξ + D`, then
///   `⌜ξ⌝ mod M`; the change stages are known by construction
/// * `alt M` — `(⌜ξ⌝ + s) mod M`, never settles for `M > 1`
pub fn parse_stage_family(spec: &str, arity: usize) -> Result<Rc<dyn StageFn>, String> {
    let parts: Vec<&str> = spec.split_whitespace().collect();
    let num = |idx: usize| -> Result<u64, String> {
        parts
            .get(idx)
            .ok_or_else(|| format!("stage family `{spec}`: missing argument"))?
            .parse::<u64>()
            .map_err(|e| format!("stage family `{spec}`: {e}"))
    };
    match parts.first().copied() {
        Some("const") => {
            let v = num(1)?;
            Ok(Rc::new(FnStageFn::new(arity, move |_, _| v)))
        }
        Some("codemod") => {
            let m = num(1)?.max(1);
            Ok(Rc::new(FnStageFn::new(arity, move |t, _| {
                encode_tuple(t) % m
            })))
        }
        Some("settle") => {
            let m = num(1)?.max(1);
            let d = num(2)?;
            Ok(Rc::new(FnStageFn::new(arity, move |t, s| {
                let cut = t.max_elem().unwrap_or(0) + d;
                if s < cut {
                    (encode_tuple(t) + s) % m
                } else {
                    encode_tuple(t) % m
                }
            })))
        }
        Some("alt") => {
            let m = num(1)?.max(1);
            Ok(Rc::new(FnStageFn::new(arity, move |t, s| {
                (encode_tuple(t) + s) % m
            })))
        }
        _ => Err(format!("unknown stage family `{spec}`")),
    }
}
