//! Comparability under the closed convex hull of a finite scenario set:
//! `x ⪰ y` iff some `λ >= 0` has `F(x) >= λF(y)` for every member.

use serde::{Deserialize, Serialize};

use super::scenario::ScenarioSet;
use crate::cashflow::StepCashFlow;
use crate::error::{Error, Result};
use crate::numeric;
use crate::valuation::npv_and_scale;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HullDetail {
    pub feasible: bool,
    /// `max(0, F(x)/F(y) over F(y) < 0)`.
    pub lower: f64,
    /// `min(F(x)/F(y) over F(y) > 0)`.
    #[serde(with = "numeric::ext_real")]
    pub upper: f64,
    /// A feasible multiplier, `1` when admissible.
    pub lambda: Option<f64>,
    /// Some `F(y)` or the interval width is within tolerance of zero.
    pub boundary: bool,
}

pub fn convex_hull_detail(s: &ScenarioSet, x: &StepCashFlow, y: &StepCashFlow, tol: f64) -> Result<HullDetail> {
    let ScenarioSet::Finite { members } = s else {
        return Err(Error::Precondition("convex hull test needs a finite scenario set".into()));
    };
    if members.is_empty() {
        return Err(Error::Precondition("finite scenario set is empty".into()));
    }
    let (mut lower, mut upper) = (0.0_f64, f64::INFINITY);
    let (mut blocked, mut boundary) = (false, false);
    for m in members {
        let (fx, sx) = npv_and_scale(&m.discount, x)?;
        let (fy, sy) = npv_and_scale(&m.discount, y)?;
        if fy.abs() <= tol * sy || fx.abs() <= tol * sx {
            boundary |= fy != 0.0 || fx != 0.0;
        }
        if fy > 0.0 {
            upper = upper.min(fx / fy);
        } else if fy < 0.0 {
            lower = lower.max(fx / fy);
        } else if fx < 0.0 {
            blocked = true;
        }
    }
    let feasible = !blocked && lower <= upper;
    if feasible && upper.is_finite() && upper - lower <= tol * upper.abs().max(1.0) {
        boundary = true;
    }
    let lambda = feasible.then(|| if lower <= 1.0 && 1.0 <= upper { 1.0 } else { lower });
    Ok(HullDetail {
        feasible,
        lower,
        upper,
        lambda,
        boundary,
    })
}

pub fn compare_convex_hull_finite(s: &ScenarioSet, x: &StepCashFlow, y: &StepCashFlow) -> Result<bool> {
    Ok(convex_hull_detail(s, x, y, crate::irr::DEFAULT_TOL)?.feasible)
}
