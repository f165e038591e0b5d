//! Scenario sets and the symmetric profitability orderings they induce.
//!
//! `x ⪰ y` under a scenario set when every member accepting `y` (NPV `>= 0`)
//! also accepts `x`.

mod compare;
mod harness;
mod hull;
mod scenario;
mod sign;

use serde::{Deserialize, Serialize};

use crate::cashflow::StepCashFlow;
use crate::discount::DiscountFunction;
use crate::error::{Error, Result};
use crate::irr::DFamily;
use crate::valuation::{npv_and_scale, NpvFunctional};

pub use compare::{compare, ComparabilityResult, Relation, RESOLUTION};
pub use harness::{axiom_harness, HarnessReport, PropertyStats};
pub use hull::{compare_convex_hull_finite, convex_hull_detail, HullDetail};
pub use scenario::ScenarioSet;
pub use sign::sign_compare;

/// Whether `f` accepts `x`, i.e. `F(x) >= 0`.
pub fn accepts(f: &NpvFunctional, x: &StepCashFlow) -> Result<bool> {
    Ok(f.eval(x)? >= 0.0)
}

/// Annual rate separating usurious from nonusurious loans.
pub const USURY_RATE: f64 = 0.6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UsuryClass {
    Usurious,
    NonUsurious,
}

/// Relative rounding allowance of the usury rule; NPVs within it of zero
/// count as zero, hence usurious.
pub const USURY_ROUNDING: f64 = 1e-12;

/// A lender flow is usurious when its NPV at 60% per period is nonnegative.
pub fn usury_classify(x: &StepCashFlow) -> UsuryClass {
    let alpha = DiscountFunction::CompoundAnnual { rate: USURY_RATE };
    let (v, scale) = npv_and_scale(&alpha, x).expect("compound discounting is defined for every time");
    if v >= -USURY_ROUNDING * scale {
        UsuryClass::Usurious
    } else {
        UsuryClass::NonUsurious
    }
}

/// `{t -> (1+r)^{-t} I[0,τ](t) : r ∈ [rate_lo, rate_hi], τ >= tau_min}`,
/// the untruncated members included.
///
/// A single rate gives a truncation family over that rate; a single rate
/// with `tau_min = +inf` gives the NPV criterion.
pub fn rate_horizon_scenarios(rate_lo: f64, rate_hi: f64, tau_min: f64) -> Result<ScenarioSet> {
    if !(rate_lo >= 0.0) || !(rate_lo <= rate_hi) || !rate_hi.is_finite() {
        return Err(Error::param("rate_lo", rate_lo, "rates must satisfy 0 <= lo <= hi < inf"));
    }
    if !(tau_min > 0.0) {
        return Err(Error::param("tau_min", tau_min, "horizon must be positive"));
    }
    let at_rate = |r: f64| {
        if r == 0.0 {
            Ok(DiscountFunction::Unit)
        } else {
            DiscountFunction::compound_annual(r)
        }
    };
    let s = if rate_lo == rate_hi {
        let alpha = at_rate(rate_lo)?;
        if tau_min.is_infinite() {
            ScenarioSet::Finite {
                members: vec![NpvFunctional::new(alpha)?],
            }
        } else {
            ScenarioSet::Truncation {
                alpha: Some(alpha),
                tau: (tau_min, f64::INFINITY),
                include_untruncated: true,
            }
        }
    } else {
        let rates = ScenarioSet::DFamilyRange {
            family: DFamily::ExponentialFamily,
            lambda: (rate_lo.ln_1p(), rate_hi.ln_1p()),
        };
        if tau_min.is_infinite() {
            rates
        } else {
            ScenarioSet::Product {
                components: vec![
                    rates,
                    ScenarioSet::Truncation {
                        alpha: None,
                        tau: (tau_min, f64::INFINITY),
                        include_untruncated: true,
                    },
                ],
            }
        }
    };
    s.normalized()
}
