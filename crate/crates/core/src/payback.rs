//! Discounted payback: possession, the refined `(τ, λ)` pair, the
//! interpolated `DPP*`, the natural extension and the lexicographic order.
//!
//! `τ -> G_τ(x)` is a step function that only moves at transaction times,
//! so every check below is an exact scan over breakpoint levels.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::cashflow::StepCashFlow;
use crate::discount::DiscountFunction;
use crate::error::{Error, Result};
use crate::numeric::{self, CompensatedSum};
use crate::valuation::h_gamma;

/// Values of `G_τ(x)` between breakpoints: `levels[0]` on `(0, t_1)`,
/// `levels[k]` on `[t_k, t_{k+1})` for the positive transaction times.
#[derive(Debug, Clone, PartialEq)]
pub struct Levels {
    pub times: Vec<f64>,
    pub levels: Vec<f64>,
    /// `Σ |a_k| α(t_k)`, the magnitude for boundary warnings.
    pub scale: f64,
}

impl Levels {
    pub fn new(alpha: &DiscountFunction, x: &StepCashFlow) -> Result<Self> {
        let mut acc = CompensatedSum::new();
        acc.add(x.initial());
        let mut scale = x.initial().abs();
        let mut times = Vec::with_capacity(x.len());
        let mut levels = vec![x.initial()];
        for tx in x.transactions().iter().filter(|tx| tx.time > 0.0) {
            let w = alpha.eval(tx.time)?;
            acc.add(tx.amount * w);
            scale += tx.amount.abs() * w;
            times.push(tx.time);
            levels.push(acc.value());
        }
        Ok(Self { times, levels, scale })
    }

    /// Index `k >= 1` with `levels[..k] < 0 <= levels[k..]`.
    fn switch_index(&self) -> Option<usize> {
        let k = self.levels.iter().position(|v| *v >= 0.0)?;
        (k >= 1 && self.levels[k..].iter().all(|v| *v >= 0.0)).then_some(k)
    }

    fn near_zero(&self, v: f64, tol: f64) -> bool {
        v.abs() <= tol * self.scale.max(1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RefinedDpp {
    pub tau: f64,
    pub lambda: f64,
    /// A level adjacent to the switch lies within tolerance of zero.
    pub boundary_warning: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DppDomainClass {
    QMinus,
    QPossesses,
    QPlus,
    Outside,
}

/// The discounted payback period: the breakpoint `τ` with `G_t < 0` on
/// `(0, τ)` and `G_t >= 0` on `[τ, inf)`.
pub fn dpp(alpha: &DiscountFunction, x: &StepCashFlow) -> Result<Option<f64>> {
    let lv = Levels::new(alpha, x)?;
    Ok(lv.switch_index().map(|k| lv.times[k - 1]))
}

/// `(τ, λ)` with `λ` the root of `λ G_τ + (1-λ) G_{τ-} = 0`.
pub fn refined_dpp(alpha: &DiscountFunction, x: &StepCashFlow, tol: f64) -> Result<Option<RefinedDpp>> {
    let lv = Levels::new(alpha, x)?;
    let Some(k) = lv.switch_index() else {
        return Ok(None);
    };
    let (before, at) = (lv.levels[k - 1], lv.levels[k]);
    let lambda = (-before / (at - before)).clamp(0.0, 1.0);
    Ok(Some(RefinedDpp {
        tau: lv.times[k - 1],
        lambda,
        boundary_warning: lv.near_zero(before, tol) || lv.near_zero(at, tol),
    }))
}

/// `τ - 1 + λ` for projects with integer transaction times.
pub fn dpp_star(alpha: &DiscountFunction, x: &StepCashFlow) -> Result<Option<f64>> {
    if !x.is_discrete() {
        return Err(Error::Precondition("interpolated payback needs integer transaction times".into()));
    }
    Ok(refined_dpp(alpha, x, 0.0)?.map(|r| r.tau - 1.0 + r.lambda))
}

fn reject_chi(alpha: &DiscountFunction) -> Result<()> {
    if alpha.is_chi() {
        return Err(Error::Precondition("payback is undefined for the impatient discount".into()));
    }
    Ok(())
}

/// Splits projects into those never recovering, those possessing the DPP,
/// those never in deficit, and the rest.
pub fn classify_dpp_domain(alpha: &DiscountFunction, x: &StepCashFlow) -> Result<DppDomainClass> {
    reject_chi(alpha)?;
    let lv = Levels::new(alpha, x)?;
    if lv.levels.iter().all(|v| *v < 0.0) {
        return Ok(DppDomainClass::QMinus);
    }
    if lv.switch_index().is_some() {
        return Ok(DppDomainClass::QPossesses);
    }
    if lv.levels.iter().all(|v| *v >= 0.0) && h_gamma(alpha, 1.0 / alpha.right_limit_at_zero(), x)? >= 0.0 {
        return Ok(DppDomainClass::QPlus);
    }
    Ok(DppDomainClass::Outside)
}

/// The natural extension of `1/DPP`: `+inf` on projects never in deficit,
/// `1/DPP` where the DPP exists, and on never-recovering projects
/// `sup{γ ∈ [α(0+), 1] : H_{1/γ}(x) >= 0} - 1` with `sup ∅ = -inf`.
pub fn rdpp_natural_extension(alpha: &DiscountFunction, x: &StepCashFlow) -> Result<f64> {
    match classify_dpp_domain(alpha, x)? {
        DppDomainClass::QPlus => Ok(f64::INFINITY),
        DppDomainClass::QPossesses => {
            let tau = dpp(alpha, x)?.expect("class guarantees possession");
            Ok(1.0 / tau)
        }
        DppDomainClass::QMinus => {
            // H_{1/γ} >= 0  <=>  γ <= 1 + F(x)/|x(0)|
            let x0 = x.initial();
            let f = h_gamma(alpha, 1.0, x)?;
            let value = f / -x0;
            if value >= alpha.right_limit_at_zero() - 1.0 {
                Ok(value)
            } else {
                Ok(f64::NEG_INFINITY)
            }
        }
        DppDomainClass::Outside => Err(Error::Domain(
            "cumulative discounted balance changes sign more than once".into(),
        )),
    }
}

/// Profitability order of two projects by their refined paybacks: the
/// lexicographically smaller `(τ, λ)` is the more profitable project.
/// `None` when either project lacks a refined DPP.
pub fn lex_compare_refined(
    alpha: &DiscountFunction,
    x: &StepCashFlow,
    y: &StepCashFlow,
    tol: f64,
) -> Result<Option<Ordering>> {
    let (Some(rx), Some(ry)) = (refined_dpp(alpha, x, tol)?, refined_dpp(alpha, y, tol)?) else {
        return Ok(None);
    };
    Ok(Some(lex_order(&rx, &ry, tol)))
}

/// `Greater` when `a` pays back sooner than `b`.
pub fn lex_order(a: &RefinedDpp, b: &RefinedDpp, tol: f64) -> Ordering {
    match b.tau.total_cmp(&a.tau) {
        Ordering::Equal if (a.lambda - b.lambda).abs() <= tol => Ordering::Equal,
        Ordering::Equal => b.lambda.total_cmp(&a.lambda),
        other => other,
    }
}

/// Minimum recovery time: the first breakpoint at which the discounted
/// balance is nonnegative, ignoring later deficits. A diagnostic only; it
/// does not induce a profitability ordering.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MinRecoveryTime {
    #[serde(with = "numeric::ext_real")]
    pub time: f64,
}

pub fn min_recovery_time(alpha: &DiscountFunction, x: &StepCashFlow) -> Result<MinRecoveryTime> {
    let lv = Levels::new(alpha, x)?;
    let time = if lv.levels[0] >= 0.0 {
        0.0
    } else {
        lv.levels[1..]
            .iter()
            .position(|v| *v >= 0.0)
            .map_or(f64::INFINITY, |k| lv.times[k])
    };
    Ok(MinRecoveryTime { time })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flow(pairs: &[(f64, f64)]) -> StepCashFlow {
        StepCashFlow::new(pairs.iter().copied()).unwrap()
    }

    const U: DiscountFunction = DiscountFunction::Unit;

    fn recovering() -> StepCashFlow {
        flow(&[(0.0, -1.0), (1.0, 0.6), (2.0, 0.6)])
    }

    #[test]
    fn dpp_examples() {
        assert_eq!(dpp(&U, &recovering()).unwrap(), Some(2.0));
        assert_eq!(dpp(&U, &flow(&[(0.0, -1.0), (1.0, 0.5)])).unwrap(), None);
        let zigzag = flow(&[(0.0, -1.0), (1.0, 2.0), (2.0, -1.5), (3.0, 1.0)]);
        assert_eq!(dpp(&U, &zigzag).unwrap(), None);
        assert_eq!(dpp(&U, &flow(&[(0.0, 1.0), (1.0, 1.0)])).unwrap(), None);
    }

    #[test]
    fn refined_examples() {
        let r = refined_dpp(&U, &recovering(), 1e-12).unwrap().unwrap();
        assert_eq!(r.tau, 2.0);
        assert!((r.lambda - 2.0 / 3.0).abs() < 1e-15);
        assert!(!r.boundary_warning);
        let exact = refined_dpp(&U, &flow(&[(0.0, -1.0), (1.0, 1.0)]), 1e-12).unwrap().unwrap();
        assert_eq!((exact.tau, exact.lambda), (1.0, 1.0));
        assert!(exact.boundary_warning);
    }

    #[test]
    fn dpp_star_examples() {
        let v = dpp_star(&U, &recovering()).unwrap().unwrap();
        assert!((v - 5.0 / 3.0).abs() < 1e-15);
        assert_eq!(dpp_star(&U, &flow(&[(0.0, -1.0), (1.0, 1.0)])).unwrap(), Some(1.0));
        assert!(dpp_star(&U, &flow(&[(0.0, -1.0), (1.5, 2.0)])).is_err());
    }

    #[test]
    fn domain_classes() {
        use DppDomainClass::*;
        assert_eq!(classify_dpp_domain(&U, &flow(&[(0.0, -1.0), (1.0, 0.5)])).unwrap(), QMinus);
        assert_eq!(classify_dpp_domain(&U, &flow(&[(0.0, 2.0), (1.0, 1.0)])).unwrap(), QPlus);
        let zigzag = flow(&[(0.0, -1.0), (1.0, 2.0), (2.0, -1.5), (3.0, 1.0)]);
        assert_eq!(classify_dpp_domain(&U, &zigzag).unwrap(), Outside);
        assert_eq!(classify_dpp_domain(&U, &recovering()).unwrap(), QPossesses);
        assert!(classify_dpp_domain(&DiscountFunction::Impatient, &recovering()).is_err());
    }

    #[test]
    fn natural_extension_values() {
        assert_eq!(
            rdpp_natural_extension(&U, &flow(&[(0.0, -1.0), (1.0, 0.5)])).unwrap(),
            f64::NEG_INFINITY
        );
        assert_eq!(rdpp_natural_extension(&U, &flow(&[(0.0, -1.0), (1.0, 1.0)])).unwrap(), 1.0);
        assert_eq!(rdpp_natural_extension(&U, &recovering()).unwrap(), 0.5);
        assert_eq!(rdpp_natural_extension(&U, &flow(&[(0.0, 2.0)])).unwrap(), f64::INFINITY);
        let zigzag = flow(&[(0.0, -1.0), (1.0, 2.0), (2.0, -1.5), (3.0, 1.0)]);
        assert!(rdpp_natural_extension(&U, &zigzag).unwrap_err().is_domain());
        // with α(0+) = 1/2, a never-recovering project can keep a finite value
        let mixed = DiscountFunction::chi_mix(U, 0.5).unwrap();
        let x = flow(&[(0.0, -1.0), (1.0, 1.5)]);
        assert_eq!(classify_dpp_domain(&mixed, &x).unwrap(), DppDomainClass::QMinus);
        assert_eq!(rdpp_natural_extension(&mixed, &x).unwrap(), -0.25);
    }

    #[test]
    fn lexicographic_order() {
        let a = RefinedDpp { tau: 2.0, lambda: 1.0 / 3.0, boundary_warning: false };
        let b = RefinedDpp { tau: 2.0, lambda: 2.0 / 3.0, boundary_warning: false };
        assert_eq!(lex_order(&a, &b, 1e-12), Ordering::Greater);
        let c = RefinedDpp { tau: 1.0, lambda: 0.9, boundary_warning: false };
        let d = RefinedDpp { tau: 2.0, lambda: 0.1, boundary_warning: false };
        assert_eq!(lex_order(&c, &d, 1e-12), Ordering::Greater);
        assert_eq!(lex_order(&d, &c, 1e-12), Ordering::Less);
        assert_eq!(
            lex_compare_refined(&U, &recovering(), &flow(&[(0.0, 1.0)]), 1e-12).unwrap(),
            None
        );
    }

    #[test]
    fn recovery_diagnostic_ignores_later_deficits() {
        let zigzag = flow(&[(0.0, -1.0), (1.0, 2.0), (2.0, -1.5), (3.0, 1.0)]);
        assert_eq!(min_recovery_time(&U, &zigzag).unwrap().time, 1.0);
    }
}
