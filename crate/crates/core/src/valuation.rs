//! NPV functionals and the derived truncated, mixed, reduced and
//! intensity-rescaled functionals.
//!
//! On a step flow the integral `x(0) + ∫ α dx` is the discount-weighted sum
//! of transactions. Sums run in time order with compensated accumulation.

use serde::{Deserialize, Serialize};

use crate::cashflow::StepCashFlow;
use crate::discount::DiscountFunction;
use crate::error::{Error, Result};
use crate::numeric::CompensatedSum;

/// A discount function used as an evaluator, with a label for reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawFunctional")]
pub struct NpvFunctional {
    pub discount: DiscountFunction,
    pub label: String,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawFunctional {
    Labeled {
        discount: DiscountFunction,
        label: Option<String>,
    },
    Bare(DiscountFunction),
}

impl TryFrom<RawFunctional> for NpvFunctional {
    type Error = Error;

    fn try_from(raw: RawFunctional) -> Result<Self> {
        match raw {
            RawFunctional::Labeled {
                discount,
                label: Some(label),
            } => NpvFunctional::labeled(discount, label),
            RawFunctional::Labeled { discount, label: None } | RawFunctional::Bare(discount) => {
                NpvFunctional::new(discount)
            }
        }
    }
}

impl NpvFunctional {
    /// Validates `discount`; the label defaults to its description.
    pub fn new(discount: DiscountFunction) -> Result<Self> {
        let label = discount.to_string();
        Self::labeled(discount, label)
    }

    pub fn labeled(discount: DiscountFunction, label: impl Into<String>) -> Result<Self> {
        discount.validate()?;
        Ok(Self {
            discount,
            label: label.into(),
        })
    }

    /// The undiscounted functional `x -> x(+inf)`.
    pub fn undiscounted() -> Self {
        Self {
            discount: DiscountFunction::Unit,
            label: "unit".into(),
        }
    }

    /// `F^(chi)`: `x -> x(0)`.
    pub fn impatient() -> Self {
        Self {
            discount: DiscountFunction::Impatient,
            label: "chi".into(),
        }
    }

    pub fn eval(&self, x: &StepCashFlow) -> Result<f64> {
        weighted_sum(x, |t| self.discount.eval(t), |_| true)
    }

    /// NPV together with `Σ |a_k| α(t_k)`, the scale against which a value
    /// counts as numerically zero.
    pub fn eval_with_scale(&self, x: &StepCashFlow) -> Result<(f64, f64)> {
        npv_and_scale(&self.discount, x)
    }
}

/// `(F^(α)(x), Σ |a_k| α(t_k))`.
pub fn npv_and_scale(alpha: &DiscountFunction, x: &StepCashFlow) -> Result<(f64, f64)> {
    let mut sum = CompensatedSum::new();
    let mut scale = 0.0;
    for tx in x.transactions() {
        let w = if tx.time == 0.0 { 1.0 } else { alpha.eval(tx.time)? };
        sum.add(tx.amount * w);
        scale += tx.amount.abs() * w;
    }
    Ok((sum.value(), scale))
}

fn weighted_sum(
    x: &StepCashFlow,
    weight: impl Fn(f64) -> Result<f64>,
    keep: impl Fn(f64) -> bool,
) -> Result<f64> {
    let mut sum = CompensatedSum::new();
    for tx in x.transactions() {
        if tx.time == 0.0 {
            sum.add(tx.amount);
        } else if keep(tx.time) {
            sum.add(tx.amount * weight(tx.time)?);
        }
    }
    Ok(sum.value())
}

fn check_tau(tau: f64) -> Result<()> {
    if !(tau >= 0.0) {
        return Err(Error::param("tau", tau, "truncation time must be nonnegative"));
    }
    Ok(())
}

/// `F^(α)(x)`.
pub fn npv(f: &NpvFunctional, x: &StepCashFlow) -> Result<f64> {
    f.eval(x)
}

/// `G_τ(x) = x(0) + Σ_{0<t_k<=τ} a_k α(t_k)`.
pub fn npv_truncated(alpha: &DiscountFunction, tau: f64, x: &StepCashFlow) -> Result<f64> {
    check_tau(tau)?;
    weighted_sum(x, |t| alpha.eval(t), |t| t <= tau)
}

/// `G_{τ-}(x) = x(0) + Σ_{0<t_k<τ} a_k α(t_k)`.
pub fn npv_left_limit(alpha: &DiscountFunction, tau: f64, x: &StepCashFlow) -> Result<f64> {
    check_tau(tau)?;
    weighted_sum(x, |t| alpha.eval(t), |t| t < tau)
}

/// `G_{τ,λ} = λ G_τ + (1 - λ) G_{τ-}`.
pub fn npv_mixed(alpha: &DiscountFunction, tau: f64, lambda: f64, x: &StepCashFlow) -> Result<f64> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::param("lambda", lambda, "mixing weight must lie in [0, 1]"));
    }
    let closed = npv_truncated(alpha, tau, x)?;
    let open = npv_left_limit(alpha, tau, x)?;
    Ok(lambda * closed + (1.0 - lambda) * open)
}

/// `H_γ(x) = x(0) + γ (F(x) - x(0))` for `γ ∈ [0, 1/α(0+)]`.
pub fn h_gamma(alpha: &DiscountFunction, gamma: f64, x: &StepCashFlow) -> Result<f64> {
    let cap = 1.0 / alpha.right_limit_at_zero();
    if !(gamma >= 0.0) || gamma > cap || !gamma.is_finite() {
        return Err(Error::param("gamma", gamma, "must lie in [0, 1/alpha(0+)]"));
    }
    let x0 = x.initial();
    let future = weighted_sum(x, |t| alpha.eval(t), |_| true)? - x0;
    Ok(x0 + gamma * future)
}

/// `U_λ(x)`: the NPV under `t -> α(t/λ)`.
pub fn intensity_npv(alpha: &DiscountFunction, lambda: f64, x: &StepCashFlow) -> Result<f64> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::param("lambda", lambda, "intensity must be positive and finite"));
    }
    weighted_sum(x, |t| alpha.eval(t / lambda), |_| true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flow(pairs: &[(f64, f64)]) -> StepCashFlow {
        StepCashFlow::new(pairs.iter().copied()).unwrap()
    }

    fn unit() -> DiscountFunction {
        DiscountFunction::Unit
    }

    #[test]
    fn npv_examples() {
        let x = flow(&[(0.0, -1.0), (1.0, 1.7)]);
        let f = NpvFunctional::new(DiscountFunction::compound_annual(0.6).unwrap()).unwrap();
        assert!((npv(&f, &x).unwrap() - 0.0625).abs() < 1e-15);
        assert_eq!(npv(&NpvFunctional::impatient(), &x).unwrap(), -1.0);
        let e0 = NpvFunctional::new(DiscountFunction::exponential(0.0).unwrap()).unwrap();
        assert!((npv(&e0, &x).unwrap() - 0.7).abs() < 1e-15);
    }

    #[test]
    fn truncated_and_left_limit() {
        let x = flow(&[(0.0, -1.0), (1.0, 0.6), (2.0, 0.6)]);
        assert!((npv_truncated(&unit(), 1.0, &x).unwrap() + 0.4).abs() < 1e-15);
        assert!((npv_truncated(&unit(), 2.0, &x).unwrap() - 0.2).abs() < 1e-15);
        assert!((npv_left_limit(&unit(), 2.0, &x).unwrap() + 0.4).abs() < 1e-15);
        assert_eq!(npv_truncated(&unit(), 0.5, &x).unwrap(), -1.0);
        assert_eq!(npv_left_limit(&unit(), 1.0, &x).unwrap(), -1.0);
        assert_eq!(
            npv_truncated(&unit(), 1.5, &x).unwrap(),
            npv_left_limit(&unit(), 1.5, &x).unwrap()
        );
    }

    #[test]
    fn mixed_root() {
        let x = flow(&[(0.0, -1.0), (1.0, 0.6), (2.0, 0.6)]);
        let v = npv_mixed(&unit(), 2.0, 2.0 / 3.0, &x).unwrap();
        assert!(v.abs() < 1e-15);
        assert!(npv_mixed(&unit(), 2.0, 1.5, &x).is_err());
    }

    #[test]
    fn h_gamma_examples() {
        let x = flow(&[(0.0, -1.0), (1.0, 3.0)]);
        assert_eq!(h_gamma(&unit(), 0.5, &x).unwrap(), 0.5);
        assert_eq!(h_gamma(&unit(), 0.0, &x).unwrap(), -1.0);
        assert!(h_gamma(&unit(), 1.01, &x).is_err());
        let mix = DiscountFunction::chi_mix(unit(), 0.5).unwrap();
        assert_eq!(h_gamma(&mix, 2.0, &x).unwrap(), 2.0);
    }

    #[test]
    fn intensity_example() {
        let x = flow(&[(0.0, -1.0), (2.0, 2.0)]);
        let a = DiscountFunction::exponential(2f64.ln()).unwrap();
        assert!(intensity_npv(&a, 2.0, &x).unwrap().abs() < 1e-15);
        assert!(intensity_npv(&a, 0.0, &x).is_err());
    }

    #[test]
    fn functional_json_forms() {
        let bare: NpvFunctional = serde_json::from_str(r#"{"kind":"exponential","rate":0.1}"#).unwrap();
        assert_eq!(bare.label, "exp(0.1)");
        let labeled: NpvFunctional =
            serde_json::from_str(r#"{"discount":{"kind":"unit"},"label":"plain"}"#).unwrap();
        assert_eq!(labeled.label, "plain");
        assert!(serde_json::from_str::<NpvFunctional>(r#"{"kind":"exponential","rate":-1}"#).is_err());
    }
}
