//! Discount functions and the dominance relations between them.
//!
//! A discount function `alpha` is nonnegative, nonincreasing and satisfies
//! `alpha(0) = 1`; `alpha(t)` is the present worth of one money unit paid at
//! time `t`. The closed-form families are the usual exponential, power,
//! constant-sensitivity and generalized-hyperbolic shapes. The remaining
//! variants build new discount functions out of an inner one.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::Verdict;

/// Default absolute tolerance for monotonicity checks on grids.
pub const MONOTONICITY_TOL: f64 = 1e-10;

/// Finite-difference step, as a fraction of the grid span.
pub const FD_STEP_FRACTION: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiscountFunction {
    /// `t -> exp(-rate·t)`.
    Exponential { rate: f64 },
    /// `t -> base(t)^exponent` for a strictly decreasing base.
    PowerOfBase {
        base: Box<DiscountFunction>,
        exponent: f64,
    },
    /// `t -> exp(-rate·t^shape)`.
    ConstantSensitivity { rate: f64, shape: f64 },
    /// `t -> (1 + shape·t)^(-rate/shape)`.
    GeneralizedHyperbolic { rate: f64, shape: f64 },
    /// `t -> (1 + rate)^(-t)`.
    CompoundAnnual { rate: f64 },
    /// `t -> 1`: no discounting.
    Unit,
    /// The extremely impatient discount: 1 at `t = 0`, 0 afterwards.
    Impatient,
    /// `inner · I[0, horizon]` (closed) or `inner · I[0, horizon)` (open).
    Truncated {
        inner: Box<DiscountFunction>,
        horizon: f64,
        closed: bool,
    },
    /// `gamma·inner + (1 - gamma)·chi`.
    ChiMix {
        inner: Box<DiscountFunction>,
        gamma: f64,
    },
    /// `t -> inner(t / factor)`.
    Intensity {
        inner: Box<DiscountFunction>,
        factor: f64,
    },
    /// Right-continuous step interpolation of samples.
    Grid { times: Vec<f64>, values: Vec<f64> },
}

use DiscountFunction as D;

impl DiscountFunction {
    pub fn exponential(rate: f64) -> Result<Self> {
        let d = D::Exponential { rate };
        d.validate()?;
        Ok(d)
    }

    pub fn compound_annual(rate: f64) -> Result<Self> {
        let d = D::CompoundAnnual { rate };
        d.validate()?;
        Ok(d)
    }

    pub fn constant_sensitivity(rate: f64, shape: f64) -> Result<Self> {
        let d = D::ConstantSensitivity { rate, shape };
        d.validate()?;
        Ok(d)
    }

    pub fn generalized_hyperbolic(rate: f64, shape: f64) -> Result<Self> {
        let d = D::GeneralizedHyperbolic { rate, shape };
        d.validate()?;
        Ok(d)
    }

    pub fn power_of_base(base: DiscountFunction, exponent: f64) -> Result<Self> {
        let d = D::PowerOfBase {
            base: Box::new(base),
            exponent,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn truncated(inner: DiscountFunction, horizon: f64, closed: bool) -> Result<Self> {
        let d = D::Truncated {
            inner: Box::new(inner),
            horizon,
            closed,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn chi_mix(inner: DiscountFunction, gamma: f64) -> Result<Self> {
        let d = D::ChiMix {
            inner: Box::new(inner),
            gamma,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn intensity(inner: DiscountFunction, factor: f64) -> Result<Self> {
        let d = D::Intensity {
            inner: Box::new(inner),
            factor,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn grid(times: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        let d = D::Grid { times, values };
        d.validate()?;
        Ok(d)
    }

    /// Checks the class invariants (`alpha(0) = 1`, nonnegative,
    /// nonincreasing) analytically per variant, or on the samples of a grid.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDiscount(msg));
        match self {
            D::Exponential { rate } => nonneg_finite("rate", *rate),
            D::CompoundAnnual { rate } => {
                // r < 0 would make (1+r)^(-t) increase past 1
                nonneg_finite("rate", *rate)
            }
            D::ConstantSensitivity { rate, shape } | D::GeneralizedHyperbolic { rate, shape } => {
                nonneg_finite("rate", *rate)?;
                if !(*shape > 0.0) || !shape.is_finite() {
                    return Err(Error::param("shape", *shape, "shape must be positive and finite"));
                }
                Ok(())
            }
            D::PowerOfBase { base, exponent } => {
                base.validate()?;
                nonneg_finite("exponent", *exponent)?;
                if !base.is_strictly_decreasing() {
                    return bad(format!("power base {base} is not strictly decreasing"));
                }
                Ok(())
            }
            D::Unit | D::Impatient => Ok(()),
            D::Truncated { inner, horizon, .. } => {
                inner.validate()?;
                if !(*horizon > 0.0) {
                    return Err(Error::param("horizon", *horizon, "truncation horizon must be positive"));
                }
                Ok(())
            }
            D::ChiMix { inner, gamma } => {
                inner.validate()?;
                let cap = 1.0 / inner.right_limit_at_zero();
                if !(*gamma >= 0.0) || *gamma > cap || !gamma.is_finite() {
                    return Err(Error::param("gamma", *gamma, "mixing weight must lie in [0, 1/inner(0+)]"));
                }
                Ok(())
            }
            D::Intensity { inner, factor } => {
                inner.validate()?;
                if !(*factor > 0.0) || !factor.is_finite() {
                    return Err(Error::param("factor", *factor, "intensity factor must be positive and finite"));
                }
                Ok(())
            }
            D::Grid { times, values } => {
                if times.len() != values.len() {
                    return bad("grid times and values differ in length".into());
                }
                if times.len() < 2 {
                    return bad("grid needs at least two samples".into());
                }
                if times[0] != 0.0 || values[0] != 1.0 {
                    return bad("grid must start at t = 0 with value 1".into());
                }
                if times.iter().any(|t| !t.is_finite()) || times.windows(2).any(|w| !(w[0] < w[1])) {
                    return bad("grid times must be finite and strictly increasing".into());
                }
                if values.iter().any(|v| !(*v >= 0.0) || !v.is_finite()) {
                    return bad("grid values must be finite and nonnegative".into());
                }
                if values.windows(2).any(|w| w[1] > w[0]) {
                    return bad("grid values must be nonincreasing".into());
                }
                Ok(())
            }
        }
    }

    /// `alpha(t)`.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) {
            return Err(Error::InvalidTime(t));
        }
        Ok(match self {
            D::Exponential { rate } => (-rate * t).exp(),
            D::CompoundAnnual { rate } => (1.0 + rate).powf(-t),
            D::ConstantSensitivity { rate, shape } => {
                if t == 0.0 {
                    1.0
                } else {
                    (-rate * t.powf(*shape)).exp()
                }
            }
            D::GeneralizedHyperbolic { rate, shape } => (1.0 + shape * t).powf(-rate / shape),
            D::PowerOfBase { base, exponent } => {
                if *exponent == 0.0 {
                    1.0
                } else {
                    base.eval(t)?.powf(*exponent)
                }
            }
            D::Unit => 1.0,
            D::Impatient => {
                if t == 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
            D::Truncated {
                inner,
                horizon,
                closed,
            } => {
                let inside = if *closed { t <= *horizon } else { t < *horizon };
                if inside {
                    inner.eval(t)?
                } else {
                    0.0
                }
            }
            D::ChiMix { inner, gamma } => {
                if t == 0.0 {
                    1.0
                } else {
                    gamma * inner.eval(t)?
                }
            }
            D::Intensity { inner, factor } => inner.eval(t / factor)?,
            D::Grid { times, values } => {
                let last = *times.last().expect("validated grid");
                if t > last {
                    return Err(Error::Extrapolation {
                        t,
                        lo: times[0],
                        hi: last,
                    });
                }
                let idx = times.partition_point(|s| *s <= t) - 1;
                values[idx]
            }
        })
    }

    /// `alpha(0+)`.
    pub fn right_limit_at_zero(&self) -> f64 {
        match self {
            D::Exponential { .. }
            | D::CompoundAnnual { .. }
            | D::ConstantSensitivity { .. }
            | D::GeneralizedHyperbolic { .. }
            | D::PowerOfBase { .. }
            | D::Unit => 1.0,
            D::Impatient => 0.0,
            D::Truncated { inner, .. } | D::Intensity { inner, .. } => inner.right_limit_at_zero(),
            D::ChiMix { inner, gamma } => gamma * inner.right_limit_at_zero(),
            D::Grid { values, .. } => values[0],
        }
    }

    /// `sup {t : alpha(t) > 0}`. Grids whose samples stay positive are
    /// taken to remain positive past the last sample.
    pub fn support_supremum(&self) -> f64 {
        match self {
            D::Exponential { .. }
            | D::CompoundAnnual { .. }
            | D::ConstantSensitivity { .. }
            | D::GeneralizedHyperbolic { .. }
            | D::PowerOfBase { .. }
            | D::Unit => f64::INFINITY,
            D::Impatient => 0.0,
            D::Truncated { inner, horizon, .. } => inner.support_supremum().min(*horizon),
            D::ChiMix { inner, gamma } => {
                if *gamma == 0.0 {
                    0.0
                } else {
                    inner.support_supremum()
                }
            }
            D::Intensity { inner, factor } => inner.support_supremum() * factor,
            D::Grid { times, values } => match values.iter().position(|v| *v == 0.0) {
                Some(k) => times[k],
                None => f64::INFINITY,
            },
        }
    }

    /// Whether the support `{t : alpha(t) > 0}` contains its supremum.
    fn support_is_closed(&self) -> bool {
        let sup = self.support_supremum();
        sup.is_finite() && self.eval(sup).map(|v| v > 0.0).unwrap_or(false)
    }

    /// True for variants that are analytically strictly decreasing.
    pub fn is_strictly_decreasing(&self) -> bool {
        match self {
            D::Exponential { rate }
            | D::CompoundAnnual { rate }
            | D::ConstantSensitivity { rate, .. }
            | D::GeneralizedHyperbolic { rate, .. } => *rate > 0.0,
            D::PowerOfBase { base, exponent } => *exponent > 0.0 && base.is_strictly_decreasing(),
            D::Intensity { inner, .. } => inner.is_strictly_decreasing(),
            _ => false,
        }
    }

    /// True for variants that are positive on all of `[0, inf)`.
    pub fn is_positive(&self) -> bool {
        match self {
            D::Exponential { .. }
            | D::CompoundAnnual { .. }
            | D::ConstantSensitivity { .. }
            | D::GeneralizedHyperbolic { .. }
            | D::PowerOfBase { .. }
            | D::Unit => true,
            D::Intensity { inner, .. } => inner.is_positive(),
            _ => false,
        }
    }

    fn is_smooth(&self) -> bool {
        match self {
            D::Exponential { .. }
            | D::CompoundAnnual { .. }
            | D::ConstantSensitivity { .. }
            | D::GeneralizedHyperbolic { .. } => true,
            D::PowerOfBase { base, .. } | D::Intensity { inner: base, .. } => base.is_smooth(),
            _ => false,
        }
    }

    /// True when `alpha` is the extremely impatient discount `chi`.
    pub fn is_chi(&self) -> bool {
        self.support_supremum() == 0.0
    }

    /// Breakpoints where the function may jump: truncation horizons and
    /// grid sample times.
    pub fn characteristic_times(&self) -> Vec<f64> {
        match self {
            D::Truncated { inner, horizon, .. } => {
                let mut v = inner.characteristic_times();
                v.push(*horizon);
                v
            }
            D::ChiMix { inner, .. } => inner.characteristic_times(),
            D::PowerOfBase { base, .. } => base.characteristic_times(),
            D::Intensity { inner, factor } => {
                inner.characteristic_times().into_iter().map(|t| t * factor).collect()
            }
            D::Grid { times, .. } => times.clone(),
            _ => Vec::new(),
        }
    }

    /// Canonical `(base, exponent)` when the function is a power of one of
    /// the standard bases. Members of the same base are totally ordered by
    /// their exponent under every dominance relation.
    fn power_form(&self) -> Option<(PowerBase, f64)> {
        match self {
            D::Exponential { rate } => Some((PowerBase::Exponential, *rate)),
            D::CompoundAnnual { rate } => Some((PowerBase::Exponential, rate.ln_1p())),
            D::ConstantSensitivity { rate, shape } => Some((PowerBase::ConstantSensitivity(*shape), *rate)),
            D::GeneralizedHyperbolic { rate, shape } => {
                Some((PowerBase::GeneralizedHyperbolic(*shape), *rate))
            }
            D::PowerOfBase { base, exponent } => match base.power_form() {
                Some((key, e)) => Some((key, e * exponent)),
                None => Some((PowerBase::Other((**base).clone()), *exponent)),
            },
            _ => None,
        }
    }
}

fn nonneg_finite(name: &'static str, v: f64) -> Result<()> {
    if !(v >= 0.0) || !v.is_finite() {
        return Err(Error::param(name, v, "must be finite and nonnegative"));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
enum PowerBase {
    Exponential,
    ConstantSensitivity(f64),
    GeneralizedHyperbolic(f64),
    Other(DiscountFunction),
}

impl fmt::Display for DiscountFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            D::Exponential { rate } => write!(f, "exp({rate})"),
            D::CompoundAnnual { rate } => write!(f, "compound({rate})"),
            D::ConstantSensitivity { rate, shape } => write!(f, "cs({rate}, {shape})"),
            D::GeneralizedHyperbolic { rate, shape } => write!(f, "hyp({rate}, {shape})"),
            D::PowerOfBase { base, exponent } => write!(f, "({base})^{exponent}"),
            D::Unit => f.write_str("unit"),
            D::Impatient => f.write_str("chi"),
            D::Truncated {
                inner,
                horizon,
                closed,
            } => {
                let bracket = if *closed { ']' } else { ')' };
                write!(f, "{inner}·I[0,{horizon}{bracket}")
            }
            D::ChiMix { inner, gamma } => write!(f, "mix({gamma}; {inner})"),
            D::Intensity { inner, factor } => write!(f, "{inner}(t/{factor})"),
            D::Grid { times, .. } => write!(f, "grid[{} samples]", times.len()),
        }
    }
}

/// Evaluates `alpha - beta` style comparisons on a grid and reports
/// `False` on a clear violation, `Undetermined` on a violation inside the
/// tolerance band.
fn monotone_verdict(steps: impl Iterator<Item = (f64, f64)>, tol: f64) -> Verdict {
    let mut verdict = Verdict::True;
    for (step, scale) in steps {
        if step < -tol * scale.max(1.0) {
            return Verdict::False;
        }
        if step < 0.0 {
            verdict = Verdict::Undetermined;
        }
    }
    verdict
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::Precondition("dominance grid is empty".into()));
    }
    if grid.iter().any(|t| !(*t >= 0.0) || !t.is_finite()) {
        return Err(Error::Precondition("dominance grid times must be finite and nonnegative".into()));
    }
    Ok(())
}

/// `alpha ≽₁ beta`: `alpha >= beta` pointwise, checked on `grid`.
pub fn dominance_1(alpha: &DiscountFunction, beta: &DiscountFunction, grid: &[f64]) -> Result<Verdict> {
    check_grid(grid)?;
    if matches!(alpha, D::Unit) || matches!(beta, D::Impatient) || alpha == beta {
        return Ok(Verdict::True);
    }
    if let (Some((ka, ea)), Some((kb, eb))) = (alpha.power_form(), beta.power_form()) {
        if ka == kb {
            return Ok(Verdict::from_bool(ea <= eb));
        }
    }
    let steps = grid
        .iter()
        .map(|&t| Ok((alpha.eval(t)? - beta.eval(t)?, 1.0)))
        .collect::<Result<Vec<_>>>()?;
    Ok(monotone_verdict(steps.into_iter(), MONOTONICITY_TOL))
}

/// `alpha ≽₂ beta` (patience ordering): equal supports and
/// `alpha / beta` nondecreasing on the support of `beta`.
pub fn dominance_2(alpha: &DiscountFunction, beta: &DiscountFunction, grid: &[f64]) -> Result<Verdict> {
    check_grid(grid)?;
    if alpha == beta {
        return Ok(Verdict::True);
    }
    if alpha.support_supremum() != beta.support_supremum()
        || alpha.support_is_closed() != beta.support_is_closed()
    {
        return Ok(Verdict::False);
    }
    if let (Some((ka, ea)), Some((kb, eb))) = (alpha.power_form(), beta.power_form()) {
        if ka == kb {
            return Ok(Verdict::from_bool(ea <= eb));
        }
    }
    let mut sorted = grid.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut ratios = Vec::with_capacity(sorted.len());
    for t in sorted {
        let b = beta.eval(t)?;
        if b > 0.0 {
            ratios.push(alpha.eval(t)? / b);
        }
    }
    let steps = ratios.windows(2).map(|w| (w[1] - w[0], w[0].abs()));
    Ok(monotone_verdict(steps, MONOTONICITY_TOL))
}

/// `alpha ≽₃ beta` (relative decreasing impatience): both strictly
/// decreasing and differentiable, `alpha' / beta'` nondecreasing. Derivatives
/// are central finite differences with step `FD_STEP_FRACTION · span`.
pub fn dominance_3(alpha: &DiscountFunction, beta: &DiscountFunction, grid: &[f64]) -> Result<Verdict> {
    check_grid(grid)?;
    for (name, d) in [("alpha", alpha), ("beta", beta)] {
        if !d.is_smooth() || !d.is_strictly_decreasing() {
            return Err(Error::Precondition(format!(
                "{name} = {d} is not differentiable with negative derivative"
            )));
        }
    }
    let mut sorted = grid.to_vec();
    sorted.sort_by(f64::total_cmp);
    let span = sorted[sorted.len() - 1] - sorted[0];
    let h = FD_STEP_FRACTION * if span > 0.0 { span } else { 1.0 };
    let derivative = |d: &DiscountFunction, t: f64| -> Result<f64> {
        if t - h >= 0.0 {
            Ok((d.eval(t + h)? - d.eval(t - h)?) / (2.0 * h))
        } else {
            Ok((d.eval(t + h)? - d.eval(t)?) / h)
        }
    };
    let mut ratios = Vec::with_capacity(sorted.len());
    for &t in &sorted {
        let (da, db) = (derivative(alpha, t)?, derivative(beta, t)?);
        if !(da < 0.0) || !(db < 0.0) {
            return Err(Error::Precondition(format!(
                "derivative vanishes numerically at t = {t}"
            )));
        }
        ratios.push(da / db);
    }
    if alpha == beta {
        return Ok(Verdict::True);
    }
    let steps = ratios.windows(2).map(|w| (w[1] - w[0], w[0].abs()));
    Ok(monotone_verdict(steps, MONOTONICITY_TOL))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        (0..=n).map(|i| lo + (hi - lo) * i as f64 / n as f64).collect()
    }

    #[test]
    fn closed_forms() {
        let e = DiscountFunction::exponential(0.1).unwrap();
        assert!((e.eval(10.0).unwrap() - (-1.0f64).exp()).abs() < 1e-15);
        let c = DiscountFunction::compound_annual(0.6).unwrap();
        assert!((c.eval(1.0).unwrap() - 0.625).abs() < 1e-15);
        assert_eq!(D::Impatient.eval(0.0).unwrap(), 1.0);
        assert_eq!(D::Impatient.eval(0.001).unwrap(), 0.0);
        let h = DiscountFunction::generalized_hyperbolic(0.2, 1.0).unwrap();
        assert!((h.eval(1.0).unwrap() - 2f64.powf(-0.2)).abs() < 1e-15);
    }

    #[test]
    fn truncation_endpoint_conventions() {
        let inner = DiscountFunction::exponential(0.1).unwrap();
        let closed = DiscountFunction::truncated(inner.clone(), 5.0, true).unwrap();
        let open = DiscountFunction::truncated(inner.clone(), 5.0, false).unwrap();
        assert_eq!(closed.eval(5.0).unwrap(), inner.eval(5.0).unwrap());
        assert_eq!(open.eval(5.0).unwrap(), 0.0);
        assert_eq!(closed.eval(5.0001).unwrap(), 0.0);
        assert_eq!(closed.right_limit_at_zero(), 1.0);
        assert_eq!(closed.support_supremum(), 5.0);
    }

    #[test]
    fn limits_and_supports() {
        let e = DiscountFunction::exponential(0.3).unwrap();
        assert_eq!(e.right_limit_at_zero(), 1.0);
        assert_eq!(e.support_supremum(), f64::INFINITY);
        assert_eq!(D::Impatient.right_limit_at_zero(), 0.0);
        assert_eq!(D::Impatient.support_supremum(), 0.0);
        assert_eq!(D::Unit.support_supremum(), f64::INFINITY);
        assert!(D::Impatient.is_chi());
        assert!(DiscountFunction::chi_mix(e, 0.0).unwrap().is_chi());
    }

    #[test]
    fn grid_step_interpolation_and_extrapolation_error() {
        let g = DiscountFunction::grid(vec![0.0, 1.0, 2.0], vec![1.0, 0.9, 0.8]).unwrap();
        assert_eq!(g.eval(0.5).unwrap(), 1.0);
        assert_eq!(g.eval(1.0).unwrap(), 0.9);
        assert_eq!(g.eval(2.0).unwrap(), 0.8);
        assert!(matches!(g.eval(2.5), Err(Error::Extrapolation { .. })));
        assert!(DiscountFunction::grid(vec![0.0, 1.0], vec![1.0, 1.1]).is_err());
        assert!(DiscountFunction::grid(vec![0.0, 1.0], vec![0.9, 0.8]).is_err());
    }

    #[test]
    fn validation_rejects_bad_parameters() {
        assert!(DiscountFunction::exponential(-0.1).is_err());
        assert!(DiscountFunction::compound_annual(-0.5).is_err());
        assert!(DiscountFunction::constant_sensitivity(0.1, 0.0).is_err());
        assert!(DiscountFunction::power_of_base(D::Unit, 1.0).is_err());
        assert!(DiscountFunction::chi_mix(D::Unit, 1.5).is_err());
        assert!(DiscountFunction::truncated(D::Unit, 0.0, true).is_err());
        assert!(DiscountFunction::intensity(D::Unit, 0.0).is_err());
    }

    #[test]
    fn chi_mix_endpoints() {
        let e = DiscountFunction::exponential(0.2).unwrap();
        let one = DiscountFunction::chi_mix(e.clone(), 1.0).unwrap();
        let zero = DiscountFunction::chi_mix(e.clone(), 0.0).unwrap();
        for t in [0.5, 1.0, 7.0] {
            assert_eq!(one.eval(t).unwrap(), e.eval(t).unwrap());
            assert_eq!(zero.eval(t).unwrap(), D::Impatient.eval(t).unwrap());
        }
    }

    #[test]
    fn dominance_1_examples() {
        let e1 = DiscountFunction::exponential(0.1).unwrap();
        let e2 = DiscountFunction::exponential(0.2).unwrap();
        let g = grid(0.0, 20.0, 20);
        assert_eq!(dominance_1(&e1, &e2, &g).unwrap(), Verdict::True);
        assert_eq!(dominance_1(&e2, &e1, &g).unwrap(), Verdict::False);
        assert_eq!(dominance_1(&D::Unit, &e2, &g).unwrap(), Verdict::True);
        let h = DiscountFunction::generalized_hyperbolic(0.1, 1.0).unwrap();
        assert_eq!(dominance_1(&e2, &h, &g).unwrap(), Verdict::False);
        assert!(dominance_1(&e1, &e2, &[]).is_err());
    }

    #[test]
    fn dominance_2_examples() {
        let e1 = DiscountFunction::exponential(0.1).unwrap();
        let e2 = DiscountFunction::exponential(0.2).unwrap();
        let g = grid(0.0, 20.0, 20);
        assert_eq!(dominance_2(&e1, &e2, &g).unwrap(), Verdict::True);
        let t = DiscountFunction::truncated(e1.clone(), 5.0, true).unwrap();
        assert_eq!(dominance_2(&e1, &t, &g).unwrap(), Verdict::False);
        let c1 = DiscountFunction::constant_sensitivity(0.1, 2.0).unwrap();
        let c2 = DiscountFunction::constant_sensitivity(0.2, 2.0).unwrap();
        assert_eq!(dominance_2(&c1, &c2, &g).unwrap(), Verdict::True);
        // the open and closed truncations have different supports
        let open = DiscountFunction::truncated(e1.clone(), 5.0, false).unwrap();
        assert_eq!(dominance_2(&t, &open, &g).unwrap(), Verdict::False);
    }

    #[test]
    fn dominance_3_preconditions() {
        let e1 = DiscountFunction::exponential(0.1).unwrap();
        let g = grid(0.1, 20.0, 50);
        assert!(dominance_3(&D::Unit, &e1, &g).is_err());
        assert!(dominance_3(&e1, &D::Impatient, &g).is_err());
        let t = DiscountFunction::truncated(e1.clone(), 5.0, true).unwrap();
        assert!(dominance_3(&t, &e1, &g).is_err());
        assert_eq!(dominance_3(&e1, &e1, &g).unwrap(), Verdict::True);
    }
}
