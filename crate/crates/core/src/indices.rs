//! Profitability index, ratio index, the undiscounted index and the
//! natural extension of ratio indices through the `W̃` interval.

use serde::{Deserialize, Serialize};

use crate::cashflow::StepCashFlow;
use crate::discount::DiscountFunction;
use crate::error::{Error, Result};
use crate::numeric::{self, hybrid_mesh};
use crate::valuation::NpvFunctional;

/// Geometric mesh points appended to the default grid.
const DEFAULT_MESH_POINTS: usize = 64;

/// `PI^F(x) = (F(x) - x(0)) / (-x(0))` when `F(x) >= 0` and `x(0) < 0`.
pub fn pi(f: &NpvFunctional, x: &StepCashFlow) -> Result<Option<f64>> {
    let x0 = x.initial();
    let v = f.eval(x)?;
    Ok((v >= 0.0 && x0 < 0.0).then(|| (v - x0) / -x0))
}

/// `RI_G^F(x) = 1 - F(x)/G(x)` when `F(x) >= 0 > G(x)`.
pub fn ri(f: &NpvFunctional, g: &NpvFunctional, x: &StepCashFlow) -> Result<Option<f64>> {
    distinct(f, g)?;
    let (fv, gv) = (f.eval(x)?, g.eval(x)?);
    Ok((fv >= 0.0 && gv < 0.0).then(|| 1.0 - fv / gv))
}

fn distinct(f: &NpvFunctional, g: &NpvFunctional) -> Result<()> {
    if f.discount == g.discount {
        return Err(Error::Precondition("ratio index needs two distinct functionals".into()));
    }
    Ok(())
}

/// Natural extension of the undiscounted index `π`:
/// `0` if `x(0) < 0` and `x(+inf) < 0`; `(x(+inf) - x(0))/(-x(0))` if
/// `x(0) < 0 <= x(+inf)`; `+inf` if both are nonnegative.
pub fn undiscounted_pi_extension(x: &StepCashFlow) -> Result<f64> {
    let (x0, total) = (x.initial(), x.terminal());
    match (x0 < 0.0, total < 0.0) {
        (true, true) => Ok(0.0),
        (true, false) => Ok((total - x0) / -x0),
        (false, false) => Ok(f64::INFINITY),
        (false, true) => Err(Error::Domain(
            "initial balance nonnegative but terminal balance negative".into(),
        )),
    }
}

/// `W̃ = {w : wα + (1-w)β is a discount function}` estimated on a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TildeBounds {
    /// Bounds from the constraints at the given grid.
    #[serde(with = "numeric::ext_real")]
    pub raw_w_inf: f64,
    #[serde(with = "numeric::ext_real")]
    pub raw_w_sup: f64,
    /// Bounds after re-validation on the grid refined by midpoints.
    #[serde(with = "numeric::ext_real")]
    pub w_inf: f64,
    #[serde(with = "numeric::ext_real")]
    pub w_sup: f64,
    pub grid: Vec<f64>,
}

/// Intersects the half-lines in `w` that keep `h_w = wα + (1-w)β`
/// nonnegative at each grid point and nonincreasing across each adjacent
/// pair.
fn half_line_bounds(alpha: &DiscountFunction, beta: &DiscountFunction, grid: &[f64]) -> Result<(f64, f64)> {
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    let mut tighten = |coef: f64, rhs: f64| {
        // constraint: coef·w <= rhs
        if coef > 0.0 {
            hi = hi.min(rhs / coef);
        } else if coef < 0.0 {
            lo = lo.max(rhs / coef);
        }
    };
    let samples = grid
        .iter()
        .map(|&t| Ok((alpha.eval(t)?, beta.eval(t)?)))
        .collect::<Result<Vec<_>>>()?;
    for &(a, b) in &samples {
        // b + w(a - b) >= 0
        tighten(b - a, b);
    }
    for w in samples.windows(2) {
        let ((a0, b0), (a1, b1)) = (w[0], w[1]);
        // (b1 - b0) + w((a1 - b1) - (a0 - b0)) <= 0
        tighten((a1 - b1) - (a0 - b0), b0 - b1);
    }
    Ok((lo, hi))
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.first() != Some(&0.0) {
        return Err(Error::Precondition("grid must start at t = 0".into()));
    }
    if grid.windows(2).any(|w| !(w[0] < w[1])) || grid.iter().any(|t| !t.is_finite()) {
        return Err(Error::Precondition("grid times must be finite and strictly increasing".into()));
    }
    Ok(())
}

pub fn tilde_bounds(f: &NpvFunctional, g: &NpvFunctional, grid: &[f64]) -> Result<TildeBounds> {
    distinct(f, g)?;
    check_grid(grid)?;
    let (alpha, beta) = (&f.discount, &g.discount);
    let (raw_lo, raw_hi) = half_line_bounds(alpha, beta, grid)?;
    let mut refined = Vec::with_capacity(2 * grid.len());
    for w in grid.windows(2) {
        refined.push(w[0]);
        refined.push(0.5 * (w[0] + w[1]));
    }
    refined.push(*grid.last().expect("nonempty grid"));
    let (lo, hi) = half_line_bounds(alpha, beta, &refined)?;
    // both functionals are members, so [0, 1] belongs to W̃ up to rounding
    let (raw_lo, raw_hi) = (raw_lo.min(0.0), raw_hi.max(1.0));
    let (lo, hi) = (lo.min(0.0).max(raw_lo), hi.max(1.0).min(raw_hi));
    if lo > hi {
        return Err(Error::Precondition(format!("inconsistent bounds [{lo}, {hi}]")));
    }
    Ok(TildeBounds {
        raw_w_inf: raw_lo,
        raw_w_sup: raw_hi,
        w_inf: lo,
        w_sup: hi,
        grid: grid.to_vec(),
    })
}

/// `{0}`, the transaction times, both discount functions' breakpoints and a
/// geometric mesh to four times the last of these. Points outside a sampled
/// discount function's range are dropped.
pub fn default_grid(x: &StepCashFlow, alpha: &DiscountFunction, beta: &DiscountFunction) -> Vec<f64> {
    let mut pts = vec![0.0];
    pts.extend(x.positive_times());
    pts.extend(alpha.characteristic_times());
    pts.extend(beta.characteristic_times());
    let last = pts.iter().copied().fold(1.0, f64::max);
    pts.extend(hybrid_mesh(0.0, 4.0 * last, DEFAULT_MESH_POINTS));
    pts.retain(|t| t.is_finite() && *t >= 0.0 && alpha.eval(*t).is_ok() && beta.eval(*t).is_ok());
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts
}

/// `RI̅_G^F(x)` through `F̃ = G + w_sup(F - G)` and `G̃ = G + w_inf(F - G)`:
/// `0` when both are negative, `RI_{G̃}^{F̃}(x)` when `F̃(x) >= 0 > G̃(x)`,
/// `+inf` when both are nonnegative.
pub fn ri_natural_extension(
    f: &NpvFunctional,
    g: &NpvFunctional,
    x: &StepCashFlow,
    grid: Option<&[f64]>,
) -> Result<f64> {
    let owned;
    let grid = match grid {
        Some(g) => g,
        None => {
            owned = default_grid(x, &f.discount, &g.discount);
            &owned
        }
    };
    let b = tilde_bounds(f, g, grid)?;
    if !b.w_inf.is_finite() || !b.w_sup.is_finite() {
        return Err(Error::Precondition("W̃ is unbounded on this grid".into()));
    }
    let (fv, gv) = (f.eval(x)?, g.eval(x)?);
    let f_tilde = gv + b.w_sup * (fv - gv);
    let g_tilde = gv + b.w_inf * (fv - gv);
    match (f_tilde >= 0.0, g_tilde >= 0.0) {
        (false, false) => Ok(0.0),
        (true, false) => Ok(1.0 - f_tilde / g_tilde),
        (true, true) => Ok(f64::INFINITY),
        (false, true) => Err(Error::Domain(format!(
            "extended functionals give F̃(x) = {f_tilde} < 0 <= G̃(x) = {g_tilde}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flow(pairs: &[(f64, f64)]) -> StepCashFlow {
        StepCashFlow::new(pairs.iter().copied()).unwrap()
    }

    fn unit() -> NpvFunctional {
        NpvFunctional::undiscounted()
    }

    fn chi() -> NpvFunctional {
        NpvFunctional::impatient()
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi(&unit(), &flow(&[(0.0, -1.0), (1.0, 3.0)])).unwrap(), Some(3.0));
        assert_eq!(pi(&unit(), &flow(&[(0.0, -2.0), (1.0, 3.0)])).unwrap(), Some(1.5));
        assert_eq!(pi(&unit(), &flow(&[(0.0, 1.0), (1.0, 3.0)])).unwrap(), None);
    }

    #[test]
    fn ri_examples() {
        let x = flow(&[(0.0, -1.0), (1.0, 3.0)]);
        assert_eq!(ri(&unit(), &chi(), &x).unwrap(), Some(3.0));
        assert_eq!(ri(&unit(), &chi(), &flow(&[(0.0, -1.0), (1.0, 1.0)])).unwrap(), Some(1.0));
        assert!(ri(&unit(), &unit(), &x).is_err());
    }

    #[test]
    fn undiscounted_extension() {
        assert_eq!(undiscounted_pi_extension(&flow(&[(0.0, -1.0), (2.0, 4.0)])).unwrap(), 4.0);
        assert_eq!(undiscounted_pi_extension(&flow(&[(0.0, -1.0), (1.0, 0.5)])).unwrap(), 0.0);
        assert_eq!(
            undiscounted_pi_extension(&flow(&[(0.0, 1.0), (1.0, 1.0)])).unwrap(),
            f64::INFINITY
        );
        assert!(undiscounted_pi_extension(&flow(&[(0.0, 1.0), (1.0, -2.0)]))
            .unwrap_err()
            .is_domain());
    }

    #[test]
    fn unit_versus_chi_bounds() {
        let b = tilde_bounds(&unit(), &chi(), &[0.0, 1.0, 2.0, 5.0]).unwrap();
        assert_eq!((b.raw_w_inf, b.raw_w_sup), (0.0, 1.0));
        assert_eq!((b.w_inf, b.w_sup), (0.0, 1.0));
        assert!(tilde_bounds(&unit(), &unit(), &[0.0, 1.0]).is_err());
        assert!(tilde_bounds(&unit(), &chi(), &[1.0, 2.0]).is_err());
    }

    #[test]
    fn ri_extension_examples() {
        let ext = |pairs: &[(f64, f64)]| ri_natural_extension(&unit(), &chi(), &flow(pairs), None);
        assert_eq!(ext(&[(0.0, -1.0), (1.0, 0.5)]).unwrap(), 0.0);
        assert_eq!(ext(&[(0.0, 1.0), (1.0, 1.0)]).unwrap(), f64::INFINITY);
        assert_eq!(ext(&[(0.0, -1.0), (1.0, 3.0)]).unwrap(), 3.0);
        assert!(ext(&[(0.0, 1.0), (1.0, -3.0)]).unwrap_err().is_domain());
    }
}
