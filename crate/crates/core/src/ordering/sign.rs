//! The sign preorder: `x ⊵ y` iff `sgn F(x) >= sgn F(y)` for every member.

use super::compare::{probes, tau_candidates, ComparabilityResult, IntervalSet, Search};
use super::scenario::{truncate_discount, ScenarioSet};
use crate::cashflow::StepCashFlow;
use crate::discount::DiscountFunction;
use crate::error::{Error, Result};
use crate::irr::{acceptance_set, DFamily, Profile};
use crate::valuation::npv_and_scale;

/// The possible signs of one NPV value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sign {
    Pos,
    Neg,
    Zero,
    /// Within tolerance of zero: any of `-1, 0, 1`.
    NearZero,
}

impl Sign {
    fn of(value: f64, scale: f64, tol: f64) -> Sign {
        if value == 0.0 || scale == 0.0 {
            Sign::Zero
        } else if value > tol * scale {
            Sign::Pos
        } else if value < -tol * scale {
            Sign::Neg
        } else {
            Sign::NearZero
        }
    }

    fn range(self) -> (i8, i8) {
        match self {
            Sign::Pos => (1, 1),
            Sign::Neg => (-1, -1),
            Sign::Zero => (0, 0),
            Sign::NearZero => (-1, 1),
        }
    }
}

/// `Some(definite)` when `sgn(lo) < sgn(hi)` is possible.
fn below(lo: Sign, hi: Sign) -> Option<bool> {
    if lo == Sign::NearZero && hi == Sign::NearZero {
        return None;
    }
    let (a, b) = (lo.range(), hi.range());
    if a.1 < b.0 {
        Some(true)
    } else if a.0 < b.1 {
        Some(false)
    } else {
        None
    }
}

fn observe(s: &mut Search, sx: Sign, sy: Sign, label: impl Fn() -> String) {
    if let Some(definite) = below(sx, sy) {
        s.ge.record(definite, &label);
    }
    if let Some(definite) = below(sy, sx) {
        s.le.record(definite, &label);
    }
}

/// Compares `x` and `y` under `⊵`. Supports finite, truncation, reduction
/// and rate-range sets and unions of these.
pub fn sign_compare(s: &ScenarioSet, x: &StepCashFlow, y: &StepCashFlow, tol: f64) -> Result<ComparabilityResult> {
    s.validate()?;
    Ok(search(s, x, y, tol)?.finish())
}

fn search(s: &ScenarioSet, x: &StepCashFlow, y: &StepCashFlow, tol: f64) -> Result<Search> {
    match s {
        ScenarioSet::Finite { members } => members_search(members.iter().map(|m| m.discount.clone()), x, y, tol),
        ScenarioSet::Truncation {
            alpha: Some(alpha),
            tau,
            include_untruncated,
        } => {
            let mut ds = tau_candidates(*tau, x, y)
                .into_iter()
                .map(|t| truncate_discount(alpha.clone(), t))
                .collect::<Result<Vec<_>>>()?;
            if *include_untruncated {
                ds.push(alpha.clone());
            }
            members_search(ds.into_iter(), x, y, tol)
        }
        ScenarioSet::Reduction {
            alpha: Some(alpha),
            gamma,
        } => reduction_search(alpha, *gamma, x, y, tol),
        ScenarioSet::DFamilyRange { family, lambda } => d_family_search(family, *lambda, x, y, tol),
        ScenarioSet::Union { parts } => parts
            .iter()
            .map(|p| search(p, x, y, tol))
            .try_fold(Search::new(), |acc, r| Ok(acc.merge(r?))),
        _ => Err(Error::Precondition(
            "sign comparison supports finite, truncation, reduction and rate-range sets".into(),
        )),
    }
}

fn members_search(
    ds: impl Iterator<Item = DiscountFunction>,
    x: &StepCashFlow,
    y: &StepCashFlow,
    tol: f64,
) -> Result<Search> {
    let mut s = Search::new();
    for d in ds {
        let (vx, sx) = npv_and_scale(&d, x)?;
        let (vy, sy) = npv_and_scale(&d, y)?;
        observe(&mut s, Sign::of(vx, sx, tol), Sign::of(vy, sy, tol), || d.to_string());
    }
    Ok(s)
}

fn point_set(roots: impl IntoIterator<Item = f64>, certain_up_to: f64) -> IntervalSet {
    IntervalSet {
        intervals: roots.into_iter().map(|r| (r, r, true)).collect(),
        certain_up_to,
    }
}

/// Scans the probes generated by the roots of both projects; a project's
/// sign is exactly zero at a probe holding one of its roots.
fn scan_roots(
    sets: [IntervalSet; 2],
    range: (f64, f64),
    tol: f64,
    sign_at: impl Fn(usize, f64) -> Sign,
    label: impl Fn(f64) -> String,
) -> Search {
    let mut s = Search::new();
    for p in probes([&sets[0], &sets[1]], range, 10.0 * tol) {
        if p.at < range.0 || p.at > range.1 {
            continue;
        }
        let sign = |k: usize| {
            if p.endpoint[k].is_some() {
                Sign::Zero
            } else if p.at > sets[k].certain_up_to {
                Sign::NearZero
            } else {
                sign_at(k, p.at)
            }
        };
        observe(&mut s, sign(0), sign(1), || label(p.at));
    }
    s
}

fn reduction_search(
    alpha: &DiscountFunction,
    range: (f64, f64),
    x: &StepCashFlow,
    y: &StepCashFlow,
    tol: f64,
) -> Result<Search> {
    // H_γ = x0 + γ d with scale |x0| + γ (Σ|a|α - |x0|)
    let affine = |p: &StepCashFlow| -> Result<(f64, f64, f64, f64)> {
        let (f, scale) = npv_and_scale(alpha, p)?;
        let x0 = p.initial();
        Ok((x0, f - x0, x0.abs(), scale - x0.abs()))
    };
    let coefs = [affine(x)?, affine(y)?];
    let sets = coefs.map(|(x0, d, _, _)| {
        let root = (d != 0.0).then(|| -x0 / d).filter(|r| r.is_finite());
        point_set(root.filter(|r| (range.0..=range.1).contains(r)), f64::INFINITY)
    });
    Ok(scan_roots(
        sets,
        range,
        tol,
        |k, g| {
            let (x0, d, s0, sd) = coefs[k];
            Sign::of(x0 + g * d, s0 + g * sd, tol)
        },
        |g| format!("H[{g}]({alpha})"),
    ))
}

fn d_family_search(
    family: &DFamily,
    range: (f64, f64),
    x: &StepCashFlow,
    y: &StepCashFlow,
    tol: f64,
) -> Result<Search> {
    let profiles = [Profile::new(family, x)?, Profile::new(family, y)?];
    let mut sets = Vec::with_capacity(2);
    for p in [x, y] {
        let a = acceptance_set(family, p, None, tol)?;
        let roots = a.roots().into_iter().chain(a.tangencies.iter().map(|t| t.lambda));
        let up_to = if a.undetermined { a.lambda_max } else { f64::INFINITY };
        sets.push(point_set(roots, up_to));
    }
    let sets: [IntervalSet; 2] = sets.try_into().expect("two sets");
    Ok(scan_roots(
        sets,
        range,
        tol,
        |k, l| Sign::of(profiles[k].g(l), profiles[k].scale(l), tol),
        |l| family.label(l),
    ))
}
