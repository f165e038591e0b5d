//! The comparability engine.
//!
//! `x ⪰ y` fails exactly when some member accepts `y` and rejects `x`. Each
//! scenario kind is searched for such witnesses over a candidate set that is
//! exact where the structure allows it (finite members, truncation
//! breakpoints, acceptance-set endpoints, closed-form reduction intervals)
//! and a refined parameter grid otherwise.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::scenario::{truncate_discount, ScenarioSet};
use crate::cashflow::StepCashFlow;
use crate::discount::DiscountFunction;
use crate::error::Result;
use crate::irr::{acceptance_set, DFamily};
use crate::numeric::{bisect_flip, hybrid_mesh};
use crate::valuation::npv_and_scale;

/// Parameter resolution of grid refinement, relative to `max(1, |p|)`.
pub const RESOLUTION: f64 = 1e-6;

/// Samples of a continuous base parameter before refinement.
const BASE_POINTS: usize = 128;

/// Samples of an intensity transform inside a product.
const TRANSFORM_POINTS: usize = 16;

/// Endpoints closer than this multiple of `tol` (relative) are identified.
const MERGE_FACTOR: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `x ⪰ y` and some member accepts `x` but rejects `y`.
    GreaterStrict,
    /// `x ⪰ y`; whether `y ⪰ x` holds is undetermined.
    GreaterEq,
    LessStrict,
    LessEq,
    Equivalent,
    Incomparable,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparabilityResult {
    pub relation: Relation,
    /// A member accepting `x` but rejecting `y`.
    pub accepts_x_only: Option<String>,
    /// A member accepting `y` but rejecting `x`.
    pub accepts_y_only: Option<String>,
}

impl ComparabilityResult {
    /// `x ⪰ y` is established.
    pub fn is_ge(&self) -> bool {
        matches!(
            self.relation,
            Relation::GreaterStrict | Relation::GreaterEq | Relation::Equivalent
        )
    }

    /// `y ⪰ x` is established.
    pub fn is_le(&self) -> bool {
        matches!(
            self.relation,
            Relation::LessStrict | Relation::LessEq | Relation::Equivalent
        )
    }

    pub fn is_definite(&self) -> bool {
        !matches!(self.relation, Relation::Undetermined | Relation::GreaterEq | Relation::LessEq)
    }

    /// The same comparison seen from `y`.
    pub fn reversed(&self) -> Self {
        let relation = match self.relation {
            Relation::GreaterStrict => Relation::LessStrict,
            Relation::GreaterEq => Relation::LessEq,
            Relation::LessStrict => Relation::GreaterStrict,
            Relation::LessEq => Relation::GreaterEq,
            other => other,
        };
        Self {
            relation,
            accepts_x_only: self.accepts_y_only.clone(),
            accepts_y_only: self.accepts_x_only.clone(),
        }
    }
}

/// Acceptance class of one NPV value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Class {
    Accept,
    Reject,
    /// `|F(x)| <= tol · Σ|a_k|α(t_k)`: float noise could decide the sign.
    Boundary,
}

pub(crate) fn class_of(value: f64, scale: f64, tol: f64) -> Class {
    if scale == 0.0 || value.abs() > tol * scale {
        if value >= 0.0 {
            Class::Accept
        } else {
            Class::Reject
        }
    } else {
        Class::Boundary
    }
}

/// State of the search for witnesses against one direction of `⪰`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Half {
    Holds,
    Unknown(String),
    Fails(String),
}

impl Half {
    pub(crate) fn record(&mut self, definite: bool, label: impl FnOnce() -> String) {
        match (&*self, definite) {
            (Half::Fails(_), _) => {}
            (_, true) => *self = Half::Fails(label()),
            (Half::Holds, false) => *self = Half::Unknown(label()),
            (Half::Unknown(_), false) => {}
        }
    }

    pub(crate) fn merge(self, other: Half) -> Half {
        match (self, other) {
            (f @ Half::Fails(_), _) | (_, f @ Half::Fails(_)) => f,
            (u @ Half::Unknown(_), _) | (_, u @ Half::Unknown(_)) => u,
            _ => Half::Holds,
        }
    }
}

/// `Some(definite)` when a member with classes (`acc`, `rej`) may accept
/// the first project and reject the second.
fn violation(acc: Class, rej: Class) -> Option<bool> {
    match (acc, rej) {
        (Class::Accept, Class::Reject) => Some(true),
        (Class::Boundary, Class::Reject) | (Class::Accept, Class::Boundary) => Some(false),
        _ => None,
    }
}

/// Witness pair `(ge, le)` collected over members.
#[derive(Debug, Clone)]
pub(crate) struct Search {
    pub ge: Half,
    pub le: Half,
}

impl Search {
    pub(crate) fn new() -> Self {
        Self {
            ge: Half::Holds,
            le: Half::Holds,
        }
    }

    pub(crate) fn observe(&mut self, cx: Class, cy: Class, label: impl Fn() -> String) {
        if let Some(definite) = violation(cy, cx) {
            self.ge.record(definite, &label);
        }
        if let Some(definite) = violation(cx, cy) {
            self.le.record(definite, &label);
        }
    }

    pub(crate) fn merge(self, other: Search) -> Search {
        Search {
            ge: self.ge.merge(other.ge),
            le: self.le.merge(other.le),
        }
    }

    pub(crate) fn finish(self) -> ComparabilityResult {
        use Half::*;
        let relation = match (&self.ge, &self.le) {
            (Holds, Holds) => Relation::Equivalent,
            (Holds, Fails(_)) => Relation::GreaterStrict,
            (Holds, Unknown(_)) => Relation::GreaterEq,
            (Fails(_), Holds) => Relation::LessStrict,
            (Unknown(_), Holds) => Relation::LessEq,
            (Fails(_), Fails(_)) => Relation::Incomparable,
            _ => Relation::Undetermined,
        };
        let label = |h: Half| match h {
            Holds => None,
            Unknown(l) | Fails(l) => Some(l),
        };
        ComparabilityResult {
            relation,
            accepts_x_only: label(self.le),
            accepts_y_only: label(self.ge),
        }
    }
}

/// Compares `x` and `y` under the ordering induced by `s`.
pub fn compare(s: &ScenarioSet, x: &StepCashFlow, y: &StepCashFlow, tol: f64) -> Result<ComparabilityResult> {
    s.validate()?;
    Ok(search(s, x, y, tol)?.finish())
}

pub(crate) fn search(s: &ScenarioSet, x: &StepCashFlow, y: &StepCashFlow, tol: f64) -> Result<Search> {
    match s {
        ScenarioSet::DFamilyRange { family, lambda } => search_d_family(family, *lambda, x, y, tol),
        ScenarioSet::Reduction {
            alpha: Some(alpha),
            gamma,
        } => search_reduction(alpha, *gamma, x, y, tol),
        ScenarioSet::Union { parts } => parts
            .iter()
            .map(|p| search(p, x, y, tol))
            .try_fold(Search::new(), |acc, r| Ok(acc.merge(r?))),
        ScenarioSet::Product { components } => {
            let (grid, slots) = plan(components, x, y, tol)?;
            run_slots(&grid, &slots, x, y, tol)
        }
        other => {
            let (grid, slots) = plan(std::slice::from_ref(other), x, y, tol)?;
            run_slots(&grid, &slots, x, y, tol)
        }
    }
}

/// Closed intervals of accepted parameters; `isolated` marks single points.
#[derive(Debug, Clone)]
pub(crate) struct IntervalSet {
    pub intervals: Vec<(f64, f64, bool)>,
    /// Membership beyond this parameter is not certified.
    pub certain_up_to: f64,
}

impl IntervalSet {
    fn clip(&self, (lo, hi): (f64, f64)) -> IntervalSet {
        let intervals = self
            .intervals
            .iter()
            .filter_map(|&(a, b, iso)| {
                let (a, b) = (a.max(lo), b.min(hi));
                (a <= b).then_some((a, b, iso || a == b))
            })
            .collect();
        IntervalSet {
            intervals,
            certain_up_to: self.certain_up_to,
        }
    }

    fn contains(&self, v: f64) -> bool {
        self.intervals.iter().any(|&(a, b, _)| a <= v && v <= b)
    }
}

/// One cluster of coincident endpoints, or a plain parameter value.
#[derive(Debug, Clone)]
pub(crate) struct Probe {
    pub at: f64,
    /// Per project: `None` if no endpoint of its set lies here, otherwise
    /// whether that endpoint belongs to an isolated point.
    pub endpoint: [Option<bool>; 2],
}

/// Candidate parameters for comparing two interval sets on `range`:
/// endpoint clusters, midpoints between them and a tail point.
pub(crate) fn probes(sets: [&IntervalSet; 2], range: (f64, f64), merge: f64) -> Vec<Probe> {
    let mut points: Vec<(f64, Option<(usize, bool)>)> = vec![(range.0, None)];
    if range.1.is_finite() {
        points.push((range.1, None));
    }
    for (k, set) in sets.iter().enumerate() {
        for &(a, b, iso) in &set.intervals {
            for v in [a, b] {
                if v.is_finite() {
                    points.push((v, Some((k, iso))));
                }
            }
        }
    }
    points.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut clusters: Vec<(f64, f64, [Option<bool>; 2])> = Vec::new();
    for (v, owner) in points {
        let joins = clusters
            .last()
            .is_some_and(|&(_, last, _)| v - last <= merge * v.abs().max(1.0));
        if !joins {
            clusters.push((v, v, [None, None]));
        }
        let c = clusters.last_mut().expect("cluster just pushed");
        c.1 = v;
        if let Some((k, iso)) = owner {
            c.2[k] = Some(c.2[k].unwrap_or(false) || iso);
        }
    }

    let mut out = Vec::with_capacity(2 * clusters.len() + 1);
    for (i, &(first, last, endpoint)) in clusters.iter().enumerate() {
        if i > 0 {
            let prev = clusters[i - 1].1;
            out.push(Probe {
                at: 0.5 * (prev + first),
                endpoint: [None, None],
            });
        }
        out.push(Probe {
            at: 0.5 * (first + last),
            endpoint,
        });
    }
    if range.1.is_infinite() {
        let last = clusters.last().map_or(range.0, |c| c.1);
        out.push(Probe {
            at: last + last.abs().max(1.0),
            endpoint: [None, None],
        });
    }
    out
}

/// Class of a project at a probe, or `None` when the probe is a closed
/// endpoint of its set (membership there equals that on one side).
fn class_at(set: &IntervalSet, probe: &Probe, k: usize) -> Option<Class> {
    match probe.endpoint[k] {
        Some(true) => Some(Class::Boundary),
        Some(false) => None,
        None if probe.at > set.certain_up_to => Some(Class::Boundary),
        None if set.contains(probe.at) => Some(Class::Accept),
        None => Some(Class::Reject),
    }
}

pub(crate) fn compare_interval_sets(
    ax: &IntervalSet,
    ay: &IntervalSet,
    range: (f64, f64),
    tol: f64,
    label: &dyn Fn(f64) -> String,
) -> Search {
    let (ax, ay) = (ax.clip(range), ay.clip(range));
    let mut s = Search::new();
    for p in probes([&ax, &ay], range, MERGE_FACTOR * tol) {
        if let (Some(cx), Some(cy)) = (class_at(&ax, &p, 0), class_at(&ay, &p, 1)) {
            s.observe(cx, cy, || label(p.at));
        }
    }
    s
}

pub(crate) fn d_family_set(family: &DFamily, x: &StepCashFlow, tol: f64) -> Result<IntervalSet> {
    let set = acceptance_set(family, x, None, tol)?;
    Ok(IntervalSet {
        intervals: set.intervals.iter().map(|i| (i.lo, i.hi, i.isolated)).collect(),
        certain_up_to: if set.undetermined { set.lambda_max } else { f64::INFINITY },
    })
}

fn search_d_family(family: &DFamily, range: (f64, f64), x: &StepCashFlow, y: &StepCashFlow, tol: f64) -> Result<Search> {
    let (ax, ay) = (d_family_set(family, x, tol)?, d_family_set(family, y, tol)?);
    Ok(compare_interval_sets(&ax, &ay, range, tol, &|l| family.label(l)))
}

/// `{γ : x(0) + γ(F(x) - x(0)) >= 0}` before clipping to the range.
pub(crate) fn reduction_set(alpha: &DiscountFunction, x: &StepCashFlow) -> Result<IntervalSet> {
    let x0 = x.initial();
    let (f, _) = npv_and_scale(alpha, x)?;
    let d = f - x0;
    let intervals = if d > 0.0 {
        vec![(-x0 / d, f64::INFINITY, false)]
    } else if d < 0.0 {
        vec![(f64::NEG_INFINITY, -x0 / d, false)]
    } else if x0 >= 0.0 {
        vec![(f64::NEG_INFINITY, f64::INFINITY, false)]
    } else {
        Vec::new()
    };
    Ok(IntervalSet {
        intervals,
        certain_up_to: f64::INFINITY,
    })
}

fn search_reduction(
    alpha: &DiscountFunction,
    range: (f64, f64),
    x: &StepCashFlow,
    y: &StepCashFlow,
    tol: f64,
) -> Result<Search> {
    let (ax, ay) = (reduction_set(alpha, x)?, reduction_set(alpha, y)?);
    Ok(compare_interval_sets(&ax, &ay, range, tol, &|g| format!("H[{g}]({alpha})")))
}

/// A member of a parameterized slice of the scenario set.
pub(crate) type Slot<'a> = Arc<dyn Fn(f64) -> Result<DiscountFunction> + Send + Sync + 'a>;

fn constant<'a>(d: DiscountFunction) -> Slot<'a> {
    Arc::new(move |_| Ok(d.clone()))
}

/// `{lo}` and every transaction time of either project in `(lo, hi]`: the
/// left ends of the intervals on which `τ -> G_τ` is constant.
pub(crate) fn tau_candidates((lo, hi): (f64, f64), x: &StepCashFlow, y: &StepCashFlow) -> Vec<f64> {
    let mut c = vec![lo];
    c.extend(x.times().chain(y.times()).filter(|t| *t > lo && *t <= hi));
    c.sort_by(f64::total_cmp);
    c.dedup();
    c
}

/// Root of `γ -> H_γ(p)` for both projects; the midpoint separates their
/// acceptance intervals when both exist.
fn gamma_midpoint(alpha: &DiscountFunction, range: (f64, f64), x: &StepCashFlow, y: &StepCashFlow) -> Result<f64> {
    let root = |p: &StepCashFlow| -> Result<Option<f64>> {
        let x0 = p.initial();
        let d = npv_and_scale(alpha, p)?.0 - x0;
        Ok((d != 0.0).then(|| -x0 / d).filter(|r| (range.0..=range.1).contains(r)))
    };
    Ok(match (root(x)?, root(y)?) {
        (Some(a), Some(b)) => 0.5 * (a + b),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => range.0,
    })
}

/// Expands a product (or a single kind) into a base parameter grid and a
/// list of slots, each mapping the base parameter to a member.
fn plan<'a>(
    components: &'a [ScenarioSet],
    x: &'a StepCashFlow,
    y: &'a StepCashFlow,
    tol: f64,
) -> Result<(Vec<f64>, Vec<Slot<'a>>)> {
    let (base, transforms) = components.split_first().expect("validated product");
    let (grid, mut slots): (Vec<f64>, Vec<Slot<'a>>) = match base {
        ScenarioSet::Finite { members } => (
            vec![0.0],
            members.iter().map(|m| constant(m.discount.clone())).collect(),
        ),
        ScenarioSet::DFamilyRange { family, lambda } => {
            let cap = if lambda.1.is_finite() {
                lambda.1
            } else {
                let lx = acceptance_set(family, x, None, tol)?.lambda_max;
                let ly = acceptance_set(family, y, None, tol)?.lambda_max;
                (2.0 * lx.max(ly)).max(lambda.0 + 1.0)
            };
            let slot: Slot<'a> = Arc::new(move |q| family.member(q));
            (hybrid_mesh(lambda.0, cap, BASE_POINTS), vec![slot])
        }
        ScenarioSet::Intensity {
            alpha: Some(alpha),
            lambda,
        } => {
            let slot: Slot<'a> = Arc::new(move |q| DiscountFunction::intensity(alpha.clone(), q));
            (hybrid_mesh(lambda.0, lambda.1, BASE_POINTS), vec![slot])
        }
        ScenarioSet::Truncation { alpha: Some(a), .. } | ScenarioSet::Reduction { alpha: Some(a), .. } => {
            (vec![0.0], vec![constant(a.clone())])
        }
        _ => unreachable!("validated product base"),
    };
    let own_transform = matches!(
        base,
        ScenarioSet::Truncation { .. } | ScenarioSet::Reduction { .. }
    );
    let chain = own_transform.then_some(base).into_iter().chain(transforms.iter());
    for t in chain {
        slots = apply_transform(t, slots, x, y)?;
    }
    Ok((grid, slots))
}

fn apply_transform<'a>(
    t: &'a ScenarioSet,
    slots: Vec<Slot<'a>>,
    x: &'a StepCashFlow,
    y: &'a StepCashFlow,
) -> Result<Vec<Slot<'a>>> {
    let mut out: Vec<Slot<'a>> = Vec::new();
    match t {
        ScenarioSet::Truncation {
            tau,
            include_untruncated,
            ..
        } => {
            let cands = tau_candidates(*tau, x, y);
            for s in slots {
                for &c in &cands {
                    let s = s.clone();
                    out.push(Arc::new(move |q| truncate_discount(s(q)?, c)));
                }
                if *include_untruncated {
                    out.push(s);
                }
            }
        }
        ScenarioSet::Reduction { gamma, .. } => {
            let range = *gamma;
            for s in slots {
                for g in [range.0, range.1] {
                    let s = s.clone();
                    out.push(Arc::new(move |q| DiscountFunction::chi_mix(s(q)?, g)));
                }
                out.push(Arc::new(move |q| {
                    let d = s(q)?;
                    let g = gamma_midpoint(&d, range, x, y)?;
                    DiscountFunction::chi_mix(d, g)
                }));
            }
        }
        ScenarioSet::Intensity { lambda, .. } => {
            let mus = hybrid_mesh(lambda.0, lambda.1, TRANSFORM_POINTS);
            for s in slots {
                for &mu in &mus {
                    let s = s.clone();
                    out.push(Arc::new(move |q| DiscountFunction::intensity(s(q)?, mu)));
                }
            }
        }
        _ => unreachable!("validated product transform"),
    }
    Ok(out)
}

/// Scans each slot along the base grid, bisects every acceptance flip of
/// either project to `RESOLUTION`, and collects witnesses at all points.
fn run_slots(grid: &[f64], slots: &[Slot<'_>], x: &StepCashFlow, y: &StepCashFlow, tol: f64) -> Result<Search> {
    let per_slot = slots
        .par_iter()
        .map(|slot| {
            let eval = |q: f64| -> Result<(Class, Class, bool, bool)> {
                let d = slot(q)?;
                let (vx, sx) = npv_and_scale(&d, x)?;
                let (vy, sy) = npv_and_scale(&d, y)?;
                Ok((class_of(vx, sx, tol), class_of(vy, sy, tol), vx >= 0.0, vy >= 0.0))
            };
            let base = grid.iter().map(|&q| eval(q)).collect::<Result<Vec<_>>>()?;
            let mut points: Vec<(f64, (Class, Class, bool, bool))> =
                grid.iter().copied().zip(base.iter().copied()).collect();
            for i in 1..grid.len() {
                let (a, b) = (grid[i - 1], grid[i]);
                let res = RESOLUTION * b.abs().max(1.0);
                for (k, p) in [x, y].into_iter().enumerate() {
                    let side = |e: &(Class, Class, bool, bool)| if k == 0 { e.2 } else { e.3 };
                    if side(&base[i - 1]) != side(&base[i]) {
                        let accepted = |q: f64| {
                            slot(q)
                                .and_then(|d| npv_and_scale(&d, p))
                                .map(|(v, _)| v >= 0.0)
                                .unwrap_or(false)
                        };
                        let (u, v) = bisect_flip(accepted, a, b, res);
                        for q in [u, v] {
                            points.push((q, eval(q)?));
                        }
                    }
                }
            }
            let mut s = Search::new();
            for (q, (cx, cy, _, _)) in points {
                s.observe(cx, cy, || slot(q).map(|d| d.to_string()).unwrap_or_default());
            }
            Ok(s)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_slot.into_iter().fold(Search::new(), Search::merge))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::NpvFunctional;

    fn flow(pairs: &[(f64, f64)]) -> StepCashFlow {
        StepCashFlow::new(pairs.iter().copied()).unwrap()
    }

    const TOL: f64 = 1e-9;

    fn e_family() -> ScenarioSet {
        ScenarioSet::DFamilyRange {
            family: DFamily::ExponentialFamily,
            lambda: (0.0, f64::INFINITY),
        }
    }

    #[test]
    fn triple_is_strictly_ordered() {
        let x = flow(&[(0.0, 1.0), (1.0, -2.0), (2.0, 1.1)]);
        let y = flow(&[(0.0, -1.0), (1.0, 2.0), (2.0, -0.7)]);
        let z = flow(&[(0.0, -1.0), (1.0, 2.7), (2.0, -1.8)]);
        let s = e_family();
        assert_eq!(compare(&s, &x, &y, TOL).unwrap().relation, Relation::GreaterStrict);
        assert_eq!(compare(&s, &y, &z, TOL).unwrap().relation, Relation::GreaterStrict);
        assert_eq!(compare(&s, &x, &z, TOL).unwrap().relation, Relation::GreaterStrict);
        assert_eq!(compare(&s, &z, &x, TOL).unwrap().relation, Relation::LessStrict);
        assert_eq!(compare(&s, &y, &y, TOL).unwrap().relation, Relation::Equivalent);
    }

    #[test]
    fn finite_scan_and_reduction_refinement() {
        let x = flow(&[(0.0, -1.0), (1.0, 3.0)]);
        let y = flow(&[(0.0, -1.0), (1.0, 2.0)]);
        let fin = ScenarioSet::finite(vec![NpvFunctional::undiscounted(), NpvFunctional::impatient()]).unwrap();
        assert_eq!(compare(&fin, &x, &y, TOL).unwrap().relation, Relation::Equivalent);
        let red = ScenarioSet::Reduction {
            alpha: Some(DiscountFunction::Unit),
            gamma: (0.0, 1.0),
        };
        let r = compare(&red, &x, &y, TOL).unwrap();
        assert_eq!(r.relation, Relation::GreaterStrict);
        assert!(r.accepts_x_only.is_some() && r.accepts_y_only.is_none());
    }

    #[test]
    fn truncation_family_is_exact() {
        let x = flow(&[(0.0, -1.0), (1.0, 0.6), (2.0, 0.6)]);
        let y = flow(&[(0.0, -1.0), (3.0, 1.5)]);
        let pp = ScenarioSet::Truncation {
            alpha: Some(DiscountFunction::Unit),
            tau: (0.0, f64::INFINITY),
            include_untruncated: true,
        };
        // x pays back at 2, y at 3
        assert_eq!(compare(&pp, &x, &y, TOL).unwrap().relation, Relation::GreaterStrict);
        let late = ScenarioSet::Truncation {
            alpha: Some(DiscountFunction::Unit),
            tau: (5.0, f64::INFINITY),
            include_untruncated: true,
        };
        // from τ = 5 on only the totals 0.2 and 0.5 matter, both nonnegative
        assert_eq!(compare(&late, &x, &y, TOL).unwrap().relation, Relation::Equivalent);
    }

    #[test]
    fn incomparable_pairs_carry_both_witnesses() {
        let x = flow(&[(0.0, -1.0), (1.0, 2.0), (2.0, -0.7)]);
        let neg = -&x;
        let r = compare(&e_family(), &x, &neg, TOL).unwrap();
        assert_eq!(r.relation, Relation::Incomparable);
        assert!(r.accepts_x_only.is_some() && r.accepts_y_only.is_some());
    }

    #[test]
    fn product_of_rates_and_truncations() {
        let base = ScenarioSet::DFamilyRange {
            family: DFamily::ExponentialFamily,
            lambda: (0.02f64.ln_1p(), 0.04f64.ln_1p()),
        };
        let tr = ScenarioSet::Truncation {
            alpha: None,
            tau: (5.0, f64::INFINITY),
            include_untruncated: true,
        };
        let s = ScenarioSet::Product {
            components: vec![base, tr],
        };
        let fast = flow(&[(0.0, -1.0), (2.0, 1.2)]);
        let slow = flow(&[(0.0, -1.0), (8.0, 1.2)]);
        // fast recovers before every horizon; slow is rejected for τ < 8
        assert_eq!(compare(&s, &fast, &slow, TOL).unwrap().relation, Relation::GreaterStrict);
        assert_eq!(compare(&s, &slow, &slow.scale(2.0).unwrap(), TOL).unwrap().relation, Relation::Equivalent);
    }

    #[test]
    fn intensity_sampling_finds_the_crossing() {
        let s = ScenarioSet::Intensity {
            alpha: Some(DiscountFunction::exponential(0.1).unwrap()),
            lambda: (0.5, 4.0),
        };
        // accepted iff 1.3·e^{-0.1·4/λ} >= 1, i.e. λ >= 0.4/ln 1.3 ≈ 1.525
        let x = flow(&[(0.0, -1.0), (4.0, 1.3)]);
        let y = flow(&[(0.0, -1.0), (4.0, 1.2)]);
        assert_eq!(compare(&s, &x, &y, TOL).unwrap().relation, Relation::GreaterStrict);
    }

    #[test]
    fn union_requires_every_part() {
        let x = flow(&[(0.0, -1.0), (1.0, 3.0)]);
        let y = flow(&[(0.0, -1.0), (1.0, 2.0)]);
        let red = ScenarioSet::Reduction {
            alpha: Some(DiscountFunction::Unit),
            gamma: (0.0, 1.0),
        };
        let u = ScenarioSet::Union {
            parts: vec![red, e_family()],
        };
        assert_eq!(compare(&u, &x, &y, TOL).unwrap().relation, Relation::GreaterStrict);
    }
}
