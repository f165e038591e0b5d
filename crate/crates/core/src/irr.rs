//! D-families, the NPV profile `g_x(λ)`, acceptance sets and the IRR.
//!
//! Every supported family has the form `α_λ(t) = exp(-λ φ(t))` with `φ`
//! increasing and `φ(0) = 0`, so `g_x(λ) = Σ a_k exp(-λ φ(t_k))` is a
//! generalized Dirichlet polynomial in `λ`: it has at most as many roots as
//! the amounts have sign changes, `g(0)` is the total and `g(+inf) = x(0)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cashflow::StepCashFlow;
use crate::discount::DiscountFunction;
use crate::error::{Error, Result};
use crate::numeric::{self, bisect_flip, hybrid_mesh, CompensatedSum, Verdict};

/// Default bisection tolerance in the rate parameter.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Scan points per transaction.
const SCAN_DENSITY: usize = 64;

/// Doubling cap for the rate horizon.
const LAMBDA_CAP: f64 = (1u64 << 60) as f64;

/// Relative width below which an accepted interval on which `g` is
/// numerically zero is reported as a single point.
const DEGENERATE_WIDTH: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DFamily {
    /// `e^{-λt}`.
    ExponentialFamily,
    /// `base(t)^λ`.
    PowerFamily { base: DiscountFunction },
    /// `e^{-λ t^β}`.
    ConstantSensitivityFamily { beta: f64 },
    /// `(1 + βt)^{-λ/β}`.
    #[serde(rename = "hyperbolic_family")]
    GeneralizedHyperbolicFamily { beta: f64 },
}

impl DFamily {
    pub fn validate(&self) -> Result<()> {
        match self {
            DFamily::ExponentialFamily => Ok(()),
            DFamily::PowerFamily { base } => {
                base.validate()?;
                if !base.is_strictly_decreasing() || !base.is_positive() {
                    return Err(Error::InvalidDiscount(format!(
                        "family base {base} must be positive and strictly decreasing"
                    )));
                }
                Ok(())
            }
            DFamily::ConstantSensitivityFamily { beta } | DFamily::GeneralizedHyperbolicFamily { beta } => {
                if !(*beta > 0.0) || !beta.is_finite() {
                    return Err(Error::param("beta", *beta, "family shape must be positive and finite"));
                }
                Ok(())
            }
        }
    }

    /// `φ(t) = -ln α_1(t)`.
    pub fn phi(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) {
            return Err(Error::InvalidTime(t));
        }
        Ok(match self {
            DFamily::ExponentialFamily => t,
            DFamily::PowerFamily { base } => -base.eval(t)?.ln(),
            DFamily::ConstantSensitivityFamily { beta } => {
                if t == 0.0 {
                    0.0
                } else {
                    t.powf(*beta)
                }
            }
            DFamily::GeneralizedHyperbolicFamily { beta } => (beta * t).ln_1p() / beta,
        })
    }

    /// The member `α_λ`.
    pub fn member(&self, lambda: f64) -> Result<DiscountFunction> {
        match self {
            DFamily::ExponentialFamily => DiscountFunction::exponential(lambda),
            DFamily::PowerFamily { base } => DiscountFunction::power_of_base(base.clone(), lambda),
            DFamily::ConstantSensitivityFamily { beta } => DiscountFunction::constant_sensitivity(lambda, *beta),
            DFamily::GeneralizedHyperbolicFamily { beta } => {
                DiscountFunction::generalized_hyperbolic(lambda, *beta)
            }
        }
    }

    pub fn label(&self, lambda: f64) -> String {
        match self.member(lambda) {
            Ok(d) => d.to_string(),
            Err(_) => format!("member({lambda})"),
        }
    }
}

/// `(amount, φ(time))` pairs of a project under a family, ready for
/// repeated evaluation of `g`.
#[derive(Debug, Clone)]
pub struct Profile {
    terms: Vec<(f64, f64)>,
    initial: f64,
    total: f64,
}

impl Profile {
    pub fn new(family: &DFamily, x: &StepCashFlow) -> Result<Self> {
        family.validate()?;
        let terms = x
            .transactions()
            .iter()
            .map(|tx| Ok((tx.amount, family.phi(tx.time)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            terms,
            initial: x.initial(),
            total: x.terminal(),
        })
    }

    /// `g(λ)`; `g(+inf) = x(0)`.
    pub fn g(&self, lambda: f64) -> f64 {
        if lambda == f64::INFINITY {
            return self.initial;
        }
        if lambda == 0.0 {
            return self.total;
        }
        self.terms
            .iter()
            .map(|(a, p)| a * (-lambda * p).exp())
            .collect::<CompensatedSum>()
            .value()
    }

    /// `g'(λ)`.
    pub fn dg(&self, lambda: f64) -> f64 {
        self.terms
            .iter()
            .map(|(a, p)| -p * a * (-lambda * p).exp())
            .collect::<CompensatedSum>()
            .value()
    }

    /// `Σ |a_k| e^{-λ φ_k}`, the magnitude against which `g` counts as zero.
    pub fn scale(&self, lambda: f64) -> f64 {
        self.terms.iter().map(|(a, p)| a.abs() * (-lambda * p).exp()).sum()
    }

    /// Whether the term with the smallest `φ` outweighs all others at
    /// `lambda`, which fixes the sign of `g` on `[lambda, inf)`.
    fn tail_certified(&self, lambda: f64) -> bool {
        let Some(&(lead, p0)) = self.terms.first() else {
            return true;
        };
        let rest: f64 = self.terms[1..]
            .iter()
            .map(|(a, p)| a.abs() * (-lambda * (p - p0)).exp())
            .sum();
        rest < lead.abs()
    }
}

/// `g_x(λ)` for the family member `λ`.
pub fn g_eval(family: &DFamily, x: &StepCashFlow, lambda: f64) -> Result<f64> {
    if !(lambda >= 0.0) {
        return Err(Error::param("lambda", lambda, "rate must be nonnegative"));
    }
    Ok(Profile::new(family, x)?.g(lambda))
}

/// `g_x'(λ)`.
pub fn g_derivative(family: &DFamily, x: &StepCashFlow, lambda: f64) -> Result<f64> {
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(Error::param("lambda", lambda, "rate must be finite and nonnegative"));
    }
    Ok(Profile::new(family, x)?.dg(lambda))
}

/// A closed interval of accepted rates; `hi` may be `+inf`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateInterval {
    pub lo: f64,
    #[serde(with = "numeric::ext_real")]
    pub hi: f64,
    pub isolated: bool,
}

impl RateInterval {
    pub fn contains(&self, lambda: f64) -> bool {
        self.lo <= lambda && lambda <= self.hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TangencyKind {
    /// Local maximum of `g` within tolerance of zero.
    ZeroMaximum,
    /// Local minimum of `g` within tolerance of zero.
    ZeroMinimum,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tangency {
    pub lambda: f64,
    pub value: f64,
    pub kind: TangencyKind,
}

/// `{λ >= 0 : g_x(λ) >= 0}` as sorted disjoint closed intervals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AcceptanceSet {
    pub intervals: Vec<RateInterval>,
    pub tol: f64,
    pub lambda_max: f64,
    pub tangencies: Vec<Tangency>,
    /// Set when the sign of `g` past `lambda_max` could not be certified.
    pub undetermined: bool,
}

impl AcceptanceSet {
    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, lambda: f64) -> bool {
        self.intervals.iter().any(|i| i.contains(lambda))
    }

    /// `sup` of the set, `-inf` when empty.
    pub fn supremum(&self) -> f64 {
        self.intervals.last().map_or(f64::NEG_INFINITY, |i| i.hi)
    }

    /// Finite interval endpoints other than `0`: the located roots.
    pub fn roots(&self) -> Vec<f64> {
        let mut r = Vec::new();
        for i in &self.intervals {
            if i.lo > 0.0 {
                r.push(i.lo);
            }
            if i.hi.is_finite() && i.hi != i.lo {
                r.push(i.hi);
            }
            if i.lo == 0.0 && i.hi == 0.0 {
                r.push(0.0);
            }
        }
        r
    }

    fn require_determined(&self) -> Result<()> {
        if self.undetermined {
            return Err(Error::Undetermined(
                "sign of the profile beyond the scan horizon is not certified".into(),
            ));
        }
        Ok(())
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::param("tol", tol, "tolerance must be positive and finite"));
    }
    Ok(())
}

/// Smallest doubling of `start` at which `g` is within `tol` of `x(0)` and
/// its sign is certified for every larger rate.
fn find_lambda_max(p: &Profile, start: f64, tol: f64) -> (f64, bool) {
    let norm = p.terms.iter().map(|(a, _)| a.abs()).sum::<f64>().max(1.0);
    let mut lambda = start;
    loop {
        let close = (p.g(lambda) - p.initial).abs() < tol * norm;
        if (close || p.initial == 0.0) && p.tail_certified(lambda) {
            return (lambda, true);
        }
        if lambda >= LAMBDA_CAP {
            return (lambda, false);
        }
        lambda *= 2.0;
    }
}

/// Sign-scans `g` on `[0, λ_max]`, refines every flip by bisection and
/// inspects each cell in which `g'` changes sign for tangencies.
///
/// `lambda_max` seeds the doubling search for the horizon (default 1).
pub fn acceptance_set(
    family: &DFamily,
    x: &StepCashFlow,
    lambda_max: Option<f64>,
    tol: f64,
) -> Result<AcceptanceSet> {
    check_tol(tol)?;
    let p = Profile::new(family, x)?;
    acceptance_set_of(&p, x.len(), lambda_max, tol)
}

pub(crate) fn acceptance_set_of(
    p: &Profile,
    n: usize,
    lambda_max: Option<f64>,
    tol: f64,
) -> Result<AcceptanceSet> {
    let start = match lambda_max {
        Some(l) if !(l > 0.0) || !l.is_finite() => {
            return Err(Error::param("lambda_max", l, "rate horizon must be positive and finite"))
        }
        Some(l) => l,
        None => 1.0,
    };
    if p.terms.is_empty() {
        return Ok(AcceptanceSet {
            intervals: vec![RateInterval {
                lo: 0.0,
                hi: f64::INFINITY,
                isolated: false,
            }],
            tol,
            lambda_max: start,
            tangencies: Vec::new(),
            undetermined: false,
        });
    }
    let (lmax, certified) = find_lambda_max(p, start, tol);
    let mesh = hybrid_mesh(0.0, lmax, SCAN_DENSITY * n.max(1));
    let values: Vec<(f64, f64)> = mesh
        .par_iter()
        .with_min_len(256)
        .map(|&l| (p.g(l), p.dg(l)))
        .collect();

    let accepted = |l: f64| p.g(l) >= 0.0;
    let mut samples: Vec<(f64, bool)> = Vec::with_capacity(mesh.len() + 8);
    let mut tangencies = Vec::new();
    samples.push((mesh[0], values[0].0 >= 0.0));
    for i in 1..mesh.len() {
        let (a, b) = (mesh[i - 1], mesh[i]);
        let (ga, da) = values[i - 1];
        let (gb, db) = values[i];
        let (sa, sb) = (ga >= 0.0, gb >= 0.0);
        if sa != sb {
            push_crossing(&mut samples, &accepted, a, b, tol);
        } else if da.signum() != db.signum() && da != 0.0 && db != 0.0 {
            // a critical point of g lies inside the cell
            let (c0, c1) = bisect_flip(|l| p.dg(l) > 0.0, a, b, tol.min((b - a) * 1e-3));
            let c = 0.5 * (c0 + c1);
            let gc = p.g(c);
            let maximum = da > 0.0;
            if (gc >= 0.0) != sa {
                push_crossing(&mut samples, &accepted, a, c, tol);
                samples.push((c, gc >= 0.0));
                push_crossing(&mut samples, &accepted, c, b, tol);
            } else if gc.abs() <= tol * p.scale(c) {
                if maximum {
                    samples.push((c, true));
                    tangencies.push(Tangency {
                        lambda: c,
                        value: gc,
                        kind: TangencyKind::ZeroMaximum,
                    });
                } else {
                    tangencies.push(Tangency {
                        lambda: c,
                        value: gc,
                        kind: TangencyKind::ZeroMinimum,
                    });
                }
            }
        }
        samples.push((b, sb));
    }

    let mut intervals: Vec<RateInterval> = Vec::new();
    let mut run: Option<(f64, f64)> = None;
    for &(l, ok) in &samples {
        match (ok, run) {
            (true, None) => run = Some((l, l)),
            (true, Some((lo, _))) => run = Some((lo, l)),
            (false, Some((lo, hi))) => {
                intervals.push(RateInterval {
                    lo,
                    hi,
                    isolated: lo == hi,
                });
                run = None;
            }
            (false, None) => {}
        }
    }
    if let Some((lo, _)) = run {
        intervals.push(RateInterval {
            lo,
            hi: f64::INFINITY,
            isolated: false,
        });
    }
    // a double root shows up as a band of width ~sqrt(eps) on which g
    // rounds to zero; such bands are single points
    for iv in intervals.iter_mut() {
        let mid = 0.5 * (iv.lo + iv.hi);
        let narrow = iv.hi.is_finite() && iv.hi - iv.lo <= DEGENERATE_WIDTH * iv.hi.max(1.0);
        if !iv.isolated && narrow && p.g(mid).abs() <= tol * p.scale(mid) {
            let at = if iv.lo == 0.0 { 0.0 } else { mid };
            *iv = RateInterval {
                lo: at,
                hi: at,
                isolated: true,
            };
            if !tangencies.iter().any(|t: &Tangency| (t.lambda - at).abs() <= DEGENERATE_WIDTH) {
                tangencies.push(Tangency {
                    lambda: at,
                    value: p.g(at),
                    kind: TangencyKind::ZeroMaximum,
                });
            }
        }
    }
    Ok(AcceptanceSet {
        intervals,
        tol,
        lambda_max: lmax,
        tangencies,
        undetermined: !certified,
    })
}

/// Bisects a sign flip in `(a, b)` and records both sides of the final
/// bracket, so runs of accepted samples end exactly at the located root.
fn push_crossing(samples: &mut Vec<(f64, bool)>, accepted: &impl Fn(f64) -> bool, a: f64, b: f64, tol: f64) {
    let sa = accepted(a);
    let (u, v) = bisect_flip(accepted, a, b, tol);
    if u != a {
        samples.push((u, sa));
    }
    if v != b {
        samples.push((v, !sa));
    }
}

/// The IRR: the rate `r` with `sgn g(λ) = sgn(r - λ)` for every `λ >= 0`,
/// when it exists.
pub fn possesses_irr(
    family: &DFamily,
    x: &StepCashFlow,
    lambda_max: Option<f64>,
    tol: f64,
) -> Result<Option<f64>> {
    let set = acceptance_set(family, x, lambda_max, tol)?;
    set.require_determined()?;
    let touches = set
        .tangencies
        .iter()
        .any(|t| t.kind == TangencyKind::ZeroMinimum);
    Ok(match set.intervals.as_slice() {
        [only] if only.lo == 0.0 && only.hi.is_finite() && !touches => {
            let g0 = g_eval(family, x, 0.0)?;
            if only.hi == 0.0 {
                (g0 == 0.0).then_some(0.0)
            } else {
                (g0 > 0.0).then_some(only.hi)
            }
        }
        _ => None,
    })
}

/// Closed-form rate for a project `-a·1_t + b·1_τ` with `0 <= t < τ` and
/// `0 < a <= b`: `ln(b/a) / (φ(τ) - φ(t))`.
pub fn rr_closed_form(family: &DFamily, x: &StepCashFlow) -> Result<f64> {
    family.validate()?;
    match x.transactions() {
        [out, inflow] if out.amount < 0.0 && inflow.amount >= -out.amount => {
            let a = -out.amount;
            let spread = family.phi(inflow.time)? - family.phi(out.time)?;
            Ok((inflow.amount / a).ln() / spread)
        }
        _ => Err(Error::Precondition(
            "closed-form rate needs an outflow -a followed by an inflow b >= a".into(),
        )),
    }
}

/// Whether the acceptance set is empty or a single interval starting at 0,
/// the sign pattern under which the IRR extends to a total ordering.
pub fn in_natural_domain(
    family: &DFamily,
    x: &StepCashFlow,
    lambda_max: Option<f64>,
    tol: f64,
) -> Result<bool> {
    let set = acceptance_set(family, x, lambda_max, tol)?;
    set.require_determined()?;
    Ok(natural_domain_of(&set))
}

fn natural_domain_of(set: &AcceptanceSet) -> bool {
    match set.intervals.as_slice() {
        [] => true,
        [only] => only.lo == 0.0,
        _ => false,
    }
}

/// `sup {λ >= 0 : g_x(λ) >= 0}` with `sup ∅ = -inf`, on the natural domain.
pub fn natural_extension_rr(
    family: &DFamily,
    x: &StepCashFlow,
    lambda_max: Option<f64>,
    tol: f64,
) -> Result<f64> {
    let set = acceptance_set(family, x, lambda_max, tol)?;
    set.require_determined()?;
    if !natural_domain_of(&set) {
        return Err(Error::Domain(format!(
            "acceptance set {} is not an initial interval",
            describe(&set)
        )));
    }
    Ok(set.supremum())
}

fn describe(set: &AcceptanceSet) -> String {
    let parts: Vec<String> = set
        .intervals
        .iter()
        .map(|i| format!("[{}, {}]", i.lo, i.hi))
        .collect();
    if parts.is_empty() {
        "∅".into()
    } else {
        parts.join(" ∪ ")
    }
}

/// Regularity of `x` with respect to the family.
///
/// `False` on an isolated accepted rate or a zero local maximum of `g`.
/// `True` when `x(0) != 0`, `x(+inf) != 0` and `g'` is clear of zero at
/// every located root. `Undetermined` otherwise.
pub fn is_regular(family: &DFamily, x: &StepCashFlow, lambda_max: Option<f64>, tol: f64) -> Result<Verdict> {
    let set = acceptance_set(family, x, lambda_max, tol)?;
    let p = Profile::new(family, x)?;
    if set.intervals.iter().any(|i| i.isolated)
        || set
            .tangencies
            .iter()
            .any(|t| t.kind == TangencyKind::ZeroMaximum)
    {
        return Ok(Verdict::False);
    }
    if set.undetermined || !set.tangencies.is_empty() {
        return Ok(Verdict::Undetermined);
    }
    let scale = p.scale(0.0);
    if p.initial.abs() <= tol * scale || p.total.abs() <= tol * scale {
        return Ok(Verdict::Undetermined);
    }
    let simple = set
        .roots()
        .iter()
        .all(|&r| p.dg(r).abs() > tol * p.scale(r).max(1.0));
    Ok(if simple {
        Verdict::True
    } else {
        Verdict::Undetermined
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flow(pairs: &[(f64, f64)]) -> StepCashFlow {
        StepCashFlow::new(pairs.iter().copied()).unwrap()
    }

    const E: DFamily = DFamily::ExponentialFamily;

    fn x() -> StepCashFlow {
        flow(&[(0.0, 1.0), (1.0, -2.0), (2.0, 1.1)])
    }
    fn y() -> StepCashFlow {
        flow(&[(0.0, -1.0), (1.0, 2.0), (2.0, -0.7)])
    }
    fn z() -> StepCashFlow {
        flow(&[(0.0, -1.0), (1.0, 2.7), (2.0, -1.8)])
    }

    #[test]
    fn profile_limits() {
        assert!((g_eval(&E, &y(), 0.0).unwrap() - 0.3).abs() < 1e-15);
        assert_eq!(g_eval(&E, &y(), f64::INFINITY).unwrap(), -1.0);
        for l in [0.0, 0.3, 1.0, 5.0] {
            assert!(g_eval(&E, &x(), l).unwrap() > 0.0);
        }
    }

    #[test]
    fn acceptance_sets_of_the_triple() {
        let root_y = -((2.0 - 1.2f64.sqrt()) / 1.4).ln();
        let sy = acceptance_set(&E, &y(), None, DEFAULT_TOL).unwrap();
        assert_eq!(sy.intervals.len(), 1);
        assert_eq!(sy.intervals[0].lo, 0.0);
        assert!((sy.intervals[0].hi - root_y).abs() < 1e-8);

        let sz = acceptance_set(&E, &z(), None, DEFAULT_TOL).unwrap();
        assert_eq!(sz.intervals.len(), 1);
        assert!((sz.intervals[0].lo + (5.0f64 / 6.0).ln()).abs() < 1e-8);
        assert!((sz.intervals[0].hi + (2.0f64 / 3.0).ln()).abs() < 1e-8);

        let sx = acceptance_set(&E, &x(), None, DEFAULT_TOL).unwrap();
        assert_eq!(
            sx.intervals,
            vec![RateInterval {
                lo: 0.0,
                hi: f64::INFINITY,
                isolated: false
            }]
        );
    }

    #[test]
    fn irr_possession() {
        assert!(possesses_irr(&E, &z(), None, DEFAULT_TOL).unwrap().is_none());
        let r = possesses_irr(&E, &flow(&[(0.0, -1.0), (1.0, 0.2f64.exp())]), None, DEFAULT_TOL)
            .unwrap()
            .unwrap();
        assert!((r - 0.2).abs() < 1e-8);
        assert_eq!(
            possesses_irr(&E, &flow(&[(0.0, -1.0), (1.0, 1.0)]), None, DEFAULT_TOL).unwrap(),
            Some(0.0)
        );
    }

    #[test]
    fn closed_form_rates() {
        let a = rr_closed_form(&E, &flow(&[(0.0, -1.0), (2.0, 0.2f64.exp())])).unwrap();
        assert!((a - 0.1).abs() < 1e-15);
        let b = rr_closed_form(&E, &flow(&[(1.0, -2.0), (3.0, 2.0 * 0.6f64.exp())])).unwrap();
        assert!((b - 0.3).abs() < 1e-15);
        assert!(rr_closed_form(&E, &y()).is_err());
        assert!(rr_closed_form(&E, &flow(&[(0.0, -1.0), (1.0, 0.5)])).is_err());
    }

    #[test]
    fn natural_domain_and_extension() {
        assert!(!in_natural_domain(&E, &z(), None, DEFAULT_TOL).unwrap());
        assert!(in_natural_domain(&E, &y(), None, DEFAULT_TOL).unwrap());
        assert!(natural_extension_rr(&E, &z(), None, DEFAULT_TOL).unwrap_err().is_domain());
        assert_eq!(natural_extension_rr(&E, &x(), None, DEFAULT_TOL).unwrap(), f64::INFINITY);
        assert_eq!(
            natural_extension_rr(&E, &flow(&[(0.0, -1.0), (1.0, 0.5)]), None, DEFAULT_TOL).unwrap(),
            f64::NEG_INFINITY
        );
    }

    #[test]
    fn regularity() {
        assert_eq!(is_regular(&E, &y(), None, DEFAULT_TOL).unwrap(), Verdict::True);
        let square = flow(&[(0.0, -1.0), (1.0, 2.0), (2.0, -1.0)]);
        let set = acceptance_set(&E, &square, None, DEFAULT_TOL).unwrap();
        assert_eq!(
            set.intervals,
            vec![RateInterval {
                lo: 0.0,
                hi: 0.0,
                isolated: true
            }]
        );
        assert_eq!(is_regular(&E, &square, None, DEFAULT_TOL).unwrap(), Verdict::False);
        assert_ne!(
            is_regular(&E, &flow(&[(0.0, -1.0), (1.0, 1.0)]), None, DEFAULT_TOL).unwrap(),
            Verdict::True
        );
    }

    #[test]
    fn interior_zero_maximum_is_an_isolated_point() {
        // g = -(u - 1/2)^2 with u = e^{-λ}
        let x = flow(&[(0.0, -0.25), (1.0, 1.0), (2.0, -1.0)]);
        let set = acceptance_set(&E, &x, None, DEFAULT_TOL).unwrap();
        assert_eq!(set.intervals.len(), 1);
        assert!(set.intervals[0].isolated);
        assert!((set.intervals[0].lo - 2f64.ln()).abs() < 1e-6);
        assert_eq!(is_regular(&E, &x, None, DEFAULT_TOL).unwrap(), Verdict::False);
    }

    #[test]
    fn other_families() {
        let h = DFamily::GeneralizedHyperbolicFamily { beta: 1.0 };
        // (1+t)^{-λ} at t = 1: -1 + 2·2^{-λ} = 0 at λ = 1
        let r = possesses_irr(&h, &flow(&[(0.0, -1.0), (1.0, 2.0)]), None, DEFAULT_TOL)
            .unwrap()
            .unwrap();
        assert!((r - 1.0).abs() < 1e-8);
        let pw = DFamily::PowerFamily {
            base: DiscountFunction::compound_annual(1.0).unwrap(),
        };
        let r = rr_closed_form(&pw, &flow(&[(0.0, -1.0), (1.0, 4.0)])).unwrap();
        assert!((r - 2.0).abs() < 1e-12);
        assert!(DFamily::PowerFamily { base: DiscountFunction::Unit }.validate().is_err());
        let json = r#"{"kind":"hyperbolic_family","beta":1.0}"#;
        assert_eq!(serde_json::from_str::<DFamily>(json).unwrap(), h);
    }
}
