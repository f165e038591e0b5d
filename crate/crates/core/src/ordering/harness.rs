//! Checks of the structural consequences every scenario-set ordering must
//! satisfy, run over a sample of projects.

use serde::{Deserialize, Serialize};

use super::compare::{compare, ComparabilityResult, Relation};
use super::scenario::ScenarioSet;
use crate::cashflow::StepCashFlow;
use crate::error::{Error, Result};
use crate::valuation::NpvFunctional;

/// Examples kept per property.
const MAX_EXAMPLES: usize = 5;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PropertyStats {
    pub checked: usize,
    pub violations: usize,
    pub undetermined: usize,
    pub examples: Vec<String>,
}

impl PropertyStats {
    fn pass(&mut self) {
        self.checked += 1;
    }

    fn fail(&mut self, what: impl FnOnce() -> String) {
        self.checked += 1;
        self.violations += 1;
        if self.examples.len() < MAX_EXAMPLES {
            self.examples.push(what());
        }
    }

    fn unsure(&mut self) {
        self.checked += 1;
        self.undetermined += 1;
    }

    /// Tallies a required `x ⪰ y`.
    fn expect_ge(&mut self, r: &ComparabilityResult, what: impl FnOnce() -> String) {
        match r.relation {
            _ if r.is_ge() => self.pass(),
            Relation::Undetermined | Relation::LessEq => self.unsure(),
            _ => self.fail(what),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct HarnessReport {
    /// `λx ~ x` for `λ ∈ {0.5, 3}`.
    pub scale_invariance: PropertyStats,
    /// `x ⪰ y ⇒ x ⪰ x + y ⪰ y`.
    pub int_sandwich: PropertyStats,
    /// `x >= y` pointwise and `y ⪰ z` give `x ⪰ z`.
    pub monotonicity: PropertyStats,
    /// `1₀ ≻ x` and `1₀ ≻ -x` make `x` and `-x` incomparable.
    pub opposite_incomparability: PropertyStats,
    /// `2·1₀ ~ 1₀` although `2·1₀ > 1₀`.
    pub scaled_unit_witness: PropertyStats,
    /// A single functional never produces incomparable pairs.
    pub singleton_totality: PropertyStats,
    /// Truncation families: `x ⪰ y ⇒ x_{<=τ} ⪰ y_{<=τ}`.
    pub truncation_stability: PropertyStats,
    /// Reduction families over `[0, γ_hi]`: `x ⪰ y ⇒ x_γ ⪰ y_γ`.
    pub reduction_stability: PropertyStats,
}

impl HarnessReport {
    pub fn properties(&self) -> [(&'static str, &PropertyStats); 8] {
        [
            ("scale_invariance", &self.scale_invariance),
            ("int_sandwich", &self.int_sandwich),
            ("monotonicity", &self.monotonicity),
            ("opposite_incomparability", &self.opposite_incomparability),
            ("scaled_unit_witness", &self.scaled_unit_witness),
            ("singleton_totality", &self.singleton_totality),
            ("truncation_stability", &self.truncation_stability),
            ("reduction_stability", &self.reduction_stability),
        ]
    }

    pub fn violations(&self) -> usize {
        self.properties().iter().map(|(_, p)| p.violations).sum()
    }
}

fn show(x: &StepCashFlow) -> String {
    let parts: Vec<String> = x
        .transactions()
        .iter()
        .map(|t| format!("({}, {})", t.time, t.amount))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn axiom_harness(s: &ScenarioSet, sample: &[StepCashFlow], tol: f64) -> Result<HarnessReport> {
    s.validate()?;
    if sample.is_empty() {
        return Err(Error::Precondition("harness sample is empty".into()));
    }
    let mut rep = HarnessReport::default();
    let cmp = |a: &StepCashFlow, b: &StepCashFlow| compare(s, a, b, tol);
    let pairs: Vec<(&StepCashFlow, &StepCashFlow)> = sample.iter().zip(sample.iter().skip(1)).collect();

    for x in sample {
        for f in [0.5, 3.0] {
            let r = cmp(&x.scale(f)?, x)?;
            match r.relation {
                Relation::Equivalent => rep.scale_invariance.pass(),
                Relation::Undetermined | Relation::GreaterEq | Relation::LessEq => rep.scale_invariance.unsure(),
                _ => rep.scale_invariance.fail(|| format!("{f}·{} vs {}: {:?}", show(x), show(x), r.relation)),
            }
        }
    }

    let comparisons = pairs
        .iter()
        .map(|(x, y)| cmp(x, y))
        .collect::<Result<Vec<_>>>()?;

    for (&(x, y), r) in pairs.iter().zip(&comparisons) {
        let sum = x + y;
        for (hi, lo, holds) in [(x, y, r.is_ge()), (y, x, r.is_le())] {
            if !holds {
                continue;
            }
            let what = || format!("{} ⪰ {} but the sum breaks the sandwich", show(hi), show(lo));
            rep.int_sandwich.expect_ge(&cmp(hi, &sum)?, what);
            rep.int_sandwich.expect_ge(&cmp(&sum, lo)?, what);
        }
    }

    for (&(y, z), r) in pairs.iter().zip(&comparisons) {
        let Some(t1) = y.times().next() else { continue };
        let x = y + &StepCashFlow::unit_at(t1, 0.5)?;
        debug_assert!(x.dominates(y));
        rep.monotonicity.expect_ge(&cmp(&x, y)?, || format!("{} ⪰ {}", show(&x), show(y)));
        if r.is_ge() {
            rep.monotonicity
                .expect_ge(&cmp(&x, z)?, || format!("{} ⪰ {} via {}", show(&x), show(z), show(y)));
        }
    }

    let one = StepCashFlow::unit_at(0.0, 1.0)?;
    for x in sample {
        let neg = -x;
        let above = |p: &StepCashFlow| cmp(&one, p).map(|r| r.relation == Relation::GreaterStrict);
        if above(x)? && above(&neg)? {
            let r = cmp(x, &neg)?;
            match r.relation {
                Relation::Incomparable => rep.opposite_incomparability.pass(),
                Relation::Undetermined => rep.opposite_incomparability.unsure(),
                rel => rep
                    .opposite_incomparability
                    .fail(|| format!("{} vs its negation: {rel:?}", show(x))),
            }
        }
    }

    let two = StepCashFlow::unit_at(0.0, 2.0)?;
    let r = cmp(&two, &one)?;
    if r.relation == Relation::Equivalent && two.dominates(&one) && !one.dominates(&two) {
        rep.scaled_unit_witness.pass();
    } else {
        rep.scaled_unit_witness.fail(|| format!("2·1₀ vs 1₀: {:?}", r.relation));
    }

    let single = ScenarioSet::Finite {
        members: vec![representative(s)?],
    };
    for &(x, y) in &pairs {
        let r = compare(&single, x, y, tol)?;
        match r.relation {
            Relation::Incomparable => rep
                .singleton_totality
                .fail(|| format!("{} vs {} under one functional", show(x), show(y))),
            Relation::Undetermined => rep.singleton_totality.unsure(),
            _ => rep.singleton_totality.pass(),
        }
    }

    if let ScenarioSet::Truncation { tau, .. } = s {
        for (&(x, y), r) in pairs.iter().zip(&comparisons) {
            let mut taus = vec![tau.0];
            taus.extend(x.times().chain(y.times()).filter(|t| *t > tau.0 && *t <= tau.1));
            if tau.0 + 1.0 <= tau.1 {
                taus.push(tau.0 + 1.0);
            }
            for (hi, lo, holds) in [(x, y, r.is_ge()), (y, x, r.is_le())] {
                if !holds {
                    continue;
                }
                for &t in &taus {
                    let res = cmp(&hi.truncate(t)?, &lo.truncate(t)?)?;
                    rep.truncation_stability
                        .expect_ge(&res, || format!("{} ⪰ {} lost at τ = {t}", show(hi), show(lo)));
                }
            }
        }
    }

    if let ScenarioSet::Reduction { gamma, .. } = s {
        if gamma.0 == 0.0 {
            for (&(x, y), r) in pairs.iter().zip(&comparisons) {
                for (hi, lo, holds) in [(x, y, r.is_ge()), (y, x, r.is_le())] {
                    if !holds {
                        continue;
                    }
                    for g in [0.25, 0.5, 0.75] {
                        let res = cmp(&hi.reduce(g)?, &lo.reduce(g)?)?;
                        rep.reduction_stability
                            .expect_ge(&res, || format!("{} ⪰ {} lost at γ = {g}", show(hi), show(lo)));
                    }
                }
            }
        }
    }

    Ok(rep)
}

fn representative(s: &ScenarioSet) -> Result<NpvFunctional> {
    s.representative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discount::DiscountFunction;
    use crate::irr::DFamily;

    fn flow(pairs: &[(f64, f64)]) -> StepCashFlow {
        StepCashFlow::new(pairs.iter().copied()).unwrap()
    }

    fn sample() -> Vec<StepCashFlow> {
        vec![
            flow(&[(0.0, 1.0), (1.0, -2.0), (2.0, 1.1)]),
            flow(&[(0.0, -1.0), (1.0, 2.0), (2.0, -0.7)]),
            flow(&[(0.0, -1.0), (1.0, 2.7), (2.0, -1.8)]),
            flow(&[(0.0, -1.0), (1.0, 0.6), (3.0, 0.6)]),
            flow(&[(0.0, 2.0), (2.0, -3.0)]),
        ]
    }

    #[test]
    fn e_family_passes() {
        let s = ScenarioSet::DFamilyRange {
            family: DFamily::ExponentialFamily,
            lambda: (0.0, f64::INFINITY),
        };
        let rep = axiom_harness(&s, &sample(), 1e-9).unwrap();
        assert_eq!(rep.violations(), 0, "{rep:#?}");
        assert_eq!(rep.scaled_unit_witness.checked, 1);
        assert!(rep.int_sandwich.checked > 0);
    }

    #[test]
    fn truncation_and_reduction_pass() {
        let tr = ScenarioSet::Truncation {
            alpha: Some(DiscountFunction::Unit),
            tau: (1.0, f64::INFINITY),
            include_untruncated: true,
        };
        let rep = axiom_harness(&tr, &sample(), 1e-9).unwrap();
        assert_eq!(rep.violations(), 0, "{rep:#?}");
        let red = ScenarioSet::Reduction {
            alpha: Some(DiscountFunction::exponential(0.1).unwrap()),
            gamma: (0.0, 1.0),
        };
        let rep = axiom_harness(&red, &sample(), 1e-9).unwrap();
        assert_eq!(rep.violations(), 0, "{rep:#?}");
    }
}
