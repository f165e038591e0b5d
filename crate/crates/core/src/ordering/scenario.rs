use serde::{Deserialize, Serialize};

use crate::discount::DiscountFunction;
use crate::error::{Error, Result};
use crate::irr::DFamily;
use crate::numeric::ext_range;
use crate::valuation::NpvFunctional;

/// A collection of NPV functionals; `x ⪰ y` iff every member accepting `y`
/// also accepts `x`.
///
/// Inside a `Product`, the first component supplies base discount
/// functions and each later component is a transform (`truncation`,
/// `reduction` or `intensity` without `alpha`) applied to every member.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScenarioSet {
    Finite {
        members: Vec<NpvFunctional>,
    },
    DFamilyRange {
        family: DFamily,
        #[serde(with = "ext_range")]
        lambda: (f64, f64),
    },
    /// `{G_τ^(α) : τ ∈ tau}`, plus `F^(α)` when `include_untruncated`.
    Truncation {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<DiscountFunction>,
        #[serde(with = "ext_range")]
        tau: (f64, f64),
        #[serde(default)]
        include_untruncated: bool,
    },
    /// `{H_γ^(α) : γ ∈ gamma}`.
    Reduction {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<DiscountFunction>,
        #[serde(with = "ext_range")]
        gamma: (f64, f64),
    },
    /// `{U_λ^(α) : λ ∈ lambda}`.
    Intensity {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<DiscountFunction>,
        #[serde(with = "ext_range")]
        lambda: (f64, f64),
    },
    Product {
        components: Vec<ScenarioSet>,
    },
    Union {
        parts: Vec<ScenarioSet>,
    },
}

fn check_range(name: &'static str, (lo, hi): (f64, f64), finite: bool) -> Result<()> {
    if !(lo >= 0.0) || !(lo <= hi) || lo.is_infinite() || (finite && hi.is_infinite()) {
        return Err(Error::param(name, lo, "range must satisfy 0 <= lo <= hi (and be finite where required)"));
    }
    Ok(())
}

impl ScenarioSet {
    /// A finite set, deduplicated by label (first occurrence kept).
    pub fn finite(members: Vec<NpvFunctional>) -> Result<Self> {
        let s = ScenarioSet::Finite { members };
        s.normalized()
    }

    /// Validates the set and deduplicates finite members by label.
    pub fn normalized(self) -> Result<Self> {
        self.validate()?;
        Ok(self.dedup())
    }

    fn dedup(self) -> Self {
        match self {
            ScenarioSet::Finite { members } => {
                let mut seen = std::collections::HashSet::new();
                let members = members.into_iter().filter(|m| seen.insert(m.label.clone())).collect();
                ScenarioSet::Finite { members }
            }
            ScenarioSet::Product { components } => ScenarioSet::Product {
                components: components.into_iter().map(Self::dedup).collect(),
            },
            ScenarioSet::Union { parts } => ScenarioSet::Union {
                parts: parts.into_iter().map(Self::dedup).collect(),
            },
            other => other,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_as(Role::Standalone)
    }

    fn validate_as(&self, role: Role) -> Result<()> {
        let alpha_ok = |alpha: &Option<DiscountFunction>| -> Result<()> {
            match (alpha, role) {
                (Some(a), Role::Standalone | Role::Base) => a.validate(),
                (None, Role::Transform) => Ok(()),
                (Some(_), Role::Transform) => Err(Error::Precondition(
                    "product transforms take their discount function from the base".into(),
                )),
                (None, _) => Err(Error::Precondition("scenario set needs `alpha`".into())),
            }
        };
        let not_transform = |kind: &str| -> Result<()> {
            if role == Role::Transform {
                return Err(Error::Precondition(format!("`{kind}` cannot transform a product base")));
            }
            Ok(())
        };
        match self {
            ScenarioSet::Finite { members } => {
                not_transform("finite")?;
                if members.is_empty() {
                    return Err(Error::Precondition("finite scenario set is empty".into()));
                }
                members.iter().try_for_each(|m| m.discount.validate())
            }
            ScenarioSet::DFamilyRange { family, lambda } => {
                not_transform("d_family_range")?;
                family.validate()?;
                check_range("lambda", *lambda, false)
            }
            ScenarioSet::Truncation { alpha, tau, .. } => {
                alpha_ok(alpha)?;
                check_range("tau", *tau, false)
            }
            ScenarioSet::Reduction { alpha, gamma } => {
                alpha_ok(alpha)?;
                check_range("gamma", *gamma, true)?;
                if let Some(a) = alpha {
                    if gamma.1 > 1.0 / a.right_limit_at_zero() {
                        return Err(Error::param("gamma", gamma.1, "must not exceed 1/alpha(0+)"));
                    }
                }
                Ok(())
            }
            ScenarioSet::Intensity { alpha, lambda } => {
                alpha_ok(alpha)?;
                check_range("lambda", *lambda, true)?;
                if !(lambda.0 > 0.0) {
                    return Err(Error::param("lambda", lambda.0, "intensity must be positive"));
                }
                Ok(())
            }
            ScenarioSet::Product { components } => {
                if role != Role::Standalone {
                    return Err(Error::Precondition("products cannot be nested".into()));
                }
                let (base, rest) = components
                    .split_first()
                    .ok_or_else(|| Error::Precondition("product has no components".into()))?;
                base.validate_as(Role::Base)?;
                rest.iter().try_for_each(|c| c.validate_as(Role::Transform))
            }
            ScenarioSet::Union { parts } => {
                if role != Role::Standalone {
                    return Err(Error::Precondition("unions cannot appear inside a product".into()));
                }
                if parts.is_empty() {
                    return Err(Error::Precondition("union has no parts".into()));
                }
                parts.iter().try_for_each(|p| p.validate())
            }
        }
    }

    /// One member of the set, used for the singleton (NPV criterion) check.
    pub fn representative(&self) -> Result<NpvFunctional> {
        match self {
            ScenarioSet::Finite { members } => Ok(members[0].clone()),
            ScenarioSet::DFamilyRange { family, lambda } => NpvFunctional::new(family.member(lambda.0)?),
            ScenarioSet::Truncation { alpha, tau, .. } => {
                let a = alpha.clone().unwrap_or(DiscountFunction::Unit);
                NpvFunctional::new(truncate_discount(a, tau.0)?)
            }
            ScenarioSet::Reduction { alpha, gamma } => {
                let a = alpha.clone().unwrap_or(DiscountFunction::Unit);
                NpvFunctional::new(DiscountFunction::chi_mix(a, gamma.1)?)
            }
            ScenarioSet::Intensity { alpha, lambda } => {
                let a = alpha.clone().unwrap_or(DiscountFunction::Unit);
                NpvFunctional::new(DiscountFunction::intensity(a, lambda.0)?)
            }
            ScenarioSet::Product { components } => components[0].representative(),
            ScenarioSet::Union { parts } => parts[0].representative(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    Standalone,
    Base,
    Transform,
}

/// `α·I[0, τ]`; at `τ = 0` this is the impatient discount.
pub(crate) fn truncate_discount(alpha: DiscountFunction, tau: f64) -> Result<DiscountFunction> {
    if tau == 0.0 {
        Ok(DiscountFunction::Impatient)
    } else {
        DiscountFunction::truncated(alpha, tau, true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_forms() {
        let s: ScenarioSet = serde_json::from_str(
            r#"{"kind":"truncation","alpha":{"kind":"unit"},"tau":[5,null],"include_untruncated":true}"#,
        )
        .unwrap();
        assert_eq!(
            s,
            ScenarioSet::Truncation {
                alpha: Some(DiscountFunction::Unit),
                tau: (5.0, f64::INFINITY),
                include_untruncated: true
            }
        );
        s.validate().unwrap();
        let d: ScenarioSet =
            serde_json::from_str(r#"{"kind":"d_family_range","family":{"kind":"exponential_family"},"lambda":[0,10]}"#)
                .unwrap();
        d.validate().unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.contains("\"+inf\""));
    }

    #[test]
    fn finite_sets_deduplicate_by_label() {
        let s = ScenarioSet::finite(vec![
            NpvFunctional::undiscounted(),
            NpvFunctional::impatient(),
            NpvFunctional::undiscounted(),
        ])
        .unwrap();
        let ScenarioSet::Finite { members } = s else { unreachable!() };
        assert_eq!(members.len(), 2);
    }

    #[test]
    fn product_roles() {
        let base = ScenarioSet::DFamilyRange {
            family: DFamily::ExponentialFamily,
            lambda: (0.0, 1.0),
        };
        let tr = ScenarioSet::Truncation {
            alpha: None,
            tau: (5.0, f64::INFINITY),
            include_untruncated: true,
        };
        ScenarioSet::Product {
            components: vec![base.clone(), tr.clone()],
        }
        .validate()
        .unwrap();
        assert!(ScenarioSet::Product {
            components: vec![tr.clone(), base.clone()]
        }
        .validate()
        .is_err());
        assert!(tr.validate().is_err());
        assert!(ScenarioSet::Reduction {
            alpha: Some(DiscountFunction::Unit),
            gamma: (0.0, 1.5)
        }
        .validate()
        .is_err());
    }
}
