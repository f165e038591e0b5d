//! Profitability kernel: NPV functionals over step cash flows, orderings
//! induced by scenario sets of discount functions, and the IRR, payback and
//! index metrics together with their natural extensions.

pub mod cashflow;
pub mod discount;
pub mod error;
pub mod indices;
pub mod irr;
pub mod numeric;
pub mod ordering;
pub mod payback;
pub mod valuation;

pub use cashflow::{QMembership, StepCashFlow, Transaction};
pub use discount::DiscountFunction;
pub use error::{Error, Result};
pub use numeric::Verdict;
pub use irr::{AcceptanceSet, DFamily};
pub use valuation::NpvFunctional;
pub use payback::{DppDomainClass, RefinedDpp};
pub use ordering::{ComparabilityResult, Relation, ScenarioSet};
