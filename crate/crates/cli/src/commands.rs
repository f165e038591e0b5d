//! One report per subcommand, as JSON values.

use profit_kernel::indices::{self, default_grid};
use profit_kernel::irr::{self, DFamily};
use profit_kernel::ordering::{self, compare, convex_hull_detail, sign_compare};
use profit_kernel::payback;
use profit_kernel::{DiscountFunction, Error, NpvFunctional, StepCashFlow, Verdict};
use serde_json::Value;

use crate::input::{parse_cashflow, parse_discount, parse_family, parse_grid, parse_scenario};
use crate::render::{ext, object, opt, to_value};
use crate::{CliError, Command};

pub fn execute(cmd: &Command, tol: f64) -> Result<Value, CliError> {
    match cmd {
        Command::Npv { flow, alpha } => {
            let x = parse_cashflow(&flow.input)?;
            let f = NpvFunctional::new(parse_discount(&alpha.alpha)?)?;
            Ok(npv_report(&f, &x)?)
        }
        Command::Irr { flow, family, extended } => {
            let x = parse_cashflow(&flow.input)?;
            Ok(irr_report(&parse_family(&family.family)?, &x, *extended, tol)?)
        }
        Command::Pp { flow, extended } => {
            let x = parse_cashflow(&flow.input)?;
            let mut r = object([("pp", opt(payback::dpp(&DiscountFunction::Unit, &x)?))]);
            if *extended {
                r["reciprocal_extension"] = ext(payback::rdpp_natural_extension(&DiscountFunction::Unit, &x)?);
            }
            Ok(r)
        }
        Command::Dpp {
            flow,
            alpha,
            refined,
            star,
            classify,
            extended,
        } => {
            let x = parse_cashflow(&flow.input)?;
            let a = parse_discount(&alpha.alpha)?;
            let mut r = object([("dpp", opt(payback::dpp(&a, &x)?))]);
            if *refined {
                r["refined"] = to_value(&payback::refined_dpp(&a, &x, tol)?);
            }
            if *star {
                r["dpp_star"] = opt(payback::dpp_star(&a, &x)?);
            }
            if *classify {
                r["domain_class"] = to_value(&payback::classify_dpp_domain(&a, &x)?);
            }
            if *extended {
                r["reciprocal_extension"] = ext(payback::rdpp_natural_extension(&a, &x)?);
            }
            Ok(r)
        }
        Command::Pi { flow, alpha, extended } => {
            let x = parse_cashflow(&flow.input)?;
            let f = NpvFunctional::new(parse_discount(&alpha.alpha)?)?;
            let mut r = object([("pi", opt(indices::pi(&f, &x)?))]);
            if *extended {
                r["undiscounted_extension"] = ext(indices::undiscounted_pi_extension(&x)?);
            }
            Ok(r)
        }
        Command::Ri {
            flow,
            alpha,
            beta,
            extended,
            grid,
        } => {
            let x = parse_cashflow(&flow.input)?;
            let f = NpvFunctional::new(parse_discount(&alpha.alpha)?)?;
            let g = NpvFunctional::new(parse_discount(beta)?)?;
            let mut r = object([("ri", opt(indices::ri(&f, &g, &x)?))]);
            if *extended {
                let grid = match grid {
                    Some(s) => parse_grid(s)?,
                    None => default_grid(&x, &f.discount, &g.discount),
                };
                r["bounds"] = to_value(&indices::tilde_bounds(&f, &g, &grid)?);
                r["natural_extension"] = ext(indices::ri_natural_extension(&f, &g, &x, Some(&grid))?);
            }
            Ok(r)
        }
        Command::Classify { flow } => Ok(to_value(&parse_cashflow(&flow.input)?.classify())),
        Command::Compare {
            scenario,
            inputs,
            sign,
            hull,
        } => {
            let s = parse_scenario(scenario)?;
            let x = parse_cashflow(&inputs[0])?;
            let y = parse_cashflow(&inputs[1])?;
            let res = if *sign {
                sign_compare(&s, &x, &y, tol)?
            } else {
                compare(&s, &x, &y, tol)?
            };
            let mut r = to_value(&res);
            if *hull {
                r["hull"] = to_value(&convex_hull_detail(&s, &x, &y, tol)?);
            }
            Ok(r)
        }
        Command::Usury { flow } => {
            let x = parse_cashflow(&flow.input)?;
            let rate = DiscountFunction::compound_annual(ordering::USURY_RATE)?;
            Ok(object([
                ("classification", to_value(&ordering::usury_classify(&x))),
                ("npv", ext(NpvFunctional::new(rate)?.eval(&x)?)),
            ]))
        }
        Command::Report { flow, alpha, family } => {
            let x = parse_cashflow(&flow.input)?;
            let a = parse_discount(&alpha.alpha)?;
            Ok(full_report(&x, &a, &parse_family(&family.family)?, tol)?)
        }
    }
}

fn npv_report(f: &NpvFunctional, x: &StepCashFlow) -> Result<Value, Error> {
    Ok(object([
        ("functional", Value::from(f.label.clone())),
        ("npv", ext(f.eval(x)?)),
        ("accepted", Value::from(ordering::accepts(f, x)?)),
    ]))
}

fn verdict(v: Verdict) -> Value {
    match v {
        Verdict::True => Value::from(true),
        Verdict::False => Value::from(false),
        Verdict::Undetermined => Value::from("undetermined"),
    }
}

fn irr_report(family: &DFamily, x: &StepCashFlow, extended: bool, tol: f64) -> Result<Value, Error> {
    let set = irr::acceptance_set(family, x, None, tol)?;
    let natural = match irr::in_natural_domain(family, x, None, tol) {
        Ok(b) => Value::from(b),
        Err(Error::Undetermined(_)) => Value::from("undetermined"),
        Err(e) => return Err(e),
    };
    let irr = match irr::possesses_irr(family, x, None, tol) {
        Ok(v) => opt(v),
        Err(Error::Undetermined(_)) => Value::from("undetermined"),
        Err(e) => return Err(e),
    };
    let mut r = object([
        ("family", to_value(family)),
        ("irr", irr),
        ("roots", Value::Array(set.roots().into_iter().map(ext).collect())),
        ("acceptance_set", to_value(&set.intervals)),
        ("natural_domain", natural),
        ("regular", verdict(irr::is_regular(family, x, None, tol)?)),
    ]);
    if extended {
        r["natural_extension"] = ext(irr::natural_extension_rr(family, x, None, tol)?);
    }
    Ok(r)
}

/// A sub-report, or the error it raised.
fn attempt(r: Result<Value, Error>) -> Value {
    r.unwrap_or_else(|e| {
        object([
            ("error", Value::from(e.to_string())),
            ("outside_domain", Value::from(e.is_domain())),
        ])
    })
}

fn full_report(x: &StepCashFlow, alpha: &DiscountFunction, family: &DFamily, tol: f64) -> Result<Value, Error> {
    let f = NpvFunctional::new(alpha.clone())?;
    let chi = NpvFunctional::impatient();
    let payback_block = || -> Result<Value, Error> {
        let star = if x.is_discrete() {
            opt(payback::dpp_star(alpha, x)?)
        } else {
            Value::Null
        };
        Ok(object([
            ("dpp", opt(payback::dpp(alpha, x)?)),
            ("refined", to_value(&payback::refined_dpp(alpha, x, tol)?)),
            ("dpp_star", star),
            ("domain_class", to_value(&payback::classify_dpp_domain(alpha, x)?)),
            ("reciprocal_extension", attempt(payback::rdpp_natural_extension(alpha, x).map(ext))),
        ]))
    };
    let ri_block = || -> Result<Value, Error> {
        Ok(object([
            ("ri", opt(indices::ri(&f, &chi, x)?)),
            ("natural_extension", attempt(indices::ri_natural_extension(&f, &chi, x, None).map(ext))),
        ]))
    };
    Ok(object([
        ("transactions", to_value(x.transactions())),
        ("sets", to_value(&x.classify())),
        ("npv", attempt(npv_report(&f, x))),
        ("irr", attempt(irr_report(family, x, false, tol))),
        ("irr_natural_extension", attempt(irr::natural_extension_rr(family, x, None, tol).map(ext))),
        ("pp", attempt(payback::dpp(&DiscountFunction::Unit, x).map(opt))),
        ("payback", attempt(payback_block())),
        ("pi", attempt(indices::pi(&f, x).map(opt))),
        ("pi_undiscounted_extension", attempt(indices::undiscounted_pi_extension(x).map(ext))),
        ("ratio_index", if alpha.is_chi() { Value::Null } else { attempt(ri_block()) }),
        ("usury", to_value(&ordering::usury_classify(x))),
    ]))
}
