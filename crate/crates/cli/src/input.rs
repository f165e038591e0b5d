//! Reading projects, discount functions, families and scenario sets.

use std::fs;
use std::path::Path;

use profit_kernel::irr::DFamily;
use profit_kernel::{DiscountFunction, ScenarioSet, StepCashFlow};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Deserialize)]
struct CsvRow {
    t: f64,
    amount: f64,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn looks_like_json(text: &str) -> bool {
    matches!(text.trim_start().chars().next(), Some('{' | '['))
}

/// Reads a project from JSON (`{"transactions":[{"t":..,"amount":..}]}`)
/// or CSV with header `t,amount`. The format follows the extension and
/// falls back to the first character of the file.
pub fn parse_cashflow(path: &Path) -> Result<StepCashFlow, CliError> {
    let text = read(path)?;
    let json = match path.extension().and_then(|e| e.to_str()) {
        Some("json") => true,
        Some("csv") => false,
        _ => looks_like_json(&text),
    };
    let ctx = |msg: String| CliError::Input(format!("{}: {msg}", path.display()));
    if json {
        parse_cashflow_json(&text).map_err(ctx)
    } else {
        parse_cashflow_csv(&text).map_err(ctx)
    }
}

pub fn parse_cashflow_json(text: &str) -> Result<StepCashFlow, String> {
    serde_json::from_str(text).map_err(|e| e.to_string())
}

pub fn parse_cashflow_csv(text: &str) -> Result<StepCashFlow, String> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let mut pairs = Vec::new();
    for row in reader.deserialize::<CsvRow>() {
        let row = row.map_err(|e| match e.position() {
            Some(p) => format!("line {}: {e}", p.line()),
            None => e.to_string(),
        })?;
        pairs.push((row.t, row.amount));
    }
    StepCashFlow::new(pairs).map_err(|e| e.to_string())
}

pub fn emit_json(x: &StepCashFlow) -> String {
    serde_json::to_string(x).expect("flows serialize")
}

pub fn emit_csv(x: &StepCashFlow) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["t", "amount"]).expect("in-memory write");
    for tx in x.transactions() {
        w.write_record([tx.time.to_string(), tx.amount.to_string()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

/// Inline JSON, a path to a JSON file, or `None` when neither applies.
fn json_arg<T: DeserializeOwned>(what: &str, arg: &str) -> Result<Option<T>, CliError> {
    let text = if looks_like_json(arg) {
        arg.to_owned()
    } else if Path::new(arg).is_file() {
        read(Path::new(arg))?
    } else {
        return Ok(None);
    };
    serde_json::from_str(&text)
        .map(Some)
        .map_err(|e| CliError::Input(format!("{what} `{arg}`: {e}")))
}

fn number(what: &str, s: &str) -> Result<f64, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Input(format!("{what}: `{s}` is not a number")))
}

/// `unit`, `chi`, `exp:<rate>`, `compound:<rate>`, inline JSON or a JSON file.
pub fn parse_discount(arg: &str) -> Result<DiscountFunction, CliError> {
    if let Some(d) = json_arg::<DiscountFunction>("discount function", arg)? {
        d.validate()?;
        return Ok(d);
    }
    let d = match arg.split_once(':') {
        None if arg == "unit" => DiscountFunction::Unit,
        None if arg == "chi" => DiscountFunction::Impatient,
        Some(("exp", r)) => DiscountFunction::exponential(number("rate", r)?)?,
        Some(("compound", r)) => DiscountFunction::compound_annual(number("rate", r)?)?,
        _ => return Err(CliError::Input(format!("unrecognized discount function `{arg}`"))),
    };
    Ok(d)
}

/// `exponential`, `constant_sensitivity:<β>`, `hyperbolic:<β>`, the JSON
/// kind names, inline JSON or a JSON file.
pub fn parse_family(arg: &str) -> Result<DFamily, CliError> {
    if let Some(f) = json_arg::<DFamily>("family", arg)? {
        f.validate()?;
        return Ok(f);
    }
    let f = match arg.split_once(':') {
        None if arg == "exponential" || arg == "exponential_family" => DFamily::ExponentialFamily,
        Some(("constant_sensitivity" | "constant_sensitivity_family", b)) => DFamily::ConstantSensitivityFamily {
            beta: number("beta", b)?,
        },
        Some(("hyperbolic" | "hyperbolic_family", b)) => DFamily::GeneralizedHyperbolicFamily {
            beta: number("beta", b)?,
        },
        _ => return Err(CliError::Input(format!("unrecognized family `{arg}`"))),
    };
    f.validate()?;
    Ok(f)
}

pub fn parse_scenario(path: &Path) -> Result<ScenarioSet, CliError> {
    let text = read(path)?;
    let s: ScenarioSet =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(s.normalized()?)
}

/// Comma-separated times.
pub fn parse_grid(arg: &str) -> Result<Vec<f64>, CliError> {
    arg.split(',').map(|s| number("grid", s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_and_csv_agree() {
        let a = parse_cashflow_json(r#"{"transactions":[{"t":0,"amount":-1},{"t":1,"amount":2}]}"#).unwrap();
        let b = parse_cashflow_csv("t,amount\n0,-1\n1,2\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn duplicates_merge_away() {
        let x = parse_cashflow_csv("t,amount\n0,-1\n1,1\n1,-1\n").unwrap();
        assert_eq!(x.len(), 1);
    }

    #[test]
    fn errors_carry_context() {
        let e = parse_cashflow_csv("t,amount\n0,-1\n1,abc\n").unwrap_err();
        assert!(e.contains("line 3"), "{e}");
        assert!(parse_cashflow_csv("t,amount\n-1,2\n").is_err());
        let e = parse_cashflow_json(r#"{"transactions":[{"t":0}]}"#).unwrap_err();
        assert!(e.contains("column"), "{e}");
    }

    #[test]
    fn round_trips() {
        let x = StepCashFlow::new([(0.0, -1.25), (0.5, 3.0), (7.0, -0.1)]).unwrap();
        assert_eq!(parse_cashflow_json(&emit_json(&x)).unwrap(), x);
        assert_eq!(parse_cashflow_csv(&emit_csv(&x)).unwrap(), x);
    }

    #[test]
    fn short_forms() {
        assert_eq!(parse_discount("unit").unwrap(), DiscountFunction::Unit);
        assert_eq!(
            parse_discount("compound:0.6").unwrap(),
            DiscountFunction::compound_annual(0.6).unwrap()
        );
        assert!(parse_discount("exp:-1").is_err());
        assert_eq!(
            parse_family(r#"{"kind":"exponential_family"}"#).unwrap(),
            DFamily::ExponentialFamily
        );
        assert!(parse_family("hyperbolic:0").is_err());
        assert_eq!(parse_grid("0, 1,2.5").unwrap(), vec![0.0, 1.0, 2.5]);
    }
}
