//! JSON values for reports and their table rendering.

use serde::Serialize;
use serde_json::{Map, Value};

/// An extended real: finite values as numbers, infinities as `"+inf"` and
/// `"-inf"`.
pub fn ext(v: f64) -> Value {
    if v == f64::INFINITY {
        Value::from("+inf")
    } else if v == f64::NEG_INFINITY {
        Value::from("-inf")
    } else {
        serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
    }
}

pub fn opt(v: Option<f64>) -> Value {
    v.map_or(Value::Null, ext)
}

pub fn to_value<T: Serialize + ?Sized>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

/// Keys are sorted, so equal reports print identically.
pub fn json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("report values serialize")
}

pub fn table(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, val) in rows {
        out.push_str(&format!("{k:<width$}  {val}\n"));
    }
    out
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_owned()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, val) in m {
                flatten(&key(k), val, rows);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
            for (i, val) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), val, rows);
            }
        }
        Value::String(s) => rows.push((prefix.to_owned(), s.clone())),
        Value::Null => rows.push((prefix.to_owned(), "-".into())),
        other => rows.push((prefix.to_owned(), other.to_string())),
    }
}

pub fn object<const N: usize>(pairs: [(&str, Value); N]) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k.to_owned(), v);
    }
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extended_reals() {
        assert_eq!(ext(f64::INFINITY), Value::from("+inf"));
        assert_eq!(ext(f64::NEG_INFINITY), Value::from("-inf"));
        assert_eq!(ext(0.5), Value::from(0.5));
        assert_eq!(opt(None), Value::Null);
    }

    #[test]
    fn tables_flatten_nested_objects() {
        let v = object([("a", Value::from(1)), ("b", object([("c", Value::from("x"))]))]);
        assert_eq!(table(&v), "a    1\nb.c  x\n");
    }
}
