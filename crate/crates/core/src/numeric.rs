//! Small numerical helpers shared across the kernel.

use serde::{Deserialize, Serialize};

/// Neumaier-compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.carry += (self.sum - t) + value;
        } else {
            self.carry += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Compensated sum of an iterator of terms, in iteration order.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    terms.into_iter().collect::<CompensatedSum>().value()
}

/// Three-valued answer for relations decided numerically on finite grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    True,
    False,
    Undetermined,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    /// Kleene conjunction.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::True, Verdict::True) => Verdict::True,
            _ => Verdict::Undetermined,
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }

    pub fn is_false(self) -> bool {
        self == Verdict::False
    }
}

/// Bisect a predicate that holds at `lo` and fails at `hi` (or the reverse)
/// until the bracket is narrower than `tol` or cannot be split further.
/// Returns the final bracket `(a, b)` with `pred(a) == pred(lo)`.
pub fn bisect_flip<P: Fn(f64) -> bool>(pred: P, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    let side = pred(lo);
    let (mut a, mut b) = (lo, hi);
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        let mid = a + 0.5 * (b - a);
        if mid <= a.min(b) || mid >= a.max(b) {
            break;
        }
        if pred(mid) == side {
            a = mid;
        } else {
            b = mid;
        }
    }
    (a, b)
}

/// Sorted, deduplicated union of a linear and a geometric mesh on `[lo, hi]`.
/// Both endpoints are always present.
pub fn hybrid_mesh(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    if !(hi > lo) {
        return vec![lo];
    }
    let half = (points / 2).max(2);
    let mut mesh = Vec::with_capacity(2 * half + 2);
    for i in 0..=half {
        mesh.push(lo + (hi - lo) * i as f64 / half as f64);
    }
    let span = hi - lo;
    let first = span * 1e-6;
    let ratio = (span / first).powf(1.0 / half as f64);
    let mut step = first;
    for _ in 0..half {
        mesh.push(lo + step);
        step *= ratio;
    }
    mesh.push(hi);
    mesh.retain(|v| *v >= lo && *v <= hi);
    mesh.sort_by(f64::total_cmp);
    mesh.dedup();
    mesh
}

/// Serde adapter for extended reals: finite values as numbers, infinities
/// as the strings `"+inf"` / `"-inf"`.
pub mod ext_real {
    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};
    use std::fmt;

    pub fn serialize<S: Serializer>(value: &f64, s: S) -> Result<S::Ok, S::Error> {
        if *value == f64::INFINITY {
            s.serialize_str("+inf")
        } else if *value == f64::NEG_INFINITY {
            s.serialize_str("-inf")
        } else {
            s.serialize_f64(*value)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        struct ExtVisitor;
        impl<'de> Visitor<'de> for ExtVisitor {
            type Value = f64;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number, \"+inf\", \"-inf\", or null (= +inf)")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<f64, E> {
                Ok(v)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<f64, E> {
                Ok(v as f64)
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<f64, E> {
                Ok(v as f64)
            }
            fn visit_unit<E: de::Error>(self) -> Result<f64, E> {
                Ok(f64::INFINITY)
            }
            fn visit_none<E: de::Error>(self) -> Result<f64, E> {
                Ok(f64::INFINITY)
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<f64, E> {
                match v {
                    "+inf" | "inf" => Ok(f64::INFINITY),
                    "-inf" => Ok(f64::NEG_INFINITY),
                    other => other.parse().map_err(E::custom),
                }
            }
        }
        d.deserialize_any(ExtVisitor)
    }
}

/// Same as [`ext_real`] for `[lo, hi]` pairs, where a `null` upper bound
/// means `+inf`.
pub mod ext_range {
    use serde::ser::SerializeTuple;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Ext(#[serde(with = "super::ext_real")] f64);

    pub fn serialize<S: Serializer>(value: &(f64, f64), s: S) -> Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&Ext(value.0))?;
        t.serialize_element(&Ext(value.1))?;
        t.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(f64, f64), D::Error> {
        let raw: (Ext, Option<Ext>) = Deserialize::deserialize(d)?;
        Ok((raw.0 .0, raw.1.map_or(f64::INFINITY, |e| e.0)))
    }
}
