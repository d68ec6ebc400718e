//! Machine-readable verification report rows, shared by the CLI campaigns
//! and any other harness. A row records one identity check: what was
//! computed, what it was compared against, and the outcome.

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

/// Row outcome. A row is `pass` iff its residual lies within the campaign
/// tolerance (or is exactly zero for rational checks).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Residual of a check: a real number for float campaigns, the literal
/// token "exact-zero" for rational identities that came out identically
/// zero, or absent for skipped rows.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Residual {
    ExactZero,
    Value(f64),
    Absent,
}

impl Serialize for Residual {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Residual::ExactZero => serializer.serialize_str("exact-zero"),
            Residual::Value(v) => serializer.serialize_f64(*v),
            Residual::Absent => serializer.serialize_none(),
        }
    }
}

impl<'de> Deserialize<'de> for Residual {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Residual;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a number, the string \"exact-zero\", or null")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Residual, E> {
                Ok(Residual::Value(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Residual, E> {
                Ok(Residual::Value(v as f64))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Residual, E> {
                Ok(Residual::Value(v as f64))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Residual, E> {
                if v == "exact-zero" {
                    Ok(Residual::ExactZero)
                } else {
                    Err(E::custom(format!("unexpected residual string {v:?}")))
                }
            }

            fn visit_none<E: de::Error>(self) -> Result<Residual, E> {
                Ok(Residual::Absent)
            }

            fn visit_unit<E: de::Error>(self) -> Result<Residual, E> {
                Ok(Residual::Absent)
            }
        }
        deserializer.deserialize_any(V)
    }
}

impl std::fmt::Display for Residual {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Residual::ExactZero => f.write_str("exact-zero"),
            Residual::Value(v) => write!(f, "{v}"),
            Residual::Absent => Ok(()),
        }
    }
}

/// One verified identity instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    /// Stable identifier of the identity being checked (see the README
    /// legend), e.g. "eq-1.24", "eq-1.17", "eq-5.1".
    pub identity_id: String,
    /// Canonical "key=value;key=value" echo of the inputs; skipped rows
    /// append ";violation=..." diagnostics.
    pub inputs: String,
    /// Computed value (exact rational string or decimal).
    pub computed: String,
    /// Reference value it was compared against.
    pub reference: String,
    pub residual: Residual,
    pub status: Status,
    pub runtime_ms: u64,
}

impl ReportRow {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn executed(&self) -> bool {
        self.status != Status::Skipped
    }
}
