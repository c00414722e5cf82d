//! The on-disk triple format: a JSON object with `dim_x`, `dim_y` and the
//! matrices `A` (`dim_y x dim_x`), `B` and `C` (`dim_x x dim_y`) as arrays of
//! rows of rational strings.

use std::fmt;
use std::sync::OnceLock;

use regex::Regex;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use spectral_core::ratmat::parse_rat;
use spectral_core::{Mat, Rat};
use spectral_core::intertwine::OperatorTriple;

use crate::error::CliError;

fn entry_pattern() -> &'static Regex {
    static PATTERN: OnceLock<Regex> = OnceLock::new();
    PATTERN.get_or_init(|| Regex::new(r"^-?[0-9]+(/[1-9][0-9]*)?$").expect("valid pattern"))
}

/// A matrix entry: an exact rational written `p` or `p/q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry(pub Rat);

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct EntryVisitor;

        impl Visitor<'_> for EntryVisitor {
            type Value = Entry;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string such as \"3\", \"-2\" or \"5/7\"")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Entry, E> {
                if !entry_pattern().is_match(v) {
                    return Err(E::custom(format!(
                        "invalid rational {v:?} (expected p or p/q with q > 0, no spaces or decimals)"
                    )));
                }
                parse_rat(v).map(Entry).map_err(E::custom)
            }
        }

        d.deserialize_str(EntryVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleDocument {
    pub dim_x: usize,
    pub dim_y: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<Entry>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<Entry>>,
    #[serde(rename = "C")]
    pub c: Vec<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    pub metadata: Metadata,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub template: Option<String>,
}

impl Metadata {
    pub fn is_empty(&self) -> bool {
        self.name.is_none() && self.seed.is_none() && self.template.is_none()
    }
}

fn to_rows(m: &Mat) -> Vec<Vec<Entry>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(Entry).collect())
        .collect()
}

fn to_mat(field: &str, rows: &[Vec<Entry>], want_rows: usize, want_cols: usize) -> Result<Mat, CliError> {
    let shape = |msg: String| CliError::Shape {
        field: field.to_string(),
        message: msg,
    };
    if rows.len() != want_rows {
        return Err(shape(format!("expected {want_rows} rows, found {}", rows.len())));
    }
    for (i, r) in rows.iter().enumerate() {
        if r.len() != want_cols {
            return Err(shape(format!(
                "row {i} has {} entries, expected {want_cols}",
                r.len()
            )));
        }
    }
    let data = rows.iter().flatten().map(|e| e.0.clone()).collect();
    Mat::new(want_rows, want_cols, data).map_err(|e| shape(e.to_string()))
}

impl TripleDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let doc: Self = serde_path_to_error::deserialize(de).map_err(|err| {
            let path = err.path().to_string();
            let inner = err.into_inner();
            CliError::Parse {
                path,
                line: inner.line(),
                column: inner.column(),
                message: strip_position(&inner.to_string()),
            }
        })?;
        doc.to_triple()?;
        Ok(doc)
    }

    pub fn from_triple(t: &OperatorTriple, metadata: Metadata) -> Self {
        Self {
            dim_x: t.dim_x(),
            dim_y: t.dim_y(),
            a: to_rows(t.a()),
            b: to_rows(t.b()),
            c: to_rows(t.c()),
            metadata,
        }
    }

    pub fn to_triple(&self) -> Result<OperatorTriple, CliError> {
        if self.dim_x == 0 || self.dim_y == 0 {
            return Err(CliError::Shape {
                field: "dim_x/dim_y".into(),
                message: "dimensions must be positive".into(),
            });
        }
        let a = to_mat("A", &self.a, self.dim_y, self.dim_x)?;
        let b = to_mat("B", &self.b, self.dim_x, self.dim_y)?;
        let c = to_mat("C", &self.c, self.dim_x, self.dim_y)?;
        OperatorTriple::new(a, b, c).map_err(CliError::Lab)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }
}

/// serde_json appends " at line L column C"; the position is reported
/// separately.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}
