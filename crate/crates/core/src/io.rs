//! Text formats: code configs (JSON), vector and message files.
//!
//! A vector file holds a single line of comma-separated field elements in
//! the element grammar of [`Field::parse`]; a message file is the same with
//! length `k`, ordered by increasing nongap. Blank lines after the data line
//! are ignored.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{Code, CodeError, Point};
use crate::curvering::{Curve, CurveError};
use crate::gf::{Elem, Field, GfError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Code parameters as stored in a config file, tagged by `"type"`.
///
/// ```json
/// {"type": "hermitian", "q": 3, "u": 16}
/// {"type": "mk", "p": 2, "m": 2, "a": 2, "b": 3, "d": "1",
///  "coeffs": [[0, 1, "1"]], "u": 4}
/// ```
///
/// The `mk` curve is `y^a + d x^b + sum c_ij x^i y^j = 0` over GF(p^m);
/// `modulus` (monic, low degree first) overrides the built-in default.
/// Both variants take an optional explicit `points` list; otherwise all
/// rational points are used in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum CodeSpec {
    Hermitian {
        q: u32,
        u: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        points: Option<Vec<(String, String)>>,
    },
    Mk {
        p: u32,
        m: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<Vec<u32>>,
        a: u32,
        b: u32,
        d: String,
        #[serde(default)]
        coeffs: Vec<(u32, u32, String)>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        points: Option<Vec<(String, String)>>,
        u: u32,
    },
}

impl CodeSpec {
    pub fn from_json(text: &str) -> Result<CodeSpec, IoError> {
        // errors raised after tag dispatch carry no position
        serde_json::from_str(text).map_err(|e| IoError::Parse {
            line: e.line().max(1),
            column: e.column().max(1),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn build(&self) -> Result<Code, IoError> {
        let (curve, points, u) = match self {
            CodeSpec::Hermitian { q, u, points } => (Curve::hermitian(*q)?, points, *u),
            CodeSpec::Mk {
                p,
                m,
                modulus,
                a,
                b,
                d,
                coeffs,
                points,
                u,
            } => {
                let field = Field::new(*p, *m, modulus.as_deref())?;
                let d = field.parse(d)?;
                let coeffs = coeffs
                    .iter()
                    .map(|(i, j, c)| Ok(((*i, *j), field.parse(c)?)))
                    .collect::<Result<Vec<_>, GfError>>()?;
                (Curve::new(field, *a, *b, d, coeffs)?, points, *u)
            }
        };
        let points = match points {
            Some(list) => {
                let f = curve.field();
                list.iter()
                    .map(|(x, y)| Ok((f.parse(x)?, f.parse(y)?)))
                    .collect::<Result<Vec<Point>, GfError>>()?
            }
            None => crate::code::rational_points(&curve),
        };
        Ok(Code::new(curve, points, u)?)
    }
}

/// Parses a vector file, checking its length if `expected` is given.
pub fn parse_vector(
    field: &Field,
    text: &str,
    expected: Option<usize>,
) -> Result<Vec<Elem>, IoError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (line_no, line) = lines.next().ok_or(IoError::Parse {
        line: 1,
        column: 1,
        message: "empty input".into(),
    })?;
    if let Some((extra, _)) = lines.next() {
        return Err(IoError::Parse {
            line: extra + 1,
            column: 1,
            message: "expected a single line".into(),
        });
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for token in line.split(',') {
        let lead = token.len() - token.trim_start().len();
        let column = offset + lead + 1;
        offset += token.len() + 1;
        let e = field.parse(token.trim()).map_err(|e| IoError::Parse {
            line: line_no + 1,
            column,
            message: e.to_string(),
        })?;
        out.push(e);
    }
    if let Some(n) = expected {
        if out.len() != n {
            return Err(IoError::Parse {
                line: line_no + 1,
                column: line.len() + 1,
                message: format!("expected {n} entries, found {}", out.len()),
            });
        }
    }
    Ok(out)
}

/// Inverse of [`parse_vector`] (without the trailing newline).
pub fn format_vector(field: &Field, v: &[Elem]) -> String {
    v.iter()
        .map(|&e| field.format(e))
        .collect::<Vec<_>>()
        .join(",")
}
