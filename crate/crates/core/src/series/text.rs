use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::QSeries;
use crate::error::{QError, Result};

/// Compact JSON form `{offset, coeffs, trunc}`.
///
/// Coefficients are JSON numbers when they fit in `i64` and decimal strings
/// otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub offset: i64,
    pub coeffs: Vec<JsonCoeff>,
    pub trunc: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonCoeff {
    Int(i64),
    Text(String),
}

impl QSeries {
    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            offset: self.offset,
            coeffs: self
                .coefficients()
                .into_iter()
                .map(|c| match c.to_i64() {
                    Some(v) => JsonCoeff::Int(v),
                    None => JsonCoeff::Text(c.to_string()),
                })
                .collect(),
            trunc: self.trunc,
        }
    }

    pub fn from_json(j: &SeriesJson) -> Result<QSeries> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| match c {
                JsonCoeff::Int(v) => Ok(BigInt::from(*v)),
                JsonCoeff::Text(s) => s.parse::<BigInt>().map_err(|e| QError::Parse(format!("{s}: {e}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let s = QSeries::from_coeffs(j.offset, coeffs);
        Ok(match j.trunc {
            Some(n) => s.truncate(n),
            None => s,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("series JSON is always serializable")
    }

    pub fn from_json_str(s: &str) -> Result<QSeries> {
        let j: SeriesJson = serde_json::from_str(s).map_err(|e| QError::Parse(e.to_string()))?;
        QSeries::from_json(&j)
    }

    /// `q^e1*c1 + q^e2*c2 + ...`, ascending; truncated values end in `+ O(q^(N+1))`.
    pub fn canonical_text(&self) -> String {
        let mut parts: Vec<String> = self.terms().into_iter().map(|(e, c)| format!("q^{e}*{c}")).collect();
        if parts.is_empty() {
            parts.push("0".into());
        }
        if let Some(n) = self.trunc {
            parts.push(format!("O(q^{})", n + 1));
        }
        parts.join(" + ")
    }
}

/// Human form such as `1 + 2q - q^4`; the truncation marker is not printed.
impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = a == BigInt::from(1);
            match (*e, unit) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}
