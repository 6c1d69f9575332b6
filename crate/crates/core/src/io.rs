//! Gap-list text format and the JSON record form of a semigroup.
//!
//! Text format: one semigroup per line, its gaps as comma-separated strictly
//! increasing positive integers. An empty line is `ℕ₀`.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SemigroupError};
use crate::semigroup::NumericalSemigroup;

/// `{"gaps":[…],"generators":[…],"genus":n,"conductor":n,"frobenius":n}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRecord {
    pub gaps: Vec<u32>,
    pub generators: Vec<u32>,
    pub genus: u32,
    pub conductor: u32,
    pub frobenius: i64,
}

impl From<&NumericalSemigroup> for SemigroupRecord {
    fn from(h: &NumericalSemigroup) -> Self {
        SemigroupRecord {
            gaps: h.gaps().to_vec(),
            generators: h.minimal_generators(),
            genus: h.genus(),
            conductor: h.conductor(),
            frobenius: h.frobenius(),
        }
    }
}

impl TryFrom<SemigroupRecord> for NumericalSemigroup {
    type Error = SemigroupError;

    /// Rebuilds from `gaps` and rejects records whose derived fields disagree.
    fn try_from(rec: SemigroupRecord) -> Result<Self> {
        let h = NumericalSemigroup::from_gaps(rec.gaps.iter().map(|&g| g as i64))?;
        if SemigroupRecord::from(&h) != rec {
            return Err(SemigroupError::InvalidParameters(
                "record fields are inconsistent with its gap list".into(),
            ));
        }
        Ok(h)
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SemigroupRecord::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = SemigroupRecord::deserialize(d)?;
        NumericalSemigroup::try_from(rec).map_err(serde::de::Error::custom)
    }
}

/// Parses one gap-list line.
pub fn parse_gap_line(line: &str) -> Result<NumericalSemigroup> {
    let trimmed = line.trim();
    if trimmed.is_empty() {
        return Ok(NumericalSemigroup::trivial());
    }
    let err = |reason: String| SemigroupError::Parse {
        line: line.to_string(),
        reason,
    };
    let mut gaps = Vec::new();
    for tok in trimmed.split(',') {
        let tok = tok.trim();
        let v: i64 = tok
            .parse()
            .map_err(|_| err(format!("{tok:?} is not an integer")))?;
        if let Some(&prev) = gaps.last() {
            if v <= prev {
                return Err(err("gaps must be strictly increasing".into()));
            }
        }
        gaps.push(v);
    }
    NumericalSemigroup::from_gaps(gaps)
}

/// Parses a whole document, one semigroup per line. A trailing newline does
/// not produce an extra `ℕ₀`.
pub fn parse_gap_list(text: &str) -> Result<Vec<NumericalSemigroup>> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let body = body.strip_suffix('\r').unwrap_or(body);
    if text.is_empty() {
        return Ok(Vec::new());
    }
    body.split('\n').map(parse_gap_line).collect()
}

pub fn format_gap_line(h: &NumericalSemigroup) -> String {
    h.gaps()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
