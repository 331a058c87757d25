//! The JSON ring format.
//!
//! ```json
//! {"schema": "fusionkit/1", "rank": 2, "labels": ["1", "X"], "dual": [0, 1],
//!  "N": [[[1, 0], [0, 1]], [[0, 1], [1, 1]]]}
//! ```
//! with `N[i][j][k] = N_{ij}^k`.

use fusionkit::{Error, FusionRing};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::{to_json, SCHEMA};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFile {
    pub schema: String,
    pub rank: usize,
    pub labels: Vec<String>,
    pub dual: Vec<usize>,
    #[serde(rename = "N")]
    pub n: Vec<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl RingFile {
    pub fn from_ring(ring: &FusionRing) -> RingFile {
        let n = ring
            .tensor()
            .iter()
            .map(|m| {
                m.iter()
                    .map(|row| row.iter().map(|x| x.to_u64().unwrap_or(u64::MAX)).collect())
                    .collect()
            })
            .collect();
        RingFile {
            schema: SCHEMA.into(),
            rank: ring.rank(),
            labels: ring.labels().to_vec(),
            dual: ring.duals().to_vec(),
            n,
            notes: ring.notes().to_vec(),
        }
    }

    pub fn parse(text: &str) -> Result<RingFile, Error> {
        let file: RingFile =
            serde_json::from_str(text).map_err(|e| Error::Invalid(format!("malformed ring file: {e}")))?;
        if file.schema != SCHEMA {
            return Err(Error::Invalid(format!(
                "unknown schema `{}`, expected `{SCHEMA}`",
                file.schema
            )));
        }
        Ok(file)
    }

    /// Checks the shape; the axioms are left to the caller.
    pub fn to_ring(&self) -> Result<FusionRing, Error> {
        if self.labels.len() != self.rank {
            return Err(Error::Shape(format!(
                "{} labels for rank {}",
                self.labels.len(),
                self.rank
            )));
        }
        let n = self
            .n
            .iter()
            .map(|m| {
                m.iter()
                    .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                    .collect()
            })
            .collect();
        let mut ring = FusionRing::new(self.labels.clone(), self.dual.clone(), n)?;
        for note in &self.notes {
            ring = ring.with_note(note.clone());
        }
        Ok(ring)
    }

    pub fn emit(&self) -> String {
        to_json(self)
    }
}
