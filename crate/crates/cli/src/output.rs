//! JSON documents emitted by the commands.
//!
//! All of them deserialize back to the same value, so parsing and
//! re-emitting a document reproduces it byte for byte.

use fusionkit::fp::ObstructionReport;
use fusionkit::AlgebraicNumber;
use serde::{Deserialize, Serialize};

use crate::ringfile::RingFile;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorOutput {
    pub schema: String,
    pub error: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ViolationOut {
    pub axiom: String,
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValidateOutput {
    pub schema: String,
    pub rank: usize,
    pub valid: bool,
    pub violations: Vec<ViolationOut>,
    pub reciprocity: bool,
    pub reciprocity_witnesses: Vec<Vec<usize>>,
}

/// An exact algebraic number with its minimal polynomial and a decimal value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactOut {
    pub exact: String,
    pub minpoly: String,
    pub approx: f64,
}

impl ExactOut {
    pub fn from_algebraic(a: &AlgebraicNumber) -> ExactOut {
        ExactOut {
            exact: a.radical_string().unwrap_or_else(|| a.to_string()),
            minpoly: a.minpoly().to_string(),
            approx: a.to_f64(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOut {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object: Option<String>,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatteryOut {
    pub checks: Vec<CheckOut>,
    pub annotations: Vec<String>,
    pub conductor: Option<u64>,
}

impl BatteryOut {
    pub fn from_report(r: &ObstructionReport) -> BatteryOut {
        BatteryOut {
            checks: r
                .checks
                .iter()
                .map(|c| CheckOut {
                    name: c.name.clone(),
                    object: c.object.clone(),
                    verdict: c.verdict.to_string(),
                    witness: c.witness.clone(),
                    citation: c.citation.clone(),
                })
                .collect(),
            annotations: r.annotations.clone(),
            conductor: r.conductor,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimsOutput {
    pub schema: String,
    pub labels: Vec<String>,
    pub dims: Vec<ExactOut>,
    pub ring_dim: ExactOut,
    pub integral: bool,
    pub battery: BatteryOut,
    pub obstructed: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityOut {
    pub name: String,
    pub passed: bool,
    /// `null` when the identity could not be evaluated.
    pub max_error: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymmetryOut {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaloisOut {
    pub field_degree: usize,
    pub symmetries: Vec<SymmetryOut>,
    pub preserves_duality: bool,
    pub abelian: bool,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioOut {
    pub label: String,
    pub value: String,
    pub algebraic_integer: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModularOutput {
    pub schema: String,
    pub labels: Vec<String>,
    pub tolerance: f64,
    pub precision: u32,
    /// Entries of the normalized S-matrix, exact where possible.
    pub s_matrix: Option<Vec<Vec<String>>>,
    pub identities: Vec<IdentityOut>,
    pub verlinde_roundtrip: bool,
    pub galois_symmetries: Option<GaloisOut>,
    pub ratios: Vec<RatioOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CohomologyOut {
    pub schema: String,
    pub group: String,
    pub degree: usize,
    /// Invariant factors as decimal strings.
    pub factors: Vec<String>,
    pub size: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleCategoryOut {
    pub subgroup: Vec<String>,
    pub psi_class: Vec<u64>,
    pub orbit_size: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleCatsOut {
    pub schema: String,
    pub group: String,
    pub twist: Vec<u64>,
    pub count: usize,
    pub categories: Vec<ModuleCategoryOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiberFunctorsOut {
    pub schema: String,
    pub group: String,
    pub count: usize,
    pub witnesses: Vec<ModuleCategoryOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnumerateOut {
    pub schema: String,
    pub rank: usize,
    pub max_entry: u32,
    pub count: usize,
    pub rings: Vec<RingFile>,
}
