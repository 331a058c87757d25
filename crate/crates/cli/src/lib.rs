//! Command implementations behind the `fusionkit` binary.
//!
//! Every command produces an [`Outcome`]: a JSON document following the
//! `fusionkit/1` schema, a short human summary and an exit code.

pub mod output;
pub mod ringfile;

use std::fmt::Write as _;

use fusionkit::enumerate::{enumerate, SearchSpec};
use fusionkit::fp::{dimension_vector, obstruction_battery};
use fusionkit::group::{cohomology, count_fiber_functors, enumerate_module_categories, Cochain};
use fusionkit::library::builtin;
use fusionkit::modular::{
    algebraic_integer_ratios, candidate_s_matrix, exact_entries, galois_symmetry, verify_modular,
    verlinde_fusion_from_s, Options,
};
use fusionkit::{Error, FiniteGroup, FusionRing};
use serde::Serialize;

use output::*;
use ringfile::RingFile;

pub const SCHEMA: &str = "fusionkit/1";

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INVALID: i32 = 1;
    pub const OBSTRUCTED: i32 = 2;
    pub const UNSUPPORTED: i32 = 3;
    pub const INTERNAL: i32 = 4;
}

#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub json: String,
    pub summary: String,
    /// The command failed before producing a report.
    pub is_error: bool,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Unsupported(_) => exit::UNSUPPORTED,
        Error::Degenerate(_) | Error::NotModular(_) => exit::OBSTRUCTED,
        Error::Internal(_) => exit::INTERNAL,
        _ => exit::INVALID,
    }
}

pub fn error_outcome(e: &Error) -> Outcome {
    let out = ErrorOutput {
        schema: SCHEMA.into(),
        error: error_kind(e).into(),
        message: e.to_string(),
    };
    Outcome {
        code: exit_code(e),
        json: to_json(&out),
        summary: e.to_string(),
        is_error: true,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match exit_code(e) {
        exit::UNSUPPORTED => "unsupported",
        exit::OBSTRUCTED => "obstructed",
        exit::INTERNAL => "internal",
        _ => "invalid",
    }
}

/// Where a ring comes from.
pub enum Source {
    Builtin(String),
    File(String),
}

pub fn load(source: &Source) -> Result<FusionRing, Error> {
    match source {
        Source::Builtin(name) => builtin(name),
        Source::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))?;
            RingFile::parse(&text)?.to_ring()
        }
    }
}

/// Loads a ring that must satisfy the axioms; otherwise the outcome is the
/// validation report.
fn load_valid(source: &Source) -> Result<FusionRing, Outcome> {
    let ring = load(source).map_err(|e| error_outcome(&e))?;
    let v = validate_ring(&ring);
    if v.code != exit::OK {
        return Err(v);
    }
    Ok(ring)
}

fn validate_ring(ring: &FusionRing) -> Outcome {
    let report = ring.verify_axioms();
    let rec = ring.check_reciprocity();
    let out = ValidateOutput {
        schema: SCHEMA.into(),
        rank: ring.rank(),
        valid: report.is_valid(),
        violations: report
            .violations
            .iter()
            .map(|v| ViolationOut {
                axiom: v.axiom.to_string(),
                indices: v.indices.clone(),
            })
            .collect(),
        reciprocity: rec.holds,
        reciprocity_witnesses: rec.witnesses.iter().map(|&(i, j, k)| vec![i, j, k]).collect(),
    };
    let mut summary = String::new();
    if out.valid {
        let _ = write!(summary, "valid fusion ring of rank {}", out.rank);
    } else {
        let _ = write!(summary, "invalid: {} violation(s)", out.violations.len());
        for v in out.violations.iter().take(5) {
            let _ = write!(summary, "\n  {} at {:?}", v.axiom, v.indices);
        }
    }
    Outcome {
        code: if out.valid { exit::OK } else { exit::INVALID },
        json: to_json(&out),
        summary,
        is_error: false,
    }
}

pub fn cmd_validate(source: &Source) -> Outcome {
    match load(source) {
        Ok(ring) => validate_ring(&ring),
        Err(e) => error_outcome(&e),
    }
}

pub fn cmd_ring(source: &Source) -> Outcome {
    match load(source) {
        Ok(ring) => {
            let file = RingFile::from_ring(&ring);
            Outcome {
                code: exit::OK,
                json: file.emit(),
                summary: format!("ring of rank {} with labels {}", ring.rank(), ring.labels().join(", ")),
                is_error: false,
            }
        }
        Err(e) => error_outcome(&e),
    }
}

pub fn cmd_dims(source: &Source) -> Outcome {
    let ring = match load_valid(source) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let run = || -> Result<Outcome, Error> {
        let dv = dimension_vector(&ring)?;
        let battery = obstruction_battery(&ring)?;
        let out = DimsOutput {
            schema: SCHEMA.into(),
            labels: ring.labels().to_vec(),
            dims: dv.dims.iter().map(ExactOut::from_algebraic).collect(),
            ring_dim: ExactOut::from_algebraic(&dv.ring_dim),
            integral: dv.is_integral(),
            battery: BatteryOut::from_report(&battery),
            obstructed: battery.is_obstructed(),
            notes: ring.notes().to_vec(),
        };
        let mut summary = String::new();
        for (l, d) in out.labels.iter().zip(&out.dims) {
            let _ = writeln!(summary, "d+({l}) = {} ~ {}", d.exact, d.approx);
        }
        let _ = write!(summary, "d+(C) = {}", out.ring_dim.exact);
        for c in battery.failures() {
            let _ = write!(
                summary,
                "\nobstruction: {}{}",
                c.name,
                c.object.as_ref().map(|o| format!(" at {o}")).unwrap_or_default()
            );
        }
        for a in &out.battery.annotations {
            let _ = write!(summary, "\nnote: {a}");
        }
        Ok(Outcome {
            code: if out.obstructed { exit::OBSTRUCTED } else { exit::OK },
            json: to_json(&out),
            summary,
            is_error: false,
        })
    };
    run().unwrap_or_else(|e| error_outcome(&e))
}

pub fn cmd_modular(source: &Source, opts: &Options) -> Outcome {
    let ring = match load_valid(source) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let run = || -> Result<Outcome, Error> {
        let ratios: Vec<RatioOut> = algebraic_integer_ratios(&ring)?
            .into_iter()
            .map(|v| RatioOut {
                label: ring.label(v.object).into(),
                value: ExactOut::from_algebraic(&v.value).exact,
                algebraic_integer: v.algebraic_integer,
            })
            .collect();
        let ratios_pass = ratios.iter().all(|r| r.algebraic_integer);
        let datum = candidate_s_matrix(&ring, opts)?;
        let mut out = ModularOutput {
            schema: SCHEMA.into(),
            labels: ring.labels().to_vec(),
            tolerance: opts.tolerance,
            precision: opts.precision,
            s_matrix: None,
            identities: Vec::new(),
            verlinde_roundtrip: false,
            galois_symmetries: None,
            ratios,
        };
        if let Some(d) = &datum {
            let exact = exact_entries(d, &ring, opts)?;
            out.s_matrix = Some(d.entry_strings(&exact, 20));
            out.identities = verify_modular(d, &ring, opts)?
                .identities
                .into_iter()
                .map(|c| IdentityOut {
                    name: c.name,
                    passed: c.passed,
                    max_error: c.max_error.is_finite().then_some(c.max_error),
                })
                .collect();
            out.verlinde_roundtrip = verlinde_fusion_from_s(d, opts)
                .map(|r| r.same_table(&ring))
                .unwrap_or(false);
            let g = galois_symmetry(d, opts)?;
            out.galois_symmetries = Some(GaloisOut {
                field_degree: g.field_degree,
                symmetries: g
                    .symmetries
                    .iter()
                    .map(|s| SymmetryOut {
                        perm: s.perm.clone(),
                        signs: s.signs.clone(),
                    })
                    .collect(),
                preserves_duality: g.preserves_duality,
                abelian: g.abelian,
                consistent: g.consistent,
            });
        }
        let ok = out.verlinde_roundtrip && ratios_pass;
        let mut summary = match &out.s_matrix {
            Some(s) => {
                let mut t = String::from("normalized S-matrix:");
                for row in s {
                    let _ = write!(t, "\n  [{}]", row.join(", "));
                }
                let _ = write!(
                    t,
                    "\nVerlinde round trip: {}",
                    if out.verlinde_roundtrip { "pass" } else { "fail" }
                );
                t
            }
            None => "no S-matrix is compatible with these fusion rules".to_string(),
        };
        if let Some(g) = &out.galois_symmetries {
            let _ = write!(
                summary,
                "\nGalois symmetries: {} (field degree {})",
                g.symmetries.len(),
                g.field_degree
            );
        }
        if !ratios_pass {
            let _ = write!(summary, "\nd+(C)/d+(X)^2 is not an algebraic integer for some X");
        }
        Ok(Outcome {
            code: if ok { exit::OK } else { exit::OBSTRUCTED },
            json: to_json(&out),
            summary,
            is_error: false,
        })
    };
    run().unwrap_or_else(|e| error_outcome(&e))
}

pub fn cmd_cohomology(group: &str, degree: usize) -> Outcome {
    let run = || -> Result<Outcome, Error> {
        let g = FiniteGroup::parse(group)?;
        let h = cohomology(&g, degree, g.order().max(1) as u64)?;
        let out = CohomologyOut {
            schema: SCHEMA.into(),
            group: g.name().into(),
            degree,
            factors: h.factors.iter().map(u64::to_string).collect(),
            size: h.size().to_string(),
        };
        let summary = if h.is_trivial() {
            format!("H^{degree}({}, C^x) = 0", g.name())
        } else {
            let parts: Vec<String> = h.factors.iter().map(|f| format!("Z{f}")).collect();
            format!("H^{degree}({}, C^x) = {}", g.name(), parts.join(" x "))
        };
        Ok(Outcome {
            code: exit::OK,
            json: to_json(&out),
            summary,
            is_error: false,
        })
    };
    run().unwrap_or_else(|e| error_outcome(&e))
}

fn category_out(c: &fusionkit::group::ModuleCategory) -> ModuleCategoryOut {
    ModuleCategoryOut {
        subgroup: c.subgroup_labels.clone(),
        psi_class: c.psi_class.clone(),
        orbit_size: c.orbit_size,
    }
}

/// Module categories over `Vec_G^omega` (equivalently over `Rep G` when
/// omega is trivial); `twist` gives coordinates of omega in `H^3(G)`.
pub fn cmd_module_cats(group: &str, twist: &[u64]) -> Outcome {
    let run = || -> Result<Outcome, Error> {
        let g = FiniteGroup::parse(group)?;
        let n = g.order() as u64;
        let omega = if twist.iter().all(|&t| t == 0) {
            Cochain::zero(g.order(), 3, n)
        } else {
            let h3 = cohomology(&g, 3, n)?;
            if twist.len() != h3.primary.len() {
                return Err(Error::Invalid(format!(
                    "twist needs {} coordinate(s) for H^3({})",
                    h3.primary.len(),
                    g.name()
                )));
            }
            h3.cocycle_for(twist)?
        };
        let cats = enumerate_module_categories(&g, &omega)?;
        let out = ModuleCatsOut {
            schema: SCHEMA.into(),
            group: g.name().into(),
            twist: twist.to_vec(),
            count: cats.len(),
            categories: cats.iter().map(category_out).collect(),
        };
        let summary = format!("{} indecomposable module categories over Vec({})", out.count, g.name());
        Ok(Outcome {
            code: exit::OK,
            json: to_json(&out),
            summary,
            is_error: false,
        })
    };
    run().unwrap_or_else(|e| error_outcome(&e))
}

pub fn cmd_fiber_functors(group: &str) -> Outcome {
    let run = || -> Result<Outcome, Error> {
        let g = FiniteGroup::parse(group)?;
        let f = count_fiber_functors(&g)?;
        let out = FiberFunctorsOut {
            schema: SCHEMA.into(),
            group: g.name().into(),
            count: f.count,
            witnesses: f.witnesses.iter().map(category_out).collect(),
        };
        let summary = format!("{} fiber functors on Rep({})", out.count, g.name());
        Ok(Outcome {
            code: exit::OK,
            json: to_json(&out),
            summary,
            is_error: false,
        })
    };
    run().unwrap_or_else(|e| error_outcome(&e))
}

pub fn cmd_enumerate(spec: &SearchSpec) -> Outcome {
    match enumerate(spec) {
        Ok(rings) => {
            let out = EnumerateOut {
                schema: SCHEMA.into(),
                rank: spec.rank,
                max_entry: spec.max_entry,
                count: rings.len(),
                rings: rings.iter().map(RingFile::from_ring).collect(),
            };
            Outcome {
                code: exit::OK,
                json: to_json(&out),
                summary: format!(
                    "{} fusion rings of rank {} with entries at most {}",
                    out.count, spec.rank, spec.max_entry
                ),
                is_error: false,
            }
        }
        Err(e) => error_outcome(&e),
    }
}
