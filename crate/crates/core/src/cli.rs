//! Job runner for the `hjtype` binary.
//!
//! A job is parsed exponent text plus a list of requested outputs. Running it
//! builds one [`Report`] and renders it either as text or as a JSON document.
//! Every number in the JSON document is a string (`"p/q"` or a decimal
//! integer), so arbitrarily large values survive a round trip.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::algebra::format_rational;
use crate::error::{Error, Result};
use crate::group::{invariant_factors, is_cyclic, quotient_characters, DEFAULT_CHARACTER_BOUND};
use crate::pipeline::{all_orderings, normalize_qo, validate_exponents, CharacteristicExponents};
use crate::surface::{nq_to_hj_string, type_matrix_to_nq};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Type,
    Trace,
    Nq,
    HjString,
    Invariants,
    Characters,
    AllOrderings,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub dim: Option<usize>,
    pub exponents: String,
    pub emit: Vec<Emit>,
    pub format: Format,
    pub strict: bool,
    pub max_enumeration: u64,
}

impl JobSpec {
    pub fn new(exponents: impl Into<String>) -> Self {
        JobSpec {
            dim: None,
            exponents: exponents.into(),
            emit: vec![Emit::Type],
            format: Format::Text,
            strict: false,
            max_enumeration: DEFAULT_CHARACTER_BOUND,
        }
    }

    fn wants(&self, e: Emit) -> bool {
        self.emit.contains(&e)
    }
}

/// `@path` reads the exponents from a file, anything else is taken literally.
pub fn load_exponents_arg(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub dimension: usize,
    pub exponents: Vec<Vec<String>>,
    pub steps: Vec<StepReport>,
    pub final_inverse: Vec<Vec<String>>,
    pub column_scales: Vec<String>,
    pub type_matrix: Vec<Vec<String>>,
    pub smooth: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nq: Option<NqReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hj_string: Option<Vec<String>>,
    pub invariant_factors: Vec<String>,
    pub cyclic: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characters: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub all_orderings: Option<Vec<OrderingReport>>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub k: usize,
    pub exponent_image: Vec<String>,
    pub s: Vec<Vec<String>>,
    pub previous_r_times_s: Vec<Vec<String>>,
    pub r: Vec<Vec<String>>,
    pub index: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NqReport {
    pub n: String,
    pub q: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingReport {
    /// 1-based: coordinate `i` of the reordered input is input coordinate
    /// `permutation[i]`.
    pub permutation: Vec<usize>,
    pub type_matrix: Vec<Vec<String>>,
}

/// Exit code plus the text for standard output and standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn build_report(job: &JobSpec) -> Result<Report> {
    let e = CharacteristicExponents::parse(&job.exponents, job.dim)?;
    let d = e.dim();
    if d != 2 && (job.wants(Emit::Nq) || job.wants(Emit::HjString)) {
        return Err(Error::InvalidInput(format!("(n,q) and string outputs need dimension 2, got {d}")));
    }
    let validation = validate_exponents(&e, job.strict)?;
    let trace = normalize_qo(&e)?;
    let factors = invariant_factors(&trace.type_matrix)?;

    let nq = if d == 2 { Some(type_matrix_to_nq(&trace.type_matrix)?) } else { None };
    let hj_string = match (&nq, job.wants(Emit::HjString)) {
        (Some(t), true) if !t.is_smooth() => Some(
            nq_to_hj_string(t)?
                .self_intersections()
                .iter()
                .map(|p| p.to_string())
                .collect(),
        ),
        _ => None,
    };
    let characters = if job.wants(Emit::Characters) {
        let c = quotient_characters(&trace.type_matrix, job.max_enumeration)?;
        Some(c.iter().map(|t| t.iter().map(format_rational).collect()).collect())
    } else {
        None
    };
    let orderings = if job.wants(Emit::AllOrderings) {
        Some(
            all_orderings(&e)?
                .into_iter()
                .map(|o| OrderingReport {
                    permutation: o.permutation.iter().map(|p| p + 1).collect(),
                    type_matrix: o.type_matrix.to_string_rows(),
                })
                .collect(),
        )
    } else {
        None
    };

    Ok(Report {
        dimension: d,
        exponents: e.to_string_rows(),
        steps: trace
            .steps
            .iter()
            .enumerate()
            .map(|(k, s)| StepReport {
                k: k + 1,
                exponent_image: s.exponent_image.iter().map(format_rational).collect(),
                s: s.relative.to_string_rows(),
                previous_r_times_s: s.product.to_string_rows(),
                r: s.cumulative.to_string_rows(),
                index: s.index.to_string(),
            })
            .collect(),
        final_inverse: trace.final_inverse.to_string_rows(),
        column_scales: trace.column_scales.iter().map(|x| x.to_string()).collect(),
        type_matrix: trace.type_matrix.to_string_rows(),
        smooth: trace.is_smooth(),
        nq: nq.map(|t| NqReport { n: t.n().to_string(), q: t.q().to_string() }),
        hj_string,
        invariant_factors: factors.factors().iter().map(|x| x.to_string()).collect(),
        cyclic: is_cyclic(&factors),
        characters,
        all_orderings: orderings,
        warnings: validation.warnings,
    })
}

pub fn to_structured(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn from_structured(text: &str) -> Result<Report> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn render_matrix(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|s| format!("{s:>width$}")).collect();
            format!("  [{}]", cells.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn tuple(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

/// Text rendering of the sections requested in `emit`.
pub fn to_text(report: &Report, emit: &[Emit]) -> String {
    let mut out = String::new();
    let g = report.steps.len();
    for e in emit {
        match e {
            Emit::Type => {
                let _ = writeln!(out, "type matrix:\n{}", render_matrix(&report.type_matrix));
                if report.smooth {
                    let _ = writeln!(out, "smooth");
                }
            }
            Emit::Trace => {
                for s in &report.steps {
                    let k = s.k;
                    let _ = writeln!(out, "step {k}:");
                    let _ = writeln!(out, "A_{k} R^{} = {}", k - 1, tuple(&s.exponent_image));
                    let _ = writeln!(out, "S^{k} =\n{}", render_matrix(&s.s));
                    let _ = writeln!(out, "N_{k} = {}", s.index);
                    let _ = writeln!(out, "R^{} S^{k} =\n{}", k - 1, render_matrix(&s.previous_r_times_s));
                    let _ = writeln!(out, "R^{k} =\n{}", render_matrix(&s.r));
                }
                let _ = writeln!(out, "T^{g} =\n{}", render_matrix(&report.final_inverse));
                let _ = writeln!(out, "d^{g} = {}", tuple(&report.column_scales));
            }
            Emit::Nq => {
                if let Some(nq) = &report.nq {
                    let _ = write!(out, "(n,q) = ({},{})", nq.n, nq.q);
                    let _ = writeln!(out, "{}", if report.smooth { " smooth" } else { "" });
                }
            }
            Emit::HjString => match &report.hj_string {
                Some(p) => {
                    let _ = writeln!(out, "Hirzebruch-Jung string: [{}]", p.join(", "));
                }
                None => {
                    let _ = writeln!(out, "Hirzebruch-Jung string: none (smooth)");
                }
            },
            Emit::Invariants => {
                let _ = writeln!(out, "invariant factors: {}", tuple(&report.invariant_factors));
                let _ = writeln!(out, "cyclic: {}", if report.cyclic { "yes" } else { "no" });
            }
            Emit::Characters => {
                if let Some(c) = &report.characters {
                    let _ = writeln!(out, "characters ({}):", c.len());
                    for t in c {
                        let _ = writeln!(out, "  {}", tuple(t));
                    }
                }
            }
            Emit::AllOrderings => {
                for o in report.all_orderings.iter().flatten() {
                    let p: Vec<String> = o.permutation.iter().map(|x| x.to_string()).collect();
                    let _ = writeln!(out, "ordering {}:\n{}", tuple(&p), render_matrix(&o.type_matrix));
                }
            }
        }
    }
    out
}

pub fn run(job: &JobSpec) -> Outcome {
    match build_report(job) {
        Ok(report) => {
            let stderr: String = report.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            let stdout = match job.format {
                Format::Text => to_text(&report, &job.emit),
                Format::Structured => to_structured(&report),
            };
            Outcome { exit_code: EXIT_OK, stdout, stderr }
        }
        Err(e) => Outcome {
            exit_code: if matches!(e, Error::Internal(_)) { EXIT_INTERNAL } else { EXIT_INVALID },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
