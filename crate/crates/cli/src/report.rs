//! `report` document payloads for verdicts, closure matrices and the
//! counterexample registry.

use dconv_core::lab::{CellReport, ClosureReport, Instance, Observed, RecordReport};
use dconv_core::{witness_points, ClassLabel, LatticeFn, LatticeSet, Point, Value, Verdict, Witness};
use serde::Serialize;

use crate::doc::{fn_doc, format_value, set_doc, Document, Kind};

#[derive(Serialize)]
pub struct WitnessDoc {
    #[serde(rename = "type")]
    pub kind: &'static str,
    pub points: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<i64>>,
    /// Input values at `points`, when those live in the input's lattice.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<String>,
    pub text: String,
}

#[derive(Serialize)]
pub struct VerdictDoc {
    pub report: &'static str,
    pub class: String,
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

pub fn witness_doc(w: &Witness, eval: &dyn Fn(&Point) -> Option<Value>) -> WitnessDoc {
    let (kind, i, j, s) = match w {
        Witness::NotBox { .. } => ("not-box", None, None, None),
        Witness::NonModular { i, j, .. } => ("non-modular", Some(*i), Some(*j), None),
        Witness::AxisNonConvex { i, .. } => ("axis-non-convex", Some(*i), None, None),
        Witness::HullMidpoint { .. } => ("hull-midpoint", None, None, None),
        Witness::RoundedMidpoint { .. } => ("rounded-midpoint", None, None, None),
        Witness::Lattice { .. } => ("lattice", None, None, None),
        Witness::NotShiftInvariant { .. } => ("not-shift-invariant", None, None, None),
        Witness::Exchange { i, .. } => ("exchange", Some(*i), None, None),
        Witness::Jump { s, .. } => ("jump", None, None, Some(s.coords().to_vec())),
    };
    let pts = witness_points(w);
    let values = pts
        .iter()
        .map(eval)
        .collect::<Option<Vec<_>>>()
        .map(|vs| vs.iter().map(format_value).collect())
        .unwrap_or_default();
    WitnessDoc {
        kind,
        points: pts.iter().map(|p| p.coords().to_vec()).collect(),
        i,
        j,
        s,
        values,
        text: w.to_string(),
    }
}

fn set_eval(s: &LatticeSet) -> impl Fn(&Point) -> Option<Value> + '_ {
    move |p| {
        (p.dim() == s.dim()).then(|| if s.contains(p) { Value::zero() } else { Value::Infinite })
    }
}

fn fn_eval(f: &LatticeFn) -> impl Fn(&Point) -> Option<Value> + '_ {
    move |p| (p.dim() == f.dim()).then(|| f.value(p))
}

pub fn verdict_set(label: ClassLabel, s: &LatticeSet, v: &Verdict) -> VerdictDoc {
    VerdictDoc {
        report: "verdict",
        class: label.name().into(),
        member: v.member,
        witness: v.witness.as_ref().map(|w| witness_doc(w, &set_eval(s))),
    }
}

pub fn verdict_fn(label: ClassLabel, f: &LatticeFn, v: &Verdict) -> VerdictDoc {
    VerdictDoc {
        report: "verdict",
        class: label.name().into(),
        member: v.member,
        witness: v.witness.as_ref().map(|w| witness_doc(w, &fn_eval(f))),
    }
}

pub fn verdict_text(v: &VerdictDoc) -> String {
    let mut out = format!(
        "{}: {}\n",
        v.class,
        if v.member { "member" } else { "not a member" }
    );
    if let Some(w) = &v.witness {
        out += &format!("witness: {}\n", w.text);
        let pts: Vec<String> = w.points.iter().map(|p| format!("{p:?}")).collect();
        out += &format!("points: {}\n", pts.join(" / "));
        if !w.values.is_empty() {
            out += &format!("values: {}\n", w.values.join(", "));
        }
    }
    out
}

#[derive(Serialize)]
struct FailureDoc {
    trial: usize,
    operation: String,
    inputs: Vec<Document>,
    output: Document,
    witness: String,
}

#[derive(Serialize)]
struct CellDoc {
    class: &'static str,
    operation: &'static str,
    expected: &'static str,
    observed: &'static str,
    matches: bool,
    trials_run: usize,
    trials_passed: usize,
    claims_checked: usize,
    citation: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<FailureDoc>,
}

#[derive(Serialize)]
struct MatrixDoc {
    report: &'static str,
    trials: usize,
    seed: u64,
    max_dim: usize,
    matches: bool,
    sets: Vec<CellDoc>,
    functions: Vec<CellDoc>,
}

fn instance_doc(i: &Instance) -> Document {
    match i {
        Instance::Set(s) => set_doc(s),
        Instance::Fn(f) => fn_doc(f),
    }
}

fn cell_doc(c: &CellReport) -> CellDoc {
    CellDoc {
        class: c.cell.label.name(),
        operation: c.cell.op.name(),
        expected: if c.cell.expected { "Y" } else { "N" },
        observed: match c.observed {
            Observed::Closed => "Y",
            Observed::NotClosed => "N",
            Observed::Failed => "failed",
        },
        matches: c.matches(),
        trials_run: c.trials_run,
        trials_passed: c.trials_passed,
        claims_checked: c.claims_checked,
        citation: c.cell.citation.to_vec(),
        failure: c.failure.as_ref().map(|f| FailureDoc {
            trial: f.trial,
            operation: f.operation.clone(),
            inputs: f.inputs.iter().map(instance_doc).collect(),
            output: instance_doc(&f.output),
            witness: f.witness.clone(),
        }),
    }
}

pub fn matrix_doc(r: &ClosureReport) -> Document {
    Document::new(
        Kind::Report,
        MatrixDoc {
            report: "closure-matrix",
            trials: r.trials,
            seed: r.seed,
            max_dim: r.max_dim,
            matches: r.matches_tables(),
            sets: r.sets.iter().map(cell_doc).collect(),
            functions: r.functions.iter().map(cell_doc).collect(),
        },
    )
}

#[derive(Serialize)]
struct ClaimDoc {
    statement: String,
    expected: bool,
    observed: bool,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
    cells: Vec<(&'static str, &'static str)>,
}

#[derive(Serialize)]
struct RecordDoc {
    id: &'static str,
    title: &'static str,
    passed: bool,
    claims: Vec<ClaimDoc>,
}

#[derive(Serialize)]
struct ExamplesDoc {
    report: &'static str,
    passed: bool,
    records: Vec<RecordDoc>,
}

pub fn examples_doc(reports: &[RecordReport]) -> Document {
    Document::new(
        Kind::Report,
        ExamplesDoc {
            report: "counterexamples",
            passed: reports.iter().all(RecordReport::passed),
            records: reports
                .iter()
                .map(|r| RecordDoc {
                    id: r.id,
                    title: r.title,
                    passed: r.passed(),
                    claims: r
                        .claims
                        .iter()
                        .map(|c| ClaimDoc {
                            statement: c.statement.clone(),
                            expected: c.expected,
                            observed: c.observed,
                            holds: c.holds(),
                            detail: c.detail.clone(),
                            cells: c.cells.iter().map(|(l, o)| (l.name(), o.name())).collect(),
                        })
                        .collect(),
                })
                .collect(),
        },
    )
}
