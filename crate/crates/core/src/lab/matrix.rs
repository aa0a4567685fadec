//! Rebuilds the two closure tables.
//!
//! A Y cell runs `trials` random instances of its row class through the
//! column operation and re-checks the class on each result. An N cell
//! replays the registry claims tagged with it. Nothing random ever counts
//! towards an N.

use std::fmt::{self, Write as _};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::ClassLabel;
use crate::error::{Error, Result};
use crate::lattice::{int, rat, Point, Rational, Window};
use crate::network::{induce_fn, transform_set, Arc, ArcCost, Network};
use crate::ops::{
    aggregate_fn, aggregate_set, direct_sum_fn, direct_sum_set, split_fn, split_set,
    PartitionSpec, SplitSpec,
};

use super::generate::{generate_with, Instance};
use super::registry::{lifted_direct_sum_fn, lifted_direct_sum_set, run_counterexamples, RecordReport};
use super::Operation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureCell {
    pub label: ClassLabel,
    pub op: Operation,
    /// Whether the class is closed under the operation.
    pub expected: bool,
    /// Registry records witnessing an N; empty for Y cells.
    pub citation: &'static [&'static str],
}

const SET_ROWS: [ClassLabel; 10] = [
    ClassLabel::IntegerBox,
    ClassLabel::IntegrallyConvexSet,
    ClassLabel::LNatSet,
    ClassLabel::LSet,
    ClassLabel::MNatSet,
    ClassLabel::MSet,
    ClassLabel::MultimodularSet,
    ClassLabel::GlobalDmcSet,
    ClassLabel::SimultExchJump,
    ClassLabel::ConstParityJump,
];

const FN_ROWS: [ClassLabel; 11] = [
    ClassLabel::SeparableConvex,
    ClassLabel::IntegrallyConvexFn,
    ClassLabel::LNatFn,
    ClassLabel::LFn,
    ClassLabel::MNatFn,
    ClassLabel::MFn,
    ClassLabel::MultimodularFn,
    ClassLabel::GlobalDmcFn,
    ClassLabel::LocalDmcFn,
    ClassLabel::JumpMNatFn,
    ClassLabel::JumpMFn,
];

/// Expected entry and citation for a table cell.
fn expectation(label: ClassLabel, op: Operation) -> (bool, &'static [&'static str]) {
    use ClassLabel::*;
    use Operation::*;
    const Y: (bool, &[&str]) = (true, &[]);
    match (label, op) {
        (GlobalDmcSet, DirectSum) => (false, &["EX3.1"]),
        (GlobalDmcFn | LocalDmcFn, DirectSum) => (false, &["EX3.1", "EX4.1"]),
        (_, DirectSum) => Y,
        (MNatSet | MSet | SimultExchJump | ConstParityJump, _) => Y,
        (MNatFn | MFn | JumpMNatFn | JumpMFn, _) => Y,
        (IntegerBox | SeparableConvex, Aggregation) => Y,
        (IntegerBox | SeparableConvex, Splitting | NetworkInduction) => (false, &["EX3.1"]),
        (IntegrallyConvexSet | IntegrallyConvexFn, Splitting) => Y,
        (IntegrallyConvexSet | IntegrallyConvexFn, _) => (false, &["EX3.3"]),
        (LNatSet | LNatFn, Splitting) => (false, &["EX3.1"]),
        (LNatSet | LNatFn, Aggregation) => (false, &["EX3.4"]),
        (LNatSet | LNatFn, _) => (false, &["EX3.1", "EX3.4"]),
        (LSet | LFn, Splitting) => (false, &["EX3.2"]),
        (LSet | LFn, Aggregation) => (false, &["EX3.5"]),
        (LSet | LFn, _) => (false, &["EX3.2", "EX3.5"]),
        (MultimodularSet | MultimodularFn, Splitting) => Y,
        (MultimodularSet | MultimodularFn, _) => (false, &["EX3.6"]),
        (GlobalDmcSet | GlobalDmcFn | LocalDmcFn, Splitting) => (false, &["EX3.1"]),
        (GlobalDmcSet | GlobalDmcFn | LocalDmcFn, _) => (false, &["EX3.3"]),
        (JumpSystem, _) => Y,
    }
}

fn cells_for(rows: &[ClassLabel]) -> Vec<ClosureCell> {
    rows.iter()
        .flat_map(|&label| {
            Operation::ALL.into_iter().map(move |op| {
                let (expected, citation) = expectation(label, op);
                ClosureCell {
                    label,
                    op,
                    expected,
                    citation,
                }
            })
        })
        .collect()
}

/// The 40 cells of the set table, row-major.
pub fn set_table() -> Vec<ClosureCell> {
    cells_for(&SET_ROWS)
}

/// The 44 cells of the function table, row-major.
pub fn fn_table() -> Vec<ClosureCell> {
    cells_for(&FN_ROWS)
}

/// One failing Y-cell trial, with everything needed to replay it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialFailure {
    pub trial: usize,
    /// Operation parameters (blocks, groups or the network).
    pub operation: String,
    pub inputs: Vec<Instance>,
    pub output: Instance,
    pub witness: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Observed {
    /// Every trial kept the class.
    Closed,
    /// The cited counterexamples replayed.
    NotClosed,
    /// A trial broke the class, or a cited counterexample did not replay.
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellReport {
    pub cell: ClosureCell,
    pub observed: Observed,
    pub trials_run: usize,
    pub trials_passed: usize,
    /// Number of registry claims replayed for an N cell.
    pub claims_checked: usize,
    pub failure: Option<TrialFailure>,
}

impl CellReport {
    pub fn matches(&self) -> bool {
        match self.observed {
            Observed::Closed => self.cell.expected,
            Observed::NotClosed => !self.cell.expected,
            Observed::Failed => false,
        }
    }

    fn short(&self) -> String {
        match self.observed {
            Observed::Closed => format!("Y {}/{}", self.trials_passed, self.trials_run),
            Observed::NotClosed => format!("N {}", self.cell.citation.join(",")),
            Observed::Failed if self.cell.expected => {
                format!("! {}/{}", self.trials_passed, self.trials_run)
            }
            Observed::Failed => format!("! {}", self.cell.citation.join(",")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    pub trials: usize,
    pub seed: u64,
    pub max_dim: usize,
    pub sets: Vec<CellReport>,
    pub functions: Vec<CellReport>,
}

impl ClosureReport {
    pub fn matches_tables(&self) -> bool {
        self.cells().all(CellReport::matches)
    }

    pub fn cells(&self) -> impl Iterator<Item = &CellReport> {
        self.sets.iter().chain(&self.functions)
    }

    /// `Y`/`N` per cell in table layout, one row per line.
    pub fn grid(&self) -> String {
        let mut out = String::new();
        for table in [&self.sets, &self.functions] {
            for row in table.chunks(4) {
                let marks: Vec<&str> = row
                    .iter()
                    .map(|c| match c.observed {
                        Observed::Closed => "Y",
                        Observed::NotClosed => "N",
                        Observed::Failed => "!",
                    })
                    .collect();
                let _ = writeln!(out, "{:22} {}", row[0].cell.label.title(), marks.join(" "));
            }
            out.push('\n');
        }
        out
    }

    /// Full grid with per-cell pass counts and citations, followed by any
    /// failing trials.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "closure matrix: trials={} seed={} max_dim={}",
            self.trials, self.seed, self.max_dim
        );
        for (title, table) in [
            ("Operations on discrete convex sets", &self.sets),
            ("Operations on discrete convex functions", &self.functions),
        ] {
            let _ = writeln!(out, "\n{title}");
            let _ = writeln!(
                out,
                "{:22} | {:13} | {:13} | {:13} | {:13}",
                "", "direct sum", "splitting", "aggregation", "network"
            );
            for row in table.chunks(4) {
                let cols: Vec<String> = row.iter().map(|c| format!("{:13}", c.short())).collect();
                let _ = writeln!(out, "{:22} | {}", row[0].cell.label.title(), cols.join(" | "));
            }
        }
        for c in self.cells().filter(|c| !c.matches()) {
            let _ = writeln!(out, "\nmismatch at ({}, {})", c.cell.label, c.cell.op);
            if let Some(f) = &c.failure {
                let _ = writeln!(out, "  trial {}: {}", f.trial, f.operation);
                for (k, i) in f.inputs.iter().enumerate() {
                    let _ = writeln!(out, "  input {k}: {}", instance_text(i));
                }
                let _ = writeln!(out, "  output: {}", instance_text(&f.output));
                let _ = writeln!(out, "  witness: {}", f.witness);
            }
        }
        let verdict = if self.matches_tables() { "match" } else { "MISMATCH" };
        let _ = writeln!(out, "\ntables: {verdict}");
        out
    }
}

impl fmt::Display for ClosureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn instance_text(i: &Instance) -> String {
    match i {
        Instance::Set(s) => s.to_string(),
        Instance::Fn(f) => f.to_string(),
    }
}

/// Runs every cell of both tables.
pub fn closure_matrix(trials: usize, seed: u64, max_dim: usize) -> Result<ClosureReport> {
    if trials == 0 {
        return Err(Error::InvalidSpec("trials must be at least 1".into()));
    }
    if !(2..=6).contains(&max_dim) {
        return Err(Error::InvalidSpec(format!("max_dim must lie in 2..=6, got {max_dim}")));
    }
    let records = run_counterexamples()?;
    let mut index = 0u64;
    let mut run = |cells: Vec<ClosureCell>| -> Result<Vec<CellReport>> {
        cells
            .into_iter()
            .map(|cell| {
                index += 1;
                run_cell(cell, trials, cell_seed(seed, index), max_dim, &records)
            })
            .collect()
    };
    let sets = run(set_table())?;
    let functions = run(fn_table())?;
    Ok(ClosureReport {
        trials,
        seed,
        max_dim,
        sets,
        functions,
    })
}

fn cell_seed(seed: u64, index: u64) -> u64 {
    seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Runs one cell; `records` supplies the replayed registry for N cells.
pub fn run_cell(
    cell: ClosureCell,
    trials: usize,
    seed: u64,
    max_dim: usize,
    records: &[RecordReport],
) -> Result<CellReport> {
    let mut report = CellReport {
        cell,
        observed: Observed::Failed,
        trials_run: 0,
        trials_passed: 0,
        claims_checked: 0,
        failure: None,
    };
    if !cell.expected {
        let key = (cell.label, cell.op);
        let claims: Vec<_> = records
            .iter()
            .filter(|r| cell.citation.contains(&r.id))
            .flat_map(|r| &r.claims)
            .filter(|c| c.cells.contains(&key))
            .collect();
        report.claims_checked = claims.len();
        if !claims.is_empty() && claims.iter().all(|c| c.holds()) {
            report.observed = Observed::NotClosed;
        }
        return Ok(report);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let outcome = run_trial(&mut rng, cell.label, cell.op, max_dim)?;
        report.trials_run += 1;
        match outcome.failure(trial) {
            None => report.trials_passed += 1,
            Some(f) => {
                report.failure.get_or_insert(f);
            }
        }
    }
    report.observed = if report.trials_passed == report.trials_run {
        Observed::Closed
    } else {
        Observed::Failed
    };
    Ok(report)
}

struct TrialOutcome {
    operation: String,
    inputs: Vec<Instance>,
    output: Instance,
    witness: Option<String>,
}

impl TrialOutcome {
    fn failure(self, trial: usize) -> Option<TrialFailure> {
        let witness = self.witness?;
        Some(TrialFailure {
            trial,
            operation: self.operation,
            inputs: self.inputs,
            output: self.output,
            witness,
        })
    }
}

/// Candidates drawn before a trial gives up on finding a usable instance.
const TRIAL_BUDGET: usize = 200;
/// Largest operation output a trial re-checks.
const MAX_OUTPUT: usize = 400;

fn run_trial<R: Rng>(rng: &mut R, label: ClassLabel, op: Operation, max_dim: usize) -> Result<TrialOutcome> {
    for _ in 0..TRIAL_BUDGET {
        let attempt = match op {
            Operation::DirectSum => direct_sum_trial(rng, label, max_dim)?,
            Operation::Splitting => split_trial(rng, label, max_dim)?,
            Operation::Aggregation => aggregation_trial(rng, label, max_dim)?,
            Operation::NetworkInduction => network_trial(rng, label, max_dim)?,
        };
        let Some((operation, inputs, output)) = attempt else {
            continue;
        };
        if output.len() > MAX_OUTPUT {
            continue;
        }
        let verdict = output.check(label)?;
        return Ok(TrialOutcome {
            operation,
            inputs,
            output,
            witness: verdict.witness.map(|w| w.to_string()),
        });
    }
    Err(Error::BudgetExhausted {
        label: label.name(),
        budget: TRIAL_BUDGET,
    })
}

type Attempt = Option<(String, Vec<Instance>, Instance)>;

fn draw<R: Rng>(rng: &mut R, label: ClassLabel, w: &Window, max_size: usize) -> Result<Instance> {
    generate_with(rng, label, w, max_size)
}

fn cube(dim: usize, lo: i64, hi: i64) -> Window {
    Window::cube(dim, lo, hi).expect("lo ≤ hi")
}

fn direct_sum_trial<R: Rng>(rng: &mut R, label: ClassLabel, max_dim: usize) -> Result<Attempt> {
    let n1 = rng.gen_range(1..max_dim);
    let n2 = rng.gen_range(1..=max_dim - n1);
    let cap = if label.is_lifted() { 6 } else { 12 };
    let a = draw(rng, label, &cube(n1, -3, 3), cap)?;
    let b = draw(rng, label, &cube(n2, -3, 3), cap)?;
    let out = match (&a, &b) {
        (Instance::Set(x), Instance::Set(y)) if label.is_lifted() => {
            Instance::Set(lifted_direct_sum_set(x, y, 2)?)
        }
        (Instance::Fn(x), Instance::Fn(y)) if label.is_lifted() => {
            Instance::Fn(lifted_direct_sum_fn(x, y, 2)?)
        }
        (Instance::Set(x), Instance::Set(y)) => Instance::Set(direct_sum_set(x, y)?),
        (Instance::Fn(x), Instance::Fn(y)) => Instance::Fn(direct_sum_fn(x, y)?),
        _ => unreachable!("both operands come from the same label"),
    };
    let op = if label.is_lifted() {
        "direct sum (relative shift within ±2)".to_string()
    } else {
        "direct sum".to_string()
    };
    Ok(Some((op, vec![a, b], out)))
}

fn is_jump_row(label: ClassLabel) -> bool {
    use ClassLabel::*;
    matches!(label, JumpSystem | ConstParityJump | SimultExchJump | JumpMFn | JumpMNatFn)
}

fn split_trial<R: Rng>(rng: &mut R, label: ClassLabel, max_dim: usize) -> Result<Attempt> {
    let n = rng.gen_range(1..max_dim);
    let m = rng.gen_range(n + 1..=max_dim);
    let mut blocks = vec![1usize; n];
    for _ in n..m {
        blocks[rng.gen_range(0..n)] += 1;
    }
    let spec = SplitSpec::new(blocks)?;
    let src = cube(n, -1, 1);
    let a = draw(rng, label, &src, 8)?;
    // Exit coordinates range over the source hull plus a margin (2 for jump
    // rows so every exchange target of a generated point stays inside).
    let margin = if is_jump_row(label) { 2 } else { 1 };
    let hull = match &a {
        Instance::Set(s) => s.bounding_box(),
        Instance::Fn(f) => f.bounding_box(),
    };
    let mut lo = Vec::with_capacity(m);
    let mut hi = Vec::with_capacity(m);
    for (i, &b) in spec.blocks().iter().enumerate() {
        for _ in 0..b {
            lo.push(hull.lo()[i].min(0) - margin);
            hi.push(hull.hi()[i].max(0) + margin);
        }
    }
    let w = Window::new(Point::new(lo), Point::new(hi))?;
    let out = match &a {
        Instance::Set(s) => Instance::Set(split_set(s, &spec, &w)?),
        Instance::Fn(f) => Instance::Fn(split_fn(f, &spec, &w)?),
    };
    let op = format!("split blocks {:?} on [{}, {}]", spec.blocks(), w.lo(), w.hi());
    Ok(Some((op, vec![a], out)))
}

fn random_partition<R: Rng>(rng: &mut R, n: usize) -> PartitionSpec {
    let m = rng.gen_range(1..n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut groups: Vec<Vec<usize>> = order[..m].iter().map(|&i| vec![i]).collect();
    for &i in &order[m..] {
        let g = rng.gen_range(0..m);
        groups[g].push(i);
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    PartitionSpec::new(groups).expect("every index placed once")
}

fn aggregation_trial<R: Rng>(rng: &mut R, label: ClassLabel, max_dim: usize) -> Result<Attempt> {
    let n = rng.gen_range(2..=max_dim);
    let spec = random_partition(rng, n);
    let a = draw(rng, label, &cube(n, -3, 3), 60)?;
    let out = match &a {
        Instance::Set(s) => Instance::Set(aggregate_set(s, &spec)?),
        Instance::Fn(f) => Instance::Fn(aggregate_fn(f, &spec)?),
    };
    let op = format!("aggregate groups {:?}", spec.groups());
    Ok(Some((op, vec![a], out)))
}

/// Convex `a t² + b t + c |t|` tabulated on `[lo, hi]`.
fn random_arc_cost<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> ArcCost {
    let a = rng.gen_range(0..=1);
    let b: Rational = rat(rng.gen_range(-2..=2), 2);
    let c = rng.gen_range(0..=1);
    ArcCost::from_fn(lo, hi, |t| int(a * t * t + c * t.abs()) + b * t)
}

/// A random network with entrance `u0..`, internal `v0..` and exit `w0..`;
/// every entrance has an outgoing arc and every exit an incoming one.
fn random_network<R: Rng>(rng: &mut R, n: usize, m: usize, costed: bool) -> Result<Network> {
    let k = rng.gen_range(0..=2);
    let us: Vec<String> = (0..n).map(|i| format!("u{i}")).collect();
    let vs: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
    let ws: Vec<String> = (0..m).map(|i| format!("w{i}")).collect();
    let all: Vec<String> = us.iter().chain(&vs).chain(&ws).cloned().collect();
    let mut ends: Vec<(String, String)> = Vec::new();
    let pick = |rng: &mut R, pool: &[&Vec<String>]| -> String {
        let flat: Vec<&String> = pool.iter().flat_map(|v| v.iter()).collect();
        flat[rng.gen_range(0..flat.len())].clone()
    };
    for u in &us {
        ends.push((u.clone(), pick(rng, &[&vs, &ws])));
    }
    for v in &vs {
        ends.push((pick(rng, &[&us, &vs]), v.clone()));
        ends.push((v.clone(), pick(rng, &[&vs, &ws])));
    }
    for w in &ws {
        ends.push((pick(rng, &[&us, &vs]), w.clone()));
    }
    let extra = rng.gen_range(0..=2);
    for _ in 0..extra {
        let t = all[rng.gen_range(0..all.len())].clone();
        let h = all[rng.gen_range(0..all.len())].clone();
        if t != h {
            ends.push((t, h));
        }
    }
    ends.retain(|(t, h)| t != h);
    ends.truncate(8);
    let arcs = ends
        .into_iter()
        .map(|(t, h)| {
            let lo = rng.gen_range(-2..=0);
            let hi = rng.gen_range(0..=2);
            let cost = if costed {
                random_arc_cost(rng, lo, hi)
            } else {
                ArcCost::Zero
            };
            Arc::new(&t, &h, lo, hi, cost)
        })
        .collect();
    Network::new(all, arcs, us, ws)
}

fn network_trial<R: Rng>(rng: &mut R, label: ClassLabel, max_dim: usize) -> Result<Attempt> {
    let n = rng.gen_range(1..=max_dim.min(3));
    let m = rng.gen_range(1..=max_dim);
    let a = draw(rng, label, &cube(n, -1, 1), 8)?;
    let net = random_network(rng, n, m, !label.is_set())?;
    let out = match &a {
        Instance::Set(s) => transform_set(s, &net).map(Instance::Set),
        Instance::Fn(f) => induce_fn(f, &net).map(Instance::Fn),
    };
    let out = match out {
        Ok(o) => o,
        Err(Error::Empty(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    Ok(Some((describe_network(&net), vec![a], out)))
}

pub(crate) fn describe_network(net: &Network) -> String {
    let arcs: Vec<String> = net
        .arcs()
        .iter()
        .map(|a| {
            let cost = match &a.cost {
                ArcCost::Zero => String::new(),
                ArcCost::Table(t) => {
                    let vals: Vec<String> = t.values().map(|v| v.to_string()).collect();
                    format!(" cost [{}]", vals.join(" "))
                }
            };
            format!("{}→{} [{}, {}]{cost}", a.tail, a.head, a.lower, a.upper)
        })
        .collect();
    format!("network {}", arcs.join("; "))
}
