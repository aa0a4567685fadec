//! Command-line front end for `dconv-core`.
//!
//! Exit status: `0` member / everything matches, `1` non-member / some
//! cell or record mismatched, `2` input error.

pub mod doc;
pub mod report;

use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dconv_core::lab::{closure_matrix, run_counterexamples, run_record};
use dconv_core::network::{induce_fn, transform_set};
use dconv_core::ops;
use dconv_core::{check_fn, check_set, ClassLabel, Window};

use crate::doc::{Document, Object};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "dconv", version, about = "Discrete convexity recognizers and transformations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Output style for verdicts and reports.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide membership of a set or function in a class.
    Check {
        input: PathBuf,
        #[arg(long, value_parser = parse_label)]
        class: ClassLabel,
        /// Restrict the input to this window first.
        #[arg(long)]
        window: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Apply a transformation.
    Op {
        #[arg(value_enum)]
        op: OpName,
        inputs: Vec<PathBuf>,
        /// split-spec for `split`, partition-spec for `aggregate`.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Output window; required by `split`, restricts the result otherwise.
        #[arg(long)]
        window: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Transform a set or function through a network.
    Induce {
        #[arg(long)]
        network: PathBuf,
        #[arg(long)]
        input: PathBuf,
        /// Restrict the result to this window.
        #[arg(long)]
        window: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Run randomized closure trials for every table cell.
    Matrix {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Replay the counterexample registry.
    Examples {
        /// `all` or a record id such as `EX3.6`.
        #[arg(long, default_value = "all")]
        run: String,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpName {
    DirectSum,
    Split,
    Aggregate,
    Minkowski,
    Convolve,
}

fn parse_label(s: &str) -> std::result::Result<ClassLabel, String> {
    s.parse::<ClassLabel>().map_err(|_| {
        let names: Vec<&str> = ClassLabel::ALL.iter().map(|l| l.name()).collect();
        format!("unknown class `{s}`; expected one of: {}", names.join(", "))
    })
}

/// Text to emit and the exit status.
pub struct Outcome {
    pub text: String,
    pub status: u8,
}

impl Outcome {
    fn document(d: &Document) -> Self {
        Outcome {
            text: d.to_json(),
            status: EXIT_OK,
        }
    }
}

pub fn run(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Check {
            input,
            class,
            window,
            output,
        } => cmd_check(input, *class, window.as_deref(), output.format),
        Command::Op {
            op,
            inputs,
            spec,
            window,
            ..
        } => cmd_op(*op, inputs, spec.as_deref(), window.as_deref()).map(|d| Outcome::document(&d)),
        Command::Induce {
            network,
            input,
            window,
            ..
        } => cmd_induce(network, input, window.as_deref()).map(|d| Outcome::document(&d)),
        Command::Matrix {
            trials,
            seed,
            max_dim,
            output,
        } => cmd_matrix(*trials, *seed, *max_dim, output.format),
        Command::Examples { run, output } => cmd_examples(run, output.format),
    }
}

pub fn output_of(cmd: &Command) -> &Output {
    match cmd {
        Command::Check { output, .. }
        | Command::Op { output, .. }
        | Command::Induce { output, .. }
        | Command::Matrix { output, .. }
        | Command::Examples { output, .. } => output,
    }
}

fn read_window(path: Option<&Path>) -> Result<Option<Window>> {
    path.map(|p| doc::to_window(&Document::read(p)?)).transpose()
}

fn read_object(path: &Path) -> Result<Object> {
    doc::to_object(&Document::read(path)?).with_context(|| format!("in {}", path.display()))
}

pub fn cmd_check(
    input: &Path,
    label: ClassLabel,
    window: Option<&Path>,
    format: Format,
) -> Result<Outcome> {
    let w = read_window(window)?;
    let verdict = match read_object(input)? {
        Object::Set(s) => {
            let s = match &w {
                Some(w) => s.restrict_to_window(w)?,
                None => s,
            };
            report::verdict_set(label, &s, &check_set(&s, label)?)
        }
        Object::Fn(f) => {
            let f = match &w {
                Some(w) => f.restrict_to_window(w)?,
                None => f,
            };
            report::verdict_fn(label, &f, &check_fn(&f, label)?)
        }
    };
    let text = match format {
        Format::Text => report::verdict_text(&verdict),
        Format::Json => Document::new(doc::Kind::Report, &verdict).to_json(),
    };
    Ok(Outcome {
        text,
        status: if verdict.member { EXIT_OK } else { EXIT_NEGATIVE },
    })
}

pub fn cmd_op(
    op: OpName,
    inputs: &[PathBuf],
    spec: Option<&Path>,
    window: Option<&Path>,
) -> Result<Document> {
    let arity = match op {
        OpName::Split | OpName::Aggregate => 1,
        _ => 2,
    };
    ensure!(
        inputs.len() == arity,
        "`{}` takes {arity} input document(s), got {}",
        op.to_possible_value().expect("named").get_name(),
        inputs.len()
    );
    let objs = inputs.iter().map(|p| read_object(p)).collect::<Result<Vec<_>>>()?;
    let w = read_window(window)?;
    let spec_doc = spec.map(Document::read).transpose()?;
    let need_spec = |kind: &str| {
        spec_doc
            .as_ref()
            .with_context(|| format!("`--spec` with a {kind} document is required"))
    };
    let out = match (op, &objs[..]) {
        (OpName::DirectSum, [Object::Set(a), Object::Set(b)]) => {
            Object::Set(ops::direct_sum_set(a, b)?)
        }
        (OpName::DirectSum, [Object::Fn(a), Object::Fn(b)]) => {
            Object::Fn(ops::direct_sum_fn(a, b)?)
        }
        (OpName::Minkowski, [Object::Set(a), Object::Set(b)]) => {
            Object::Set(ops::minkowski_sum_set(a, b)?)
        }
        (OpName::Convolve, [Object::Fn(a), Object::Fn(b)]) => {
            Object::Fn(ops::convolution_fn(a, b)?)
        }
        (OpName::Split, [o]) => {
            let spec = doc::to_split(need_spec("split-spec")?)?;
            let w = w.as_ref().context(
                "`split` needs `--window` bounding the output, since splitting is unbounded",
            )?;
            return Ok(doc::object_doc(&match o {
                Object::Set(s) => Object::Set(ops::split_set(s, &spec, w)?),
                Object::Fn(f) => Object::Fn(ops::split_fn(f, &spec, w)?),
            }));
        }
        (OpName::Aggregate, [o]) => {
            let spec = doc::to_partition(need_spec("partition-spec")?)?;
            match o {
                Object::Set(s) => Object::Set(ops::aggregate_set(s, &spec)?),
                Object::Fn(f) => Object::Fn(ops::aggregate_fn(f, &spec)?),
            }
        }
        (OpName::Minkowski, _) => bail!("`minkowski` takes two set documents"),
        (OpName::Convolve, _) => bail!("`convolve` takes two fn documents"),
        _ => bail!("`direct-sum` takes two documents of the same kind"),
    };
    Ok(doc::object_doc(&restrict(out, w.as_ref())?))
}

fn restrict(o: Object, w: Option<&Window>) -> Result<Object> {
    Ok(match (o, w) {
        (o, None) => o,
        (Object::Set(s), Some(w)) => Object::Set(s.restrict_to_window(w)?),
        (Object::Fn(f), Some(w)) => Object::Fn(f.restrict_to_window(w)?),
    })
}

pub fn cmd_induce(network: &Path, input: &Path, window: Option<&Path>) -> Result<Document> {
    let net = doc::to_network(&Document::read(network)?)
        .with_context(|| format!("in {}", network.display()))?;
    let w = read_window(window)?;
    let out = match read_object(input)? {
        Object::Set(s) => Object::Set(transform_set(&s, &net)?),
        Object::Fn(f) => Object::Fn(induce_fn(&f, &net)?),
    };
    Ok(doc::object_doc(&restrict(out, w.as_ref())?))
}

pub fn cmd_matrix(trials: usize, seed: u64, max_dim: usize, format: Format) -> Result<Outcome> {
    let r = closure_matrix(trials, seed, max_dim)?;
    let text = match format {
        Format::Text => r.render(),
        Format::Json => report::matrix_doc(&r).to_json(),
    };
    Ok(Outcome {
        text,
        status: if r.matches_tables() { EXIT_OK } else { EXIT_NEGATIVE },
    })
}

pub fn cmd_examples(which: &str, format: Format) -> Result<Outcome> {
    let reports = if which.eq_ignore_ascii_case("all") {
        run_counterexamples()?
    } else {
        match run_record(which) {
            Some(r) => vec![r?],
            None => {
                let ids: Vec<&str> = dconv_core::lab::records().iter().map(|r| r.id).collect();
                bail!("unknown record `{which}`; known ids: {}", ids.join(", "))
            }
        }
    };
    let passed = reports.iter().all(|r| r.passed());
    let text = match format {
        Format::Text => {
            let mut t: String = reports.iter().map(|r| r.to_string()).collect();
            t += if passed { "all records pass\n" } else { "some records FAILED\n" };
            t
        }
        Format::Json => report::examples_doc(&reports).to_json(),
    };
    Ok(Outcome {
        text,
        status: if passed { EXIT_OK } else { EXIT_NEGATIVE },
    })
}
