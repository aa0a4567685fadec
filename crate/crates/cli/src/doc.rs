//! On-disk documents: one JSON object per file,
//! `{"kind": ..., "version": 1, "payload": {...}}`.
//!
//! Rationals are strings (`"3"`, `"-1/2"`), `+∞` is `"inf"`, points are
//! integer arrays and coordinate indices are 0-based.

use std::path::Path;

use anyhow::{anyhow, bail, ensure, Context, Result};
use dconv_core::network::{Arc, ArcCost, Network};
use dconv_core::ops::{PartitionSpec, SplitSpec};
use dconv_core::{LatticeFn, LatticeSet, Point, Rational, Value, Window};
use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

pub const VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Set,
    Fn,
    Network,
    SplitSpec,
    PartitionSpec,
    Window,
    Report,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Set => "set",
            Kind::Fn => "fn",
            Kind::Network => "network",
            Kind::SplitSpec => "split-spec",
            Kind::PartitionSpec => "partition-spec",
            Kind::Window => "window",
            Kind::Report => "report",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub kind: Kind,
    pub version: u32,
    pub payload: Json,
}

impl Document {
    pub fn new(kind: Kind, payload: impl Serialize) -> Self {
        Document {
            kind,
            version: VERSION,
            payload: serde_json::to_value(payload).expect("payloads serialize"),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: Document = serde_json::from_str(text).context("malformed document")?;
        ensure!(
            doc.version == VERSION,
            "unsupported document version {} (expected {VERSION})",
            doc.version
        );
        Ok(doc)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        Document::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize") + "\n"
    }

    fn expect(&self, kind: Kind) -> Result<()> {
        ensure!(
            self.kind == kind,
            "expected a `{}` document, found `{}`",
            kind.name(),
            self.kind.name()
        );
        Ok(())
    }

    fn payload<T: for<'de> Deserialize<'de>>(&self, kind: Kind) -> Result<T> {
        self.expect(kind)?;
        serde_json::from_value(self.payload.clone())
            .with_context(|| format!("malformed `{}` payload", kind.name()))
    }
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: i64 = n.parse().map_err(|_| anyhow!("`{s}` is not a rational p/q"))?;
    let d: i64 = d.parse().map_err(|_| anyhow!("`{s}` is not a rational p/q"))?;
    ensure!(d != 0, "zero denominator in `{s}`");
    Ok(Rational::new(n, d))
}

pub fn format_value(v: &Value) -> String {
    match v.finite() {
        Some(r) => format_rational(&r),
        None => "inf".into(),
    }
}

pub fn parse_value(s: &str) -> Result<Value> {
    if s.trim() == "inf" {
        Ok(Value::Infinite)
    } else {
        parse_rational(s).map(Value::from)
    }
}

fn point(coords: &[i64], dim: usize) -> Result<Point> {
    ensure!(
        coords.len() == dim,
        "point {coords:?} has {} coordinates, document states dim {dim}",
        coords.len()
    );
    Ok(Point::new(coords.to_vec()))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SetPayload {
    dim: usize,
    #[serde(default, skip_serializing_if = "is_false")]
    lifted: bool,
    points: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    x: Vec<i64>,
    v: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FnPayload {
    dim: usize,
    #[serde(default, skip_serializing_if = "is_false")]
    lifted: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ramp: Option<String>,
    entries: Vec<EntryDoc>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

pub fn set_doc(s: &LatticeSet) -> Document {
    Document::new(
        Kind::Set,
        SetPayload {
            dim: s.dim(),
            lifted: s.is_lifted(),
            points: s.iter().map(|p| p.coords().to_vec()).collect(),
        },
    )
}

pub fn to_set(doc: &Document) -> Result<LatticeSet> {
    let p: SetPayload = doc.payload(Kind::Set)?;
    ensure!(p.dim >= 1, "dimension must be at least 1");
    let pts = p.points.iter().map(|c| point(c, p.dim)).collect::<Result<Vec<_>>>()?;
    let s = if p.lifted {
        LatticeSet::lifted(p.dim, pts)?
    } else {
        LatticeSet::new(p.dim, pts)?
    };
    Ok(s)
}

pub fn fn_doc(f: &LatticeFn) -> Document {
    Document::new(
        Kind::Fn,
        FnPayload {
            dim: f.dim(),
            lifted: f.is_lifted(),
            ramp: f.is_lifted().then(|| format_rational(&f.ramp())),
            entries: f
                .entries()
                .map(|(x, v)| EntryDoc {
                    x: x.coords().to_vec(),
                    v: format_rational(v),
                })
                .collect(),
        },
    )
}

/// Entries valued `"inf"` are outside the domain and dropped.
pub fn to_fn(doc: &Document) -> Result<LatticeFn> {
    let p: FnPayload = doc.payload(Kind::Fn)?;
    ensure!(p.dim >= 1, "dimension must be at least 1");
    let mut entries = Vec::with_capacity(p.entries.len());
    for e in &p.entries {
        if let Some(v) = parse_value(&e.v)?.finite() {
            entries.push((point(&e.x, p.dim)?, v));
        }
    }
    let f = if p.lifted {
        let ramp = parse_rational(p.ramp.as_deref().unwrap_or("0"))?;
        LatticeFn::lifted(p.dim, entries, ramp)?
    } else {
        ensure!(p.ramp.is_none(), "only lifted functions carry a ramp");
        LatticeFn::new(p.dim, entries)?
    };
    Ok(f)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WindowPayload {
    lo: Vec<i64>,
    hi: Vec<i64>,
}

pub fn window_doc(w: &Window) -> Document {
    Document::new(
        Kind::Window,
        WindowPayload {
            lo: w.lo().coords().to_vec(),
            hi: w.hi().coords().to_vec(),
        },
    )
}

pub fn to_window(doc: &Document) -> Result<Window> {
    let p: WindowPayload = doc.payload(Kind::Window)?;
    Ok(Window::new(Point::new(p.lo), Point::new(p.hi))?)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SplitPayload {
    blocks: Vec<usize>,
}

pub fn split_doc(s: &SplitSpec) -> Document {
    Document::new(
        Kind::SplitSpec,
        SplitPayload {
            blocks: s.blocks().to_vec(),
        },
    )
}

pub fn to_split(doc: &Document) -> Result<SplitSpec> {
    let p: SplitPayload = doc.payload(Kind::SplitSpec)?;
    Ok(SplitSpec::new(p.blocks)?)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionPayload {
    groups: Vec<Vec<usize>>,
}

pub fn partition_doc(s: &PartitionSpec) -> Document {
    Document::new(
        Kind::PartitionSpec,
        PartitionPayload {
            groups: s.groups().to_vec(),
        },
    )
}

pub fn to_partition(doc: &Document) -> Result<PartitionSpec> {
    let p: PartitionPayload = doc.payload(Kind::PartitionSpec)?;
    Ok(PartitionSpec::new(p.groups)?)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CostEntry {
    t: i64,
    v: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArcDoc {
    tail: String,
    head: String,
    /// An integer, or `"-inf"`/`"inf"` which are rejected with a hint.
    lower: Json,
    upper: Json,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cost: Option<Vec<CostEntry>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NetworkPayload {
    vertices: Vec<String>,
    arcs: Vec<ArcDoc>,
    entrance: Vec<String>,
    exit: Vec<String>,
}

pub fn network_doc(net: &Network) -> Document {
    let arcs = net
        .arcs()
        .iter()
        .map(|a| ArcDoc {
            tail: a.tail.clone(),
            head: a.head.clone(),
            lower: a.lower.into(),
            upper: a.upper.into(),
            cost: match &a.cost {
                ArcCost::Zero => None,
                ArcCost::Table(t) => Some(
                    t.iter()
                        .map(|(&t, v)| CostEntry {
                            t,
                            v: format_rational(v),
                        })
                        .collect(),
                ),
            },
        })
        .collect();
    Document::new(
        Kind::Network,
        NetworkPayload {
            vertices: net.vertices().to_vec(),
            arcs,
            entrance: net.entrance().to_vec(),
            exit: net.exit().to_vec(),
        },
    )
}

fn capacity(v: &Json, tail: &str, head: &str) -> Result<i64> {
    if let Some(k) = v.as_i64() {
        return Ok(k);
    }
    if matches!(v.as_str(), Some("inf" | "+inf" | "-inf")) {
        bail!(
            "arc {tail}→{head} has an infinite capacity; flows are enumerated, so every \
             bound must be finite. Replace it by a finite bound no smaller than the largest \
             flow the arc can carry, e.g. the total range of the entrance set"
        );
    }
    bail!("arc {tail}→{head}: capacity must be an integer, found {v}")
}

pub fn to_network(doc: &Document) -> Result<Network> {
    let p: NetworkPayload = doc.payload(Kind::Network)?;
    let mut arcs = Vec::with_capacity(p.arcs.len());
    for a in &p.arcs {
        let lower = capacity(&a.lower, &a.tail, &a.head)?;
        let upper = capacity(&a.upper, &a.tail, &a.head)?;
        let cost = match &a.cost {
            None => ArcCost::Zero,
            Some(table) => ArcCost::Table(
                table
                    .iter()
                    .map(|e| Ok((e.t, parse_rational(&e.v)?)))
                    .collect::<Result<_>>()?,
            ),
        };
        arcs.push(Arc::new(&a.tail, &a.head, lower, upper, cost));
    }
    Ok(Network::new(p.vertices, arcs, p.entrance, p.exit)?)
}

/// A set or function document.
pub enum Object {
    Set(LatticeSet),
    Fn(LatticeFn),
}

pub fn to_object(doc: &Document) -> Result<Object> {
    match doc.kind {
        Kind::Set => Ok(Object::Set(to_set(doc)?)),
        Kind::Fn => Ok(Object::Fn(to_fn(doc)?)),
        k => bail!("expected a `set` or `fn` document, found `{}`", k.name()),
    }
}

pub fn object_doc(o: &Object) -> Document {
    match o {
        Object::Set(s) => set_doc(s),
        Object::Fn(f) => fn_doc(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dconv_core::{int, rat};

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("4").unwrap(), int(4));
        assert_eq!(format_rational(&rat(3, -6)), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_value("inf").unwrap(), Value::Infinite);
        assert_eq!(format_value(&Value::Infinite), "inf");
    }

    #[test]
    fn dimension_is_validated() {
        let d = Document::parse(
            r#"{"kind":"set","version":1,"payload":{"dim":2,"points":[[0,0],[1]]}}"#,
        )
        .unwrap();
        assert!(to_set(&d).unwrap_err().to_string().contains("dim 2"));
    }

    #[test]
    fn infinite_capacity_has_a_hint() {
        let d = Document::parse(
            r#"{"kind":"network","version":1,"payload":{"vertices":["u","w"],
            "arcs":[{"tail":"u","head":"w","lower":0,"upper":"inf"}],
            "entrance":["u"],"exit":["w"]}}"#,
        )
        .unwrap();
        let msg = to_network(&d).unwrap_err().to_string();
        assert!(msg.contains("infinite capacity") && msg.contains("finite bound"));
    }

    #[test]
    fn wrong_kind_and_version() {
        let d = set_doc(&LatticeSet::singleton(Point::from([1])));
        assert!(to_fn(&d).is_err());
        assert!(Document::parse(r#"{"kind":"set","version":7,"payload":{}}"#).is_err());
    }
}
