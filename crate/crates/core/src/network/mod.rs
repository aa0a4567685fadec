//! Transformation of sets and induction of functions through networks
//! with integer arc capacities and convex arc costs.
//!
//! Everything is computed by enumerating every capacity-feasible integral
//! flow that is conserved at internal vertices, so instances are capped at
//! [`MAX_ARCS`] arcs with capacity intervals of width at most
//! [`MAX_WIDTH`].

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::lattice::{int, LatticeFn, LatticeSet, Point, Rational, Window};
use crate::ops::{PartitionSpec, SplitSpec};

pub const MAX_ARCS: usize = 12;
pub const MAX_WIDTH: i64 = 12;

/// Cost of an arc as a function of its flow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArcCost {
    Zero,
    /// Values on every integer of the capacity interval.
    Table(BTreeMap<i64, Rational>),
}

impl ArcCost {
    /// Tabulates `phi` on `[lower, upper]`.
    pub fn from_fn(lower: i64, upper: i64, phi: impl Fn(i64) -> Rational) -> Self {
        ArcCost::Table((lower..=upper).map(|t| (t, phi(t))).collect())
    }

    pub fn value(&self, t: i64) -> Rational {
        match self {
            ArcCost::Zero => int(0),
            ArcCost::Table(tab) => tab[&t],
        }
    }

    fn validate(&self, lower: i64, upper: i64) -> Result<()> {
        let ArcCost::Table(tab) = self else {
            return Ok(());
        };
        if tab.keys().copied().ne(lower..=upper) {
            return Err(Error::InvalidNetwork(format!(
                "cost table must cover exactly the capacity interval [{lower}, {upper}]"
            )));
        }
        for t in lower + 1..upper {
            if tab[&(t - 1)] + tab[&(t + 1)] < tab[&t] + tab[&t] {
                return Err(Error::InvalidNetwork(format!("arc cost is not convex at t={t}")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub tail: String,
    pub head: String,
    pub lower: i64,
    pub upper: i64,
    pub cost: ArcCost,
}

impl Arc {
    pub fn new(tail: &str, head: &str, lower: i64, upper: i64, cost: ArcCost) -> Self {
        Arc {
            tail: tail.to_string(),
            head: head.to_string(),
            lower,
            upper,
            cost,
        }
    }
}

/// A directed graph with entrance vertices `U`, exit vertices `W` and
/// capacitated, costed arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    vertices: Vec<String>,
    arcs: Vec<Arc>,
    entrance: Vec<String>,
    exit: Vec<String>,
    ends: Vec<(usize, usize)>,
    entrance_idx: Vec<usize>,
    exit_idx: Vec<usize>,
}

impl Network {
    pub fn new(
        vertices: Vec<String>,
        arcs: Vec<Arc>,
        entrance: Vec<String>,
        exit: Vec<String>,
    ) -> Result<Self> {
        let mut index = HashMap::new();
        for (k, v) in vertices.iter().enumerate() {
            if index.insert(v.as_str(), k).is_some() {
                return Err(Error::InvalidNetwork(format!("duplicate vertex `{v}`")));
            }
        }
        let lookup = |v: &str| {
            index
                .get(v)
                .copied()
                .ok_or_else(|| Error::InvalidNetwork(format!("unknown vertex `{v}`")))
        };
        if arcs.len() > MAX_ARCS {
            return Err(Error::InvalidNetwork(format!(
                "{} arcs exceed the enumeration cap of {MAX_ARCS}",
                arcs.len()
            )));
        }
        let mut ends = Vec::with_capacity(arcs.len());
        for a in &arcs {
            if a.lower > a.upper {
                return Err(Error::InvalidNetwork(format!(
                    "arc {}→{} has lower bound above upper bound",
                    a.tail, a.head
                )));
            }
            if a.upper - a.lower > MAX_WIDTH {
                return Err(Error::InvalidNetwork(format!(
                    "arc {}→{} has capacity width {} above the cap of {MAX_WIDTH}",
                    a.tail,
                    a.head,
                    a.upper - a.lower
                )));
            }
            a.cost.validate(a.lower, a.upper)?;
            ends.push((lookup(&a.tail)?, lookup(&a.head)?));
        }
        let entrance_idx = entrance.iter().map(|v| lookup(v)).collect::<Result<Vec<_>>>()?;
        let exit_idx = exit.iter().map(|v| lookup(v)).collect::<Result<Vec<_>>>()?;
        if entrance_idx.is_empty() || exit_idx.is_empty() {
            return Err(Error::InvalidNetwork("entrance and exit sets must be nonempty".into()));
        }
        let mut role = vec![0u8; vertices.len()];
        for &u in &entrance_idx {
            role[u] |= 1;
        }
        for &w in &exit_idx {
            if role[w] & 1 == 1 {
                return Err(Error::InvalidNetwork(format!(
                    "vertex `{}` is both an entrance and an exit",
                    vertices[w]
                )));
            }
            role[w] |= 2;
        }
        if entrance_idx.len() + exit_idx.len()
            != role.iter().filter(|&&r| r != 0).count()
        {
            return Err(Error::InvalidNetwork("entrance or exit list repeats a vertex".into()));
        }
        Ok(Network {
            vertices,
            arcs,
            entrance,
            exit,
            ends,
            entrance_idx,
            exit_idx,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn entrance(&self) -> &[String] {
        &self.entrance
    }

    pub fn exit(&self) -> &[String] {
        &self.exit
    }

    /// One arc `u → w` with capacity `[lower, upper]` and zero cost.
    pub fn identity(lower: i64, upper: i64) -> Result<Self> {
        Network::new(
            vec!["u".into(), "w".into()],
            vec![Arc::new("u", "w", lower, upper, ArcCost::Zero)],
            vec!["u".into()],
            vec!["w".into()],
        )
    }

    /// Bipartite network realizing a splitting: entrance `u_i` feeds the
    /// exits of its block, each arc carrying the window range of its exit
    /// coordinate.
    pub fn splitting(spec: &SplitSpec, w: &Window) -> Result<Self> {
        if w.dim() != spec.total() {
            return Err(Error::DimensionMismatch {
                expected: spec.total(),
                found: w.dim(),
            });
        }
        let n = spec.source_dim();
        let m = spec.total();
        let mut arcs = Vec::with_capacity(m);
        let mut j = 0;
        for (i, &b) in spec.blocks().iter().enumerate() {
            for _ in 0..b {
                arcs.push(Arc::new(&format!("u{i}"), &format!("w{j}"), w.lo()[j], w.hi()[j], ArcCost::Zero));
                j += 1;
            }
        }
        bipartite(n, m, arcs)
    }

    /// Bipartite network realizing an aggregation: entrance `u_i` feeds the
    /// exit of its group, with capacity the range `box_` allows for `x_i`.
    pub fn aggregation(spec: &PartitionSpec, box_: &Window) -> Result<Self> {
        if box_.dim() != spec.source_dim() {
            return Err(Error::DimensionMismatch {
                expected: spec.source_dim(),
                found: box_.dim(),
            });
        }
        let mut arcs = Vec::with_capacity(spec.source_dim());
        for (j, g) in spec.groups().iter().enumerate() {
            for &i in g {
                arcs.push(Arc::new(&format!("u{i}"), &format!("w{j}"), box_.lo()[i], box_.hi()[i], ArcCost::Zero));
            }
        }
        arcs.sort_by_key(|a| a.tail[1..].parse::<usize>().expect("generated name"));
        bipartite(spec.source_dim(), spec.target_dim(), arcs)
    }
}

fn bipartite(n: usize, m: usize, arcs: Vec<Arc>) -> Result<Network> {
    let entrance: Vec<String> = (0..n).map(|i| format!("u{i}")).collect();
    let exit: Vec<String> = (0..m).map(|j| format!("w{j}")).collect();
    let vertices = entrance.iter().chain(&exit).cloned().collect();
    Network::new(vertices, arcs, entrance, exit)
}

/// An integral flow, one value per arc in the network's arc order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flow {
    pub values: Vec<i64>,
}

/// Net supplies `∂ξ` restricted to the entrance and to the exit.
pub fn boundary(flow: &Flow, net: &Network) -> Result<(Point, Point)> {
    if flow.values.len() != net.arcs.len() {
        return Err(Error::InvalidNetwork(format!(
            "flow has {} values for {} arcs",
            flow.values.len(),
            net.arcs.len()
        )));
    }
    let supply = supplies(net, &flow.values);
    Ok((
        Point::new(net.entrance_idx.iter().map(|&u| supply[u]).collect()),
        Point::new(net.exit_idx.iter().map(|&w| supply[w]).collect()),
    ))
}

fn supplies(net: &Network, values: &[i64]) -> Vec<i64> {
    let mut supply = vec![0; net.vertices.len()];
    for (&(t, h), &x) in net.ends.iter().zip(values) {
        supply[t] += x;
        supply[h] -= x;
    }
    supply
}

/// Calls `visit` on every capacity-feasible flow conserved at internal
/// vertices. Arcs are assigned in order; a branch is cut as soon as some
/// internal vertex can no longer balance with its unassigned arcs.
fn enumerate_flows(net: &Network, mut visit: impl FnMut(&[i64])) {
    let nv = net.vertices.len();
    let na = net.arcs.len();
    let mut internal = vec![true; nv];
    for &v in net.entrance_idx.iter().chain(&net.exit_idx) {
        internal[v] = false;
    }
    // reach[k][v]: range of the total contribution to ∂ξ(v) from arcs k..
    let mut reach = vec![vec![(0i64, 0i64); nv]; na + 1];
    for k in (0..na).rev() {
        reach[k] = reach[k + 1].clone();
        let a = &net.arcs[k];
        let (t, h) = net.ends[k];
        if t != h {
            reach[k][t].0 += a.lower;
            reach[k][t].1 += a.upper;
            reach[k][h].0 -= a.upper;
            reach[k][h].1 -= a.lower;
        }
    }
    let balanced = |partial: &[i64], k: usize, v: usize| {
        !internal[v] || (partial[v] + reach[k][v].0 <= 0 && 0 <= partial[v] + reach[k][v].1)
    };
    let mut partial = vec![0i64; nv];
    if !(0..nv).all(|v| balanced(&partial, 0, v)) {
        return;
    }
    let mut values = vec![0i64; na];
    fn go(
        k: usize,
        net: &Network,
        values: &mut Vec<i64>,
        partial: &mut Vec<i64>,
        balanced: &dyn Fn(&[i64], usize, usize) -> bool,
        visit: &mut dyn FnMut(&[i64]),
    ) {
        if k == net.arcs.len() {
            visit(values);
            return;
        }
        let a = &net.arcs[k];
        let (t, h) = net.ends[k];
        for x in a.lower..=a.upper {
            values[k] = x;
            partial[t] += x;
            partial[h] -= x;
            if balanced(partial, k + 1, t) && balanced(partial, k + 1, h) {
                go(k + 1, net, values, partial, balanced, visit);
            }
            partial[t] -= x;
            partial[h] += x;
        }
    }
    go(0, net, &mut values, &mut partial, &balanced, &mut visit);
}

fn check_entrance(net: &Network, dim: usize, lifted: bool, op: &'static str) -> Result<()> {
    if lifted {
        return Err(Error::LiftedInput(op));
    }
    if dim != net.entrance_idx.len() {
        return Err(Error::DimensionMismatch {
            expected: net.entrance_idx.len(),
            found: dim,
        });
    }
    Ok(())
}

/// `T = { y : ∃ feasible ξ with ∂ξ|U ∈ S and ∂ξ|W = −y }`.
pub fn transform_set(s: &LatticeSet, net: &Network) -> Result<LatticeSet> {
    check_entrance(net, s.dim(), s.is_lifted(), "transform_set")?;
    let mut out = Vec::new();
    enumerate_flows(net, |values| {
        let supply = supplies(net, values);
        let x = Point::new(net.entrance_idx.iter().map(|&u| supply[u]).collect());
        if s.contains(&x) {
            out.push(Point::new(net.exit_idx.iter().map(|&w| -supply[w]).collect()));
        }
    });
    if out.is_empty() {
        return Err(Error::Empty("no feasible flow meets the entrance set".into()));
    }
    LatticeSet::new(net.exit_idx.len(), out)
}

/// `g(y) = min{ f(∂ξ|U) + Σ_a φ_a(ξ(a)) : ∂ξ|W = −y }`, `+∞` where no
/// feasible flow exists.
pub fn induce_fn(f: &LatticeFn, net: &Network) -> Result<LatticeFn> {
    check_entrance(net, f.dim(), f.is_lifted(), "induce_fn")?;
    let mut best: BTreeMap<Point, Rational> = BTreeMap::new();
    enumerate_flows(net, |values| {
        let supply = supplies(net, values);
        let x = Point::new(net.entrance_idx.iter().map(|&u| supply[u]).collect());
        let Some(fx) = f.value(&x).finite() else {
            return;
        };
        let cost: Rational = net
            .arcs
            .iter()
            .zip(values)
            .map(|(a, &t)| a.cost.value(t))
            .sum::<Rational>()
            + fx;
        let y = Point::new(net.exit_idx.iter().map(|&w| -supply[w]).collect());
        best.entry(y)
            .and_modify(|b| {
                if cost < *b {
                    *b = cost
                }
            })
            .or_insert(cost);
    });
    if best.is_empty() {
        return Err(Error::Empty("no feasible flow meets the effective domain".into()));
    }
    LatticeFn::new(net.exit_idx.len(), best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{aggregate_set, split_set};

    fn set(dim: usize, v: &[&[i64]]) -> LatticeSet {
        LatticeSet::new(dim, v.iter().map(|p| Point::new(p.to_vec()))).unwrap()
    }

    #[test]
    fn boundary_examples() {
        let net = Network::identity(-5, 5).unwrap();
        let (u, w) = boundary(&Flow { values: vec![3] }, &net).unwrap();
        assert_eq!((u, w), (Point::from([3]), Point::from([-3])));
        let (u, w) = boundary(&Flow { values: vec![0] }, &net).unwrap();
        assert_eq!((u, w), (Point::from([0]), Point::from([0])));
        let par = Network::new(
            vec!["u".into(), "w".into()],
            vec![
                Arc::new("u", "w", 0, 3, ArcCost::Zero),
                Arc::new("u", "w", 0, 3, ArcCost::Zero),
            ],
            vec!["u".into()],
            vec!["w".into()],
        )
        .unwrap();
        let (u, w) = boundary(&Flow { values: vec![1, 2] }, &par).unwrap();
        assert_eq!((u, w), (Point::from([3]), Point::from([-3])));
        assert!(boundary(&Flow { values: vec![1] }, &par).is_err());
    }

    #[test]
    fn identity_network_is_identity() {
        let net = Network::identity(-5, 5).unwrap();
        let s = set(1, &[&[-2], &[0], &[3]]);
        assert_eq!(transform_set(&s, &net).unwrap(), s);
        let f = LatticeFn::new(1, [(Point::from([1]), int(4)), (Point::from([-1]), int(2))]).unwrap();
        assert_eq!(induce_fn(&f, &net).unwrap(), f);
    }

    #[test]
    fn validation() {
        let bad = ArcCost::from_fn(-1, 1, |t| int(-t * t));
        assert!(Network::new(
            vec!["u".into(), "w".into()],
            vec![Arc::new("u", "w", -1, 1, bad)],
            vec!["u".into()],
            vec!["w".into()],
        )
        .is_err());
        assert!(Network::identity(0, 13).is_err());
        assert!(Network::identity(2, 1).is_err());
        assert!(Network::new(
            vec!["u".into()],
            vec![],
            vec!["u".into()],
            vec!["u".into()],
        )
        .is_err());
    }

    #[test]
    fn bipartite_networks_match_ops() {
        let s = set(2, &[&[0, 0], &[1, 1], &[2, 0]]);
        let spec = SplitSpec::new(vec![1, 2]).unwrap();
        let w = Window::cube(3, -1, 2).unwrap();
        let net = Network::splitting(&spec, &w).unwrap();
        assert_eq!(transform_set(&s, &net).unwrap(), split_set(&s, &spec, &w).unwrap());
        let part = PartitionSpec::new(vec![vec![1], vec![0]]).unwrap();
        let net = Network::aggregation(&part, &s.bounding_box()).unwrap();
        assert_eq!(transform_set(&s, &net).unwrap(), aggregate_set(&s, &part).unwrap());
    }

    #[test]
    fn internal_conservation_is_enforced() {
        // u → v → w with v internal: a path carries one common value.
        let net = Network::new(
            vec!["u".into(), "v".into(), "w".into()],
            vec![
                Arc::new("u", "v", 0, 2, ArcCost::Zero),
                Arc::new("v", "w", 1, 3, ArcCost::from_fn(1, 3, |t| int(t * t))),
            ],
            vec!["u".into()],
            vec!["w".into()],
        )
        .unwrap();
        let f = LatticeFn::new(1, (0..=3).map(|x| (Point::from([x]), int(0)))).unwrap();
        let g = induce_fn(&f, &net).unwrap();
        assert_eq!(
            g,
            LatticeFn::new(1, [(Point::from([1]), int(1)), (Point::from([2]), int(4))]).unwrap()
        );
    }
}
