//! Acceptance gate. Runs every criterion, prints one line each and exits
//! non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use dconv_core::classes::{argmin_perturbed, multimodular_polyhedral_check};
use dconv_core::hull::{in_local_hull, HalfPoint};
use dconv_core::lab::{
    closure_matrix, degree_fn, laminar_tree_network, run_counterexamples, run_record, Observed,
};
use dconv_core::network::{induce_fn, transform_set, Network};
use dconv_core::ops::{
    aggregate_fn, aggregate_set, convolution_fn, convolution_via_aggregation,
    minkowski_sum_set, minkowski_sum_via_aggregation, split_fn, split_set, PartitionSpec,
    SplitSpec,
};
use dconv_core::{
    check_fn, check_set, int, midpoint_round, rat, ClassLabel, DMatrix, DTransform, LatticeFn,
    LatticeSet, Point, Rational, Value, Witness,
};
use rand::seq::SliceRandom;
use rand::Rng;

const REGISTRY_LIMIT: Duration = Duration::from_secs(1);
const MATRIX_LIMIT: Duration = Duration::from_secs(600);
const LAMINAR_LIMIT: Duration = Duration::from_secs(5);
const MATRIX_SEED: u64 = 20240601;

type Check = Result<String, String>;
type Criterion = fn() -> Check;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn registry() -> Check {
    let start = Instant::now();
    let reports = run_counterexamples().map_err(|e| e.to_string())?;
    let t = within(start, REGISTRY_LIMIT)?;
    ensure(reports.len() == 9, || format!("{} records, expected 9", reports.len()))?;
    for r in &reports {
        ensure(r.passed(), || format!("record failed:\n{r}"))?;
    }

    let t_set = set(3, &[&[0, 0, 0], &[0, 1, 1], &[1, 1, 0], &[1, 2, 1]]);
    let v = check_set(&t_set, ClassLabel::LNatSet).map_err(|e| e.to_string())?;
    ensure(
        v.witness == Some(Witness::RoundedMidpoint { x: p(&[0, 1, 1]), y: p(&[1, 1, 0]) }),
        || format!("aggregated L♮ set witness {:?}", v.witness),
    )?;

    // x1² + x1x2 + x2² ⊕ 0 at x=(1,0,0), y=(0,1,2), ⌈⌉=(1,1,1), ⌊⌋=(0,0,1).
    let q = |a: i64, b: i64| a * a + a * b + b * b;
    ensure(q(1, 0) + q(0, 1) == 2 && q(1, 1) + q(0, 0) == 3, || "closed form".into())?;
    let ex41 = run_record("EX4.1").unwrap().map_err(|e| e.to_string())?;
    ensure(
        ex41.claims.iter().any(|c| c.statement.contains("2 < 3") && c.holds()),
        || "inequality 2 < 3 not replayed".into(),
    )?;
    Ok(format!("9/9 records replay in {t:.2?}"))
}

fn matrix() -> Check {
    let start = Instant::now();
    let r = closure_matrix(100, MATRIX_SEED, 4).map_err(|e| e.to_string())?;
    let t = within(start, MATRIX_LIMIT)?;
    ensure(r.matches_tables(), || r.render())?;
    ensure(r.sets.len() == 40 && r.functions.len() == 44, || "table shape".into())?;
    let mut y = 0;
    for c in r.cells() {
        if c.cell.expected {
            y += 1;
            ensure(
                c.observed == Observed::Closed && c.trials_run == 100 && c.trials_passed == 100,
                || format!("({}, {}) passed {}/{}", c.cell.label, c.cell.op, c.trials_passed, c.trials_run),
            )?;
        } else {
            ensure(c.claims_checked > 0, || format!("({}, {}) has no replayed claims", c.cell.label, c.cell.op))?;
        }
    }
    Ok(format!("84 cells match, {y} Y-cells at 100/100 trials, {t:.1?}"))
}

/// Member, perturbed member or unstructured function, in rotation.
fn roundtrip_instance(k: usize, n: usize, rng: &mut impl Rng) -> LatticeFn {
    match k % 3 {
        0 => member_fn(ClassLabel::MultimodularFn, n, k as u64),
        1 => {
            let f = member_fn(ClassLabel::MultimodularFn, n, k as u64);
            let mut e: Vec<(Point, Rational)> = f.entries().map(|(x, v)| (x.clone(), *v)).collect();
            let i = rng.gen_range(0..e.len());
            if e.len() > 1 && rng.gen_bool(0.5) {
                e.remove(i);
            } else {
                e[i].1 += rat(rng.gen_range(-2..=2), 2);
            }
            LatticeFn::new(n, e).unwrap()
        }
        _ => random_fn(rng, &cube(n, -1, 1), 0.6),
    }
}

fn roundtrip() -> Check {
    let mut rng = rng(3);
    let (mut members, mut others) = (0, 0);
    for n in [2, 3, 4] {
        let d = DMatrix::new(n);
        for k in 0..200 {
            let f = roundtrip_instance(k, n, &mut rng);
            let g = f.d_transform().map_err(|e| e.to_string())?;
            let vm = check_fn(&f, ClassLabel::MultimodularFn).unwrap();
            let vl = check_fn(&g, ClassLabel::LNatFn).unwrap();
            ensure(vm.member == vl.member, || format!("verdicts differ on {f}"))?;
            if vm.member {
                members += 1;
                continue;
            }
            others += 1;
            // The multimodular witness is a submodularity failure of the
            // lift of the pullback.
            let wm = vm.witness.unwrap();
            let lift_g = LatticeFn::lifted(
                n + 1,
                g.entries().map(|(q, v)| (p(&[0]).concat(q), *v)),
                int(0),
            )
            .unwrap();
            ensure(
                wm.replay_fn(ClassLabel::MultimodularFn, &f) && wm.replay_fn(ClassLabel::LFn, &lift_g),
                || format!("{wm} does not map through D for {f}"),
            )?;
            // The L♮ witness pushed forward by D violates midpoint
            // convexity of f∘D at points of dom f.
            let Some(Witness::RoundedMidpoint { x, y }) = vl.witness else {
                return Err(format!("unexpected L♮ witness {:?}", vl.witness));
            };
            let (up, down) = midpoint_round(&x, &y).unwrap();
            let fd = |q: &Point| f.value(&d.apply(q));
            ensure(
                fd(&x).is_finite() && fd(&y).is_finite() && fd(&x) == g.value(&x),
                || "L♮ witness does not land in dom f".into(),
            )?;
            ensure(
                !(fd(&x) + fd(&y) >= fd(&up) + fd(&down)),
                || format!("L♮ witness {x},{y} satisfied after mapping by D"),
            )?;
        }
    }
    ensure(members > 0 && others > 0, || "one-sided sample".into())?;
    Ok(format!("600 functions agree ({members} members, {others} with mapped witnesses)"))
}

fn polyhedral() -> Check {
    for k in 0..100u64 {
        let n = 2 + (k % 3) as usize;
        let s = member_set(ClassLabel::MultimodularSet, n, k);
        let w = s.bounding_box();
        ensure(multimodular_polyhedral_check(&s, &w).unwrap(), || format!("rejected {s}"))?;
    }
    let t = set(3, &[&[0, 0, 0], &[0, 1, 0], &[1, 0, -1], &[1, 1, -1]]);
    ensure(!check_set(&t, ClassLabel::MultimodularSet).unwrap().member, || "T̃ accepted".into())?;
    ensure(
        !multimodular_polyhedral_check(&t, &cube(3, -2, 2)).unwrap(),
        || "interval bounds describe T̃".into(),
    )?;
    Ok("100 multimodular sets described by interval bounds; T̃ is not".into())
}

fn argmin_holds(f: &LatticeFn, set_label: ClassLabel, cs: &[Vec<Rational>]) -> Result<usize, String> {
    for c in cs {
        let mut c = c.clone();
        if f.is_lifted() {
            let head: Rational = c[..c.len() - 1].iter().sum();
            *c.last_mut().unwrap() = f.ramp() - head;
        }
        let a = argmin_perturbed(f, &c).map_err(|e| e.to_string())?;
        ensure(check_set(&a, set_label).unwrap().member, || {
            format!("argmin at c={c:?} is not {set_label}: {a} (f = {f})")
        })?;
    }
    Ok(cs.len())
}

/// Jump M-convex function on a degree system restricted to `{0,1}^n`.
fn jump_m_01(n: usize, rng: &mut impl Rng) -> LatticeFn {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.7) {
                edges.push((a, b));
            }
        }
    }
    let weights: Vec<Rational> = edges.iter().map(|_| rat(rng.gen_range(-6..=6), 2)).collect();
    degree_fn(n, &edges, &weights)
        .unwrap()
        .restrict_to_window(&cube(n, 0, 1))
        .unwrap()
}

fn argmin() -> Check {
    use ClassLabel::*;
    let mut rng = rng(5);
    let pairs = [
        (SeparableConvex, IntegerBox),
        (IntegrallyConvexFn, IntegrallyConvexSet),
        (LNatFn, LNatSet),
        (LFn, LSet),
        (MNatFn, MNatSet),
        (MFn, MSet),
        (MultimodularFn, MultimodularSet),
        (JumpMFn, ConstParityJump),
    ];
    let mut checks = 0;
    for (fl, sl) in pairs {
        for k in 0..50u64 {
            let n = 2 + (k % 2) as usize;
            let f = if fl == JumpMFn {
                jump_m_01(n + (k % 3 == 0) as usize, &mut rng)
            } else {
                member_fn(fl, n, 1000 + k)
            };
            ensure(check_fn(&f, fl).unwrap().member, || format!("instance not {fl}: {f}"))?;
            let cs = c_samples(f.dim(), 50, &mut rng);
            checks += argmin_holds(&f, sl, &cs)?;
        }
    }

    // Jump M argmin sets of the α=1, β=2 family are c.p. jump systems,
    // yet the function is not jump M-convex.
    let dom = LatticeSet::new(2, cube(2, 0, 4).points().filter(|x| x.sum() % 2 == 0)).unwrap();
    let f = LatticeFn::from_fn(&dom, |x| match x[0] {
        1 => int(1),
        3 => int(2),
        _ => int(0),
    })
    .unwrap();
    ensure(!check_fn(&f, JumpMFn).unwrap().member, || "α≠β accepted as jump M".into())?;
    checks += argmin_holds(&f, ConstParityJump, &c_samples(2, 50, &mut rng))?;
    let at0 = argmin_perturbed(&f, &[int(0), int(0)]).unwrap();
    let even = LatticeSet::new(2, dom.iter().filter(|x| x[0] % 2 == 0 && x[1] % 2 == 0).cloned()).unwrap();
    ensure(at0 == even, || format!("argmin at c=0 is {at0}"))?;
    Ok(format!("8 classes x 50 instances, {checks} argmin sets in class; α=1, β=2 family reproduced"))
}

fn laminar() -> Check {
    let start = Instant::now();
    let net = laminar_tree_network().map_err(|e| e.to_string())?;
    let zero = LatticeFn::new(1, (-6..=6).map(|t| (p(&[t]), int(0)))).unwrap();
    let h = induce_fn(&zero, &net).map_err(|e| e.to_string())?;
    let g = |y: &Point| {
        let s = y[0] + y[1];
        Value::from(int((s + y[2]).abs() + s * s + y[2] * y[2]))
    };
    let mut evals = 0;
    for y in cube(3, -2, 2).points() {
        ensure(h.value(&y) == g(&y), || format!("induced {} ≠ {} at {y}", h.value(&y), g(&y)))?;
        evals += 1;
    }
    ensure(h.len() == evals, || format!("domain has {} points", h.len()))?;
    ensure(check_fn(&h, ClassLabel::MNatFn).unwrap().member, || "not M♮".into())?;
    let t = within(start, LAMINAR_LIMIT)?;
    Ok(format!("{evals} points of [−2,2]³ match, M♮, {t:.2?}"))
}

fn random_partition(n: usize, rng: &mut impl Rng) -> PartitionSpec {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    let k = rng.gen_range(1..n);
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (j, i) in idx.into_iter().enumerate() {
        groups[if j < k { j } else { rng.gen_range(0..k) }].push(i);
    }
    PartitionSpec::new(groups).unwrap()
}

fn composition() -> Check {
    let mut rng = rng(7);
    for _ in 0..100 {
        let n = rng.gen_range(1..=3);
        let (w1, w2) = (cube(n, -1, 1), cube(n, 0, 2));
        let (a, b) = (random_set(&mut rng, &w1, 0.4), random_set(&mut rng, &w2, 0.4));
        let direct = minkowski_sum_set(&a, &b).unwrap();
        ensure(direct == brute_minkowski(&a, &b), || "minkowski vs brute force".into())?;
        ensure(direct == minkowski_sum_via_aggregation(&a, &b).unwrap(), || "minkowski paths".into())?;
        let (f, g) = (random_fn(&mut rng, &w1, 0.5), random_fn(&mut rng, &w2, 0.5));
        let direct = convolution_fn(&f, &g).unwrap();
        ensure(direct == brute_convolution(&f, &g), || "convolution vs brute force".into())?;
        ensure(direct == convolution_via_aggregation(&f, &g).unwrap(), || "convolution paths".into())?;
    }
    for _ in 0..50 {
        let n = rng.gen_range(1..=2);
        let s = random_set(&mut rng, &cube(n, -1, 1), 0.5);
        let f = random_fn(&mut rng, &cube(n, -1, 1), 0.5);
        let blocks: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
        let spec = SplitSpec::new(blocks).unwrap();
        let w = cube(spec.total(), -1, 1);
        let net = Network::splitting(&spec, &w).unwrap();
        ensure(
            split_set(&s, &spec, &w).unwrap() == transform_set(&s, &net).unwrap(),
            || "split network vs split_set".into(),
        )?;
        ensure(
            split_fn(&f, &spec, &w).unwrap() == induce_fn(&f, &net).unwrap(),
            || "split network vs split_fn".into(),
        )?;

        let m = rng.gen_range(2..=4);
        let s = random_set(&mut rng, &cube(m, -1, 1), 0.4);
        let f = random_fn(&mut rng, &cube(m, -1, 1), 0.4);
        let part = random_partition(m, &mut rng);
        let net = Network::aggregation(&part, &cube(m, -1, 1)).unwrap();
        ensure(
            aggregate_set(&s, &part).unwrap() == transform_set(&s, &net).unwrap(),
            || "aggregation network vs aggregate_set".into(),
        )?;
        ensure(
            aggregate_fn(&f, &part).unwrap() == induce_fn(&f, &net).unwrap(),
            || "aggregation network vs aggregate_fn".into(),
        )?;
    }
    Ok("100 Minkowski/convolution identities, 50 bipartite split/aggregate reproductions".into())
}

fn hull() -> Check {
    let mut rng = rng(11);
    let (mut inside, mut outside) = (0, 0);
    for _ in 0..500 {
        let n = rng.gen_range(1..=3);
        let s = random_set(&mut rng, &cube(n, -1, 2), 0.5);
        let x = if rng.gen_bool(0.5) {
            let pts: Vec<&Point> = s.iter().collect();
            HalfPoint::midpoint(pts.choose(&mut rng).unwrap(), pts.choose(&mut rng).unwrap()).unwrap()
        } else {
            HalfPoint::from_twice((0..n).map(|_| rng.gen_range(-2..=4)).collect())
        };
        let got = in_local_hull(&s, &x);
        ensure(got == hull_oracle(&s, &x), || format!("disagree at {x:?} for {s}"))?;
        if got {
            inside += 1;
        } else {
            outside += 1;
        }
    }
    ensure(inside > 50 && outside > 50, || format!("lopsided sample {inside}/{outside}"))?;
    Ok(format!("500 queries agree ({inside} inside, {outside} outside)"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("counterexample registry", registry),
        ("closure matrix", matrix),
        ("multimodular/L♮ roundtrip", roundtrip),
        ("multimodular polyhedral description", polyhedral),
        ("argmin characterizations", argmin),
        ("laminar network induction", laminar),
        ("composition identities", composition),
        ("hull oracle equivalence", hull),
    ];
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(msg) => println!("criterion {id} PASS {name}: {msg} [{secs:.2}s]"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id} FAIL {name}: {msg} [{secs:.2}s]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
