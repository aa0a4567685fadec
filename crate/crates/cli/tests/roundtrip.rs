use dconv_cli::doc::{self, Document};
use dconv_core::network::{Arc, ArcCost, Network};
use dconv_core::ops::{PartitionSpec, SplitSpec};
use dconv_core::{rat, LatticeFn, LatticeSet, Point, Window};
use proptest::prelude::*;

fn points(dim: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec(prop::collection::vec(-5i64..=5, dim), 1..12)
        .prop_map(|v| v.into_iter().map(Point::new).collect())
}

fn reparse(d: &Document) -> Document {
    let back = Document::parse(&d.to_json()).unwrap();
    assert_eq!(&back, d);
    back
}

proptest! {
    #[test]
    fn sets(dim in 1usize..4, pts in (1usize..4).prop_flat_map(points), lifted in any::<bool>()) {
        let pts: Vec<Point> = pts.into_iter().map(|p| {
            let mut c = p.into_coords();
            c.resize(dim, 0);
            if lifted { *c.last_mut().unwrap() = 0; }
            Point::new(c)
        }).collect();
        let s = if lifted { LatticeSet::lifted(dim, pts) } else { LatticeSet::new(dim, pts) }.unwrap();
        prop_assert_eq!(doc::to_set(&reparse(&doc::set_doc(&s))).unwrap(), s);
    }

    #[test]
    fn functions(
        pts in points(2),
        vals in prop::collection::vec((-50i64..50, 1i64..7), 12),
        ramp in (-9i64..9, 1i64..5),
        lifted in any::<bool>(),
    ) {
        let entries: std::collections::BTreeMap<Point, _> = pts.into_iter().zip(vals).map(|(p, (n, d))| {
            let p = if lifted { Point::new(vec![p[0], 0]) } else { p };
            (p, rat(n, d))
        }).collect();
        let f = if lifted {
            LatticeFn::lifted(2, entries, rat(ramp.0, ramp.1))
        } else {
            LatticeFn::new(2, entries)
        }.unwrap();
        prop_assert_eq!(doc::to_fn(&reparse(&doc::fn_doc(&f))).unwrap(), f);
    }

    #[test]
    fn specs_and_windows(blocks in prop::collection::vec(1usize..4, 1..5), lo in prop::collection::vec(-4i64..=0, 3), ext in prop::collection::vec(0i64..4, 3)) {
        let sp = SplitSpec::new(blocks).unwrap();
        prop_assert_eq!(doc::to_split(&reparse(&doc::split_doc(&sp))).unwrap(), sp);
        let hi: Vec<i64> = lo.iter().zip(&ext).map(|(a, e)| a + e).collect();
        let w = Window::new(Point::new(lo), Point::new(hi)).unwrap();
        prop_assert_eq!(doc::to_window(&reparse(&doc::window_doc(&w))).unwrap(), w);
    }

    #[test]
    fn networks(lo in -3i64..=0, hi in 0i64..=3, a in 0i64..4, b in -5i64..5) {
        let cost = ArcCost::from_fn(lo, hi, |t| rat(a * t * t + b * t, 2));
        let net = Network::new(
            vec!["u".into(), "m".into(), "w".into()],
            vec![Arc::new("u", "m", lo, hi, cost), Arc::new("m", "w", lo, hi, ArcCost::Zero)],
            vec!["u".into()],
            vec!["w".into()],
        ).unwrap();
        prop_assert_eq!(doc::to_network(&reparse(&doc::network_doc(&net))).unwrap(), net);
    }
}

#[test]
fn partitions() {
    let p = PartitionSpec::new(vec![vec![0, 3], vec![2], vec![1, 4]]).unwrap();
    assert_eq!(doc::to_partition(&doc::partition_doc(&p)).unwrap(), p);
    assert_eq!(Document::parse(&doc::partition_doc(&p).to_json()).unwrap(), doc::partition_doc(&p));
}
