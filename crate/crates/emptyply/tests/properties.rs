use emptyply::constructions::{orthogonal_tree, small_layout, star24};
use emptyply::drawing::{Drawing, Graph};
use emptyply::geometry::Point;
use emptyply::plycore::{count_crossings, is_empty_ply, max_depth, ply, vertex_ply};
use emptyply::search::penalty;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_drawing() -> impl Strategy<Value = Drawing> {
    (2usize..9)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
            let m = pairs.len();
            (
                Just(n),
                prop::collection::vec(any::<bool>(), m)
                    .prop_filter("at least one edge", |mask| mask.iter().any(|&b| b)),
                prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n),
            )
                .prop_map(move |(n, mask, coords)| {
                    let edges: Vec<(usize, usize)> = pairs
                        .iter()
                        .zip(&mask)
                        .filter(|(_, &keep)| keep)
                        .map(|(&e, _)| e)
                        .collect();
                    Drawing::new(
                        Graph::new(n, edges).unwrap(),
                        coords.iter().map(|&(x, y)| Point::new(x, y)).collect(),
                    )
                })
        })
        .prop_filter("valid drawing", |d| d.validate().is_empty())
}

fn transformed(d: &Drawing, scale: f64, theta: f64, tx: f64, ty: f64) -> Drawing {
    let (c, s) = (theta.cos(), theta.sin());
    Drawing::new(
        d.graph.clone(),
        d.positions
            .iter()
            .map(|p| Point::new(scale * (c * p.x - s * p.y) + tx, scale * (s * p.x + c * p.y) + ty))
            .collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn similarity_invariance(d in small_drawing(),
                             scale in 0.2f64..5.0,
                             theta in 0.0f64..6.28,
                             tx in -3.0f64..3.0,
                             ty in -3.0f64..3.0) {
        let t = transformed(&d, scale, theta, tx, ty);
        prop_assert!(t.validate().is_empty());
        prop_assert_eq!(ply(&d).unwrap().0, ply(&t).unwrap().0);
        prop_assert_eq!(vertex_ply(&d).unwrap().0, vertex_ply(&t).unwrap().0);
        prop_assert_eq!(is_empty_ply(&d).unwrap().0, is_empty_ply(&t).unwrap().0);
        let (ca, cb) = (count_crossings(&d), count_crossings(&t));
        prop_assert_eq!(ca.proper, cb.proper);
        prop_assert_eq!(ca.collinear_overlap, cb.collinear_overlap);
    }

    #[test]
    fn penalty_rigid_invariance_and_scaling(d in small_drawing(),
                                            scale in 0.5f64..3.0,
                                            theta in 0.0f64..6.28,
                                            tx in -3.0f64..3.0,
                                            ty in -3.0f64..3.0) {
        let p0 = penalty(&d).unwrap();
        let rigid = penalty(&transformed(&d, 1.0, theta, tx, ty)).unwrap();
        prop_assert!((rigid - p0).abs() <= 1e-9 * p0.max(1.0));
        let scaled = penalty(&transformed(&d, scale, 0.0, 0.0, 0.0)).unwrap();
        prop_assert!((scaled - scale * scale * p0).abs() <= 1e-8 * (scale * scale * p0).max(1.0));
    }

    #[test]
    fn vertex_ply_at_most_ply(d in small_drawing()) {
        prop_assert!(vertex_ply(&d).unwrap().0 <= ply(&d).unwrap().0);
    }

    #[test]
    fn max_depth_at_least_one(d in small_drawing()) {
        let set = d.ply_disks().unwrap();
        let disks: Vec<_> = set.active_disks().map(|(_, disk)| disk).collect();
        let (depth, witness) = max_depth(&disks).unwrap();
        prop_assert!(depth >= 1);
        // the reported depth is attained in every neighbourhood of the
        // witness, so the closed disks through it must account for it
        let closed = disks
            .iter()
            .filter(|disk| witness.dist(&disk.center) <= disk.radius * (1.0 + 1e-9))
            .count();
        prop_assert!(closed >= depth);
    }
}

/// `penalty == 0` exactly when the drawing is empty-ply, checked on the
/// bundled corpus and a batch of random drawings.
#[test]
fn penalty_zero_iff_empty_ply() {
    let mut cases: Vec<Drawing> = vec![
        star24(),
        small_layout("K7").unwrap(),
        small_layout("K2_12").unwrap(),
        small_layout("K3_9").unwrap(),
        small_layout("K4_6").unwrap(),
        orthogonal_tree(2, 0.5, 6).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    while cases.len() < 506 {
        let n = rng.gen_range(2..12);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.gen::<f64>() < 0.4 {
                    edges.push((i, j));
                }
            }
        }
        if edges.is_empty() {
            continue;
        }
        let d = Drawing::new(
            Graph::new(n, edges).unwrap(),
            (0..n).map(|_| Point::new(rng.gen::<f64>(), rng.gen::<f64>())).collect(),
        );
        if d.validate().is_empty() {
            cases.push(d);
        }
    }
    for (i, d) in cases.iter().enumerate() {
        let empty = is_empty_ply(d).unwrap().0;
        let p = penalty(d).unwrap();
        assert_eq!(p == 0.0, empty, "case {i}: penalty {p}, empty-ply {empty}");
    }
}
