//! Generators for the graph families and concrete drawing constructions:
//! the degree-24 star, the small complete/bipartite catalog, nested
//! triangles, the theta graph, orthogonal trees, and triangular-tiling
//! patches.

use crate::drawing::{Drawing, Graph};
use crate::format::DrawingDocument;
use crate::geometry::Point;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ConstructionError {
    #[error("{name} is not in the catalog: {citation}")]
    NotAvailable { name: String, citation: String },
    #[error("parameter out of domain: {0}")]
    Domain(String),
}

fn polar(r: f64, theta: f64) -> Point {
    Point::new(r * theta.cos(), r * theta.sin())
}

/// K_{1,24} with exactly two edge lengths: two rings of 12 leaves at radii
/// 1 and 2, the outer ring rotated half a step so no leaf falls in another
/// leaf's disk.
pub fn star24() -> Drawing {
    let g = Graph::new(25, (1..25).map(|i| (0, i))).unwrap();
    let mut pts = vec![Point::new(0.0, 0.0)];
    for i in 0..12 {
        pts.push(polar(1.0, 2.0 * PI * i as f64 / 12.0));
    }
    for i in 0..12 {
        pts.push(polar(2.0, 2.0 * PI * (i as f64 + 0.5) / 12.0));
    }
    Drawing::new(g, pts)
}

const K2_12_JSON: &str = include_str!("../data/k2_12.json");
const K3_9_JSON: &str = include_str!("../data/k3_9.json");

fn complete_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| ((i + 1)..n).map(move |j| (i, j)))
}

fn bipartite_edges(a: usize, b: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..a).flat_map(move |i| (0..b).map(move |j| (i, a + j)))
}

/// Triangular-lattice point (i + j/2, j*sqrt(3)/2).
fn lattice(i: i32, j: i32) -> Point {
    Point::new(i as f64 + j as f64 / 2.0, j as f64 * 3.0f64.sqrt() / 2.0)
}

/// Stored empty-ply layouts of the small complete and complete bipartite
/// graphs. K7 is the regular hexagon plus center; K4_6 lives on the unit
/// triangular lattice (several edges coincide); K2_12 and K3_9 are frozen
/// numerically-found coordinate tables.
pub fn small_layout(name: &str) -> Result<Drawing, ConstructionError> {
    match name {
        "K7" => {
            let g = Graph::new(7, complete_edges(7)).unwrap();
            let mut pts = vec![Point::new(0.0, 0.0)];
            for i in 0..6 {
                pts.push(polar(1.0, 2.0 * PI * i as f64 / 6.0));
            }
            Ok(Drawing::new(g, pts))
        }
        "K2_12" => Ok(DrawingDocument::from_json(K2_12_JSON)
            .expect("bundled table parses")
            .to_drawing()
            .expect("bundled table is a valid drawing")),
        "K3_9" => Ok(DrawingDocument::from_json(K3_9_JSON)
            .expect("bundled table parses")
            .to_drawing()
            .expect("bundled table is a valid drawing")),
        "K4_6" => {
            let g = Graph::new(10, bipartite_edges(4, 6)).unwrap();
            let part_a = [(-1, 0), (0, 0), (0, 1), (-1, 1)];
            let part_b = [(1, 0), (-1, 2), (0, -1), (1, -1), (-2, 1), (-2, 2)];
            let pts = part_a
                .iter()
                .chain(part_b.iter())
                .map(|&(i, j)| lattice(i, j))
                .collect();
            Ok(Drawing::new(g, pts))
        }
        other => Err(ConstructionError::NotAvailable {
            name: other.to_string(),
            citation: if other.starts_with("K") && !other.contains('_') {
                "complete graphs admit empty-ply drawings if and only if n <= 7".into()
            } else {
                "catalog holds K7, K2_12, K3_9, K4_6 only".into()
            },
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NestedVariant {
    /// Equally spaced concentric triangles (level i at radius i+1).
    Natural,
    /// Geometric scaling, crossing-free, ply exactly 4.
    PlanarPly4,
    /// Geometric scaling with alternating 60-degree rotation, ply 5.
    NonplanarPly5,
}

/// Growth ratio for the planar ply-4 layout. Same-level disks stay disjoint
/// and disks three levels apart still (barely) overlap, which is what pins
/// the ply at 4; from ratio ~2.41 on those disks separate and the ply drops
/// to 3.
const NESTED_PLANAR_RHO: f64 = 2.2;
/// Growth ratio for the rotated overlapping layout of the ply-5 figure.
const NESTED_NONPLANAR_RHO: f64 = 1.8;

/// Concentric triangles with consecutive levels joined by three edges.
pub fn nested_triangles(levels: usize, variant: NestedVariant) -> Result<Drawing, ConstructionError> {
    if levels < 2 {
        return Err(ConstructionError::Domain(format!(
            "nested_triangles needs levels >= 2, got {levels}"
        )));
    }
    let (radius, rot_per_level): (Box<dyn Fn(usize) -> f64>, f64) = match variant {
        NestedVariant::Natural => (Box::new(|i| i as f64 + 1.0), 0.0),
        NestedVariant::PlanarPly4 => (Box::new(|i| NESTED_PLANAR_RHO.powi(i as i32)), 0.0),
        NestedVariant::NonplanarPly5 => {
            (Box::new(|i| NESTED_NONPLANAR_RHO.powi(i as i32)), PI / 3.0)
        }
    };
    let mut pts = Vec::with_capacity(3 * levels);
    for i in 0..levels {
        for c in 0..3 {
            let a = PI / 2.0 + 2.0 * PI * c as f64 / 3.0 + rot_per_level * i as f64;
            pts.push(polar(radius(i), a));
        }
    }
    let mut edges = Vec::new();
    for i in 0..levels {
        let b = 3 * i;
        edges.extend([(b, b + 1), (b + 1, b + 2), (b + 2, b)]);
        if i + 1 < levels {
            edges.extend((0..3).map(|c| (b + c, b + 3 + c)));
        }
    }
    Ok(Drawing::new(Graph::new(3 * levels, edges).unwrap(), pts))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaVariant {
    /// Paths drawn inside their triangle, crossing-free.
    Planar,
    /// Paths along the perpendicular bisectors with distances doubling.
    Nonplanar,
}

/// First-hop distance from the hub for the nonplanar layout: far enough
/// that D_u overlaps the first path disks without enclosing their centers.
const THETA_BASE_DISTANCE: f64 = 0.55;

/// The planar 3-tree of the ply-5 / vertex-ply-4 lower-bound construction:
/// outer triangle v1 v2 v3, hub u, and three length-m paths, each path
/// vertex adjacent to the two triangle corners it separates.
pub fn theta_graph(m: usize, variant: ThetaVariant) -> Result<Drawing, ConstructionError> {
    if m < 1 {
        return Err(ConstructionError::Domain("theta_graph needs m >= 1".into()));
    }
    let n = 3 * m + 4;
    let corners: Vec<Point> = (0..3)
        .map(|i| polar(1.0, PI / 2.0 + 2.0 * PI * i as f64 / 3.0))
        .collect();
    let mut pts = corners.clone();
    pts.push(Point::new(0.0, 0.0)); // hub u at the barycenter
    let mut edges = vec![(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)];
    for (pi, (ca, cb)) in [(0usize, 1usize), (1, 2), (2, 0)].into_iter().enumerate() {
        let mid = Point::new(
            (corners[ca].x + corners[cb].x) / 2.0,
            (corners[ca].y + corners[cb].y) / 2.0,
        );
        let h = mid.dist(&Point::new(0.0, 0.0));
        let (dx, dy) = (mid.x / h, mid.y / h);
        let base = 4 + pi * m;
        for t in 0..m {
            let r = match variant {
                ThetaVariant::Nonplanar => THETA_BASE_DISTANCE * 2.0f64.powi(t as i32),
                ThetaVariant::Planar => h * (t + 1) as f64 / (m + 1) as f64,
            };
            pts.push(Point::new(r * dx, r * dy));
        }
        edges.push((3, base));
        for t in 0..m {
            edges.push((base + t, ca));
            edges.push((base + t, cb));
            if t + 1 < m {
                edges.push((base + t, base + t + 1));
            }
        }
    }
    Ok(Drawing::new(Graph::new(n, edges).unwrap(), pts))
}

/// Largest number of levels actually materialized per arity; deeper
/// requests are truncated (radii of existing vertices are unaffected by
/// deeper levels, since edge lengths shrink downward, so any containment
/// witness in the truncation persists in the full tree).
fn ortho_level_cap(d: usize) -> usize {
    match d {
        2 => 12, // 8191 vertices
        _ => 7,  // 3280 vertices
    }
}

/// Complete d-ary tree drawn with axis-aligned edges shrinking by factor q
/// per level. Children go to distinct compass directions that never point
/// back at the parent: for d = 2 straight-ahead and left (a monotone
/// staircase, root heading east/north), for d = 3 all three remaining
/// directions.
pub fn orthogonal_tree(d: usize, q: f64, k: usize) -> Result<Drawing, ConstructionError> {
    if d != 2 && d != 3 {
        return Err(ConstructionError::Domain(format!("arity must be 2 or 3, got {d}")));
    }
    if !(0.0 < q && q < 1.0) {
        return Err(ConstructionError::Domain(format!("shrink factor must be in (0,1), got {q}")));
    }
    if k < 1 {
        return Err(ConstructionError::Domain("need at least 1 level".into()));
    }
    const DIRS: [(f64, f64); 4] = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
    let levels = k.min(ortho_level_cap(d));
    let mut pts = vec![Point::new(0.0, 0.0)];
    let mut edges = Vec::new();
    // (vertex, incoming direction index, outgoing edge length)
    let mut frontier: Vec<(usize, usize, f64)> = vec![(0, 0, 1.0)];
    for depth in 0..levels {
        let mut next = Vec::with_capacity(frontier.len() * d);
        for (idx, indir, len) in frontier {
            let dirs: Vec<usize> = if d == 2 {
                // monotone staircase: every child edge goes east or north,
                // so no edge points back toward the parent
                vec![0, 1]
            } else if depth == 0 {
                vec![0, 1, 3]
            } else {
                vec![indir, (indir + 1) % 4, (indir + 3) % 4]
            };
            for dd in dirs {
                let j = pts.len();
                let (dx, dy) = DIRS[dd];
                pts.push(Point::new(pts[idx].x + len * dx, pts[idx].y + len * dy));
                edges.push((idx, j));
                next.push((j, dd, len * q));
            }
        }
        frontier = next;
    }
    Ok(Drawing::new(Graph::new(pts.len(), edges).unwrap(), pts))
}

/// A rows x cols parallelogram patch of the unit triangular tiling, and the
/// same positions with the graph squared (all distance-2 pairs added).
pub fn tiling_square(rows: usize, cols: usize) -> Result<(Drawing, Drawing), ConstructionError> {
    if rows < 1 || cols < 1 {
        return Err(ConstructionError::Domain("rows and cols must be >= 1".into()));
    }
    let n = rows * cols;
    let id = |i: usize, j: usize| j * cols + i;
    let pts: Vec<Point> = (0..rows)
        .flat_map(|j| (0..cols).map(move |i| lattice(i as i32, j as i32)))
        .collect();
    let mut edges = Vec::new();
    for j in 0..rows {
        for i in 0..cols {
            if i + 1 < cols {
                edges.push((id(i, j), id(i + 1, j)));
            }
            if j + 1 < rows {
                edges.push((id(i, j), id(i, j + 1)));
                if i >= 1 {
                    edges.push((id(i, j), id(i - 1, j + 1)));
                }
            }
        }
    }
    let base_graph = Graph::new(n, edges.iter().copied()).unwrap();

    // square the graph: add every pair at graph distance exactly 2
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in base_graph.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut sq_edges: std::collections::HashSet<(usize, usize)> =
        base_graph.edges().iter().copied().collect();
    for v in 0..n {
        for &w in &adj[v] {
            for &x in &adj[w] {
                if x != v {
                    sq_edges.insert((v.min(x), v.max(x)));
                }
            }
        }
    }
    let mut sq_edges: Vec<_> = sq_edges.into_iter().collect();
    sq_edges.sort();
    let squared = Drawing::new(Graph::new(n, sq_edges).unwrap(), pts.clone());
    Ok((Drawing::new(base_graph, pts), squared))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete { n: usize },
    CompleteBipartite { n: usize, m: usize },
    DaryTree { d: usize, k: usize },
}

/// Abstract graph of a family, with no layout; input to the search module.
pub fn abstract_family(family: Family) -> Result<Graph, ConstructionError> {
    match family {
        Family::Complete { n } => {
            if n < 1 {
                return Err(ConstructionError::Domain("n must be >= 1".into()));
            }
            Ok(Graph::new(n, complete_edges(n)).unwrap())
        }
        Family::CompleteBipartite { n, m } => {
            if n < 1 || m < 1 {
                return Err(ConstructionError::Domain("parts must be >= 1".into()));
            }
            Ok(Graph::new(n + m, bipartite_edges(n, m)).unwrap())
        }
        Family::DaryTree { d, k } => {
            if d < 1 {
                return Err(ConstructionError::Domain("arity must be >= 1".into()));
            }
            let mut count = 1usize;
            let mut level = 1usize;
            let mut edges = Vec::new();
            let mut prev: Vec<usize> = vec![0];
            for _ in 0..k {
                let mut cur = Vec::with_capacity(prev.len() * d);
                for &p in &prev {
                    for _ in 0..d {
                        edges.push((p, count));
                        cur.push(count);
                        count += 1;
                    }
                }
                prev = cur;
                level += 1;
            }
            let _ = level;
            Ok(Graph::new(count, edges).unwrap())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plycore::{count_crossings, is_empty_ply, ply, vertex_ply};

    #[test]
    fn star24_shape() {
        let d = star24();
        assert_eq!(d.graph.vertex_count(), 25);
        assert_eq!(d.graph.degree(0), 24);
        let mut lens: Vec<f64> = d.graph.edges().iter().map(|&e| d.edge_length(e)).collect();
        lens.sort_by(f64::total_cmp);
        let distinct = lens
            .windows(2)
            .filter(|w| (w[1] - w[0]).abs() > 1e-9 * w[1])
            .count()
            + 1;
        assert_eq!(distinct, 2);
        assert!(is_empty_ply(&d).unwrap().0);
    }

    #[test]
    fn catalog_layouts_are_empty_ply() {
        for name in ["K7", "K2_12", "K3_9", "K4_6"] {
            let d = small_layout(name).unwrap();
            assert!(d.validate().is_empty(), "{name} invalid");
            assert!(is_empty_ply(&d).unwrap().0, "{name} not empty-ply");
        }
    }

    #[test]
    fn k7_counts() {
        let d = small_layout("K7").unwrap();
        assert_eq!(d.graph.vertex_count(), 7);
        assert_eq!(d.graph.edges().len(), 21);
    }

    #[test]
    fn k4_6_has_coinciding_edges() {
        let d = small_layout("K4_6").unwrap();
        assert!(count_crossings(&d).collinear_overlap > 0);
    }

    #[test]
    fn k8_not_available() {
        assert!(matches!(
            small_layout("K8"),
            Err(ConstructionError::NotAvailable { .. })
        ));
    }

    #[test]
    fn nested_planar_ply4() {
        let d = nested_triangles(5, NestedVariant::PlanarPly4).unwrap();
        assert_eq!(ply(&d).unwrap().0, 4);
        assert_eq!(count_crossings(&d).proper, 0);
    }

    #[test]
    fn nested_nonplanar_ply5() {
        let d = nested_triangles(5, NestedVariant::NonplanarPly5).unwrap();
        assert_eq!(ply(&d).unwrap().0, 5);
    }

    #[test]
    fn nested_natural_ply_grows() {
        let plys: Vec<usize> = [4usize, 8, 16]
            .iter()
            .map(|&l| ply(&nested_triangles(l, NestedVariant::Natural).unwrap()).unwrap().0)
            .collect();
        assert!(plys[0] < plys[1] && plys[1] < plys[2], "{plys:?}");
    }

    #[test]
    fn nested_rejects_single_level() {
        assert!(nested_triangles(1, NestedVariant::Natural).is_err());
    }

    #[test]
    fn theta_nonplanar_matches_theorem() {
        let d = theta_graph(5, ThetaVariant::Nonplanar).unwrap();
        assert_eq!(d.graph.vertex_count(), 19);
        assert_eq!(ply(&d).unwrap().0, 5);
        assert_eq!(vertex_ply(&d).unwrap().0, 4);
        assert_eq!(count_crossings(&d).proper, 3);
    }

    #[test]
    fn theta_planar_small() {
        let d = theta_graph(1, ThetaVariant::Planar).unwrap();
        assert_eq!(d.graph.vertex_count(), 7);
        assert_eq!(count_crossings(&d).proper, 0);
        assert!(vertex_ply(&d).unwrap().0 <= 4);
    }

    #[test]
    fn ortho_binary_staircase_empty() {
        for k in [4, 8, 10] {
            let d = orthogonal_tree(2, 0.5, k).unwrap();
            assert!(is_empty_ply(&d).unwrap().0, "k = {k}");
        }
    }

    #[test]
    fn ortho_ternary_fails() {
        let d = orthogonal_tree(3, 0.5, 20).unwrap();
        let (empty, witness) = is_empty_ply(&d).unwrap();
        assert!(!empty);
        assert!(witness.is_some());
    }

    #[test]
    fn ortho_domain_errors() {
        assert!(orthogonal_tree(4, 0.5, 3).is_err());
        assert!(orthogonal_tree(2, 1.0, 3).is_err());
        assert!(orthogonal_tree(2, 0.5, 0).is_err());
    }

    #[test]
    fn tiling_base_ply1_squared_empty() {
        let (base, squared) = tiling_square(3, 3).unwrap();
        assert_eq!(ply(&base).unwrap().0, 1);
        let k = ply(&squared).unwrap().0;
        assert!(k <= 4, "squared ply {k}");
        assert!(is_empty_ply(&squared).unwrap().0);
    }

    #[test]
    fn tiling_p3_row() {
        let (base, squared) = tiling_square(1, 3).unwrap();
        assert_eq!(base.graph.edges().len(), 2);
        assert_eq!(squared.graph.edges().len(), 3);
        assert!(is_empty_ply(&squared).unwrap().0);
    }

    #[test]
    fn families() {
        assert_eq!(abstract_family(Family::Complete { n: 7 }).unwrap().edges().len(), 21);
        assert_eq!(
            abstract_family(Family::CompleteBipartite { n: 2, m: 12 }).unwrap().edges().len(),
            24
        );
        let t = abstract_family(Family::DaryTree { d: 4, k: 3 }).unwrap();
        assert_eq!(t.vertex_count(), (4usize.pow(4) - 1) / 3);
    }
}
