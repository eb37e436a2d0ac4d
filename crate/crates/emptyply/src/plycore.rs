//! Ply and vertex-ply computation, empty-ply verification, lemma checkers,
//! 1/4-SHPED stubs, crossing counting, and a grid oracle.

use crate::drawing::Drawing;
use crate::geometry::{
    circle_intersections, segment_relation, strictly_inside, CrossingKind, Disk, Point, Segment,
    EPS_REL,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PlyError {
    #[error("zero-radius disk at index {0}")]
    ZeroRadius(usize),
    #[error("drawing has no edges")]
    NoEdges,
    #[error("invalid drawing")]
    InvalidDrawing,
    #[error("claims A/B require a tree, but the graph is not a tree")]
    NotATree,
}

fn strict_count(p: &Point, disks: &[Disk]) -> usize {
    disks.iter().filter(|d| strictly_inside(p, d)).count()
}

/// Exact maximum coverage depth of a set of open disks, with a witness point.
///
/// Candidates: disk centers (depth = strict count, own disk included) and
/// transversal circle-circle intersection points (depth = strict count + 2,
/// attained just inside the lens-side sector). Degenerate vertices where three
/// or more boundaries nearly coincide are resolved by sampling 8 perturbed
/// directions; a center sitting on another boundary spawns a perturbed
/// candidate toward that circle's center. The perturbation radius is
/// re-checked at half size for stability.
pub fn max_depth(disks: &[Disk]) -> Result<(usize, Point), PlyError> {
    for (i, d) in disks.iter().enumerate() {
        if d.radius <= 0.0 {
            return Err(PlyError::ZeroRadius(i));
        }
    }
    if disks.is_empty() {
        return Ok((0, Point::new(0.0, 0.0)));
    }

    // (depth, point) candidates; merged by max depth, lexicographic tie-break.
    let mut best: (usize, Point) = (0, disks[0].center);
    let mut consider = |depth: usize, p: Point| {
        if depth > best.0 || (depth == best.0 && (p.x, p.y) < (best.1.x, best.1.y)) {
            best = (depth, p);
        }
    };

    for (i, di) in disks.iter().enumerate() {
        consider(strict_count(&di.center, disks), di.center);
        // Center on another boundary: nudge toward that circle's center so
        // open-disk semantics cannot hide a deeper point.
        for (j, dj) in disks.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = di.center.dist(&dj.center);
            let tol = EPS_REL * di.radius.max(dj.radius);
            if (d - dj.radius).abs() <= 2.0 * tol && d > 0.0 {
                for eps in [EPS_REL, EPS_REL / 2.0] {
                    let step = eps * dj.radius.max(1.0);
                    let p = Point::new(
                        di.center.x + (dj.center.x - di.center.x) / d * step,
                        di.center.y + (dj.center.y - di.center.y) / d * step,
                    );
                    consider(strict_count(&p, disks), p);
                }
            }
        }
    }

    for i in 0..disks.len() {
        for j in (i + 1)..disks.len() {
            let (pts, _) = circle_intersections(&disks[i], &disks[j])
                .map_err(|_| PlyError::ZeroRadius(i))?;
            for p in pts {
                let scale = disks[i].radius.max(disks[j].radius);
                let tol = EPS_REL * scale;
                // Count boundaries passing through p; >= 3 means a degenerate
                // vertex that the +2 rule cannot attribute unambiguously.
                let on_boundary = disks
                    .iter()
                    .filter(|d| (p.dist(&d.center) - d.radius).abs() <= 10.0 * tol)
                    .count();
                if on_boundary >= 3 {
                    for eps in [EPS_REL, EPS_REL / 2.0] {
                        let step = 100.0 * eps * scale;
                        for k in 0..8 {
                            let th = std::f64::consts::FRAC_PI_4 * k as f64;
                            let q = Point::new(p.x + step * th.cos(), p.y + step * th.sin());
                            consider(strict_count(&q, disks), q);
                        }
                    }
                } else {
                    consider(strict_count(&p, disks) + 2, p);
                }
            }
        }
    }
    Ok(best)
}

/// Grid-sampling lower bound for `max_depth`: max strict coverage over a
/// regular grid of pitch `resolution` covering the disks' bounding box.
pub fn depth_oracle(disks: &[Disk], resolution: f64) -> usize {
    assert!(resolution > 0.0, "resolution must be positive");
    if disks.is_empty() {
        return 0;
    }
    let minx = disks.iter().map(|d| d.center.x - d.radius).fold(f64::INFINITY, f64::min);
    let maxx = disks.iter().map(|d| d.center.x + d.radius).fold(f64::NEG_INFINITY, f64::max);
    let miny = disks.iter().map(|d| d.center.y - d.radius).fold(f64::INFINITY, f64::min);
    let maxy = disks.iter().map(|d| d.center.y + d.radius).fold(f64::NEG_INFINITY, f64::max);
    let nx = ((maxx - minx) / resolution).ceil() as usize + 1;
    let ny = ((maxy - miny) / resolution).ceil() as usize + 1;
    let mut best = 0;
    for iy in 0..ny {
        let y = miny + iy as f64 * resolution;
        for ix in 0..nx {
            let p = Point::new(minx + ix as f64 * resolution, y);
            best = best.max(strict_count(&p, disks));
        }
    }
    best
}

fn active_disks(drawing: &Drawing) -> Result<Vec<Disk>, PlyError> {
    if drawing.graph.edges().is_empty() {
        return Err(PlyError::NoEdges);
    }
    let set = drawing.ply_disks().map_err(|_| PlyError::InvalidDrawing)?;
    Ok(set.active_disks().map(|(_, d)| d).collect())
}

/// The ply of a drawing: max depth over its ply-disks.
pub fn ply(drawing: &Drawing) -> Result<(usize, Point), PlyError> {
    max_depth(&active_disks(drawing)?)
}

/// Per-vertex coverage counts: how many ply-disks strictly contain each
/// vertex point (a vertex's own disk counts).
pub fn coverage_counts(drawing: &Drawing) -> Result<Vec<usize>, PlyError> {
    if drawing.graph.edges().is_empty() {
        return Err(PlyError::NoEdges);
    }
    let set = drawing.ply_disks().map_err(|_| PlyError::InvalidDrawing)?;
    Ok(drawing
        .positions
        .iter()
        .map(|p| set.active_disks().filter(|(_, d)| strictly_inside(p, d)).count())
        .collect())
}

/// The vertex-ply: max over vertices of the number of ply-disks strictly
/// containing that vertex point. Witness is the lowest qualifying vertex id.
pub fn vertex_ply(drawing: &Drawing) -> Result<(usize, usize), PlyError> {
    let counts = coverage_counts(drawing)?;
    let h = *counts.iter().max().unwrap();
    let v = counts.iter().position(|&c| c == h).unwrap();
    Ok((h, v))
}

/// True iff no vertex u lies strictly inside another vertex's ply-disk;
/// otherwise returns the lowest-id witness pair (u, v) with u inside D_v.
pub fn is_empty_ply(drawing: &Drawing) -> Result<(bool, Option<(usize, usize)>), PlyError> {
    if drawing.graph.edges().is_empty() {
        return Err(PlyError::NoEdges);
    }
    let set = drawing.ply_disks().map_err(|_| PlyError::InvalidDrawing)?;
    for (u, p) in drawing.positions.iter().enumerate() {
        for (v, d) in set.active_disks() {
            if u != v && strictly_inside(p, &d) {
                return Ok((false, Some((u, v))));
            }
        }
    }
    Ok((true, None))
}

/// Counts of crossing edge pairs. Collinear-overlap pairs are reported
/// separately and not included in `proper`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingCounts {
    pub proper: usize,
    pub collinear_overlap: usize,
}

pub fn count_crossings(drawing: &Drawing) -> CrossingCounts {
    let mut out = CrossingCounts { proper: 0, collinear_overlap: 0 };
    let es = drawing.graph.edges();
    for i in 0..es.len() {
        for j in (i + 1)..es.len() {
            let s1 = Segment::new(drawing.positions[es[i].0], drawing.positions[es[i].1]);
            let s2 = Segment::new(drawing.positions[es[j].0], drawing.positions[es[j].1]);
            match segment_relation(&s1, &s2) {
                CrossingKind::Proper => out.proper += 1,
                CrossingKind::CollinearOverlap => out.collinear_overlap += 1,
                _ => {}
            }
        }
    }
    out
}

/// Per-edge quarter-length stubs anchored at both endpoints.
#[derive(Debug, Clone)]
pub struct StubSet {
    pub stubs: Vec<(Segment, Segment)>,
}

/// The 1/4-SHPED of a drawing: each edge reduced to its two end quarters,
/// plus the number of proper crossings among stubs of distinct edges.
pub fn quarter_shped(drawing: &Drawing) -> (StubSet, usize) {
    let lerp = |a: &Point, b: &Point, t: f64| {
        Point::new(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)
    };
    let stubs: Vec<(Segment, Segment)> = drawing
        .graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            let a = drawing.positions[u];
            let b = drawing.positions[v];
            (
                Segment::new(a, lerp(&a, &b, 0.25)),
                Segment::new(lerp(&a, &b, 0.75), b),
            )
        })
        .collect();
    let mut crossings = 0;
    for i in 0..stubs.len() {
        for j in (i + 1)..stubs.len() {
            for si in [&stubs[i].0, &stubs[i].1] {
                for sj in [&stubs[j].0, &stubs[j].1] {
                    if segment_relation(si, sj) == CrossingKind::Proper {
                        crossings += 1;
                    }
                }
            }
        }
    }
    (StubSet { stubs }, crossings)
}

/// Combined ply / vertex-ply / crossing summary of a drawing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlyReport {
    pub ply: usize,
    pub ply_witness: Point,
    pub vertex_ply: usize,
    pub vertex_ply_witness: usize,
    pub coverage_counts: Vec<usize>,
    pub crossings: CrossingCounts,
    pub empty_ply: bool,
}

pub fn ply_report(drawing: &Drawing) -> Result<PlyReport, PlyError> {
    let (k, pw) = ply(drawing)?;
    let counts = coverage_counts(drawing)?;
    let (h, vw) = vertex_ply(drawing)?;
    let (empty, _) = is_empty_ply(drawing)?;
    Ok(PlyReport {
        ply: k,
        ply_witness: pw,
        vertex_ply: h,
        vertex_ply_witness: vw,
        coverage_counts: counts,
        crossings: count_crossings(drawing),
        empty_ply: empty,
    })
}

/// One check inside a `LemmaReport`: pass/fail plus a human-readable witness
/// for failures.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub ok: bool,
    pub witness: Option<String>,
}

impl Check {
    fn pass() -> Self {
        Check { ok: true, witness: None }
    }
    fn fail(w: String) -> Self {
        Check { ok: false, witness: Some(w) }
    }
}

/// Results of the lemma/theorem checks on a drawing. For genuinely empty-ply
/// inputs, `edge_ratio`, `radius_ratio`, `shrunk_disjoint` and `degree` are
/// theorems and must pass; for arbitrary inputs the report is diagnostic.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LemmaReport {
    /// Edge lengths incident to a common vertex differ by at most 2x.
    pub edge_ratio: Check,
    /// Radii of adjacent vertices differ by at most 2x.
    pub radius_ratio: Check,
    /// Half-radius disks are pairwise interior-disjoint.
    pub shrunk_disjoint: Check,
    /// Sum of disk areas is at most 4x the union area (Monte Carlo, 1% tol).
    pub area_bound: Check,
    /// Max degree at most 24.
    pub degree: Check,
    /// ply <= 5 * vertex_ply.
    pub five_h: Check,
    /// Root-leaf radius/distance claims for rooted trees; None if no root
    /// was supplied.
    pub claims_ab: Option<Check>,
}

impl LemmaReport {
    pub fn all_ok(&self) -> bool {
        self.edge_ratio.ok
            && self.radius_ratio.ok
            && self.shrunk_disjoint.ok
            && self.area_bound.ok
            && self.degree.ok
            && self.five_h.ok
            && self.claims_ab.as_ref().map_or(true, |c| c.ok)
    }
}

fn halton(index: usize, base: usize) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    let mut i = index;
    while i > 0 {
        f /= base as f64;
        r += f * (i % base) as f64;
        i /= base;
    }
    r
}

/// Monte-Carlo (Halton sequence) union area of a disk set.
pub fn union_area_estimate(disks: &[Disk], samples: usize) -> f64 {
    let minx = disks.iter().map(|d| d.center.x - d.radius).fold(f64::INFINITY, f64::min);
    let maxx = disks.iter().map(|d| d.center.x + d.radius).fold(f64::NEG_INFINITY, f64::max);
    let miny = disks.iter().map(|d| d.center.y - d.radius).fold(f64::INFINITY, f64::min);
    let maxy = disks.iter().map(|d| d.center.y + d.radius).fold(f64::NEG_INFINITY, f64::max);
    let box_area = (maxx - minx) * (maxy - miny);
    let mut hits = 0usize;
    for s in 0..samples {
        let p = Point::new(
            minx + (maxx - minx) * halton(s + 1, 2),
            miny + (maxy - miny) * halton(s + 1, 3),
        );
        if disks.iter().any(|d| strictly_inside(&p, d)) {
            hits += 1;
        }
    }
    box_area * hits as f64 / samples as f64
}

pub fn lemma_report(drawing: &Drawing, tree_root: Option<usize>) -> Result<LemmaReport, PlyError> {
    if drawing.graph.edges().is_empty() {
        return Err(PlyError::NoEdges);
    }
    let set = drawing.ply_disks().map_err(|_| PlyError::InvalidDrawing)?;
    let radii = set.radii();
    let n = drawing.graph.vertex_count();

    // Lemma 3: edges incident to a common vertex have lengths within [1/2, 2].
    let mut edge_ratio = Check::pass();
    'er: for v in 0..n {
        let incident: Vec<f64> = drawing
            .graph
            .edges()
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .map(|&e| drawing.edge_length(e))
            .collect();
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                let ratio = a.max(b) / a.min(b);
                if ratio > 2.0 * (1.0 + EPS_REL) {
                    edge_ratio =
                        Check::fail(format!("vertex {v}: incident edge length ratio {ratio:.6}"));
                    break 'er;
                }
            }
        }
    }

    // Lemma 4: radii of adjacent vertices within a factor of 2.
    let mut radius_ratio = Check::pass();
    for &(a, b) in drawing.graph.edges() {
        let (ra, rb) = (radii[a], radii[b]);
        let ratio = ra.max(rb) / ra.min(rb);
        if ratio > 2.0 * (1.0 + EPS_REL) {
            radius_ratio = Check::fail(format!("edge ({a}, {b}): radius ratio {ratio:.6}"));
            break;
        }
    }

    // Shrunk disks D'_v pairwise interior-disjoint.
    let mut shrunk_disjoint = Check::pass();
    'sd: for u in 0..n {
        for v in (u + 1)..n {
            if radii[u] == 0.0 || radii[v] == 0.0 {
                continue;
            }
            let d = drawing.positions[u].dist(&drawing.positions[v]);
            let sum = (radii[u] + radii[v]) / 2.0;
            if d < sum * (1.0 - EPS_REL) {
                shrunk_disjoint = Check::fail(format!(
                    "shrunk disks of {u} and {v} overlap: centers {d:.6} apart, radii sum {sum:.6}"
                ));
                break 'sd;
            }
        }
    }

    // Lemma 1: total disk area <= 4 x union area (Monte Carlo).
    let disks: Vec<Disk> = set.active_disks().map(|(_, d)| d).collect();
    let total: f64 = disks.iter().map(|d| std::f64::consts::PI * d.radius * d.radius).sum();
    let union = union_area_estimate(&disks, 1_000_000);
    let area_bound = if total <= 4.0 * union * 1.01 {
        Check::pass()
    } else {
        Check::fail(format!("total area {total:.6} > 4 x union {union:.6}"))
    };

    // Theorem 3: degree bound.
    let maxdeg = drawing.graph.max_degree();
    let degree = if maxdeg <= 24 {
        Check::pass()
    } else {
        Check::fail(format!("max degree {maxdeg} > 24"))
    };

    // Theorem 1: ply <= 5 x vertex-ply.
    let (k, _) = ply(drawing)?;
    let (h, _) = vertex_ply(drawing)?;
    let five_h = if k <= 5 * h {
        Check::pass()
    } else {
        Check::fail(format!("ply {k} > 5 x vertex-ply {h}"))
    };

    let claims_ab = match tree_root {
        None => None,
        Some(root) => Some(claims_ab(drawing, root, radii)?),
    };

    Ok(LemmaReport {
        edge_ratio,
        radius_ratio,
        shrunk_disjoint,
        area_bound,
        degree,
        five_h,
        claims_ab,
    })
}

/// Claims A and B for rooted-tree drawings, radii normalized so the root
/// ply-disk has unit radius.
///
/// Claim A: a vertex u with radius 2^i forces every leaf v below it to have
/// radius at least 2^{2i - d(v)} (d = depth of the leaf). Claim B: a leaf v
/// whose radius lies in (2^{2i-d}, 2^{2i-d+2}] sits within distance 2^{i+2}
/// of the root.
fn claims_ab(drawing: &Drawing, root: usize, radii: &[f64]) -> Result<Check, PlyError> {
    let parent = drawing.graph.tree_parents(root).ok_or(PlyError::NotATree)?;
    let n = drawing.graph.vertex_count();
    let scale = radii[root];
    if scale <= 0.0 {
        return Err(PlyError::InvalidDrawing);
    }
    let r: Vec<f64> = radii.iter().map(|x| x / scale).collect();
    let mut depth = vec![0usize; n];
    let mut order: Vec<usize> = (0..n).collect();
    // parents come from BFS, so parents always precede children in BFS order;
    // recompute depths by walking up.
    for v in 0..n {
        let mut d = 0;
        let mut cur = v;
        while let Some(p) = parent[cur] {
            d += 1;
            cur = p;
        }
        depth[v] = d;
    }
    order.sort_by_key(|&v| depth[v]);

    let mut is_leaf = vec![true; n];
    for v in 0..n {
        if let Some(p) = parent[v] {
            is_leaf[p] = false;
        }
    }

    for v in 0..n {
        if !is_leaf[v] || v == root {
            continue;
        }
        let d = depth[v] as f64;
        // Claim A against every strict ancestor u: r_v >= r_u^2 * 2^{-d}.
        let mut u = parent[v];
        while let Some(a) = u {
            let bound = r[a] * r[a] * (-d).exp2();
            if r[v] < bound * (1.0 - 1e-6) {
                return Ok(Check::fail(format!(
                    "claim A: leaf {v} radius {:.6} < 2^{{2i-k}} bound {bound:.6} from ancestor {a}",
                    r[v]
                )));
            }
            u = parent[a];
        }
        // Claim B: bin r_v into (2^{2i-d}, 2^{2i-d+2}] and check the distance.
        let dist = drawing.positions[root].dist(&drawing.positions[v]) / scale;
        for i in 0..depth[v] {
            let lo = (2.0 * i as f64 - d).exp2();
            let hi = (2.0 * i as f64 - d + 2.0).exp2();
            if r[v] > lo && r[v] <= hi {
                let bound = (i as f64 + 2.0).exp2();
                if dist > bound * (1.0 + 1e-6) {
                    return Ok(Check::fail(format!(
                        "claim B: leaf {v} at distance {dist:.6} > 2^{{i+2}} = {bound:.6} (i = {i})"
                    )));
                }
            }
        }
    }
    Ok(Check::pass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::Graph;

    fn path(pts: &[(f64, f64)]) -> Drawing {
        let n = pts.len();
        let g = Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap();
        Drawing::new(g, pts.iter().map(|&(x, y)| Point::new(x, y)).collect())
    }

    #[test]
    fn single_disk_depth() {
        let (d, w) = max_depth(&[Disk::new(Point::new(0.0, 0.0), 1.0)]).unwrap();
        assert_eq!(d, 1);
        assert_eq!(w, Point::new(0.0, 0.0));
    }

    #[test]
    fn tangent_open_disks_depth_one() {
        let disks = [
            Disk::new(Point::new(0.0, 0.0), 0.5),
            Disk::new(Point::new(1.0, 0.0), 0.5),
        ];
        assert_eq!(max_depth(&disks).unwrap().0, 1);
        assert_eq!(depth_oracle(&disks, 1e-3), 1);
    }

    #[test]
    fn three_unit_disks_depth_three() {
        let disks = [
            Disk::new(Point::new(0.0, 0.0), 1.0),
            Disk::new(Point::new(1.0, 0.0), 1.0),
            Disk::new(Point::new(0.5, 0.5), 1.0),
        ];
        assert_eq!(max_depth(&disks).unwrap().0, 3);
        assert_eq!(depth_oracle(&disks, 1e-3), 3);
    }

    #[test]
    fn zero_radius_rejected() {
        assert_eq!(
            max_depth(&[Disk::new(Point::new(0.0, 0.0), 0.0)]),
            Err(PlyError::ZeroRadius(0))
        );
    }

    #[test]
    fn p2_ply_one() {
        let d = path(&[(0.0, 0.0), (1.0, 0.0)]);
        assert_eq!(ply(&d).unwrap().0, 1);
        assert_eq!(vertex_ply(&d).unwrap().0, 1);
        assert!(is_empty_ply(&d).unwrap().0);
    }

    #[test]
    fn short_tail_path_ply_two() {
        let d = path(&[(0.0, 0.0), (1.0, 0.0), (1.5, 0.0)]);
        assert_eq!(ply(&d).unwrap().0, 2);
    }

    #[test]
    fn vertex_ply_two_on_crowded_path() {
        let d = path(&[(0.0, 0.0), (1.0, 0.0), (1.2, 0.0)]);
        let (h, _) = vertex_ply(&d).unwrap();
        assert_eq!(h, 2);
        let (empty, w) = is_empty_ply(&d).unwrap();
        assert!(!empty);
        assert_eq!(w, Some((2, 1)));
    }

    #[test]
    fn edgeless_rejected() {
        let g = Graph::new(2, []).unwrap();
        let d = Drawing::new(g, vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)]);
        assert_eq!(ply(&d), Err(PlyError::NoEdges));
    }

    #[test]
    fn stub_geometry_single_edge() {
        let d = path(&[(0.0, 0.0), (1.0, 0.0)]);
        let (stubs, crossings) = quarter_shped(&d);
        assert_eq!(crossings, 0);
        assert_eq!(stubs.stubs[0].0.b, Point::new(0.25, 0.0));
        assert_eq!(stubs.stubs[0].1.a, Point::new(0.75, 0.0));
    }

    #[test]
    fn crossing_stubs_detected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let d = Drawing::new(
            g,
            vec![
                Point::new(0.0, 0.0),
                Point::new(4.0, 0.0),
                Point::new(0.5, -0.1),
                Point::new(0.5, 3.9),
            ],
        );
        let (_, stub_crossings) = quarter_shped(&d);
        assert_eq!(stub_crossings, 1);
        assert_eq!(count_crossings(&d).proper, 1);
        assert!(!is_empty_ply(&d).unwrap().0);
    }

    #[test]
    fn lemma_report_p2_all_pass() {
        let d = path(&[(0.0, 0.0), (1.0, 0.0)]);
        let rep = lemma_report(&d, Some(0)).unwrap();
        assert!(rep.all_ok(), "{rep:?}");
    }

    #[test]
    fn big_star_fails_degree() {
        let n = 26;
        let g = Graph::new(n, (1..n).map(|i| (0, i))).unwrap();
        let pts: Vec<Point> = std::iter::once(Point::new(0.0, 0.0))
            .chain((1..n).map(|i| {
                let t = 2.0 * std::f64::consts::PI * i as f64 / (n - 1) as f64;
                Point::new(t.cos(), t.sin())
            }))
            .collect();
        let d = Drawing::new(g, pts);
        let rep = lemma_report(&d, None).unwrap();
        assert!(!rep.degree.ok);
    }

    #[test]
    fn bad_edge_ratio_detected() {
        let d = path(&[(0.0, 0.0), (1.0, 0.0), (3.5, 0.0)]);
        let rep = lemma_report(&d, None).unwrap();
        assert!(!rep.edge_ratio.ok);
        assert!(!is_empty_ply(&d).unwrap().0);
    }

    #[test]
    fn claims_ab_non_tree_error() {
        let g = Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let d = Drawing::new(
            g,
            vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.5, 0.9)],
        );
        assert_eq!(lemma_report(&d, Some(0)).unwrap_err(), PlyError::NotATree);
    }

    #[test]
    fn oracle_never_exceeds_exact() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.gen_range(2..12);
            let disks: Vec<Disk> = (0..n)
                .map(|_| {
                    Disk::new(
                        Point::new(rng.gen_range(0.0..5.0), rng.gen_range(0.0..5.0)),
                        rng.gen_range(0.1..1.0),
                    )
                })
                .collect();
            let (exact, _) = max_depth(&disks).unwrap();
            let grid = depth_oracle(&disks, 0.02);
            assert!(grid <= exact, "oracle {grid} > exact {exact}");
        }
    }

    #[test]
    fn union_area_of_one_disk() {
        let a = union_area_estimate(&[Disk::new(Point::new(0.0, 0.0), 1.0)], 1_000_000);
        assert!((a - std::f64::consts::PI).abs() < 0.01);
    }
}
