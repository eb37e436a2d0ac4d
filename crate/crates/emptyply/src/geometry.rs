//! Primitive predicates and constructions on points, open disks and segments.
//!
//! All boundary decisions go through a single relative tolerance: two
//! quantities are considered coincident when they differ by less than
//! [`EPS_REL`] times the local feature size (the largest radius or length
//! involved). Open-disk semantics mean that exact tangencies never count
//! as overlap.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Relative tolerance for all boundary-coincidence decisions.
pub const EPS_REL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("disk radius must be positive, got {0}")]
    ZeroRadius(f64),
    #[error("apollonius ratio k=1 degenerates to the perpendicular bisector")]
    DegenerateRatio,
    #[error("apollonius anchor points coincide")]
    CoincidentAnchors,
    #[error("region constraints admit no feasible sample")]
    EmptyRegion,
}

/// A location in the Euclidean plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// An open disk; radius 0 denotes an empty disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Point, radius: f64) -> Self {
        debug_assert!(radius >= 0.0);
        Disk { center, radius }
    }
}

/// A straight-line segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn len(&self) -> f64 {
        self.a.dist(&self.b)
    }
}

/// How two segments meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CrossingKind {
    None,
    Proper,
    EndpointShared,
    CollinearOverlap,
}

/// Strict open-disk membership with the relative tolerance applied:
/// points within `EPS_REL * radius` of the boundary count as outside.
pub fn strictly_inside(p: &Point, d: &Disk) -> bool {
    if d.radius <= 0.0 {
        return false;
    }
    p.dist(&d.center) < d.radius * (1.0 - EPS_REL)
}

/// Transversal intersection points of two boundary circles.
///
/// Tangency (internal or external, within tolerance) and identical circles
/// yield no points; the latter also sets the degeneracy flag.
pub fn circle_intersections(
    d1: &Disk,
    d2: &Disk,
) -> Result<(Vec<Point>, bool), GeometryError> {
    if d1.radius <= 0.0 {
        return Err(GeometryError::ZeroRadius(d1.radius));
    }
    if d2.radius <= 0.0 {
        return Err(GeometryError::ZeroRadius(d2.radius));
    }
    let scale = d1.radius.max(d2.radius);
    let tol = EPS_REL * scale;
    let d = d1.center.dist(&d2.center);
    if d < tol && (d1.radius - d2.radius).abs() < tol {
        return Ok((Vec::new(), true)); // identical circles
    }
    let sum = d1.radius + d2.radius;
    let diff = (d1.radius - d2.radius).abs();
    if d > sum - tol || d < diff + tol {
        // disjoint, contained, or tangent
        return Ok((Vec::new(), false));
    }
    let a = (d * d + d1.radius * d1.radius - d2.radius * d2.radius) / (2.0 * d);
    let h2 = d1.radius * d1.radius - a * a;
    if h2 <= 0.0 {
        return Ok((Vec::new(), false));
    }
    let h = h2.sqrt();
    let ux = (d2.center.x - d1.center.x) / d;
    let uy = (d2.center.y - d1.center.y) / d;
    let mx = d1.center.x + a * ux;
    let my = d1.center.y + a * uy;
    Ok((
        vec![
            Point::new(mx - h * uy, my + h * ux),
            Point::new(mx + h * uy, my - h * ux),
        ],
        false,
    ))
}

fn orient(a: &Point, b: &Point, c: &Point) -> i32 {
    let v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    let s = (b.x - a.x)
        .abs()
        .max((b.y - a.y).abs())
        .max((c.x - a.x).abs())
        .max((c.y - a.y).abs());
    let tol = EPS_REL * s * s;
    if v.abs() <= tol {
        0
    } else if v > 0.0 {
        1
    } else {
        -1
    }
}

fn on_segment_1d(a: f64, b: f64, p: f64, tol: f64) -> bool {
    p >= a.min(b) - tol && p <= a.max(b) + tol
}

fn point_on_segment(p: &Point, s: &Segment, tol: f64) -> bool {
    orient(&s.a, &s.b, p) == 0
        && on_segment_1d(s.a.x, s.b.x, p.x, tol)
        && on_segment_1d(s.a.y, s.b.y, p.y, tol)
}

fn points_coincide(a: &Point, b: &Point, tol: f64) -> bool {
    a.dist(b) <= tol
}

/// Classify how two segments meet. Symmetric in its arguments.
pub fn segment_relation(s1: &Segment, s2: &Segment) -> CrossingKind {
    let scale = s1.len().max(s2.len());
    let tol = EPS_REL * scale;
    let o1 = orient(&s1.a, &s1.b, &s2.a);
    let o2 = orient(&s1.a, &s1.b, &s2.b);
    let o3 = orient(&s2.a, &s2.b, &s1.a);
    let o4 = orient(&s2.a, &s2.b, &s1.b);

    if o1 == 0 && o2 == 0 {
        // all four endpoints collinear: check 1D interval overlap
        let dx = (s1.b.x - s1.a.x).abs();
        let dy = (s1.b.y - s1.a.y).abs();
        let proj = |p: &Point| if dx >= dy { p.x } else { p.y };
        let (lo1, hi1) = minmax(proj(&s1.a), proj(&s1.b));
        let (lo2, hi2) = minmax(proj(&s2.a), proj(&s2.b));
        let overlap = hi1.min(hi2) - lo1.max(lo2);
        if overlap > tol {
            return CrossingKind::CollinearOverlap;
        }
        if overlap > -tol {
            return CrossingKind::EndpointShared;
        }
        return CrossingKind::None;
    }

    let shared = points_coincide(&s1.a, &s2.a, tol)
        || points_coincide(&s1.a, &s2.b, tol)
        || points_coincide(&s1.b, &s2.a, tol)
        || points_coincide(&s1.b, &s2.b, tol);
    if shared {
        return CrossingKind::EndpointShared;
    }

    if o1 * o2 < 0 && o3 * o4 < 0 {
        return CrossingKind::Proper;
    }
    // an endpoint of one lying in the interior of the other: treat as a
    // touch, not a proper crossing
    if (o1 == 0 && point_on_segment(&s2.a, s1, tol))
        || (o2 == 0 && point_on_segment(&s2.b, s1, tol))
        || (o3 == 0 && point_on_segment(&s1.a, s2, tol))
        || (o4 == 0 && point_on_segment(&s1.b, s2, tol))
    {
        return CrossingKind::EndpointShared;
    }
    CrossingKind::None
}

fn minmax(a: f64, b: f64) -> (f64, f64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// The Apollonius circle `{x : dist(a,x) = k * dist(c,x)}` for k > 0, k != 1.
pub fn apollonius_circle(a: &Point, c: &Point, k: f64) -> Result<Disk, GeometryError> {
    let sep = a.dist(c);
    if sep == 0.0 {
        return Err(GeometryError::CoincidentAnchors);
    }
    if (k - 1.0).abs() < EPS_REL {
        return Err(GeometryError::DegenerateRatio);
    }
    let k2 = k * k;
    let denom = 1.0 - k2;
    let cx = (a.x - k2 * c.x) / denom;
    let cy = (a.y - k2 * c.y) / denom;
    let radius = k * sep / denom.abs();
    Ok(Disk::new(Point::new(cx, cy), radius))
}

/// One constraint of a bounded region in the plane.
#[derive(Debug, Clone)]
pub enum RegionConstraint {
    /// dist(x, anchor) in [lo, hi]
    Annulus { anchor: Point, lo: f64, hi: f64 },
    /// a*x + b*y >= c
    HalfPlane { a: f64, b: f64, c: f64 },
    /// inside (closed) the given circle, or outside it
    InsideCircle(Disk),
    OutsideCircle(Disk),
}

impl RegionConstraint {
    fn satisfied(&self, p: &Point, tol: f64) -> bool {
        match self {
            RegionConstraint::Annulus { anchor, lo, hi } => {
                let d = p.dist(anchor);
                d >= lo - tol && d <= hi + tol
            }
            RegionConstraint::HalfPlane { a, b, c } => a * p.x + b * p.y >= c - tol,
            RegionConstraint::InsideCircle(d) => p.dist(&d.center) <= d.radius + tol,
            RegionConstraint::OutsideCircle(d) => p.dist(&d.center) >= d.radius - tol,
        }
    }

    fn boundary_circles(&self) -> Vec<Disk> {
        match self {
            RegionConstraint::Annulus { anchor, lo, hi } => {
                let mut v = Vec::new();
                if *lo > 0.0 {
                    v.push(Disk::new(*anchor, *lo));
                }
                v.push(Disk::new(*anchor, *hi));
                v
            }
            RegionConstraint::InsideCircle(d) | RegionConstraint::OutsideCircle(d) => {
                vec![*d]
            }
            RegionConstraint::HalfPlane { .. } => Vec::new(),
        }
    }
}

/// Approximate diameter (supremum of pairwise distances) of the region cut
/// out by `constraints`.
///
/// Samples a deterministic polar grid over the first annulus band, the
/// boundary arcs, and every pairwise intersection of constraint boundary
/// circles, then takes the max pairwise distance over the feasible samples.
/// Nondecreasing in `samples` for nested grids.
pub fn region_diameter(
    constraints: &[RegionConstraint],
    samples: usize,
) -> Result<f64, GeometryError> {
    let band = constraints.iter().find_map(|c| match c {
        RegionConstraint::Annulus { anchor, lo, hi } => Some((*anchor, *lo, *hi)),
        _ => None,
    });
    let (anchor, lo, hi) = band.ok_or(GeometryError::EmptyRegion)?;
    let scale = constraints
        .iter()
        .flat_map(|c| c.boundary_circles())
        .map(|d| d.radius)
        .fold(hi, f64::max);
    let tol = EPS_REL * scale;

    let mut pts: Vec<Point> = Vec::new();
    let feasible = |p: &Point| constraints.iter().all(|c| c.satisfied(p, tol));

    // corner candidates: intersections of boundary circle pairs
    let circles: Vec<Disk> = constraints.iter().flat_map(|c| c.boundary_circles()).collect();
    for i in 0..circles.len() {
        for j in (i + 1)..circles.len() {
            if let Ok((inter, _)) = circle_intersections(&circles[i], &circles[j]) {
                for p in inter {
                    if feasible(&p) {
                        pts.push(p);
                    }
                }
            }
        }
    }

    // stratified polar grid over the defining band (endpoints included so
    // that sample sets nest when the counts are scaled by 4)
    let side = (samples as f64).sqrt().ceil() as usize;
    let nr = side.max(2);
    let nt = side.max(2);
    for it in 0..=nt {
        let theta = 2.0 * std::f64::consts::PI * (it as f64) / (nt as f64);
        let (s, c) = theta.sin_cos();
        for ir in 0..=nr {
            let r = lo + (hi - lo) * (ir as f64) / (nr as f64);
            let p = Point::new(anchor.x + r * c, anchor.y + r * s);
            if feasible(&p) {
                pts.push(p);
            }
        }
    }

    if pts.len() < 2 {
        return Err(GeometryError::EmptyRegion);
    }
    // max pairwise distance over the convex hull
    let hull = convex_hull(&mut pts);
    let mut best: f64 = 0.0;
    for i in 0..hull.len() {
        for j in (i + 1)..hull.len() {
            best = best.max(hull[i].dist(&hull[j]));
        }
    }
    Ok(best)
}

/// Andrew's monotone chain.
fn convex_hull(pts: &mut Vec<Point>) -> Vec<Point> {
    pts.sort_by(|p, q| p.x.partial_cmp(&q.x).unwrap().then(p.y.partial_cmp(&q.y).unwrap()));
    pts.dedup_by(|p, q| p.x == q.x && p.y == q.y);
    let n = pts.len();
    if n < 3 {
        return pts.clone();
    }
    let cross = |o: &Point, a: &Point, b: &Point| {
        (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
    };
    let mut hull: Vec<Point> = Vec::with_capacity(2 * n);
    for p in pts.iter() {
        while hull.len() >= 2
            && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 0.0
        {
            hull.pop();
        }
        hull.push(*p);
    }
    let lower = hull.len() + 1;
    for p in pts.iter().rev() {
        while hull.len() >= lower
            && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 0.0
        {
            hull.pop();
        }
        hull.push(*p);
    }
    hull.pop();
    hull
}
