//! The drawing data model: abstract graph, vertex positions, ply-disks.

use crate::geometry::{Disk, Point};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An undirected simple graph on dense vertex ids `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge endpoint {0} out of range (n = {1})")]
    OutOfRange(usize, usize),
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = std::collections::HashSet::new();
        let mut es = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            if a >= n || b >= n {
                return Err(GraphError::OutOfRange(a.max(b), n));
            }
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            es.push(key);
        }
        Ok(Graph { n, edges: es })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Returns the parent array of a BFS tree rooted at `root`, or None if
    /// the graph is not a tree.
    pub fn tree_parents(&self, root: usize) -> Option<Vec<Option<usize>>> {
        if self.edges.len() + 1 != self.n || !self.is_connected() {
            return None;
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![None; self.n];
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        Some(parent)
    }
}

/// A straight-line drawing: a graph plus one position per vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Drawing {
    pub graph: Graph,
    pub positions: Vec<Point>,
}

/// One validation problem found in a drawing.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    CoincidentVertices(usize, usize),
    NonFiniteCoordinate(usize),
    PositionCountMismatch { vertices: usize, positions: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::CoincidentVertices(a, b) => {
                write!(f, "vertices {a} and {b} share a position")
            }
            Violation::NonFiniteCoordinate(v) => {
                write!(f, "vertex {v} has a non-finite coordinate")
            }
            Violation::PositionCountMismatch { vertices, positions } => {
                write!(f, "{vertices} vertices but {positions} positions")
            }
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum DrawingError {
    #[error("invalid drawing: {0:?}")]
    Invalid(Vec<Violation>),
    #[error("drawing has no edges")]
    NoEdges,
}

impl Drawing {
    pub fn new(graph: Graph, positions: Vec<Point>) -> Self {
        Drawing { graph, positions }
    }

    /// Report structural problems; self-loops and duplicate edges are
    /// rejected at `Graph` construction, so this checks the geometry side.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.positions.len() != self.graph.vertex_count() {
            out.push(Violation::PositionCountMismatch {
                vertices: self.graph.vertex_count(),
                positions: self.positions.len(),
            });
            return out;
        }
        for (i, p) in self.positions.iter().enumerate() {
            if !p.is_finite() {
                out.push(Violation::NonFiniteCoordinate(i));
            }
        }
        for i in 0..self.positions.len() {
            for j in (i + 1)..self.positions.len() {
                if self.positions[i] == self.positions[j] {
                    out.push(Violation::CoincidentVertices(i, j));
                }
            }
        }
        out
    }

    pub fn checked(self) -> Result<Self, DrawingError> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(DrawingError::Invalid(v))
        }
    }

    pub fn edge_length(&self, e: (usize, usize)) -> f64 {
        self.positions[e.0].dist(&self.positions[e.1])
    }

    /// Ply-disk radii: half the longest incident edge, 0 for isolated vertices.
    pub fn ply_radii(&self) -> Vec<f64> {
        let mut r = vec![0.0f64; self.graph.vertex_count()];
        for &(a, b) in self.graph.edges() {
            let d = self.edge_length((a, b));
            r[a] = r[a].max(d / 2.0);
            r[b] = r[b].max(d / 2.0);
        }
        r
    }

    /// Full ply-disk set (full disks D_v and shrunk disks D'_v).
    pub fn ply_disks(&self) -> Result<PlyDiskSet, DrawingError> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(DrawingError::Invalid(violations));
        }
        let radii = self.ply_radii();
        Ok(PlyDiskSet {
            radii: radii.clone(),
            disks: radii
                .iter()
                .enumerate()
                .map(|(v, &r)| Disk::new(self.positions[v], r))
                .collect(),
        })
    }
}

/// Per-vertex ply-disks D_v; shrunk disks D'_v are the same centers at half
/// radius. Zero-radius entries belong to isolated vertices and contribute
/// no disk.
#[derive(Debug, Clone)]
pub struct PlyDiskSet {
    radii: Vec<f64>,
    disks: Vec<Disk>,
}

impl PlyDiskSet {
    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn disk(&self, v: usize) -> Disk {
        self.disks[v]
    }

    pub fn shrunk_disk(&self, v: usize) -> Disk {
        Disk::new(self.disks[v].center, self.disks[v].radius / 2.0)
    }

    /// The positive-radius disks, with their vertex ids.
    pub fn active_disks(&self) -> impl Iterator<Item = (usize, Disk)> + '_ {
        self.disks
            .iter()
            .enumerate()
            .filter(|(_, d)| d.radius > 0.0)
            .map(|(v, d)| (v, *d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> Drawing {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        Drawing::new(g, vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)])
    }

    #[test]
    fn p2_validates_and_has_half_radii() {
        let d = p2();
        assert!(d.validate().is_empty());
        assert_eq!(d.ply_radii(), vec![0.5, 0.5]);
    }

    #[test]
    fn coincident_vertices_rejected() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let d = Drawing::new(g, vec![Point::new(0.0, 0.0), Point::new(0.0, 0.0)]);
        assert_eq!(d.validate(), vec![Violation::CoincidentVertices(0, 1)]);
        assert!(d.ply_disks().is_err());
    }

    #[test]
    fn self_loop_rejected_at_graph_level() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn star_radii() {
        let g = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
        let d = Drawing::new(
            g,
            vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(2.0, 0.0)],
        );
        assert_eq!(d.ply_radii(), vec![1.0, 0.5, 1.0]);
    }

    #[test]
    fn isolated_vertex_has_no_disk() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let d = Drawing::new(
            g,
            vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(5.0, 5.0)],
        );
        let set = d.ply_disks().unwrap();
        assert_eq!(set.radii()[2], 0.0);
        assert_eq!(set.active_disks().count(), 2);
    }

    #[test]
    fn scaling_scales_radii() {
        let d = p2();
        let scaled = Drawing::new(
            d.graph.clone(),
            d.positions.iter().map(|p| Point::new(3.0 * p.x, 3.0 * p.y)).collect(),
        );
        let r0 = d.ply_radii();
        let r1 = scaled.ply_radii();
        for (a, b) in r0.iter().zip(&r1) {
            assert!((b - 3.0 * a).abs() < 1e-12);
        }
    }
}
