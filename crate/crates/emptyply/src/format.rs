//! Versioned JSON interchange format for drawings.

use crate::drawing::{Drawing, Graph};
use crate::geometry::Point;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: usize,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
pub struct Metadata {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameters: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

/// On-disk drawing document. Coordinates are stored as JSON numbers with
/// shortest round-trip formatting, so every f64 survives save/load exactly.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DrawingDocument {
    pub version: u32,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unsupported format version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    #[error("duplicate vertex id {0}")]
    DuplicateId(usize),
    #[error("vertex ids must be 0..{expected}, found {found}")]
    NonDenseIds { expected: usize, found: usize },
    #[error("edge references unknown vertex id {0}")]
    UnknownId(usize),
    #[error("bad graph: {0}")]
    Graph(#[from] crate::drawing::GraphError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl DrawingDocument {
    pub fn from_drawing(d: &Drawing, metadata: Option<Metadata>) -> Self {
        DrawingDocument {
            version: FORMAT_VERSION,
            vertices: d
                .positions
                .iter()
                .enumerate()
                .map(|(id, p)| VertexRecord { id, x: p.x, y: p.y })
                .collect(),
            edges: d.graph.edges().to_vec(),
            metadata,
        }
    }

    pub fn to_drawing(&self) -> Result<Drawing, FormatError> {
        if self.version != FORMAT_VERSION {
            return Err(FormatError::Version(self.version));
        }
        let n = self.vertices.len();
        let mut positions = vec![None; n];
        for v in &self.vertices {
            if v.id >= n {
                return Err(FormatError::NonDenseIds { expected: n, found: v.id });
            }
            if positions[v.id].replace(Point::new(v.x, v.y)).is_some() {
                return Err(FormatError::DuplicateId(v.id));
            }
        }
        for &(a, b) in &self.edges {
            if a >= n {
                return Err(FormatError::UnknownId(a));
            }
            if b >= n {
                return Err(FormatError::UnknownId(b));
            }
        }
        let graph = Graph::new(n, self.edges.iter().copied())?;
        Ok(Drawing::new(graph, positions.into_iter().map(Option::unwrap).collect()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(s)?)
    }
}

pub fn save_drawing(path: &std::path::Path, d: &Drawing, meta: Option<Metadata>) -> Result<(), FormatError> {
    std::fs::write(path, DrawingDocument::from_drawing(d, meta).to_json())?;
    Ok(())
}

pub fn load_drawing(path: &std::path::Path) -> Result<Drawing, FormatError> {
    DrawingDocument::from_json(&std::fs::read_to_string(path)?)?.to_drawing()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_exact() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let d = Drawing::new(
            g,
            vec![
                Point::new(0.1 + 0.2, -1.0 / 3.0),
                Point::new(std::f64::consts::PI, 1e-300),
                Point::new(1.7976931348623157e308, -0.0),
            ],
        );
        let doc = DrawingDocument::from_drawing(&d, None);
        let back = DrawingDocument::from_json(&doc.to_json()).unwrap().to_drawing().unwrap();
        assert_eq!(d, back);
    }

    #[test]
    fn bad_version_rejected() {
        let mut doc = DrawingDocument {
            version: 99,
            vertices: vec![],
            edges: vec![],
            metadata: None,
        };
        assert!(matches!(doc.to_drawing(), Err(FormatError::Version(99))));
        doc.version = FORMAT_VERSION;
        assert!(doc.to_drawing().is_ok());
    }

    #[test]
    fn dangling_edge_rejected() {
        let doc = DrawingDocument {
            version: FORMAT_VERSION,
            vertices: vec![VertexRecord { id: 0, x: 0.0, y: 0.0 }],
            edges: vec![(0, 5)],
            metadata: None,
        };
        assert!(matches!(doc.to_drawing(), Err(FormatError::UnknownId(5))));
    }
}
