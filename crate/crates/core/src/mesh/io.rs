//! JSON mesh files.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{CurvedMesh, EdgeCurve, EdgeGeometry};
use crate::curve::{CubicSpline, Curve, CurveKind, Vec2};
use crate::error::{Result, VemError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveRecord {
    pub id: String,
    #[serde(rename = "type")]
    pub kind: String,
    pub params: Vec<f64>,
    pub t_range: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeCurveRecord {
    pub element: usize,
    pub local_edge: usize,
    pub curve_id: String,
    pub t0: f64,
    pub t1: f64,
}

/// On-disk layout of a mesh.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeshFile {
    pub nodes: Vec<[f64; 2]>,
    #[serde(default)]
    pub curves: Vec<CurveRecord>,
    pub elements: Vec<Vec<usize>>,
    #[serde(default)]
    pub edge_curves: Vec<EdgeCurveRecord>,
}

fn curve_record(c: &Curve) -> Result<CurveRecord> {
    let (kind, params) = match &c.kind {
        CurveKind::SineGraph { amplitude, frequency, offset } => ("sine-graph", vec![*amplitude, *frequency, *offset]),
        CurveKind::Segment { start, end } => ("segment", vec![start.x, start.y, end.x, end.y]),
        CurveKind::Spline(s) => ("polyline-spline", s.points().iter().flat_map(|p| [p.x, p.y]).collect()),
        CurveKind::Custom(_) => {
            return Err(VemError::Validation(format!("curve '{}' has no file representation", c.id)))
        }
    };
    Ok(CurveRecord { id: c.id.clone(), kind: kind.into(), params, t_range: [c.t_range.0, c.t_range.1] })
}

fn curve_from_record(r: &CurveRecord) -> Result<Curve> {
    let bad = |what: &str| VemError::Validation(format!("curve '{}': {what}", r.id));
    let kind = match r.kind.as_str() {
        "sine-graph" => match r.params[..] {
            [amplitude, frequency, offset] => CurveKind::SineGraph { amplitude, frequency, offset },
            _ => return Err(bad("sine-graph needs [amplitude, frequency, offset]")),
        },
        "segment" => match r.params[..] {
            [x0, y0, x1, y1] => CurveKind::Segment { start: Vec2::new(x0, y0), end: Vec2::new(x1, y1) },
            _ => return Err(bad("segment needs [x0, y0, x1, y1]")),
        },
        "polyline-spline" => {
            if r.params.len() < 4 || !r.params.len().is_multiple_of(2) {
                return Err(bad("polyline-spline needs an even number (>= 4) of coordinates"));
            }
            CurveKind::Spline(CubicSpline::new(r.params.chunks(2).map(|c| Vec2::new(c[0], c[1])).collect()))
        }
        other => return Err(bad(&format!("unknown type '{other}'"))),
    };
    Curve::new(r.id.clone(), kind, (r.t_range[0], r.t_range[1]))
}

impl MeshFile {
    pub fn from_mesh(mesh: &CurvedMesh) -> Result<Self> {
        let curves = mesh.curves.iter().map(|c| curve_record(c)).collect::<Result<Vec<_>>>()?;
        let mut edge_curves = Vec::new();
        for (ie, el) in mesh.elements.iter().enumerate() {
            for (i, &eid) in el.edges.iter().enumerate() {
                if let EdgeGeometry::Arc { curve, t0, t1 } = mesh.edges[eid].geometry {
                    let (t0, t1) = if el.forward[i] { (t0, t1) } else { (t1, t0) };
                    edge_curves.push(EdgeCurveRecord {
                        element: ie,
                        local_edge: i,
                        curve_id: mesh.curves[curve].id.clone(),
                        t0,
                        t1,
                    });
                }
            }
        }
        Ok(MeshFile {
            nodes: mesh.nodes.iter().map(|p| [p.x, p.y]).collect(),
            curves,
            elements: mesh.elements.iter().map(|e| e.vertices.clone()).collect(),
            edge_curves,
        })
    }

    pub fn into_mesh(self) -> Result<CurvedMesh> {
        let curves: Vec<Arc<Curve>> =
            self.curves.iter().map(|r| curve_from_record(r).map(Arc::new)).collect::<Result<_>>()?;
        let mut edge_curves = Vec::with_capacity(self.edge_curves.len());
        for r in &self.edge_curves {
            let curve = curves
                .iter()
                .position(|c| c.id == r.curve_id)
                .ok_or_else(|| VemError::Validation(format!("unknown curve id '{}'", r.curve_id)))?;
            edge_curves.push(EdgeCurve { element: r.element, local_edge: r.local_edge, curve, t0: r.t0, t1: r.t1 });
        }
        let nodes = self.nodes.iter().map(|p| Vec2::new(p[0], p[1])).collect();
        CurvedMesh::new(nodes, curves, self.elements, &edge_curves)
    }
}

/// Writes the mesh as JSON. Floats use the shortest representation that
/// round-trips exactly.
pub fn write_mesh(mesh: &CurvedMesh, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(&MeshFile::from_mesh(mesh)?)?;
    std::fs::write(path, text).map_err(|e| VemError::io(path, e))
}

pub fn read_mesh(path: &Path) -> Result<CurvedMesh> {
    let text = std::fs::read_to_string(path).map_err(|e| VemError::io(path, e))?;
    serde_json::from_str::<MeshFile>(&text)?.into_mesh()
}
