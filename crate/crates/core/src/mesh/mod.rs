//! Curved polygonal meshes: data model, generators, file I/O and
//! regularity diagnostics.

mod generate;
mod io;
mod regularity;
pub mod voronoi;

use std::collections::HashMap;
use std::sync::Arc;

use crate::curve::{cross, Curve, EdgeParam, Vec2};
use crate::error::{Result, VemError};
use crate::polygon::{CurvedPolygon, ElementGeometry};
use crate::quadrature::rules::gauss_legendre;

pub use generate::{generate_mapped_mesh, generate_square_mesh, map_square_node, straighten_boundary, BaseFamily, BaseMesh};
pub use io::{read_mesh, write_mesh, MeshFile};
pub use regularity::{validate_mesh, ElementRegularity, RegularityReport, Violation};

/// Relative tolerance when matching curve endpoints to node coordinates.
const NODE_MATCH_TOL: f64 = 1e-9;

/// Geometry of a mesh edge in its global orientation (lower node id first).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeGeometry {
    Straight,
    /// Sub-arc of `mesh.curves[curve]`; gamma(t0) is `nodes[0]`.
    Arc { curve: usize, t0: f64, t1: f64 },
}

#[derive(Debug, Clone)]
pub struct Edge {
    /// Endpoints, lower id first. This fixes the global tangent and normal.
    pub nodes: [usize; 2],
    pub geometry: EdgeGeometry,
    /// (element, local edge) pairs, one on the boundary and two inside.
    pub incidences: Vec<(usize, usize)>,
}

impl Edge {
    pub fn is_boundary(&self) -> bool {
        self.incidences.len() == 1
    }

    pub fn is_curved(&self) -> bool {
        matches!(self.geometry, EdgeGeometry::Arc { .. })
    }
}

#[derive(Debug, Clone)]
pub struct Element {
    /// Vertex ids, counterclockwise. Local edge i joins vertex i to i + 1.
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    /// Whether local edge i runs along the global orientation of its edge.
    pub forward: Vec<bool>,
    pub diameter: f64,
    pub centroid: Vec2,
    pub area: f64,
    pub boundary_length: f64,
}

impl Element {
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }
}

/// Arc assignment of one local edge, as used when building a mesh.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeCurve {
    pub element: usize,
    pub local_edge: usize,
    pub curve: usize,
    /// Parameter at the local edge's first vertex.
    pub t0: f64,
    pub t1: f64,
}

/// Immutable curved polygonal mesh.
#[derive(Debug, Clone)]
pub struct CurvedMesh {
    pub nodes: Vec<Vec2>,
    pub curves: Vec<Arc<Curve>>,
    pub elements: Vec<Element>,
    pub edges: Vec<Edge>,
}

impl CurvedMesh {
    /// Builds edges and element geometry from vertex loops plus arc
    /// assignments, checking orientation and topological consistency.
    pub fn new(
        nodes: Vec<Vec2>,
        curves: Vec<Arc<Curve>>,
        loops: Vec<Vec<usize>>,
        edge_curves: &[EdgeCurve],
    ) -> Result<Self> {
        let mut arcs: HashMap<(usize, usize), &EdgeCurve> = HashMap::new();
        for ec in edge_curves {
            let nv = loops.get(ec.element).map(Vec::len).ok_or_else(|| {
                VemError::Structural(format!("edge curve refers to missing element {}", ec.element))
            })?;
            if ec.local_edge >= nv {
                return Err(VemError::Structural(format!(
                    "element {} has no local edge {}",
                    ec.element, ec.local_edge
                )));
            }
            if ec.curve >= curves.len() {
                return Err(VemError::Structural(format!("unknown curve index {}", ec.curve)));
            }
            if arcs.insert((ec.element, ec.local_edge), ec).is_some() {
                return Err(VemError::Structural(format!(
                    "element {} local edge {} carries more than one curve",
                    ec.element, ec.local_edge
                )));
            }
        }

        let mut edges: Vec<Edge> = Vec::new();
        let mut by_nodes: HashMap<(usize, usize), usize> = HashMap::new();
        let mut elements = Vec::with_capacity(loops.len());
        for (ie, verts) in loops.into_iter().enumerate() {
            let n = verts.len();
            if n < 3 {
                return Err(VemError::Structural(format!("element {ie} has {n} vertices")));
            }
            if let Some(&v) = verts.iter().find(|&&v| v >= nodes.len()) {
                return Err(VemError::Structural(format!("element {ie} refers to missing node {v}")));
            }
            let mut eids = Vec::with_capacity(n);
            let mut forward = Vec::with_capacity(n);
            for i in 0..n {
                let (a, b) = (verts[i], verts[(i + 1) % n]);
                if a == b {
                    return Err(VemError::Structural(format!("element {ie} has a repeated vertex {a}")));
                }
                let key = (a.min(b), a.max(b));
                let fwd = a < b;
                let geometry = match arcs.get(&(ie, i)) {
                    None => EdgeGeometry::Straight,
                    Some(ec) => {
                        let (t0, t1) = if fwd { (ec.t0, ec.t1) } else { (ec.t1, ec.t0) };
                        check_arc(&curves[ec.curve], t0, t1, nodes[key.0], nodes[key.1], ie, i)?;
                        EdgeGeometry::Arc { curve: ec.curve, t0, t1 }
                    }
                };
                let id = match by_nodes.get(&key) {
                    Some(&id) => {
                        let edge: &mut Edge = &mut edges[id];
                        if !same_geometry(&edge.geometry, &geometry) {
                            return Err(VemError::Structural(format!(
                                "edge {key:?} has different geometry in elements {} and {ie}",
                                edge.incidences[0].0
                            )));
                        }
                        edge.incidences.push((ie, i));
                        id
                    }
                    None => {
                        by_nodes.insert(key, edges.len());
                        edges.push(Edge { nodes: [key.0, key.1], geometry, incidences: vec![(ie, i)] });
                        edges.len() - 1
                    }
                };
                eids.push(id);
                forward.push(fwd);
            }
            elements.push(Element {
                vertices: verts,
                edges: eids,
                forward,
                diameter: 0.0,
                centroid: Vec2::zeros(),
                area: 0.0,
                boundary_length: 0.0,
            });
        }

        for (id, e) in edges.iter().enumerate() {
            match e.incidences.len() {
                1 => {}
                2 => {
                    let (f0, f1) = (
                        elements[e.incidences[0].0].forward[e.incidences[0].1],
                        elements[e.incidences[1].0].forward[e.incidences[1].1],
                    );
                    if f0 == f1 {
                        return Err(VemError::Topology(format!(
                            "edge {id} is traversed in the same direction by elements {} and {}",
                            e.incidences[0].0, e.incidences[1].0
                        )));
                    }
                }
                m => return Err(VemError::Structural(format!("edge {id} is shared by {m} elements"))),
            }
        }

        let mut mesh = CurvedMesh { nodes, curves, elements, edges };
        for ie in 0..mesh.elements.len() {
            let g = mesh.element_geometry(ie)?;
            let el = &mut mesh.elements[ie];
            el.diameter = g.diameter;
            el.centroid = g.centroid;
            el.area = g.area;
            el.boundary_length = g.boundary_length;
        }
        Ok(mesh)
    }

    /// Local edge `i` of element `ie` in traversal direction.
    pub fn edge_param(&self, ie: usize, i: usize) -> EdgeParam {
        let el = &self.elements[ie];
        let edge = &self.edges[el.edges[i]];
        let param = match edge.geometry {
            EdgeGeometry::Straight => EdgeParam::straight(self.nodes[edge.nodes[0]], self.nodes[edge.nodes[1]]),
            EdgeGeometry::Arc { curve, t0, t1 } => {
                let mut p = EdgeParam::arc(self.curves[curve].clone(), t0, t1);
                // keep the mesh coordinates as the exact endpoints
                p.start = self.nodes[edge.nodes[0]];
                p.end = self.nodes[edge.nodes[1]];
                p
            }
        };
        if el.forward[i] {
            param
        } else {
            param.reversed()
        }
    }

    pub fn polygon(&self, ie: usize) -> Result<CurvedPolygon> {
        let n = self.elements[ie].n_vertices();
        CurvedPolygon::new((0..n).map(|i| self.edge_param(ie, i)).collect()).map_err(|e| match e {
            VemError::Orientation { area, .. } => VemError::Orientation { element: ie, area },
            other => other,
        })
    }

    /// (h_E, x_E, |E|, boundary length) of element `ie`.
    pub fn element_geometry(&self, ie: usize) -> Result<ElementGeometry> {
        Ok(self.polygon(ie)?.geometry())
    }

    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn n_elements(&self) -> usize {
        self.elements.len()
    }

    /// Mesh size h = max h_E.
    pub fn h(&self) -> f64 {
        self.elements.iter().map(|e| e.diameter).fold(0.0, f64::max)
    }

    pub fn has_curved_edges(&self) -> bool {
        self.edges.iter().any(Edge::is_curved)
    }

    pub fn boundary_nodes(&self) -> Vec<bool> {
        let mut on = vec![false; self.nodes.len()];
        for e in self.edges.iter().filter(|e| e.is_boundary()) {
            on[e.nodes[0]] = true;
            on[e.nodes[1]] = true;
        }
        on
    }

    /// Vertex length scale h_v: mean diameter of the elements sharing v.
    pub fn vertex_scales(&self) -> Vec<f64> {
        let mut sum = vec![0.0; self.nodes.len()];
        let mut count = vec![0usize; self.nodes.len()];
        for el in &self.elements {
            for &v in &el.vertices {
                sum[v] += el.diameter;
                count[v] += 1;
            }
        }
        sum.iter().zip(&count).map(|(&s, &c)| if c > 0 { s / c as f64 } else { 0.0 }).collect()
    }

    /// |Omega| from a single line integral over the boundary edges.
    pub fn boundary_area(&self) -> f64 {
        let origin = self.nodes.first().copied().unwrap_or_else(Vec2::zeros);
        let mut area = 0.0;
        for e in self.edges.iter().filter(|e| e.is_boundary()) {
            let (ie, i) = e.incidences[0];
            let p = self.edge_param(ie, i);
            let rule = gauss_legendre(if p.is_curved() { 24 } else { 1 });
            for (&tau, &w) in rule.nodes.iter().zip(&rule.weights) {
                area += 0.5 * w * cross(p.point(tau) - origin, p.d1(tau));
            }
        }
        area
    }
}

fn same_geometry(a: &EdgeGeometry, b: &EdgeGeometry) -> bool {
    match (a, b) {
        (EdgeGeometry::Straight, EdgeGeometry::Straight) => true,
        (EdgeGeometry::Arc { curve: c0, t0: a0, t1: a1 }, EdgeGeometry::Arc { curve: c1, t0: b0, t1: b1 }) => {
            let tol = 1e-12 * (a1 - a0).abs().max(1e-300);
            c0 == c1 && (a0 - b0).abs() <= tol && (a1 - b1).abs() <= tol
        }
        _ => false,
    }
}

fn check_arc(curve: &Curve, t0: f64, t1: f64, p0: Vec2, p1: Vec2, ie: usize, i: usize) -> Result<()> {
    curve.eval(t0)?;
    curve.eval(t1)?;
    if t0 == t1 {
        return Err(VemError::Structural(format!("element {ie} local edge {i}: empty parameter interval")));
    }
    let scale = (p1 - p0).norm().max(1e-300);
    for (t, p) in [(t0, p0), (t1, p1)] {
        let gap = (curve.point(t) - p).norm();
        if gap > NODE_MATCH_TOL * scale.max(1.0) {
            return Err(VemError::Structural(format!(
                "element {ie} local edge {i}: curve '{}' at t={t} misses its node by {gap:e}",
                curve.id
            )));
        }
    }
    Ok(())
}
