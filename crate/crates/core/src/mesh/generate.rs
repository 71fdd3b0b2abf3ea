//! Mapped-square meshes of a channel bounded by two graph curves.

use std::sync::Arc;

use super::voronoi::{self, VoronoiSpec};
use super::{CurvedMesh, EdgeCurve};
use crate::curve::{Curve, Vec2};
use crate::error::{Result, VemError};

/// Base tessellation of the unit square.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BaseFamily {
    /// n x n squares.
    Quad { n: usize },
    Voronoi(VoronoiSpec),
}

/// Polygonal mesh of the closed unit square.
#[derive(Debug, Clone, PartialEq)]
pub struct BaseMesh {
    pub nodes: Vec<Vec2>,
    pub loops: Vec<Vec<usize>>,
}

impl BaseMesh {
    pub fn new(family: &BaseFamily) -> Result<Self> {
        match *family {
            BaseFamily::Quad { n } => Ok(Self::quad(n)?),
            BaseFamily::Voronoi(spec) => {
                let (nodes, loops) = voronoi::tessellate(&spec)?;
                Ok(BaseMesh { nodes, loops })
            }
        }
    }

    /// Node (i, j) has id j (n + 1) + i; elements are listed row by row.
    pub fn quad(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(VemError::Argument("quad mesh needs n >= 1".into()));
        }
        let mut nodes = Vec::with_capacity((n + 1) * (n + 1));
        for j in 0..=n {
            for i in 0..=n {
                nodes.push(Vec2::new(i as f64 / n as f64, j as f64 / n as f64));
            }
        }
        let id = |i: usize, j: usize| j * (n + 1) + i;
        let loops = (0..n)
            .flat_map(|j| (0..n).map(move |i| vec![id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)]))
            .collect();
        Ok(BaseMesh { nodes, loops })
    }
}

/// Height of a graph curve at abscissa x.
fn graph(curve: &Curve, x: f64) -> f64 {
    curve.point(x).y
}

/// Maps the unit square onto the channel between the graphs of `bottom`
/// and `top`, fixing the line y = 1/2.
pub fn map_square_node(p: Vec2, bottom: &Curve, top: &Curve) -> Vec2 {
    if p.y <= 0.5 {
        Vec2::new(p.x, p.y + graph(bottom, p.x) * (1.0 - 2.0 * p.y))
    } else {
        Vec2::new(p.x, 1.0 - p.y + graph(top, p.x) * (2.0 * p.y - 1.0))
    }
}

/// Maps a base mesh onto the channel. Base edges on y = 0 (y = 1) become
/// sub-arcs of `bottom` (`top`) parametrized by abscissa; both curves must
/// be graphs t -> (t, g(t)) over [0, 1]. Straight curves yield straight edges.
pub fn generate_mapped_mesh(family: &BaseFamily, bottom: Arc<Curve>, top: Arc<Curve>) -> Result<CurvedMesh> {
    let base = BaseMesh::new(family)?;
    mesh_from_base(&base, bottom, top)
}

/// Straight-edged mesh of the unit square.
pub fn generate_square_mesh(family: &BaseFamily) -> Result<CurvedMesh> {
    let bottom = Arc::new(Curve::segment("bottom", Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0)));
    let top = Arc::new(Curve::segment("top", Vec2::new(0.0, 1.0), Vec2::new(1.0, 1.0)));
    generate_mapped_mesh(family, bottom, top)
}

pub(crate) fn mesh_from_base(base: &BaseMesh, bottom: Arc<Curve>, top: Arc<Curve>) -> Result<CurvedMesh> {
    for c in [&bottom, &top] {
        if !(c.contains(0.0) && c.contains(1.0)) {
            return Err(VemError::Argument(format!("curve '{}' must be defined on [0, 1]", c.id)));
        }
    }
    let nodes: Vec<Vec2> = base.nodes.iter().map(|&p| map_square_node(p, &bottom, &top)).collect();
    let mut edge_curves = Vec::new();
    for (ie, lp) in base.loops.iter().enumerate() {
        let n = lp.len();
        for i in 0..n {
            let (a, b) = (base.nodes[lp[i]], base.nodes[lp[(i + 1) % n]]);
            let side = if a.y == 0.0 && b.y == 0.0 {
                Some((0, &bottom))
            } else if a.y == 1.0 && b.y == 1.0 {
                Some((1, &top))
            } else {
                None
            };
            if let Some((curve, c)) = side {
                if !c.is_straight() {
                    edge_curves.push(EdgeCurve { element: ie, local_edge: i, curve, t0: a.x, t1: b.x });
                }
            }
        }
    }
    CurvedMesh::new(nodes, vec![bottom, top], base.loops.clone(), &edge_curves)
}

/// Replaces every arc by the chord between its endpoints.
pub fn straighten_boundary(mesh: &CurvedMesh) -> Result<CurvedMesh> {
    let loops = mesh.elements.iter().map(|e| e.vertices.clone()).collect();
    CurvedMesh::new(mesh.nodes.clone(), Vec::new(), loops, &[])
}
