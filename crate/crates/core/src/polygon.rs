//! Elements as closed loops of (possibly curved) edges.

use crate::curve::{cross, EdgeParam, Vec2};
use crate::error::{Result, VemError};
use crate::quadrature::rules::gauss_legendre;

const CURVED_GEOMETRY_POINTS: usize = 24;
/// Samples per curved edge when searching for the diameter.
pub const DIAMETER_SAMPLES: usize = 17;

/// A polygon whose edges are straight segments or curve arcs, traversed
/// counterclockwise, together with its integral geometry.
#[derive(Debug, Clone)]
pub struct CurvedPolygon {
    pub edges: Vec<EdgeParam>,
    /// Diameter h_E.
    pub diameter: f64,
    /// Barycenter x_E.
    pub centroid: Vec2,
    pub area: f64,
    pub boundary_length: f64,
}

/// Geometric summary returned by [`CurvedPolygon::geometry`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElementGeometry {
    pub diameter: f64,
    pub centroid: Vec2,
    pub area: f64,
    pub boundary_length: f64,
}

impl CurvedPolygon {
    /// Builds the polygon and computes area and barycenter as boundary
    /// integrals (divergence theorem), exact on straight edges.
    pub fn new(edges: Vec<EdgeParam>) -> Result<Self> {
        let n = edges.len();
        if n < 2 {
            return Err(VemError::Geometry(format!("polygon with {n} edges")));
        }
        let scale = edges.iter().map(|e| e.chord_length()).fold(0.0, f64::max);
        for i in 0..n {
            let gap = (edges[i].end - edges[(i + 1) % n].start).norm();
            if gap > 1e-10 * scale.max(1e-300) {
                return Err(VemError::Geometry(format!("edge {i} does not close onto edge {}", (i + 1) % n)));
            }
        }
        if n == 2 && !edges.iter().any(|e| e.is_curved()) {
            return Err(VemError::Geometry("two straight edges enclose no area".into()));
        }

        // moments about the first vertex: |E| = 1/2 \oint X.n, \int X = 1/3 \oint X (X.n)
        let origin = edges[0].start;
        let mut area = 0.0;
        let mut first = Vec2::zeros();
        for e in &edges {
            let rule = gauss_legendre(if e.is_curved() { CURVED_GEOMETRY_POINTS } else { 2 });
            for (&tau, &w) in rule.nodes.iter().zip(&rule.weights) {
                let x = e.point(tau) - origin;
                let flux = cross(x, e.d1(tau)) * w;
                area += 0.5 * flux;
                first += x * (flux / 3.0);
            }
        }
        if !(area > 0.0) {
            return Err(VemError::Orientation { element: 0, area });
        }
        let centroid = origin + first / area;

        let mut samples: Vec<Vec2> = Vec::new();
        for e in &edges {
            samples.push(e.start);
            if e.is_curved() {
                for s in 1..DIAMETER_SAMPLES - 1 {
                    samples.push(e.point(-1.0 + 2.0 * s as f64 / (DIAMETER_SAMPLES - 1) as f64));
                }
            }
        }
        let mut diameter: f64 = 0.0;
        for i in 0..samples.len() {
            for j in i + 1..samples.len() {
                diameter = diameter.max((samples[i] - samples[j]).norm());
            }
        }
        let boundary_length = edges.iter().map(EdgeParam::length).sum();

        Ok(CurvedPolygon { edges, diameter, centroid, area, boundary_length })
    }

    /// Straight-edged polygon through `vertices` (counterclockwise).
    pub fn from_vertices(vertices: &[Vec2]) -> Result<Self> {
        let n = vertices.len();
        Self::new((0..n).map(|i| EdgeParam::straight(vertices[i], vertices[(i + 1) % n])).collect())
    }

    pub fn vertices(&self) -> Vec<Vec2> {
        self.edges.iter().map(|e| e.start).collect()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_curved_edge(&self) -> bool {
        self.edges.iter().any(EdgeParam::is_curved)
    }

    pub fn geometry(&self) -> ElementGeometry {
        ElementGeometry {
            diameter: self.diameter,
            centroid: self.centroid,
            area: self.area,
            boundary_length: self.boundary_length,
        }
    }

    /// Affine image x -> scale * x + shift.
    pub fn transformed(&self, scale: f64, shift: Vec2) -> Result<Self> {
        let edges = self
            .edges
            .iter()
            .map(|e| match &e.shape {
                crate::curve::EdgeShape::Straight => {
                    EdgeParam::straight(e.start * scale + shift, e.end * scale + shift)
                }
                crate::curve::EdgeShape::Arc { .. } => {
                    let inner = std::sync::Arc::new(crate::curve::Curve {
                        id: "transformed".into(),
                        kind: crate::curve::CurveKind::Custom(std::sync::Arc::new(AffineEdge {
                            edge: e.clone(),
                            scale,
                            shift,
                        })),
                        t_range: (-1.0, 1.0),
                    });
                    EdgeParam::arc(inner, -1.0, 1.0)
                }
            })
            .collect();
        Self::new(edges)
    }
}

#[derive(Debug)]
struct AffineEdge {
    edge: EdgeParam,
    scale: f64,
    shift: Vec2,
}

impl crate::curve::Parametrization for AffineEdge {
    fn eval(&self, t: f64) -> Vec2 {
        self.edge.point(t) * self.scale + self.shift
    }
    fn deriv1(&self, t: f64) -> Vec2 {
        self.edge.d1(t) * self.scale
    }
    fn deriv2(&self, t: f64) -> Vec2 {
        self.edge.d2(t) * self.scale
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::curve::Curve;

    #[test]
    fn unit_square() {
        let sq = CurvedPolygon::from_vertices(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(0.0, 1.0),
        ])
        .unwrap();
        let g = sq.geometry();
        assert!((g.diameter - 2f64.sqrt()).abs() < 1e-15);
        assert!((g.centroid - Vec2::new(0.5, 0.5)).norm() < 1e-15);
        assert!((g.area - 1.0).abs() < 1e-15);
        assert!((g.boundary_length - 4.0).abs() < 1e-15);
    }

    #[test]
    fn triangle() {
        let t = CurvedPolygon::from_vertices(&[Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)])
            .unwrap();
        assert!((t.area - 0.5).abs() < 1e-15);
        assert!((t.centroid - Vec2::new(1.0 / 3.0, 1.0 / 3.0)).norm() < 1e-15);
    }

    #[test]
    fn clockwise_is_orientation_error() {
        let r = CurvedPolygon::from_vertices(&[Vec2::new(0.0, 0.0), Vec2::new(0.0, 1.0), Vec2::new(1.0, 0.0)]);
        assert!(matches!(r, Err(VemError::Orientation { .. })));
    }

    pub(crate) fn square_with_sine_bottom() -> CurvedPolygon {
        let bottom = Arc::new(Curve::channel_bottom());
        CurvedPolygon::new(vec![
            EdgeParam::arc(bottom, 0.0, 1.0),
            EdgeParam::straight(Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0)),
            EdgeParam::straight(Vec2::new(1.0, 1.0), Vec2::new(0.0, 1.0)),
            EdgeParam::straight(Vec2::new(0.0, 1.0), Vec2::new(0.0, 0.0)),
        ])
        .unwrap()
    }

    #[test]
    fn curved_square_area() {
        let p = square_with_sine_bottom();
        let expected = 1.0 - 0.05 * 2.0 / std::f64::consts::PI;
        assert!((p.area - expected).abs() < 1e-13, "{}", p.area);
        assert!((p.area - 0.968169).abs() < 1e-6);
        // barycenter: x by symmetry, y = (1/2 - \int g^2 / 2) / area
        let y = (0.5 - 0.5 * 0.05f64.powi(2) * 0.5) / p.area;
        assert!((p.centroid - Vec2::new(0.5, y)).norm() < 1e-13);
        assert!(p.boundary_length > 4.0);
    }
}
