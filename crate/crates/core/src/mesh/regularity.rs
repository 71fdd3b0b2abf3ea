//! Shape-regularity diagnostics.
//!
//! The star-shapedness check is a proxy: the radius of the largest disc
//! around x_E that avoids the sampled boundary, plus a sign check of the
//! fan map from x_E. It cannot certify star-shapedness w.r.t. a ball.

use super::CurvedMesh;
use crate::curve::{cross, Vec2};
use crate::error::{Result, VemError};

const CURVED_SAMPLES: usize = 33;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElementRegularity {
    /// min_e h_e / h_E.
    pub min_edge_ratio: f64,
    /// Inscribed-disc radius around x_E over h_E / 2 (1 for a disc).
    pub star_ratio: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Violation {
    ShortEdge { element: usize, local_edge: usize, ratio: f64 },
    SmallBall { element: usize, ratio: f64 },
    /// Some boundary point is not visible from x_E.
    NotStarShaped { element: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegularityReport {
    pub rho: f64,
    pub elements: Vec<ElementRegularity>,
    pub violations: Vec<Violation>,
    pub min_edge_ratio: f64,
    pub min_star_ratio: f64,
}

impl RegularityReport {
    pub fn is_regular(&self) -> bool {
        self.violations.is_empty()
    }
}

fn segment_distance(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let d = b - a;
    let s = ((p - a).dot(&d) / d.norm_squared()).clamp(0.0, 1.0);
    (p - (a + d * s)).norm()
}

/// Checks h_e >= rho h_E and the ball proxy against rho h_E on every element.
pub fn validate_mesh(mesh: &CurvedMesh, rho: f64) -> Result<RegularityReport> {
    if !(rho > 0.0 && rho < 1.0) {
        return Err(VemError::Argument(format!("rho must lie in (0, 1), got {rho}")));
    }
    check_topology(mesh)?;

    let mut report = RegularityReport {
        rho,
        elements: Vec::with_capacity(mesh.n_elements()),
        violations: Vec::new(),
        min_edge_ratio: f64::INFINITY,
        min_star_ratio: f64::INFINITY,
    };
    for (ie, el) in mesh.elements.iter().enumerate() {
        let h = el.diameter;
        let x = el.centroid;
        let mut min_edge = f64::INFINITY;
        let mut radius = f64::INFINITY;
        let mut visible = true;
        for i in 0..el.n_vertices() {
            let p = mesh.edge_param(ie, i);
            let ratio = p.chord_length() / h;
            min_edge = min_edge.min(ratio);
            if ratio < rho {
                report.violations.push(Violation::ShortEdge { element: ie, local_edge: i, ratio });
            }
            if p.is_curved() {
                let pts: Vec<Vec2> =
                    (0..CURVED_SAMPLES).map(|s| p.point(-1.0 + 2.0 * s as f64 / (CURVED_SAMPLES - 1) as f64)).collect();
                for w in pts.windows(2) {
                    radius = radius.min(segment_distance(x, w[0], w[1]));
                }
                for s in 0..CURVED_SAMPLES {
                    let tau = -1.0 + 2.0 * s as f64 / (CURVED_SAMPLES - 1) as f64;
                    visible &= cross(p.point(tau) - x, p.d1(tau)) > 0.0;
                }
            } else {
                radius = radius.min(segment_distance(x, p.start, p.end));
                visible &= cross(p.start - x, p.end - p.start) > 0.0;
            }
        }
        let star_ratio = (2.0 * radius / h).min(1.0);
        if !visible {
            report.violations.push(Violation::NotStarShaped { element: ie });
        } else if star_ratio < rho {
            report.violations.push(Violation::SmallBall { element: ie, ratio: star_ratio });
        }
        report.min_edge_ratio = report.min_edge_ratio.min(min_edge);
        report.min_star_ratio = report.min_star_ratio.min(star_ratio);
        report.elements.push(ElementRegularity { min_edge_ratio: min_edge, star_ratio });
    }
    Ok(report)
}

/// Every edge has one or two incidences, and boundary edges close up into
/// loops (each boundary node touches exactly two boundary edges).
fn check_topology(mesh: &CurvedMesh) -> Result<()> {
    let mut degree = vec![0usize; mesh.n_nodes()];
    for (id, e) in mesh.edges.iter().enumerate() {
        match e.incidences.len() {
            1 => {
                degree[e.nodes[0]] += 1;
                degree[e.nodes[1]] += 1;
            }
            2 => {}
            m => return Err(VemError::Structural(format!("edge {id} has {m} incident elements"))),
        }
    }
    if let Some(v) = degree.iter().position(|&d| d != 0 && d != 2) {
        return Err(VemError::Structural(format!(
            "boundary node {v} touches {} boundary edges; an interior edge is missing a neighbour",
            degree[v]
        )));
    }
    Ok(())
}
