//! Numerical integration on edges and curved polygons.
//!
//! * [`rules`]: 1D Gauss-Legendre and Gauss-Lobatto rules.
//! * [`edge_rule`]: Gauss rules mapped onto an edge, metric included.
//! * [`integrate_monomial`] / [`monomial_integrals`]: scaled monomials over an
//!   element via the divergence theorem, reduced to edge integrals.
//! * [`integrate_function`] / [`area_rule`]: general integrands on a fan of
//!   (possibly curved) triangles from the barycenter.

pub mod rules;

use crate::basis::{self, MonomialBasis};
use crate::curve::{cross, EdgeParam, Vec2};
use crate::error::{Result, VemError};
use crate::polygon::CurvedPolygon;

pub use rules::{gauss_legendre, gauss_lobatto, Rule1D};

/// Extra exactness used for monomial integration on curved edges.
const CURVED_MONOMIAL_EXTRA: usize = 20;
/// Extra Gauss points per direction on curved fan triangles.
const CURVED_FAN_EXTRA: usize = 4;

/// Gauss rule mapped onto an edge. Weights carry |gamma'| and the interval
/// scaling, so `sum(weights)` is the edge length.
#[derive(Debug, Clone)]
pub struct EdgeRule {
    pub points: Vec<Vec2>,
    /// Reference parameters tau in [-1, 1].
    pub params: Vec<f64>,
    pub weights: Vec<f64>,
}

impl EdgeRule {
    pub fn integrate(&self, f: impl Fn(Vec2) -> f64) -> f64 {
        self.points.iter().zip(&self.weights).map(|(&p, &w)| w * f(p)).sum()
    }
}

/// Gauss rule exact for polynomial degree `order` in the edge parameter.
pub fn edge_rule(edge: &EdgeParam, order: usize) -> EdgeRule {
    let rule = rules::gauss_for_degree(order.max(1));
    let mut out = EdgeRule {
        points: Vec::with_capacity(rule.len()),
        params: rule.nodes.clone(),
        weights: Vec::with_capacity(rule.len()),
    };
    for (&tau, &w) in rule.nodes.iter().zip(&rule.weights) {
        out.points.push(edge.point(tau));
        out.weights.push(w * edge.d1(tau).norm());
    }
    out
}

/// \int_E ((x - x_E)/h_E)^alpha for every alpha with |alpha| <= max_degree,
/// in graded lexicographic order.
///
/// Each monomial m of degree d is homogeneous in X = x - x_E, so
/// div(X m) = (d + 2) m and the area integral becomes
/// (1/(d+2)) \oint m (X . n) ds.
pub fn monomial_integrals(poly: &CurvedPolygon, max_degree: usize) -> Vec<f64> {
    let basis = MonomialBasis::new(max_degree, poly.centroid, poly.diameter);
    let mut out = vec![0.0; basis::dim(max_degree)];
    for e in &poly.edges {
        let order = if e.is_curved() { max_degree + CURVED_MONOMIAL_EXTRA } else { max_degree + 1 };
        let rule = rules::gauss_for_degree(order);
        for (&tau, &w) in rule.nodes.iter().zip(&rule.weights) {
            let x = e.point(tau);
            let flux = cross(x - poly.centroid, e.d1(tau)) * w;
            for (slot, m) in out.iter_mut().zip(basis.values(x)) {
                *slot += m * flux;
            }
        }
    }
    for (slot, &(a, b)) in out.iter_mut().zip(basis.exponents()) {
        *slot /= (a + b + 2) as f64;
    }
    out
}

/// \int_E ((x - x_E)/h_E)^alpha dE for a single multi-index.
pub fn integrate_monomial(poly: &CurvedPolygon, alpha: (usize, usize)) -> f64 {
    monomial_integrals(poly, alpha.0 + alpha.1)[basis::index(alpha.0, alpha.1)]
}

/// Quadrature points and weights covering an element.
#[derive(Debug, Clone, Default)]
pub struct AreaRule {
    pub points: Vec<Vec2>,
    pub weights: Vec<f64>,
}

impl AreaRule {
    pub fn integrate(&self, f: impl Fn(Vec2) -> f64) -> f64 {
        self.points.iter().zip(&self.weights).map(|(&p, &w)| w * f(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Fan rule of polynomial exactness `order`: one triangle per edge with apex
/// at the barycenter, mapped by X(s, tau) = x_E + s (gamma(tau) - x_E),
/// which reproduces curved sides exactly. Jacobian s * (gamma - x_E) x gamma'.
pub fn area_rule(poly: &CurvedPolygon, order: usize) -> Result<AreaRule> {
    let apex = poly.centroid;
    let mut out = AreaRule::default();
    for (ie, e) in poly.edges.iter().enumerate() {
        let extra = if e.is_curved() { CURVED_FAN_EXTRA } else { 0 };
        let radial = rules::gauss_for_degree(order + 1 + 2 * extra);
        let along = rules::gauss_for_degree(order + 2 * extra);
        for (&tau, &wt) in along.nodes.iter().zip(&along.weights) {
            let g = e.point(tau);
            let jac = cross(g - apex, e.d1(tau));
            if !(jac > 0.0) {
                return Err(VemError::Geometry(format!(
                    "edge {ie}: non-positive fan Jacobian {jac:e}; element not star-shaped w.r.t. its barycenter"
                )));
            }
            for (&r, &wr) in radial.nodes.iter().zip(&radial.weights) {
                let s = 0.5 * (r + 1.0);
                out.points.push(apex + (g - apex) * s);
                out.weights.push(0.5 * wr * wt * s * jac);
            }
        }
    }
    Ok(out)
}

/// \int_E phi dE on the fan rule of exactness `order`.
pub fn integrate_function(poly: &CurvedPolygon, phi: impl Fn(Vec2) -> f64, order: usize) -> Result<f64> {
    Ok(area_rule(poly, order)?.integrate(phi))
}
