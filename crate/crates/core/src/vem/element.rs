//! Per-element geometry cache and edge-trace reconstruction.
//!
//! Traces live in the reference edge parameter tau in [-1, 1] and are
//! stored as coefficients in powers of tau. The value trace q(tau) has
//! degree r and is fixed by Hermite data at the endpoints plus the value
//! points; the normal trace p(tau) has degree k-1 and interpolates d_n v at
//! the endpoints and the normal points. Both are linear in the DoF vector,
//! so each is kept as a (coefficients x DoFs) matrix.

use nalgebra::{DMatrix, DVector};

use super::layout::DofLayout;
use crate::basis::MonomialBasis;
use crate::curve::{rotate_cw, EdgeParam, Vec2};
use crate::error::{Result, VemError};
use crate::polygon::CurvedPolygon;
use crate::quadrature::{monomial_integrals, rules::gauss_for_degree};

/// Geometry at one quadrature point of an edge.
#[derive(Debug, Clone, Copy)]
pub struct EdgePoint {
    pub tau: f64,
    /// Reference weight; the arclength weight is `weight * speed`.
    pub weight: f64,
    pub x: Vec2,
    pub d1: Vec2,
    pub d2: Vec2,
    pub speed: f64,
    pub tangent: Vec2,
    pub normal: Vec2,
}

impl EdgePoint {
    fn new(edge: &EdgeParam, tau: f64, weight: f64) -> Result<Self> {
        let d1 = edge.d1(tau);
        let speed = d1.norm();
        if !(speed > 0.0) {
            return Err(VemError::DegenerateParametrization { t: tau });
        }
        let tangent = d1 / speed;
        Ok(EdgePoint {
            tau,
            weight,
            x: edge.point(tau),
            d1,
            d2: edge.d2(tau),
            speed,
            tangent,
            normal: rotate_cw(tangent),
        })
    }

    /// d t / ds, the curvature vector.
    pub fn dt_ds(&self) -> Vec2 {
        (self.d2 - self.tangent * self.d2.dot(&self.tangent)) / (self.speed * self.speed)
    }

    /// d speed / d tau.
    pub fn dspeed(&self) -> f64 {
        self.d1.dot(&self.d2) / self.speed
    }
}

#[derive(Debug, Clone)]
pub struct EdgeData {
    pub param: EdgeParam,
    /// Chord length h_e.
    pub h_e: f64,
    /// (r+1) x ndof map to value-trace coefficients.
    pub value_trace: DMatrix<f64>,
    /// k x ndof map to normal-trace coefficients.
    pub normal_trace: DMatrix<f64>,
    pub quad: Vec<EdgePoint>,
}

/// Coefficients of a trace in powers of tau.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeTrace {
    pub value: Vec<f64>,
    pub normal: Vec<f64>,
}

/// d^d/dtau^d of tau^j for j < n.
pub fn tau_powers(n: usize, tau: f64, d: usize) -> Vec<f64> {
    (0..n)
        .map(|j| {
            if j < d {
                0.0
            } else {
                let f: f64 = (0..d).map(|i| (j - i) as f64).product();
                f * tau.powi((j - d) as i32)
            }
        })
        .collect()
}

pub fn eval_tau_poly(c: &[f64], tau: f64, d: usize) -> f64 {
    tau_powers(c.len(), tau, d).iter().zip(c).map(|(a, b)| a * b).sum()
}

/// A polygon prepared for the order-k virtual element.
#[derive(Debug, Clone)]
pub struct VemElement {
    pub poly: CurvedPolygon,
    pub layout: DofLayout,
    /// h_v of each local vertex.
    pub vertex_h: Vec<f64>,
    /// Scaled monomials of degree k about x_E with h_E.
    pub basis: MonomialBasis,
    /// \int_E m_alpha for |alpha| <= 2k.
    pub integrals: Vec<f64>,
    pub edges: Vec<EdgeData>,
    /// Polynomial degree integrated exactly along edges.
    pub quad_order: usize,
}

impl VemElement {
    /// `vertex_h[i]` is h_v of vertex i (the start of local edge i).
    pub fn new(poly: CurvedPolygon, k: usize, vertex_h: Vec<f64>) -> Result<Self> {
        Self::with_order(poly, k, vertex_h, 2 * k + 6)
    }

    /// Single element: h_v = h_E at every vertex.
    pub fn standalone(poly: CurvedPolygon, k: usize) -> Result<Self> {
        let h = vec![poly.diameter; poly.n_edges()];
        Self::new(poly, k, h)
    }

    pub fn with_order(poly: CurvedPolygon, k: usize, vertex_h: Vec<f64>, quad_order: usize) -> Result<Self> {
        let n = poly.n_edges();
        let layout = DofLayout::new(k, n)?;
        if vertex_h.len() != n || vertex_h.iter().any(|&h| !(h > 0.0)) {
            return Err(VemError::Argument(format!("need {n} positive vertex scales, got {vertex_h:?}")));
        }
        let basis = MonomialBasis::new(k, poly.centroid, poly.diameter);
        let integrals = monomial_integrals(&poly, 2 * k);
        let rule = gauss_for_degree(quad_order);

        let value_inv = hermite_inverse(&layout);
        let normal_inv = lagrange_inverse(&layout);
        let ndof = layout.len();
        let mut edges = Vec::with_capacity(n);
        for (i, param) in poly.edges.iter().enumerate() {
            let (a, b) = (i, (i + 1) % n);
            let (ha, hb) = (vertex_h[a], vertex_h[b]);
            let h_e = param.chord_length();
            let (ga, gb) = (param.d1(-1.0), param.d1(1.0));
            let (na, nb) = (param.frame(-1.0)?.normal, param.frame(1.0)?.normal);

            let mut data = DMatrix::zeros(layout.r + 1, ndof);
            data[(0, layout.vertex(a, 0))] = 1.0;
            data[(1, layout.vertex(b, 0))] = 1.0;
            data[(2, layout.vertex(a, 1))] = ga.x / ha;
            data[(2, layout.vertex(a, 2))] = ga.y / ha;
            data[(3, layout.vertex(b, 1))] = gb.x / hb;
            data[(3, layout.vertex(b, 2))] = gb.y / hb;
            for j in 0..layout.k_e {
                data[(4 + j, layout.edge_value(i, j))] = 1.0;
            }
            let value_trace = &value_inv * data;

            let mut data = DMatrix::zeros(k, ndof);
            data[(0, layout.vertex(a, 1))] = na.x / ha;
            data[(0, layout.vertex(a, 2))] = na.y / ha;
            data[(1, layout.vertex(b, 1))] = nb.x / hb;
            data[(1, layout.vertex(b, 2))] = nb.y / hb;
            for j in 0..layout.k_n {
                data[(2 + j, layout.edge_normal(i, j))] = 1.0 / h_e;
            }
            let normal_trace = &normal_inv * data;

            let quad = rule
                .nodes
                .iter()
                .zip(&rule.weights)
                .map(|(&t, &w)| EdgePoint::new(param, t, w))
                .collect::<Result<Vec<_>>>()?;
            edges.push(EdgeData { param: param.clone(), h_e, value_trace, normal_trace, quad });
        }
        Ok(VemElement { poly, layout, vertex_h, basis, integrals, edges, quad_order })
    }

    pub fn k(&self) -> usize {
        self.layout.k
    }

    pub fn n_dofs(&self) -> usize {
        self.layout.len()
    }

    pub fn n_poly(&self) -> usize {
        self.basis.len()
    }

    pub fn h(&self) -> f64 {
        self.poly.diameter
    }

    pub fn vertex(&self, i: usize) -> Vec2 {
        self.poly.edges[i].start
    }

    /// \int_E m_i m_j for scaled monomials of degree <= k.
    pub fn product_integral(&self, i: usize, j: usize) -> f64 {
        self.integrals[self.basis.product_index(i, j)]
    }

    /// Row vector mapping DoFs to d^d/dtau^d of the value trace at tau.
    pub fn value_row(&self, edge: usize, tau: f64, d: usize) -> DVector<f64> {
        let t = &self.edges[edge].value_trace;
        t.tr_mul(&DVector::from_vec(tau_powers(t.nrows(), tau, d)))
    }

    /// Row vector mapping DoFs to d^d/dtau^d of the normal trace at tau.
    pub fn normal_row(&self, edge: usize, tau: f64, d: usize) -> DVector<f64> {
        let t = &self.edges[edge].normal_trace;
        t.tr_mul(&DVector::from_vec(tau_powers(t.nrows(), tau, d)))
    }

    /// Physical value and normal points of edge `e` in traversal order.
    pub fn value_points(&self, e: usize) -> Vec<Vec2> {
        self.layout.value_nodes().iter().map(|&t| self.edges[e].param.point(t)).collect()
    }

    pub fn normal_points(&self, e: usize) -> Vec<Vec2> {
        self.layout.normal_nodes().iter().map(|&t| self.edges[e].param.point(t)).collect()
    }
}

/// Reconstructs both traces of edge `edge` from a local DoF vector.
pub fn reconstruct_edge_traces(el: &VemElement, edge: usize, dofs: &DVector<f64>) -> EdgeTrace {
    let e = &el.edges[edge];
    EdgeTrace {
        value: (&e.value_trace * dofs).iter().copied().collect(),
        normal: (&e.normal_trace * dofs).iter().copied().collect(),
    }
}

fn invert(m: DMatrix<f64>, what: &str) -> DMatrix<f64> {
    m.try_inverse().unwrap_or_else(|| panic!("{what} interpolation matrix is singular"))
}

// rows: q(-1), q(1), q'(-1), q'(1), q(value nodes)
fn hermite_inverse(l: &DofLayout) -> DMatrix<f64> {
    let n = l.r + 1;
    let mut v = DMatrix::zeros(n, n);
    let rows = [tau_powers(n, -1.0, 0), tau_powers(n, 1.0, 0), tau_powers(n, -1.0, 1), tau_powers(n, 1.0, 1)];
    for (i, row) in rows.iter().enumerate() {
        v.row_mut(i).copy_from(&DVector::from_row_slice(row).transpose());
    }
    for (j, &t) in l.value_nodes().iter().enumerate() {
        v.row_mut(4 + j).copy_from(&DVector::from_vec(tau_powers(n, t, 0)).transpose());
    }
    invert(v, "value trace")
}

// rows: p(-1), p(1), p(normal nodes)
fn lagrange_inverse(l: &DofLayout) -> DMatrix<f64> {
    let n = l.k;
    let mut v = DMatrix::zeros(n, n);
    v.row_mut(0).copy_from(&DVector::from_vec(tau_powers(n, -1.0, 0)).transpose());
    v.row_mut(1).copy_from(&DVector::from_vec(tau_powers(n, 1.0, 0)).transpose());
    for (j, &t) in l.normal_nodes().iter().enumerate() {
        v.row_mut(2 + j).copy_from(&DVector::from_vec(tau_powers(n, t, 0)).transpose());
    }
    invert(v, "normal trace")
}
