//! Three-part stabilization S = S^o + S^{d,v} + S^{d,e}.
//!
//! Every part is a weighted sum of squared functionals, so S is stored as
//! functional rows: `virt` evaluates them on the DoF basis (through the
//! traces), `poly` on the scaled monomials (exact derivatives along the
//! edge), and `weights` holds the factors h_E^-2, h_v^-2 and h_E ds.

use nalgebra::{DMatrix, DVector};

use super::element::VemElement;
use crate::curve::rotate_cw;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabPart {
    Moments,
    Vertices,
    Edges,
}

#[derive(Debug, Clone)]
pub struct StabilizationRows {
    pub virt: DMatrix<f64>,
    pub poly: DMatrix<f64>,
    pub weights: DVector<f64>,
    pub parts: Vec<StabPart>,
}

pub fn stabilization_rows(el: &VemElement) -> StabilizationRows {
    let l = &el.layout;
    let b = &el.basis;
    let nk = el.n_poly();
    let h = el.h();
    let nq: usize = el.edges.iter().map(|e| e.quad.len()).sum();
    let nrows = l.n_moments + 3 * l.n_edges + 2 * nq;
    let mut virt = DMatrix::zeros(nrows, l.len());
    let mut poly = DMatrix::zeros(nrows, nk);
    let mut weights = DVector::zeros(nrows);
    let mut parts = Vec::with_capacity(nrows);
    let mut row = 0;

    for j in 0..l.n_moments {
        virt[(row, l.moment(j))] = 1.0;
        for i in 0..nk {
            poly[(row, i)] = el.product_integral(i, j) / (h * h);
        }
        weights[row] = 1.0 / (h * h);
        parts.push(StabPart::Moments);
        row += 1;
    }

    for v in 0..l.n_edges {
        let x = el.vertex(v);
        let hv = el.vertex_h[v];
        let evals = [b.values(x), b.derivatives(x, 1, 0), b.derivatives(x, 0, 1)];
        for (c, vals) in evals.iter().enumerate() {
            let scale = if c == 0 { 1.0 } else { hv };
            virt[(row, l.vertex(v, c))] = 1.0;
            for i in 0..nk {
                poly[(row, i)] = scale * vals[i];
            }
            weights[row] = 1.0 / (hv * hv);
            parts.push(StabPart::Vertices);
            row += 1;
        }
    }

    for (e, edge) in el.edges.iter().enumerate() {
        for qp in &edge.quad {
            let (x, t, n, s) = (qp.x, qp.tangent, qp.normal, qp.speed);
            let dt = qp.dt_ds();
            let dn = rotate_cw(dt);
            let (gx, gy) = (b.derivatives(x, 1, 0), b.derivatives(x, 0, 1));
            let (hxx, hxy, hyy) = (b.derivatives(x, 2, 0), b.derivatives(x, 1, 1), b.derivatives(x, 0, 2));
            let hess = |i: usize, u: crate::curve::Vec2, w: crate::curve::Vec2| {
                hxx[i] * u.x * w.x + hxy[i] * (u.x * w.y + u.y * w.x) + hyy[i] * u.y * w.y
            };
            let w = h * qp.weight * s;

            // d_t (d_n v)
            let r = el.normal_row(e, qp.tau, 1) / s;
            virt.row_mut(row).copy_from(&r.transpose());
            for i in 0..nk {
                poly[(row, i)] = hess(i, t, n) + gx[i] * dn.x + gy[i] * dn.y;
            }
            weights[row] = w;
            parts.push(StabPart::Edges);
            row += 1;

            // d_tt v
            let r = el.value_row(e, qp.tau, 2) / (s * s) - el.value_row(e, qp.tau, 1) * (qp.dspeed() / (s * s * s));
            virt.row_mut(row).copy_from(&r.transpose());
            for i in 0..nk {
                poly[(row, i)] = hess(i, t, t) + gx[i] * dt.x + gy[i] * dt.y;
            }
            weights[row] = w;
            parts.push(StabPart::Edges);
            row += 1;
        }
    }
    debug_assert_eq!(row, nrows);
    StabilizationRows { virt, poly, weights, parts }
}

impl StabilizationRows {
    fn weighted(&self, m: &DMatrix<f64>, keep: impl Fn(StabPart) -> bool) -> DMatrix<f64> {
        let mut wm = m.clone();
        for (r, &p) in self.parts.iter().enumerate() {
            let w = if keep(p) { self.weights[r] } else { 0.0 };
            wm.row_mut(r).scale_mut(w);
        }
        m.tr_mul(&wm)
    }

    /// S on the DoF space (virtual functions only).
    pub fn matrix(&self) -> DMatrix<f64> {
        self.weighted(&self.virt, |_| true)
    }

    /// One part of S on the DoF space.
    pub fn part(&self, part: StabPart) -> DMatrix<f64> {
        self.weighted(&self.virt, |p| p == part)
    }

    /// S((I - Pi) v, (I - Pi) w) for the projector matrix P.
    pub fn stabilized(&self, projector: &DMatrix<f64>) -> DMatrix<f64> {
        let resid = &self.virt - &self.poly * projector;
        let s = self.weighted(&resid, |_| true);
        (&s + s.transpose()) * 0.5
    }

    /// S(v, w) for DoF vectors.
    pub fn form(&self, v: &DVector<f64>, w: &DVector<f64>) -> f64 {
        let (a, b) = (&self.virt * v, &self.virt * w);
        a.iter().zip(b.iter()).zip(self.weights.iter()).map(|((x, y), c)| c * x * y).sum()
    }

    /// S(p, p') for polynomial coefficient vectors.
    pub fn form_poly(&self, p: &DVector<f64>, q: &DVector<f64>) -> f64 {
        let (a, b) = (&self.poly * p, &self.poly * q);
        a.iter().zip(b.iter()).zip(self.weights.iter()).map(|((x, y), c)| c * x * y).sum()
    }
}
