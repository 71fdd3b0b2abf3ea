//! Ritz (energy) projector onto P_k.
//!
//! a_E(v, q) is evaluated from DoFs by integrating by parts twice:
//!   a_E(v, q) = \int_E v Lap^2 q + \oint [(D^2q n) . grad v - v d_n Lap q] ds,
//! where \int_E v m_j = h_E^2 D^o_j and, on an edge, grad v = p n + (q'/s) t
//! from the reconstructed traces. The rows for 1, x, y are replaced by the
//! boundary-average constraints on v and grad v.

use nalgebra::{DMatrix, DVector};

use super::element::VemElement;
use crate::basis::index;
use crate::error::{Result, VemError};

/// Relative pivot below which the constrained system counts as singular.
const SINGULAR_TOL: f64 = 1e-13;

#[derive(Debug, Clone)]
pub struct Projector {
    /// P: DoFs -> coefficients of Pi v in the element basis.
    pub matrix: DMatrix<f64>,
    /// G_ij = a_E(m_i, m_j).
    pub gram: DMatrix<f64>,
    /// B_ij = a_E(phi_j, m_i) for the DoF basis functions phi_j.
    pub rhs: DMatrix<f64>,
}

/// Second derivatives of a scaled monomial as (coefficient, exponent) terms
/// for d_xx, d_xy, d_yy; h^-2 included.
fn hessian_terms(a: usize, b: usize, h: f64) -> [Option<(f64, usize)>; 3] {
    let h2 = h * h;
    [
        (a >= 2).then(|| ((a * (a - 1)) as f64 / h2, index(a - 2, b))),
        (a >= 1 && b >= 1).then(|| ((a * b) as f64 / h2, index(a - 1, b - 1))),
        (b >= 2).then(|| ((b * (b - 1)) as f64 / h2, index(a, b - 2))),
    ]
}

/// G_ij = \int_E D^2 m_i : D^2 m_j, exact via monomial integrals.
pub fn gram_matrix(el: &VemElement) -> DMatrix<f64> {
    let exps = el.basis.exponents();
    let n = exps.len();
    let h = el.h();
    let hess: Vec<_> = exps.iter().map(|&(a, b)| hessian_terms(a, b, h)).collect();
    let all = crate::basis::exponents(2 * el.k());
    let mut g = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let mut s = 0.0;
            for (c, w) in [(0, 1.0), (1, 2.0), (2, 1.0)] {
                if let (Some((ci, ai)), Some((cj, aj))) = (hess[i][c], hess[j][c]) {
                    let (pi, pj) = (all[ai], all[aj]);
                    s += w * ci * cj * el.integrals[index(pi.0 + pj.0, pi.1 + pj.1)];
                }
            }
            g[(i, j)] = s;
            g[(j, i)] = s;
        }
    }
    g
}

/// B with B_ij = a_E(phi_j, m_i), so ritz_rhs(v, q) = q^T B v.
pub fn ritz_rhs_matrix(el: &VemElement) -> DMatrix<f64> {
    let nk = el.n_poly();
    let ndof = el.n_dofs();
    let b = &el.basis;
    let h2 = el.h() * el.h();
    let mut out = DMatrix::zeros(nk, ndof);

    for j in 0..nk {
        for (l, c) in b.bilaplacian(j) {
            out[(j, el.layout.moment(l))] += c * h2;
        }
    }

    let mut coef_p = DVector::zeros(nk);
    let mut coef_dq = DVector::zeros(nk);
    let mut coef_q = DVector::zeros(nk);
    for (e, edge) in el.edges.iter().enumerate() {
        for qp in &edge.quad {
            let (x, n, t) = (qp.x, qp.normal, qp.tangent);
            let (hxx, hxy, hyy) = (b.derivatives(x, 2, 0), b.derivatives(x, 1, 1), b.derivatives(x, 0, 2));
            let (d30, d21, d12, d03) =
                (b.derivatives(x, 3, 0), b.derivatives(x, 2, 1), b.derivatives(x, 1, 2), b.derivatives(x, 0, 3));
            let ds = qp.weight * qp.speed;
            for i in 0..nk {
                let dn = [hxx[i] * n.x + hxy[i] * n.y, hxy[i] * n.x + hyy[i] * n.y];
                let nn = dn[0] * n.x + dn[1] * n.y;
                let nt = dn[0] * t.x + dn[1] * t.y;
                let dn_lap = n.x * (d30[i] + d12[i]) + n.y * (d21[i] + d03[i]);
                coef_p[i] = ds * nn;
                coef_dq[i] = ds * nt / qp.speed;
                coef_q[i] = -ds * dn_lap;
            }
            out.ger(1.0, &coef_p, &el.normal_row(e, qp.tau, 0), 1.0);
            out.ger(1.0, &coef_dq, &el.value_row(e, qp.tau, 1), 1.0);
            out.ger(1.0, &coef_q, &el.value_row(e, qp.tau, 0), 1.0);
        }
    }
    out
}

/// a_E(v, q) for DoF vector `v` and polynomial coefficients `q`.
pub fn ritz_rhs(el: &VemElement, v: &DVector<f64>, q: &DVector<f64>) -> f64 {
    q.dot(&(ritz_rhs_matrix(el) * v))
}

/// Boundary averages of (m, h_E d_x m, h_E d_y m) per basis member (3 x nk)
/// and of (v, h_E d_x v, h_E d_y v) per DoF (3 x ndof).
pub fn boundary_constraints(el: &VemElement) -> (DMatrix<f64>, DMatrix<f64>) {
    let nk = el.n_poly();
    let ndof = el.n_dofs();
    let h = el.h();
    let b = &el.basis;
    let mut poly = DMatrix::zeros(3, nk);
    let mut virt = DMatrix::zeros(3, ndof);
    let mut perimeter = 0.0;
    for (e, edge) in el.edges.iter().enumerate() {
        for qp in &edge.quad {
            let ds = qp.weight * qp.speed;
            perimeter += ds;
            let (m, mx, my) = (b.values(qp.x), b.derivatives(qp.x, 1, 0), b.derivatives(qp.x, 0, 1));
            for i in 0..nk {
                poly[(0, i)] += ds * m[i];
                poly[(1, i)] += ds * h * mx[i];
                poly[(2, i)] += ds * h * my[i];
            }
            let q = el.value_row(e, qp.tau, 0);
            let dq = el.value_row(e, qp.tau, 1) / qp.speed;
            let p = el.normal_row(e, qp.tau, 0);
            virt.row_mut(0).zip_apply(&q.transpose(), |a, b| *a += ds * b);
            for (c, (nc, tc)) in [(qp.normal.x, qp.tangent.x), (qp.normal.y, qp.tangent.y)].into_iter().enumerate() {
                let grad = &p * nc + &dq * tc;
                virt.row_mut(1 + c).zip_apply(&grad.transpose(), |a, b| *a += ds * h * b);
            }
        }
    }
    (poly / perimeter, virt / perimeter)
}

pub fn ritz_projector(el: &VemElement) -> Result<Projector> {
    let gram = gram_matrix(el);
    let rhs = ritz_rhs_matrix(el);
    let (cp, cv) = boundary_constraints(el);
    let h2 = el.h() * el.h();
    // h_E^2 balances G (~h^-2) against the O(1) constraint rows
    let mut lhs = &gram * h2;
    let mut b = &rhs * h2;
    for r in 0..3 {
        lhs.row_mut(r).copy_from(&cp.row(r));
        b.row_mut(r).copy_from(&cv.row(r));
    }
    let lu = lhs.full_piv_lu();
    let piv: Vec<f64> = lu.u().diagonal().iter().map(|d| d.abs()).collect();
    let max = piv.iter().copied().fold(0.0, f64::max);
    let min = piv.iter().copied().fold(f64::INFINITY, f64::min);
    if !(min > SINGULAR_TOL * max) {
        return Err(VemError::ElementDegeneracy(format!(
            "Ritz system is singular (pivot ratio {:e})",
            min / max
        )));
    }
    let matrix = lu.solve(&b).ok_or_else(|| VemError::ElementDegeneracy("Ritz solve failed".into()))?;
    Ok(Projector { matrix, gram, rhs })
}

/// Maps DoFs to the moments \int_E v m_j, j < dim M_{k-4} (= h_E^2 D^o_j).
pub fn internal_moment_matrix(el: &VemElement) -> DMatrix<f64> {
    let l = &el.layout;
    let mut m = DMatrix::zeros(l.n_moments, l.len());
    let h2 = el.h() * el.h();
    for j in 0..l.n_moments {
        m[(j, l.moment(j))] = h2;
    }
    m
}
