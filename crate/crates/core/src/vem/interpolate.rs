//! DoF interpolation of smooth functions and polynomials.

use nalgebra::DVector;

use super::element::VemElement;
use crate::curve::Vec2;
use crate::error::Result;
use crate::quadrature::area_rule;

/// Local DoFs of a function given with its gradient. Moments use the fan
/// rule of the element's quadrature order.
pub fn interpolate(
    el: &VemElement,
    u: impl Fn(Vec2) -> f64,
    grad: impl Fn(Vec2) -> Vec2,
) -> Result<DVector<f64>> {
    let mut dofs = boundary_dofs(el, &u, &grad);
    let l = &el.layout;
    if l.n_moments > 0 {
        let rule = area_rule(&el.poly, el.quad_order)?;
        let h2 = el.h() * el.h();
        let mut m = vec![0.0; l.n_moments];
        for (&x, &w) in rule.points.iter().zip(&rule.weights) {
            let ux = u(x) * w;
            for (j, mj) in el.basis.values(x).iter().take(l.n_moments).enumerate() {
                m[j] += ux * mj;
            }
        }
        for (j, mj) in m.into_iter().enumerate() {
            dofs[l.moment(j)] = mj / h2;
        }
    }
    Ok(dofs)
}

/// Local DoFs of the polynomial with coefficients `c` in the element basis;
/// moments are exact.
pub fn interpolate_polynomial(el: &VemElement, c: &DVector<f64>) -> DVector<f64> {
    let b = &el.basis;
    let mut dofs = boundary_dofs(el, &|x| b.eval(c, x), &|x| b.eval_gradient(c, x));
    let l = &el.layout;
    let h2 = el.h() * el.h();
    for j in 0..l.n_moments {
        dofs[l.moment(j)] = (0..el.n_poly()).map(|i| c[i] * el.product_integral(i, j)).sum::<f64>() / h2;
    }
    dofs
}

fn boundary_dofs(el: &VemElement, u: &dyn Fn(Vec2) -> f64, grad: &dyn Fn(Vec2) -> Vec2) -> DVector<f64> {
    let l = &el.layout;
    let mut dofs = DVector::zeros(l.len());
    for i in 0..l.n_edges {
        let x = el.vertex(i);
        let g = grad(x) * el.vertex_h[i];
        dofs[l.vertex(i, 0)] = u(x);
        dofs[l.vertex(i, 1)] = g.x;
        dofs[l.vertex(i, 2)] = g.y;
    }
    for (e, edge) in el.edges.iter().enumerate() {
        for (j, &t) in l.value_nodes().iter().enumerate() {
            dofs[l.edge_value(e, j)] = u(edge.param.point(t));
        }
        for (j, &t) in l.normal_nodes().iter().enumerate() {
            let n = edge.param.frame(t).map(|f| f.normal).unwrap_or_else(|_| Vec2::zeros());
            dofs[l.edge_normal(e, j)] = edge.h_e * grad(edge.param.point(t)).dot(&n);
        }
    }
    dofs
}
