//! Local load vector.
//!
//! k = 2, 3: (Pi^{k-2} f, w_hat + (k-2)(x - x_E) . g_hat), with w_hat and
//!           g_hat the vertex averages of values and (unscaled) gradients;
//! k = 4:    (Pi^1 f, Pi^0 v + (x - x_E) . g_hat), Pi^0 v from the moment;
//! k > 4:    (Pi^{k-4} f, v), paid entirely by the moments.

use nalgebra::DVector;

use super::element::VemElement;
use crate::basis::{self, MonomialBasis};
use crate::curve::Vec2;
use crate::error::{Result, VemError};
use crate::polygon::CurvedPolygon;
use crate::quadrature::{area_rule, monomial_integrals};

/// L2 projection of `f` onto P_m, as coefficients of the scaled monomials
/// about x_E with h_E.
pub fn project_function_l2(
    poly: &CurvedPolygon,
    f: impl Fn(Vec2) -> f64,
    m: usize,
    order: usize,
) -> Result<DVector<f64>> {
    let b = MonomialBasis::new(m, poly.centroid, poly.diameter);
    let n = b.len();
    let ints = monomial_integrals(poly, 2 * m);
    let mass = nalgebra::DMatrix::from_fn(n, n, |i, j| ints[b.product_index(i, j)]);
    let rule = area_rule(poly, order)?;
    let mut r = DVector::zeros(n);
    for (&x, &w) in rule.points.iter().zip(&rule.weights) {
        let fx = f(x) * w;
        for (ri, mi) in r.iter_mut().zip(b.values(x)) {
            *ri += fx * mi;
        }
    }
    mass.cholesky()
        .map(|c| c.solve(&r))
        .ok_or_else(|| VemError::Geometry("singular mass matrix".into()))
}

pub fn local_load(el: &VemElement, f: impl Fn(Vec2) -> f64) -> Result<DVector<f64>> {
    let k = el.k();
    let l = &el.layout;
    let m = if k <= 3 { k - 2 } else if k == 4 { 1 } else { k - 4 };
    let c = project_function_l2(&el.poly, f, m, el.quad_order)?;
    let mut out = DVector::zeros(l.len());
    if k > 4 {
        let h2 = el.h() * el.h();
        for j in 0..basis::dim(m) {
            out[l.moment(j)] = h2 * c[j];
        }
        return Ok(out);
    }
    // moments of f_h against 1, x, y (scaled)
    let mom = |j: usize| (0..c.len()).map(|i| c[i] * el.product_integral(i, j)).sum::<f64>();
    let n = l.n_edges as f64;
    let mean = mom(0);
    if k == 4 {
        out[l.moment(0)] = mean * el.h() * el.h() / el.poly.area;
    } else {
        for v in 0..l.n_edges {
            out[l.vertex(v, 0)] = mean / n;
        }
    }
    if k >= 3 {
        let (mx, my) = (mom(1) * el.h(), mom(2) * el.h());
        for v in 0..l.n_edges {
            let s = 1.0 / (n * el.vertex_h[v]);
            out[l.vertex(v, 1)] = mx * s;
            out[l.vertex(v, 2)] = my * s;
        }
    }
    Ok(out)
}

/// (f, Pi^{D,k} v): the Ritz projection stands in for v, which makes the
/// load error of order h^{k+1}.
pub fn ritz_load(el: &VemElement, projector: &nalgebra::DMatrix<f64>, f: impl Fn(Vec2) -> f64) -> Result<DVector<f64>> {
    let rule = area_rule(&el.poly, el.quad_order)?;
    let mut r = DVector::zeros(el.n_poly());
    for (&x, &w) in rule.points.iter().zip(&rule.weights) {
        let fx = f(x) * w;
        for (ri, mi) in r.iter_mut().zip(el.basis.values(x)) {
            *ri += fx * mi;
        }
    }
    Ok(projector.tr_mul(&r))
}
