//! Shifted and scaled monomials ((x - x_E) / h_E)^alpha in graded
//! lexicographic order: 1, x, y, x^2, xy, y^2, ...

use nalgebra::DVector;

use crate::curve::Vec2;

/// Number of monomials of total degree at most `degree`.
pub const fn dim(degree: usize) -> usize {
    (degree + 1) * (degree + 2) / 2
}

/// Dimension of P_degree, with P_{-1} = {0}.
pub fn dim_signed(degree: i64) -> usize {
    if degree < 0 {
        0
    } else {
        dim(degree as usize)
    }
}

/// Position of x^a y^b in graded lexicographic order.
pub const fn index(a: usize, b: usize) -> usize {
    let d = a + b;
    d * (d + 1) / 2 + b
}

pub fn exponents(degree: usize) -> Vec<(usize, usize)> {
    (0..=degree).flat_map(|d| (0..=d).map(move |b| (d - b, b))).collect()
}

fn falling(n: usize, k: usize) -> f64 {
    (0..k).map(|i| (n - i) as f64).product()
}

#[derive(Debug, Clone)]
pub struct MonomialBasis {
    pub degree: usize,
    pub center: Vec2,
    pub h: f64,
    exps: Vec<(usize, usize)>,
}

impl MonomialBasis {
    pub fn new(degree: usize, center: Vec2, h: f64) -> Self {
        MonomialBasis { degree, center, h, exps: exponents(degree) }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[(usize, usize)] {
        &self.exps
    }

    pub fn scaled(&self, x: Vec2) -> Vec2 {
        (x - self.center) / self.h
    }

    fn powers(&self, x: Vec2) -> (Vec<f64>, Vec<f64>) {
        let s = self.scaled(x);
        let mut px = vec![1.0; self.degree + 1];
        let mut py = vec![1.0; self.degree + 1];
        for i in 1..=self.degree {
            px[i] = px[i - 1] * s.x;
            py[i] = py[i - 1] * s.y;
        }
        (px, py)
    }

    pub fn values(&self, x: Vec2) -> Vec<f64> {
        let (px, py) = self.powers(x);
        self.exps.iter().map(|&(a, b)| px[a] * py[b]).collect()
    }

    /// d^(i+j) / dx^i dy^j of every basis member at x.
    pub fn derivatives(&self, x: Vec2, i: usize, j: usize) -> Vec<f64> {
        let (px, py) = self.powers(x);
        let scale = self.h.powi(-((i + j) as i32));
        self.exps
            .iter()
            .map(|&(a, b)| {
                if a < i || b < j {
                    0.0
                } else {
                    falling(a, i) * falling(b, j) * scale * px[a - i] * py[b - j]
                }
            })
            .collect()
    }

    pub fn eval(&self, coeffs: &DVector<f64>, x: Vec2) -> f64 {
        self.values(x).iter().zip(coeffs.iter()).map(|(m, c)| m * c).sum()
    }

    pub fn eval_gradient(&self, coeffs: &DVector<f64>, x: Vec2) -> Vec2 {
        let dx = self.derivatives(x, 1, 0);
        let dy = self.derivatives(x, 0, 1);
        let gx = dx.iter().zip(coeffs.iter()).map(|(m, c)| m * c).sum();
        let gy = dy.iter().zip(coeffs.iter()).map(|(m, c)| m * c).sum();
        Vec2::new(gx, gy)
    }

    /// (d_xx, d_xy, d_yy) of the polynomial with these coefficients.
    pub fn eval_hessian(&self, coeffs: &DVector<f64>, x: Vec2) -> [f64; 3] {
        let dot = |v: Vec<f64>| -> f64 { v.iter().zip(coeffs.iter()).map(|(m, c)| m * c).sum() };
        [dot(self.derivatives(x, 2, 0)), dot(self.derivatives(x, 1, 1)), dot(self.derivatives(x, 0, 2))]
    }

    /// Product of two scaled monomials as a single exponent pair.
    pub fn product_index(&self, p: usize, q: usize) -> usize {
        let (a1, b1) = self.exps[p];
        let (a2, b2) = self.exps[q];
        index(a1 + a2, b1 + b2)
    }

    /// Bilaplacian of member `p` as (index, coefficient) pairs in the scaled
    /// basis of degree deg(p) - 4.
    pub fn bilaplacian(&self, p: usize) -> Vec<(usize, f64)> {
        let (a, b) = self.exps[p];
        let h4 = self.h.powi(4);
        let mut out = Vec::new();
        if a >= 4 {
            out.push((index(a - 4, b), falling(a, 4) / h4));
        }
        if a >= 2 && b >= 2 {
            out.push((index(a - 2, b - 2), 2.0 * falling(a, 2) * falling(b, 2) / h4));
        }
        if b >= 4 {
            out.push((index(a, b - 4), falling(b, 4) / h4));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_dimension() {
        let e = exponents(2);
        assert_eq!(e, vec![(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]);
        for d in 0..8 {
            let e = exponents(d);
            assert_eq!(e.len(), dim(d));
            for (i, &(a, b)) in e.iter().enumerate() {
                assert_eq!(index(a, b), i);
            }
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let b = MonomialBasis::new(5, Vec2::new(0.3, -0.2), 0.7);
        let x = Vec2::new(0.45, 0.1);
        let eps = 1e-5;
        let d = b.derivatives(x, 1, 1);
        let fd: Vec<f64> = {
            let pp = b.values(x + Vec2::new(eps, eps));
            let pm = b.values(x + Vec2::new(eps, -eps));
            let mp = b.values(x + Vec2::new(-eps, eps));
            let mm = b.values(x + Vec2::new(-eps, -eps));
            (0..b.len()).map(|i| (pp[i] - pm[i] - mp[i] + mm[i]) / (4.0 * eps * eps)).collect()
        };
        for i in 0..b.len() {
            assert!((d[i] - fd[i]).abs() < 1e-4 * (1.0 + d[i].abs()), "{i}");
        }
    }

    #[test]
    fn bilaplacian_of_quartics() {
        let b = MonomialBasis::new(4, Vec2::zeros(), 2.0);
        // x^2 y^2 -> 2 * 2 * 2 / h^4 = 8/16
        let p = index(2, 2);
        assert_eq!(b.bilaplacian(p), vec![(0, 0.5)]);
        // x^4 -> 24 / 16
        assert_eq!(b.bilaplacian(index(4, 0)), vec![(0, 1.5)]);
        assert!(b.bilaplacian(index(3, 0)).is_empty());
    }
}
