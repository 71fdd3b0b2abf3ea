//! One-dimensional Gauss-Legendre and Gauss-Lobatto rules on [-1, 1].
//!
//! Nodes come from Newton iteration on Legendre polynomials with fixed
//! Chebyshev starting guesses, so every run produces the same bits. The
//! rules are symmetrized after convergence; shared edge DoFs are located
//! through these nodes and must coincide when an edge is traversed in
//! either direction.

use std::sync::OnceLock;

use crate::error::{Result, VemError};

const NEWTON_TOL: f64 = 1e-15;
const NEWTON_MAX_ITER: usize = 100;
const CACHED_POINTS: usize = 64;

/// A quadrature rule on the reference interval [-1, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct Rule1D {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Rule1D {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Interior nodes (endpoints dropped). Meaningful for Lobatto rules.
    pub fn interior_nodes(&self) -> &[f64] {
        let n = self.nodes.len();
        if n <= 2 {
            &[]
        } else {
            &self.nodes[1..n - 1]
        }
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    fn symmetrize(&mut self) {
        let n = self.nodes.len();
        for i in 0..n / 2 {
            let j = n - 1 - i;
            let x = 0.5 * (self.nodes[j] - self.nodes[i]);
            let w = 0.5 * (self.weights[i] + self.weights[j]);
            self.nodes[i] = -x;
            self.nodes[j] = x;
            self.weights[i] = w;
            self.weights[j] = w;
        }
        if n % 2 == 1 {
            self.nodes[n / 2] = 0.0;
        }
    }
}

/// Legendre polynomial P_n and its derivative at x.
pub fn legendre(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let (mut p0, mut p1) = (1.0, x);
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    // derivative from the standard three-term identity; guarded at the endpoints
    let nf = n as f64;
    let dp = if (1.0 - x * x).abs() < 1e-300 {
        0.5 * nf * (nf + 1.0) * x.powi(n as i32 + 1)
    } else {
        nf * (x * p1 - p0) / (x * x - 1.0)
    };
    (p1, dp)
}

fn compute_gauss_legendre(n: usize) -> Rule1D {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n {
        let mut x = -(std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        for _ in 0..NEWTON_MAX_ITER {
            let (p, dp) = legendre(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < NEWTON_TOL {
                break;
            }
        }
        let (_, dp) = legendre(n, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    let mut rule = Rule1D { nodes, weights };
    rule.symmetrize();
    rule
}

fn compute_gauss_lobatto(n: usize) -> Rule1D {
    let deg = n - 1;
    let df = deg as f64;
    let mut nodes = vec![0.0; n];
    nodes[0] = -1.0;
    nodes[deg] = 1.0;
    for (j, node) in nodes.iter_mut().enumerate().take(deg).skip(1) {
        // Chebyshev-Gauss-Lobatto estimate, then Newton on P'_deg
        let mut x = -(std::f64::consts::PI * j as f64 / df).cos();
        for _ in 0..NEWTON_MAX_ITER {
            let (p, dp) = legendre(deg, x);
            let d2p = (2.0 * x * dp - df * (df + 1.0) * p) / (1.0 - x * x);
            let dx = dp / d2p;
            x -= dx;
            if dx.abs() < NEWTON_TOL {
                break;
            }
        }
        *node = x;
    }
    let weights = nodes
        .iter()
        .map(|&x| {
            let (p, _) = legendre(deg, x);
            2.0 / (df * (df + 1.0) * p * p)
        })
        .collect();
    let mut rule = Rule1D { nodes, weights };
    rule.symmetrize();
    rule
}

fn legendre_table() -> &'static [Rule1D] {
    static TABLE: OnceLock<Vec<Rule1D>> = OnceLock::new();
    TABLE.get_or_init(|| (1..=CACHED_POINTS).map(compute_gauss_legendre).collect())
}

fn lobatto_table() -> &'static [Rule1D] {
    static TABLE: OnceLock<Vec<Rule1D>> = OnceLock::new();
    TABLE.get_or_init(|| (2..=CACHED_POINTS).map(compute_gauss_lobatto).collect())
}

/// n-point Gauss-Legendre rule, exact for degree 2n-1. Panics for n = 0.
pub fn gauss_legendre(n: usize) -> &'static Rule1D {
    assert!(
        (1..=CACHED_POINTS).contains(&n),
        "Gauss-Legendre rule with {n} points not available"
    );
    &legendre_table()[n - 1]
}

/// Gauss-Legendre rule exact for polynomials of degree `degree`.
pub fn gauss_for_degree(degree: usize) -> &'static Rule1D {
    gauss_legendre((degree / 2 + 1).min(CACHED_POINTS))
}

/// n-point Gauss-Lobatto rule (endpoints included), exact for degree 2n-3.
pub fn gauss_lobatto(n: usize) -> Result<&'static Rule1D> {
    if n < 2 {
        return Err(VemError::Argument(format!(
            "Gauss-Lobatto rule needs at least 2 points, got {n}"
        )));
    }
    if n > CACHED_POINTS {
        return Err(VemError::Argument(format!(
            "Gauss-Lobatto rule with {n} points not available"
        )));
    }
    Ok(&lobatto_table()[n - 2])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact_monomial(d: usize) -> f64 {
        if d % 2 == 1 {
            0.0
        } else {
            2.0 / (d as f64 + 1.0)
        }
    }

    #[test]
    fn lobatto_small_rules() {
        let r2 = gauss_lobatto(2).unwrap();
        assert_eq!(r2.nodes, vec![-1.0, 1.0]);
        assert!((r2.weights[0] - 1.0).abs() < 1e-15 && (r2.weights[1] - 1.0).abs() < 1e-15);

        let r3 = gauss_lobatto(3).unwrap();
        assert_eq!(r3.nodes, vec![-1.0, 0.0, 1.0]);
        let expected = [1.0 / 3.0, 4.0 / 3.0, 1.0 / 3.0];
        for (w, e) in r3.weights.iter().zip(expected) {
            assert!((w - e).abs() < 1e-15);
        }

        let r4 = gauss_lobatto(4).unwrap();
        let s = 1.0 / 5f64.sqrt();
        assert!((r4.nodes[1] + s).abs() < 1e-15);
        assert!((r4.nodes[2] - s).abs() < 1e-15);
    }

    #[test]
    fn lobatto_rejects_one_point() {
        assert!(matches!(gauss_lobatto(1), Err(VemError::Argument(_))));
        assert!(gauss_lobatto(0).is_err());
    }

    #[test]
    fn lobatto_exactness() {
        for n in 2..=12 {
            let rule = gauss_lobatto(n).unwrap();
            assert!((rule.weights.iter().sum::<f64>() - 2.0).abs() < 1e-13);
            for w in rule.nodes.windows(2) {
                assert!(w[0] < w[1]);
            }
            for d in 0..=(2 * n - 3) {
                let q = rule.integrate(|x| x.powi(d as i32));
                assert!((q - exact_monomial(d)).abs() < 1e-13, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn legendre_exactness() {
        for n in 1..=30 {
            let rule = gauss_legendre(n);
            assert!((rule.weights.iter().sum::<f64>() - 2.0).abs() < 1e-13);
            for d in 0..(2 * n).min(40) {
                let q = rule.integrate(|x| x.powi(d as i32));
                assert!((q - exact_monomial(d)).abs() < 1e-13, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn rules_are_bit_symmetric() {
        for n in 2..=20 {
            let rule = gauss_lobatto(n).unwrap();
            for i in 0..n {
                assert_eq!(rule.nodes[i], -rule.nodes[n - 1 - i]);
                assert_eq!(rule.weights[i], rule.weights[n - 1 - i]);
            }
        }
    }
}
