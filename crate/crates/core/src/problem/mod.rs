//! Manufactured solutions.

mod sine_channel;

use crate::curve::Vec2;

/// u with its derivatives and load f = Lap^2 u.
pub trait ExactSolution: Send + Sync {
    fn value(&self, x: Vec2) -> f64;
    fn gradient(&self, x: Vec2) -> Vec2;
    /// (u_xx, u_xy, u_yy).
    fn hessian(&self, x: Vec2) -> [f64; 3];
    fn load(&self, x: Vec2) -> f64;
}

/// u = -(y - g_b)^2 (y - g_t)^2 x^2 (1 - x)^2 (3 + sin 5x sin 7y) with
/// g_b = sin(pi x)/20 and g_t = 1 + sin(3 pi x)/20; clamped on the channel
/// boundary.
#[derive(Debug, Clone, Copy, Default)]
pub struct SineChannel;

impl ExactSolution for SineChannel {
    fn value(&self, x: Vec2) -> f64 {
        sine_channel::eval(x.x, x.y)[0]
    }

    fn gradient(&self, x: Vec2) -> Vec2 {
        let v = sine_channel::eval(x.x, x.y);
        Vec2::new(v[1], v[2])
    }

    fn hessian(&self, x: Vec2) -> [f64; 3] {
        let v = sine_channel::eval(x.x, x.y);
        [v[3], v[4], v[5]]
    }

    fn load(&self, x: Vec2) -> f64 {
        sine_channel::eval(x.x, x.y)[6]
    }
}

/// Cubic sum_{a+b<=3} c_ab x^a y^b; biharmonic, so f = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicPatch {
    /// Coefficients in graded lexicographic order 1, x, y, x^2, xy, y^2, ...
    pub coeffs: [f64; 10],
}

impl Default for CubicPatch {
    fn default() -> Self {
        CubicPatch { coeffs: [0.5, 1.0, -2.0, 1.0, 0.5, -1.0, 1.0, -2.0, 0.3, 0.7] }
    }
}

impl CubicPatch {
    /// The default coefficients with all terms above `degree` dropped.
    pub fn truncated(degree: usize) -> Self {
        let mut p = Self::default();
        for (c, (a, b)) in p.coeffs.iter_mut().zip(Self::EXPS) {
            if (a + b) as usize > degree {
                *c = 0.0;
            }
        }
        p
    }

    const EXPS: [(i32, i32); 10] = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)];

    fn sum(&self, x: Vec2, dx: i32, dy: i32) -> f64 {
        let fall = |n: i32, k: i32| (0..k).map(|i| (n - i) as f64).product::<f64>();
        Self::EXPS
            .iter()
            .zip(&self.coeffs)
            .filter(|((a, b), _)| *a >= dx && *b >= dy)
            .map(|(&(a, b), c)| c * fall(a, dx) * fall(b, dy) * x.x.powi(a - dx) * x.y.powi(b - dy))
            .sum()
    }
}

impl ExactSolution for CubicPatch {
    fn value(&self, x: Vec2) -> f64 {
        self.sum(x, 0, 0)
    }

    fn gradient(&self, x: Vec2) -> Vec2 {
        Vec2::new(self.sum(x, 1, 0), self.sum(x, 0, 1))
    }

    fn hessian(&self, x: Vec2) -> [f64; 3] {
        [self.sum(x, 2, 0), self.sum(x, 1, 1), self.sum(x, 0, 2)]
    }

    fn load(&self, _: Vec2) -> f64 {
        0.0
    }
}
